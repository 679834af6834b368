#include <gtest/gtest.h>

#include "hochschild/presentation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace hochschild {
  namespace {

    Quiver a3() {
      return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    }

    Quiver line4() {
      return Quiver({"1", "2", "3", "4"},
                    {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
    }

    Quiver couple() {
      return Quiver({"1", "2", "3"},
                    {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "3"}});
    }

    Quiver three_cycle() {
      return Quiver({"1", "2", "3"},
                    {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
    }

    Path path(Quiver const& q, std::vector<std::string> const& arrows) {
      return Path::from_names(q, arrows);
    }

    MonomialIdeal ideal(Quiver const& q,
                        std::vector<std::vector<std::string>> const& gens) {
      std::vector<Path> z;
      for (auto const& g : gens) {
        z.push_back(path(q, g));
      }
      return MonomialIdeal(q, z);
    }

    ErrorKind kind_of(auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      ADD_FAILURE() << "no error thrown";
      return ErrorKind::syntax;
    }

    struct Instance {
      Quiver            quiver;
      std::vector<Path> z;
    };

    Instance random_acyclic_instance(testing::Rng& rng) {
      auto q = testing::random_connected_acyclic(rng, 5, 7);
      auto z = testing::random_minimal_generators(rng, q, 4, 3);
      return {q, z};
    }

  }  // namespace

  TEST(CheckMinimal, Examples) {
    auto q = a3();
    EXPECT_NO_THROW(check_minimal(q, {path(q, {"a", "b"})}));
    EXPECT_NO_THROW(check_minimal(q, {}));
    auto l = line4();
    EXPECT_EQ(kind_of([&] {
                check_minimal(l, {path(l, {"a", "b"}), path(l, {"a", "b", "c"})});
              }),
              ErrorKind::non_minimal);
    EXPECT_EQ(kind_of([&] { check_minimal(q, {path(q, {"a"})}); }),
              ErrorKind::short_generator);
  }

  TEST(ContainsGenerator, Examples) {
    auto q = couple();
    auto z = ideal(q, {{"a", "b"}});
    EXPECT_TRUE(contains_generator(path(q, {"a", "b"}), z));
    EXPECT_FALSE(contains_generator(path(q, {"a"}), z));
    EXPECT_FALSE(contains_generator(path(q, {"a", "c"}), z));
  }

  TEST(BasisB, A3) {
    auto q = a3();
    EXPECT_EQ(basis_B(q, ideal(q, {{"a", "b"}})).size(), 5u);
  }

  TEST(BasisB, Couple) {
    auto q = couple();
    auto b = basis_B(q, ideal(q, {{"a", "b"}}));
    std::vector<std::string> got;
    for (auto const& p : b) {
      got.push_back(to_string(q, p));
    }
    EXPECT_EQ(got, (std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "c",
                                             "[a,c]"}));
  }

  TEST(BasisB, InfiniteOnFreeCycle) {
    EXPECT_EQ(kind_of([] { basis_B(three_cycle(), {}); }), ErrorKind::infinite_basis);
  }

  TEST(Admissible, Examples) {
    auto q = three_cycle();
    EXPECT_TRUE(is_admissible_monomial(q, MonomialIdeal(q, paths_of_length(q, 2))));
    EXPECT_FALSE(is_admissible_monomial(q, {}));
    testing::Rng rng(21);
    for (int i = 0; i < 20; ++i) {
      auto [g, z] = random_acyclic_instance(rng);
      EXPECT_TRUE(is_admissible_monomial(g, MonomialIdeal(g, z)));
    }
  }

  TEST(Admissible, OneGeneratorOnCycle) {
    auto q = three_cycle();
    auto z = ideal(q, {{"a", "b"}});
    auto r = analyze_avoidance(q, z);
    EXPECT_TRUE(r.finite);
    // longest avoiding path is b c a
    EXPECT_EQ(r.longest_avoiding, 3u);
    EXPECT_EQ(basis_B(q, z).size(), 3u + 3u + 2u + 1u);
  }

  TEST(SliceIdealDims, Examples) {
    auto q = a3();
    auto s = slice_ideal_dims(q, ideal(q, {{"a", "b"}}), q.vertex("1"), q.vertex("3"));
    EXPECT_EQ(s.ideal, 1u);
    EXPECT_EQ(s.decomposable, 0u);
    EXPECT_EQ(s.total, 1u);

    auto l  = line4();
    auto s2 = slice_ideal_dims(l, ideal(l, {{"a", "b"}}), l.vertex("1"), l.vertex("4"));
    EXPECT_EQ(s2.ideal, 1u);
    EXPECT_EQ(s2.decomposable, 1u);
    EXPECT_EQ(s2.total, 1u);

    auto s3 = slice_ideal_dims(q, ideal(q, {{"a", "b"}}), q.vertex("3"), q.vertex("1"));
    EXPECT_EQ(s3.ideal + s3.decomposable + s3.total, 0u);
  }

  TEST(Pregenerated, Examples) {
    auto q = a3();
    EXPECT_TRUE(is_pregenerated_monomial(q, ideal(q, {{"a", "b"}})));
    Quiver t({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
    EXPECT_FALSE(is_pregenerated_monomial(t, ideal(t, {{"a", "b"}})));
    auto c = three_cycle();
    EXPECT_TRUE(is_pregenerated_monomial(c, MonomialIdeal(c, paths_of_length(c, 2))));
  }

  TEST(Pregenerated, RejectsNonAdmissible) {
    auto c = three_cycle();
    EXPECT_EQ(kind_of([&] { is_pregenerated_monomial(c, {}); }), ErrorKind::infinite_slice);
  }

  TEST(TruncatedPregenerated, Examples) {
    EXPECT_TRUE(truncated_is_pregenerated(three_cycle(), 2));
    EXPECT_FALSE(truncated_is_pregenerated(three_cycle(), 3));
    EXPECT_TRUE(truncated_is_pregenerated(a3(), 2));
  }

  TEST(TruncatedPregenerated, CyclesPregeneratedIffMBelowN) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t m = 2; m <= 6; ++m) {
        auto q = testing::cycle(n);
        EXPECT_EQ(truncated_is_pregenerated(q, m), m < n) << n << " " << m;
        EXPECT_EQ(is_pregenerated_monomial(q, MonomialIdeal(q, paths_of_length(q, m))),
                  m < n)
            << n << " " << m;
      }
    }
  }

  TEST(BuildAlgebra, Examples) {
    Quiver a2({"x", "y"}, {{"a", "x", "y"}});
    EXPECT_EQ(build_algebra(AlgebraPresentation::path_algebra(a2)).dim(), 3u);

    auto c = build_algebra(AlgebraPresentation::truncated(three_cycle(), 2));
    EXPECT_EQ(c.dim(), 6u);
    for (auto x : {"a", "b", "c"}) {
      for (auto y : {"a", "b", "c"}) {
        EXPECT_TRUE(c.product(*c.find(x), *c.find(y)).empty());
      }
    }

    Poset crown({"a", "b", "c", "d"}, {{"c", "a"}, {"d", "a"}, {"c", "b"}, {"d", "b"}});
    EXPECT_EQ(build_algebra(AlgebraPresentation::incidence(crown)).dim(), 8u);
  }

  TEST(BuildAlgebra, InfiniteDimensional) {
    EXPECT_EQ(kind_of([] {
                build_algebra(AlgebraPresentation::path_algebra(three_cycle()));
              }),
              ErrorKind::infinite_dimensional);
  }

  TEST(BuildAlgebra, PathProductIsConcatenation) {
    auto q = a3();
    auto a = build_algebra(AlgebraPresentation::path_algebra(q));
    auto i = *a.find("a");
    auto j = *a.find("b");
    ASSERT_EQ(a.product(i, j).size(), 1u);
    EXPECT_EQ(a.label(a.product(i, j)[0].index), "[a,b]");
    EXPECT_TRUE(a.product(j, i).empty());
  }

  TEST(PresentationProperty, EmptyIdealBasisIsAllPaths) {
    testing::Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
      auto q = testing::random_connected_acyclic(rng, 5, 8);
      EXPECT_EQ(basis_B(q, {}), enumerate_paths(q));
    }
  }

  TEST(PresentationProperty, BasisAvoidsGenerators) {
    testing::Rng rng(23);
    for (int trial = 0; trial < 80; ++trial) {
      auto [q, z] = random_acyclic_instance(rng);
      auto b      = basis_B(q, MonomialIdeal(q, z));
      std::size_t expected = 0;
      for (auto const& p : enumerate_paths(q)) {
        expected += testing::naive_in_ideal(p, z) ? 0 : 1;
      }
      EXPECT_EQ(b.size(), expected);
      for (auto const& p : b) {
        for (auto const& g : z) {
          EXPECT_FALSE(contains_generator(p, MonomialIdeal(q, {g})));
        }
      }
    }
  }

  TEST(PresentationProperty, SliceDimsOrdered) {
    testing::Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
      auto [q, z] = random_acyclic_instance(rng);
      MonomialIdeal ideal(q, z);
      for (auto x : q.vertex_ids()) {
        for (auto y : q.vertex_ids()) {
          auto s = slice_ideal_dims(q, ideal, x, y);
          EXPECT_LE(s.decomposable, s.ideal);
          EXPECT_LE(s.ideal, s.total);
        }
      }
    }
  }

  TEST(PresentationProperty, DecomposablePartMatchesBruteProducts) {
    testing::Rng rng(25);
    for (int trial = 0; trial < 60; ++trial) {
      auto [q, z] = random_acyclic_instance(rng);
      MonomialIdeal ideal(q, z);
      auto          all = enumerate_paths(q);
      std::size_t   longest = 0;
      for (auto const& p : all) {
        longest = std::max(longest, p.length());
      }
      auto brute = testing::brute_fi_if(q, z, longest);
      for (auto const& p : all) {
        EXPECT_EQ(in_decomposable_part(p, ideal),
                  brute.contains({index(p.source()), p.arrows()}))
            << to_string(q, p);
      }
    }
  }

  TEST(PresentationProperty, DecomposablePartOnCycles) {
    testing::Rng rng(26);
    for (int trial = 0; trial < 40; ++trial) {
      auto q = testing::random_quiver(rng, 3, 4);
      auto z = testing::random_minimal_generators(rng, q, 3, 3);
      MonomialIdeal ideal(q, z);
      auto brute = testing::brute_fi_if(q, z, 5);
      for (auto const& p : enumerate_paths(q, 4)) {
        EXPECT_EQ(in_decomposable_part(p, ideal),
                  brute.contains({index(p.source()), p.arrows()}))
            << to_string(q, p);
      }
    }
  }

  // Every quiver with at most 3 vertices and 3 arrows (up to the order of
  // the arrow list), with every minimal set of length-2 generators.
  TEST(PresentationProperty, PregeneratedShortcutExhaustive) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          slots.emplace_back(s, t);
        }
      }
      std::function<void(std::size_t, std::vector<std::size_t>&)> rec =
          [&](std::size_t from, std::vector<std::size_t>& chosen) {
            QuiverDescription d;
            for (std::size_t i = 0; i < n; ++i) {
              d.vertices.push_back(testing::vname(i));
            }
            for (std::size_t k = 0; k < chosen.size(); ++k) {
              auto [s, t] = slots[chosen[k]];
              d.arrows.push_back(
                  {testing::aname(k), testing::vname(s), testing::vname(t)});
            }
            Quiver q(d);
            auto   len2 = paths_of_length(q, 2);
            for (std::size_t mask = 0; mask < (std::size_t{1} << len2.size()); ++mask) {
              std::vector<Path> z;
              for (std::size_t i = 0; i < len2.size(); ++i) {
                if (mask >> i & 1) {
                  z.push_back(len2[i]);
                }
              }
              MonomialIdeal ideal(q, z);
              if (!is_admissible_monomial(q, ideal)) {
                continue;
              }
              bool direct = is_pregenerated_monomial(q, ideal);
              EXPECT_EQ(direct, is_pregenerated_monomial_shortcut(q, ideal));
              if (is_acyclic(q)) {
                EXPECT_EQ(direct, testing::brute_is_pregenerated(q, z));
              }
              ++checked;
            }
            if (chosen.size() == 3) {
              return;
            }
            for (std::size_t k = from; k < slots.size(); ++k) {
              chosen.push_back(k);
              rec(k, chosen);
              chosen.pop_back();
            }
          };
      std::vector<std::size_t> chosen;
      rec(0, chosen);
    }
    EXPECT_GT(checked, 100u);
  }

  TEST(PresentationProperty, BuiltAlgebrasAreValid) {
    testing::Rng rng(27);
    for (int trial = 0; trial < 40; ++trial) {
      auto [q, z] = random_acyclic_instance(rng);
      auto p      = AlgebraPresentation::monomial(q, z);
      auto a      = build_algebra(p);
      EXPECT_NO_THROW(check_structure(a));
      EXPECT_EQ(a.dim(), basis_B(q, MonomialIdeal(q, z)).size());
      EXPECT_EQ(a.idempotents().size(), q.vertex_count());
    }
  }

  TEST(PresentationProperty, CyclicAdmissibleAlgebrasAreValid) {
    testing::Rng rng(28);
    int          built = 0;
    for (int trial = 0; trial < 80 && built < 25; ++trial) {
      auto          q = testing::random_quiver(rng, 3, 4);
      auto          z = testing::random_minimal_generators(rng, q, 3, 4);
      MonomialIdeal ideal(q, z);
      if (!is_admissible_monomial(q, ideal)) {
        continue;
      }
      auto b = basis_B(q, ideal);
      if (b.size() > 25) {
        continue;
      }
      for (auto const& p : b) {
        EXPECT_FALSE(testing::naive_in_ideal(p, z));
      }
      auto a = build_algebra(AlgebraPresentation::monomial(q, ideal));
      EXPECT_NO_THROW(check_structure(a));
      EXPECT_EQ(a.dim(), b.size());
      ++built;
    }
    EXPECT_GT(built, 5);
  }

  TEST(PresentationProperty, TruncationIsMonomialOnAllLengthMPaths) {
    testing::Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      auto        q = testing::random_quiver(rng, 3, 4);
      std::size_t m = testing::uniform(rng, 2, 3);
      auto        t = AlgebraPresentation::truncated(q, m);
      auto        z = MonomialIdeal(q, paths_of_length(q, m));
      EXPECT_EQ(t.as_monomial(), z);
      EXPECT_EQ(truncated_is_pregenerated(q, m), is_pregenerated_monomial(q, z));
    }
  }

}  // namespace hochschild
