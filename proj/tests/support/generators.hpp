#ifndef HOCHSCHILD_TESTS_GENERATORS_HPP_
#define HOCHSCHILD_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hochschild/hochschild.hpp"

namespace hochschild::testing {

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline bool coin(Rng& rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
  }

  inline std::string vname(std::size_t i) {
    return "v" + std::to_string(i);
  }

  inline std::string aname(std::size_t i) {
    return "a" + std::to_string(i);
  }

  inline Quiver line_quiver(std::size_t n) {
    QuiverDescription d;
    for (std::size_t i = 0; i < n; ++i) {
      d.vertices.push_back(vname(i));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      d.arrows.push_back({aname(i), vname(i), vname(i + 1)});
    }
    return Quiver(d);
  }

  inline Quiver kronecker(std::size_t n) {
    QuiverDescription d{{"1", "2"}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      d.arrows.push_back({aname(i), "1", "2"});
    }
    return Quiver(d);
  }

  inline Quiver cycle(std::size_t n) {
    QuiverDescription d;
    for (std::size_t i = 0; i < n; ++i) {
      d.vertices.push_back(vname(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      d.arrows.push_back({aname(i), vname(i), vname((i + 1) % n)});
    }
    return Quiver(d);
  }

  inline Quiver crown_quiver() {
    return Quiver({"a", "b", "c", "d"}, {{"ac", "a", "c"},
                                         {"ad", "a", "d"},
                                         {"bc", "b", "c"},
                                         {"bd", "b", "d"}});
  }

  //! Connected quiver without oriented cycles: a random spanning tree plus
  //! extra arrows, all oriented along a hidden random order of the vertices.
  inline Quiver random_connected_acyclic(Rng& rng, std::size_t max_vertices,
                                         std::size_t max_arrows) {
    std::size_t n = uniform(rng, 1, max_vertices);
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    QuiverDescription d;
    for (std::size_t i = 0; i < n; ++i) {
      d.vertices.push_back(vname(i));
    }
    auto add = [&](std::size_t u, std::size_t v) {
      if (rank[u] > rank[v]) {
        std::swap(u, v);
      }
      d.arrows.push_back({aname(d.arrows.size()), vname(u), vname(v)});
    };
    for (std::size_t i = 1; i < n; ++i) {
      add(i, uniform(rng, 0, i - 1));
    }
    if (n >= 2) {
      std::size_t extra = uniform(rng, 0, max_arrows - (n - 1));
      for (std::size_t k = 0; k < extra; ++k) {
        std::size_t u = uniform(rng, 0, n - 1);
        std::size_t v = uniform(rng, 0, n - 2);
        add(u, v >= u ? v + 1 : v);
      }
    }
    return Quiver(d);
  }

  //! Random oriented tree: connected, acyclic and narrow.
  inline Quiver random_tree(Rng& rng, std::size_t max_vertices) {
    std::size_t       n = uniform(rng, 2, max_vertices);
    QuiverDescription d;
    for (std::size_t i = 0; i < n; ++i) {
      d.vertices.push_back(vname(i));
    }
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = uniform(rng, 0, i - 1);
      if (coin(rng)) {
        d.arrows.push_back({aname(i - 1), vname(i), vname(j)});
      } else {
        d.arrows.push_back({aname(i - 1), vname(j), vname(i)});
      }
    }
    return Quiver(d);
  }

  //! Any quiver, cycles and loops allowed.
  inline Quiver random_quiver(Rng& rng, std::size_t max_vertices,
                              std::size_t max_arrows) {
    std::size_t       n = uniform(rng, 1, max_vertices);
    std::size_t       m = uniform(rng, 0, max_arrows);
    QuiverDescription d;
    for (std::size_t i = 0; i < n; ++i) {
      d.vertices.push_back(vname(i));
    }
    for (std::size_t k = 0; k < m; ++k) {
      d.arrows.push_back(
          {aname(k), vname(uniform(rng, 0, n - 1)), vname(uniform(rng, 0, n - 1))});
    }
    return Quiver(d);
  }

  //! Paths of length 1..max_length, with trivial paths excluded.
  inline std::vector<Path> nontrivial_paths(Quiver const& q, std::size_t max_length) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q, max_length)) {
      if (!p.is_trivial()) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  //! Random minimal set of generators drawn from the paths of length
  //! 2..max_length; candidates comparable with a chosen one are skipped.
  inline std::vector<Path> random_minimal_generators(Rng& rng, Quiver const& q,
                                                     std::size_t max_length,
                                                     std::size_t max_count) {
    std::vector<Path> candidates;
    for (auto& p : nontrivial_paths(q, max_length)) {
      if (p.length() >= 2) {
        candidates.push_back(std::move(p));
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::size_t       want = uniform(rng, 0, max_count);
    std::vector<Path> z;
    for (auto const& c : candidates) {
      if (z.size() >= want) {
        break;
      }
      bool comparable = std::any_of(z.begin(), z.end(), [&](Path const& g) {
        return c.contains(g) || g.contains(c);
      });
      if (!comparable) {
        z.push_back(c);
      }
    }
    return z;
  }

  //! Quiver with vertices and arrows of both inputs, names prefixed "l." and
  //! "r.".
  inline Quiver disjoint_union(Quiver const& l, Quiver const& r) {
    QuiverDescription d;
    for (auto [q, tag] : {std::pair{&l, "l."}, std::pair{&r, "r."}}) {
      for (auto const& v : q->vertex_names()) {
        d.vertices.push_back(tag + v);
      }
      for (auto const& a : q->arrows()) {
        d.arrows.push_back(
            {tag + a.name, tag + q->name(a.source), tag + q->name(a.target)});
      }
    }
    return Quiver(d);
  }

  //! Image of a path of l (left) or r (right) inside disjoint_union(l, r).
  inline Path embed(Quiver const& u, Quiver const& part, Path const& p, bool left) {
    std::string tag = left ? "l." : "r.";
    if (p.is_trivial()) {
      return Path::trivial(u.vertex(tag + part.name(p.source())));
    }
    std::vector<std::string> names;
    for (auto a : p.arrows()) {
      names.push_back(tag + part.arrow(a).name);
    }
    return Path::from_names(u, names);
  }

  //! Poset on n elements from random pairs i < j (so antisymmetry holds).
  inline Poset random_poset(Rng& rng, std::size_t n, double density) {
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < n; ++i) {
      elements.push_back("p" + std::to_string(i));
    }
    std::vector<OrderPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng, density)) {
          pairs.push_back({elements[i], elements[j]});
        }
      }
    }
    return Poset(elements, pairs);
  }

}  // namespace hochschild::testing

#endif  // HOCHSCHILD_TESTS_GENERATORS_HPP_
