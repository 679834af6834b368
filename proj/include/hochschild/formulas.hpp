#ifndef HOCHSCHILD_FORMULAS_HPP_
#define HOCHSCHILD_FORMULAS_HPP_

// Closed-form dimensions of H^1(Lambda, Lambda) for path, monomial,
// truncated, narrow and pre-generated presentations, and of H^1(kQ, X) for
// finite-dimensional kQ-bimodules X.
//
// Formulas of the form 1 - |Q0| + ... hold for connected quivers; every one
// of them is evaluated per connected component and summed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "quiver.hpp"

namespace hochschild {

  struct ComponentDim {
    std::vector<std::string> vertices;
    std::int64_t             dim;

    bool operator==(ComponentDim const&) const = default;
  };

  //! Outcome of a formula: the total, the method that produced it, one entry
  //! per connected component, and the named counts it used (summed over the
  //! components).
  struct H1Report {
    std::int64_t                                      dim_h1 = 0;
    std::string                                       method;
    std::vector<ComponentDim>                         per_component;
    std::vector<std::pair<std::string, std::int64_t>> intermediates;

    [[nodiscard]] std::int64_t intermediate(std::string const& name) const {
      for (auto const& [n, v] : intermediates) {
        if (n == name) {
          return v;
        }
      }
      throw Error(ErrorKind::invalid_argument, "no intermediate " + name);
    }
  };

  //! Q1//B split by the glued and effective conditions. Pairs are
  //! (arrow, parallel basis path).
  struct CoupleClassification {
    std::vector<ParallelPair> all;
    std::vector<ParallelPair> glued;
    std::vector<ParallelPair> effective;
    std::vector<ParallelPair> non_effective;
  };

  namespace detail {
    using Counts = std::vector<std::pair<std::string, std::int64_t>>;

    inline void accumulate(Counts& into, Counts const& more) {
      for (auto const& [name, v] : more) {
        auto it = std::find_if(into.begin(), into.end(),
                               [&](auto const& e) { return e.first == name; });
        if (it == into.end()) {
          into.emplace_back(name, v);
        } else {
          it->second += v;
        }
      }
    }

    // Evaluates f on every connected component and sums.
    inline H1Report per_component(
        Quiver const& q, std::string method,
        std::function<std::pair<std::int64_t, Counts>(Component const&)> const& f) {
      H1Report r;
      r.method = std::move(method);
      for (auto const& c : connected_components(q)) {
        auto [dim, counts] = f(c);
        r.dim_h1 += dim;
        r.per_component.push_back({c.quiver.vertex_names(), dim});
        accumulate(r.intermediates, counts);
      }
      return r;
    }

    inline void require_acyclic(Quiver const& q, char const* what) {
      if (!is_acyclic(q)) {
        throw Error(ErrorKind::cyclic_unsupported, what);
      }
    }

    inline std::int64_t signed_size(std::size_t n) {
      return static_cast<std::int64_t>(n);
    }

    inline MonomialIdeal localize(Component const& c, MonomialIdeal const& z) {
      std::vector<Path> local;
      for (auto const& g : z.generators()) {
        if (std::find(c.vertices.begin(), c.vertices.end(), g.source())
            != c.vertices.end()) {
          local.push_back(c.localize(g));
        }
      }
      return MonomialIdeal(c.quiver, std::move(local));
    }
  }  // namespace detail

  //! Q1//B: every (a, eps) with a an arrow and eps in B parallel to a.
  inline std::vector<ParallelPair> arrow_basis_pairs(Quiver const&            q,
                                                     std::vector<Path> const& b) {
    return parallel_pairs(arrow_paths(q), b);
  }

  //! Couples (a, eps) of Q1//B where a is the first or the last arrow of
  //! eps, or a is a loop and eps the trivial path at its vertex.
  inline std::vector<ParallelPair> glued_pairs(Quiver const&            q,
                                               std::vector<Path> const& b) {
    std::vector<ParallelPair> out;
    for (auto& pair : arrow_basis_pairs(q, b)) {
      ArrowId const a   = pair.left.arrows().front();
      Path const&   eps = pair.right;
      bool glued = eps.is_trivial()
                       ? q.arrow(a).source == q.arrow(a).target
                       : (eps.arrows().front() == a || eps.arrows().back() == a);
      if (glued) {
        out.push_back(std::move(pair));
      }
    }
    return out;
  }

  //! (a, eps) is effective when it is not glued and replacing a by eps in
  //! some generator containing a yields a path of B. Acyclic quivers only,
  //! where an arrow occurs at most once in a path.
  inline CoupleClassification effective_pairs(Quiver const&            q,
                                              MonomialIdeal const&     z,
                                              std::vector<Path> const& b) {
    detail::require_acyclic(q, "effective couples need an acyclic quiver");
    CoupleClassification c;
    c.all   = arrow_basis_pairs(q, b);
    c.glued = glued_pairs(q, b);
    for (auto const& pair : c.all) {
      bool glued = std::find(c.glued.begin(), c.glued.end(), pair) != c.glued.end();
      bool effective = false;
      if (!glued) {
        ArrowId const a = pair.left.arrows().front();
        for (auto const& g : z.generators()) {
          auto const& ga = g.arrows();
          auto it = std::find(ga.begin(), ga.end(), a);
          if (it == ga.end()) {
            continue;
          }
          std::vector<ArrowId> replaced(ga.begin(), it);
          replaced.insert(replaced.end(), pair.right.arrows().begin(),
                          pair.right.arrows().end());
          replaced.insert(replaced.end(), it + 1, ga.end());
          if (replaced.empty()) {
            continue;  // eps trivial: only possible for loops, excluded here
          }
          if (!contains_generator(Path::from_arrows(q, std::move(replaced)), z)) {
            effective = true;
            break;
          }
        }
      }
      (effective ? c.effective : c.non_effective).push_back(pair);
    }
    return c;
  }

  //! dim H^1 = 1 - |Q0| + |(Q1//B)_ne| per component, for a minimal
  //! monomial ideal on an acyclic quiver.
  inline H1Report h1_monomial_acyclic(Quiver const& q, MonomialIdeal const& z) {
    detail::require_acyclic(q, "monomial formula needs an acyclic quiver");
    return detail::per_component(q, "monomial_acyclic", [&](Component const& c) {
      auto local = detail::localize(c, z);
      auto b     = basis_B(c.quiver, local);
      auto cls   = effective_pairs(c.quiver, local, b);
      using detail::signed_size;
      std::int64_t dim = 1 - signed_size(c.quiver.vertex_count())
                         + signed_size(cls.non_effective.size());
      return std::pair{dim, detail::Counts{
                                {"|Q0|", signed_size(c.quiver.vertex_count())},
                                {"|Q1|", signed_size(c.quiver.arrow_count())},
                                {"|B|", signed_size(b.size())},
                                {"|Q1//B|", signed_size(cls.all.size())},
                                {"|(Q1//B)_e|", signed_size(cls.effective.size())},
                                {"|(Q1//B)_ne|", signed_size(cls.non_effective.size())},
                            }};
    });
  }

  //! dim H^1(kQ/F^m) = 1 - |Q0| + |Q1//B| per component, B the paths of
  //! length < m.
  inline H1Report h1_truncated_acyclic(Quiver const& q, std::size_t m) {
    if (m < 2) {
      throw Error(ErrorKind::invalid_argument, "truncation level must be >= 2");
    }
    detail::require_acyclic(q, "truncated formula needs an acyclic quiver");
    return detail::per_component(q, "truncated_acyclic", [&](Component const& c) {
      auto b     = enumerate_paths(c.quiver, m - 1);
      auto pairs = arrow_basis_pairs(c.quiver, b);
      using detail::signed_size;
      std::int64_t dim = 1 - signed_size(c.quiver.vertex_count())
                         + signed_size(pairs.size());
      return std::pair{dim, detail::Counts{
                                {"|Q0|", signed_size(c.quiver.vertex_count())},
                                {"|Q1|", signed_size(c.quiver.arrow_count())},
                                {"|B|", signed_size(b.size())},
                                {"|Q1//B|", signed_size(pairs.size())},
                            }};
    });
  }

  //! dim H^1(kQ) = 1 - |Q0| + |Q//Q1| per component, for an acyclic quiver.
  inline H1Report h1_path_algebra_acyclic(Quiver const& q) {
    if (!is_acyclic(q)) {
      throw Error(ErrorKind::cyclic_unsupported,
                  "kQ is infinite-dimensional on a quiver with an oriented cycle");
    }
    return detail::per_component(q, "path_algebra_acyclic", [](Component const& c) {
      auto paths = enumerate_paths(c.quiver);
      auto pairs = parallel_pairs(paths, arrow_paths(c.quiver));
      using detail::signed_size;
      std::int64_t dim = 1 - signed_size(c.quiver.vertex_count())
                         + signed_size(pairs.size());
      return std::pair{dim, detail::Counts{
                                {"dim Z", 1},
                                {"sum dim xAx", signed_size(c.quiver.vertex_count())},
                                {"|Q0|", signed_size(c.quiver.vertex_count())},
                                {"|Q1|", signed_size(c.quiver.arrow_count())},
                                {"|Q//Q1|", signed_size(pairs.size())},
                            }};
    });
  }

  //! dim H^1 = 1 - |Q0| + |Q1| per component, for a narrow quiver and any
  //! admissible ideal.
  inline H1Report h1_narrow(Quiver const& q) {
    if (!is_narrow(q)) {
      throw Error(ErrorKind::not_narrow);
    }
    return detail::per_component(q, "narrow", [](Component const& c) {
      using detail::signed_size;
      std::int64_t dim = 1 - signed_size(c.quiver.vertex_count())
                         + signed_size(c.quiver.arrow_count());
      return std::pair{dim, detail::Counts{
                                {"|Q0|", signed_size(c.quiver.vertex_count())},
                                {"|Q1|", signed_size(c.quiver.arrow_count())},
                            }};
    });
  }

  //! Whether the presentation's ideal is pre-generated: the zero ideal on an
  //! acyclic quiver, a monomial ideal passing the slice test, or a
  //! truncation ideal whose length-m paths have no shorter parallels.
  //! Incidence ideals are never classified.
  inline bool is_pregenerated(AlgebraPresentation const& p) {
    Quiver const& q = p.quiver();
    if (p.is_path_algebra()) {
      return is_acyclic(q);
    }
    if (auto m = p.truncation()) {
      return truncated_is_pregenerated(q, *m);
    }
    if (auto z = p.monomial_ideal()) {
      return is_admissible_monomial(q, *z) && is_pregenerated_monomial(q, *z);
    }
    return false;
  }

  //! dim H^1 = dim Z(Lambda) - sum_x dim xLx + sum_{x,y} |yQ1x| dim yLx for a
  //! pre-generated ideal. The center comes from the algebra (one corner per
  //! component); the slices are read off the path basis.
  inline H1Report h1_pregenerated(AlgebraPresentation const&      p,
                                  StructureConstantAlgebra const& algebra) {
    if (p.poset() != nullptr || !is_pregenerated(p)) {
      throw Error(ErrorKind::not_pregenerated);
    }
    Quiver const& q = p.quiver();
    if (algebra.endpoints().empty()
        || algebra.idempotents().size() != q.vertex_count()) {
      throw Error(ErrorKind::invalid_argument,
                  "algebra does not carry the vertex idempotents of the quiver");
    }
    auto const basis = path_basis(p);
    if (basis.size() != algebra.dim()) {
      throw Error(ErrorKind::invalid_argument,
                  "algebra dimension differs from the path basis");
    }
    // quiver vertex -> idempotent position in the algebra
    std::vector<std::size_t> idem_of(q.vertex_count());
    for (auto v : q.vertex_ids()) {
      auto it = std::find_if(algebra.idempotents().begin(),
                             algebra.idempotents().end(),
                             [&](auto const& e) { return e.vertex == q.name(v); });
      if (it == algebra.idempotents().end()) {
        throw Error(ErrorKind::unresolved_name, "idempotent of " + q.name(v));
      }
      idem_of[index(v)] = static_cast<std::size_t>(
          std::distance(algebra.idempotents().begin(), it));
    }
    return detail::per_component(q, "pregenerated", [&](Component const& c) {
      std::vector<bool> inside(algebra.idempotents().size(), false);
      for (auto v : c.vertices) {
        inside[idem_of[index(v)]] = true;
      }
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < algebra.dim(); ++i) {
        if (inside[algebra.endpoints()[i].left]) {
          keep.push_back(i);
        }
      }
      auto center = static_cast<std::int64_t>(center_dim(corner(algebra, keep)));

      std::int64_t diagonal = 0, arrow_terms = 0;
      for (auto const& path : basis) {
        bool here = std::find(c.vertices.begin(), c.vertices.end(), path.source())
                    != c.vertices.end();
        if (!here) {
          continue;
        }
        if (path.source() == path.target()) {
          ++diagonal;
        }
        for (auto a : c.arrows) {
          if (Path::of_arrow(q, a).parallel_to(path)) {
            ++arrow_terms;
          }
        }
      }
      std::int64_t dim = center - diagonal + arrow_terms;
      return std::pair{dim, detail::Counts{
                                {"dim Z", center},
                                {"sum dim xAx", diagonal},
                                {"sum |yQ1x| dim yAx", arrow_terms},
                                {"|Q0|", detail::signed_size(c.quiver.vertex_count())},
                            }};
    });
  }

  //! Slice data of a finite-dimensional bimodule X over a quiver's path
  //! algebra. slice_dims[{y, x}] = dim of the part of X between the
  //! idempotents of x and y, oriented like the paths from x to y.
  struct BimoduleSliceData {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> slice_dims;
    std::size_t dim_X_E = 0;  // X^{kQ0}
    std::size_t dim_X_T = 0;  // X^{kQ}
    std::size_t total   = 0;
  };

  //! Computes BimoduleSliceData from the actions of the vertex idempotents
  //! (matched to the quiver by vertex name) and of the whole algebra.
  inline BimoduleSliceData slice_data(Quiver const& q, BimoduleRep const& x,
                                      Field field = Field::rational()) {
    auto const& a = x.algebra();
    std::vector<std::size_t> e(q.vertex_count());
    for (auto v : q.vertex_ids()) {
      auto it = std::find_if(a.idempotents().begin(), a.idempotents().end(),
                             [&](auto const& i) { return i.vertex == q.name(v); });
      if (it == a.idempotents().end()) {
        throw Error(ErrorKind::unresolved_name, "idempotent of " + q.name(v));
      }
      e[index(v)] = it->basis_index;
    }
    BimoduleSliceData out;
    out.total = x.dim();
    for (auto src : q.vertex_ids()) {
      for (auto tgt : q.vertex_ids()) {
        // image of v -> e_src v e_tgt
        ExactMatrix m(0, x.dim());
        for (std::size_t k = 0; k < x.dim(); ++k) {
          auto image = x.act_left(basis_vector(e[index(src)]),
                                  x.right(e[index(tgt)], k));
          ExactMatrix::Row row;
          for (auto const& t : image) {
            row.push_back({t.index, t.coeff});
          }
          m.append_row(std::move(row));
        }
        out.slice_dims[{index(tgt), index(src)}] = rank(m, field);
      }
    }
    // X^E: commutes with every vertex idempotent
    ExactMatrix m(0, x.dim());
    for (auto v : q.vertex_ids()) {
      detail::EquationBlock eq;
      for (std::size_t k = 0; k < x.dim(); ++k) {
        eq.add(k, Rational(1), x.left(e[index(v)], k));
        eq.add(k, Rational(-1), x.right(e[index(v)], k));
      }
      eq.emit(m);
    }
    out.dim_X_E = kernel_dim(m, field);
    out.dim_X_T = invariants_dim(x, field);
    return out;
  }

  //! dim H^1(kQ, X) = dim X^{kQ} - dim X^{kQ0} + sum_{x,y} |yQ1x| dim yXx.
  inline std::int64_t h1_tensor_coefficients(Quiver const&            q,
                                             BimoduleSliceData const& x) {
    std::int64_t hom = 0;
    for (auto const& a : q.arrows()) {
      auto it = x.slice_dims.find({index(a.target), index(a.source)});
      if (it == x.slice_dims.end()) {
        throw Error(ErrorKind::invalid_argument, "slice data misses a vertex pair");
      }
      hom += static_cast<std::int64_t>(it->second);
    }
    return static_cast<std::int64_t>(x.dim_X_T) - static_cast<std::int64_t>(x.dim_X_E)
           + hom;
  }

  //! kQ/I as a bimodule over kQ (acyclic quiver), through the quotient map
  //! on path bases.
  inline BimoduleRep quotient_over_path_algebra(AlgebraPresentation const& p) {
    detail::require_acyclic(p.quiver(), "kQ must be finite-dimensional");
    auto path_algebra = build_algebra(AlgebraPresentation::path_algebra(p.quiver()));
    auto quotient     = build_algebra(p);
    return pullback(regular_bimodule(quotient), path_algebra,
                    label_projection(path_algebra, quotient));
  }

  //! The lower bound 1 - |Q0| + |Q1| for a connected acyclic quiver with a
  //! minimal monomial ideal. The diagonal couples (a, a) are never
  //! effective, so |(Q1//B)_ne| >= |Q1| and dim H^1 is at least this value.
  inline std::int64_t h1_bound_monomial(Quiver const& q, MonomialIdeal const&) {
    detail::require_acyclic(q, "bound needs an acyclic quiver");
    if (connected_components(q).size() != 1) {
      throw Error(ErrorKind::disconnected);
    }
    return 1 - static_cast<std::int64_t>(q.vertex_count())
           + static_cast<std::int64_t>(q.arrow_count());
  }

  //! Picks the first applicable formula: path algebra, truncated, monomial
  //! (acyclic quivers), then the pre-generated formula. Incidence
  //! presentations with a narrow Hasse quiver have the zero ideal and use
  //! the path-algebra formula. Throws formula_unavailable otherwise.
  inline H1Report classify_and_compute(AlgebraPresentation const& p) {
    Quiver const& q       = p.quiver();
    bool const    acyclic = is_acyclic(q);
    if (p.poset() != nullptr) {
      if (is_narrow(q)) {
        return h1_path_algebra_acyclic(q);
      }
      throw Error(ErrorKind::formula_unavailable,
                  "incidence algebra with parallel paths in its Hasse quiver");
    }
    if (p.is_path_algebra()) {
      if (acyclic) {
        return h1_path_algebra_acyclic(q);
      }
      throw Error(ErrorKind::formula_unavailable, "kQ is infinite-dimensional");
    }
    if (auto m = p.truncation(); m && acyclic) {
      return h1_truncated_acyclic(q, *m);
    }
    if (auto z = p.monomial_ideal(); z && acyclic) {
      return h1_monomial_acyclic(q, *z);
    }
    if (auto z = p.monomial_ideal(); z && !is_admissible_monomial(q, *z)) {
      throw Error(ErrorKind::formula_unavailable,
                  "monomial ideal is not admissible");
    }
    if (is_pregenerated(p)) {
      return h1_pregenerated(p, build_algebra(p));
    }
    throw Error(ErrorKind::formula_unavailable,
                "ideal on a quiver with oriented cycles is not pre-generated");
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_FORMULAS_HPP_
