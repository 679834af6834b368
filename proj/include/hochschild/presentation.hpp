#ifndef HOCHSCHILD_PRESENTATION_HPP_
#define HOCHSCHILD_PRESENTATION_HPP_

// Relation schemes on path algebras: monomial ideals, truncation ideals and
// incidence algebras, and their materialization as structure constants.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "poset.hpp"
#include "quiver.hpp"

namespace hochschild {

  //! Throws short_generator or non_minimal unless every path has length at
  //! least two and none is a strict sub-path of another.
  inline void check_minimal(Quiver const& q, std::vector<Path> const& z) {
    for (auto const& p : z) {
      if (p.length() < 2) {
        throw Error(ErrorKind::short_generator, to_string(q, p));
      }
    }
    for (auto const& p : z) {
      for (auto const& r : z) {
        if (p.length() > r.length() && p.contains(r)) {
          throw Error(ErrorKind::non_minimal,
                      to_string(q, p) + " contains " + to_string(q, r));
        }
      }
    }
  }

  //! A two-sided ideal generated by a minimal set of paths of length >= 2.
  //! Generators are kept deduplicated and in PathOrder.
  class MonomialIdeal {
   public:
    MonomialIdeal() = default;

    MonomialIdeal(Quiver const& q, std::vector<Path> generators) {
      check_minimal(q, generators);
      sort_paths(q, generators);
      generators.erase(std::unique(generators.begin(), generators.end()),
                       generators.end());
      _generators = std::move(generators);
    }

    [[nodiscard]] std::vector<Path> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _generators.empty();
    }
    [[nodiscard]] std::size_t max_length() const noexcept {
      std::size_t m = 0;
      for (auto const& g : _generators) {
        m = std::max(m, g.length());
      }
      return m;
    }

    bool operator==(MonomialIdeal const&) const = default;

   private:
    std::vector<Path> _generators;
  };

  //! True iff some generator occurs in p as a contiguous sub-path.
  inline bool contains_generator(Path const& p, MonomialIdeal const& z) {
    return std::any_of(z.generators().begin(), z.generators().end(),
                       [&p](Path const& g) { return p.contains(g); });
  }

  //! For a path p of the ideal: true iff p also lies in F I + I F, that is,
  //! some generator occurrence misses the first or the last arrow of p.
  inline bool in_decomposable_part(Path const& p, MonomialIdeal const& z) {
    for (auto const& g : z.generators()) {
      for (auto start : p.occurrences(g)) {
        if (start > 0 || start + g.length() < p.length()) {
          return true;
        }
      }
    }
    return false;
  }

  //! Result of the search for a generator-avoiding cycle.
  struct AvoidanceAnalysis {
    bool finite;
    //! Longest generator-avoiding path, when finitely many exist.
    std::optional<std::size_t> longest_avoiding;
  };

  //! Decides whether only finitely many paths avoid every generator.
  //!
  //! The automaton has one state per proper prefix of a generator (the
  //! trivial paths included); reading an arrow moves to the longest suffix
  //! of the extended path that is again such a prefix, and dies when a
  //! generator becomes a suffix. The avoiding set is finite iff this graph
  //! has no cycle, and its longest path bounds the avoiding lengths.
  inline AvoidanceAnalysis analyze_avoidance(Quiver const& q, MonomialIdeal const& z) {
    std::vector<Path>                                   states;
    std::unordered_map<Path, std::size_t, PathHash> id;
    auto add = [&](Path const& p) {
      if (id.emplace(p, states.size()).second) {
        states.push_back(p);
      }
    };
    for (auto v : q.vertex_ids()) {
      add(Path::trivial(v));
    }
    for (auto const& g : z.generators()) {
      for (std::size_t len = 1; len < g.length(); ++len) {
        add(Path::from_arrows(
            q, std::vector<ArrowId>(g.arrows().begin(), g.arrows().begin() + len)));
      }
    }
    auto is_generator_suffix = [&z](std::vector<ArrowId> const& w) {
      for (auto const& g : z.generators()) {
        auto const& ga = g.arrows();
        if (ga.size() <= w.size()
            && std::equal(ga.begin(), ga.end(), w.end() - ga.size())) {
          return true;
        }
      }
      return false;
    };
    std::vector<std::vector<std::size_t>> next(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      for (auto a : q.out_arrows(states[s].target())) {
        auto w = states[s].arrows();
        w.push_back(a);
        if (is_generator_suffix(w)) {
          continue;
        }
        std::size_t target = id.at(Path::trivial(q.arrow(a).target));
        for (std::size_t drop = 0; drop < w.size(); ++drop) {
          auto it = id.find(Path::from_arrows(
              q, std::vector<ArrowId>(w.begin() + drop, w.end())));
          if (it != id.end()) {
            target = it->second;
            break;
          }
        }
        next[s].push_back(target);
      }
    }
    // Longest path by memoized DFS; a grey node on the stack means a cycle.
    enum class Mark { white, grey, black };
    std::vector<Mark>        mark(states.size(), Mark::white);
    std::vector<std::size_t> longest(states.size(), 0);
    bool                     cyclic = false;
    std::function<void(std::size_t)> visit = [&](std::size_t s) {
      mark[s] = Mark::grey;
      for (auto t : next[s]) {
        if (mark[t] == Mark::grey) {
          cyclic = true;
        } else if (mark[t] == Mark::white) {
          visit(t);
        }
        if (cyclic) {
          return;
        }
        longest[s] = std::max(longest[s], longest[t] + 1);
      }
      mark[s] = Mark::black;
    };
    std::size_t best = 0;
    for (std::size_t v = 0; v < q.vertex_count() && !cyclic; ++v) {
      if (mark[v] == Mark::white) {
        visit(v);
      }
      best = std::max(best, longest[v]);
    }
    if (cyclic) {
      return {false, std::nullopt};
    }
    return {true, best};
  }

  //! True iff the Z-avoiding paths form a finite set, i.e. F^n lies in the
  //! ideal for some n. Always true on acyclic quivers.
  inline bool is_admissible_monomial(Quiver const& q, MonomialIdeal const& z) {
    return analyze_avoidance(q, z).finite;
  }

  //! The paths avoiding every generator, trivial paths included, in
  //! PathOrder. Throws infinite_basis when that set is infinite.
  inline std::vector<Path> basis_B(Quiver const& q, MonomialIdeal const& z) {
    if (!is_acyclic(q) && !is_admissible_monomial(q, z)) {
      throw Error(ErrorKind::infinite_basis);
    }
    // Sub-paths of avoiding paths avoid, so extending only avoiding paths
    // reaches all of them.
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (auto v : q.vertex_ids()) {
      frontier.push_back(Path::trivial(v));
    }
    while (!frontier.empty()) {
      out.insert(out.end(), frontier.begin(), frontier.end());
      std::vector<Path> grown;
      for (auto const& p : frontier) {
        for (auto a : q.out_arrows(p.target())) {
          auto e = *compose(p, Path::of_arrow(q, a));
          if (!contains_generator(e, z)) {
            grown.push_back(std::move(e));
          }
        }
      }
      frontier = std::move(grown);
    }
    sort_paths(q, out);
    return out;
  }

  //! Dimensions of the (y, x) slices of I, FI + IF and kQ, spanned by paths
  //! from x to y.
  //!
  //! On a quiver with oriented cycles the slices are infinite-dimensional;
  //! paths are then counted up to length longest_avoiding + 1, past which
  //! every path lies in FI + IF. Equalities between these truncated counts
  //! coincide with the equalities between the slices themselves.
  struct SliceDims {
    std::size_t ideal;
    std::size_t decomposable;  // FI + IF
    std::size_t total;
    std::optional<std::size_t> truncated_at;

    bool operator==(SliceDims const&) const = default;
  };

  namespace detail {
    inline std::optional<std::size_t> slice_bound(Quiver const& q,
                                                  MonomialIdeal const& z) {
      if (is_acyclic(q)) {
        return std::nullopt;
      }
      auto analysis = analyze_avoidance(q, z);
      if (!analysis.finite) {
        throw Error(ErrorKind::infinite_slice);
      }
      return std::max(*analysis.longest_avoiding + 1, z.max_length());
    }

    inline SliceDims slice_dims_from(std::vector<Path> const& paths,
                                     MonomialIdeal const& z, VertexId x,
                                     VertexId y, std::optional<std::size_t> bound) {
      SliceDims d{0, 0, 0, bound};
      for (auto const& p : paths) {
        if (p.source() != x || p.target() != y) {
          continue;
        }
        ++d.total;
        if (contains_generator(p, z)) {
          ++d.ideal;
          if (in_decomposable_part(p, z)) {
            ++d.decomposable;
          }
        }
      }
      return d;
    }
  }  // namespace detail

  inline SliceDims slice_ideal_dims(Quiver const& q, MonomialIdeal const& z,
                                    VertexId x, VertexId y) {
    auto bound = detail::slice_bound(q, z);
    return detail::slice_dims_from(enumerate_paths(q, bound), z, x, y, bound);
  }

  //! Every (y, x) slice of the ideal is either the whole slice of kQ or the
  //! slice of FI + IF. Throws infinite_slice on a non-admissible ideal.
  inline bool is_pregenerated_monomial(Quiver const& q, MonomialIdeal const& z) {
    auto bound = detail::slice_bound(q, z);
    auto paths = enumerate_paths(q, bound);
    for (auto x : q.vertex_ids()) {
      for (auto y : q.vertex_ids()) {
        auto d = detail::slice_dims_from(paths, z, x, y, bound);
        if (d.ideal != d.total && d.ideal != d.decomposable) {
          return false;
        }
      }
    }
    return true;
  }

  //! Equivalent form for minimal monomial ideals: between any two vertices
  //! either no avoiding path or no generator runs.
  inline bool is_pregenerated_monomial_shortcut(Quiver const&        q,
                                                MonomialIdeal const& z) {
    auto b = basis_B(q, z);
    for (auto const& g : z.generators()) {
      for (auto const& p : b) {
        if (p.parallel_to(g)) {
          return false;
        }
      }
    }
    return true;
  }

  //! All paths of length exactly m; for m >= 2 a minimal generating set of
  //! the truncation ideal F^m.
  inline std::vector<Path> paths_of_length(Quiver const& q, std::size_t m) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q, m)) {
      if (p.length() == m) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  //! F^m is pre-generated iff every path parallel to a length-m path has
  //! length at least m.
  inline bool truncated_is_pregenerated(Quiver const& q, std::size_t m) {
    if (m < 2) {
      throw Error(ErrorKind::invalid_argument, "truncation level must be >= 2");
    }
    auto paths = enumerate_paths(q, m);
    for (auto const& p : paths) {
      if (p.length() != m) {
        continue;
      }
      for (auto const& r : paths) {
        if (r.length() < m && r.parallel_to(p)) {
          return false;
        }
      }
    }
    return true;
  }

  struct NoRelations {
    bool operator==(NoRelations const&) const = default;
  };

  struct TruncationIdeal {
    std::size_t m;
    bool operator==(TruncationIdeal const&) const = default;
  };

  //! A quiver with one relation scheme. Incidence presentations carry the
  //! poset and use its Hasse quiver.
  class AlgebraPresentation {
   public:
    using Scheme = std::variant<NoRelations, MonomialIdeal, TruncationIdeal, Poset>;

    static AlgebraPresentation path_algebra(Quiver q) {
      return AlgebraPresentation(std::move(q), NoRelations{});
    }
    static AlgebraPresentation monomial(Quiver q, MonomialIdeal z) {
      return AlgebraPresentation(std::move(q), std::move(z));
    }
    static AlgebraPresentation monomial(Quiver q, std::vector<Path> z) {
      MonomialIdeal ideal(q, std::move(z));
      return AlgebraPresentation(std::move(q), std::move(ideal));
    }
    static AlgebraPresentation truncated(Quiver q, std::size_t m) {
      if (m < 2) {
        throw Error(ErrorKind::invalid_argument, "truncation level must be >= 2");
      }
      return AlgebraPresentation(std::move(q), TruncationIdeal{m});
    }
    static AlgebraPresentation incidence(Poset p) {
      Quiver q = hasse_quiver(p);
      return AlgebraPresentation(std::move(q), std::move(p));
    }

    [[nodiscard]] Quiver const& quiver() const noexcept {
      return _quiver;
    }
    [[nodiscard]] Scheme const& scheme() const noexcept {
      return _scheme;
    }

    [[nodiscard]] bool is_path_algebra() const noexcept {
      return std::holds_alternative<NoRelations>(_scheme);
    }
    [[nodiscard]] MonomialIdeal const* monomial_ideal() const noexcept {
      return std::get_if<MonomialIdeal>(&_scheme);
    }
    [[nodiscard]] std::optional<std::size_t> truncation() const noexcept {
      if (auto t = std::get_if<TruncationIdeal>(&_scheme)) {
        return t->m;
      }
      return std::nullopt;
    }
    [[nodiscard]] Poset const* poset() const noexcept {
      return std::get_if<Poset>(&_scheme);
    }

    //! The ideal as a monomial ideal: empty for no relations, all length-m
    //! paths for truncation. Throws for incidence presentations.
    [[nodiscard]] MonomialIdeal as_monomial() const {
      if (is_path_algebra()) {
        return MonomialIdeal();
      }
      if (auto z = monomial_ideal()) {
        return *z;
      }
      if (auto m = truncation()) {
        return MonomialIdeal(_quiver, paths_of_length(_quiver, *m));
      }
      throw Error(ErrorKind::invalid_argument,
                  "incidence presentations are not monomial");
    }

    bool operator==(AlgebraPresentation const&) const = default;

   private:
    AlgebraPresentation(Quiver q, Scheme s)
        : _quiver(std::move(q)), _scheme(std::move(s)) {}

    Quiver _quiver;
    Scheme _scheme;
  };

  //! The path basis of a quiver presentation: all paths (acyclic quiver),
  //! the Z-avoiding paths, or the paths of length < m.
  inline std::vector<Path> path_basis(AlgebraPresentation const& p) {
    Quiver const& q = p.quiver();
    if (p.is_path_algebra()) {
      if (!is_acyclic(q)) {
        throw Error(ErrorKind::infinite_dimensional,
                    "path algebra of a quiver with an oriented cycle");
      }
      return enumerate_paths(q);
    }
    if (auto z = p.monomial_ideal()) {
      if (!is_acyclic(q) && !is_admissible_monomial(q, *z)) {
        throw Error(ErrorKind::infinite_dimensional,
                    "monomial ideal is not admissible");
      }
      return basis_B(q, *z);
    }
    if (auto m = p.truncation()) {
      return enumerate_paths(q, *m - 1);
    }
    throw Error(ErrorKind::invalid_argument,
                "incidence presentations have no path basis");
  }

  //! Restriction of a quiver presentation to one connected component.
  inline AlgebraPresentation restrict_to(AlgebraPresentation const& p,
                                         Component const&           c) {
    if (p.is_path_algebra()) {
      return AlgebraPresentation::path_algebra(c.quiver);
    }
    if (auto m = p.truncation()) {
      return AlgebraPresentation::truncated(c.quiver, *m);
    }
    if (auto z = p.monomial_ideal()) {
      std::vector<Path> local;
      for (auto const& g : z->generators()) {
        if (std::find(c.vertices.begin(), c.vertices.end(), g.source())
            != c.vertices.end()) {
          local.push_back(c.localize(g));
        }
      }
      return AlgebraPresentation::monomial(c.quiver, std::move(local));
    }
    throw Error(ErrorKind::invalid_argument,
                "incidence presentations are not split by component");
  }

  //! Structure constants of the presented algebra.
  //!
  //! Path-type schemes use the path basis with concatenation as product
  //! (zero when the result leaves the basis); incidence presentations use
  //! the basis of comparable pairs. Associativity, the unit and the vertex
  //! idempotents are checked before returning.
  inline StructureConstantAlgebra build_algebra(AlgebraPresentation const& p) {
    if (auto poset = p.poset()) {
      return incidence_algebra(*poset);
    }
    Quiver const& q     = p.quiver();
    auto const    basis = path_basis(p);
    std::size_t const d = basis.size();
    std::unordered_map<Path, std::size_t, PathHash> position;
    std::vector<std::string> labels;
    std::vector<Endpoints>   ends;
    for (std::size_t i = 0; i < d; ++i) {
      position.emplace(basis[i], i);
      labels.push_back(to_string(q, basis[i]));
      ends.push_back({index(basis[i].source()), index(basis[i].target())});
    }
    std::vector<LinComb> table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (auto c = compose(basis[i], basis[j])) {
          auto it = position.find(*c);
          if (it != position.end()) {
            table[i * d + j] = basis_vector(it->second);
          }
        }
      }
    }
    LinComb                       unit;
    std::vector<VertexIdempotent> idem;
    for (auto v : q.vertex_ids()) {
      auto i = position.at(Path::trivial(v));
      unit.push_back({i, Rational(1)});
      idem.push_back({q.name(v), i});
    }
    StructureConstantAlgebra a(std::move(labels), std::move(table),
                               std::move(unit), std::move(idem),
                               std::move(ends));
    check_structure(a);
    return a;
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_PRESENTATION_HPP_
