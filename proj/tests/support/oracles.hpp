#ifndef HOCHSCHILD_TESTS_ORACLES_HPP_
#define HOCHSCHILD_TESTS_ORACLES_HPP_

// Slow reference computations used to cross-check the library.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hochschild/hochschild.hpp"

namespace hochschild::testing {

  //! Number of paths (trivial ones included) by memoized recursion over the
  //! out-arrows; requires an acyclic quiver.
  inline std::size_t dp_path_count(Quiver const& q) {
    std::vector<std::size_t> memo(q.vertex_count(), 0);
    std::vector<bool>        done(q.vertex_count(), false);
    std::function<std::size_t(std::size_t)> from = [&](std::size_t v) {
      if (!done[v]) {
        std::size_t n = 1;
        for (auto const& a : q.arrows()) {
          if (index(a.source) == v) {
            n += from(index(a.target));
          }
        }
        memo[v] = n;
        done[v] = true;
      }
      return memo[v];
    };
    std::size_t total = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      total += from(v);
    }
    return total;
  }

  inline bool naive_contains(Path const& p, Path const& z) {
    auto const& h = p.arrows();
    auto const& n = z.arrows();
    return !n.empty()
           && std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
  }

  inline bool naive_in_ideal(Path const& p, std::vector<Path> const& z) {
    return std::any_of(z.begin(), z.end(),
                       [&](Path const& g) { return naive_contains(p, g); });
  }

  using ArrowWord = std::vector<ArrowId>;

  //! Paths spanning FI + IF among the paths of length <= max_length:
  //! products f*i and i*f with f a path of length >= 1 and i an ideal path.
  inline std::set<std::pair<std::size_t, ArrowWord>> brute_fi_if(
      Quiver const& q, std::vector<Path> const& z, std::size_t max_length) {
    auto                 all = enumerate_paths(q, max_length);
    std::vector<Path>    ideal;
    std::vector<Path>    radical;
    for (auto const& p : all) {
      if (naive_in_ideal(p, z)) {
        ideal.push_back(p);
      }
      if (!p.is_trivial()) {
        radical.push_back(p);
      }
    }
    std::set<std::pair<std::size_t, ArrowWord>> out;
    for (auto const& f : radical) {
      for (auto const& i : ideal) {
        for (auto r : {compose(f, i), compose(i, f)}) {
          if (r && r->length() <= max_length) {
            out.insert({index(r->source()), r->arrows()});
          }
        }
      }
    }
    return out;
  }

  //! Pre-generated test straight from the definition, using brute_fi_if;
  //! acyclic quivers only.
  inline bool brute_is_pregenerated(Quiver const& q, std::vector<Path> const& z) {
    auto        all    = enumerate_paths(q);
    std::size_t longest = 0;
    for (auto const& p : all) {
      longest = std::max(longest, p.length());
    }
    auto fi_if = brute_fi_if(q, z, longest);
    std::map<std::pair<std::size_t, std::size_t>, std::array<std::size_t, 3>> slices;
    for (auto const& p : all) {
      auto& s = slices[{index(p.source()), index(p.target())}];
      ++s[2];
      if (naive_in_ideal(p, z)) {
        ++s[0];
      }
      if (fi_if.contains({index(p.source()), p.arrows()})) {
        ++s[1];
      }
    }
    return std::all_of(slices.begin(), slices.end(), [](auto const& kv) {
      auto const& s = kv.second;
      return s[0] == s[2] || s[0] == s[1];
    });
  }

  //! dim of the span of the inner derivations [-, x] over basis elements x,
  //! each written as a d*d matrix.
  inline std::size_t inner_span_dim(StructureConstantAlgebra const& a) {
    std::size_t const d = a.dim();
    ExactMatrix       m(0, d * d);
    for (std::size_t x = 0; x < d; ++x) {
      std::map<std::size_t, Rational> row;
      for (std::size_t i = 0; i < d; ++i) {
        for (auto const& t : a.product(i, x)) {
          row[i * d + t.index] += t.coeff;
        }
        for (auto const& t : a.product(x, i)) {
          row[i * d + t.index] -= t.coeff;
        }
      }
      ExactMatrix::Row r;
      for (auto const& [c, v] : row) {
        if (v != 0) {
          r.push_back({c, v});
        }
      }
      m.append_row(std::move(r));
    }
    return rank(m);
  }

  //! Dense Gaussian elimination over Q, for checking the sparse routine.
  inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    std::size_t const cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && m[p][c] == 0) {
        ++p;
      }
      if (p == m.size()) {
        continue;
      }
      std::swap(m[p], m[r]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != r && m[i][c] != 0) {
          Rational f = m[i][c] / m[r][c];
          for (std::size_t j = c; j < cols; ++j) {
            m[i][j] -= f * m[r][j];
          }
        }
      }
      ++r;
    }
    return r;
  }

}  // namespace hochschild::testing

#endif  // HOCHSCHILD_TESTS_ORACLES_HPP_
