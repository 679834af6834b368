#ifndef HOCHSCHILD_POSET_HPP_
#define HOCHSCHILD_POSET_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "quiver.hpp"

namespace hochschild {

  //! A pair (lower, upper) meaning lower <= upper.
  using OrderPair = std::pair<std::string, std::string>;

  //! A finite partially ordered set. The relation is the reflexive and
  //! transitive closure of the pairs it was built from.
  class Poset {
   public:
    //! Throws duplicate_name, unresolved_name, or antisymmetry.
    Poset(std::vector<std::string> elements, std::vector<OrderPair> const& pairs)
        : _elements(std::move(elements)) {
      if (_elements.empty()) {
        throw Error(ErrorKind::empty_vertex_set, "poset without elements");
      }
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        if (_elements[i].empty()) {
          throw Error(ErrorKind::invalid_argument, "empty element name");
        }
        if (!_index.emplace(_elements[i], i).second) {
          throw Error(ErrorKind::duplicate_name, "element " + _elements[i]);
        }
      }
      std::size_t const n = _elements.size();
      _leq.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        _leq[i][i] = true;
      }
      for (auto const& [lo, hi] : pairs) {
        _leq[element(lo)][element(hi)] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (_leq[i][k]) {
            for (std::size_t j = 0; j < n; ++j) {
              if (_leq[k][j]) {
                _leq[i][j] = true;
              }
            }
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (_leq[i][j] && _leq[j][i]) {
            throw Error(ErrorKind::antisymmetry,
                        _elements[i] + " <= " + _elements[j] + " <= "
                            + _elements[i]);
          }
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] std::vector<std::string> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::string const& name(std::size_t i) const {
      return _elements.at(i);
    }
    [[nodiscard]] std::size_t element(std::string const& n) const {
      auto it = _index.find(n);
      if (it == _index.end()) {
        throw Error(ErrorKind::unresolved_name, "element " + n);
      }
      return it->second;
    }
    [[nodiscard]] bool leq(std::size_t a, std::size_t b) const {
      return _leq.at(a).at(b);
    }
    [[nodiscard]] bool less(std::size_t a, std::size_t b) const {
      return a != b && leq(a, b);
    }

    //! Cover relations as (upper, lower) pairs, ordered by upper then lower.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covers() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      std::size_t const n = size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!less(y, x)) {
            continue;
          }
          bool cover = true;
          for (std::size_t z = 0; z < n && cover; ++z) {
            cover = !(less(y, z) && less(z, x));
          }
          if (cover) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

    //! Comparable pairs (y, x) with y <= x, ordered by y then x.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
    comparable_pairs() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t y = 0; y < size(); ++y) {
        for (std::size_t x = 0; x < size(); ++x) {
          if (leq(y, x)) {
            out.emplace_back(y, x);
          }
        }
      }
      return out;
    }

    bool operator==(Poset const& that) const {
      return _elements == that._elements && _leq == that._leq;
    }

   private:
    std::vector<std::string>                     _elements;
    std::unordered_map<std::string, std::size_t> _index;
    std::vector<std::vector<bool>>               _leq;
  };

  //! Checks reflexivity, antisymmetry and transitivity of the closure of the
  //! given pairs; throws on failure.
  inline void validate_poset(std::vector<std::string> const& elements,
                             std::vector<OrderPair> const&   pairs) {
    Poset p(elements, pairs);
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (!p.leq(a, a)) {
        throw Error(ErrorKind::invalid_argument, "closure is not reflexive");
      }
      for (std::size_t b = 0; b < p.size(); ++b) {
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c)) {
            throw Error(ErrorKind::invalid_argument, "closure is not transitive");
          }
        }
      }
    }
  }

  //! Vertices are the elements; one arrow x -> y, named "x>y", per cover
  //! relation x > y.
  inline Quiver hasse_quiver(Poset const& p) {
    QuiverDescription d;
    d.vertices = p.elements();
    for (auto [x, y] : p.covers()) {
      d.arrows.push_back({p.name(x) + ">" + p.name(y), p.name(x), p.name(y)});
    }
    return Quiver(d);
  }

  //! Basis e_{y,x} for y <= x with e_{y,z} * e_{z,x} = e_{y,x} and all other
  //! products zero; the unit is the sum of the e_{x,x}.
  inline StructureConstantAlgebra incidence_algebra(Poset const& p) {
    auto const        pairs = p.comparable_pairs();
    std::size_t const d     = pairs.size();
    std::vector<std::vector<std::size_t>> slot(
        p.size(), std::vector<std::size_t>(p.size(), d));
    std::vector<std::string> basis;
    std::vector<Endpoints>   ends;
    for (std::size_t i = 0; i < d; ++i) {
      auto [y, x] = pairs[i];
      slot[y][x]  = i;
      basis.push_back("e(" + p.name(y) + "," + p.name(x) + ")");
      ends.push_back({y, x});
    }
    std::vector<LinComb> table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        auto [y, z1] = pairs[i];
        auto [z2, x] = pairs[j];
        if (z1 == z2) {
          table[i * d + j] = basis_vector(slot[y][x]);
        }
      }
    }
    LinComb                       unit;
    std::vector<VertexIdempotent> idem;
    for (std::size_t x = 0; x < p.size(); ++x) {
      unit.push_back({slot[x][x], Rational(1)});
      idem.push_back({p.name(x), slot[x][x]});
    }
    StructureConstantAlgebra a(std::move(basis), std::move(table),
                               std::move(unit), std::move(idem),
                               std::move(ends));
    check_structure(a);
    return a;
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_POSET_HPP_
