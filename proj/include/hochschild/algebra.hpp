#ifndef HOCHSCHILD_ALGEBRA_HPP_
#define HOCHSCHILD_ALGEBRA_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exact.hpp"

namespace hochschild {

  struct Term {
    std::size_t index;
    Rational    coeff;

    bool operator==(Term const&) const = default;
  };

  //! Sparse linear combination of basis vectors, sorted by index, no zero
  //! coefficients.
  using LinComb = std::vector<Term>;

  inline LinComb basis_vector(std::size_t i) {
    return {Term{i, Rational(1)}};
  }

  //! Sorts, merges and drops zero terms.
  inline LinComb normalize(LinComb v) {
    std::sort(v.begin(), v.end(),
              [](Term const& a, Term const& b) { return a.index < b.index; });
    LinComb out;
    for (auto& t : v) {
      if (!out.empty() && out.back().index == t.index) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
      if (out.back().coeff == 0) {
        out.pop_back();
      }
    }
    return out;
  }

  inline void axpy(LinComb& acc, Rational const& c, LinComb const& v) {
    for (auto const& t : v) {
      acc.push_back({t.index, c * t.coeff});
    }
  }

  //! The pair of vertex idempotents (e_l, e_r) with e_l * b * e_r == b for a
  //! basis element b. For the path basis these are (source, target).
  struct Endpoints {
    std::size_t left;
    std::size_t right;

    bool operator==(Endpoints const&) const = default;
  };

  struct VertexIdempotent {
    std::string vertex;
    std::size_t basis_index;

    bool operator==(VertexIdempotent const&) const = default;
  };

  //! A finite-dimensional algebra given by basis labels and an exact
  //! multiplication table.
  //!
  //! product(i, j) is b_i * b_j. When the algebra comes from a quiver or a
  //! poset it also records its vertex idempotents and, per basis element,
  //! the idempotents fixing it on either side; the table is all that the
  //! cohomology oracles use.
  class StructureConstantAlgebra {
   public:
    StructureConstantAlgebra(std::vector<std::string>      basis,
                             std::vector<LinComb>          table,
                             LinComb                       unit,
                             std::vector<VertexIdempotent> idempotents = {},
                             std::vector<Endpoints>        endpoints   = {})
        : _basis(std::move(basis)),
          _table(std::move(table)),
          _unit(normalize(std::move(unit))),
          _idempotents(std::move(idempotents)),
          _endpoints(std::move(endpoints)) {
      std::size_t const d = _basis.size();
      if (_table.size() != d * d) {
        throw Error(ErrorKind::invalid_argument,
                    "product table must have dim^2 entries");
      }
      for (auto& entry : _table) {
        entry = normalize(std::move(entry));
        for (auto const& t : entry) {
          if (t.index >= d) {
            throw Error(ErrorKind::invalid_argument, "product outside basis");
          }
        }
      }
      if (!_endpoints.empty() && _endpoints.size() != d) {
        throw Error(ErrorKind::invalid_argument,
                    "endpoints must be given for every basis element");
      }
    }

    [[nodiscard]] std::size_t dim() const noexcept {
      return _basis.size();
    }
    [[nodiscard]] std::vector<std::string> const& basis() const noexcept {
      return _basis;
    }
    [[nodiscard]] std::string const& label(std::size_t i) const {
      return _basis.at(i);
    }
    [[nodiscard]] std::optional<std::size_t> find(std::string const& label) const {
      auto it = std::find(_basis.begin(), _basis.end(), label);
      if (it == _basis.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(std::distance(_basis.begin(), it));
    }
    [[nodiscard]] LinComb const& product(std::size_t i, std::size_t j) const {
      return _table[i * dim() + j];
    }
    [[nodiscard]] LinComb const& unit() const noexcept {
      return _unit;
    }
    [[nodiscard]] std::vector<VertexIdempotent> const& idempotents() const noexcept {
      return _idempotents;
    }
    [[nodiscard]] std::vector<Endpoints> const& endpoints() const noexcept {
      return _endpoints;
    }
    [[nodiscard]] std::vector<LinComb> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] LinComb multiply(LinComb const& x, LinComb const& y) const {
      LinComb acc;
      for (auto const& s : x) {
        for (auto const& t : y) {
          axpy(acc, s.coeff * t.coeff, product(s.index, t.index));
        }
      }
      return normalize(std::move(acc));
    }

   private:
    std::vector<std::string>      _basis;
    std::vector<LinComb>          _table;
    LinComb                       _unit;
    std::vector<VertexIdempotent> _idempotents;
    std::vector<Endpoints>        _endpoints;
  };

  //! Checks associativity on every basis triple, that the unit is a
  //! two-sided identity, and that the vertex idempotents (if any) are
  //! orthogonal idempotents summing to the unit. Throws
  //! associativity_failure otherwise.
  inline void check_structure(StructureConstantAlgebra const& a) {
    std::size_t const d = a.dim();
    auto fail = [](std::string const& what) {
      throw Error(ErrorKind::associativity_failure, what);
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        auto const& ij = a.product(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          auto lhs = a.multiply(ij, basis_vector(k));
          auto rhs = a.multiply(basis_vector(i), a.product(j, k));
          if (lhs != rhs) {
            fail("(" + a.label(i) + a.label(j) + ")" + a.label(k));
          }
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (a.multiply(a.unit(), basis_vector(i)) != basis_vector(i)
          || a.multiply(basis_vector(i), a.unit()) != basis_vector(i)) {
        fail("unit does not fix " + a.label(i));
      }
    }
    if (a.idempotents().empty()) {
      return;
    }
    LinComb sum;
    for (auto const& e : a.idempotents()) {
      for (auto const& f : a.idempotents()) {
        auto ef = a.product(e.basis_index, f.basis_index);
        auto expected = e.basis_index == f.basis_index
                            ? basis_vector(e.basis_index)
                            : LinComb{};
        if (ef != expected) {
          fail("vertex idempotents " + e.vertex + ", " + f.vertex);
        }
      }
      axpy(sum, Rational(1), basis_vector(e.basis_index));
    }
    if (normalize(std::move(sum)) != a.unit()) {
      fail("vertex idempotents do not sum to the unit");
    }
  }

  //! The opposite algebra: b_i * b_j := b_j * b_i. Endpoints swap sides.
  inline StructureConstantAlgebra opposite(StructureConstantAlgebra const& a) {
    std::size_t const d = a.dim();
    std::vector<LinComb> table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        table[i * d + j] = a.product(j, i);
      }
    }
    std::vector<Endpoints> ends;
    for (auto const& e : a.endpoints()) {
      ends.push_back({e.right, e.left});
    }
    return StructureConstantAlgebra(a.basis(), std::move(table), a.unit(),
                                    a.idempotents(), std::move(ends));
  }

  //! The product algebra A x B; basis of A first, labels of B prefixed by
  //! "2:" when they clash with labels of A.
  inline StructureConstantAlgebra direct_product(StructureConstantAlgebra const& a,
                                                 StructureConstantAlgebra const& b) {
    std::size_t const da = a.dim(), db = b.dim(), d = da + db;
    std::vector<std::string> basis = a.basis();
    for (auto const& l : b.basis()) {
      basis.push_back(a.find(l) ? "2:" + l : l);
    }
    std::vector<LinComb> table(d * d);
    auto shift = [da](LinComb v) {
      for (auto& t : v) {
        t.index += da;
      }
      return v;
    };
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) {
        table[i * d + j] = a.product(i, j);
      }
    }
    for (std::size_t i = 0; i < db; ++i) {
      for (std::size_t j = 0; j < db; ++j) {
        table[(i + da) * d + j + da] = shift(b.product(i, j));
      }
    }
    LinComb unit = a.unit();
    auto     bu   = shift(b.unit());
    unit.insert(unit.end(), bu.begin(), bu.end());

    std::vector<VertexIdempotent> idem = a.idempotents();
    std::size_t const             na   = a.idempotents().size();
    for (auto const& e : b.idempotents()) {
      idem.push_back({basis[e.basis_index + da], e.basis_index + da});
    }
    std::vector<Endpoints> ends;
    if (!a.endpoints().empty() && !b.endpoints().empty()) {
      ends = a.endpoints();
      for (auto const& e : b.endpoints()) {
        ends.push_back({e.left + na, e.right + na});
      }
    }
    return StructureConstantAlgebra(std::move(basis), std::move(table),
                                     std::move(unit), std::move(idem),
                                     std::move(ends));
  }

  //! k x ... x k (n factors), each factor a vertex idempotent.
  inline StructureConstantAlgebra split_semisimple(std::size_t n) {
    std::vector<std::string> basis;
    std::vector<LinComb>     table(n * n);
    LinComb                  unit;
    std::vector<VertexIdempotent> idem;
    std::vector<Endpoints>        ends;
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back("e_" + std::to_string(i + 1));
      table[i * n + i] = basis_vector(i);
      unit.push_back({i, Rational(1)});
      idem.push_back({std::to_string(i + 1), i});
      ends.push_back({i, i});
    }
    return StructureConstantAlgebra(std::move(basis), std::move(table),
                                     std::move(unit), std::move(idem),
                                     std::move(ends));
  }

  //! The corner algebra spanned by a set of basis elements closed under
  //! multiplication and containing its own unit (e.g. all basis elements
  //! whose endpoints lie in one connected component).
  inline StructureConstantAlgebra corner(StructureConstantAlgebra const& a,
                                         std::vector<std::size_t> const& keep) {
    std::vector<std::size_t> local(a.dim(), a.dim());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      local[keep[i]] = i;
    }
    auto relabel = [&](LinComb const& v) {
      LinComb out;
      for (auto const& t : v) {
        if (local[t.index] == a.dim()) {
          throw Error(ErrorKind::invalid_argument,
                      "corner is not closed under multiplication");
        }
        out.push_back({local[t.index], t.coeff});
      }
      return out;
    };
    std::size_t const d = keep.size();
    std::vector<std::string> basis;
    std::vector<LinComb>     table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      basis.push_back(a.label(keep[i]));
      for (std::size_t j = 0; j < d; ++j) {
        table[i * d + j] = relabel(a.product(keep[i], keep[j]));
      }
    }
    LinComb unit;
    std::vector<VertexIdempotent> idem;
    std::vector<std::size_t>      vertex_local(a.idempotents().size(), 0);
    for (std::size_t v = 0; v < a.idempotents().size(); ++v) {
      auto const& e = a.idempotents()[v];
      if (local[e.basis_index] != a.dim()) {
        vertex_local[v] = idem.size();
        idem.push_back({e.vertex, local[e.basis_index]});
        unit.push_back({local[e.basis_index], Rational(1)});
      }
    }
    if (a.idempotents().empty()) {
      throw Error(ErrorKind::invalid_argument,
                  "corner algebras need vertex idempotents");
    }
    std::vector<Endpoints> ends;
    for (auto i : keep) {
      if (!a.endpoints().empty()) {
        auto e = a.endpoints()[i];
        ends.push_back({vertex_local[e.left], vertex_local[e.right]});
      }
    }
    return StructureConstantAlgebra(std::move(basis), std::move(table),
                                     std::move(unit), std::move(idem),
                                     std::move(ends));
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_ALGEBRA_HPP_
