#ifndef HOCHSCHILD_ORACLE_HPP_
#define HOCHSCHILD_ORACLE_HPP_

// Brute-force Hochschild oracles over a structure-constant algebra.
//
// Every quantity is the dimension of the solution space of an explicit
// linear system, assembled in a fixed order: unknowns of a map
// Lambda^{(x)n} -> X are indexed by ((a_1 * d + a_2) * d + ...) * dim X + k,
// i.e. lexicographically in the basis tuple, then in the coordinate of X.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "quiver.hpp"

namespace hochschild {

  //! A bimodule X over a structure-constant algebra, given by the action of
  //! each basis element on each basis vector of X.
  class BimoduleRep {
   public:
    //! left[i][k] = b_i . x_k and right[i][k] = x_k . b_i
    BimoduleRep(StructureConstantAlgebra      algebra,
                std::size_t                   dim,
                std::vector<std::vector<LinComb>> left,
                std::vector<std::vector<LinComb>> right)
        : _algebra(std::move(algebra)),
          _dim(dim),
          _left(std::move(left)),
          _right(std::move(right)) {
      std::size_t const d = _algebra.dim();
      if (_left.size() != d || _right.size() != d) {
        throw Error(ErrorKind::invalid_bimodule, "one action per basis element");
      }
      for (std::size_t i = 0; i < d; ++i) {
        if (_left[i].size() != _dim || _right[i].size() != _dim) {
          throw Error(ErrorKind::invalid_bimodule, "action of wrong size");
        }
        for (std::size_t k = 0; k < _dim; ++k) {
          _left[i][k]  = normalize(std::move(_left[i][k]));
          _right[i][k] = normalize(std::move(_right[i][k]));
        }
      }
    }

    [[nodiscard]] StructureConstantAlgebra const& algebra() const noexcept {
      return _algebra;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] LinComb const& left(std::size_t i, std::size_t k) const {
      return _left[i][k];
    }
    [[nodiscard]] LinComb const& right(std::size_t i, std::size_t k) const {
      return _right[i][k];
    }

    [[nodiscard]] LinComb act_left(LinComb const& a, LinComb const& x) const {
      LinComb acc;
      for (auto const& s : a) {
        for (auto const& t : x) {
          axpy(acc, s.coeff * t.coeff, _left[s.index][t.index]);
        }
      }
      return normalize(std::move(acc));
    }
    [[nodiscard]] LinComb act_right(LinComb const& x, LinComb const& a) const {
      LinComb acc;
      for (auto const& t : x) {
        for (auto const& s : a) {
          axpy(acc, s.coeff * t.coeff, _right[s.index][t.index]);
        }
      }
      return normalize(std::move(acc));
    }

   private:
    StructureConstantAlgebra          _algebra;
    std::size_t                       _dim;
    std::vector<std::vector<LinComb>> _left;
    std::vector<std::vector<LinComb>> _right;
  };

  //! Throws invalid_bimodule unless both actions are compatible with the
  //! product, commute with each other, and the unit acts as the identity.
  inline void check_bimodule(BimoduleRep const& x) {
    auto const&       a = x.algebra();
    std::size_t const d = a.dim();
    auto fail = [](std::string const& what) {
      throw Error(ErrorKind::invalid_bimodule, what);
    };
    for (std::size_t k = 0; k < x.dim(); ++k) {
      auto xk = basis_vector(k);
      if (x.act_left(a.unit(), xk) != xk || x.act_right(xk, a.unit()) != xk) {
        fail("unit does not act as the identity");
      }
      for (std::size_t i = 0; i < d; ++i) {
        auto bi = basis_vector(i);
        for (std::size_t j = 0; j < d; ++j) {
          auto bj = basis_vector(j);
          auto const& ij = a.product(i, j);
          if (x.act_left(ij, xk) != x.act_left(bi, x.act_left(bj, xk))) {
            fail("left action is not multiplicative at " + a.label(i) + ", "
                 + a.label(j));
          }
          if (x.act_right(xk, ij) != x.act_right(x.act_right(xk, bi), bj)) {
            fail("right action is not multiplicative at " + a.label(i) + ", "
                 + a.label(j));
          }
          if (x.act_right(x.act_left(bi, xk), bj)
              != x.act_left(bi, x.act_right(xk, bj))) {
            fail("actions do not commute at " + a.label(i) + ", " + a.label(j));
          }
        }
      }
    }
  }

  //! The algebra as a bimodule over itself.
  inline BimoduleRep regular_bimodule(StructureConstantAlgebra const& a) {
    std::size_t const d = a.dim();
    std::vector<std::vector<LinComb>> left(d, std::vector<LinComb>(d));
    std::vector<std::vector<LinComb>> right(d, std::vector<LinComb>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        left[i][k]  = a.product(i, k);
        right[i][k] = a.product(k, i);
      }
    }
    return BimoduleRep(a, d, std::move(left), std::move(right));
  }

  //! Restriction of scalars along an algebra map: source basis element i
  //! acts through hom[i], a combination of basis elements of x's algebra.
  inline BimoduleRep pullback(BimoduleRep const&              x,
                              StructureConstantAlgebra const& source,
                              std::vector<LinComb> const&     hom) {
    if (hom.size() != source.dim()) {
      throw Error(ErrorKind::invalid_argument, "one image per basis element");
    }
    std::size_t const d = source.dim();
    std::vector<std::vector<LinComb>> left(d, std::vector<LinComb>(x.dim()));
    std::vector<std::vector<LinComb>> right(d, std::vector<LinComb>(x.dim()));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < x.dim(); ++k) {
        left[i][k]  = x.act_left(hom[i], basis_vector(k));
        right[i][k] = x.act_right(basis_vector(k), hom[i]);
      }
    }
    return BimoduleRep(source, x.dim(), std::move(left), std::move(right));
  }

  //! The map matching basis labels of source to those of target, sending
  //! unmatched labels to zero: the quotient map kQ -> kQ/I on path bases.
  inline std::vector<LinComb> label_projection(StructureConstantAlgebra const& source,
                                               StructureConstantAlgebra const& target) {
    std::vector<LinComb> hom(source.dim());
    for (std::size_t i = 0; i < source.dim(); ++i) {
      if (auto j = target.find(source.label(i))) {
        hom[i] = basis_vector(*j);
      }
    }
    return hom;
  }

  namespace detail {
    // Accumulates a vector-valued linear equation: for each unknown column,
    // the vector in X it contributes. Emitted as dim X scalar rows.
    class EquationBlock {
     public:
      void add(std::size_t col, Rational const& c, LinComb const& v) {
        if (c == 0) {
          return;
        }
        for (auto const& t : v) {
          _rows[t.index].push_back({col, c * t.coeff});
        }
      }
      void add_unit(std::size_t col, Rational const& c, std::size_t k) {
        if (c != 0) {
          _rows[k].push_back({col, c});
        }
      }
      //! Exactly count rows, empty ones included.
      void emit_all(ExactMatrix& m, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
          auto it = _rows.find(k);
          m.append_row(it == _rows.end() ? ExactMatrix::Row{} : std::move(it->second));
        }
        _rows.clear();
      }
      void emit(ExactMatrix& m) {
        for (auto& [k, row] : _rows) {
          m.append_row(std::move(row));
        }
        _rows.clear();
      }

     private:
      std::map<std::size_t, ExactMatrix::Row> _rows;
    };
  }  // namespace detail

  //! dim X^Lambda = { v : b v = v b for all basis b } = H^0(Lambda, X).
  inline std::size_t invariants_dim(BimoduleRep const& x,
                                    Field field = Field::rational()) {
    std::size_t const d = x.algebra().dim();
    ExactMatrix       m(0, x.dim());
    for (std::size_t i = 0; i < d; ++i) {
      detail::EquationBlock eq;
      for (std::size_t k = 0; k < x.dim(); ++k) {
        eq.add(k, Rational(1), x.left(i, k));
        eq.add(k, Rational(-1), x.right(i, k));
      }
      eq.emit(m);
    }
    return kernel_dim(m, field);
  }

  //! dim Z(Lambda) from the commutator system z b_j - b_j z = 0.
  inline std::size_t center_dim(StructureConstantAlgebra const& a,
                                Field field = Field::rational()) {
    std::size_t const d = a.dim();
    ExactMatrix       m(0, d);
    for (std::size_t j = 0; j < d; ++j) {
      detail::EquationBlock eq;
      for (std::size_t k = 0; k < d; ++k) {
        eq.add(k, Rational(1), a.product(k, j));
        eq.add(k, Rational(-1), a.product(j, k));
      }
      eq.emit(m);
    }
    return kernel_dim(m, field);
  }

  //! Dimension of the space of linear maps f : Lambda -> X with
  //! f(b_i b_j) = b_i f(b_j) + f(b_i) b_j for all basis pairs. Unknown
  //! (i, k) is the x_k-coordinate of f(b_i), at column i * dim X + k.
  inline std::size_t derivation_space_dim(BimoduleRep const& x,
                                          Field field = Field::rational()) {
    auto const&       a  = x.algebra();
    std::size_t const d  = a.dim();
    std::size_t const dx = x.dim();
    ExactMatrix       m(0, d * dx);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        detail::EquationBlock eq;
        for (auto const& t : a.product(i, j)) {
          for (std::size_t k = 0; k < dx; ++k) {
            eq.add_unit(t.index * dx + k, t.coeff, k);
          }
        }
        for (std::size_t k = 0; k < dx; ++k) {
          eq.add(j * dx + k, Rational(-1), x.left(i, k));
          eq.add(i * dx + k, Rational(-1), x.right(j, k));
        }
        eq.emit(m);
      }
    }
    return kernel_dim(m, field);
  }

  //! Inner derivations ad_v(b) = b v - v b; the map v -> ad_v has kernel
  //! X^Lambda.
  inline std::size_t inner_dim(BimoduleRep const& x,
                               Field field = Field::rational()) {
    return x.dim() - invariants_dim(x, field);
  }

  //! dim H^1(Lambda, X): derivations modulo inner derivations.
  inline std::size_t h1_oracle(BimoduleRep const& x,
                               Field              field = Field::rational()) {
    return derivation_space_dim(x, field) - inner_dim(x, field);
  }

  inline std::size_t h1_oracle(StructureConstantAlgebra const& a,
                               Field field = Field::rational()) {
    return h1_oracle(regular_bimodule(a), field);
  }

  //! Matrix of the Hochschild coboundary C^n -> C^{n+1}, where
  //! C^n = Hom(Lambda^{(x)n}, X). The value of f at (b_i1..b_in) on x_k sits
  //! at index ((i1*d + i2)*d + ...)*dim X + k, for rows and columns alike:
  //!   (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
  //!                        + (-1)^{n+1} f(a_1..a_n) a_{n+1}
  inline ExactMatrix coboundary_matrix(BimoduleRep const& x, std::size_t n) {
    auto const&       a  = x.algebra();
    std::size_t const d  = a.dim();
    std::size_t const dx = x.dim();
    std::size_t       cn = dx;
    for (std::size_t i = 0; i < n; ++i) {
      cn *= d;
    }
    ExactMatrix m(0, cn);
    std::vector<std::size_t> tuple(n + 1, 0);
    // column of (f-arguments..., k)
    auto column = [&](auto first, auto last, std::size_t k) {
      std::size_t c = 0;
      for (auto it = first; it != last; ++it) {
        c = c * d + *it;
      }
      return c * dx + k;
    };
    while (true) {
      detail::EquationBlock eq;
      for (std::size_t k = 0; k < dx; ++k) {
        eq.add(column(tuple.begin() + 1, tuple.end(), k), Rational(1),
               x.left(tuple[0], k));
        Rational sign = (n + 1) % 2 == 0 ? Rational(1) : Rational(-1);
        eq.add(column(tuple.begin(), tuple.end() - 1, k), sign,
               x.right(tuple[n], k));
      }
      for (std::size_t i = 0; i < n; ++i) {
        Rational sign = (i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
        std::vector<std::size_t> args;
        args.reserve(n);
        for (auto const& t : a.product(tuple[i], tuple[i + 1])) {
          args.assign(tuple.begin(), tuple.begin() + i);
          args.push_back(t.index);
          args.insert(args.end(), tuple.begin() + i + 2, tuple.end());
          for (std::size_t k = 0; k < dx; ++k) {
            eq.add_unit(column(args.begin(), args.end(), k), sign * t.coeff, k);
          }
        }
      }
      eq.emit_all(m, dx);
      // next tuple, lexicographic
      std::size_t pos = n + 1;
      while (pos > 0 && ++tuple[pos - 1] == d) {
        tuple[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) {
        break;
      }
    }
    return m;
  }

  struct BarOptions {
    //! Largest algebra dimension for which degree 2 is attempted.
    std::size_t max_dim_degree2 = 12;
    Field       field           = Field::rational();
  };

  //! dim H^n(Lambda, X) for n in {0, 1, 2} from the ranks of the adjacent
  //! coboundaries of the standard cochain complex.
  inline std::size_t bar_cohomology_dim(BimoduleRep const& x, std::size_t degree,
                                        BarOptions const& opts = {}) {
    if (degree > 2) {
      throw Error(ErrorKind::invalid_argument, "degree must be 0, 1 or 2");
    }
    std::size_t const d = x.algebra().dim();
    if (degree == 2 && d > opts.max_dim_degree2) {
      throw Error(ErrorKind::dimension_guard,
                  "degree 2 needs dim <= " + std::to_string(opts.max_dim_degree2)
                      + ", got " + std::to_string(d));
    }
    auto outgoing = coboundary_matrix(x, degree);
    std::size_t kernel = kernel_dim(outgoing, opts.field);
    if (degree == 0) {
      return kernel;
    }
    return kernel - rank(coboundary_matrix(x, degree - 1), opts.field);
  }

  //! H^1(kQ, X) for a bimodule X over the path algebra of an acyclic quiver.
  inline std::size_t derivations_with_coefficients(Quiver const&      q,
                                                   BimoduleRep const& x,
                                                   Field field = Field::rational()) {
    if (!is_acyclic(q)) {
      throw Error(ErrorKind::cyclic_unsupported,
                  "the path algebra is infinite-dimensional");
    }
    if (x.algebra().idempotents().size() != q.vertex_count()) {
      throw Error(ErrorKind::invalid_argument,
                  "bimodule is not over the path algebra of this quiver");
    }
    return h1_oracle(x, field);
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_ORACLE_HPP_
