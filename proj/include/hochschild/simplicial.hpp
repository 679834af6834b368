#ifndef HOCHSCHILD_SIMPLICIAL_HPP_
#define HOCHSCHILD_SIMPLICIAL_HPP_

// Order complexes of finite posets, their cohomology in degrees 0 and 1,
// and the comparison with H^1 of the incidence algebra.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "oracle.hpp"
#include "poset.hpp"

namespace hochschild {

  //! Strict chains x0 < ... < xp of a poset for p = 0, 1, 2, each chain
  //! listed in increasing order, chains in lexicographic order.
  struct OrderComplex {
    std::array<std::vector<std::vector<std::size_t>>, 3> simplices_by_dim;

    [[nodiscard]] std::vector<std::vector<std::size_t>> const& simplices(
        std::size_t p) const {
      return simplices_by_dim.at(p);
    }
  };

  inline OrderComplex order_complex(Poset const& p) {
    OrderComplex c;
    std::size_t const n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
      c.simplices_by_dim[0].push_back({a});
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (p.less(a, b)) {
          c.simplices_by_dim[1].push_back({a, b});
        }
      }
    }
    for (auto const& e : c.simplices_by_dim[1]) {
      for (std::size_t x = 0; x < n; ++x) {
        if (p.less(e[1], x)) {
          c.simplices_by_dim[2].push_back({e[0], e[1], x});
        }
      }
    }
    for (auto& s : c.simplices_by_dim) {
      std::sort(s.begin(), s.end());
    }
    return c;
  }

  //! Matrix of the coboundary C^p -> C^{p+1} (p in {0, 1}): rows are
  //! (p+1)-simplices, columns p-simplices, entry (-1)^i for the i-th face.
  inline ExactMatrix simplicial_coboundary(OrderComplex const& c, std::size_t p) {
    if (p > 1) {
      throw Error(ErrorKind::invalid_argument, "coboundary degree must be 0 or 1");
    }
    auto const& faces = c.simplices(p);
    ExactMatrix m(0, faces.size());
    for (auto const& s : c.simplices(p + 1)) {
      ExactMatrix::Row row;
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = std::lower_bound(faces.begin(), faces.end(), face);
        if (it == faces.end() || *it != face) {
          throw Error(ErrorKind::invalid_argument, "complex is not closed under faces");
        }
        row.push_back({static_cast<std::size_t>(std::distance(faces.begin(), it)),
                       Rational(i % 2 == 0 ? 1 : -1)});
      }
      m.append_row(std::move(row));
    }
    return m;
  }

  //! Unreduced cohomology with field coefficients in degree 0 or 1. Checks
  //! that the two coboundaries compose to zero.
  inline std::size_t simplicial_h_dim(OrderComplex const& c, std::size_t degree,
                                      Field field = Field::rational()) {
    if (degree > 1) {
      throw Error(ErrorKind::invalid_argument, "degree must be 0 or 1");
    }
    auto d0 = simplicial_coboundary(c, 0);
    auto d1 = simplicial_coboundary(c, 1);
    if (!d1.multiply(d0).is_zero()) {
      throw Error(ErrorKind::invalid_argument, "coboundaries do not compose to zero");
    }
    if (degree == 0) {
      return kernel_dim(d0, field);
    }
    return kernel_dim(d1, field) - rank(d0, field);
  }

  struct ComparisonReport {
    std::size_t dim_h1_incidence;
    std::size_t dim_h1_simplicial;
    bool        agree;
  };

  //! H^1 of the incidence algebra (oracle) against H^1 of the order complex.
  //! Throws dimension_guard when the incidence algebra exceeds max_dim.
  inline ComparisonReport gs_compare(Poset const& p, Field field = Field::rational(),
                                     std::size_t max_dim = 64) {
    auto a = incidence_algebra(p);
    if (a.dim() > max_dim) {
      throw Error(ErrorKind::dimension_guard,
                  "incidence algebra of dimension " + std::to_string(a.dim()));
    }
    std::size_t alg  = h1_oracle(a, field);
    std::size_t simp = simplicial_h_dim(order_complex(p), 1, field);
    return {alg, simp, alg == simp};
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_SIMPLICIAL_HPP_
