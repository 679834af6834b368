#ifndef HOCHSCHILD_EXACT_HPP_
#define HOCHSCHILD_EXACT_HPP_

// Exact linear algebra over the rationals and over prime fields.
//
// Matrices are stored as sparse rationals. Rank over Q clears denominators
// row by row and eliminates fraction-free on primitive integer rows; rank
// over F_p reduces every entry modulo p first.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hochschild {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  //! Selects the coefficient field of a computation: Q, or F_p for a prime
  //! p < 2^31.
  class Field {
   public:
    static Field rational() noexcept {
      return Field(0);
    }

    static Field prime(std::uint64_t p) {
      if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
        throw Error(ErrorKind::invalid_argument,
                    "field characteristic must be a prime below 2^31, got "
                        + std::to_string(p));
      }
      return Field(p);
    }

    [[nodiscard]] bool is_rational() const noexcept {
      return _p == 0;
    }
    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return _p;
    }

    //! "q" or "fp:<p>"
    [[nodiscard]] std::string name() const {
      return is_rational() ? "q" : "fp:" + std::to_string(_p);
    }

    static Field parse(std::string const& s) {
      if (s == "q" || s == "Q") {
        return rational();
      }
      if (s.rfind("fp:", 0) == 0 && s.size() > 3
          && std::all_of(s.begin() + 3, s.end(),
                         [](char c) { return c >= '0' && c <= '9'; })
          && s.size() <= 13) {
        return prime(std::stoull(s.substr(3)));
      }
      throw Error(ErrorKind::invalid_argument, "unknown field '" + s + "'");
    }

    bool operator==(Field const&) const = default;

    static bool is_prime(std::uint64_t n) noexcept {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

   private:
    explicit Field(std::uint64_t p) noexcept : _p(p) {}
    std::uint64_t _p;
  };

  //! An element of F_p, stored in [0, p).
  class Residue {
   public:
    Residue(std::uint64_t value, std::uint64_t p) noexcept
        : _v(value % p), _p(p) {}

    //! Throws invalid_argument when p divides the denominator.
    static Residue from_rational(Rational const& q, std::uint64_t p) {
      auto reduce = [p](Integer const& z) {
        Integer r = z % static_cast<unsigned long>(p);
        if (r < 0) {
          r += static_cast<unsigned long>(p);
        }
        return r.get_ui();
      };
      Residue num(reduce(q.get_num()), p);
      Residue den(reduce(q.get_den()), p);
      if (den._v == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "prime " + std::to_string(p) + " divides a denominator");
      }
      return num * den.inverse();
    }

    [[nodiscard]] std::uint64_t value() const noexcept {
      return _v;
    }
    [[nodiscard]] std::uint64_t modulus() const noexcept {
      return _p;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _v == 0;
    }

    Residue operator+(Residue that) const noexcept {
      return Residue(_v + that._v, _p);
    }
    Residue operator-(Residue that) const noexcept {
      return Residue(_v + _p - that._v, _p);
    }
    Residue operator*(Residue that) const noexcept {
      return Residue(_v * that._v, _p);
    }
    Residue operator-() const noexcept {
      return Residue(_p - _v, _p);
    }

    [[nodiscard]] Residue inverse() const {
      if (_v == 0) {
        throw Error(ErrorKind::invalid_argument, "inverse of zero");
      }
      // Fermat: v^(p-2)
      std::uint64_t result = 1, base = _v, e = _p - 2;
      while (e != 0) {
        if (e & 1U) {
          result = result * base % _p;
        }
        base = base * base % _p;
        e >>= 1U;
      }
      return Residue(result, _p);
    }

    bool operator==(Residue const&) const = default;

   private:
    std::uint64_t _v;
    std::uint64_t _p;
  };

  //! A sparse matrix with exact rational entries. Entries added to the same
  //! position accumulate.
  class ExactMatrix {
   public:
    struct Entry {
      std::size_t col;
      Rational    value;
    };
    using Row = std::vector<Entry>;

    ExactMatrix(std::size_t rows, std::size_t cols) : _cols(cols), _rows(rows) {}

    static ExactMatrix from_dense(
        std::initializer_list<std::initializer_list<long>> rows) {
      std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
      ExactMatrix m(0, cols);
      for (auto const& r : rows) {
        if (r.size() != cols) {
          throw Error(ErrorKind::invalid_argument, "ragged dense matrix");
        }
        Row row;
        std::size_t c = 0;
        for (long v : r) {
          if (v != 0) {
            row.push_back({c, Rational(v)});
          }
          ++c;
        }
        m.append_row(std::move(row));
      }
      return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows.size();
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }

    void add(std::size_t r, std::size_t c, Rational const& v) {
      check_col(c);
      if (r >= _rows.size()) {
        throw Error(ErrorKind::invalid_argument, "row index out of range");
      }
      if (v != 0) {
        _rows[r].push_back({c, v});
      }
    }

    void append_row(Row row) {
      for (auto const& e : row) {
        check_col(e.col);
      }
      _rows.push_back(std::move(row));
    }

    //! Row r with entries sorted by column, merged and without zeros.
    [[nodiscard]] Row normalized_row(std::size_t r) const {
      Row row = _rows.at(r);
      std::sort(row.begin(), row.end(),
                [](Entry const& a, Entry const& b) { return a.col < b.col; });
      Row out;
      for (auto& e : row) {
        if (!out.empty() && out.back().col == e.col) {
          out.back().value += e.value;
        } else {
          out.push_back(std::move(e));
        }
        if (out.back().value == 0) {
          out.pop_back();
        }
      }
      return out;
    }

    [[nodiscard]] Rational at(std::size_t r, std::size_t c) const {
      Rational v = 0;
      for (auto const& e : _rows.at(r)) {
        if (e.col == c) {
          v += e.value;
        }
      }
      return v;
    }

    [[nodiscard]] ExactMatrix multiply(ExactMatrix const& that) const {
      if (_cols != that.rows()) {
        throw Error(ErrorKind::invalid_argument, "dimension mismatch in product");
      }
      ExactMatrix out(0, that.cols());
      for (std::size_t r = 0; r < rows(); ++r) {
        Row acc;
        for (auto const& e : normalized_row(r)) {
          for (auto const& f : that._rows[e.col]) {
            acc.push_back({f.col, e.value * f.value});
          }
        }
        out.append_row(std::move(acc));
      }
      return out;
    }

    [[nodiscard]] bool is_zero() const {
      for (std::size_t r = 0; r < rows(); ++r) {
        if (!normalized_row(r).empty()) {
          return false;
        }
      }
      return true;
    }

   private:
    void check_col(std::size_t c) const {
      if (c >= _cols) {
        throw Error(ErrorKind::invalid_argument, "column index out of range");
      }
    }

    std::size_t      _cols;
    std::vector<Row> _rows;
  };

  namespace detail {

    // Incremental row echelon form: rows are inserted one at a time and
    // reduced on their leading entry against the stored pivots.
    class IntegerEchelon {
     public:
      using Row = std::vector<std::pair<std::size_t, Integer>>;

      explicit IntegerEchelon(std::size_t cols) : _pivots(cols) {}

      std::size_t rank() const noexcept {
        return _rank;
      }

      void insert(Row row) {
        while (!row.empty()) {
          auto& pivot = _pivots[row.front().first];
          if (pivot.empty()) {
            if (row.front().second < 0) {
              for (auto& e : row) {
                e.second = -e.second;
              }
            }
            pivot = std::move(row);
            ++_rank;
            return;
          }
          row = eliminate(row, pivot);
        }
      }

      // Primitive integer row proportional to a rational row.
      static Row primitive(ExactMatrix::Row const& r) {
        Integer lcm = 1;
        for (auto const& e : r) {
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
        }
        Row out;
        out.reserve(r.size());
        for (auto const& e : r) {
          Integer v = e.value.get_num() * (lcm / e.value.get_den());
          out.emplace_back(e.col, std::move(v));
        }
        make_primitive(out);
        return out;
      }

     private:
      static void make_primitive(Row& row) {
        Integer g = 0;
        for (auto const& e : row) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
          if (g == 1) {
            return;
          }
        }
        if (g > 1) {
          for (auto& e : row) {
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
          }
        }
      }

      // lead(p) * row - lead(row) * p, which cancels the leading entry.
      static Row eliminate(Row const& row, Row const& p) {
        Integer a = p.front().second;
        Integer b = row.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        Row out;
        out.reserve(row.size() + p.size());
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < p.size()) {
          if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
          } else if (i == row.size() || p[j].first < row[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
          } else {
            Integer v = a * row[i].second - b * p[j].second;
            if (v != 0) {
              out.emplace_back(row[i].first, std::move(v));
            }
            ++i;
            ++j;
          }
        }
        make_primitive(out);
        return out;
      }

      std::vector<Row> _pivots;
      std::size_t      _rank = 0;
    };

    class ModularEchelon {
     public:
      using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;

      ModularEchelon(std::size_t cols, std::uint64_t p) : _pivots(cols), _p(p) {}

      std::size_t rank() const noexcept {
        return _rank;
      }

      void insert(Row row) {
        while (!row.empty()) {
          auto& pivot = _pivots[row.front().first];
          if (pivot.empty()) {
            std::uint64_t inv = Residue(row.front().second, _p).inverse().value();
            for (auto& e : row) {
              e.second = e.second * inv % _p;
            }
            pivot = std::move(row);
            ++_rank;
            return;
          }
          row = eliminate(row, pivot);
        }
      }

     private:
      // row - lead(row) * p, where p is monic.
      Row eliminate(Row const& row, Row const& p) const {
        std::uint64_t c = row.front().second;
        Row out;
        out.reserve(row.size() + p.size());
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < p.size()) {
          if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
            out.push_back(row[i]);
            ++i;
          } else if (i == row.size() || p[j].first < row[i].first) {
            out.emplace_back(p[j].first, (_p - c * p[j].second % _p) % _p);
            ++j;
          } else {
            std::uint64_t v = (row[i].second + _p - c * p[j].second % _p) % _p;
            if (v != 0) {
              out.emplace_back(row[i].first, v);
            }
            ++i;
            ++j;
          }
        }
        return out;
      }

      std::vector<Row> _pivots;
      std::uint64_t    _p;
      std::size_t      _rank = 0;
    };

  }  // namespace detail

  //! Exact rank over the given field.
  inline std::size_t rank(ExactMatrix const& m, Field field = Field::rational()) {
    if (field.is_rational()) {
      detail::IntegerEchelon echelon(m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.normalized_row(r);
        if (!row.empty()) {
          echelon.insert(detail::IntegerEchelon::primitive(row));
        }
        if (echelon.rank() == m.cols()) {
          break;
        }
      }
      return echelon.rank();
    }
    std::uint64_t const p = field.characteristic();
    detail::ModularEchelon echelon(m.cols(), p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      detail::ModularEchelon::Row row;
      for (auto const& e : m.normalized_row(r)) {
        auto v = Residue::from_rational(e.value, p);
        if (!v.is_zero()) {
          row.emplace_back(e.col, v.value());
        }
      }
      if (!row.empty()) {
        echelon.insert(std::move(row));
      }
      if (echelon.rank() == m.cols()) {
        break;
      }
    }
    return echelon.rank();
  }

  inline std::size_t kernel_dim(ExactMatrix const& m,
                                Field              field = Field::rational()) {
    return m.cols() - rank(m, field);
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_EXACT_HPP_
