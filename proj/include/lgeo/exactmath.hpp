#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lgeo {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or a decimal literal such as "0.3" into an exact,
/// canonical rational. Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Prints n, or n/d when the denominator is not 1.
std::string to_string(const Rational& q);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<BigInt> row(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;

  IntMatrix transpose() const;
  /// Rows [first, last).
  IntMatrix row_block(std::size_t first, std::size_t last) const;
  /// Stacks `other` below this matrix; column counts must agree.
  IntMatrix stacked(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct HermiteResult {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular transform, U * M == H
};

/// Row-style Hermite normal form by extended-gcd elimination.
///
/// H is upper echelon, pivots are positive, entries above a pivot lie in
/// [0, pivot), and zero rows come last. Empty input yields empty output.
HermiteResult hnf(const IntMatrix& m);

/// Rank over the rationals (number of nonzero rows of the HNF).
std::size_t rank(const IntMatrix& m);

/// HNF-reduced Z-basis of {v : M v = 0}, one basis vector per row.
/// The result has cols(M) columns and cols(M) - rank(M) rows.
IntMatrix integer_kernel(const IntMatrix& m);

/// True iff the Z-row-spans of a and b coincide.
bool lattice_span_equal(const IntMatrix& a, const IntMatrix& b);

/// Determinant of a square matrix (fraction-free Bareiss).
BigInt determinant(const IntMatrix& m);

/// Matrix text format: one row per line, base-10 integers separated by
/// spaces, blank lines ignored, '#' starts a comment.
IntMatrix parse_int_matrix(std::string_view text);
std::string format_int_matrix(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace lgeo
