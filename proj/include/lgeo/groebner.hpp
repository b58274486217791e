#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lgeo/exactmath.hpp"
#include "lgeo/ring.hpp"

namespace lgeo {

/// Generators of an ideal in a fixed ring; zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(Ring ring) : ring_(std::move(ring)) {}
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  /// Same generators moved into `target` by variable name.
  Ideal mapped(const Ring& target) const;

  friend Ideal operator+(const Ideal& a, const Ideal& b);

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic, minimal, tail-reduced, sorted by
/// ascending leading monomial.
class GroebnerBasis {
 public:
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const MonomialOrder& order() const { return ideal_.ring()->order(); }
  const Ring& ring() const { return ideal_.ring(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  /// The basis as an ideal in the same ring.
  Ideal as_ideal() const { return Ideal(ring(), basis_); }

 private:
  GroebnerBasis(Ideal ideal, std::vector<Polynomial> basis)
      : ideal_(std::move(ideal)), basis_(std::move(basis)) {}
  friend GroebnerBasis buchberger(const Ideal& ideal);

  Ideal ideal_;
  std::vector<Polynomial> basis_;
};

/// Rectangular matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, const std::vector<std::vector<Polynomial>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix transpose() const;
  PolyMatrix with_rows_swapped(std::size_t a, std::size_t b) const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Multivariate division remainder. Reduces leading terms first and always
/// uses the first divisor in list order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis under the ring's order. Buchberger with sugar
/// pair selection and the Gebauer-Moeller criteria.
GroebnerBasis buchberger(const Ideal& ideal);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);
bool ideal_contains(const Ideal& ideal, const Polynomial& f);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// a ∩ ring without its first k variables, generated by the t-free part of
/// a block(k) basis. The result ring drops those variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// ideal : f^∞ by adding t*f - 1 and eliminating t. The result is the
/// reduced basis in ideal's ring.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// ideal : (f_1 ... f_m)^∞ by single saturations in list order.
Ideal saturate_by_product(const Ideal& ideal, const std::vector<Polynomial>& factors);

/// ideal : other^∞ as the intersection of the saturations by each
/// generator of other.
Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& other);

Ideal intersect(const Ideal& a, const Ideal& b);

/// Ideal of all k x k minors (Laplace expansion).
Ideal minors(std::size_t k, const PolyMatrix& m);

Polynomial determinant(const PolyMatrix& m);

PolyMatrix operator*(const IntMatrix& a, const PolyMatrix& m);

bool is_zero_dimensional(const GroebnerBasis& gb);

/// Krull dimension of the quotient ring from the leading-term ideal.
std::size_t krull_dimension(const GroebnerBasis& gb);

inline constexpr std::uint64_t kStandardMonomialCap = 1'000'000;

/// Number of standard monomials. Throws ComputationError for positive
/// dimensional ideals and GuardrailError when the enumeration box exceeds
/// `cap` monomials.
std::uint64_t quotient_dimension(const GroebnerBasis& gb,
                                 std::uint64_t cap = kStandardMonomialCap);

}  // namespace lgeo
