#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgeo/exactmath.hpp"

namespace lgeo {

using Exponent = std::uint32_t;

class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  /// Grevlex on the first k variables, ties broken by grevlex on the rest.
  /// Eliminates the leading block.
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::block, k); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i is set when variable i (i < 64) occurs.
  std::uint64_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const;
  /// this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void refresh();
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Total order on monomials of equal length. Throws DimensionError on a
/// length mismatch.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

/// Ordered variable names plus a monomial order. Shared immutably.
class PolyRing {
 public:
  /// Names are canonicalized (p0 -> p_0); duplicates after canonicalization
  /// are rejected.
  static Ring make(std::vector<std::string> names,
                   MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  std::size_t index(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  PolyRing(std::vector<std::string> names, MonomialOrder order)
      : names_(std::move(names)), order_(order) {}
  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const Ring& a, const Ring& b);

/// "p0" and "p_0" name the same variable; the underscore form is canonical.
/// Throws InputError when `name` does not match the variable grammar.
std::string canonical_variable_name(std::string_view name);

/// Indexed names base_first .. base_last, e.g. ("p", 0, 2) -> p_0 p_1 p_2.
std::vector<std::string> indexed_names(std::string_view base, std::size_t first,
                                       std::size_t last);

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial over Q. Terms are strictly descending in the ring's
/// order with nonzero coefficients; zero has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, const Rational& c, Monomial m);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  /// Terms must already be canonical.
  static Polynomial from_canonical_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return is_zero() || (size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead() const { return terms_.front(); }
  const Rational& lead_coeff() const { return terms_.front().coeff; }
  const Monomial& lead_monomial() const { return terms_.front().mono; }

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  /// Homogeneous separately in each listed variable group.
  bool is_homogeneous_in(const std::vector<std::size_t>& vars) const;
  bool involves(std::size_t var) const;
  bool is_canonical() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;
  /// Integer coefficients with content 1 and a positive leading coefficient.
  Polynomial primitive() const;
  /// c * m * this
  Polynomial scaled(const Rational& c, const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, Polynomial f);

/// f - c * m * g, the basic reduction step.
Polynomial sub_scaled(const Polynomial& f, const Rational& c, const Monomial& m,
                      const Polynomial& g);

Polynomial pow(const Polynomial& f, unsigned e);

Polynomial differentiate(const Polynomial& f, std::size_t var);
Polynomial differentiate(const Polynomial& f, std::string_view var);

/// Substitutes polynomials (in f's ring) for variables; result stays in f's ring.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings);

/// Substitutes scalars. The result lives in `target` when given, otherwise
/// in f's ring restricted to the unbound variables.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Rational>& bindings,
                      Ring target = nullptr);

/// Value of f at a point given in ring-variable order.
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

/// Moves f into `target` by variable name. Every variable occurring in f
/// must exist in target.
Polynomial map_to_ring(const Polynomial& f, const Ring& target);

/// f's ring restricted to the variables not listed, keeping lex/grevlex and
/// falling back to grevlex for block orders.
Ring restricted_ring(const Ring& ring, const std::vector<std::string>& dropped);

/// Parses the polynomial grammar
///   expr := ['-'] term { ('+'|'-') term }
///   term := factor { '*' factor }
///   factor := rational | var ['^' natural] | '(' expr ')'
/// Throws ParseError with a location on syntax errors, InputError on
/// unknown variables.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

std::string print_polynomial(const Polynomial& f);

}  // namespace lgeo
