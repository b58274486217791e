#include "lgeo/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "lgeo/errors.hpp"

namespace lgeo {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0 && i < 64) mask_ |= std::uint64_t{1} << i;
  }
}

void Monomial::set(std::size_t i, Exponent e) {
  exps_[i] = e;
  refresh();
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.refresh();
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionError("monomial length mismatch");
  Monomial p = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.exps_[i] > std::numeric_limits<Exponent>::max() - a.exps_[i])
      throw InputError("exponent overflow");
    p.exps_[i] += b.exps_[i];
  }
  p.degree_ = a.degree_ + b.degree_;
  p.mask_ = a.mask_ | b.mask_;
  return p;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.size() <= 64) return (a.support_mask() & b.support_mask()) == 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

namespace {

// Grevlex restricted to variables [first, last).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t first,
                                   std::size_t last) {
  std::uint64_t da = 0, db = 0;
  if (first == 0 && last == a.size()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = first; i < last; ++i) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = last; i-- > first;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  switch (order.kind()) {
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::grevlex:
      return grevlex_range(a, b, 0, a.size());
    case MonomialOrder::Kind::block: {
      const std::size_t k = std::min(order.block_size(), a.size());
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return std::strong_ordering::equal;
}

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string strip_leading_zeros(std::string_view digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return std::string(digits.substr(i));
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  if (a.size() != b.size()) throw DimensionError("comparing monomials of different lengths");
  return compare_unchecked(a, b, order);
}

std::string canonical_variable_name(std::string_view name) {
  auto bad = [&] { throw InputError("invalid variable name '" + std::string(name) + "'"); };
  if (name.empty() || !is_letter(name.front())) bad();
  const auto underscore = name.find('_');
  if (underscore != std::string_view::npos) {
    auto base = name.substr(0, underscore);
    auto index = name.substr(underscore + 1);
    if (index.empty() || !std::all_of(index.begin(), index.end(), is_digit)) bad();
    if (!std::all_of(base.begin(), base.end(), [](char c) { return is_letter(c) || is_digit(c); }))
      bad();
    return std::string(base) + "_" + strip_leading_zeros(index);
  }
  if (!std::all_of(name.begin(), name.end(), [](char c) { return is_letter(c) || is_digit(c); }))
    bad();
  std::size_t split = name.size();
  while (split > 0 && is_digit(name[split - 1])) --split;
  if (split == name.size()) return std::string(name);
  return std::string(name.substr(0, split)) + "_" + strip_leading_zeros(name.substr(split));
}

std::vector<std::string> indexed_names(std::string_view base, std::size_t first,
                                       std::size_t last) {
  std::vector<std::string> names;
  for (std::size_t i = first; i <= last; ++i) names.push_back(std::string(base) + "_" + std::to_string(i));
  return names;
}

Ring PolyRing::make(std::vector<std::string> names, MonomialOrder order) {
  if (names.empty()) throw InputError("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (auto& n : names) {
    n = canonical_variable_name(n);
    if (!seen.insert(n).second) throw InputError("duplicate variable '" + n + "'");
  }
  if (order.kind() == MonomialOrder::Kind::block &&
      (order.block_size() < 1 || order.block_size() >= names.size()))
    throw InputError("block order size must lie in [1, nvars)");
  return Ring(new PolyRing(std::move(names), order));
}

std::optional<std::size_t> PolyRing::find(std::string_view name) const {
  std::string canon;
  try {
    canon = canonical_variable_name(name);
  } catch (const InputError&) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == canon) return i;
  return std::nullopt;
}

std::size_t PolyRing::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

std::strong_ordering PolyRing::compare(const Monomial& a, const Monomial& b) const {
  return compare_unchecked(a, b, order_);
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatchError();
}

// a + sign * b, both canonical.
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{-b[j].coeff, b[j].mono} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{-b[j].coeff, b[j].mono} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  Rational q = c;
  q.canonicalize();
  if (q != 0) p.terms_.push_back(Term{std::move(q), Monomial(p.ring_->nvars())});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->nvars()) throw InputError("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), 1, std::move(m));
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  const std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(Ring ring, const Rational& c, Monomial m) {
  if (m.size() != ring->nvars()) throw DimensionError("monomial length does not match ring");
  Polynomial p(std::move(ring));
  Rational q = c;
  q.canonicalize();
  if (q != 0) p.terms_.push_back(Term{std::move(q), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DimensionError("monomial length does not match ring");
    t.coeff.canonicalize();
  }
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_canonical_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_canonical_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
#ifndef NDEBUG
  if (!p.is_canonical()) throw Error("internal: non-canonical term list");
#endif
  return p;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) return false;
    if (terms_[i].mono.size() != ring_->nvars()) return false;
    if (i > 0 && ring_->compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::is_homogeneous_in(const std::vector<std::size_t>& vars) const {
  auto partial = [&](const Monomial& m) {
    std::uint64_t d = 0;
    for (auto v : vars) d += m[v];
    return d;
  };
  for (const auto& t : terms_)
    if (partial(t.mono) != partial(terms_.front().mono)) return false;
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  require_same_ring(*this, g);
  const Polynomial& small = size() <= g.size() ? *this : g;
  const Polynomial& large = size() <= g.size() ? g : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) acc = merge(*ring_, acc, large.scaled(t.coeff, t.mono).terms_, false);
  terms_ = std::move(acc);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) p.terms_.push_back(Term{c * t.coeff, t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational inv = 1 / lead_coeff();
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  BigInt den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& t : terms_) {
    BigInt num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (lead_coeff() < 0) scale = -scale;
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= scale;
  return p;
}

std::string Polynomial::to_string() const { return print_polynomial(*this); }

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].coeff != g.terms_[i].coeff || !(f.terms_[i].mono == g.terms_[i].mono))
      return false;
  return true;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  Polynomial p = f;
  return p *= g;
}
Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

Polynomial sub_scaled(const Polynomial& f, const Rational& c, const Monomial& m,
                      const Polynomial& g) {
  require_same_ring(f, g);
  const Polynomial s = g.scaled(c, m);
  return Polynomial::from_canonical_terms(f.ring(), merge(*f.ring(), f.terms(), s.terms(), true));
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial differentiate(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw InputError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const Exponent e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    terms.push_back(Term{t.coeff * e, std::move(m)});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial differentiate(const Polynomial& f, std::string_view var) {
  return differentiate(f, f.ring()->index(var));
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings) {
  const Ring& ring = f.ring();
  std::vector<const Polynomial*> image(ring->nvars(), nullptr);
  for (const auto& [name, value] : bindings) {
    if (!same_ring(value.ring(), ring)) throw RingMismatchError("binding for '" + name + "' lives in another ring");
    image[ring->index(name)] = &value;
  }
  Polynomial result(ring);
  for (const auto& t : f.terms()) {
    Monomial kept(ring->nvars());
    Polynomial factor = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (image[i]) {
        factor *= pow(*image[i], t.mono[i]);
      } else {
        kept.set(i, t.mono[i]);
      }
    }
    result += factor.scaled(1, kept);
  }
  return result;
}

Ring restricted_ring(const Ring& ring, const std::vector<std::string>& dropped) {
  std::vector<std::string> kept;
  std::vector<std::string> canon_dropped;
  for (const auto& d : dropped) canon_dropped.push_back(canonical_variable_name(d));
  for (const auto& n : ring->names())
    if (std::find(canon_dropped.begin(), canon_dropped.end(), n) == canon_dropped.end())
      kept.push_back(n);
  MonomialOrder order = ring->order().kind() == MonomialOrder::Kind::block
                            ? MonomialOrder::grevlex()
                            : ring->order();
  return PolyRing::make(std::move(kept), order);
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Rational>& bindings,
                      Ring target) {
  const Ring& ring = f.ring();
  std::vector<const Rational*> value(ring->nvars(), nullptr);
  std::vector<std::string> bound;
  for (const auto& [name, q] : bindings) {
    value[ring->index(name)] = &q;
    bound.push_back(name);
  }
  if (!target) target = restricted_ring(ring, bound);
  std::vector<std::optional<std::size_t>> slot(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!value[i]) slot[i] = target->find(ring->names()[i]);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      const Exponent e = t.mono[i];
      if (e == 0) continue;
      if (value[i]) {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), value[i]->get_num_mpz_t(), e);
        mpz_pow_ui(p.get_den_mpz_t(), value[i]->get_den_mpz_t(), e);
        c *= p;
      } else if (slot[i]) {
        m.set(*slot[i], e);
      } else {
        throw InputError("variable '" + ring->names()[i] + "' has no place in the target ring");
      }
    }
    terms.push_back(Term{std::move(c), std::move(m)});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial map_to_ring(const Polynomial& f, const Ring& target) {
  if (same_ring(f.ring(), target)) return Polynomial::from_canonical_terms(target, f.terms());
  return substitute(f, std::map<std::string, Rational>{}, target);
}

}  // namespace lgeo

namespace lgeo {

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  if (point.size() != f.ring()->nvars()) throw DimensionError("point has the wrong length");
  Rational sum = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

}  // namespace lgeo
