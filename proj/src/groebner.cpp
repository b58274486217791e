#include "lgeo/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <numeric>
#include <span>

#include "lgeo/errors.hpp"
#include "engine.hpp"

namespace lgeo {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatchError("ideal generator from another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::mapped(const Ring& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(map_to_ring(g, target));
  return Ideal(target, std::move(gens));
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError();
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, const std::vector<std::vector<Polynomial>>& rows)
    : PolyMatrix(ring, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw DimensionError("ragged polynomial matrix");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!same_ring(rows[r][c].ring(), ring_)) throw RingMismatchError();
      (*this)(r, c) = rows[r][c];
    }
  }
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
  PolyMatrix m = *this;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(m(a, c), m(b, c));
  return m;
}

namespace {

using engine::EPoly;
using engine::Key;
using engine::KeyCodec;
using engine::Stream;

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatchError();
}

std::vector<Key> encoded(const KeyCodec& codec, const Monomial& m) {
  std::vector<Key> key(codec.width());
  codec.encode(m, key.data());
  return key;
}

struct Entry {
  EPoly poly;
  Monomial lead;
  std::uint64_t sugar;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

class BuchbergerEngine {
 public:
  explicit BuchbergerEngine(Ring ring) : ring_(std::move(ring)), codec_(*ring_) {}

  std::vector<Polynomial> run(std::vector<Polynomial> generators) {
    std::sort(generators.begin(), generators.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    const std::vector<Key> one(codec_.width(), 0);
    for (const auto& g : generators) {
      const EPoly e = engine::to_engine(g, codec_);
      EPoly h = reduce({Stream{&e, 0, Rational(1), one}});
      if (h.empty()) continue;
      if (is_constant(h)) return unit();
      insert(std::move(h), g.total_degree());
    }
    while (!pairs_.empty()) {
      const std::size_t chosen = select_pair();
      Pair pair = std::move(pairs_[chosen]);
      pairs_[chosen] = std::move(pairs_.back());
      pairs_.pop_back();
      const Entry& a = store_[pair.i];
      const Entry& b = store_[pair.j];
      EPoly h = reduce({Stream{&a.poly, 1, Rational(1), encoded(codec_, pair.lcm.quotient(a.lead))},
                        Stream{&b.poly, 1, Rational(-1), encoded(codec_, pair.lcm.quotient(b.lead))}});
      if (h.empty()) continue;
      if (is_constant(h)) return unit();
      insert(std::move(h), pair.sugar);
    }
    return finish();
  }

 private:
  std::vector<Polynomial> unit() const { return {Polynomial::constant(ring_, 1)}; }

  bool is_constant(const EPoly& h) const {
    return h.size() == 1 && codec_.decode(h.key(0, codec_.width())).is_one();
  }

  const EPoly* find_divisor(const Key* m, std::size_t skip = SIZE_MAX) const {
    const std::uint64_t mask = codec_.mask(m);
    for (std::size_t idx : active_) {
      if (idx == skip) continue;
      const EPoly& g = store_[idx].poly;
      if ((g.lead_mask & ~mask) == 0 && codec_.divides(g.key(0, codec_.width()), m)) return &g;
    }
    return nullptr;
  }

  EPoly reduce(const std::vector<Stream>& streams) const {
    return engine::reduce(codec_, streams, [this](const Key* m) { return find_divisor(m); });
  }

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const auto& a = store_[i];
    const auto& b = store_[j];
    return std::max(a.sugar + l.degree() - a.lead.degree(), b.sugar + l.degree() - b.lead.degree());
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = k;
        continue;
      }
      auto c = ring_->compare(p.lcm, q.lcm);
      if (c < 0 || (c == 0 && std::tie(p.i, p.j) < std::tie(q.i, q.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update.
  void insert(EPoly h, std::uint64_t sugar) {
    const Rational lc = h.coeffs[0];
    if (lc != 1)
      for (auto& c : h.coeffs) c /= lc;
    const std::size_t hi = store_.size();
    Monomial lead = codec_.decode(h.key(0, codec_.width()));
    store_.push_back(Entry{std::move(h), std::move(lead), sugar});
    const Monomial& lh = store_[hi].lead;

    std::vector<Pair> candidates;
    for (std::size_t g : active_) {
      Monomial l = lcm(store_[g].lead, lh);
      const std::uint64_t s = pair_sugar(g, hi, l);
      candidates.push_back(Pair{g, hi, std::move(l), s});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(store_[p.i].lead, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(store_[p.i].lead, lh)) fresh.push_back(std::move(p));

    std::vector<Pair> remaining;
    remaining.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(lcm(store_[p.i].lead, lh) == p.lcm) &&
                        !(lcm(store_[p.j].lead, lh) == p.lcm);
      if (!drop) remaining.push_back(std::move(p));
    }
    for (auto& p : fresh) remaining.push_back(std::move(p));
    pairs_ = std::move(remaining);

    std::vector<std::size_t> next_active;
    for (std::size_t g : active_)
      if (!lh.divides(store_[g].lead)) next_active.push_back(g);
    next_active.push_back(hi);
    active_ = std::move(next_active);
  }

  // Tail-reduces every basis element by the others.
  std::vector<Polynomial> finish() const {
    const std::size_t w = codec_.width();
    const std::vector<Key> one(w, 0);
    std::vector<Polynomial> basis;
    for (std::size_t idx : active_) {
      const EPoly& f = store_[idx].poly;
      EPoly tail = engine::reduce(codec_, {Stream{&f, 1, Rational(1), one}},
                                  [&](const Key* m) { return find_divisor(m, idx); });
      EPoly r;
      r.coeffs.push_back(f.coeffs[0]);
      r.keys.assign(f.keys.begin(), f.keys.begin() + static_cast<std::ptrdiff_t>(w));
      r.coeffs.insert(r.coeffs.end(), tail.coeffs.begin(), tail.coeffs.end());
      r.keys.insert(r.keys.end(), tail.keys.begin(), tail.keys.end());
      basis.push_back(engine::from_engine(r, codec_, ring_));
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
      return ring_->compare(x.lead_monomial(), y.lead_monomial()) < 0;
    });
    return basis;
  }

  Ring ring_;
  KeyCodec codec_;
  std::vector<Entry> store_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::string fresh_name(const Ring& ring, const std::string& base) {
  if (!ring->find(base)) return base;
  for (std::size_t i = 0;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!ring->find(candidate)) return candidate;
  }
}

// Reduced basis of `ideal` whose generators are already a reduced basis in
// `source`'s order.
Ideal rebase(const Ideal& reduced, const Ring& target) {
  Ideal moved = reduced.mapped(target);
  if (target->order() == MonomialOrder::grevlex()) return moved;
  return buchberger(moved).as_ideal();
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors) require_same_ring(f.ring(), g.ring());
  const KeyCodec codec(*f.ring());
  std::vector<EPoly> gs;
  for (const auto& g : divisors)
    if (!g.is_zero()) gs.push_back(engine::to_engine(g, codec));
  const EPoly e = engine::to_engine(f, codec);
  const EPoly r = engine::reduce(codec, {Stream{&e, 0, Rational(1), std::vector<Key>(codec.width(), 0)}},
                                 [&](const Key* m) -> const EPoly* {
                                   for (const auto& g : gs)
                                     if (codec.divides(g.key(0, codec.width()), m)) return &g;
                                   return nullptr;
                                 });
  return engine::from_engine(r, codec, f.ring());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  const KeyCodec codec(*f.ring());
  const EPoly ef = engine::to_engine(f, codec);
  const EPoly eg = engine::to_engine(g, codec);
  // (1/lc f) (l/lm f) f - (1/lc g) (l/lm g) g, leading terms cancel.
  const EPoly r = engine::reduce(
      codec,
      {Stream{&ef, 1, 1 / f.lead_coeff(), encoded(codec, l.quotient(f.lead_monomial()))},
       Stream{&eg, 1, -1 / g.lead_coeff(), encoded(codec, l.quotient(g.lead_monomial()))}},
      [](const Key*) -> const EPoly* { return nullptr; });
  return engine::from_engine(r, codec, f.ring());
}

GroebnerBasis buchberger(const Ideal& ideal) {
  BuchbergerEngine engine(ideal.ring());
  return GroebnerBasis(ideal, engine.run(ideal.generators()));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
  require_same_ring(gb.ring(), f.ring());
  return normal_form(f, gb.basis()).is_zero();
}

bool ideal_contains(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  return ideal_contains(buchberger(ideal), f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const GroebnerBasis ga = buchberger(a);
  for (const auto& g : b.generators())
    if (!ideal_contains(ga, g)) return false;
  const GroebnerBasis gb = buchberger(b);
  for (const auto& g : a.generators())
    if (!ideal_contains(gb, g)) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const Ring& ring = ideal.ring();
  if (k >= ring->nvars()) throw DimensionError("cannot eliminate every variable");
  if (k == 0) return ideal;
  const Ring block = PolyRing::make(ring->names(), MonomialOrder::block(k));
  const GroebnerBasis gb = buchberger(ideal.mapped(block));
  std::vector<std::string> dropped(ring->names().begin(),
                                   ring->names().begin() + static_cast<std::ptrdiff_t>(k));
  const Ring target = restricted_ring(ring, dropped);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(map_to_ring(g, target));
  }
  return Ideal(target, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw InputError("cannot saturate by the zero polynomial");
  const Ring& ring = ideal.ring();
  std::vector<std::string> names{fresh_name(ring, "t")};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  const Ring extended = PolyRing::make(names, ring->order());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_to_ring(g, extended));
  const Polynomial t = Polynomial::variable(extended, std::size_t{0});
  gens.push_back(t * map_to_ring(f, extended) - Polynomial::constant(extended, 1));
  return rebase(eliminate(Ideal(extended, std::move(gens)), 1), ring);
}

Ideal saturate_by_product(const Ideal& ideal, const std::vector<Polynomial>& factors) {
  for (const auto& f : factors) {
    require_same_ring(ideal.ring(), f.ring());
    if (f.is_zero()) throw InputError("cannot saturate by the zero polynomial");
  }
  if (factors.empty()) return ideal;
  Ideal current = ideal;
  // (I : f^inf) : g^inf = I : (fg)^inf, so one pass suffices.
  for (const auto& f : factors) current = saturate(current, f);
  return current;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  std::vector<std::string> names{fresh_name(ring, "t")};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  const Ring extended = PolyRing::make(names, ring->order());
  const Polynomial t = Polynomial::variable(extended, std::size_t{0});
  const Polynomial one_minus_t = Polynomial::constant(extended, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * map_to_ring(g, extended));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * map_to_ring(g, extended));
  return rebase(eliminate(Ideal(extended, std::move(gens)), 1), ring);
}

Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& other) {
  require_same_ring(ideal.ring(), other.ring());
  if (other.is_zero()) return Ideal(ideal.ring(), {Polynomial::constant(ideal.ring(), 1)});
  std::optional<Ideal> acc;
  for (const auto& g : other.generators()) {
    Ideal s = saturate(ideal, g);
    acc = acc ? intersect(*acc, s) : std::move(s);
  }
  return *acc;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  Polynomial det(m.ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix sub(m.ring(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) sub(r - 1, k++) = m(r, cc);
    Polynomial term = m(0, c) * determinant(sub);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Ideal minors(std::size_t k, const PolyMatrix& m) {
  if (k == 0) throw InputError("minors of size 0 are not supported");
  if (k > std::min(m.rows(), m.cols())) throw DimensionError("minor size exceeds matrix size");
  std::vector<Polynomial> gens;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      PolyMatrix sub(m.ring(), k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(rows[r], cols[c]);
      gens.push_back(determinant(sub));
    });
  });
  return Ideal(m.ring(), std::move(gens));
}

PolyMatrix operator*(const IntMatrix& a, const PolyMatrix& m) {
  if (a.cols() != m.rows()) throw DimensionError("matrix product dimension mismatch");
  PolyMatrix out(m.ring(), a.rows(), m.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      const Rational scale(a(i, k));
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += scale * m(k, j);
    }
  return out;
}

namespace {

// Exponent of the pure power of `var` among the leading monomials, if any.
std::optional<Exponent> pure_power_bound(const GroebnerBasis& gb, std::size_t var) {
  std::optional<Exponent> best;
  for (const auto& g : gb.basis()) {
    const Monomial& m = g.lead_monomial();
    if (m.degree() != m[var]) continue;
    if (!best || m[var] < *best) best = m[var];
  }
  return best;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  for (std::size_t v = 0; v < gb.ring()->nvars(); ++v)
    if (!pure_power_bound(gb, v)) return false;
  return true;
}

std::size_t krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  if (gb.is_unit()) return 0;
  if (n > 24) throw GuardrailError("dimension by subset enumeration limited to 24 variables");
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    // Independent iff no leading monomial is supported inside the subset.
    bool independent = true;
    for (const auto& g : gb.basis()) {
      const Monomial& m = g.lead_monomial();
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m[v] != 0 && !(subset & (std::uint32_t{1} << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::uint64_t quotient_dimension(const GroebnerBasis& gb, std::uint64_t cap) {
  if (gb.is_unit()) return 0;
  const std::size_t n = gb.ring()->nvars();
  std::vector<Exponent> bound(n);
  std::uint64_t box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    auto b = pure_power_bound(gb, v);
    if (!b) throw ComputationError("ideal is not zero-dimensional");
    bound[v] = *b;
    if (box > cap / std::max<std::uint64_t>(*b, 1))
      throw GuardrailError("standard monomial box exceeds " + std::to_string(cap) + " monomials");
    box *= *b;
  }
  std::uint64_t count = 0;
  std::vector<Exponent> e(n, 0);
  while (true) {
    const Monomial mono(e);
    bool standard = true;
    for (const auto& g : gb.basis())
      if (g.lead_monomial().divides(mono)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  return count;
}

}  // namespace lgeo
