#pragma once

// Packed monomial keys and heap-based division for the Groebner engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lgeo/ring.hpp"

namespace lgeo::engine {

using Key = std::int32_t;

// Linear encoding of monomials into integer vectors whose lexicographic
// comparison is the ring's monomial order. Multiplication becomes addition.
//   lex:      e_0 .. e_{n-1}
//   grevlex:  deg, -e_{n-1} .. -e_0
//   block(k): deg(first k), -e_{k-1} .. -e_0, deg(rest), -e_{n-1} .. -e_k
class KeyCodec {
 public:
  explicit KeyCodec(const PolyRing& ring);

  std::size_t width() const { return width_; }
  std::size_t nvars() const { return pos_.size(); }

  void encode(const Monomial& m, Key* out) const;
  Monomial decode(const Key* key) const;

  Key exponent(const Key* key, std::size_t var) const { return sign_ * key[pos_[var]]; }
  bool divides(const Key* a, const Key* b) const {
    for (std::size_t p : pos_)
      if (sign_ * a[p] > sign_ * b[p]) return false;
    return true;
  }
  std::uint64_t mask(const Key* key) const {
    std::uint64_t m = 0;
    const std::size_t n = std::min<std::size_t>(pos_.size(), 64);
    for (std::size_t i = 0; i < n; ++i)
      if (key[pos_[i]] != 0) m |= std::uint64_t{1} << i;
    return m;
  }

  int compare(const Key* a, const Key* b) const {
    for (std::size_t i = 0; i < width_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

 private:
  std::size_t width_ = 0;
  Key sign_ = 1;
  std::vector<std::size_t> pos_;
  // (slot, first var, last var) for each degree slot
  struct DegreeSlot {
    std::size_t slot, first, last;
  };
  std::vector<DegreeSlot> degree_slots_;
};

// Polynomial with terms in descending order.
struct EPoly {
  std::vector<Rational> coeffs;
  std::vector<Key> keys;
  std::uint64_t lead_mask = 0;

  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }
  const Key* key(std::size_t i, std::size_t w) const { return keys.data() + i * w; }
};

EPoly to_engine(const Polynomial& f, const KeyCodec& codec);
Polynomial from_engine(const EPoly& f, const KeyCodec& codec, const Ring& ring);

// Terms poly[start..] scaled by mult * x^shift.
struct Stream {
  const EPoly* poly;
  std::size_t pos;
  Rational mult;
  std::vector<Key> shift;
};

// Sum of the streams, fully reduced: every term is divided by the divisor
// `find(key)` returns until no divisor applies. Terms are visited in
// descending order through a heap of stream heads.
template <typename Find>
EPoly reduce(const KeyCodec& codec, const std::vector<Stream>& init, Find&& find) {
  const std::size_t w = codec.width();
  struct Head {
    const EPoly* poly;
    std::size_t pos;
    Rational mult;
  };
  std::vector<Head> heads;
  std::vector<Key> shifts;
  std::vector<Key> current;
  std::vector<std::uint32_t> heap;

  auto load = [&](std::uint32_t s) {
    const Key* k = heads[s].poly->key(heads[s].pos, w);
    const Key* sh = shifts.data() + std::size_t{s} * w;
    Key* out = current.data() + std::size_t{s} * w;
    for (std::size_t i = 0; i < w; ++i) out[i] = k[i] + sh[i];
  };
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return codec.compare(current.data() + std::size_t{a} * w, current.data() + std::size_t{b} * w) < 0;
  };
  auto add_stream = [&](const EPoly* poly, std::size_t pos, Rational mult, const Key* shift) {
    if (pos >= poly->size()) return;
    const auto s = static_cast<std::uint32_t>(heads.size());
    heads.push_back(Head{poly, pos, std::move(mult)});
    shifts.insert(shifts.end(), shift, shift + w);
    current.resize(current.size() + w);
    load(s);
    heap.push_back(s);
    std::push_heap(heap.begin(), heap.end(), less);
  };

  for (const auto& s : init) add_stream(s.poly, s.pos, s.mult, s.shift.data());

  EPoly out;
  std::vector<Key> m(w), q(w);
  Rational acc, prod;
  while (!heap.empty()) {
    std::copy_n(current.data() + std::size_t{heap.front()} * w, w, m.data());
    acc = 0;
    while (!heap.empty() && codec.compare(current.data() + std::size_t{heap.front()} * w, m.data()) == 0) {
      std::pop_heap(heap.begin(), heap.end(), less);
      const std::uint32_t s = heap.back();
      heap.pop_back();
      Head& h = heads[s];
      mpq_mul(prod.get_mpq_t(), h.mult.get_mpq_t(), h.poly->coeffs[h.pos].get_mpq_t());
      acc += prod;
      if (++h.pos < h.poly->size()) {
        load(s);
        heap.push_back(s);
        std::push_heap(heap.begin(), heap.end(), less);
      }
    }
    if (acc == 0) continue;
    const EPoly* g = find(m.data());
    if (!g) {
      out.coeffs.push_back(acc);
      out.keys.insert(out.keys.end(), m.begin(), m.end());
      continue;
    }
    const Key* lead = g->key(0, w);
    for (std::size_t i = 0; i < w; ++i) q[i] = m[i] - lead[i];
    add_stream(g, 1, -acc / g->coeffs[0], q.data());
  }
  if (!out.empty()) out.lead_mask = codec.mask(out.key(0, w));
  return out;
}

}  // namespace lgeo::engine
