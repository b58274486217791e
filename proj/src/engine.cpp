#include "engine.hpp"

#include <limits>

#include "lgeo/errors.hpp"

namespace lgeo::engine {

KeyCodec::KeyCodec(const PolyRing& ring) {
  const std::size_t n = ring.nvars();
  pos_.resize(n);
  const MonomialOrder& order = ring.order();
  auto grevlex_block = [&](std::size_t first, std::size_t last) {
    degree_slots_.push_back({width_++, first, last});
    for (std::size_t v = last; v-- > first;) pos_[v] = width_++;
  };
  switch (order.kind()) {
    case MonomialOrder::Kind::lex:
      for (std::size_t v = 0; v < n; ++v) pos_[v] = width_++;
      break;
    case MonomialOrder::Kind::grevlex:
      sign_ = -1;
      grevlex_block(0, n);
      break;
    case MonomialOrder::Kind::block: {
      sign_ = -1;
      const std::size_t k = std::min(order.block_size(), n);
      grevlex_block(0, k);
      grevlex_block(k, n);
      break;
    }
  }
}

void KeyCodec::encode(const Monomial& m, Key* out) const {
  constexpr auto limit = static_cast<Exponent>(std::numeric_limits<Key>::max() / 4);
  for (std::size_t v = 0; v < pos_.size(); ++v) {
    if (m[v] > limit) throw ComputationError("exponent too large for the Groebner engine");
    out[pos_[v]] = sign_ * static_cast<Key>(m[v]);
  }
  for (const auto& d : degree_slots_) {
    std::int64_t deg = 0;
    for (std::size_t v = d.first; v < d.last; ++v) deg += m[v];
    if (deg > limit) throw ComputationError("degree too large for the Groebner engine");
    out[d.slot] = static_cast<Key>(deg);
  }
}

Monomial KeyCodec::decode(const Key* key) const {
  std::vector<Exponent> exps(pos_.size());
  for (std::size_t v = 0; v < pos_.size(); ++v) exps[v] = static_cast<Exponent>(exponent(key, v));
  return Monomial(std::move(exps));
}

EPoly to_engine(const Polynomial& f, const KeyCodec& codec) {
  const std::size_t w = codec.width();
  EPoly out;
  out.coeffs.reserve(f.size());
  out.keys.resize(f.size() * w);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.coeffs.push_back(f.terms()[i].coeff);
    codec.encode(f.terms()[i].mono, out.keys.data() + i * w);
  }
  if (!out.empty()) out.lead_mask = codec.mask(out.key(0, w));
  return out;
}

Polynomial from_engine(const EPoly& f, const KeyCodec& codec, const Ring& ring) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    terms.push_back(Term{f.coeffs[i], codec.decode(f.key(i, codec.width()))});
  return Polynomial::from_canonical_terms(ring, std::move(terms));
}

}  // namespace lgeo::engine
