#include "lgeo/models.hpp"

#include <algorithm>
#include <limits>

#include "lgeo/errors.hpp"

namespace lgeo {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_53() { return next() >> 11; }

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InputError("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t width = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % width;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % width;
}

DiscreteRandomVariable::DiscreteRandomVariable(std::string name, std::size_t arity)
    : name_(std::move(name)) {
  if (arity == 0) throw InputError("arity must be at least 1");
  pmf_.assign(arity, Rational(1, static_cast<unsigned long>(arity)));
}

DiscreteRandomVariable::DiscreteRandomVariable(std::string name, std::size_t arity,
                                               std::vector<Rational> pmf)
    : name_(std::move(name)), pmf_(std::move(pmf)) {
  if (arity == 0) throw InputError("arity must be at least 1");
  if (pmf_.size() != arity)
    throw InputError("pmf of '" + name_ + "' has " + std::to_string(pmf_.size()) +
                     " entries, arity is " + std::to_string(arity));
  Rational total = 0;
  for (auto& p : pmf_) {
    p.canonicalize();
    if (p < 0) throw InputError("negative probability in pmf of '" + name_ + "'");
    total += p;
  }
  if (total != 1) throw InputError("pmf of '" + name_ + "' sums to " + total.get_str() + ", not 1");
}

DiscreteRandomVariable DiscreteRandomVariable::from_support(
    std::string name, std::size_t arity, const std::map<std::size_t, Rational>& support) {
  std::vector<Rational> pmf(arity, Rational(0));
  for (const auto& [state, p] : support) {
    if (state < 1 || state > arity)
      throw InputError("state " + std::to_string(state) + " outside 1.." + std::to_string(arity));
    pmf[state - 1] = p;
  }
  return DiscreteRandomVariable(std::move(name), arity, std::move(pmf));
}

const Rational& DiscreteRandomVariable::probability(std::size_t state) const {
  if (state < 1 || state > pmf_.size()) throw InputError("state out of range");
  return pmf_[state - 1];
}

std::vector<std::size_t> states(const DiscreteRandomVariable& x) {
  std::vector<std::size_t> s(x.arity());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i + 1;
  return s;
}

Rational mean(const DiscreteRandomVariable& x) {
  Rational m = 0;
  for (std::size_t s = 1; s <= x.arity(); ++s) m += Rational(static_cast<unsigned long>(s)) * x.probability(s);
  return m;
}

std::vector<std::size_t> sample(const DiscreteRandomVariable& x, std::size_t n,
                                std::uint64_t seed) {
  std::vector<Rational> cdf;
  Rational acc = 0;
  for (const auto& p : x.pmf()) cdf.push_back(acc += p);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 53);
  SplitMix64 rng(seed);
  std::vector<std::size_t> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt k;
    mpz_set_ui(k.get_mpz_t(), 0);
    const std::uint64_t bits = rng.next_53();
    mpz_import(k.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
    Rational u(k, scale);
    u.canonicalize();
    std::size_t state = x.arity();
    for (std::size_t s = 0; s < cdf.size(); ++s) {
      if (u < cdf[s]) {
        state = s + 1;
        break;
      }
    }
    draws.push_back(state);
  }
  return draws;
}

ModelGraph::ModelGraph(std::vector<DiscreteRandomVariable> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (vertices_[i].name() == vertices_[j].name())
        throw InputError("duplicate vertex '" + vertices_[i].name() + "'");
  adjacency_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("edge references a missing vertex");
    if (a == b) throw InputError("self-loop on '" + vertices_[a].name() + "'");
    if (a > b) std::swap(a, b);
    if (adjacency_[a][b]) throw InputError("duplicate edge " + vertices_[a].name() + "-" + vertices_[b].name());
    adjacency_[a][b] = adjacency_[b][a] = true;
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

ModelGraph ModelGraph::from_named_edges(
    std::vector<DiscreteRandomVariable> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].name() == name) return i;
    throw InputError("edge references unknown vertex '" + name + "'");
  };
  std::vector<Edge> indexed;
  for (const auto& [a, b] : edges) indexed.emplace_back(find(a), find(b));
  return ModelGraph(std::move(vertices), std::move(indexed));
}

bool ModelGraph::adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).at(b); }

std::size_t ModelGraph::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name() == name) return i;
  throw InputError("unknown vertex '" + name + "'");
}

namespace {

void bron_kerbosch(const ModelGraph& g, Clique& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<Clique>& out) {
  if (p.empty() && x.empty()) {
    Clique c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot: the vertex of P ∪ X with the most neighbours in P.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      const auto count = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](std::size_t v) { return g.adjacent(u, v); }));
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
  std::vector<std::size_t> candidates;
  for (std::size_t v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (std::size_t v : candidates) {
    std::vector<std::size_t> np, nx;
    for (std::size_t w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (std::size_t w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<Clique> maximal_cliques(const ModelGraph& g) {
  std::vector<Clique> out;
  if (g.vertices().empty()) return out;
  std::vector<std::size_t> all(g.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Clique r;
  bron_kerbosch(g, r, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lgeo
