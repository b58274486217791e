#include "lgeo/likelihood.hpp"

#include <algorithm>
#include <map>

#include "lgeo/errors.hpp"

namespace lgeo {

namespace {

std::vector<Polynomial> primitive_generators(const Ideal& ideal) {
  std::vector<Polynomial> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) out.push_back(g.primitive());
  return out;
}

Polynomial sum_of(const Ring& ring, std::size_t first, std::size_t count) {
  Polynomial s(ring);
  for (std::size_t i = 0; i < count; ++i) s += Polynomial::variable(ring, first + i);
  return s;
}

// The model ideal with its variables renamed p_0..p_n by position.
Ideal positional_model(const Ideal& model) {
  const std::size_t count = model.ring()->nvars();
  if (count < 2) throw InputError("a model needs at least two coordinates");
  const Ring target = coordinate_ring(count);
  std::vector<Polynomial> gens;
  for (const auto& g : model.generators()) {
    if (!g.is_homogeneous())
      throw InputError("model generator '" + g.to_string() + "' is not homogeneous");
    std::vector<Term> terms = g.terms();
    gens.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return Ideal(target, std::move(gens));
}

// Jacobian minors of size codim(I), mapped into `ring`.
Ideal singular_locus(const Ideal& model, const Ring& ring) {
  const std::size_t count = model.ring()->nvars();
  const std::size_t codim = count - krull_dimension(buchberger(model));
  if (codim == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
  PolyMatrix jac(ring, model.generators().size(), count);
  for (std::size_t r = 0; r < model.generators().size(); ++r)
    for (std::size_t c = 0; c < count; ++c)
      jac(r, c) = map_to_ring(differentiate(model.generators()[r], c), ring);
  return minors(codim, jac);
}

}  // namespace

Ring lc_ring(std::size_t n) {
  if (n == 0) throw InputError("the likelihood ring needs n >= 1");
  std::vector<std::string> names = indexed_names("p", 0, n);
  const auto us = indexed_names("u", 0, n);
  names.insert(names.end(), us.begin(), us.end());
  return PolyRing::make(std::move(names));
}

LikelihoodIdeal compute_lc_toric(const ToricModel& model, Saturation saturation) {
  const std::size_t count = model.coordinates();
  if (count < 2) throw InputError("a model needs at least two coordinates");
  const Ring ring = lc_ring(count - 1);
  const Ideal toric = toric_ideal(model).mapped(ring);

  PolyMatrix pu(ring, count, 2);
  for (std::size_t i = 0; i < count; ++i) {
    pu(i, 0) = Polynomial::variable(ring, i);
    pu(i, 1) = Polynomial::variable(ring, count + i);
  }
  const Ideal j = toric + minors(2, model.matrix() * pu);

  const Polynomial p_plus = sum_of(ring, 0, count);
  Ideal result(ring);
  if (saturation == Saturation::hyperplane) {
    result = saturate(j, p_plus);
  } else {
    std::vector<Polynomial> factors{p_plus};
    for (std::size_t i = 0; i < count; ++i) factors.push_back(Polynomial::variable(ring, i));
    result = saturate_by_product(j, factors);
  }
  return {Ideal(ring, primitive_generators(result)), LCMethod::toric, saturation};
}

LikelihoodIdeal compute_lc_general(const Ideal& input, LagrangeOptions options) {
  const Ideal model = positional_model(input);
  const std::size_t count = model.ring()->nvars();
  if (buchberger(model).is_unit()) throw InputError("the model ideal is the unit ideal");

  // Q[lambda_0..lambda_r, p, u] with f_0 = p_+.
  std::vector<Polynomial> fs{sum_of(model.ring(), 0, count)};
  fs.insert(fs.end(), model.generators().begin(), model.generators().end());
  const std::size_t multipliers = fs.size();
  const Ring lc = lc_ring(count - 1);
  std::vector<std::string> names = indexed_names("lambda", 0, multipliers - 1);
  names.insert(names.end(), lc->names().begin(), lc->names().end());
  const Ring ring = PolyRing::make(std::move(names));

  std::vector<Polynomial> gens;
  for (const auto& f : model.generators()) gens.push_back(map_to_ring(f, ring));
  for (std::size_t i = 0; i < count; ++i) {
    Polynomial gradient(ring);
    for (std::size_t j = 0; j < multipliers; ++j)
      gradient += Polynomial::variable(ring, j) * map_to_ring(differentiate(fs[j], i), ring);
    const Polynomial p = Polynomial::variable(ring, multipliers + i);
    const Polynomial u = Polynomial::variable(ring, multipliers + count + i);
    gens.push_back(u - p * gradient);
  }
  Ideal result = eliminate(Ideal(ring, std::move(gens)), multipliers).mapped(lc);
  std::vector<Polynomial> factors;
  for (std::size_t i = 0; i < count; ++i) factors.push_back(Polynomial::variable(lc, i));
  factors.push_back(sum_of(lc, 0, count));
  result = saturate_by_product(result, factors);
  if (options.saturate_singular) result = saturate_by_ideal(result, singular_locus(model, lc));

  return {Ideal(lc, primitive_generators(result)), LCMethod::lagrange, Saturation::full};
}

LikelihoodIdeal compute_lc(const ModelInput& input, Saturation saturation, LagrangeOptions options) {
  return std::visit(
      [&](const auto& m) -> LikelihoodIdeal {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ideal>)
          return compute_lc_general(m, options);
        else if constexpr (std::is_same_v<T, ToricModel>)
          return compute_lc_toric(m, saturation);
        else
          return compute_lc_toric(toric_model_from_graph(m), saturation);
      },
      input);
}

Ideal model_ideal(const ModelInput& input) {
  return std::visit(
      [](const auto& m) -> Ideal {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ideal>)
          return positional_model(m);
        else if constexpr (std::is_same_v<T, ToricModel>)
          return toric_ideal(m);
        else
          return toric_ideal(toric_model_from_graph(m));
      },
      input);
}

std::uint64_t fiber_degree(const LikelihoodIdeal& lc, const std::vector<Rational>& u,
                           std::uint64_t monomial_cap) {
  const std::size_t count = lc.ring()->nvars() / 2;
  if (u.size() != count)
    throw DimensionError("data has " + std::to_string(u.size()) + " entries, model has " +
                         std::to_string(count) + " coordinates");
  const Ring p_ring = coordinate_ring(count);
  std::map<std::string, Rational> bindings;
  for (std::size_t i = 0; i < count; ++i) bindings.emplace(lc.ring()->names()[count + i], u[i]);

  std::vector<Polynomial> gens;
  for (const auto& g : lc.generators()) gens.push_back(substitute(g, bindings, p_ring));
  gens.push_back(sum_of(p_ring, 0, count) - Polynomial::constant(p_ring, 1));
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < count; ++i) coords.push_back(Polynomial::variable(p_ring, i));

  const GroebnerBasis gb = buchberger(saturate_by_product(Ideal(p_ring, std::move(gens)), coords));
  if (!is_zero_dimensional(gb)) throw ComputationError("fiber over the data is not zero-dimensional");
  return quotient_dimension(gb, monomial_cap);
}

std::uint64_t ml_degree(const ModelInput& input, const MLDegreeOptions& options) {
  if (options.trials == 0) throw InputError("ml_degree needs at least one trial");
  if (options.u_low < 1 || options.u_low > options.u_high)
    throw InputError("data range must satisfy 1 <= lo <= hi");
  const LikelihoodIdeal lc = compute_lc(input, options.saturation, options.lagrange);
  const std::size_t count = lc.ring()->nvars() / 2;

  SplitMix64 seeds(options.seed);
  std::map<std::uint64_t, std::size_t> tally;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    SplitMix64 rng(seeds.next());
    std::vector<Rational> u;
    for (std::size_t i = 0; i < count; ++i)
      u.emplace_back(static_cast<unsigned long>(rng.uniform(static_cast<std::uint64_t>(options.u_low),
                                                            static_cast<std::uint64_t>(options.u_high))));
    ++tally[fiber_degree(lc, u, options.monomial_cap)];
  }
  if (options.trials > 1 && tally.size() == options.trials)
    throw ComputationError("unstable generic count across trials");
  // Ties go to the larger count.
  auto best = tally.begin();
  for (auto it = tally.begin(); it != tally.end(); ++it)
    if (it->second >= best->second) best = it;
  return best->first;
}

}  // namespace lgeo
