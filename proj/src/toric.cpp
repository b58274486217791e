#include "lgeo/toric.hpp"

#include <algorithm>

#include "lgeo/errors.hpp"

namespace lgeo {

ToricModel ToricModel::from_matrix(IntMatrix a, Provenance provenance) {
  if (a.empty()) throw InputError("toric model needs a nonempty matrix");
  IntMatrix ones(1, a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) ones(0, c) = 1;
  if (rank(a.stacked(ones)) == rank(a)) return ToricModel(std::move(a), provenance, false);
  return ToricModel(ones.stacked(a), provenance, true);
}

Ring coordinate_ring(std::size_t count) {
  if (count == 0) throw InputError("a model needs at least one coordinate");
  return PolyRing::make(indexed_names("p", 0, count - 1));
}

Ideal toric_ideal(const ToricModel& model, Ring ring) {
  const std::size_t n = model.coordinates();
  if (!ring) ring = coordinate_ring(n);
  if (ring->nvars() != n)
    throw DimensionError("ring has " + std::to_string(ring->nvars()) + " variables, model has " +
                         std::to_string(n) + " coordinates");
  const IntMatrix kernel = integer_kernel(model.matrix());
  std::vector<Polynomial> binomials;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Monomial plus(n), minus(n);
    for (std::size_t c = 0; c < n; ++c) {
      const BigInt& v = kernel(r, c);
      if (v > 0) plus.set(c, static_cast<Exponent>(v.get_ui()));
      if (v < 0) minus.set(c, static_cast<Exponent>(BigInt(-v).get_ui()));
    }
    binomials.push_back(Polynomial::monomial(ring, 1, plus) - Polynomial::monomial(ring, 1, minus));
  }
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(Polynomial::variable(ring, i));
  std::vector<Polynomial> gens;
  const Ideal saturated = saturate_by_product(Ideal(ring, binomials), coords);
  for (const auto& g : saturated.generators())
    gens.push_back(g.primitive());
  return Ideal(ring, std::move(gens));
}

IntMatrix toric_polytope(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  IntMatrix differences(ideal.generators().size(), n);
  for (std::size_t r = 0; r < ideal.generators().size(); ++r) {
    const Polynomial& g = ideal.generators()[r];
    if (g.size() != 2)
      throw InputError("not a toric/binomial ideal: '" + g.to_string() + "' is not a binomial");
    for (std::size_t c = 0; c < n; ++c)
      differences(r, c) = BigInt(g.terms()[0].mono[c]) - BigInt(g.terms()[1].mono[c]);
  }
  return integer_kernel(differences);
}

namespace {

std::vector<std::size_t> resolve_generator(const std::vector<std::string>& generator,
                                           const std::vector<DiscreteRandomVariable>& variables) {
  if (generator.empty()) throw InputError("empty log-linear generator");
  std::vector<std::size_t> idx;
  for (const auto& name : generator) {
    auto it = std::find_if(variables.begin(), variables.end(),
                           [&](const DiscreteRandomVariable& v) { return v.name() == name; });
    if (it == variables.end()) throw InputError("unknown variable '" + name + "' in generator");
    const auto i = static_cast<std::size_t>(it - variables.begin());
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw InputError("variable '" + name + "' repeated in a generator");
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

IntMatrix make_loglinear_matrix(const std::vector<std::vector<std::string>>& generators,
                                const std::vector<DiscreteRandomVariable>& variables) {
  if (variables.empty()) throw InputError("log-linear model needs variables");
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& g : generators) groups.push_back(resolve_generator(g, variables));

  std::size_t columns = 1;
  for (const auto& v : variables) columns *= v.arity();
  std::size_t rows = 0;
  std::vector<std::size_t> offsets;
  for (const auto& g : groups) {
    offsets.push_back(rows);
    std::size_t size = 1;
    for (std::size_t i : g) size *= variables[i].arity();
    rows += size;
  }

  IntMatrix m(rows, columns);
  std::vector<std::size_t> state(variables.size(), 0);
  for (std::size_t col = 0; col < columns; ++col) {
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      std::size_t local = 0;
      for (std::size_t i : groups[gi]) local = local * variables[i].arity() + state[i];
      m(offsets[gi] + local, col) = 1;
    }
    // Advance the joint state, last variable fastest.
    for (std::size_t i = variables.size(); i-- > 0;) {
      if (++state[i] < variables[i].arity()) break;
      state[i] = 0;
    }
  }
  return m;
}

ToricModel toric_model_from_generators(const std::vector<std::vector<std::string>>& generators,
                                       const std::vector<DiscreteRandomVariable>& variables) {
  return ToricModel::from_matrix(make_loglinear_matrix(generators, variables),
                                 Provenance::generators);
}

ToricModel toric_model_from_graph(const ModelGraph& g) {
  std::vector<std::vector<std::string>> generators;
  for (const auto& clique : maximal_cliques(g)) {
    std::vector<std::string> names;
    for (std::size_t v : clique) names.push_back(g.vertices()[v].name());
    generators.push_back(std::move(names));
  }
  return ToricModel::from_matrix(make_loglinear_matrix(generators, g.vertices()), Provenance::graph);
}

ToricModel rational_normal_scroll(const std::vector<std::size_t>& blocks) {
  if (blocks.empty()) throw InputError("a scroll needs at least one block");
  std::size_t columns = 0;
  for (std::size_t b : blocks) {
    if (b == 0) throw InputError("scroll blocks must have length at least 1");
    columns += b;
  }
  const std::size_t k = blocks.size() - 1;
  IntMatrix m(k + 2, columns);
  std::size_t col = 0;
  for (std::size_t block = 0; block < blocks.size(); ++block) {
    for (std::size_t h = 0; h < blocks[block]; ++h, ++col) {
      m(0, col) = 1;
      if (block > 0) m(block, col) = 1;
      m(k + 1, col) = static_cast<unsigned long>(h);
    }
  }
  return ToricModel::from_matrix(std::move(m), Provenance::scroll);
}

}  // namespace lgeo
