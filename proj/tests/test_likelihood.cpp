#include <random>

#include "support.hpp"
#include "lgeo/errors.hpp"
#include "lgeo/likelihood.hpp"

using namespace lgeo;
using lgeo::testing::ideal_of;

namespace {

const IntMatrix kChainMatrix{
    {1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1}};

Ideal hardy_weinberg() { return ideal_of(coordinate_ring(3), {"4*p_0*p_2 - p_1^2"}); }

Ideal example_one_output() {
  return ideal_of(lc_ring(2), {"4*p_2*u_0 - p_1*u_1 + 2*p_2*u_1 - 2*p_1*u_2",
                               "2*p_1*u_0 - 2*p_0*u_1 + p_1*u_1 - 4*p_0*u_2", "p_1^2 - 4*p_0*p_2"});
}

struct CorpusModel {
  const char* name;
  IntMatrix matrix;
};

std::vector<CorpusModel> small_toric_corpus() {
  return {{"P1", IntMatrix{{1, 1}, {0, 1}}},
          {"P2", IntMatrix{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}},
          {"rnc2", IntMatrix{{1, 1, 1}, {0, 1, 2}}},
          {"rnc3", IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}},
          {"independence", IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}},
          {"chain", kChainMatrix}};
}

std::vector<Rational> point(std::initializer_list<Rational> values) { return values; }

// Values at p, u in lc_ring variable order.
std::vector<Rational> concat(const std::vector<Rational>& p, const std::vector<Rational>& u) {
  std::vector<Rational> out = p;
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

}  // namespace

TEST_CASE("lc_ring") {
  CHECK(lc_ring(2)->names() == std::vector<std::string>{"p_0", "p_1", "p_2", "u_0", "u_1", "u_2"});
  CHECK(lc_ring(6)->nvars() == 14);
  CHECK(lc_ring(1)->names() == std::vector<std::string>{"p_0", "p_1", "u_0", "u_1"});
  CHECK(lc_ring(1)->order() == MonomialOrder::grevlex());
  CHECK_THROWS_AS(lc_ring(0), InputError);
}

TEST_CASE("Hardy-Weinberg likelihood ideal") {
  const LikelihoodIdeal lc = compute_lc_general(hardy_weinberg());
  CHECK(lc.method == LCMethod::lagrange);
  CHECK(ideal_equal(lc.ideal, example_one_output()));
  // The primitive reduced generators are exactly the printed ones.
  CHECK(lc.generators() == example_one_output().generators());
  CHECK(ideal_equal(compute_lc(ModelInput(hardy_weinberg())).ideal, example_one_output()));
}

TEST_CASE("Hardy-Weinberg closed-form MLE lies on the correspondence") {
  const LikelihoodIdeal lc = compute_lc_general(hardy_weinberg());
  SplitMix64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const long u0 = static_cast<long>(rng.uniform(1, 100));
    const long u1 = static_cast<long>(rng.uniform(1, 100));
    const long u2 = static_cast<long>(rng.uniform(1, 100));
    const long a = 2 * u0 + u1;
    const long b = u1 + 2 * u2;
    const auto values = concat(point({a * a, 2 * a * b, b * b}), point({u0, u1, u2}));
    for (const auto& g : lc.generators()) CHECK(evaluate(g, values) == 0);
  }
}

TEST_CASE("projective space models") {
  const Ideal expected = ideal_of(lc_ring(1), {"p_0*u_1 - p_1*u_0"});
  CHECK(ideal_equal(compute_lc_general(Ideal(coordinate_ring(2))).ideal, expected));
  CHECK(ideal_equal(compute_lc_toric(toric_model_from_matrix(IntMatrix{{1, 1}, {0, 1}})).ideal, expected));

  // Critical points of the likelihood on P^n are p proportional to u.
  const LikelihoodIdeal p3 = compute_lc_general(Ideal(coordinate_ring(4)));
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dist(1, 50);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> u;
    for (int i = 0; i < 4; ++i) u.emplace_back(dist(rng));
    std::vector<Rational> p = u;
    for (auto& x : p) x *= 3;
    for (const auto& g : p3.generators()) CHECK(evaluate(g, concat(p, u)) == 0);
  }
}

TEST_CASE("P1 likelihood ideal is symmetric under swapping coordinates") {
  const LikelihoodIdeal lc = compute_lc_general(Ideal(coordinate_ring(2)));
  const Ring& r = lc.ring();
  std::map<std::string, Polynomial> swap{{"p_0", Polynomial::variable(r, "p_1")},
                                         {"p_1", Polynomial::variable(r, "p_0")},
                                         {"u_0", Polynomial::variable(r, "u_1")},
                                         {"u_1", Polynomial::variable(r, "u_0")}};
  std::vector<Polynomial> swapped;
  for (const auto& g : lc.generators()) swapped.push_back(substitute(g, swap));
  CHECK(ideal_equal(Ideal(r, swapped), lc.ideal));
}

TEST_CASE("independence model MLE satisfies the likelihood ideal") {
  const Ideal independence = ideal_of(coordinate_ring(4), {"p_0*p_3 - p_1*p_2"});
  const LikelihoodIdeal lc = compute_lc_general(independence);
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> dist(1, 200);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> u;
    for (int i = 0; i < 4; ++i) u.emplace_back(dist(rng));
    // p_ij = u_{i+} u_{+j}, table entries indexed 2i + j.
    const Rational r0 = u[0] + u[1], r1 = u[2] + u[3];
    const Rational c0 = u[0] + u[2], c1 = u[1] + u[3];
    const auto values = concat({r0 * c0, r0 * c1, r1 * c0, r1 * c1}, u);
    for (const auto& g : lc.generators()) CHECK(evaluate(g, values) == 0);
  }
}

TEST_CASE("toric and Lagrange paths agree on the small corpus") {
  for (const auto& [name, matrix] : small_toric_corpus()) {
    CAPTURE(name);
    const ToricModel model = toric_model_from_matrix(matrix);
    const LikelihoodIdeal full = compute_lc_toric(model, Saturation::full);
    const LikelihoodIdeal hyper = compute_lc_toric(model, Saturation::hyperplane);
    CHECK(full.method == LCMethod::toric);
    CHECK(hyper.saturation == Saturation::hyperplane);
    CHECK(ideal_equal(full.ideal, hyper.ideal));
    CHECK(ideal_equal(full.ideal, compute_lc_general(toric_ideal(model)).ideal));
  }
}

TEST_CASE("likelihood ideal contains the model and is saturated") {
  std::vector<ModelInput> corpus{ModelInput(hardy_weinberg()),
                                 ModelInput(ideal_of(coordinate_ring(4), {"p_0*p_3 - p_1*p_2"}))};
  for (const auto& [name, matrix] : small_toric_corpus())
    corpus.emplace_back(toric_model_from_matrix(matrix));
  corpus.emplace_back(rational_normal_scroll({2, 2}));
  for (const auto& input : corpus) {
    const LikelihoodIdeal lc = compute_lc(input);
    const GroebnerBasis gb = buchberger(lc.ideal);
    const Ideal model = model_ideal(input).mapped(lc.ring());
    for (const auto& f : model.generators()) CHECK(ideal_contains(gb, f));

    const std::size_t count = lc.ring()->nvars() / 2;
    std::vector<Polynomial> factors;
    Polynomial p_plus(lc.ring());
    for (std::size_t i = 0; i < count; ++i) {
      factors.push_back(Polynomial::variable(lc.ring(), i));
      p_plus += factors.back();
    }
    factors.push_back(p_plus);
    CHECK(ideal_equal(saturate_by_product(lc.ideal, factors), lc.ideal));
  }
}

TEST_CASE("toric path generators are bihomogeneous") {
  for (const auto& [name, matrix] : small_toric_corpus()) {
    CAPTURE(name);
    const LikelihoodIdeal lc = compute_lc_toric(toric_model_from_matrix(matrix));
    const std::size_t count = lc.ring()->nvars() / 2;
    std::vector<std::size_t> ps, us;
    for (std::size_t i = 0; i < count; ++i) {
      ps.push_back(i);
      us.push_back(count + i);
    }
    for (const auto& g : lc.generators()) {
      CHECK(g.is_homogeneous_in(ps));
      CHECK(g.is_homogeneous_in(us));
    }
  }
}

TEST_CASE("compute_lc dispatch") {
  const auto x = std::vector<DiscreteRandomVariable>{{"a", 2}, {"b", 2}, {"c", 2}};
  const ModelGraph chain = ModelGraph::from_named_edges(x, {{"a", "b"}, {"b", "c"}});
  const LikelihoodIdeal from_graph = compute_lc(ModelInput(chain));
  CHECK(from_graph.generators() == compute_lc_toric(toric_model_from_matrix(kChainMatrix)).generators());

  const LikelihoodIdeal cubic = compute_lc(ModelInput(toric_model_from_matrix(IntMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}})));
  const GroebnerBasis gb = buchberger(cubic.ideal);
  for (const char* minor : {"p_1^2 - p_0*p_2", "p_1*p_2 - p_0*p_3", "p_2^2 - p_1*p_3"})
    CHECK(ideal_contains(gb, parse_polynomial(minor, cubic.ring())));
}

TEST_CASE("scroll {2,2,3} likelihood ideal") {
  const ToricModel scroll = rational_normal_scroll({2, 2, 3});
  const LikelihoodIdeal lc = compute_lc_toric(scroll);
  CHECK(lc.ring()->nvars() == 14);
  const GroebnerBasis gb = buchberger(lc.ideal);
  const Ideal toric = toric_ideal(scroll).mapped(lc.ring());
  for (const auto& f : toric.generators()) CHECK(ideal_contains(gb, f));
}

TEST_CASE("singular-locus saturation") {
  // Smooth conic: unchanged.
  CHECK(ideal_equal(compute_lc_general(hardy_weinberg(), {true}).ideal, example_one_output()));
  // Cuspidal cubic: the extra saturation can only enlarge the ideal.
  const Ideal cusp = ideal_of(coordinate_ring(3), {"p_0*p_2^2 - p_1^3"});
  const LikelihoodIdeal plain = compute_lc_general(cusp);
  const LikelihoodIdeal saturated = compute_lc_general(cusp, {true});
  const GroebnerBasis gb = buchberger(saturated.ideal);
  for (const auto& g : plain.generators()) CHECK(ideal_contains(gb, g));
}

TEST_CASE("compute_lc_general input errors") {
  CHECK_THROWS_AS(compute_lc_general(ideal_of(coordinate_ring(3), {"p_0*p_1 - p_2"})), InputError);
  CHECK_THROWS_AS(compute_lc_general(ideal_of(coordinate_ring(3), {"p_0", "p_1", "p_2", "1"})), InputError);
  CHECK_THROWS_AS(compute_lc_general(Ideal(coordinate_ring(1))), InputError);
}

TEST_CASE("model variables are identified with p by position") {
  const Ring xyz = PolyRing::make({"x", "y", "z"});
  const Ideal hw = ideal_of(xyz, {"4*x*z - y^2"});
  CHECK(ideal_equal(compute_lc_general(hw).ideal, example_one_output()));
}

TEST_CASE("ml_degree") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    MLDegreeOptions options;
    options.seed = seed;
    CHECK(ml_degree(ModelInput(hardy_weinberg()), options) == 1);
    CHECK(ml_degree(ModelInput(ideal_of(coordinate_ring(4), {"p_0*p_3 - p_1*p_2"})), options) == 1);
  }
  for (std::size_t n = 1; n <= 3; ++n) CHECK(ml_degree(ModelInput(Ideal(coordinate_ring(n + 1)))) == 1);
  // Unscaled rational normal curves: the score equation on t = 1 has degree d in s.
  CHECK(ml_degree(ModelInput(toric_model_from_matrix(IntMatrix{{1, 1, 1}, {0, 1, 2}}))) == 2);
  CHECK(ml_degree(ModelInput(toric_model_from_matrix(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}))) == 3);
  // Decomposable graphical model.
  const auto x = std::vector<DiscreteRandomVariable>{{"a", 2}, {"b", 2}, {"c", 2}};
  CHECK(ml_degree(ModelInput(ModelGraph::from_named_edges(x, {{"a", "b"}, {"b", "c"}}))) == 1);
}

TEST_CASE("ml_degree options and errors") {
  MLDegreeOptions options;
  options.trials = 0;
  CHECK_THROWS_AS(ml_degree(ModelInput(hardy_weinberg()), options), InputError);
  options.trials = 1;
  options.u_low = 0;
  CHECK_THROWS_AS(ml_degree(ModelInput(hardy_weinberg()), options), InputError);
  options.u_low = 5;
  options.u_high = 4;
  CHECK_THROWS_AS(ml_degree(ModelInput(hardy_weinberg()), options), InputError);
  options.u_low = options.u_high = 7;
  CHECK(ml_degree(ModelInput(hardy_weinberg()), options) == 1);

  const LikelihoodIdeal lc = compute_lc_general(hardy_weinberg());
  CHECK_THROWS_AS(fiber_degree(lc, {Rational(1), Rational(2)}), DimensionError);
  CHECK(fiber_degree(lc, {Rational(3), Rational(5), Rational(7)}) == 1);
}
