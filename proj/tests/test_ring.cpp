#include <random>

#include "support.hpp"
#include "lgeo/errors.hpp"
#include "lgeo/ring.hpp"

using namespace lgeo;

namespace {

Ring p_ring(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(indexed_names("p", 0, n - 1), order);
}

Polynomial random_poly(std::mt19937& rng, const Ring& ring, int terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<Exponent> e(ring->nvars());
    for (auto& x : e) x = exp(rng);
    ts.push_back(Term{Rational(coeff(rng), 1 + (i % 3)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, ts);
}

Monomial random_monomial(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<unsigned> exp(0, 3);
  std::vector<Exponent> e(n);
  for (auto& x : e) x = exp(rng);
  return Monomial(e);
}

}  // namespace

TEST_CASE("compare_monomials examples") {
  const Monomial x0sq_x1({2, 1});
  const Monomial x0_x1sq({1, 2});
  CHECK(compare_monomials(x0sq_x1, x0_x1sq, MonomialOrder::grevlex()) > 0);
  CHECK(compare_monomials(Monomial({1, 0}), Monomial({0, 5}), MonomialOrder::lex()) > 0);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)})
    CHECK(compare_monomials(x0sq_x1, x0sq_x1, order) == 0);
  CHECK_THROWS_AS(compare_monomials(Monomial({1}), Monomial({1, 0}), MonomialOrder::lex()),
                  DimensionError);
}

TEST_CASE("grevlex breaks degree ties at the last variable") {
  // p_1^2 vs p_0*p_2: difference (-1, 2, -1), rightmost entry negative.
  CHECK(compare_monomials(Monomial({0, 2, 0}), Monomial({1, 0, 1}), MonomialOrder::grevlex()) > 0);
  CHECK(compare_monomials(Monomial({0, 2, 0}), Monomial({1, 0, 1}), MonomialOrder::lex()) < 0);
}

TEST_CASE("block order eliminates the leading block") {
  const auto order = MonomialOrder::block(1);
  CHECK(compare_monomials(Monomial({1, 0, 0}), Monomial({0, 9, 9}), order) > 0);
  CHECK(compare_monomials(Monomial({1, 0, 2}), Monomial({1, 1, 0}), order) > 0);
  CHECK(compare_monomials(Monomial({1, 0, 1}), Monomial({1, 1, 0}), order) < 0);
}

TEST_CASE("monomial orders are total and multiplicative") {
  std::mt19937 rng(99);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_monomial(rng, 4);
      const auto b = random_monomial(rng, 4);
      const auto c = random_monomial(rng, 4);
      const auto ab = compare_monomials(a, b, order);
      CHECK(ab == (0 <=> compare_monomials(b, a, order)));
      CHECK((ab == 0) == (a == b));
      if (ab > 0) CHECK(compare_monomials(a * c, b * c, order) > 0);
      if (ab > 0 && compare_monomials(b, c, order) > 0) CHECK(compare_monomials(a, c, order) > 0);
      // 1 is the minimum of every monomial order.
      CHECK(compare_monomials(a, Monomial(4), order) >= 0);
    }
  }
}

TEST_CASE("variable names and rings") {
  CHECK(canonical_variable_name("p0") == "p_0");
  CHECK(canonical_variable_name("p_0") == "p_0");
  CHECK(canonical_variable_name("p_007") == "p_7");
  CHECK(canonical_variable_name("x") == "x");
  CHECK(canonical_variable_name("ab12") == "ab_12");
  CHECK_THROWS_AS(canonical_variable_name("0p"), InputError);
  CHECK_THROWS_AS(canonical_variable_name("p_x"), InputError);
  CHECK_THROWS_AS(PolyRing::make({"p0", "p_0"}), InputError);
  CHECK_THROWS_AS(PolyRing::make({}), InputError);
  CHECK_THROWS_AS(PolyRing::make({"a", "b"}, MonomialOrder::block(2)), InputError);
  const Ring r = p_ring(3);
  CHECK(r->index("p2") == 2);
  CHECK_THROWS_AS(r->index("q"), InputError);
}

TEST_CASE("poly_arith examples") {
  const Ring r = p_ring(3);
  auto p = [&](std::size_t i) { return Polynomial::variable(r, i); };
  CHECK((p(0) + p(1)) * (p(0) - p(1)) == p(0) * p(0) - p(1) * p(1));
  const Polynomial hw = parse_polynomial("4*p_0*p_2 - p_1^2", r);
  CHECK(hw + Polynomial(r) == hw);
  CHECK(hw - Rational(4) * p(0) * p(2) == -(p(1) * p(1)));
  const Ring other = p_ring(4);
  CHECK_THROWS_AS(p(0) + Polynomial::variable(other, std::size_t{0}), RingMismatchError);
}

TEST_CASE("ring axioms and canonical form on random polynomials") {
  std::mt19937 rng(2024);
  const Ring r = p_ring(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_poly(rng, r, 4, 2);
    const auto g = random_poly(rng, r, 3, 2);
    const auto h = random_poly(rng, r, 3, 1);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Polynomial(r));
    CHECK((f * g).is_canonical());
    CHECK((f - g).is_canonical());
  }
}

TEST_CASE("differentiate") {
  const Ring r = PolyRing::make({"p_0", "p_1", "p_2", "u_0", "u_1"});
  CHECK(differentiate(parse_polynomial("4*p_0*p_2 - p_1^2", r), "p_1") ==
        parse_polynomial("-2*p_1", r));
  CHECK(differentiate(parse_polynomial("7", r), "p_0").is_zero());
  CHECK(differentiate(parse_polynomial("p_0^3*u_1", r), "p0") == parse_polynomial("3*p_0^2*u_1", r));
  CHECK_THROWS_AS(differentiate(parse_polynomial("p_0", r), "z"), InputError);
}

TEST_CASE("differentiate satisfies the Leibniz rule") {
  std::mt19937 rng(31337);
  const Ring r = p_ring(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_poly(rng, r, 4, 3);
    const auto g = random_poly(rng, r, 4, 3);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK(differentiate(f * g, v) == differentiate(f, v) * g + f * differentiate(g, v));
  }
}

TEST_CASE("parse_polynomial") {
  const Ring r = p_ring(3);
  const auto hw = parse_polynomial("4*p_0*p_2 - p_1^2", r);
  CHECK(hw.size() == 2);
  CHECK(hw == parse_polynomial("4 * p0 * p2 - p1^2", r));
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("p_0 - p_0", r).is_zero());
  CHECK(parse_polynomial("-(p_0 + 1/2)*2", r) == parse_polynomial("-2*p_0 - 1", r));
  CHECK(parse_polynomial("3/6", r) == Polynomial::constant(r, Rational(1, 2)));
}

TEST_CASE("parse_polynomial errors carry locations") {
  const Ring r = p_ring(3);
  try {
    parse_polynomial("p_0 +\n * p_1", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(parse_polynomial("p_0 p_1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("p_0^", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(p_0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("p_0^99999999999", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("q_0", r), InputError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
}

TEST_CASE("print_polynomial") {
  const Ring r = p_ring(3);
  CHECK(print_polynomial(Polynomial(r)) == "0");
  const auto hw = parse_polynomial("4*p_0*p_2 - p_1^2", r);
  CHECK(print_polynomial(hw) == "-p_1^2 + 4*p_0*p_2");
  CHECK(print_polynomial(hw.primitive()) == "p_1^2 - 4*p_0*p_2");
  const Ring lc_lex = PolyRing::make({"p_0", "p_1", "u_0", "u_1"}, MonomialOrder::lex());
  CHECK(print_polynomial(parse_polynomial("p0*u1 - p1*u0", lc_lex)) == "p_0*u_1 - p_1*u_0");
  // grevlex ranks p_1*u_0 above p_0*u_1
  const Ring lc = PolyRing::make({"p_0", "p_1", "u_0", "u_1"});
  CHECK(print_polynomial(parse_polynomial("p0*u1 - p1*u0", lc)) == "-p_1*u_0 + p_0*u_1");
  CHECK(print_polynomial(parse_polynomial("1 - 3/2*p_0", r)) == "-3/2*p_0 + 1");
  CHECK(print_polynomial(parse_polynomial("-1", r)) == "-1");
}

TEST_CASE("parse after print is the identity") {
  std::mt19937 rng(8);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    const Ring r = p_ring(4, order);
    for (int trial = 0; trial < 80; ++trial) {
      const auto f = random_poly(rng, r, 5, 3);
      CHECK(parse_polynomial(print_polynomial(f), r) == f);
    }
  }
}

TEST_CASE("substitute") {
  const Ring r = PolyRing::make({"p_0", "p_1", "u_0", "u_1"});
  const auto f = parse_polynomial("p_0*u_1 - p_1*u_0", r);
  const auto g = substitute(f, std::map<std::string, Rational>{{"u_0", 2}, {"u_1", 3}});
  CHECK(g.ring()->names() == std::vector<std::string>{"p_0", "p_1"});
  CHECK(print_polynomial(g) == "3*p_0 - 2*p_1");

  std::map<std::string, Polynomial> identity;
  for (const auto& n : r->names()) identity.emplace(n, Polynomial::variable(r, n));
  CHECK(substitute(f, identity) == f);

  const auto h = substitute(f, std::map<std::string, Polynomial>{
                                   {"u_0", parse_polynomial("p_0 + 1", r)}});
  CHECK(h == parse_polynomial("p_0*u_1 - p_0*p_1 - p_1", r));
  CHECK_THROWS_AS(substitute(f, std::map<std::string, Rational>{{"z", 1}}), InputError);
}

TEST_CASE("evaluate and map_to_ring") {
  const Ring r = p_ring(3);
  const auto hw = parse_polynomial("4*p_0*p_2 - p_1^2", r);
  CHECK(evaluate(hw, {Rational(1, 4), Rational(1, 2), Rational(1, 4)}) == 0);
  const Ring wider = PolyRing::make({"t", "p_0", "p_1", "p_2"});
  const auto moved = map_to_ring(hw, wider);
  CHECK(moved.ring() == wider);
  CHECK(map_to_ring(moved, r) == hw);
  CHECK_THROWS_AS(map_to_ring(Polynomial::variable(wider, "t"), r), InputError);
}
