#pragma once

#include <sstream>

#include "doctest.h"
#include "lgeo/exactmath.hpp"
#include "lgeo/ring.hpp"

namespace doctest {

template <>
struct StringMaker<lgeo::Polynomial> {
  static String convert(const lgeo::Polynomial& f) { return f.to_string().c_str(); }
};

template <>
struct StringMaker<lgeo::IntMatrix> {
  static String convert(const lgeo::IntMatrix& m) {
    return ("\n" + lgeo::format_int_matrix(m)).c_str();
  }
};

template <>
struct StringMaker<lgeo::Rational> {
  static String convert(const lgeo::Rational& q) { return q.get_str().c_str(); }
};

}  // namespace doctest

#include "lgeo/groebner.hpp"

namespace lgeo::testing {

/// Every pairwise S-polynomial reduces to zero against the basis.
inline bool s_pairs_reduce_to_zero(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

/// Monic, no leading monomial divides another element's monomials.
inline bool is_reduced(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].lead_coeff() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (basis[i].lead_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

inline Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(ps));
}

}  // namespace lgeo::testing
