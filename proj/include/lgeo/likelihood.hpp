#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "lgeo/groebner.hpp"
#include "lgeo/models.hpp"
#include "lgeo/toric.hpp"

namespace lgeo {

enum class Saturation { full, hyperplane };
enum class LCMethod { toric, lagrange };

/// Ideal of the likelihood correspondence in Q[p_0..p_n, u_0..u_n].
struct LikelihoodIdeal {
  Ideal ideal;
  LCMethod method;
  Saturation saturation;

  const Ring& ring() const { return ideal.ring(); }
  const std::vector<Polynomial>& generators() const { return ideal.generators(); }
};

/// A model given by its ideal in Q[p], a toric matrix, or an undirected graph.
using ModelInput = std::variant<Ideal, ToricModel, ModelGraph>;

/// Q[p_0..p_n, u_0..u_n] under grevlex.
Ring lc_ring(std::size_t n);

/// Toric path: I_X + 2-minors of A*[p | u], saturated by p_+ and every p_i
/// (full) or by p_+ alone (hyperplane).
LikelihoodIdeal compute_lc_toric(const ToricModel& model, Saturation saturation = Saturation::full);

struct LagrangeOptions {
  /// Also saturate by the Jacobian minors cutting out the singular locus.
  bool saturate_singular = false;
};

/// Lagrange path for a homogeneous proper ideal. Variables of the model
/// ring are identified with p_0..p_n by position.
LikelihoodIdeal compute_lc_general(const Ideal& model, LagrangeOptions options = {});

LikelihoodIdeal compute_lc(const ModelInput& input, Saturation saturation = Saturation::full,
                           LagrangeOptions options = {});

/// The model's own ideal in Q[p_0..p_n].
Ideal model_ideal(const ModelInput& input);

struct MLDegreeOptions {
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  std::int64_t u_low = 1;
  std::int64_t u_high = 1000;
  Saturation saturation = Saturation::full;
  LagrangeOptions lagrange;
  /// Passed to quotient_dimension for each fiber.
  std::uint64_t monomial_cap = kStandardMonomialCap;
};

/// Number of points in the fiber of the likelihood correspondence over
/// random integer data u, on the chart p_+ = 1 away from the coordinate
/// hyperplanes. Returns the most frequent count over the trials.
std::uint64_t ml_degree(const ModelInput& input, const MLDegreeOptions& options = {});

/// Fiber count for one data vector.
std::uint64_t fiber_degree(const LikelihoodIdeal& lc, const std::vector<Rational>& u,
                           std::uint64_t monomial_cap = kStandardMonomialCap);

}  // namespace lgeo
