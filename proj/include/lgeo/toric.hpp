#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lgeo/exactmath.hpp"
#include "lgeo/groebner.hpp"
#include "lgeo/models.hpp"
#include "lgeo/ring.hpp"

namespace lgeo {

enum class Provenance { matrix, graph, generators, scroll };

/// A toric model given by its defining integer matrix. Each column is the
/// lattice point of one coordinate p_j; the all-ones vector lies in the
/// rational row span.
class ToricModel {
 public:
  /// Prepends a row of ones (and records it) when the matrix is not
  /// homogeneous.
  static ToricModel from_matrix(IntMatrix a, Provenance provenance = Provenance::matrix);

  const IntMatrix& matrix() const { return matrix_; }
  Provenance provenance() const { return provenance_; }
  /// True when a ones row had to be added.
  bool homogenized() const { return homogenized_; }
  /// n + 1, the number of coordinates.
  std::size_t coordinates() const { return matrix_.cols(); }

 private:
  ToricModel(IntMatrix a, Provenance provenance, bool homogenized)
      : matrix_(std::move(a)), provenance_(provenance), homogenized_(homogenized) {}
  IntMatrix matrix_;
  Provenance provenance_;
  bool homogenized_;
};

inline ToricModel toric_model_from_matrix(const IntMatrix& a) { return ToricModel::from_matrix(a); }

/// Q[p_0..p_{count-1}] under grevlex.
Ring coordinate_ring(std::size_t count);

/// Vanishing ideal of the model: lattice-basis binomials of the integer
/// kernel, saturated by every coordinate. Defaults to coordinate_ring.
Ideal toric_ideal(const ToricModel& model, Ring ring = nullptr);

/// Lattice basis orthogonal to the exponent differences of a binomial
/// ideal; recovers the defining matrix up to lattice basis change.
/// Non-binomial generators are rejected.
IntMatrix toric_polytope(const Ideal& ideal);

/// Hierarchical log-linear design matrix. Columns run over joint states of
/// `variables` (last variable fastest); rows are grouped by generator, each
/// group indexed by the joint states of that generator's variables.
IntMatrix make_loglinear_matrix(const std::vector<std::vector<std::string>>& generators,
                                const std::vector<DiscreteRandomVariable>& variables);

ToricModel toric_model_from_generators(const std::vector<std::vector<std::string>>& generators,
                                       const std::vector<DiscreteRandomVariable>& variables);

/// Undirected graphical model: generators are the maximal cliques.
ToricModel toric_model_from_graph(const ModelGraph& g);

/// Scroll from block lengths a_0..a_k (lattice points per block): a ones
/// row, an indicator row for each block after the first, and a height row.
ToricModel rational_normal_scroll(const std::vector<std::size_t>& blocks);

}  // namespace lgeo
