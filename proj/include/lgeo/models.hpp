#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgeo/exactmath.hpp"

namespace lgeo {

/// SplitMix64 (Steele, Lea, Flood): state advances by the golden-ratio
/// increment and each output is the standard two-multiply finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Top 53 bits of the next output; the draw is value / 2^53 in [0, 1).
  std::uint64_t next_53();
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::uint64_t state_;
};

/// Finite random variable on states 1..arity with an exact pmf.
class DiscreteRandomVariable {
 public:
  /// Uniform pmf.
  DiscreteRandomVariable(std::string name, std::size_t arity);
  /// pmf[s-1] is the probability of state s. Entries must be nonnegative
  /// and sum to exactly 1.
  DiscreteRandomVariable(std::string name, std::size_t arity, std::vector<Rational> pmf);
  /// Support map from states to probabilities; unlisted states get 0.
  /// States outside 1..arity are rejected.
  static DiscreteRandomVariable from_support(std::string name, std::size_t arity,
                                             const std::map<std::size_t, Rational>& support);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return pmf_.size(); }
  const std::vector<Rational>& pmf() const { return pmf_; }
  const Rational& probability(std::size_t state) const;

  friend bool operator==(const DiscreteRandomVariable&, const DiscreteRandomVariable&) = default;

 private:
  std::string name_;
  std::vector<Rational> pmf_;
};

std::vector<std::size_t> states(const DiscreteRandomVariable& x);

Rational mean(const DiscreteRandomVariable& x);

/// n inverse-CDF draws over states in ascending order, driven by
/// SplitMix64(seed). Comparisons against the CDF are exact.
std::vector<std::size_t> sample(const DiscreteRandomVariable& x, std::size_t n,
                                std::uint64_t seed);

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on random variables; vertex names are unique.
class ModelGraph {
 public:
  ModelGraph(std::vector<DiscreteRandomVariable> vertices, std::vector<Edge> edges);
  static ModelGraph from_named_edges(std::vector<DiscreteRandomVariable> vertices,
                                     const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<DiscreteRandomVariable>& vertices() const { return vertices_; }
  /// Normalized so that first < second, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<DiscreteRandomVariable> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

using Clique = std::vector<std::size_t>;

/// All maximal cliques by Bron-Kerbosch with pivoting. Each clique lists
/// vertex positions ascending; the list is sorted lexicographically.
std::vector<Clique> maximal_cliques(const ModelGraph& g);

}  // namespace lgeo
