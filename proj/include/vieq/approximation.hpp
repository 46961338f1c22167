#pragma once

#include <cstdint>
#include <vector>

#include "vieq/geometry.hpp"
#include "vieq/map_oracle.hpp"

namespace vieq {

struct Covering {
  std::vector<Vector> centers;
  double radius = 0.0;
};

// Greedy farthest-point covering of the set at the given radius, verified
// against a dense seeded probe sample. The first center is the projected
// probe mean, so sets whose diameter fits one ball really get one center.
// Throws RadiusTooSmall when more than max_centers would be needed.
Covering build_covering(const ConvexCompactSet& set, double radius,
                        std::uint64_t seed, int max_centers = 100000);

// Piecewise-linear hat weights max(0, r - ||x - center||), normalized to sum
// one. The support condition (weight 0 at distance >= r) is exact.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(Covering covering);

  const Covering& covering() const { return covering_; }

  // Throws UncoveredPoint if every raw hat vanishes at x.
  std::vector<double> weights(const Vector& x) const;

 private:
  Covering covering_;
};

// The continuous map built from one fixed selection per covering center,
// blended by the partition weights. Its value at x stays inside the hull of
// the selections whose centers are within the covering radius of x.
class ApproxMap {
 public:
  ApproxMap(PartitionOfUnity partition, std::vector<Vector> selections);

  const PartitionOfUnity& partition() const { return partition_; }
  const std::vector<Vector>& selections() const { return selections_; }
  int dim() const;

  Vector operator()(const Vector& x) const;
  MapOracle as_map_oracle() const;

 private:
  PartitionOfUnity partition_;
  std::vector<Vector> selections_;
};

// Fixes one selection per center as a seeded random convex combination of the
// correspondence's vertices there.
ApproxMap approximate_map(const CorrespondenceOracle& zeta,
                          PartitionOfUnity partition, std::uint64_t seed);

struct CaratheodoryDecomposition {
  std::vector<Vector> points;
  std::vector<double> weights;
  Vector target;
};

// Rewrites a convex combination using at most dim+1 of the input points by
// iterated affine-dependence elimination. Weights must be nonnegative and sum
// to one (InvalidWeights otherwise); output weights are strictly positive.
CaratheodoryDecomposition caratheodory_reduce(const std::vector<Vector>& points,
                                              const std::vector<double>& weights);

struct HullProjection {
  Vector point;
  double distance = 0.0;
};

// Nearest point of conv(vertices) to z, by Wolfe's min-norm-point algorithm.
HullProjection nearest_point_in_hull(const std::vector<Vector>& vertices,
                                     const Vector& z);

// Euclidean distance from z to the value polytope of zeta at x; zero within
// tolerance iff z belongs to zeta(x).
double correspondence_distance(const CorrespondenceOracle& zeta, const Vector& x,
                               const Vector& z);

}  // namespace vieq
