#include "vieq/retraction.hpp"

#include <cmath>

namespace vieq {

bool is_subspace(const PolyhedralCone& cone, double tol) {
  for (const Vector& g : cone.generators()) {
    if (!cone.contains(-g, tol)) return false;
  }
  return true;
}

Vector find_polar_vector(const PolyhedralCone& cone) {
  if (is_subspace(cone)) {
    throw SubspaceConeError(
        "find_polar_vector: cone is a linear subspace, no polar witness exists");
  }
  for (const Vector& g : cone.generators()) {
    if (cone.contains(-g)) continue;  // need a generator outside -P
    // Projection onto -P via pi_{-P}(x) = -pi_P(-x).
    const Vector y = -project_cone(cone, -g).point;
    Vector a = y - g;
    const double n = a.norm();
    if (n <= kTauGeo) continue;
    return a / n;
  }
  throw SubspaceConeError("find_polar_vector: no generator leaves -P");
}

RetractionMap::RetractionMap(PolyhedralCone cone)
    : cone_(std::move(cone)), witness_(find_polar_vector(cone_)) {
  validate_witness();
}

RetractionMap::RetractionMap(PolyhedralCone cone, Vector witness)
    : cone_(std::move(cone)), witness_(std::move(witness)) {
  check_dim(witness_, cone_.dim(), "retraction witness");
  check_finite(witness_, "retraction witness");
  validate_witness();
}

void RetractionMap::validate_witness() const {
  if (is_subspace(cone_)) {
    throw SubspaceConeError("RetractionMap: cone is a linear subspace");
  }
  if (witness_.norm() <= kTauGeo) {
    throw InvalidInput("RetractionMap: witness must be nonzero");
  }
  if (!polar_contains(cone_, witness_, kTauGeo)) {
    throw InvalidInput("RetractionMap: witness must lie in the polar cone");
  }
  if (!cone_.contains(-witness_, kTauGeo)) {
    throw InvalidInput("RetractionMap: witness must lie in -P");
  }
  if (cone_.contains(witness_, kTauGeo)) {
    throw InvalidInput("RetractionMap: witness must lie outside P");
  }
}

double RetractionMap::ray_scale(const Vector& x, double tol) const {
  check_dim(x, dim(), "ray_scale");
  if (x.norm() - 1.0 > tol || cone_.halfspace_slack(x) > tol) {
    throw PointNotInSet("ray_scale: point outside ball ∩ cone");
  }
  const Vector dir = x - witness_;
  const double dir_sq = dir.squaredNorm();
  if (dir_sq <= tol * tol) {
    throw DegenerateDirection("ray_scale: point coincides with the witness");
  }
  const double b = x.dot(dir);
  const double c = 1.0 - x.squaredNorm();
  const double disc = std::sqrt(std::max(b * b + c * dir_sq, 0.0));
  // Conjugate form when b > 0 avoids cancellation near the sphere.
  const double scale = b > 0.0 ? c / (b + disc) : (disc - b) / dir_sq;
  return std::max(scale, 0.0);
}

Vector RetractionMap::retract(const Vector& x, double tol) const {
  const double scale = ray_scale(x, tol);
  return x + scale * (x - witness_);
}

}  // namespace vieq
