#pragma once

#include "vieq/geometry.hpp"

namespace vieq {

// true iff the cone is a linear subspace: -g stays inside for every generator.
bool is_subspace(const PolyhedralCone& cone, double tol = kTauGeo);

// A nonzero vector in polar(P) ∩ (-P) that lies outside P. Built by scanning
// generators in order for the first g with -g outside P, then subtracting g
// from its projection onto -P. The result is unit-normalized. Throws
// SubspaceConeError when the cone is a subspace (no such vector exists).
Vector find_polar_vector(const PolyhedralCone& cone);

// Continuous retraction of (unit ball ∩ P) onto (unit sphere ∩ P): points are
// pushed along the ray away from the witness vector until they hit the
// sphere; sphere points stay fixed.
class RetractionMap {
 public:
  // Picks the witness deterministically via find_polar_vector.
  explicit RetractionMap(PolyhedralCone cone);

  // Uses the supplied witness as-is (no rescaling); it must satisfy the same
  // membership constraints as the constructed one.
  RetractionMap(PolyhedralCone cone, Vector witness);

  const PolyhedralCone& cone() const { return cone_; }
  const Vector& witness() const { return witness_; }
  int dim() const { return cone_.dim(); }

  // Nonnegative root of ||x + t (x - witness)|| = 1, evaluated with the
  // cancellation-safe form of the quadratic formula.
  double ray_scale(const Vector& x, double tol = kTauGeo) const;

  Vector retract(const Vector& x, double tol = kTauGeo) const;

 private:
  void validate_witness() const;

  PolyhedralCone cone_;
  Vector witness_;
};

}  // namespace vieq
