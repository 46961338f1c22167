#pragma once

#include <cstdint>
#include <vector>

#include "vieq/common.hpp"

namespace vieq {

// A finitely generated closed convex cone with vertex at the origin.
//
// Two dual descriptions are kept in sync: `generators` span the cone as
// nonnegative combinations, `halfspaces` cut it out as {x : <h, x> <= 0}.
// The halfspace normals are exactly the extreme rays of the polar cone, so
// polar() is a role swap. Halfspaces are derived from the generators at
// construction by a double-description sweep; this limits the class to the
// finitely generated case, which is all the solvers need at desk scale.
class PolyhedralCone {
 public:
  // Empty generator list yields the trivial cone {0}.
  static PolyhedralCone from_generators(int dim,
                                        const std::vector<Vector>& generators);

  // R^N_+ and R^N conveniences used all over the tests and builtins.
  static PolyhedralCone nonnegative_orthant(int dim);
  static PolyhedralCone full_space(int dim);

  int dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return generators_; }
  const std::vector<Vector>& halfspaces() const { return halfspaces_; }

  // max over unit halfspace normals of <h, x>; negative inside, 0 when the
  // description is empty (whole space).
  double halfspace_slack(const Vector& x) const;
  bool contains(const Vector& x, double tol = kTauGeo) const;

  PolyhedralCone polar() const;

 private:
  PolyhedralCone(int dim, std::vector<Vector> generators,
                 std::vector<Vector> halfspaces);

  int dim_ = 0;
  std::vector<Vector> generators_;
  std::vector<Vector> halfspaces_;
};

struct ProjectionResult {
  Vector point;
  double distance = 0.0;
};

// Nearest point of the cone, by nonnegative least squares over generators.
ProjectionResult project_cone(const PolyhedralCone& cone, const Vector& v);

// Independent route to the same point: Dykstra sweeps over the halfspace
// description. Kept public so tests can cross-validate the two paths.
ProjectionResult project_cone_dykstra(const PolyhedralCone& cone,
                                      const Vector& v,
                                      double move_tol = 1e-12,
                                      int max_sweeps = 10000);

// true iff <g, z> <= tol for every (unit) generator g, i.e. z lies in the
// polar cone.
bool polar_contains(const PolyhedralCone& cone, const Vector& z,
                    double tol = kTauGeo);

// The three compact convex feasible-set shapes the solvers run on: the unit
// simplex, the closed unit ball, and the ball capped by a polyhedral cone.
class ConvexCompactSet {
 public:
  enum class Kind { Simplex, Ball, BallCapCone };

  static ConvexCompactSet simplex(int dim);
  static ConvexCompactSet ball(int dim);
  static ConvexCompactSet ball_cap_cone(PolyhedralCone cone);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const PolyhedralCone& cone() const;

  // Signed violation measure: <= 0 inside, grows with the worst constraint
  // violation outside. contains() compares it against tol.
  double membership_residual(const Vector& x) const;
  bool contains(const Vector& x, double tol = kTauGeo) const;
  double diameter() const;

 private:
  ConvexCompactSet(Kind kind, int dim);

  Kind kind_;
  int dim_;
  std::vector<PolyhedralCone> cone_;  // 0 or 1 entries
};

// Euclidean projection onto the set. Simplex uses the exact sort-and-threshold
// method, the ball rescales radially, and the capped cone alternates Dykstra
// steps between the two exact factor projections.
ProjectionResult project(const ConvexCompactSet& set, const Vector& v);

// Exact projection onto the unit simplex (sort and threshold).
Vector project_simplex(const Vector& v);

struct SupportResult {
  double value = 0.0;
  Vector argmax;
};

// max_{x in K} <c, x> together with a maximizer. Closed forms per shape; the
// capped cone goes through the Moreau decomposition of c.
SupportResult support_max(const ConvexCompactSet& set, const Vector& c);

// max_{v in K} <u, v - x>; zero (within tol) certifies u in the normal cone
// of K at x. Throws PointNotInSet when x is not in K within tol.
double normal_cone_residual(const ConvexCompactSet& set, const Vector& x,
                            const Vector& u, double tol = kTauGeo);

// Deterministic, seeded interior/boundary samples. Simplex sampling places
// the vertices first whenever count >= dim.
std::vector<Vector> sample_set(const ConvexCompactSet& set, int count,
                               std::uint64_t seed);

// Nonnegative least squares min ||A x - b||, x >= 0 (Lawson-Hanson active
// set). Shared by cone projection and a few tests.
Vector nnls(const Matrix& A, const Vector& b, int max_iter = 0);

}  // namespace vieq
