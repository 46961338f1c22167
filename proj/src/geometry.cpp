#include "vieq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vieq {

namespace {

constexpr double kDedupTol = 1e-10;
constexpr double kPruneTol = 1e-10;

Matrix columns(const std::vector<Vector>& vs, int dim) {
  Matrix m(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

double cone_distance(const std::vector<Vector>& rays, int dim, const Vector& z) {
  if (rays.empty()) return z.norm();
  const Matrix a = columns(rays, dim);
  const Vector x = nnls(a, z);
  return (a * x - z).norm();
}

// Drop rays representable as nonnegative combinations of the remaining ones.
void prune_redundant(std::vector<Vector>& rays, int dim) {
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<Vector> rest;
    rest.reserve(rays.size() - 1);
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != i) rest.push_back(rays[j]);
    }
    if (!rest.empty() && cone_distance(rest, dim, rays[i]) <= kPruneTol) {
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
}

void dedup_rays(std::vector<Vector>& rays) {
  std::vector<Vector> out;
  for (const Vector& r : rays) {
    bool dup = false;
    for (const Vector& kept : out) {
      if ((kept - r).lpNorm<Eigen::Infinity>() <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(r);
  }
  rays.swap(out);
}

// Extreme rays of {z : <g, z> <= 0 for all g}: start from the rays of R^N and
// cut with one constraint at a time, pairing strictly positive rays with
// strictly negative ones. Redundant combinations are pruned as we go, which
// keeps the ray count near-minimal without an adjacency test.
std::vector<Vector> dual_rays(int dim, const std::vector<Vector>& gens) {
  std::vector<Vector> rays;
  rays.reserve(2 * static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1.0;
    rays.push_back(e);
    rays.push_back(-e);
  }
  constexpr double kSideTol = 1e-12;
  for (const Vector& g : gens) {
    std::vector<Vector> keep;
    std::vector<std::pair<Vector, double>> pos;
    std::vector<std::pair<Vector, double>> neg;
    for (const Vector& r : rays) {
      const double v = g.dot(r);
      if (v <= kSideTol) keep.push_back(r);
      if (v > kSideTol) pos.emplace_back(r, v);
      if (v < -kSideTol) neg.emplace_back(r, v);
    }
    for (const auto& [rp, vp] : pos) {
      for (const auto& [rn, vn] : neg) {
        Vector mix = vp * rn - vn * rp;  // <g, mix> = 0, mix in cone(rp, rn)
        const double n = mix.norm();
        if (n <= 1e-12) continue;
        keep.push_back(mix / n);
      }
    }
    dedup_rays(keep);
    prune_redundant(keep, dim);
    rays.swap(keep);
    if (rays.empty()) break;
  }
  return rays;
}

}  // namespace

// ---------------------------------------------------------------------------
// NNLS
// ---------------------------------------------------------------------------

Vector nnls(const Matrix& a, const Vector& b, int max_iter) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Vector(0);
  if (max_iter <= 0) max_iter = 3 * static_cast<int>(n) + 30;

  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double scale = std::max(1.0, (a.transpose() * b).lpNorm<Eigen::Infinity>());
  const double tol = 1e-13 * scale;

  auto solve_passive = [&](const std::vector<int>& idx) -> Vector {
    Matrix sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = a.col(idx[j]);
    return sub.colPivHouseholderQr().solve(b);
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    const Vector w = a.transpose() * (b - a * x);
    int best = -1;
    double best_w = tol;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!passive[static_cast<std::size_t>(i)] && w[i] > best_w) {
        best_w = w[i];
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<int> idx;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)]) idx.push_back(static_cast<int>(i));
      }
      if (idx.empty()) break;
      const Vector z = solve_passive(idx);
      double alpha = 1.0;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (z[static_cast<Eigen::Index>(j)] <= 0.0) {
          const double xi = x[idx[j]];
          const double step = xi / (xi - z[static_cast<Eigen::Index>(j)]);
          alpha = std::min(alpha, step);
        }
      }
      if (alpha >= 1.0) {
        x.setZero();
        for (std::size_t j = 0; j < idx.size(); ++j) x[idx[j]] = z[static_cast<Eigen::Index>(j)];
        break;
      }
      Vector xn = Vector::Zero(n);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const double moved = x[idx[j]] + alpha * (z[static_cast<Eigen::Index>(j)] - x[idx[j]]);
        xn[idx[j]] = moved;
      }
      x = xn;
      for (int i : idx) {
        if (x[i] <= 1e-14 * scale) {
          passive[static_cast<std::size_t>(i)] = false;
          x[i] = 0.0;
        }
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) x[i] = std::max(x[i], 0.0);
  return x;
}

// ---------------------------------------------------------------------------
// PolyhedralCone
// ---------------------------------------------------------------------------

PolyhedralCone::PolyhedralCone(int dim, std::vector<Vector> generators,
                               std::vector<Vector> halfspaces)
    : dim_(dim),
      generators_(std::move(generators)),
      halfspaces_(std::move(halfspaces)) {}

PolyhedralCone PolyhedralCone::from_generators(
    int dim, const std::vector<Vector>& generators) {
  if (dim <= 0) throw InvalidInput("cone dimension must be positive");
  std::vector<Vector> gens;
  gens.reserve(generators.size());
  for (const Vector& g : generators) {
    check_dim(g, dim, "cone generator");
    check_finite(g, "cone generator");
    const double n = g.norm();
    if (n <= 0.0) throw InvalidInput("cone generators must be nonzero");
    gens.push_back(g / n);
  }
  dedup_rays(gens);
  prune_redundant(gens, dim);

  std::vector<Vector> halves = dual_rays(dim, gens);

  PolyhedralCone cone(dim, std::move(gens), std::move(halves));

  // Cross-validate the two descriptions: every generator must satisfy every
  // halfspace, and membership must classify identically along random rays.
  for (const Vector& g : cone.generators_) {
    if (cone.halfspace_slack(g) > 1e-9) {
      throw InvalidInput("cone construction: generator violates derived halfspace");
    }
  }
  Rng rng(derive_seed(0xC0FFEEULL, static_cast<std::uint64_t>(dim)));
  for (int trial = 0; trial < 64; ++trial) {
    Vector z = rng.gaussian_vector(dim);
    const double n = z.norm();
    if (n <= 1e-12) continue;
    z /= n;
    const double slack = cone.halfspace_slack(z);
    const double dist = cone_distance(cone.generators_, dim, z);
    const bool by_halves = slack <= 1e-9;
    const bool by_gens = dist <= 1e-8;
    const bool near_boundary = std::abs(slack) < 1e-6 || (dist > 0.0 && dist < 1e-6);
    if (!near_boundary && by_halves != by_gens) {
      throw InvalidInput("cone construction: dual descriptions disagree");
    }
  }
  return cone;
}

PolyhedralCone PolyhedralCone::nonnegative_orthant(int dim) {
  std::vector<Vector> gens;
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1.0;
    gens.push_back(e);
  }
  return from_generators(dim, gens);
}

PolyhedralCone PolyhedralCone::full_space(int dim) {
  std::vector<Vector> gens;
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1.0;
    gens.push_back(e);
    gens.push_back(-e);
  }
  return from_generators(dim, gens);
}

double PolyhedralCone::halfspace_slack(const Vector& x) const {
  check_dim(x, dim_, "halfspace_slack");
  double worst = halfspaces_.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
  for (const Vector& h : halfspaces_) worst = std::max(worst, h.dot(x));
  return worst;
}

bool PolyhedralCone::contains(const Vector& x, double tol) const {
  return halfspace_slack(x) <= tol;
}

PolyhedralCone PolyhedralCone::polar() const {
  return PolyhedralCone(dim_, halfspaces_, generators_);
}

ProjectionResult project_cone(const PolyhedralCone& cone, const Vector& v) {
  check_dim(v, cone.dim(), "project_cone");
  check_finite(v, "project_cone");
  if (cone.generators().empty()) {
    return {Vector::Zero(cone.dim()), v.norm()};
  }
  const Matrix a = columns(cone.generators(), cone.dim());
  const Vector x = nnls(a, v);
  Vector point = a * x;
  return {point, (v - point).norm()};
}

ProjectionResult project_cone_dykstra(const PolyhedralCone& cone,
                                      const Vector& v, double move_tol,
                                      int max_sweeps) {
  check_dim(v, cone.dim(), "project_cone_dykstra");
  const auto& halves = cone.halfspaces();
  if (halves.empty()) return {v, 0.0};
  Vector y = v;
  std::vector<Vector> corrections(halves.size(), Vector::Zero(cone.dim()));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const Vector before = y;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      const Vector z = y + corrections[i];
      const double s = std::max(0.0, halves[i].dot(z));
      const Vector projected = z - s * halves[i];
      corrections[i] = z - projected;
      y = projected;
    }
    if ((y - before).norm() < move_tol) break;
  }
  return {y, (v - y).norm()};
}

bool polar_contains(const PolyhedralCone& cone, const Vector& z, double tol) {
  check_dim(z, cone.dim(), "polar_contains");
  for (const Vector& g : cone.generators()) {
    if (g.dot(z) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ConvexCompactSet
// ---------------------------------------------------------------------------

ConvexCompactSet::ConvexCompactSet(Kind kind, int dim) : kind_(kind), dim_(dim) {
  if (dim <= 0) throw InvalidInput("set dimension must be positive");
}

ConvexCompactSet ConvexCompactSet::simplex(int dim) {
  return ConvexCompactSet(Kind::Simplex, dim);
}

ConvexCompactSet ConvexCompactSet::ball(int dim) {
  return ConvexCompactSet(Kind::Ball, dim);
}

ConvexCompactSet ConvexCompactSet::ball_cap_cone(PolyhedralCone cone) {
  ConvexCompactSet set(Kind::BallCapCone, cone.dim());
  set.cone_.push_back(std::move(cone));
  return set;
}

const PolyhedralCone& ConvexCompactSet::cone() const {
  if (cone_.empty()) throw InvalidInput("set has no cone component");
  return cone_.front();
}

double ConvexCompactSet::membership_residual(const Vector& x) const {
  check_dim(x, dim_, "membership_residual");
  switch (kind_) {
    case Kind::Simplex: {
      double worst = std::abs(x.sum() - 1.0);
      for (int i = 0; i < dim_; ++i) worst = std::max(worst, -x[i]);
      return worst;
    }
    case Kind::Ball:
      return x.norm() - 1.0;
    case Kind::BallCapCone:
      return std::max(x.norm() - 1.0, cone_.front().halfspace_slack(x));
  }
  return 0.0;
}

bool ConvexCompactSet::contains(const Vector& x, double tol) const {
  return membership_residual(x) <= tol;
}

double ConvexCompactSet::diameter() const {
  switch (kind_) {
    case Kind::Simplex:
      return std::sqrt(2.0);
    case Kind::Ball:
    case Kind::BallCapCone:
      return 2.0;
  }
  return 2.0;
}

Vector project_simplex(const Vector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  int support = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    running += u[static_cast<std::size_t>(k)];
    const double candidate = (running - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] - candidate > 0.0) {
      theta = candidate;
      support = static_cast<int>(k) + 1;
    }
  }
  (void)support;
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

namespace {

Vector project_ball(const Vector& v) {
  const double n = v.norm();
  return n <= 1.0 ? v : Vector(v / n);
}

// Dykstra alternation between the ball and the cone; both factor projections
// are exact, so the sweep settles quickly.
Vector project_ball_cap_cone(const PolyhedralCone& cone, const Vector& v) {
  Vector y = v;
  Vector p = Vector::Zero(v.size());
  Vector q = Vector::Zero(v.size());
  for (int sweep = 0; sweep < 10000; ++sweep) {
    const Vector before = y;
    const Vector c_in = y + p;
    const Vector c_out = project_cone(cone, c_in).point;
    p = c_in - c_out;
    const Vector b_in = c_out + q;
    const Vector b_out = project_ball(b_in);
    q = b_in - b_out;
    y = b_out;
    if ((y - before).norm() < 1e-12) break;
  }
  return y;
}

}  // namespace

ProjectionResult project(const ConvexCompactSet& set, const Vector& v) {
  check_dim(v, set.dim(), "project");
  check_finite(v, "project");
  Vector point;
  switch (set.kind()) {
    case ConvexCompactSet::Kind::Simplex:
      point = project_simplex(v);
      break;
    case ConvexCompactSet::Kind::Ball:
      point = project_ball(v);
      break;
    case ConvexCompactSet::Kind::BallCapCone:
      point = project_ball_cap_cone(set.cone(), v);
      break;
  }
  return {point, (v - point).norm()};
}

SupportResult support_max(const ConvexCompactSet& set, const Vector& c) {
  check_dim(c, set.dim(), "support_max");
  check_finite(c, "support_max");
  switch (set.kind()) {
    case ConvexCompactSet::Kind::Simplex: {
      Eigen::Index best = 0;
      c.maxCoeff(&best);
      Vector arg = Vector::Zero(set.dim());
      arg[best] = 1.0;
      return {c[best], arg};
    }
    case ConvexCompactSet::Kind::Ball: {
      const double n = c.norm();
      if (n <= 0.0) return {0.0, Vector::Zero(set.dim())};
      return {n, Vector(c / n)};
    }
    case ConvexCompactSet::Kind::BallCapCone: {
      const Vector onto = project_cone(set.cone(), c).point;
      const double n = onto.norm();
      if (n <= 1e-15) return {0.0, Vector::Zero(set.dim())};
      return {n, Vector(onto / n)};
    }
  }
  return {0.0, Vector::Zero(set.dim())};
}

double normal_cone_residual(const ConvexCompactSet& set, const Vector& x,
                            const Vector& u, double tol) {
  check_dim(u, set.dim(), "normal_cone_residual");
  if (set.membership_residual(x) > tol) {
    throw PointNotInSet("normal_cone_residual: point violates the set");
  }
  return support_max(set, u).value - u.dot(x);
}

std::vector<Vector> sample_set(const ConvexCompactSet& set, int count,
                               std::uint64_t seed) {
  if (count < 1) throw InvalidInput("sample_set: count must be >= 1");
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  const int n = set.dim();
  switch (set.kind()) {
    case ConvexCompactSet::Kind::Simplex: {
      if (count >= n) {
        for (int i = 0; i < n && static_cast<int>(out.size()) < count; ++i) {
          Vector e = Vector::Zero(n);
          e[i] = 1.0;
          out.push_back(e);
        }
      }
      while (static_cast<int>(out.size()) < count) {
        Vector v(n);
        for (int i = 0; i < n; ++i) {
          double u = 0.0;
          do {
            u = rng.uniform();
          } while (u <= 0.0);
          v[i] = -std::log(u);
        }
        out.push_back(v / v.sum());
      }
      break;
    }
    case ConvexCompactSet::Kind::Ball: {
      while (static_cast<int>(out.size()) < count) {
        Vector d = rng.gaussian_vector(n);
        const double dn = d.norm();
        if (dn <= 1e-12) continue;
        const double radius = std::pow(rng.uniform(), 1.0 / n);
        out.push_back(d * (radius / dn));
      }
      break;
    }
    case ConvexCompactSet::Kind::BallCapCone: {
      const auto& gens = set.cone().generators();
      if (gens.empty()) {
        out.assign(static_cast<std::size_t>(count), Vector::Zero(n));
        break;
      }
      while (static_cast<int>(out.size()) < count) {
        Vector v = Vector::Zero(n);
        for (const Vector& g : gens) v += rng.uniform() * g;
        const double vn = v.norm();
        if (vn <= 1e-12) {
          out.push_back(Vector::Zero(n));
          continue;
        }
        const double radius = std::pow(rng.uniform(), 1.0 / n);
        out.push_back(v * (radius / vn));
      }
      break;
    }
  }
  return out;
}

}  // namespace vieq
