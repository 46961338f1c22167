#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vieq/common.hpp"

namespace vieq {

// A point-to-point map evaluated through a callback. The descriptor records
// where the map came from (builtin name, affine data, ...) so certificates
// can echo it.
struct MapOracle {
  int dim = 0;
  std::function<Vector(const Vector&)> eval;
  std::string descriptor;

  Vector operator()(const Vector& x) const {
    check_dim(x, dim, "map oracle input");
    Vector out = eval(x);
    check_dim(out, dim, "map oracle output");
    check_finite(out, "map oracle output");
    return out;
  }
};

// A set-valued map whose value at x is the convex hull of finitely many
// vertex evaluations. The common case is a fixed list of continuous branch
// maps; a custom vertex callback supports derived oracles (weak-form
// filtering, composition with a retraction) without changing consumers.
class CorrespondenceOracle {
 public:
  CorrespondenceOracle(int dim, std::vector<MapOracle> branches)
      : dim_(dim), branches_(std::move(branches)) {
    if (branches_.empty()) {
      throw InvalidInput("correspondence needs at least one branch");
    }
    for (const MapOracle& b : branches_) {
      if (b.dim != dim_) {
        throw DimensionError("correspondence branch dimension mismatch");
      }
    }
  }

  CorrespondenceOracle(int dim,
                       std::function<std::vector<Vector>(const Vector&)> vertex_fn,
                       std::string descriptor)
      : dim_(dim), vertex_fn_(std::move(vertex_fn)), descriptor_(std::move(descriptor)) {}

  static CorrespondenceOracle from_map(const MapOracle& f) {
    return CorrespondenceOracle(f.dim, std::vector<MapOracle>{f});
  }

  int dim() const { return dim_; }
  bool single_branch() const { return !branches_.empty() && branches_.size() == 1; }
  const std::vector<MapOracle>& branches() const { return branches_; }

  std::vector<Vector> vertices_at(const Vector& x) const {
    if (vertex_fn_) {
      std::vector<Vector> vs = vertex_fn_(x);
      if (vs.empty()) throw InvalidInput("correspondence produced no vertices");
      for (const Vector& v : vs) {
        check_dim(v, dim_, "correspondence vertex");
        check_finite(v, "correspondence vertex");
      }
      return vs;
    }
    std::vector<Vector> vs;
    vs.reserve(branches_.size());
    for (const MapOracle& b : branches_) vs.push_back(b(x));
    return vs;
  }

  std::string descriptor() const {
    if (!descriptor_.empty()) return descriptor_;
    std::string d = "hull{";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
      if (i > 0) d += ", ";
      d += branches_[i].descriptor;
    }
    return d + "}";
  }

 private:
  int dim_ = 0;
  std::vector<MapOracle> branches_;
  std::function<std::vector<Vector>(const Vector&)> vertex_fn_;
  std::string descriptor_;
};

}  // namespace vieq
