#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace vieq {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kTauGeo = 1e-9;
inline constexpr const char* kLibraryVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Error taxonomy. Everything derives from Error so callers can catch broadly.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct PointNotInSet : Error {
  using Error::Error;
};
struct SubspaceConeError : Error {
  using Error::Error;
};
struct DegenerateDirection : Error {
  using Error::Error;
};
struct RadiusTooSmall : Error {
  using Error::Error;
};
struct UncoveredPoint : Error {
  using Error::Error;
};
struct InvalidWeights : Error {
  using Error::Error;
};
struct GridTooLarge : Error {
  using Error::Error;
};
struct SizeLimit : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};

// Carries the best iterate seen so a caller can still report something useful.
struct NoConvergence : Error {
  NoConvergence(const std::string& msg, Vector best, double residual)
      : Error(msg), best_point(std::move(best)), best_residual(residual) {}
  Vector best_point;
  double best_residual;
};

inline void check_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw InvalidInput(std::string(what) + ": entries must be finite");
  }
}

inline void check_dim(const Vector& v, int dim, const char* what) {
  if (v.size() != dim) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(dim) + ", got " +
                         std::to_string(v.size()));
  }
}

// ---------------------------------------------------------------------------
// Seeded RNG. Built on mt19937_64 with hand-rolled distributions so streams
// are byte-stable across standard library implementations.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  std::uint64_t integer(std::uint64_t bound) {
    return bound == 0 ? 0 : gen_() % bound;
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Vector gaussian_vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
}

}  // namespace vieq
