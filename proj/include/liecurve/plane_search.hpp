#pragma once

// Seeded multi-start search for the extrema of a function of 2-planes.
//
// Each restart owns a random stream derived from (seed, restart, direction),
// so results do not depend on the order in which restarts run.

#include <cstdint>
#include <functional>
#include <random>

#include "liecurve/metric_lie_algebra.hpp"

namespace liecurve {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2010c0ffeeULL;

struct SearchConfig {
  std::uint64_t seed = kDefaultSeed;
  int restarts = 64;
  int max_iters = 500;
  double step_init = 0.1;
  double step_min = 1e-10;
  /// A move is accepted when it gains more than tol * step.
  double tol = 1e-9;

  /// Throws std::invalid_argument if a field is out of range.
  void check() const;
};

/// Standard-normal draws from std::mt19937_64 via the Marsaglia polar method,
/// so the sequence is fixed by the seed on every conforming platform.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();
  Vector vector(Index dim);

 private:
  double uniform();  // in [-1, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Gram-Schmidt; throws DegeneratePlane if x vanishes or y is parallel to x
/// (residual norm below 1e-10).
Plane orthonormal_pair(const Vector& x, const Vector& y);

Plane random_plane(Index dim, NormalStream& rng);

struct SearchResult {
  double max;
  Plane argmax;
  double min;
  Plane argmin;
};

using PlaneObjective = std::function<double(const Plane&)>;

struct SearchOptimum {
  double value;
  Plane plane;
};

SearchOptimum search_max(const PlaneObjective& objective, Index dim, const SearchConfig& cfg);
/// Maximizes the negated objective; uses its own random streams.
SearchOptimum search_min(const PlaneObjective& objective, Index dim, const SearchConfig& cfg);

/// Best plane found by perturb-and-reorthonormalize hill climbing from
/// cfg.restarts random starts.
SearchResult search_extrema(const PlaneObjective& objective, Index dim, const SearchConfig& cfg);

}  // namespace liecurve
