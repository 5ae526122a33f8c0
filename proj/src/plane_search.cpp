#include "liecurve/plane_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liecurve {

void SearchConfig::check() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(step_min > 0.0) || !(step_min < step_init)) throw std::invalid_argument("need 0 < step_min < step_init");
  if (!(tol >= 0.0)) throw std::invalid_argument("tol must be non-negative");
}

double NormalStream::uniform() {
  // 53 random bits mapped onto [-1, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform();
    v = uniform();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

Vector NormalStream::vector(Index dim) {
  Vector out(dim);
  for (Index i = 0; i < dim; ++i) out[i] = next();
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Plane orthonormal_pair(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("plane vectors differ in length");
  const double nx = x.norm();
  if (!(nx > 0.0)) throw DegeneratePlane("first spanning vector vanishes");
  Plane p;
  p.x = x / nx;
  p.y = y - p.x.dot(y) * p.x;
  const double ny = p.y.norm();
  if (!(ny >= 1e-10)) throw DegeneratePlane("spanning vectors are parallel");
  p.y /= ny;
  return p;
}

Plane random_plane(Index dim, NormalStream& rng) {
  if (dim < 2) throw InvalidDimension("planes need dimension at least 2");
  for (;;) {
    Vector x = rng.vector(dim);
    Vector y = rng.vector(dim);
    try {
      return orthonormal_pair(x, y);
    } catch (const DegeneratePlane&) {
    }
  }
}

namespace {

struct Climb {
  double value;
  Plane plane;
};

// Hill climbing on sign * objective. Each step moves both spanning vectors
// along a random direction orthogonal to themselves, trying the opposite
// direction before giving up and halving the step. Success doubles the
// step, up to step_init.
Climb climb(const PlaneObjective& objective, double sign, Climb best, Index dim, const SearchConfig& cfg,
            NormalStream& rng) {
  double step = cfg.step_init;

  for (int iter = 0; iter < cfg.max_iters && step >= cfg.step_min; ++iter) {
    Vector dx = rng.vector(dim);
    Vector dy = rng.vector(dim);
    dx -= best.plane.x.dot(dx) * best.plane.x;
    dy -= best.plane.y.dot(dy) * best.plane.y;
    const double scale = std::sqrt(dx.squaredNorm() + dy.squaredNorm());
    if (!(scale > 0.0)) continue;
    dx *= step / scale;
    dy *= step / scale;

    bool moved = false;
    for (const double dir : {1.0, -1.0}) {
      Plane candidate;
      try {
        candidate = orthonormal_pair(best.plane.x + dir * dx, best.plane.y + dir * dy);
      } catch (const DegeneratePlane&) {
        continue;
      }
      const double value = sign * objective(candidate);
      if (value > best.value + cfg.tol * step) {
        best = {value, std::move(candidate)};
        moved = true;
        step = std::min(2.0 * step, cfg.step_init);
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

Climb best_of_restarts(const PlaneObjective& objective, double sign, std::uint64_t direction, Index dim,
                       const SearchConfig& cfg) {
  Climb best{0.0, {}};
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    NormalStream rng(mix_seed(cfg.seed, 2 * static_cast<std::uint64_t>(r) + direction));
    Climb start{0.0, random_plane(dim, rng)};
    start.value = sign * objective(start.plane);
    Climb c = climb(objective, sign, std::move(start), dim, cfg, rng);
    if (!have || c.value > best.value) {
      best = std::move(c);
      have = true;
    }
  }
  // polish the winner on a stream of its own
  NormalStream rng(mix_seed(cfg.seed, 2 * static_cast<std::uint64_t>(cfg.restarts) + direction));
  return climb(objective, sign, std::move(best), dim, cfg, rng);
}

}  // namespace

SearchOptimum search_max(const PlaneObjective& objective, Index dim, const SearchConfig& cfg) {
  cfg.check();
  if (dim < 2) throw InvalidDimension("planes need dimension at least 2");
  Climb hi = best_of_restarts(objective, 1.0, 0, dim, cfg);
  // Report the value re-evaluated at the returned plane.
  return {objective(hi.plane), std::move(hi.plane)};
}

SearchOptimum search_min(const PlaneObjective& objective, Index dim, const SearchConfig& cfg) {
  cfg.check();
  if (dim < 2) throw InvalidDimension("planes need dimension at least 2");
  Climb lo = best_of_restarts(objective, -1.0, 1, dim, cfg);
  return {objective(lo.plane), std::move(lo.plane)};
}

SearchResult search_extrema(const PlaneObjective& objective, Index dim, const SearchConfig& cfg) {
  auto hi = search_max(objective, dim, cfg);
  auto lo = search_min(objective, dim, cfg);
  return {hi.value, std::move(hi.plane), lo.value, std::move(lo.plane)};
}

}  // namespace liecurve
