#pragma once

#include <cmath>
#include <optional>
#include <random>

#include "taxicab/core.hpp"
#include "taxicab/parallax.hpp"

namespace taxicab::testutil {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Multiples of 2^-10 in [lo, hi]; sums and differences of these stay exact
// in double precision at the magnitudes used by the tests.
inline double dyadic(std::mt19937_64& rng, double lo, double hi) {
  const long n_lo = static_cast<long>(std::ceil(lo * 1024.0));
  const long n_hi = static_cast<long>(std::floor(hi * 1024.0));
  std::uniform_int_distribution<long> dist(n_lo, n_hi);
  return static_cast<double>(dist(rng)) / 1024.0;
}

struct SceneSample {
  ParallaxScene scene;
  EuclideanAngle reference;
};

// A valid random scene: object strictly inside a quadrant of the observer,
// step small enough to keep it there, reference direction slightly off the
// line of sight. The admissible move direction is found by probing.
inline SceneSample random_scene(std::mt19937_64& rng) {
  for (;;) {
    const double sx = rng() & 1 ? 1.0 : -1.0;
    const double sy = rng() & 1 ? 1.0 : -1.0;
    const double ux = sx * uniform(rng, 1.0, 50.0);
    const double uy = sy * uniform(rng, 1.0, 50.0);
    const Point observer(uniform(rng, -50.0, 50.0), uniform(rng, -50.0, 50.0));
    const Point object(observer.x() + ux, observer.y() + uy);
    const double step =
        2.0 * uniform(rng, 0.2, 0.9) * std::min(std::abs(ux), std::abs(uy));
    const double side = rng() & 1 ? 1.0 : -1.0;
    const EuclideanAngle reference(std::atan2(uy, ux) +
                                   side * uniform(rng, 0.0, 0.3));
    for (MoveDirection dir : {MoveDirection::SE, MoveDirection::NW,
                              MoveDirection::NE, MoveDirection::SW}) {
      const ParallaxScene scene{observer, object, TaxicabLength(step), dir};
      try {
        (void)simulate_observation(scene, reference);
        return SceneSample{scene, reference};
      } catch (const DomainError&) {
      }
    }
  }
}

}  // namespace taxicab::testutil
