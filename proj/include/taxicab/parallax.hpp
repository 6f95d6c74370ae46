#pragma once

#include <string>

#include "taxicab/core.hpp"

namespace taxicab {

/// Baseline plus the two sighting angles against a fixed reference
/// direction. Requires s > 0 and beta > alpha (the observer moves so the
/// angle increases).
struct ParallaxMeasurement {
  ParallaxMeasurement(TaxicabLength s, TaxicabAngle alpha, TaxicabAngle beta);

  TaxicabLength s;
  TaxicabAngle alpha;
  TaxicabAngle beta;
};

/// Euclidean-flavor measurement; theta_e is the reference direction's angle
/// from the x-axis, needed by the exact formula.
struct EuclideanParallaxMeasurement {
  EuclideanParallaxMeasurement(EuclideanLength s_e, EuclideanAngle alpha_e,
                               EuclideanAngle beta_e, EuclideanAngle theta_e);

  EuclideanLength s_e;
  EuclideanAngle alpha_e;
  EuclideanAngle beta_e;
  EuclideanAngle theta_e;
};

/// Diagonal observer moves; NE/SW run along y = x, NW/SE along y = -x.
enum class MoveDirection { NW, NE, SW, SE };

MoveDirection move_direction_from_string(const std::string& name);
std::string to_string(MoveDirection d);

/// Ground-truth configuration for a simulated observation. The object must
/// lie strictly inside a quadrant relative to the observer, and
/// move_direction must be a diagonal that keeps the object's taxicab
/// distance constant while increasing the sighting angle.
struct ParallaxScene {
  Point observer;
  Point object;
  TaxicabLength step;
  MoveDirection move_direction = MoveDirection::SE;
};

/// d = s / (beta - alpha); exact (not approximate) under the scene
/// preconditions.
TaxicabLength taxicab_parallax_distance(const ParallaxMeasurement& m);

/// Produce the measurement an observer following the scene would record
/// against a reference object at infinity in direction reference_theta.
/// Rejects scenes whose move direction fails to preserve the distance,
/// leave the object strictly inside one quadrant, or increase the angle.
ParallaxMeasurement simulate_observation(const ParallaxScene& scene,
                                         EuclideanAngle reference_theta);

/// Exact Euclidean distance for diagonal observer motion:
/// d_e = s_e (cos(beta+theta) + sin(beta+theta)) / (sqrt(2) sin(beta-alpha)).
EuclideanLength euclidean_parallax_exact(
    const EuclideanParallaxMeasurement& m);

/// Exact Euclidean distance for motion perpendicular to the line of sight:
/// d_e = s_e / tan(beta - alpha). Requires 0 < beta - alpha < pi/2.
EuclideanLength euclidean_parallax_perpendicular(EuclideanLength s_e,
                                                 EuclideanAngle alpha_e,
                                                 EuclideanAngle beta_e);

/// Small-angle estimate d_e ~ s_e / (beta - alpha); not exact.
EuclideanLength euclidean_parallax_approx(EuclideanLength s_e,
                                          EuclideanAngle alpha_e,
                                          EuclideanAngle beta_e);

/// Taxicab quantities corresponding to a Euclidean parallax scene.
struct TaxicabParallaxLink {
  TaxicabLength s;
  TaxicabLength d;
  TaxicabAngle parallax;
};

/// Convert a Euclidean scene (s_e, d_e, alpha_e, beta_e, theta_e) to its
/// taxicab counterparts: s = sqrt(2) s_e, d = d_e (cos(alpha+theta) +
/// sin(alpha+theta)), and the parallax angle via the in-quadrant conversion
/// with phi = beta_e - alpha_e, psi = alpha_e + theta_e. For a consistent
/// scene the triple satisfies d = s / parallax. Inconsistent inputs
/// (d_e not matching the exact formula) are rejected.
TaxicabParallaxLink link_taxicab_euclidean(EuclideanLength s_e,
                                           EuclideanLength d_e,
                                           EuclideanAngle alpha_e,
                                           EuclideanAngle beta_e,
                                           EuclideanAngle theta_e,
                                           double tol = kDefaultTolerance);

}  // namespace taxicab
