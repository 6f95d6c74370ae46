#pragma once

#include "taxicab/core.hpp"

namespace taxicab {

/// Canonical representative in [0,8), differing from the input by a
/// multiple of 8.
TaxicabAngle normalize(TaxicabAngle theta);

/// t-radian measure of an acute Euclidean angle in standard position:
/// theta = 2 - 2/(1 + tan phi) = 2 sin phi / (sin phi + cos phi).
/// Requires 0 <= phi < pi/2.
TaxicabAngle taxicab_measure_standard(EuclideanAngle phi);

/// Inverse of taxicab_measure_standard: phi = arctan(theta / (2 - theta)).
/// Requires 0 <= theta < 2.
EuclideanAngle euclidean_measure_standard(TaxicabAngle theta);

/// t-radian measure of an acute Euclidean angle phi whose lower side makes
/// reference angle psi with the x-axis, the whole angle staying inside one
/// quadrant: theta = 2/(1+tan psi) - 2/(1+tan(phi+psi)). Requires phi > 0,
/// psi >= 0, phi + psi <= pi/2 (the boundary is evaluated as the limit).
TaxicabAngle taxicab_measure_in_quadrant(EuclideanAngle phi,
                                         EuclideanAngle psi);

/// Arc position of the ray direction v on the unit taxicab circle:
/// taxicab arc length from (1,0), counterclockwise, to the point where the
/// ray meets the circle. Result in [0,8); scale-invariant; directions on an
/// axis map to 0, 2, 4, 6 exactly.
TaxicabAngle direction_arc_position(const Vector& v);

/// Unsigned angle at `vertex` between the rays toward p and q: the smaller
/// of the two arcs between the directions, in [0,4].
TaxicabAngle angle_between(const Point& vertex, const Point& p,
                           const Point& q);

/// Arc length on a circle of radius r subtended by theta: s = r * theta.
/// Requires theta >= 0.
TaxicabLength arc_length(TaxicabLength r, TaxicabAngle theta);

/// General standard-position conversions between the two angle units,
/// defined through the unit diamond (no acuteness restriction).
TaxicabAngle taxicab_direction_measure(EuclideanAngle phi);
EuclideanAngle euclidean_direction_measure(TaxicabAngle theta);

}  // namespace taxicab
