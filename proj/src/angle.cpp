#include "taxicab/angle.hpp"

#include <cmath>

#include "taxicab/trig.hpp"

namespace taxicab {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kTau = 6.283185307179586476925286766559;

}  // namespace

TaxicabAngle normalize(TaxicabAngle theta) { return theta.normalized(); }

TaxicabAngle taxicab_measure_standard(EuclideanAngle phi) {
  const double p = phi.rad();
  if (p < 0.0 || p >= kHalfPi) {
    throw DomainError("taxicab_measure_standard requires 0 <= phi < pi/2");
  }
  const double s = std::sin(p);
  const double c = std::cos(p);
  return TaxicabAngle(2.0 * s / (s + c));
}

EuclideanAngle euclidean_measure_standard(TaxicabAngle theta) {
  const double t = theta.t();
  if (t < 0.0 || t >= 2.0) {
    throw DomainError("euclidean_measure_standard requires 0 <= theta < 2");
  }
  return EuclideanAngle(std::atan(t / (2.0 - t)));
}

TaxicabAngle taxicab_measure_in_quadrant(EuclideanAngle phi,
                                         EuclideanAngle psi) {
  const double f = phi.rad();
  const double r = psi.rad();
  if (f <= 0.0) {
    throw DomainError("taxicab_measure_in_quadrant requires phi > 0");
  }
  if (r < 0.0) {
    throw DomainError("taxicab_measure_in_quadrant requires psi >= 0");
  }
  if (f + r > kHalfPi) {
    throw DomainError("taxicab_measure_in_quadrant requires phi + psi <= pi/2");
  }
  // Product form of 2/(1+tan psi) - 2/(1+tan(phi+psi)); stays finite at
  // phi + psi = pi/2, where the subtracted term's limit is 0.
  const double top = f + r;
  return TaxicabAngle(2.0 * std::sin(f) /
                      ((std::cos(top) + std::sin(top)) *
                       (std::cos(r) + std::sin(r))));
}

TaxicabAngle direction_arc_position(const Vector& v) {
  if (v.is_zero()) {
    throw DomainError("arc position of the zero vector is undefined");
  }
  const double dx = v.dx();
  const double dy = v.dy();
  // One closed form per diamond edge; the half-open sign tests land axis
  // directions exactly on the corner arc positions 0, 2, 4, 6.
  if (dx > 0.0 && dy >= 0.0) return TaxicabAngle(2.0 * dy / (dx + dy));
  if (dx <= 0.0 && dy > 0.0) return TaxicabAngle(2.0 + 2.0 * -dx / (dy - dx));
  if (dx < 0.0 && dy <= 0.0) return TaxicabAngle(4.0 + 2.0 * -dy / (-dx - dy));
  return TaxicabAngle(6.0 + 2.0 * dx / (dx - dy));
}

TaxicabAngle angle_between(const Point& vertex, const Point& p,
                           const Point& q) {
  const Vector u = p - vertex;
  const Vector w = q - vertex;
  if (u.is_zero() || w.is_zero()) {
    throw DomainError("angle_between requires points distinct from vertex");
  }
  const double a = direction_arc_position(u).t();
  const double b = direction_arc_position(w).t();
  const double d = std::abs(a - b);
  return TaxicabAngle(d <= 4.0 ? d : 8.0 - d);
}

TaxicabLength arc_length(TaxicabLength r, TaxicabAngle theta) {
  if (theta.t() < 0.0) {
    throw DomainError("arc_length requires theta >= 0");
  }
  return TaxicabLength(r.value() * theta.t());
}

TaxicabAngle taxicab_direction_measure(EuclideanAngle phi) {
  const double p = phi.rad();
  return direction_arc_position(Vector(std::cos(p), std::sin(p)));
}

EuclideanAngle euclidean_direction_measure(TaxicabAngle theta) {
  const TrigPair tp = trig_pair(theta);
  double r = std::atan2(tp.sin, tp.cos);
  if (r < 0.0) r += kTau;
  return EuclideanAngle(r);
}

}  // namespace taxicab
