#include "taxicab/core.hpp"

#include <cmath>

#include "taxicab/trig.hpp"

namespace taxicab {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

Point::Point(double x, double y) : x_(x), y_(y) {
  require_finite(x, "point coordinate");
  require_finite(y, "point coordinate");
}

Vector::Vector(double dx, double dy) : dx_(dx), dy_(dy) {
  require_finite(dx, "vector component");
  require_finite(dy, "vector component");
}

Point operator+(const Point& p, const Vector& v) {
  return Point(p.x() + v.dx(), p.y() + v.dy());
}

Point operator-(const Point& p, const Vector& v) {
  return Point(p.x() - v.dx(), p.y() - v.dy());
}

Vector operator-(const Point& p, const Point& q) {
  return Vector(p.x() - q.x(), p.y() - q.y());
}

Vector operator-(const Vector& v) { return Vector(-v.dx(), -v.dy()); }

Vector operator*(double s, const Vector& v) {
  return Vector(s * v.dx(), s * v.dy());
}

TaxicabLength::TaxicabLength(double value) : value_(value) {
  require_finite(value, "length");
  if (value < 0.0) throw DomainError("taxicab length must be nonnegative");
}

EuclideanLength::EuclideanLength(double value) : value_(value) {
  require_finite(value, "length");
  if (value < 0.0) throw DomainError("euclidean length must be nonnegative");
}

TaxicabAngle::TaxicabAngle(double t) : t_(t) {
  require_finite(t, "angle");
}

TaxicabAngle TaxicabAngle::normalized() const {
  double t = std::fmod(t_, 8.0);
  if (t < 0.0) t += 8.0;
  if (t >= 8.0) t = 0.0;
  return TaxicabAngle(t);
}

EuclideanAngle::EuclideanAngle(double rad) : rad_(rad) {
  require_finite(rad, "angle");
}

EuclideanAngle EuclideanAngle::normalized() const {
  constexpr double kTau = 6.283185307179586476925286766559;
  double r = std::fmod(rad_, kTau);
  if (r < 0.0) r += kTau;
  if (r >= kTau) r = 0.0;
  return EuclideanAngle(r);
}

TaxicabLength taxicab_distance(const Point& p, const Point& q) {
  return TaxicabLength(std::abs(q.x() - p.x()) + std::abs(q.y() - p.y()));
}

EuclideanLength euclidean_distance(const Point& p, const Point& q) {
  return EuclideanLength(std::hypot(q.x() - p.x(), q.y() - p.y()));
}

Point point_on_taxicab_circle(const Point& center, TaxicabLength r,
                              TaxicabAngle theta) {
  const TrigPair tp = trig_pair(theta);
  return Point(center.x() + r.value() * tp.cos,
               center.y() + r.value() * tp.sin);
}

}  // namespace taxicab
