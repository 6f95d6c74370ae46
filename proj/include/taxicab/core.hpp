#pragma once

#include <stdexcept>
#include <string>

namespace taxicab {

/// Library-wide absolute tolerance for geometric predicates. Every
/// comparison routine accepts an override.
inline constexpr double kDefaultTolerance = 1e-9;

/// Thrown when an operation's geometric preconditions are violated
/// (non-finite coordinates, empty angle ranges, invalid scenes, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A location in the plane. Coordinates must be finite.
class Point {
 public:
  Point() = default;
  Point(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// A displacement between points. Components must be finite; the zero
/// vector is constructible but rejected wherever a ray direction is needed.
class Vector {
 public:
  Vector() = default;
  Vector(double dx, double dy);

  double dx() const { return dx_; }
  double dy() const { return dy_; }
  bool is_zero() const { return dx_ == 0.0 && dy_ == 0.0; }

 private:
  double dx_ = 0.0;
  double dy_ = 0.0;
};

Point operator+(const Point& p, const Vector& v);
Point operator-(const Point& p, const Vector& v);
Vector operator-(const Point& p, const Point& q);
Vector operator-(const Vector& v);
Vector operator*(double s, const Vector& v);

/// Nonnegative length measured with the taxicab metric.
class TaxicabLength {
 public:
  TaxicabLength() = default;
  explicit TaxicabLength(double value);
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Nonnegative length measured with the Euclidean metric.
class EuclideanLength {
 public:
  EuclideanLength() = default;
  explicit EuclideanLength(double value);
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Angle magnitude in t-radians. Any finite real is admitted; the
/// canonical representative lies in [0,8) (8 t-radians per full circle).
class TaxicabAngle {
 public:
  TaxicabAngle() = default;
  explicit TaxicabAngle(double t);
  double t() const { return t_; }
  TaxicabAngle normalized() const;

 private:
  double t_ = 0.0;
};

/// Angle magnitude in Euclidean radians; canonical form in [0, 2*pi).
class EuclideanAngle {
 public:
  EuclideanAngle() = default;
  explicit EuclideanAngle(double rad);
  double rad() const { return rad_; }
  EuclideanAngle normalized() const;

 private:
  double rad_ = 0.0;
};

/// d(p,q) = |qx-px| + |qy-py|.
TaxicabLength taxicab_distance(const Point& p, const Point& q);

/// Standard L2 distance.
EuclideanLength euclidean_distance(const Point& p, const Point& q);

/// center + r * (cos_t theta, sin_t theta); the result is at taxicab
/// distance r from center for every theta.
Point point_on_taxicab_circle(const Point& center, TaxicabLength r,
                              TaxicabAngle theta);

}  // namespace taxicab
