#include "taxicab/oracle.hpp"

#include <cmath>

namespace taxicab::oracle {

namespace {

double cross(const Vector& a, const Vector& b) {
  return a.dx() * b.dy() - a.dy() * b.dx();
}

double dot(const Vector& a, const Vector& b) {
  return a.dx() * b.dx() + a.dy() * b.dy();
}

Vector as_vector(const Point& p) { return Vector(p.x(), p.y()); }

struct EdgeHit {
  int edge = 0;     // index of the corner the edge starts at
  double u = 0.0;   // parameter along the edge, in [0,1]
  Point point;
};

// Intersect the ray through v with the diamond boundary. Each edge has
// taxicab length 2, so the arc position of the hit is 2*edge + 2*u.
EdgeHit intersect_diamond(const Vector& v) {
  if (v.is_zero()) {
    throw DomainError("diamond intersection of the zero vector is undefined");
  }
  const auto corners = unit_diamond_corners();
  for (int i = 0; i < 4; ++i) {
    const Point& e0 = corners[i];
    const Point& e1 = corners[(i + 1) % 4];
    const Vector edge = e1 - e0;
    const double denom = cross(v, edge);
    if (denom == 0.0) continue;  // ray parallel to this edge
    const double u = -cross(v, as_vector(e0)) / denom;
    if (u < 0.0 || u > 1.0) continue;
    const Point p(e0.x() + u * edge.dx(), e0.y() + u * edge.dy());
    if (dot(v, as_vector(p)) <= 0.0) continue;  // opposite ray
    return EdgeHit{i, u, p};
  }
  throw DomainError("ray does not intersect the unit diamond");
}

double arc_position_raw(const EdgeHit& h) {
  double arc = 2.0 * h.edge + 2.0 * h.u;
  if (arc >= 8.0) arc -= 8.0;
  return arc;
}

}  // namespace

std::array<Point, 4> unit_diamond_corners() {
  return {Point(1.0, 0.0), Point(0.0, 1.0), Point(-1.0, 0.0),
          Point(0.0, -1.0)};
}

double DiamondArc::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    total += taxicab_distance(vertices[i - 1], vertices[i]).value();
  }
  return total;
}

TaxicabAngle arc_position(const Vector& v) {
  return TaxicabAngle(arc_position_raw(intersect_diamond(v)));
}

DiamondArc diamond_arc(const Vector& from, const Vector& to) {
  const EdgeHit a = intersect_diamond(from);
  const EdgeHit b = intersect_diamond(to);
  const auto corners = unit_diamond_corners();

  DiamondArc arc;
  arc.vertices.push_back(a.point);
  if (a.edge == b.edge && b.u >= a.u) {
    arc.vertices.push_back(b.point);
    return arc;
  }
  // Walk counterclockwise corner by corner until reaching b's edge.
  int edge = a.edge;
  do {
    edge = (edge + 1) % 4;
    arc.vertices.push_back(corners[edge]);
  } while (edge != b.edge);
  arc.vertices.push_back(b.point);
  return arc;
}

TaxicabAngle arc_between(const Vector& u, const Vector& v) {
  const double ccw = diamond_arc(u, v).length();
  return TaxicabAngle(ccw <= 4.0 ? ccw : 8.0 - ccw);
}

}  // namespace taxicab::oracle
