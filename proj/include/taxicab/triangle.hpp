#pragma once

#include <array>

#include "taxicab/core.hpp"

namespace taxicab {

/// Thrown for collinear or coincident triangle vertices.
class DegenerateTriangleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ordered, non-degenerate vertex triple. Degeneracy is decided by the
/// shoelace area with absolute threshold 1e-12.
class Triangle {
 public:
  Triangle(const Point& a, const Point& b, const Point& c);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  const Point& c() const { return c_; }
  const Point& vertex(int i) const;

 private:
  Point a_, b_, c_;
};

/// Taxicab sides (indexed opposite each vertex) and t-radian angles
/// (indexed at each vertex). Angles always sum to 4.
struct TriangleMetrics {
  std::array<TaxicabLength, 3> sides;
  std::array<TaxicabAngle, 3> angles;
};

/// Which part-matching conditions hold between two triangles under some
/// vertex correspondence (all 6 labelings, both orientations).
struct CongruenceReport {
  bool sss = false;
  bool sas = false;
  bool asa = false;
  bool aas = false;
  bool ssa = false;
  bool aaa = false;
  bool asasa = false;
  bool sssa = false;
  bool sasas = false;
};

TriangleMetrics measure(const Triangle& tri);

/// Sum of the three vertex angles; 4 t-radians for every triangle.
TaxicabAngle angle_sum(const Triangle& tri);

CongruenceReport classify_congruence(const Triangle& t1, const Triangle& t2,
                                     double tol = kDefaultTolerance);

/// True iff the SASAS condition holds: only SASAS guarantees congruence in
/// this geometry.
bool is_congruent(const Triangle& t1, const Triangle& t2,
                  double tol = kDefaultTolerance);

}  // namespace taxicab
