#pragma once

#include <array>
#include <vector>

#include "taxicab/core.hpp"

namespace taxicab::oracle {

/// A counterclockwise walk along the unit diamond |x|+|y| = 1: the entry
/// intersection point, any corners passed, and the exit point. Consecutive
/// vertices always share a diamond edge.
struct DiamondArc {
  std::vector<Point> vertices;

  /// Sum of taxicab lengths of the consecutive segments.
  double length() const;
};

/// The corners (1,0), (0,1), (-1,0), (0,-1) in counterclockwise order.
std::array<Point, 4> unit_diamond_corners();

/// Arc position of ray v, computed by explicit segment-edge intersection
/// against the four diamond edges and edge-length accumulation — an
/// independent check on the closed-form direction_arc_position.
TaxicabAngle arc_position(const Vector& v);

/// The counterclockwise walk from ray `from`'s intersection to ray `to`'s.
DiamondArc diamond_arc(const Vector& from, const Vector& to);

/// Smaller-arc taxicab length between the two ray intersections, in [0,4].
TaxicabAngle arc_between(const Vector& u, const Vector& v);

}  // namespace taxicab::oracle
