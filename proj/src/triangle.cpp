#include "taxicab/triangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "taxicab/angle.hpp"

namespace taxicab {

namespace {

constexpr double kCollinearAreaThreshold = 1e-12;

double shoelace_area(const Point& a, const Point& b, const Point& c) {
  return 0.5 * std::abs((b.x() - a.x()) * (c.y() - a.y()) -
                        (c.x() - a.x()) * (b.y() - a.y()));
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
}};

}  // namespace

Triangle::Triangle(const Point& a, const Point& b, const Point& c)
    : a_(a), b_(b), c_(c) {
  if (shoelace_area(a, b, c) <= kCollinearAreaThreshold) {
    throw DegenerateTriangleError("triangle vertices are collinear");
  }
}

const Point& Triangle::vertex(int i) const {
  switch (i) {
    case 0: return a_;
    case 1: return b_;
    default: return c_;
  }
}

TriangleMetrics measure(const Triangle& tri) {
  TriangleMetrics m;
  for (int i = 0; i < 3; ++i) {
    const Point& v = tri.vertex(i);
    const Point& p = tri.vertex((i + 1) % 3);
    const Point& q = tri.vertex((i + 2) % 3);
    m.sides[i] = taxicab_distance(p, q);
    m.angles[i] = angle_between(v, p, q);
  }
  return m;
}

TaxicabAngle angle_sum(const Triangle& tri) {
  const TriangleMetrics m = measure(tri);
  return TaxicabAngle(m.angles[0].t() + m.angles[1].t() + m.angles[2].t());
}

CongruenceReport classify_congruence(const Triangle& t1, const Triangle& t2,
                                     double tol) {
  const TriangleMetrics m1 = measure(t1);
  const TriangleMetrics m2 = measure(t2);

  CongruenceReport r;
  for (const auto& perm : kPermutations) {
    std::array<bool, 3> side{};
    std::array<bool, 3> angle{};
    int sides_matched = 0;
    int angles_matched = 0;
    for (int i = 0; i < 3; ++i) {
      side[i] = close(m1.sides[i].value(), m2.sides[perm[i]].value(), tol);
      angle[i] = close(m1.angles[i].t(), m2.angles[perm[i]].t(), tol);
      sides_matched += side[i];
      angles_matched += angle[i];
    }

    r.sss = r.sss || sides_matched == 3;
    r.aaa = r.aaa || angles_matched == 3;
    r.asasa = r.asasa || (angles_matched == 3 && sides_matched >= 2);
    r.sssa = r.sssa || (sides_matched == 3 && angles_matched >= 2);
    r.sasas = r.sasas || (sides_matched == 3 && angles_matched == 3);

    for (int v = 0; v < 3; ++v) {
      // Sides adjacent to vertex v are the two not opposite it.
      r.sas = r.sas || (angle[v] && side[(v + 1) % 3] && side[(v + 2) % 3]);
    }
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        if (u == v) continue;
        const int w = 3 - u - v;
        // Included side between angles u and v is the one opposite w.
        r.asa = r.asa || (angle[u] && angle[v] && side[w]);
        // Non-included side for AAS: opposite one of the matched angles.
        r.aas = r.aas || (angle[u] && angle[v] && side[u]);
        // SSA: two sides plus the angle opposite one of them.
        r.ssa = r.ssa || (side[u] && side[v] && angle[u]);
      }
    }
  }
  return r;
}

bool is_congruent(const Triangle& t1, const Triangle& t2, double tol) {
  return classify_congruence(t1, t2, tol).sasas;
}

}  // namespace taxicab
