#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/core.hpp"
#include "taxicab/oracle.hpp"
#include "taxicab/parallax.hpp"
#include "taxicab/triangle.hpp"
#include "taxicab/trig.hpp"

namespace py = pybind11;

namespace {

using XY = std::pair<double, double>;

taxicab::Point point(const XY& p) { return taxicab::Point(p.first, p.second); }
taxicab::Vector vec(const XY& v) { return taxicab::Vector(v.first, v.second); }

std::vector<double> sorted_sides(const taxicab::TriangleMetrics& m) {
  std::vector<double> out{m.sides[0].value(), m.sides[1].value(),
                          m.sides[2].value()};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sorted_angles(const taxicab::TriangleMetrics& m) {
  std::vector<double> out{m.angles[0].t(), m.angles[1].t(), m.angles[2].t()};
  std::sort(out.begin(), out.end());
  return out;
}

taxicab::Triangle triangle(const XY& a, const XY& b, const XY& c) {
  return taxicab::Triangle(point(a), point(b), point(c));
}

}  // namespace

PYBIND11_MODULE(taxicab_geometry, m) {
  m.doc() =
      "Plane geometry over the taxicab metric: t-radian angles, taxicab "
      "trigonometry, triangle congruence, and exact parallax.";

  py::register_exception<taxicab::DomainError>(m, "DomainError",
                                               PyExc_ValueError);

  using namespace taxicab;

  // metric primitives
  m.def(
      "taxicab_distance",
      [](const XY& p, const XY& q) {
        return taxicab_distance(point(p), point(q)).value();
      },
      py::arg("p"), py::arg("q"), "Taxicab distance |dx| + |dy|.");
  m.def(
      "euclidean_distance",
      [](const XY& p, const XY& q) {
        return euclidean_distance(point(p), point(q)).value();
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "point_on_taxicab_circle",
      [](const XY& center, double r, double theta) {
        const Point p = point_on_taxicab_circle(point(center), TaxicabLength(r),
                                                TaxicabAngle(theta));
        return XY{p.x(), p.y()};
      },
      py::arg("center"), py::arg("r"), py::arg("theta"));

  // angles
  m.def("normalize_angle",
        [](double t) { return normalize(TaxicabAngle(t)).t(); });
  m.def("taxicab_measure_standard", [](double phi) {
    return taxicab_measure_standard(EuclideanAngle(phi)).t();
  });
  m.def("euclidean_measure_standard", [](double theta) {
    return euclidean_measure_standard(TaxicabAngle(theta)).rad();
  });
  m.def("taxicab_measure_in_quadrant", [](double phi, double psi) {
    return taxicab_measure_in_quadrant(EuclideanAngle(phi), EuclideanAngle(psi))
        .t();
  });
  m.def("direction_arc_position",
        [](const XY& v) { return direction_arc_position(vec(v)).t(); });
  m.def(
      "angle_between",
      [](const XY& vertex, const XY& p, const XY& q) {
        return angle_between(point(vertex), point(p), point(q)).t();
      },
      py::arg("vertex"), py::arg("p"), py::arg("q"));
  m.def("arc_length", [](double r, double theta) {
    return arc_length(TaxicabLength(r), TaxicabAngle(theta)).value();
  });

  // trigonometry
  m.def("cos_t", [](double t) { return cos_t(TaxicabAngle(t)); });
  m.def("sin_t", [](double t) { return sin_t(TaxicabAngle(t)); });
  m.def("quadrant_of",
        [](double t) { return to_string(quadrant_of(TaxicabAngle(t))); });
  m.def("cos_sum", [](double a, double b) {
    return cos_sum(TaxicabAngle(a), TaxicabAngle(b));
  });
  m.def("sin_sum", [](double a, double b) {
    return sin_sum(TaxicabAngle(a), TaxicabAngle(b));
  });
  m.def("cos_double", [](double a) { return cos_double(TaxicabAngle(a)); });
  m.def("sin_double", [](double a) { return sin_double(TaxicabAngle(a)); });

  // triangles
  m.def(
      "triangle_metrics",
      [](const XY& a, const XY& b, const XY& c) {
        const TriangleMetrics tm = measure(triangle(a, b, c));
        py::dict d;
        d["sides"] = sorted_sides(tm);
        d["angles"] = sorted_angles(tm);
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Sorted taxicab side lengths and t-radian angles.");
  m.def("angle_sum", [](const XY& a, const XY& b, const XY& c) {
    return angle_sum(triangle(a, b, c)).t();
  });
  m.def(
      "classify_congruence",
      [](const XY& a1, const XY& b1, const XY& c1, const XY& a2, const XY& b2,
         const XY& c2, double tol) {
        const CongruenceReport r =
            classify_congruence(triangle(a1, b1, c1), triangle(a2, b2, c2), tol);
        py::dict d;
        d["SSS"] = r.sss;
        d["SAS"] = r.sas;
        d["ASA"] = r.asa;
        d["AAS"] = r.aas;
        d["SSA"] = r.ssa;
        d["AAA"] = r.aaa;
        d["ASASA"] = r.asasa;
        d["SSSA"] = r.sssa;
        d["SASAS"] = r.sasas;
        return d;
      },
      py::arg("a1"), py::arg("b1"), py::arg("c1"), py::arg("a2"), py::arg("b2"),
      py::arg("c2"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "is_congruent",
      [](const XY& a1, const XY& b1, const XY& c1, const XY& a2, const XY& b2,
         const XY& c2, double tol) {
        return is_congruent(triangle(a1, b1, c1), triangle(a2, b2, c2), tol);
      },
      py::arg("a1"), py::arg("b1"), py::arg("c1"), py::arg("a2"), py::arg("b2"),
      py::arg("c2"), py::arg("tol") = kDefaultTolerance);

  // parallax
  m.def(
      "taxicab_parallax_distance",
      [](double s, double alpha, double beta) {
        return taxicab_parallax_distance(
                   ParallaxMeasurement(TaxicabLength(s), TaxicabAngle(alpha),
                                       TaxicabAngle(beta)))
            .value();
      },
      py::arg("s"), py::arg("alpha"), py::arg("beta"),
      "Exact taxicab distance s / (beta - alpha).");
  m.def(
      "simulate_observation",
      [](const XY& observer, const XY& object, double step,
         const std::string& direction, double reference_theta) {
        const ParallaxScene scene{point(observer), point(object),
                                  TaxicabLength(step),
                                  move_direction_from_string(direction)};
        const ParallaxMeasurement pm =
            simulate_observation(scene, EuclideanAngle(reference_theta));
        py::dict d;
        d["s"] = pm.s.value();
        d["alpha"] = pm.alpha.t();
        d["beta"] = pm.beta.t();
        return d;
      },
      py::arg("observer"), py::arg("object"), py::arg("step"),
      py::arg("direction"), py::arg("reference_theta"));
  m.def(
      "euclidean_parallax_exact",
      [](double s_e, double alpha_e, double beta_e, double theta_e) {
        return euclidean_parallax_exact(EuclideanParallaxMeasurement(
                                            EuclideanLength(s_e),
                                            EuclideanAngle(alpha_e),
                                            EuclideanAngle(beta_e),
                                            EuclideanAngle(theta_e)))
            .value();
      },
      py::arg("s_e"), py::arg("alpha_e"), py::arg("beta_e"), py::arg("theta_e"));
  m.def("euclidean_parallax_perpendicular",
        [](double s_e, double alpha_e, double beta_e) {
          return euclidean_parallax_perpendicular(EuclideanLength(s_e),
                                                  EuclideanAngle(alpha_e),
                                                  EuclideanAngle(beta_e))
              .value();
        });
  m.def("euclidean_parallax_approx",
        [](double s_e, double alpha_e, double beta_e) {
          return euclidean_parallax_approx(EuclideanLength(s_e),
                                           EuclideanAngle(alpha_e),
                                           EuclideanAngle(beta_e))
              .value();
        });
  m.def(
      "link_taxicab_euclidean",
      [](double s_e, double d_e, double alpha_e, double beta_e,
         double theta_e) {
        const TaxicabParallaxLink link = link_taxicab_euclidean(
            EuclideanLength(s_e), EuclideanLength(d_e), EuclideanAngle(alpha_e),
            EuclideanAngle(beta_e), EuclideanAngle(theta_e));
        py::dict d;
        d["s"] = link.s.value();
        d["d"] = link.d.value();
        d["parallax"] = link.parallax.t();
        return d;
      },
      py::arg("s_e"), py::arg("d_e"), py::arg("alpha_e"), py::arg("beta_e"),
      py::arg("theta_e"));

  // construction oracle
  m.def("oracle_arc_position",
        [](const XY& v) { return oracle::arc_position(vec(v)).t(); });
  m.def("oracle_arc_between", [](const XY& u, const XY& v) {
    return oracle::arc_between(vec(u), vec(v)).t();
  });

  m.attr("__version__") = "0.1.0";
  m.attr("T_RADIANS_PER_CIRCLE") = 8.0;
}
