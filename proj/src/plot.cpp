#include "taxicab/plot.hpp"

#include <cstdio>
#include <string>

#include "taxicab/core.hpp"
#include "taxicab/trig.hpp"

namespace taxicab::plot {

namespace {

std::string num(double v, int precision = 10) {
  if (v == 0.0) v = 0.0;  // avoid "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace

void write_unit_circle_svg(std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" "
         "height=\"480\" viewBox=\"-1.5 -1.5 3 3\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\">\n";
  out << "<line x1=\"-1.4\" y1=\"0\" x2=\"1.4\" y2=\"0\" "
         "stroke-width=\"0.005\"/>\n";
  out << "<line x1=\"0\" y1=\"-1.4\" x2=\"0\" y2=\"1.4\" "
         "stroke-width=\"0.005\"/>\n";
  out << "<polygon points=\"1,0 0,1 -1,0 0,-1\" stroke-width=\"0.02\"/>\n";
  // Tick marks at the integer arc positions 0..7.
  for (int k = 0; k < 8; ++k) {
    const Point p =
        point_on_taxicab_circle(Point(0, 0), TaxicabLength(1.0),
                                TaxicabAngle(static_cast<double>(k)));
    out << "<line x1=\"" << num(p.x()) << "\" y1=\"" << num(p.y())
        << "\" x2=\"" << num(1.08 * p.x()) << "\" y2=\"" << num(1.08 * p.y())
        << "\" stroke-width=\"0.015\"/>\n";
  }
  out << "</g>\n";
  for (int k = 0; k < 8; ++k) {
    const Point p =
        point_on_taxicab_circle(Point(0, 0), TaxicabLength(1.0),
                                TaxicabAngle(static_cast<double>(k)));
    out << "<text x=\"" << num(1.22 * p.x() - 0.04) << "\" y=\""
        << num(-1.22 * p.y() + 0.04)
        << "\" font-size=\"0.12\" fill=\"black\">" << k << "</text>\n";
  }
  out << "</svg>\n";
}

void write_trig_graphs_svg(std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" "
         "height=\"240\" viewBox=\"-0.5 -1.5 17 3.2\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  out << "<line x1=\"0\" y1=\"0\" x2=\"16\" y2=\"0\" stroke=\"black\" "
         "stroke-width=\"0.01\"/>\n";
  out << "<line x1=\"0\" y1=\"-1.2\" x2=\"0\" y2=\"1.2\" stroke=\"black\" "
         "stroke-width=\"0.01\"/>\n";
  const char* colors[2] = {"#1f77b4", "#d62728"};
  for (int fn = 0; fn < 2; ++fn) {
    out << "<polyline stroke=\"" << colors[fn]
        << "\" stroke-width=\"0.02\" points=\"";
    for (int i = 0; i <= 1600; ++i) {
      const double theta = i / 100.0;
      const double v = fn == 0 ? cos_t(TaxicabAngle(theta))
                               : sin_t(TaxicabAngle(theta));
      if (i) out << ' ';
      out << num(theta) << ',' << num(v);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  out << "<text x=\"0.55\" y=\"-1.05\" font-size=\"0.3\" "
         "fill=\"#1f77b4\">cos_t</text>\n";
  out << "<text x=\"1.7\" y=\"-1.05\" font-size=\"0.3\" "
         "fill=\"#d62728\">sin_t</text>\n";
  out << "</svg>\n";
}

void write_trig_graphs_csv(std::ostream& out, int precision) {
  out << "theta,cos,sin\n";
  for (int i = 0; i <= 1600; ++i) {
    const double theta = i / 100.0;
    out << num(theta, precision) << ','
        << num(cos_t(TaxicabAngle(theta)), precision) << ','
        << num(sin_t(TaxicabAngle(theta)), precision) << '\n';
  }
}

void write_unit_circle_csv(std::ostream& out, int precision) {
  out << "arc,x,y\n";
  for (int i = 0; i < 800; ++i) {
    const double arc = i / 100.0;
    const Point p = point_on_taxicab_circle(Point(0, 0), TaxicabLength(1.0),
                                            TaxicabAngle(arc));
    out << num(arc, precision) << ',' << num(p.x(), precision) << ','
        << num(p.y(), precision) << '\n';
  }
}

}  // namespace taxicab::plot
