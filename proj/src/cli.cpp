#include "taxicab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "taxicab/angle.hpp"
#include "taxicab/core.hpp"
#include "taxicab/oracle.hpp"
#include "taxicab/parallax.hpp"
#include "taxicab/plot.hpp"
#include "taxicab/triangle.hpp"
#include "taxicab/trig.hpp"

namespace taxicab::cli {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Value = std::variant<double, std::string, bool, std::vector<double>>;

struct Report {
  std::vector<std::pair<std::string, Value>> fields;

  void add(std::string key, double v) { fields.emplace_back(std::move(key), v); }
  void add(std::string key, const char* v) {
    fields.emplace_back(std::move(key), std::string(v));
  }
  void add(std::string key, std::string v) {
    fields.emplace_back(std::move(key), std::move(v));
  }
  void add(std::string key, bool v) { fields.emplace_back(std::move(key), v); }
  void add(std::string key, std::vector<double> v) {
    fields.emplace_back(std::move(key), std::move(v));
  }
};

std::string fmt_num(double v, int precision) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string value_to_text(const Value& v, int precision) {
  if (const auto* d = std::get_if<double>(&v)) return fmt_num(*d, precision);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "yes" : "no";
  const auto& list = std::get<std::vector<double>>(v);
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ' ';
    out += fmt_num(list[i], precision);
  }
  return out;
}

void render_text(const Report& r, std::ostream& out, int precision) {
  if (r.fields.size() == 1) {
    out << value_to_text(r.fields[0].second, precision) << '\n';
    return;
  }
  for (const auto& [key, value] : r.fields) {
    out << key << ' ' << value_to_text(value, precision) << '\n';
  }
}

void render_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json j;
  for (const auto& [key, value] : r.fields) {
    if (const auto* d = std::get_if<double>(&value)) {
      j[key] = *d;
    } else if (const auto* s = std::get_if<std::string>(&value)) {
      j[key] = *s;
    } else if (const auto* b = std::get_if<bool>(&value)) {
      j[key] = *b;
    } else {
      j[key] = std::get<std::vector<double>>(value);
    }
  }
  out << j.dump() << '\n';
}

void render_csv(const Report& r, std::ostream& out, int precision) {
  std::string header;
  std::string row;
  auto append = [&](const std::string& key, const std::string& text) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += text;
  };
  for (const auto& [key, value] : r.fields) {
    if (const auto* list = std::get_if<std::vector<double>>(&value)) {
      for (std::size_t i = 0; i < list->size(); ++i) {
        append(key + "_" + std::to_string(i + 1),
               fmt_num((*list)[i], precision));
      }
    } else {
      append(key, value_to_text(value, precision));
    }
  }
  out << header << '\n' << row << '\n';
}

enum class Unit { TRadians, Radians };

double parse_number(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw UsageError("malformed number: " + s);
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed number: " + s);
  } catch (const std::out_of_range&) {
    throw UsageError("number out of range: " + s);
  }
}

// Angles take the command's native unit unless suffixed with 't' or 'r';
// a foreign suffix converts through the standard-position direction
// measures before domain checks run.
double parse_angle(const std::string& s, Unit expected) {
  if (!s.empty() && (s.back() == 't' || s.back() == 'r')) {
    const Unit given = s.back() == 't' ? Unit::TRadians : Unit::Radians;
    const double v = parse_number(s.substr(0, s.size() - 1));
    if (given == expected) return v;
    return given == Unit::Radians
               ? taxicab_direction_measure(EuclideanAngle(v)).t()
               : euclidean_direction_measure(TaxicabAngle(v)).rad();
  }
  return parse_number(s);
}

std::vector<double> sorted(std::array<TaxicabLength, 3> v) {
  std::vector<double> out{v[0].value(), v[1].value(), v[2].value()};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sorted(std::array<TaxicabAngle, 3> v) {
  std::vector<double> out{v[0].t(), v[1].t(), v[2].t()};
  std::sort(out.begin(), out.end());
  return out;
}

struct VerifySweeps {
  double arc_position_dev = 0.0;
  double acute_measure_dev = 0.0;
  double diamond_identity_dev = 0.0;
  double cos_sum_dev = 0.0;
  double sin_sum_dev = 0.0;
  double parallax_dev = 0.0;

  double max_dev() const {
    return std::max({arc_position_dev, acute_measure_dev,
                     diamond_identity_dev, cos_sum_dev, sin_sum_dev,
                     parallax_dev});
  }
};

VerifySweeps run_verify_sweeps() {
  VerifySweeps v;

  for (int i = 0; i < 10000; ++i) {
    const double phi = 2.0 * kPi * i / 10000.0 + 1e-5;
    const Vector dir(std::cos(phi), std::sin(phi));
    v.arc_position_dev =
        std::max(v.arc_position_dev,
                 std::abs(direction_arc_position(dir).t() -
                          oracle::arc_position(dir).t()));
  }
  for (int i = 1; i < 2000; ++i) {
    const double phi = (kPi / 2.0) * i / 2000.0;
    v.acute_measure_dev = std::max(
        v.acute_measure_dev,
        std::abs(taxicab_measure_standard(EuclideanAngle(phi)).t() -
                 oracle::arc_position(Vector(std::cos(phi), std::sin(phi)))
                     .t()));
  }
  for (int i = 0; i < 10000; ++i) {
    const TaxicabAngle theta(-16.0 + 32.0 * i / 10000.0);
    v.diamond_identity_dev =
        std::max(v.diamond_identity_dev,
                 std::abs(std::abs(sin_t(theta)) + std::abs(cos_t(theta)) -
                          1.0));
  }
  for (double a = 0.05; a < 8.0; a += 0.1) {
    for (double b = 0.05; b < 8.0; b += 0.1) {
      const TaxicabAngle alpha(a);
      const TaxicabAngle beta(b);
      const TaxicabAngle sum(a + b);
      v.cos_sum_dev = std::max(
          v.cos_sum_dev, std::abs(cos_sum(alpha, beta) - cos_t(sum)));
      v.sin_sum_dev = std::max(
          v.sin_sum_dev, std::abs(sin_sum(alpha, beta) - sin_t(sum)));
    }
  }
  for (double qx : {1.3, 4.9, 23.0}) {
    for (double qy : {0.7, 3.1, 11.0}) {
      for (double sx : {1.0, -1.0}) {
        for (double sy : {1.0, -1.0}) {
          const Point a(0.4, -0.9);
          const Point q(a.x() + sx * qx, a.y() + sy * qy);
          const double step = 0.6 * std::min(qx, qy);
          const double sight = std::atan2(sy * qy, sx * qx);
          const EuclideanAngle ref(sight - 0.1);
          for (MoveDirection dir :
               {MoveDirection::NW, MoveDirection::NE, MoveDirection::SW,
                MoveDirection::SE}) {
            const ParallaxScene scene{a, q, TaxicabLength(step), dir};
            try {
              const ParallaxMeasurement m = simulate_observation(scene, ref);
              const double rec = taxicab_parallax_distance(m).value();
              v.parallax_dev = std::max(
                  v.parallax_dev,
                  std::abs(rec - taxicab_distance(a, q).value()));
            } catch (const DomainError&) {
              // direction not admissible for this scene
            }
          }
        }
      }
    }
  }
  return v;
}

struct Options {
  std::string format = "text";
  int precision = 10;
  double tolerance = kDefaultTolerance;
  std::string output;
};

void emit(const Report& report, const Options& opt, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) throw DomainError("cannot write to " + opt.output);
    sink = &file;
  }
  if (opt.format == "json") {
    render_json(report, *sink);
  } else if (opt.format == "csv") {
    render_csv(report, *sink, opt.precision);
  } else if (opt.format == "svg") {
    throw UsageError("svg format is only valid for plot commands");
  } else {
    render_text(report, *sink, opt.precision);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"modified taxicab geometry toolkit"};
  app.name("taxicab");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
  app.add_option("--precision", opt.precision, "significant digits")
      ->check(CLI::Range(1, 17));
  app.add_option("--tolerance", opt.tolerance, "comparison tolerance");
  app.add_option("--output", opt.output, "write result to this path");

  std::function<int()> action;

  // convert
  auto* conv = app.add_subcommand(
      "convert", "convert an angle between Euclidean radians and t-radians");
  conv->fallthrough();
  std::string conv_dir;
  std::string conv_value;
  std::string conv_psi;
  conv->add_option("direction", conv_dir, "e2t or t2e")
      ->required()
      ->check(CLI::IsMember({"e2t", "t2e"}));
  conv->add_option("value", conv_value, "angle value")->required();
  conv->add_option("--psi", conv_psi,
                   "Euclidean reference angle for an angle inside a quadrant");
  conv->callback([&] {
    action = [&]() {
      Report report;
      if (conv_dir == "e2t") {
        const double phi = parse_angle(conv_value, Unit::Radians);
        double result;
        if (!conv_psi.empty()) {
          const double psi = parse_angle(conv_psi, Unit::Radians);
          result = taxicab_measure_in_quadrant(EuclideanAngle(phi),
                                               EuclideanAngle(psi))
                       .t();
        } else {
          result = taxicab_measure_standard(EuclideanAngle(phi)).t();
        }
        report.add("result", result);
      } else {
        if (!conv_psi.empty()) {
          throw UsageError("--psi only applies to e2t");
        }
        const double theta = parse_angle(conv_value, Unit::TRadians);
        report.add("result",
                   euclidean_direction_measure(TaxicabAngle(theta)).rad());
      }
      emit(report, opt, out);
      return 0;
    };
  });

  // trig
  auto* trig = app.add_subcommand(
      "trig", "taxicab sine/cosine, addition and double-angle formulas");
  trig->fallthrough();
  std::string trig_theta;
  std::vector<std::string> trig_sum;
  std::string trig_double;
  trig->add_option("theta", trig_theta, "angle in t-radians");
  trig->add_option("--sum", trig_sum, "alpha beta for the addition formulas")
      ->expected(2);
  trig->add_option("--double", trig_double, "alpha for the double-angle forms");
  trig->callback([&] {
    action = [&]() {
      Report report;
      if (trig_theta.empty() && trig_sum.empty() && trig_double.empty()) {
        throw UsageError("trig needs a theta, --sum, or --double");
      }
      if (!trig_theta.empty()) {
        const TaxicabAngle theta(parse_angle(trig_theta, Unit::TRadians));
        report.add("theta", theta.t());
        report.add("cos", cos_t(theta));
        report.add("sin", sin_t(theta));
      }
      if (!trig_sum.empty()) {
        const TaxicabAngle alpha(parse_angle(trig_sum[0], Unit::TRadians));
        const TaxicabAngle beta(parse_angle(trig_sum[1], Unit::TRadians));
        const Quadrant qa = quadrant_of(alpha);
        const Quadrant qb = quadrant_of(beta);
        report.add("alpha", alpha.t());
        report.add("beta", beta.t());
        report.add("quadrants", to_string(qa) + "," + to_string(qb));
        report.add("cos_sum", cos_sum(alpha, beta));
        report.add("cos_form", cos_sum_form_label(cos_sum_form(qa, qb)));
        report.add("sin_sum", sin_sum(alpha, beta));
        report.add("sin_form", sin_sum_form_label(sin_sum_form(qa, qb)));
      }
      if (!trig_double.empty()) {
        const TaxicabAngle alpha(parse_angle(trig_double, Unit::TRadians));
        report.add("double_alpha", alpha.t());
        report.add("cos_double", cos_double(alpha));
        report.add("sin_double", sin_double(alpha));
      }
      emit(report, opt, out);
      return 0;
    };
  });

  // triangle
  auto* tri = app.add_subcommand(
      "triangle", "taxicab triangle metrics and congruence analysis");
  tri->fallthrough();
  std::vector<double> tri_coords;
  tri->add_option("coords", tri_coords,
                  "x1 y1 x2 y2 x3 y3 [x4 y4 x5 y5 x6 y6]")
      ->expected(6, 12);
  tri->callback([&] {
    action = [&]() {
      if (tri_coords.size() != 6 && tri_coords.size() != 12) {
        throw UsageError("triangle takes 6 or 12 coordinates");
      }
      Report report;
      const Triangle t1(Point(tri_coords[0], tri_coords[1]),
                        Point(tri_coords[2], tri_coords[3]),
                        Point(tri_coords[4], tri_coords[5]));
      const TriangleMetrics m1 = measure(t1);
      if (tri_coords.size() == 6) {
        report.add("sides", sorted(m1.sides));
        report.add("angles", sorted(m1.angles));
        report.add("angle_sum", angle_sum(t1).t());
      } else {
        const Triangle t2(Point(tri_coords[6], tri_coords[7]),
                          Point(tri_coords[8], tri_coords[9]),
                          Point(tri_coords[10], tri_coords[11]));
        const TriangleMetrics m2 = measure(t2);
        report.add("t1_sides", sorted(m1.sides));
        report.add("t1_angles", sorted(m1.angles));
        report.add("t2_sides", sorted(m2.sides));
        report.add("t2_angles", sorted(m2.angles));
        const CongruenceReport c = classify_congruence(t1, t2, opt.tolerance);
        report.add("SSS", c.sss);
        report.add("SAS", c.sas);
        report.add("ASA", c.asa);
        report.add("AAS", c.aas);
        report.add("SSA", c.ssa);
        report.add("AAA", c.aaa);
        report.add("ASASA", c.asasa);
        report.add("SSSA", c.sssa);
        report.add("SASAS", c.sasas);
        report.add("congruent", c.sasas);
      }
      emit(report, opt, out);
      return 0;
    };
  });

  // parallax
  auto* par = app.add_subcommand("parallax",
                                 "parallax distance formulas and simulation");
  par->fallthrough();
  std::string par_mode;
  par->add_option("mode", par_mode, "formula or simulation mode")
      ->required()
      ->check(CLI::IsMember({"taxicab", "euclid-exact", "euclid-perp",
                             "euclid-approx", "simulate"}));
  std::string par_s, par_alpha, par_beta, par_theta;
  par->add_option("--s", par_s, "baseline length");
  par->add_option("--alpha", par_alpha, "first sighting angle");
  par->add_option("--beta", par_beta, "second sighting angle");
  par->add_option("--theta", par_theta, "reference direction angle (radians)");
  std::vector<double> par_observer, par_object;
  par->add_option("--observer", par_observer, "observer x y")->expected(2);
  par->add_option("--object", par_object, "object x y")->expected(2);
  std::string par_step;
  par->add_option("--step", par_step, "taxicab step length");
  std::string par_direction = "auto";
  par->add_option("--direction", par_direction, "NW, NE, SW, SE, or auto");
  std::string par_reference;
  par->add_option("--reference", par_reference,
                  "reference direction (radians; default: toward object)");
  par->callback([&] {
    action = [&]() {
      Report report;
      auto need = [&](const std::string& v, const char* name) -> const std::string& {
        if (v.empty()) {
          throw UsageError(std::string("missing --") + name);
        }
        return v;
      };
      if (par_mode == "taxicab") {
        const ParallaxMeasurement m(
            TaxicabLength(parse_number(need(par_s, "s"))),
            TaxicabAngle(parse_angle(need(par_alpha, "alpha"), Unit::TRadians)),
            TaxicabAngle(parse_angle(need(par_beta, "beta"), Unit::TRadians)));
        report.add("distance", taxicab_parallax_distance(m).value());
      } else if (par_mode == "euclid-exact") {
        const EuclideanParallaxMeasurement m(
            EuclideanLength(parse_number(need(par_s, "s"))),
            EuclideanAngle(parse_angle(need(par_alpha, "alpha"), Unit::Radians)),
            EuclideanAngle(parse_angle(need(par_beta, "beta"), Unit::Radians)),
            EuclideanAngle(parse_angle(need(par_theta, "theta"), Unit::Radians)));
        report.add("distance", euclidean_parallax_exact(m).value());
      } else if (par_mode == "euclid-perp") {
        report.add(
            "distance",
            euclidean_parallax_perpendicular(
                EuclideanLength(parse_number(need(par_s, "s"))),
                EuclideanAngle(parse_angle(need(par_alpha, "alpha"), Unit::Radians)),
                EuclideanAngle(parse_angle(need(par_beta, "beta"), Unit::Radians)))
                .value());
      } else if (par_mode == "euclid-approx") {
        report.add(
            "distance",
            euclidean_parallax_approx(
                EuclideanLength(parse_number(need(par_s, "s"))),
                EuclideanAngle(parse_angle(need(par_alpha, "alpha"), Unit::Radians)),
                EuclideanAngle(parse_angle(need(par_beta, "beta"), Unit::Radians)))
                .value());
      } else {  // simulate
        if (par_observer.size() != 2 || par_object.size() != 2) {
          throw UsageError("simulate needs --observer x y and --object x y");
        }
        const Point a(par_observer[0], par_observer[1]);
        const Point q(par_object[0], par_object[1]);
        const TaxicabLength step(parse_number(need(par_step, "step")));
        const EuclideanAngle ref(
            par_reference.empty()
                ? std::atan2(q.y() - a.y(), q.x() - a.x())
                : parse_angle(par_reference, Unit::Radians));
        std::optional<ParallaxMeasurement> m;
        MoveDirection used = MoveDirection::SE;
        if (par_direction == "auto") {
          std::string last_error = "no admissible move direction";
          for (MoveDirection dir :
               {MoveDirection::SE, MoveDirection::NW, MoveDirection::NE,
                MoveDirection::SW}) {
            try {
              m = simulate_observation(ParallaxScene{a, q, step, dir}, ref);
              used = dir;
              break;
            } catch (const DomainError& e) {
              last_error = e.what();
            }
          }
          if (!m) throw DomainError(last_error);
        } else {
          used = move_direction_from_string(par_direction);
          m = simulate_observation(ParallaxScene{a, q, step, used}, ref);
        }
        const double truth = taxicab_distance(a, q).value();
        const double reconstructed = taxicab_parallax_distance(*m).value();
        report.add("direction", to_string(used));
        report.add("s", m->s.value());
        report.add("alpha", m->alpha.t());
        report.add("beta", m->beta.t());
        report.add("true_distance", truth);
        report.add("reconstructed", reconstructed);
        report.add("difference", std::abs(reconstructed - truth));
      }
      emit(report, opt, out);
      return 0;
    };
  });

  // plot
  auto* plot_cmd =
      app.add_subcommand("plot", "emit the unit circle or trig graphs");
  plot_cmd->fallthrough();
  std::string plot_target;
  plot_cmd->add_option("target", plot_target, "unit-circle or trig-graphs")
      ->required()
      ->check(CLI::IsMember({"unit-circle", "trig-graphs"}));
  plot_cmd->callback([&] {
    action = [&]() {
      std::string format = opt.format == "text" ? "svg" : opt.format;
      if (format != "svg" && format != "csv") {
        throw UsageError("plot supports only svg or csv output");
      }
      if (opt.output.empty()) {
        throw UsageError("plot requires --output PATH");
      }
      std::ofstream file(opt.output);
      if (!file) throw DomainError("cannot write to " + opt.output);
      if (plot_target == "unit-circle") {
        if (format == "svg") {
          plot::write_unit_circle_svg(file);
        } else {
          plot::write_unit_circle_csv(file, opt.precision);
        }
      } else {
        if (format == "svg") {
          plot::write_trig_graphs_svg(file);
        } else {
          plot::write_trig_graphs_csv(file, opt.precision);
        }
      }
      return 0;
    };
  });

  // verify
  auto* ver = app.add_subcommand(
      "verify", "cross-check closed forms against the construction oracle");
  ver->fallthrough();
  ver->callback([&] {
    action = [&]() {
      const VerifySweeps v = run_verify_sweeps();
      Report report;
      report.add("arc_position_max_dev", v.arc_position_dev);
      report.add("acute_measure_max_dev", v.acute_measure_dev);
      report.add("diamond_identity_max_dev", v.diamond_identity_dev);
      report.add("cos_sum_max_dev", v.cos_sum_dev);
      report.add("sin_sum_max_dev", v.sin_sum_dev);
      report.add("parallax_max_dev", v.parallax_dev);
      report.add("max_dev", v.max_dev());
      report.add("tolerance", opt.tolerance);
      const bool ok = v.max_dev() < opt.tolerance;
      report.add("status", ok ? "pass" : "fail");
      emit(report, opt, out);
      return ok ? 0 : 1;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("taxicab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace taxicab::cli
