#include "taxicab/parallax.hpp"

#include <cmath>
#include <optional>

#include "taxicab/angle.hpp"

namespace taxicab {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kThreeQuarterPi = 2.3561944901923449288469825374596;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// Difference of two arc positions wrapped into (-4, 4].
double wrap_signed(double d) {
  d = std::fmod(d, 8.0);
  if (d > 4.0) d -= 8.0;
  if (d <= -4.0) d += 8.0;
  return d;
}

double sign(double v) { return v < 0.0 ? -1.0 : 1.0; }

Vector displacement(MoveDirection d, double taxicab_step) {
  const double h = 0.5 * taxicab_step;
  switch (d) {
    case MoveDirection::NW: return Vector(-h, h);
    case MoveDirection::NE: return Vector(h, h);
    case MoveDirection::SW: return Vector(-h, -h);
    case MoveDirection::SE: return Vector(h, -h);
  }
  throw DomainError("unknown move direction");
}

struct Candidate {
  MoveDirection direction;
  double beta;  // |signed offset of the moved sighting from the reference|
};

}  // namespace

ParallaxMeasurement::ParallaxMeasurement(TaxicabLength s_in,
                                         TaxicabAngle alpha_in,
                                         TaxicabAngle beta_in)
    : s(s_in), alpha(alpha_in), beta(beta_in) {
  if (s.value() <= 0.0) {
    throw DomainError("parallax baseline must be positive");
  }
  if (beta.t() <= alpha.t()) {
    throw DomainError("parallax requires beta > alpha");
  }
}

EuclideanParallaxMeasurement::EuclideanParallaxMeasurement(
    EuclideanLength s_e_in, EuclideanAngle alpha_e_in,
    EuclideanAngle beta_e_in, EuclideanAngle theta_e_in)
    : s_e(s_e_in),
      alpha_e(alpha_e_in),
      beta_e(beta_e_in),
      theta_e(theta_e_in) {
  if (s_e.value() <= 0.0) {
    throw DomainError("parallax baseline must be positive");
  }
  if (beta_e.rad() <= alpha_e.rad()) {
    throw DomainError("parallax requires beta_e > alpha_e");
  }
}

MoveDirection move_direction_from_string(const std::string& name) {
  if (name == "NW" || name == "nw") return MoveDirection::NW;
  if (name == "NE" || name == "ne") return MoveDirection::NE;
  if (name == "SW" || name == "sw") return MoveDirection::SW;
  if (name == "SE" || name == "se") return MoveDirection::SE;
  throw DomainError("unknown move direction: " + name);
}

std::string to_string(MoveDirection d) {
  switch (d) {
    case MoveDirection::NW: return "NW";
    case MoveDirection::NE: return "NE";
    case MoveDirection::SW: return "SW";
    case MoveDirection::SE: return "SE";
  }
  return "?";
}

TaxicabLength taxicab_parallax_distance(const ParallaxMeasurement& m) {
  return TaxicabLength(m.s.value() / (m.beta.t() - m.alpha.t()));
}

ParallaxMeasurement simulate_observation(const ParallaxScene& scene,
                                         EuclideanAngle reference_theta) {
  const double s = scene.step.value();
  if (s <= 0.0) throw DomainError("scene step must be positive");

  const Vector u = scene.object - scene.observer;
  const double margin = kDefaultTolerance;
  if (std::abs(u.dx()) <= margin || std::abs(u.dy()) <= margin) {
    throw DomainError(
        "object must lie strictly inside one quadrant of the observer");
  }

  // The two diagonal moves that keep |dx|+|dy| to the object constant:
  // along y = -x when the object sits in quadrant I or III, along y = x
  // for quadrants II and IV.
  const bool same_sign = (u.dx() > 0.0) == (u.dy() > 0.0);
  const MoveDirection first = same_sign ? MoveDirection::SE : MoveDirection::NE;
  const MoveDirection second = same_sign ? MoveDirection::NW : MoveDirection::SW;

  const double ref =
      direction_arc_position(Vector(std::cos(reference_theta.rad()),
                                    std::sin(reference_theta.rad())))
          .t();
  const double a0 = direction_arc_position(u).t();
  const double s0 = wrap_signed(a0 - ref);
  if (std::abs(s0) >= 4.0 - margin) {
    throw DomainError("reference direction is too far from the object");
  }

  std::optional<Candidate> chosen;
  for (MoveDirection dir : {first, second}) {
    const Vector w = scene.object - (scene.observer + displacement(dir, s));
    if (sign(w.dx()) != sign(u.dx()) || sign(w.dy()) != sign(u.dy()) ||
        std::abs(w.dx()) <= margin || std::abs(w.dy()) <= margin) {
      continue;  // object would leave the quadrant
    }
    const double s1 = wrap_signed(direction_arc_position(w).t() - ref);
    if (std::abs(s1) >= 4.0 - margin) continue;
    if (std::abs(s1) <= std::abs(s0)) continue;  // angle did not increase
    if (s0 != 0.0 && sign(s1) != sign(s0)) continue;  // crossed the reference
    if (dir == scene.move_direction) {
      chosen = Candidate{dir, std::abs(s1)};
      break;
    }
  }
  if (!chosen) {
    throw DomainError(
        "move direction does not preserve the distance and increase the "
        "sighting angle for this scene");
  }
  return ParallaxMeasurement(TaxicabLength(s), TaxicabAngle(std::abs(s0)),
                             TaxicabAngle(chosen->beta));
}

EuclideanLength euclidean_parallax_exact(
    const EuclideanParallaxMeasurement& m) {
  const double a = m.alpha_e.rad();
  const double b = m.beta_e.rad();
  const double t = m.theta_e.rad();
  if (a < 0.0 || t < 0.0) {
    throw DomainError("sighting angles must be nonnegative");
  }
  const double parallax = b - a;
  if (parallax <= 0.0 || parallax >= kHalfPi) {
    throw DomainError("parallax angle must lie in (0, pi/2)");
  }
  if (b + t >= kThreeQuarterPi) {
    throw DomainError("configuration is degenerate: beta + theta >= 3*pi/4");
  }
  const double x = b + t;
  return EuclideanLength(m.s_e.value() * (std::cos(x) + std::sin(x)) /
                         (kSqrt2 * std::sin(parallax)));
}

EuclideanLength euclidean_parallax_perpendicular(EuclideanLength s_e,
                                                 EuclideanAngle alpha_e,
                                                 EuclideanAngle beta_e) {
  if (s_e.value() <= 0.0) {
    throw DomainError("parallax baseline must be positive");
  }
  const double parallax = beta_e.rad() - alpha_e.rad();
  if (parallax <= 0.0 || parallax >= kHalfPi) {
    throw DomainError("parallax angle must lie in (0, pi/2)");
  }
  return EuclideanLength(s_e.value() / std::tan(parallax));
}

EuclideanLength euclidean_parallax_approx(EuclideanLength s_e,
                                          EuclideanAngle alpha_e,
                                          EuclideanAngle beta_e) {
  if (s_e.value() <= 0.0) {
    throw DomainError("parallax baseline must be positive");
  }
  const double parallax = beta_e.rad() - alpha_e.rad();
  if (parallax <= 0.0) {
    throw DomainError("parallax requires beta_e > alpha_e");
  }
  return EuclideanLength(s_e.value() / parallax);
}

TaxicabParallaxLink link_taxicab_euclidean(EuclideanLength s_e,
                                           EuclideanLength d_e,
                                           EuclideanAngle alpha_e,
                                           EuclideanAngle beta_e,
                                           EuclideanAngle theta_e,
                                           double tol) {
  const double a = alpha_e.rad();
  const double b = beta_e.rad();
  const double t = theta_e.rad();
  if (s_e.value() <= 0.0 || d_e.value() <= 0.0) {
    throw DomainError("lengths must be positive");
  }
  if (a < 0.0 || t < 0.0 || b <= a) {
    throw DomainError("angles must satisfy 0 <= alpha < beta, theta >= 0");
  }
  if (a + t <= kDefaultTolerance) {
    throw DomainError("object must not lie on an axis");
  }
  if (b + t > kHalfPi) {
    throw DomainError("sight lines must stay inside the first quadrant");
  }
  const EuclideanParallaxMeasurement m(s_e, alpha_e, beta_e, theta_e);
  const double d_check = euclidean_parallax_exact(m).value();
  if (std::abs(d_check - d_e.value()) >
      tol * std::max(1.0, std::abs(d_e.value()))) {
    throw DomainError("scene is inconsistent with the exact parallax formula");
  }

  const double sight = a + t;
  const TaxicabLength s(kSqrt2 * s_e.value());
  const TaxicabLength d(d_e.value() * (std::cos(sight) + std::sin(sight)));
  const TaxicabAngle parallax = taxicab_measure_in_quadrant(
      EuclideanAngle(b - a), EuclideanAngle(sight));
  return TaxicabParallaxLink{s, d, parallax};
}

}  // namespace taxicab
