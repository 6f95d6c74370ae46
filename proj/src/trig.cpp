#include "taxicab/trig.hpp"

#include <array>
#include <cmath>

#include "taxicab/angle.hpp"

namespace taxicab {

namespace {

using FormRow = std::array<SumForm, 4>;
using FormTable = std::array<FormRow, 4>;

constexpr SumForm P = SumForm::Positive;  // -1 + |u + v|
constexpr SumForm N = SumForm::Negative;  //  1 - |u - v|

// Cosine sum forms by (quadrant of alpha, quadrant of beta): Negative
// exactly when the angles lie on opposite sides of the x-axis.
constexpr FormTable kCosSumForms = {{
    //        I  II III IV
    FormRow{P, P, N, N},  // I
    FormRow{P, P, N, N},  // II
    FormRow{N, N, P, P},  // III
    FormRow{N, N, P, P},  // IV
}};

// Sine sum forms. The table is order-sensitive; cells follow from the
// cosine table through sin_t x = cos_t(x - 2), which shifts alpha's
// quadrant by one.
constexpr FormTable kSinSumForms = {{
    //        I  II III IV
    FormRow{N, N, P, P},  // I
    FormRow{P, P, N, N},  // II
    FormRow{P, P, N, N},  // III
    FormRow{N, N, P, P},  // IV
}};

}  // namespace

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
  }
  return "?";
}

double cos_t(TaxicabAngle theta) {
  const double t = theta.normalized().t();
  return t < 4.0 ? 1.0 - 0.5 * t : -3.0 + 0.5 * t;
}

double sin_t(TaxicabAngle theta) {
  const double t = theta.normalized().t();
  if (t < 2.0) return 0.5 * t;
  if (t < 6.0) return 2.0 - 0.5 * t;
  return -4.0 + 0.5 * t;
}

TrigPair trig_pair(TaxicabAngle theta) {
  return TrigPair{cos_t(theta), sin_t(theta)};
}

Quadrant quadrant_of(TaxicabAngle theta) {
  const double t = theta.normalized().t();
  return static_cast<Quadrant>(static_cast<int>(t / 2.0) & 3);
}

double apply_sum_form(SumForm form, double u, double v) {
  return form == SumForm::Positive ? -1.0 + std::abs(u + v)
                                   : 1.0 - std::abs(u - v);
}

SumForm cos_sum_form(Quadrant qa, Quadrant qb) {
  return kCosSumForms[static_cast<int>(qa)][static_cast<int>(qb)];
}

SumForm sin_sum_form(Quadrant qa, Quadrant qb) {
  return kSinSumForms[static_cast<int>(qa)][static_cast<int>(qb)];
}

std::string cos_sum_form_label(SumForm form) {
  return form == SumForm::Positive ? "-1+|cos(a)+cos(b)|"
                                   : "1-|cos(a)-cos(b)|";
}

std::string sin_sum_form_label(SumForm form) {
  return form == SumForm::Positive ? "-1+|sin(a)+cos(b)|"
                                   : "1-|sin(a)-cos(b)|";
}

double cos_sum(TaxicabAngle alpha, TaxicabAngle beta) {
  const SumForm form = cos_sum_form(quadrant_of(alpha), quadrant_of(beta));
  return apply_sum_form(form, cos_t(alpha), cos_t(beta));
}

double sin_sum(TaxicabAngle alpha, TaxicabAngle beta) {
  const SumForm form = sin_sum_form(quadrant_of(alpha), quadrant_of(beta));
  return apply_sum_form(form, sin_t(alpha), cos_t(beta));
}

double cos_double(TaxicabAngle alpha) {
  return -1.0 + 2.0 * std::abs(cos_t(alpha));
}

double sin_double(TaxicabAngle alpha) {
  return -1.0 + 2.0 * std::abs(cos_t(TaxicabAngle(alpha.t() - 1.0)));
}

}  // namespace taxicab
