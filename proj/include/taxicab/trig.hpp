#pragma once

#include <string>

#include "taxicab/core.hpp"

namespace taxicab {

/// Quarter-arc of the unit diamond a normalized angle falls in:
/// I = [0,2), II = [2,4), III = [4,6), IV = [6,8).
enum class Quadrant : int { I = 0, II = 1, III = 2, IV = 3 };

std::string to_string(Quadrant q);

/// Point (cos_t theta, sin_t theta) on the unit diamond; |cos| + |sin| = 1.
struct TrigPair {
  double cos = 1.0;
  double sin = 0.0;
};

/// Piecewise-linear taxicab cosine: 1 - theta/2 on [0,4), -3 + theta/2 on
/// [4,8); period 8, range [-1,1].
double cos_t(TaxicabAngle theta);

/// Piecewise-linear taxicab sine: theta/2 on [0,2), 2 - theta/2 on [2,6),
/// -4 + theta/2 on [6,8).
double sin_t(TaxicabAngle theta);

TrigPair trig_pair(TaxicabAngle theta);

/// Quadrant of the normalized angle. Boundary values 0, 2, 4, 6 classify
/// into the quadrant counterclockwise-ahead (0->I, 2->II, 4->III, 6->IV);
/// either adjacent classification yields the same sum-formula results.
Quadrant quadrant_of(TaxicabAngle theta);

/// The two shapes the addition formulas take. With operands u, v:
///   Positive: -1 + |u + v|
///   Negative:  1 - |u - v|
enum class SumForm { Positive, Negative };

double apply_sum_form(SumForm form, double u, double v);

/// Case tables for the addition formulas, indexed by the operand
/// quadrants. The cosine table is symmetric (Negative exactly when the two
/// angles lie on opposite sides of the x-axis); the sine table is not.
SumForm cos_sum_form(Quadrant qa, Quadrant qb);
SumForm sin_sum_form(Quadrant qa, Quadrant qb);

/// Display form of a table cell, e.g. "1-|cos(a)-cos(b)|".
std::string cos_sum_form_label(SumForm form);
std::string sin_sum_form_label(SumForm form);

/// cos_t(alpha + beta) computed by table-dispatched case analysis over
/// cos_t alpha and cos_t beta (never by evaluating the sum directly).
double cos_sum(TaxicabAngle alpha, TaxicabAngle beta);

/// sin_t(alpha + beta) via the case table over sin_t alpha and cos_t beta.
double sin_sum(TaxicabAngle alpha, TaxicabAngle beta);

/// cos_t(2 alpha) = -1 + 2|cos_t alpha|.
double cos_double(TaxicabAngle alpha);

/// sin_t(2 alpha) = -1 + 2|cos_t(alpha - 1)|.
double sin_double(TaxicabAngle alpha);

}  // namespace taxicab
