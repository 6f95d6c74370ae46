#pragma once

#include <ostream>

namespace taxicab::plot {

/// The unit diamond with tick marks and labels at integer arc positions.
void write_unit_circle_svg(std::ostream& out);

/// cos_t and sin_t over [0,16] at step 0.01, as two labeled polylines.
void write_trig_graphs_svg(std::ostream& out);

/// Columns theta,cos,sin over [0,16] at step 0.01.
void write_trig_graphs_csv(std::ostream& out, int precision);

/// Columns arc,x,y walking the diamond at step 0.01.
void write_unit_circle_csv(std::ostream& out, int precision);

}  // namespace taxicab::plot
