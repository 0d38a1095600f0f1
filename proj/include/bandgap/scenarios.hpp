#pragma once

#include "bandgap/config.hpp"
#include "bandgap/table.hpp"

namespace bandgap {

// Executes one scenario and returns its table:
//   simulate: omega_t, re/im of C1..C6, norm, a, b, c, abs_d, P, C
//   sweep:    theta, p, p_r, omega_t, branch, C, P
//   optimize: omega_t|p, p_r_star, C_opt, P_opt, branch
//   esd:      theta, p_star, t_first_zero_at_p0
//   compare:  omega_t, C_paper, C_oracle, delta_C, coherence_residual
// branch columns encode WeakMeasurement = 0, Reversal = 1.
ResultTable run_scenario(Scenario scenario, const RunConfig& cfg);

// Default output filename for a scenario/format pair.
std::string default_output_path(Scenario scenario, OutputFormat format);

}  // namespace bandgap
