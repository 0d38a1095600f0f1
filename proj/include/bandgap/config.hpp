#pragma once

#include <string>
#include <vector>

#include "bandgap/common.hpp"

namespace bandgap {

enum class Scenario { Simulate, Sweep, Optimize, Esd, Compare };
enum class Engine { Paper, Oracle };
enum class OutputFormat { Csv, Plotdata };

// Everything a scenario run needs. Defaults reproduce the perfect-gap
// parameter set (W1=1.1, W2=0.1, Gamma1=11, Gamma2=1) with theta=pi/3
// and no measurements.
struct RunConfig {
    double W1 = 1.1;
    double W2 = 0.1;
    double Gamma1 = 11.0;
    double Gamma2 = 1.0;
    double delta = 0.0;

    double theta = 1.0471975511965976;  // pi/3
    double p = 0.0;
    double p_r = 0.0;
    std::string p_r_policy = "zero";    // esd scenario: zero | optimal

    Engine engine = Engine::Paper;

    double t_max = 30.0;
    int t_samples = 601;

    // Optional explicit grids; empty means "derive from the scalars".
    std::vector<double> theta_grid;
    std::vector<double> p_grid;
    std::vector<double> p_r_grid;
    std::vector<double> t_grid;

    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = 0.25;

    double tol_p = 0.01;  // esd bisection tolerance

    std::string out;      // empty -> <scenario>.<ext>
    OutputFormat format = OutputFormat::Csv;
};

// Line-oriented `key = value` text with `#` comments. Angles accept
// symbolic fractions of pi (pi, pi/6, 2*pi/3, 0.5*pi); grids accept
// start:stop:count or {v1,v2,...}. Unknown keys are rejected with the
// line number; `required` keys missing from the text are reported by
// name. Parsed values overwrite `base`.
RunConfig parse_config(const std::string& text, RunConfig base = {},
                       const std::vector<std::string>& required = {});

// Named parameter presets fig1a..fig5b; throws ConfigError for unknown
// names. preset_names() lists them.
void apply_preset(RunConfig& cfg, const std::string& name);
std::vector<std::string> preset_names();

// Range validation with key-named messages; throws ConfigError.
void validate(const RunConfig& cfg);

// Parses a single scalar that may use the symbolic pi forms.
double parse_number(const std::string& token);

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

}  // namespace bandgap
