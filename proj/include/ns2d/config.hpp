#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ns2d/errors.hpp"

namespace ns2d {

/// Every tunable of the experiment front end, flat key=value style. Defaults
/// here are the materialized values a run manifest echoes back. Keys are
/// rejected unless they appear in this schema; every key is also available
/// as a CLI flag of the same name.
struct Settings {
    // Physics and discretization.
    double nu = 0.1;
    double k = 1e-3;
    int n = 64; // key "N"
    long long steps = 1000;
    std::string nonlinearity = "galerkin"; // galerkin | collocation | gear
    std::string bootstrap = "euler";       // euler | exact
    double cw_estimate = 1.0;
    double blowup_threshold = 1e12;

    // Forcing.
    std::string forcing = "zero"; // zero | steady_tg | kolmogorov | manufactured
    double forcing_amplitude = 0.0;
    int kolmogorov_mode = 4;
    double kolmogorov_tilt = 0.1;

    // Initial data.
    std::string init = "taylor_green"; // zero | taylor_green | random
    double init_amplitude = 1.0;
    double spectrum_slope = -2.0;
    std::uint64_t seed = 1;
    double target_gnorm = 0.0; // soak: rescale init so ||V0||_G(nu) hits this

    // Output.
    std::string out_dir = "out";
    long long series_interval = 1;
    long long spectrum_interval = 0;
    long long checkpoint_interval = 0;
    std::string resume; // checkpoint path to continue from
    long long burn_in_steps = -1; // -1: ceil(absorbing_time/k) * 1.2
    std::string basis_modes = "1,0;0,1;1,1";
    std::string fft_planner = "estimate"; // estimate | measure

    // scan driver.
    std::string scan_nu;
    std::string scan_k;
    int scan_threads = 0; // 0 = hardware concurrency

    // converge driver.
    std::string converge_ks = "4e-3,2e-3,1e-3,5e-4";
    double t_final = 1.0;

    // wente-probe driver.
    long long wente_samples = 1000;
    int wente_mode_cap = 0; // 0 = N/3; lower to match samples across N
};

/// Applies one key=value onto s. line = 0 means "command-line flag"; errors
/// carry the source location either way.
void apply_setting(Settings& s, const std::string& key, const std::string& value,
                   int line);

/// Parses flat key=value text ('#' comments, blank lines allowed) onto the
/// defaults. Unknown keys, malformed values, and constraint violations throw
/// ConfigError with the line number.
Settings parse_config_text(const std::string& text);
Settings parse_config_file(const std::string& path);

/// Cross-field validation (ranges are enforced per key on assignment).
void validate_settings(const Settings& s);

/// Resolved manifest: every key materialized, one per line, sorted. Derived
/// quantities (rho0, k0, ...) can be appended by the caller; wall-clock
/// metadata belongs in '#' comments so manifests stay comparable.
std::string manifest_text(const Settings& s,
                          const std::vector<std::pair<std::string, std::string>>& derived);

std::vector<std::pair<int, int>> parse_basis_modes(const std::string& text);
std::vector<double> parse_double_list(const std::string& text, const char* what);

} // namespace ns2d
