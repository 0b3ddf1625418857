#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rgito/params.hpp"
#include "rgito/tick_data.hpp"

namespace rgito {

struct SimConfig {
  StructuralParams structural;
  JumpParams jumps;
  OptionLinkParams link;         // drives the synthetic option-based variance series
  int n_days = 125;
  int ticks_per_day = 390;       // m; tick j sits at fraction j/m, j = 0..m-1
  double noise_sd = 0.005;       // microstructure noise sd, interior ticks only
  double x0 = 10.0;              // initial log price
  double sigma0_sq = 1.4;        // initial spot variance anchor
  std::uint64_t seed = 1;
  int euler_substeps_per_tick = 0;  // 0 = auto: ceil(23400 / m), so >= 23400 substeps/day
  double var_floor_frac = 1e-12;    // spot-variance floor, as a fraction of sigma0_sq
  double max_floored_frac = 0.01;   // run fails above this share of floored substeps

  void validate() const;
  int substeps_per_tick() const;
};

struct JumpEvent {
  int day = 0;       // 1-based
  double time = 0.0; // intraday fraction in (0,1]
  double size = 0.0; // signed jump in log price
};

/// Everything the simulator knows about one day, latent truths included.
struct DayRecord {
  int day_index = 0;
  ArrayXd times;      // m absolute times
  ArrayXd noisy;      // observed Y on the grid
  ArrayXd latent;     // clean X on the grid
  double true_iv = 0.0;   // fine-grid Riemann sum of spot variance
  double true_jv = 0.0;   // sum of squared jumps
  double true_h = 0.0;    // exact conditional variance h_i(theta)
  double nv = 0.0;        // synthetic NV_{i-1}, paired with h_i
  std::vector<JumpEvent> jumps;
};

struct SimOutput {
  TickPanel ticks;
  std::vector<ArrayXd> latent_x;
  ArrayXd true_iv;
  ArrayXd true_jv;
  ArrayXd true_h;
  ArrayXd nv;                     // nv[i-1] = NV_{i-1} for day i
  std::vector<JumpEvent> jump_times;
  long long floored_substeps = 0;
  long long total_substeps = 0;
};

struct FloorStats {
  long long floored_substeps = 0;
  long long total_substeps = 0;
};

/// Streams one DayRecord per simulated day; keeps O(m) memory.
FloorStats simulate_stream(const SimConfig& cfg, const std::function<void(const DayRecord&)>& sink);

/// Collects the full panel. Prefer simulate_stream for large grids.
SimOutput simulate(const SimConfig& cfg);

/// D_i = true_iv_i - true_h_i, the martingale-difference realizations.
ArrayXd realized_D(const SimOutput& out);

/// The built-in benchmark simulation design used by the Monte-Carlo studies.
SimConfig benchmark_config(int n_days, int ticks_per_day, std::uint64_t seed);

}  // namespace rgito
