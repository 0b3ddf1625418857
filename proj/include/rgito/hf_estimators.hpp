#pragma once

#include <optional>
#include <vector>

#include "rgito/params.hpp"
#include "rgito/tick_data.hpp"

namespace rgito {

/// Per-day sufficient statistics for estimation.
struct DailyMeasures {
  double rv = 0.0;         // jump-adjusted realized variance
  double jv = 0.0;         // jump variation
  std::optional<double> nv;  // option-based variance, NV_{i-1} paired with h_i
  int jump_count = 0;
  double noise_var = 0.0;  // estimated microstructure noise variance
};

struct JumpDetectConfig {
  double c = 5.0;          // threshold multiplier
  double exponent = 0.49;  // threshold ~ c * sigma_day * Delta^exponent
  int block_len = 1;       // pre-averaging block in ticks; 0 = floor(sqrt(m))
};

struct JumpDetection {
  int interval_index = 0;  // 1-based block-increment index
  int tick_index = 0;      // first tick of the flagged block
  double size = 0.0;       // block increment, the jump-size estimate
};

struct MeasureConfig {
  JumpDetectConfig jump;
  int tsrv_scale = 0;   // 0 = floor(m^(2/3))
  int msrv_scales = 0;  // 0 = floor(sqrt(m))
};

/// sigma_eps^2 estimate: sum of squared tick increments / (2 * increment count).
double noise_variance(const TickDay& day);

/// Offset-averaged K-lag realized variance, (1/K) * sum_j (Y_j - Y_{j-K})^2.
double avg_lag_rv(const ArrayXd& prices, int lag);

/// Two-scale realized variance at subsampling scale K, floored at zero.
double tsrv(const TickDay& day, int K);

/// Minimum-norm weights a_1..a_M with sum a_k = 1 and sum a_k / k = 0.
ArrayXd msrv_weights(int M);

/// Multi-scale realized variance over scales 1..M, floored at zero.
double msrv(const TickDay& day, int M);

std::vector<JumpDetection> detect_jumps(const TickDay& day, const JumpDetectConfig& cfg = {});

/// JV = sum of squared detected sizes.
double jump_variation(const std::vector<JumpDetection>& detections);

/// Removes detected jump increments from the series and returns the tick
/// series with those block increments zeroed.
ArrayXd remove_jumps(const ArrayXd& prices, const std::vector<JumpDetection>& detections,
                     int block_len);

/// Full per-day pipeline: detect jumps, adjust, run MSRV, assemble measures.
DailyMeasures jump_adjusted_rv(const TickDay& day, const MeasureConfig& cfg = {});

DailyMeasures jump_adjusted_rv(const TickDay& day, const MeasureConfig& cfg,
                               std::vector<JumpDetection>& detections_out);

/// lambda-hat = mean daily count, omega_L-hat = median of all squared sizes.
JumpParams estimate_jump_params(const std::vector<std::vector<JumpDetection>>& panel_detections);

int default_tsrv_scale(Eigen::Index n_ticks);
int default_msrv_scales(Eigen::Index n_ticks);
int default_block_len(Eigen::Index n_ticks);

}  // namespace rgito
