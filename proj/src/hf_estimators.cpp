#include "rgito/hf_estimators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rgito {

namespace {

constexpr double kVarEps = 1e-12;

double floor_var(double x) { return x < kVarEps ? 0.0 : x; }

void check_day(const TickDay& day) {
  if (day.n_ticks() < 2) throw std::invalid_argument("tick day needs at least 2 observations");
}

}  // namespace

int default_tsrv_scale(Eigen::Index n_ticks) {
  const double m = static_cast<double>(n_ticks - 1);
  const int k = static_cast<int>(std::floor(std::pow(m, 2.0 / 3.0)));
  return std::clamp(k, 2, static_cast<int>(m / 2));
}

int default_msrv_scales(Eigen::Index n_ticks) {
  const double m = static_cast<double>(n_ticks - 1);
  const int M = static_cast<int>(std::floor(std::sqrt(m)));
  return std::max(M, 2);
}

int default_block_len(Eigen::Index n_ticks) {
  return std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_ticks)))));
}

double noise_variance(const TickDay& day) {
  check_day(day);
  const Eigen::Index n = day.prices.size();
  const double ss = (day.prices.tail(n - 1) - day.prices.head(n - 1)).square().sum();
  return ss / (2.0 * static_cast<double>(n - 1));
}

double avg_lag_rv(const ArrayXd& prices, int lag) {
  const Eigen::Index n = prices.size();
  if (lag < 1 || lag >= n) throw std::invalid_argument("avg_lag_rv: lag out of range");
  return (prices.tail(n - lag) - prices.head(n - lag)).square().sum() / static_cast<double>(lag);
}

double tsrv(const TickDay& day, int K) {
  check_day(day);
  const Eigen::Index m = day.prices.size() - 1;  // increment count
  if (K < 2 || K > m / 2)
    throw std::invalid_argument("tsrv: scale K=" + std::to_string(K) + " out of range for m=" +
                                std::to_string(m));
  const double avg_k = avg_lag_rv(day.prices, K);
  const double rv_all = avg_lag_rv(day.prices, 1);
  const double mbar = static_cast<double>(m - K + 1) / K;
  return floor_var(avg_k - (mbar / static_cast<double>(m)) * rv_all);
}

ArrayXd msrv_weights(int M) {
  if (M < 2) throw std::invalid_argument("msrv_weights: need M >= 2");
  // Minimum-l2 solution of C a = (1, 0)^T with rows (1..1) and (1, 1/2, .., 1/M):
  // a = C^T (C C^T)^{-1} (1,0)^T.
  ArrayXd inv_k(M);
  for (int k = 1; k <= M; ++k) inv_k[k - 1] = 1.0 / k;
  Eigen::Matrix2d gram;
  gram(0, 0) = static_cast<double>(M);
  gram(0, 1) = gram(1, 0) = inv_k.sum();
  gram(1, 1) = inv_k.square().sum();
  const Eigen::Vector2d y = gram.ldlt().solve(Eigen::Vector2d(1.0, 0.0));
  return y[0] + y[1] * inv_k;
}

double msrv(const TickDay& day, int M) {
  check_day(day);
  const Eigen::Index m = day.prices.size() - 1;
  if (M < 2 || static_cast<double>(M) > std::sqrt(static_cast<double>(m)) + 1.0)
    throw std::invalid_argument("msrv: M=" + std::to_string(M) + " out of range for m=" +
                                std::to_string(m));
  const ArrayXd w = msrv_weights(M);
  double acc = 0.0;
  for (int k = 1; k <= M; ++k) acc += w[k - 1] * avg_lag_rv(day.prices, k);
  return floor_var(acc);
}

std::vector<JumpDetection> detect_jumps(const TickDay& day, const JumpDetectConfig& cfg) {
  check_day(day);
  const Eigen::Index n = day.prices.size();
  const int b = cfg.block_len > 0 ? cfg.block_len : default_block_len(n);
  if (n < 2 * b) throw std::invalid_argument("detect_jumps: day too short for block length");

  const int n_blocks = static_cast<int>(n / b);
  ArrayXd block_mean(n_blocks);
  for (int g = 0; g < n_blocks; ++g)
    block_mean[g] = day.prices.segment(static_cast<Eigen::Index>(g) * b, b).mean();

  const double sigma_day = std::sqrt(std::max(tsrv(day, default_tsrv_scale(n)), kVarEps));
  const double delta = static_cast<double>(b) / static_cast<double>(n);
  const double threshold = cfg.c * sigma_day * std::pow(delta, cfg.exponent);

  std::vector<JumpDetection> out;
  for (int g = 1; g < n_blocks; ++g) {
    const double d = block_mean[g] - block_mean[g - 1];
    if (std::abs(d) > threshold) out.push_back({g, g * b, d});
  }
  return out;
}

double jump_variation(const std::vector<JumpDetection>& detections) {
  double acc = 0.0;
  for (const auto& d : detections) acc += d.size * d.size;
  return acc;
}

ArrayXd remove_jumps(const ArrayXd& prices, const std::vector<JumpDetection>& detections,
                     int block_len) {
  ArrayXd adjusted = prices;
  const int b = block_len > 0 ? block_len : default_block_len(prices.size());
  for (const auto& d : detections) {
    const Eigen::Index from = static_cast<Eigen::Index>(d.interval_index) * b;
    if (from < adjusted.size()) adjusted.tail(adjusted.size() - from) -= d.size;
  }
  return adjusted;
}

DailyMeasures jump_adjusted_rv(const TickDay& day, const MeasureConfig& cfg,
                               std::vector<JumpDetection>& detections_out) {
  check_day(day);
  detections_out = detect_jumps(day, cfg.jump);

  TickDay adjusted = day;
  if (!detections_out.empty())
    adjusted.prices = remove_jumps(day.prices, detections_out,
                                   cfg.jump.block_len > 0 ? cfg.jump.block_len
                                                          : default_block_len(day.n_ticks()));

  DailyMeasures out;
  const int M = cfg.msrv_scales > 0 ? cfg.msrv_scales : default_msrv_scales(day.n_ticks());
  out.rv = msrv(adjusted, M);
  out.jv = floor_var(jump_variation(detections_out));
  out.jump_count = static_cast<int>(detections_out.size());
  out.noise_var = floor_var(noise_variance(day));
  return out;
}

DailyMeasures jump_adjusted_rv(const TickDay& day, const MeasureConfig& cfg) {
  std::vector<JumpDetection> detections;
  return jump_adjusted_rv(day, cfg, detections);
}

JumpParams estimate_jump_params(const std::vector<std::vector<JumpDetection>>& panel_detections) {
  if (panel_detections.empty())
    throw std::invalid_argument("estimate_jump_params: need at least one day");
  double count_sum = 0.0;
  std::vector<double> squared;
  for (const auto& day : panel_detections) {
    count_sum += static_cast<double>(day.size());
    for (const auto& d : day) squared.push_back(d.size * d.size);
  }
  JumpParams p;
  p.lambda = count_sum / static_cast<double>(panel_detections.size());
  if (squared.empty()) {
    p.omega_L = 0.0;
  } else {
    std::sort(squared.begin(), squared.end());
    const std::size_t n = squared.size();
    p.omega_L = n % 2 == 1 ? squared[n / 2] : 0.5 * (squared[n / 2 - 1] + squared[n / 2]);
  }
  p.zeta2 = 0.0;
  return p;
}

}  // namespace rgito
