#include "rgito/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "rgito/model_core.hpp"

namespace rgito {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent per-(seed, day, purpose) stream keys.
std::uint64_t stream_key(std::uint64_t seed, int day, int purpose) {
  return splitmix64(splitmix64(seed ^ (0xA0761D6478BD642FULL * static_cast<std::uint64_t>(day))) +
                    static_cast<std::uint64_t>(purpose));
}

struct DayJumps {
  std::vector<double> times;  // sorted, in (0,1]
  std::vector<double> sizes;
};

DayJumps draw_jumps(const JumpParams& j, std::mt19937_64& rng) {
  DayJumps out;
  std::poisson_distribution<int> count_dist(j.lambda);
  const int n = j.lambda > 0.0 ? count_dist(rng) : 0;
  if (n == 0) return out;
  out.times.resize(n);
  out.sizes.resize(n);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < n; ++k) out.times[k] = 1.0 - unif(rng);  // (0, 1]
  std::sort(out.times.begin(), out.times.end());

  double delta = 0.0, eta_sd = 0.0;
  if (j.size_law == JumpSizeLaw::SignedNormal) {
    const double eta = j.omega_L - std::sqrt(j.omega_L * j.omega_L - j.zeta2 / 2.0);
    delta = std::sqrt(j.omega_L - eta);
    eta_sd = std::sqrt(eta);
  }
  const double zeta = std::sqrt(j.zeta2);
  for (int k = 0; k < n; ++k) {
    const double sign = unif(rng) < 0.5 ? -1.0 : 1.0;
    double l2;
    if (j.size_law == JumpSizeLaw::SignedNormal) {
      const double g = delta + eta_sd * gauss(rng);
      l2 = g * g;
    } else {
      l2 = j.omega_L + zeta * gauss(rng);
    }
    l2 = std::max(l2, 1e-12);
    out.sizes[k] = sign * std::sqrt(l2);
  }
  return out;
}

}  // namespace

void SimConfig::validate() const {
  structural.validate();
  if (jumps.lambda > 0.0) jumps.validate();
  if (ticks_per_day < 2) throw std::invalid_argument("sim: ticks_per_day must be >= 2");
  if (n_days < 1) throw std::invalid_argument("sim: n_days must be >= 1");
  if (noise_sd < 0.0) throw std::invalid_argument("sim: noise_sd must be >= 0");
  if (!(sigma0_sq > 0.0)) throw std::invalid_argument("sim: sigma0_sq must be > 0");
  if (euler_substeps_per_tick < 0) throw std::invalid_argument("sim: euler_substeps_per_tick must be >= 0");
}

int SimConfig::substeps_per_tick() const {
  if (euler_substeps_per_tick > 0) return euler_substeps_per_tick;
  return (23400 + ticks_per_day - 1) / ticks_per_day;
}

FloorStats simulate_stream(const SimConfig& cfg, const std::function<void(const DayRecord&)>& sink) {
  cfg.validate();
  const StructuralParams& s = cfg.structural;
  const auto [r1, r2, r3] = rho_coefficients(s.alpha);

  // h_i(theta) is an exact affine function of the day-start anchor:
  //   h_i = h_const + h_load * sigma^2_{i-1}.
  const double h_const = (r2 - 2.0 * r3) * s.nu + r2 * s.beta * cfg.jumps.lambda * cfg.jumps.omega_L +
                         2.0 * r3 * s.gamma * s.omega1 - r2 * s.omega2;
  const double h_load = r1 - r2 + 2.0 * s.gamma * r3;
  const double omega = s.gamma * s.omega1 - s.omega2;

  const int m = cfg.ticks_per_day;
  const int spt = cfg.substeps_per_tick();
  const long long steps = static_cast<long long>(m) * spt;
  const double dt = 1.0 / static_cast<double>(steps);
  const double sqrt_dt = std::sqrt(dt);
  const double rho = s.rho;
  const double rho_c = std::sqrt(1.0 - rho * rho);
  const double var_floor = cfg.var_floor_frac * cfg.sigma0_sq;
  const double sigma_e = std::sqrt(cfg.link.sigma_e2);

  double anchor = cfg.sigma0_sq;
  double x = cfg.x0;
  long long floored = 0;
  const long long total = steps * cfg.n_days;

  DayRecord rec;
  rec.times.resize(m);
  rec.noisy.resize(m);
  rec.latent.resize(m);

  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int day = 1; day <= cfg.n_days; ++day) {
    std::mt19937_64 rng_jump(stream_key(cfg.seed, day, 1));
    std::mt19937_64 rng_path(stream_key(cfg.seed, day, 2));
    std::mt19937_64 rng_noise(stream_key(cfg.seed, day, 3));
    std::mt19937_64 rng_nv(stream_key(cfg.seed, day, 4));

    const DayJumps jumps = draw_jumps(cfg.jumps, rng_jump);

    rec.day_index = day;
    rec.jumps.clear();
    rec.true_h = h_const + h_load * anchor;
    rec.nv = cfg.link.b + cfg.link.a * rec.true_h + sigma_e * gauss(rng_nv);

    double iv = 0.0;   // running integral of spot variance
    double jv = 0.0;   // running sum of squared jumps
    double z = 0.0;    // running Brownian increment of the current day
    std::size_t next_jump = 0;

    for (long long k = 0; k < steps; ++k) {
      if (k % spt == 0) {
        const int j = static_cast<int>(k / spt);
        rec.times[j] = (day - 1) + static_cast<double>(j) / m;
        rec.latent[j] = x;
        rec.noisy[j] = (j > 0 && cfg.noise_sd > 0.0) ? x + cfg.noise_sd * gauss(rng_noise) : x;
      }
      const double tau = static_cast<double>(k) * dt;
      double spot = anchor + s.gamma * tau * tau * (s.omega1 + anchor) - tau * (s.omega2 + anchor) +
                    s.alpha * iv + s.beta * jv + s.nu * (1.0 - tau) * z * z;
      if (spot < var_floor) {
        spot = var_floor;
        ++floored;
      }
      const double xi1 = gauss(rng_path);
      const double xi2 = gauss(rng_path);
      const double dw = sqrt_dt * xi1;
      const double db = sqrt_dt * (rho * xi1 + rho_c * xi2);

      iv += spot * dt;
      x += std::sqrt(spot) * db;
      z += dw;

      const double tau_next = static_cast<double>(k + 1) * dt;
      while (next_jump < jumps.times.size() && jumps.times[next_jump] <= tau_next + 1e-15) {
        x += jumps.sizes[next_jump];
        jv += jumps.sizes[next_jump] * jumps.sizes[next_jump];
        rec.jumps.push_back({day, jumps.times[next_jump], jumps.sizes[next_jump]});
        ++next_jump;
      }
    }

    rec.true_iv = iv;
    rec.true_jv = jv;
    sink(rec);

    anchor = omega + s.gamma * anchor + s.alpha * iv + s.beta * jv;  // integer-time update
    if (anchor < var_floor) {
      anchor = var_floor;
      ++floored;
    }
  }

  if (floored > cfg.max_floored_frac * static_cast<double>(total)) {
    throw std::runtime_error(
        "simulate: spot variance floored on " + std::to_string(floored) + " of " +
        std::to_string(total) + " substeps; parameter set incompatible with positivity");
  }
  return {floored, total};
}

SimOutput simulate(const SimConfig& cfg) {
  SimOutput out;
  out.true_iv.resize(cfg.n_days);
  out.true_jv.resize(cfg.n_days);
  out.true_h.resize(cfg.n_days);
  out.nv.resize(cfg.n_days);
  out.ticks.reserve(cfg.n_days);
  out.latent_x.reserve(cfg.n_days);

  const FloorStats stats = simulate_stream(cfg, [&](const DayRecord& rec) {
    const int i = rec.day_index - 1;
    out.true_iv[i] = rec.true_iv;
    out.true_jv[i] = rec.true_jv;
    out.true_h[i] = rec.true_h;
    out.nv[i] = rec.nv;
    TickDay day;
    day.day_index = rec.day_index;
    day.date = std::to_string(rec.day_index);
    day.times = rec.times;
    day.prices = rec.noisy;
    out.ticks.push_back(std::move(day));
    out.latent_x.push_back(rec.latent);
    out.jump_times.insert(out.jump_times.end(), rec.jumps.begin(), rec.jumps.end());
  });
  out.floored_substeps = stats.floored_substeps;
  out.total_substeps = stats.total_substeps;
  return out;
}

ArrayXd realized_D(const SimOutput& out) {
  return out.true_iv - out.true_h;
}

SimConfig benchmark_config(int n_days, int ticks_per_day, std::uint64_t seed) {
  SimConfig cfg;
  cfg.structural.omega1 = 5.816;
  cfg.structural.omega2 = 1.228;
  cfg.structural.alpha = 0.765;
  cfg.structural.beta = 0.482;
  cfg.structural.nu = 0.6;
  cfg.structural.gamma = 0.225;
  cfg.structural.rho = -0.6;
  cfg.jumps.lambda = 26.0;
  cfg.jumps.omega_L = 0.005;
  cfg.jumps.zeta2 = 1e-6;
  cfg.jumps.size_law = JumpSizeLaw::SignedNormal;
  cfg.link.a = 0.812;
  cfg.link.b = 0.072;
  cfg.link.sigma_e2 = 0.04 * 0.04;
  cfg.n_days = n_days;
  cfg.ticks_per_day = ticks_per_day;
  cfg.noise_sd = 0.005;
  cfg.x0 = 10.0;
  cfg.sigma0_sq = 1.4;
  cfg.seed = seed;
  return cfg;
}

}  // namespace rgito
