#include "rgito/model_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rgito {

RhoCoeffs rho_coefficients(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("rho_coefficients: alpha must lie in (0,1), got " + std::to_string(alpha));
  if (alpha < 1e-6) {
    // rho_k = sum_{j>=0} alpha^j / (k+j)! * k!/..., written out to 6 terms:
    // rho1 = 1 + a/2 + a^2/6 + a^3/24 + a^4/120 + a^5/720
    // rho2 = 1/2 + a/6 + a^2/24 + a^3/120 + a^4/720 + a^5/5040
    // rho3 = 1/6 + a/24 + a^2/120 + a^3/720 + a^4/5040 + a^5/40320
    const double a = alpha;
    const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
    return {1.0 + a / 2 + a2 / 6 + a3 / 24 + a4 / 120 + a5 / 720,
            0.5 + a / 6 + a2 / 24 + a3 / 120 + a4 / 720 + a5 / 5040,
            1.0 / 6 + a / 24 + a2 / 120 + a3 / 720 + a4 / 5040 + a5 / 40320};
  }
  const double ea = std::exp(alpha);
  const double a2 = alpha * alpha;
  return {(ea - 1.0) / alpha,
          (ea - 1.0 - alpha) / a2,
          (ea - 1.0 - alpha - a2 / 2.0) / (a2 * alpha)};
}

GarchParams derive_garch_params(const StructuralParams& s, const JumpParams& j) {
  s.validate();
  j.validate();
  const auto [r1, r2, r3] = rho_coefficients(s.alpha);
  const double g = s.gamma;
  GarchParams theta;
  theta.omega_g = g * (r1 - r2 + 2.0 * r3) * s.omega1
                - (r1 - g * r2 + 2.0 * g * r3) * s.omega2
                + (1.0 - g) * ((r2 - 2.0 * r3) * s.nu + r2 * s.beta * j.lambda * j.omega_L);
  const double load = r1 - r2 + 2.0 * g * r3;
  theta.alpha_g = load * s.alpha;
  theta.beta_g = load * s.beta;
  theta.gamma = g;
  return theta;
}

double stationary_h_mean(const GarchParams& theta, const JumpParams& j) {
  const double denom = 1.0 - theta.alpha_g - theta.gamma;
  if (!(denom > 0.0))
    throw std::domain_error("stationary_h_mean: alpha_g + gamma must be < 1");
  return (theta.omega_g + theta.beta_g * j.lambda * j.omega_L) / denom;
}

double default_h1(const GarchParams& theta, const JumpParams& j) {
  return stationary_h_mean(theta, j);
}

double stationary_spot_var_mean(const StructuralParams& s, const JumpParams& j) {
  const GarchParams theta = derive_garch_params(s, j);
  const double denom = 1.0 - theta.alpha_g - theta.gamma;
  if (!(denom > 0.0))
    throw std::domain_error("stationary_spot_var_mean: alpha_g + gamma must be < 1");
  const double omega = s.gamma * s.omega1 - s.omega2;
  const double jump_flow = j.lambda * j.omega_L;
  return ((omega + s.beta * jump_flow) * denom + s.alpha * (theta.omega_g + theta.beta_g * jump_flow))
         / (denom * (1.0 - s.gamma));
}

ArrayXd h_recursion(const GarchParams& theta, const ArrayXd& rv, const ArrayXd& jv, double h1) {
  if (rv.size() != jv.size())
    throw std::invalid_argument("h_recursion: rv has " + std::to_string(rv.size()) +
                                " entries but jv has " + std::to_string(jv.size()));
  if (rv.size() < 1) throw std::invalid_argument("h_recursion: need at least one observation");
  if (!(h1 > 0.0)) throw std::invalid_argument("h_recursion: h1 must be > 0");

  const Eigen::Index n = rv.size();
  ArrayXd h(n);
  h[0] = h1;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double rv_prev = std::max(rv[i - 1], 0.0);
    const double jv_prev = std::max(jv[i - 1], 0.0);
    h[i] = theta.omega_g + theta.gamma * h[i - 1] + theta.alpha_g * rv_prev + theta.beta_g * jv_prev;
  }
  return h;
}

}  // namespace rgito
