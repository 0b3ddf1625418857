#pragma once

#include <Eigen/Core>

#include "rgito/params.hpp"

namespace rgito {

using Eigen::ArrayXd;

/// Exponential-moment coefficients of the integrated-variance map:
///   rho1 = (e^a - 1)/a, rho2 = (e^a - 1 - a)/a^2, rho3 = (e^a - 1 - a - a^2/2)/a^3.
struct RhoCoeffs {
  double rho1;
  double rho2;
  double rho3;
};

/// Evaluates rho1..rho3 at alpha; switches to a 6-term Taylor series below
/// 1e-6 where the direct expressions cancel catastrophically.
RhoCoeffs rho_coefficients(double alpha);

/// Maps the continuous-time parameters to the low-frequency GARCH vector
/// theta = (omega_g, alpha_g, beta_g, gamma).
GarchParams derive_garch_params(const StructuralParams& s, const JumpParams& j);

/// E[h_n(theta)] = (omega_g + beta_g*lambda*omega_L) / (1 - alpha_g - gamma).
double stationary_h_mean(const GarchParams& theta, const JumpParams& j);

/// Recursion seed h_1(theta); same expression as stationary_h_mean.
double default_h1(const GarchParams& theta, const JumpParams& j);

/// Stationary mean of the integer-time spot variance anchor.
double stationary_spot_var_mean(const StructuralParams& s, const JumpParams& j);

/// Conditional-variance recursion
///   h_1 = h1,  h_i = omega_g + gamma*h_{i-1} + alpha_g*rv_{i-1} + beta_g*jv_{i-1}.
/// rv/jv are floored at zero before use; all outputs are strictly positive for
/// theta in the admissible box.
ArrayXd h_recursion(const GarchParams& theta, const ArrayXd& rv, const ArrayXd& jv, double h1);

}  // namespace rgito
