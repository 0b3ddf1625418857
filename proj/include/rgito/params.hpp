#pragma once

#include <map>
#include <string>

namespace rgito {

/// Continuous-time model parameters of the volatility dynamics plus the
/// leverage correlation between the volatility and price Brownian motions.
struct StructuralParams {
  double omega1 = 0.0;  // quadratic intraday level
  double omega2 = 0.0;  // linear intraday level
  double alpha = 0.0;   // integrated-variance loading, in (0,1)
  double beta = 0.0;    // squared-jump loading, >= 0
  double nu = 0.0;      // diffusive-innovation loading, >= 0
  double gamma = 0.0;   // daily persistence, in (0,1)
  double rho = 0.0;     // corr(dW, dB), in [-1,1]

  void validate() const;
};

enum class JumpSizeLaw {
  SignedNormal,  // |L| ~ N(delta, sqrt(eta)), random sign, omega_L = delta^2 + eta
  GaussSquared,  // L^2 = omega_L + N(0, zeta2), random sign
};

/// Compound-Poisson jump component: intensity, mean squared size, and the
/// variance of M_t = L_t^2 - omega_L.
struct JumpParams {
  double lambda = 0.0;
  double omega_L = 0.0;
  double zeta2 = 0.0;
  JumpSizeLaw size_law = JumpSizeLaw::SignedNormal;

  void validate() const;
};

/// Low-frequency GARCH parameter vector theta = (omega_g, alpha_g, beta_g, gamma).
struct GarchParams {
  double omega_g = 0.0;
  double alpha_g = 0.0;
  double beta_g = 0.0;
  double gamma = 0.0;

  void validate() const;
};

/// Linear link between the option-based variance estimate and the conditional
/// daily variance: NV_{i-1} = b + a h_i + e_i, Var(e_i) = sigma_e2.
struct OptionLinkParams {
  double a = 0.0;
  double b = 0.0;
  double sigma_e2 = 0.0;

  void validate() const;
};

struct FullParams {
  GarchParams theta;
  OptionLinkParams link;

  void validate() const;
};

// Flat key-value serialization. Keys are exactly:
//   omega1 omega2 alpha beta nu gamma rho      (StructuralParams)
//   lambda omega_L zeta2                       (JumpParams)
//   omega_g alpha_g beta_g gamma               (GarchParams)
//   a b sigma_e2                               (OptionLinkParams)
using KeyValues = std::map<std::string, double>;

KeyValues to_kv(const StructuralParams& p);
KeyValues to_kv(const JumpParams& p);
KeyValues to_kv(const GarchParams& p);
KeyValues to_kv(const OptionLinkParams& p);
KeyValues to_kv(const FullParams& p);

StructuralParams structural_from_kv(const KeyValues& kv);
JumpParams jumps_from_kv(const KeyValues& kv);
GarchParams garch_from_kv(const KeyValues& kv);
OptionLinkParams link_from_kv(const KeyValues& kv);
FullParams full_from_kv(const KeyValues& kv);

std::string kv_to_text(const KeyValues& kv);
KeyValues kv_from_text(const std::string& text);

}  // namespace rgito
