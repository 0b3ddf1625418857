#include "rgito/params.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rgito {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double fetch(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing parameter key: " + key);
  return it->second;
}

}  // namespace

void StructuralParams::validate() const {
  require(alpha > 0.0 && alpha < 1.0, "structural alpha must lie in (0,1)");
  require(gamma > 0.0 && gamma < 1.0, "structural gamma must lie in (0,1)");
  require(nu >= 0.0, "structural nu must be >= 0");
  require(beta >= 0.0, "structural beta must be >= 0");
  require(std::abs(rho) <= 1.0, "structural rho must lie in [-1,1]");
  require(std::isfinite(omega1) && std::isfinite(omega2), "structural omega1/omega2 must be finite");
}

void JumpParams::validate() const {
  require(lambda > 0.0, "jump lambda must be > 0");
  require(omega_L > 0.0, "jump omega_L must be > 0");
  require(zeta2 >= 0.0, "jump zeta2 must be >= 0");
  if (size_law == JumpSizeLaw::SignedNormal) {
    // Remark-1 moment matching needs eta real: zeta2 <= 2*omega_L^2.
    require(zeta2 <= 2.0 * omega_L * omega_L,
            "signed-normal jump law requires zeta2 <= 2*omega_L^2; use gauss_squared");
  }
}

void GarchParams::validate() const {
  require(omega_g > 0.0, "omega_g must be > 0");
  require(alpha_g > 0.0, "alpha_g must be > 0");
  require(beta_g > 0.0, "beta_g must be > 0");
  require(gamma > 0.0, "gamma must be > 0");
  require(alpha_g + gamma < 1.0, "alpha_g + gamma must be < 1");
}

void OptionLinkParams::validate() const {
  require(a > 0.0, "link a must be > 0");
  require(b > 0.0, "link b must be > 0");
  require(sigma_e2 > 0.0, "link sigma_e2 must be > 0");
}

void FullParams::validate() const {
  theta.validate();
  link.validate();
}

KeyValues to_kv(const StructuralParams& p) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"alpha", p.alpha},
          {"beta", p.beta},     {"nu", p.nu},         {"gamma", p.gamma},
          {"rho", p.rho}};
}

KeyValues to_kv(const JumpParams& p) {
  return {{"lambda", p.lambda}, {"omega_L", p.omega_L}, {"zeta2", p.zeta2}};
}

KeyValues to_kv(const GarchParams& p) {
  return {{"omega_g", p.omega_g}, {"alpha_g", p.alpha_g}, {"beta_g", p.beta_g}, {"gamma", p.gamma}};
}

KeyValues to_kv(const OptionLinkParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"sigma_e2", p.sigma_e2}};
}

KeyValues to_kv(const FullParams& p) {
  KeyValues kv = to_kv(p.theta);
  for (const auto& [k, v] : to_kv(p.link)) kv[k] = v;
  return kv;
}

StructuralParams structural_from_kv(const KeyValues& kv) {
  StructuralParams p;
  p.omega1 = fetch(kv, "omega1");
  p.omega2 = fetch(kv, "omega2");
  p.alpha = fetch(kv, "alpha");
  p.beta = fetch(kv, "beta");
  p.nu = fetch(kv, "nu");
  p.gamma = fetch(kv, "gamma");
  p.rho = fetch(kv, "rho");
  return p;
}

JumpParams jumps_from_kv(const KeyValues& kv) {
  JumpParams p;
  p.lambda = fetch(kv, "lambda");
  p.omega_L = fetch(kv, "omega_L");
  p.zeta2 = fetch(kv, "zeta2");
  return p;
}

GarchParams garch_from_kv(const KeyValues& kv) {
  GarchParams p;
  p.omega_g = fetch(kv, "omega_g");
  p.alpha_g = fetch(kv, "alpha_g");
  p.beta_g = fetch(kv, "beta_g");
  p.gamma = fetch(kv, "gamma");
  return p;
}

OptionLinkParams link_from_kv(const KeyValues& kv) {
  OptionLinkParams p;
  p.a = fetch(kv, "a");
  p.b = fetch(kv, "b");
  p.sigma_e2 = fetch(kv, "sigma_e2");
  return p;
}

FullParams full_from_kv(const KeyValues& kv) {
  return {garch_from_kv(kv), link_from_kv(kv)};
}

std::string kv_to_text(const KeyValues& kv) {
  std::ostringstream out;
  char buf[48];
  for (const auto& [k, v] : kv) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << k << " = " << buf << "\n";
  }
  return out.str();
}

KeyValues kv_from_text(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key");
    try {
      size_t used = 0;
      kv[key] = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad numeric value '" + val + "'");
    }
  }
  return kv;
}

}  // namespace rgito
