#include <doctest.h>

#include <cmath>
#include <random>

#include "rgito/model_core.hpp"

using namespace rgito;

namespace {

StructuralParams benchmark_structural() {
  StructuralParams s;
  s.omega1 = 5.816;
  s.omega2 = 1.228;
  s.alpha = 0.765;
  s.beta = 0.482;
  s.nu = 0.6;
  s.gamma = 0.225;
  s.rho = -0.6;
  return s;
}

JumpParams benchmark_jumps() {
  JumpParams j;
  j.lambda = 26.0;
  j.omega_L = 0.005;
  j.zeta2 = 1e-6;
  return j;
}

// Reference evaluation of the recursion in its unrolled-sum form.
double h_by_displayed_sum(const GarchParams& t, const ArrayXd& rv, const ArrayXd& jv,
                          double h1, int i) {
  if (i == 1) return h1;
  double acc = 0.0;
  for (int l = 1; l <= i - 1; ++l)
    acc += std::pow(t.gamma, l - 1) *
           (t.omega_g + t.alpha_g * rv[i - l - 1] + t.beta_g * jv[i - l - 1]);
  return acc + std::pow(t.gamma, i - 1) * h1;
}

}  // namespace

TEST_CASE("derive_garch_params reproduces the benchmark target theta") {
  const GarchParams t = derive_garch_params(benchmark_structural(), benchmark_jumps());
  CHECK(std::abs(t.omega_g - 0.0122) < 5e-4);
  CHECK(std::abs(t.alpha_g - 0.717) < 5e-4);
  CHECK(std::abs(t.beta_g - 0.452) < 5e-4);
  CHECK(t.gamma == 0.225);
}

TEST_CASE("rho coefficients approach 1, 1/2, 1/6 as alpha -> 0") {
  const auto r = rho_coefficients(1e-9);
  CHECK(std::abs(r.rho1 - 1.0) < 1e-8);
  CHECK(std::abs(r.rho2 - 0.5) < 1e-8);
  CHECK(std::abs(r.rho3 - 1.0 / 6.0) < 1e-8);

  // Series and direct branches agree near the switch point.
  const auto lo = rho_coefficients(0.9999e-6);
  const auto hi = rho_coefficients(1.0001e-6);
  CHECK(std::abs(lo.rho1 - hi.rho1) < 1e-12);
  CHECK(std::abs(lo.rho2 - hi.rho2) < 1e-12);
  CHECK(std::abs(lo.rho3 - hi.rho3) < 1e-12);
}

TEST_CASE("derive_garch_params rejects alpha outside (0,1)") {
  StructuralParams s = benchmark_structural();
  s.alpha = 0.0;
  CHECK_THROWS(derive_garch_params(s, benchmark_jumps()));
  s.alpha = 1.0;
  CHECK_THROWS(derive_garch_params(s, benchmark_jumps()));
}

TEST_CASE("beta = nu = 0 reduces omega_g to the two-term expression") {
  // Frozen by 40-digit reference evaluation of the mapping at
  // omega1=2, omega2=0.5, alpha=0.3, gamma=0.4.
  StructuralParams s;
  s.omega1 = 2.0;
  s.omega2 = 0.5;
  s.alpha = 0.3;
  s.beta = 0.0;
  s.nu = 0.0;
  s.gamma = 0.4;
  s.rho = 0.0;
  JumpParams j;
  j.lambda = 7.0;
  j.omega_L = 0.123;
  j.zeta2 = 0.0;
  const GarchParams t = derive_garch_params(s, j);
  CHECK(t.beta_g == 0.0);
  CHECK(t.omega_g == doctest::Approx(0.23341376044723148).epsilon(1e-14));
  CHECK(t.alpha_g == doctest::Approx(0.22685218299824257).epsilon(1e-14));
}

TEST_CASE("stationary_h_mean") {
  SUBCASE("rounded benchmark theta") {
    GarchParams t{0.0122, 0.717, 0.452, 0.225};
    CHECK(std::abs(stationary_h_mean(t, benchmark_jumps()) - 1.2234) < 1e-3);
  }
  SUBCASE("linear formula") {
    GarchParams t{0.2, 0.3, 0.0, 0.2};
    JumpParams j;
    j.lambda = 5.0;
    j.omega_L = 1.0;
    t.beta_g = 0.0;
    CHECK(stationary_h_mean(t, j) == doctest::Approx(0.4).epsilon(1e-14));
  }
  SUBCASE("lambda = 0 drops the jump flow") {
    GarchParams t{0.3, 0.25, 0.7, 0.35};
    JumpParams j;
    j.lambda = 0.0;
    j.omega_L = 0.9;
    CHECK(stationary_h_mean(t, j) ==
          doctest::Approx(t.omega_g / (1.0 - t.alpha_g - t.gamma)).epsilon(1e-14));
  }
  SUBCASE("domain error at alpha_g + gamma >= 1") {
    GarchParams t{0.1, 0.6, 0.1, 0.4};
    CHECK_THROWS_AS(stationary_h_mean(t, benchmark_jumps()), std::domain_error);
  }
  SUBCASE("default_h1 aliases stationary_h_mean") {
    GarchParams t{0.0122, 0.717, 0.452, 0.225};
    CHECK(default_h1(t, benchmark_jumps()) == stationary_h_mean(t, benchmark_jumps()));
  }
}

TEST_CASE("stationary_spot_var_mean at the benchmark design is close to 1.4") {
  CHECK(std::abs(stationary_spot_var_mean(benchmark_structural(), benchmark_jumps()) - 1.4) < 1e-2);
}

TEST_CASE("h_recursion hand case") {
  GarchParams t{0.1, 0.5, 0.2, 0.3};
  ArrayXd rv(3), jv(3);
  rv << 1.0, 2.0, 1.5;
  jv << 0.1, 0.0, 0.0;
  const ArrayXd h = h_recursion(t, rv, jv, 1.0);
  CHECK(h[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h[1] == doctest::Approx(0.92).epsilon(1e-15));
  CHECK(h[2] == doctest::Approx(1.376).epsilon(1e-15));
}

TEST_CASE("h_recursion with gamma = 0 has no memory") {
  GarchParams t{0.1, 0.5, 0.2, 0.0};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  ArrayXd rv(20), jv(20);
  for (int i = 0; i < 20; ++i) {
    rv[i] = u(rng);
    jv[i] = 0.1 * u(rng);
  }
  const ArrayXd h = h_recursion(t, rv, jv, 3.0);
  for (int i = 1; i < 20; ++i)
    CHECK(h[i] == doctest::Approx(0.1 + 0.5 * rv[i - 1] + 0.2 * jv[i - 1]).epsilon(1e-14));
}

TEST_CASE("h_recursion dimension mismatch") {
  GarchParams t{0.1, 0.5, 0.2, 0.3};
  CHECK_THROWS(h_recursion(t, ArrayXd::Ones(3), ArrayXd::Ones(4), 1.0));
}

TEST_CASE("initial-condition forgetting identity holds to machine precision") {
  GarchParams t{0.05, 0.4, 0.3, 0.45};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  const int n = 120;
  ArrayXd rv(n), jv(n);
  for (int i = 0; i < n; ++i) {
    rv[i] = u(rng);
    jv[i] = 0.2 * u(rng);
  }
  const double h1 = 1.7, h1p = 0.4;
  const ArrayXd a = h_recursion(t, rv, jv, h1);
  const ArrayXd b = h_recursion(t, rv, jv, h1p);
  for (int i = 0; i < n; ++i) {
    const double expected = std::pow(t.gamma, i) * std::abs(h1 - h1p);
    CHECK(std::abs(std::abs(a[i] - b[i]) - expected) <= 1e-13 * std::max(1.0, a[i]));
  }
}

TEST_CASE("one-step form matches the displayed-sum form on random inputs") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    GarchParams t;
    t.omega_g = 0.01 + u(rng);
    t.gamma = 0.05 + 0.9 * u(rng);
    t.alpha_g = (1.0 - t.gamma) * 0.9 * u(rng) + 1e-4;
    t.beta_g = u(rng);
    const int n = 2 + static_cast<int>(u(rng) * 198);
    ArrayXd rv(n), jv(n);
    for (int i = 0; i < n; ++i) {
      rv[i] = 3.0 * u(rng);
      jv[i] = 0.5 * u(rng);
    }
    const double h1 = 0.1 + 2.0 * u(rng);
    const ArrayXd h = h_recursion(t, rv, jv, h1);
    for (int i : {1, n / 2, n}) {
      const double ref = h_by_displayed_sum(t, rv, jv, h1, i);
      CHECK(std::abs(h[i - 1] - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
    CHECK((h > 0.0).all());
  }
}

TEST_CASE("stationary_h_mean is the fixed point of the recursion") {
  const GarchParams t = derive_garch_params(benchmark_structural(), benchmark_jumps());
  const JumpParams j = benchmark_jumps();
  const double hstar = stationary_h_mean(t, j);
  const int n = 50;
  const ArrayXd rv = ArrayXd::Constant(n, hstar);          // E[RV] = E[h]
  const ArrayXd jv = ArrayXd::Constant(n, j.lambda * j.omega_L);
  const ArrayXd h = h_recursion(t, rv, jv, hstar);
  for (int i = 0; i < n; ++i) CHECK(h[i] == doctest::Approx(hstar).epsilon(1e-12));
}

TEST_CASE("parameter vectors round-trip through flat key-value text") {
  const StructuralParams s = benchmark_structural();
  const auto kv = kv_from_text(kv_to_text(to_kv(s)));
  const StructuralParams s2 = structural_from_kv(kv);
  CHECK(s2.omega1 == s.omega1);
  CHECK(s2.rho == s.rho);

  FullParams f;
  f.theta = {0.0122, 0.717, 0.452, 0.225};
  f.link = {0.812, 0.072, 0.0016};
  const FullParams f2 = full_from_kv(kv_from_text(kv_to_text(to_kv(f))));
  CHECK(f2.theta.alpha_g == f.theta.alpha_g);
  CHECK(f2.link.sigma_e2 == f.link.sigma_e2);

  CHECK_THROWS(garch_from_kv(KeyValues{{"omega_g", 1.0}}));  // missing keys
  CHECK_THROWS(kv_from_text("alpha = not_a_number\n"));
}
