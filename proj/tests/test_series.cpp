#include <cmath>

#include "doctest.h"
#include "herglotz/series.hpp"
#include "herglotz/specfun.hpp"
#include "oracles.hpp"

using namespace herglotz;
using namespace herglotz::series;

namespace {

// phi0 straight from its definition, no asymptotic switch.
double phi0_def(double x) { return specfun::digamma(x).value + 0.5 / x - std::log(x); }

// S0 by direct summation to M, plus the tail of the leading term -1/(12 t^2).
double S0_brute(double x, std::int64_t M) {
  oracle::Sum s;
  for (std::int64_t n = M; n >= 1; --n) s.add(phi0_def(static_cast<double>(n) * x));
  const double L = static_cast<double>(M) * x;
  // sum_{n>M} g(nx) ~ (1/x) int_L^inf g - g(L)/2 with g(t) = -1/(12 t^2)
  const double tail = -1.0 / (12.0 * x * L) + 1.0 / (24.0 * L * L);
  return s.value() + tail;
}

bool close(const RealResult& r, double ref, double tol) { return std::abs(r.value - ref) <= tol; }

}  // namespace

TEST_CASE("phi0 is continuous across the asymptotic switch") {
  for (double x : {11.5, 11.999, 12.0, 12.001, 13.0, 40.0}) {
    CAPTURE(x);
    CHECK(std::abs(phi0(x).value - phi0_def(x)) <= 1e-15);
  }
  CHECK(close(phi0(10.0), -0.00083250392732457637054, 1e-15));
}

TEST_CASE("phi1 matches the defining series") {
  for (double x : {0.5, 3.0, 19.9, 20.0, 25.0}) {
    const double ref = oracle::psi1_slow(x) + std::log(x) / (2 * x) - std::log(x) * std::log(x) / 2;
    CAPTURE(x);
    CHECK(std::abs(phi1(x).value - ref) <= 1e-9);
  }
  CHECK(close(phi1(20.0), -0.00041571705948505760439, 1e-15));
}

TEST_CASE("S0 against brute force") {
  CHECK(std::abs(sum_phi0(1.0).value - S0_brute(1.0, 200'000)) <= 1e-12);
  CHECK(std::abs(sum_phi0(2.5).value - S0_brute(2.5, 100'000)) <= 1e-12);
}

TEST_CASE("frozen reference values") {
  CHECK(close(sum_phi0(1.0), -0.13033070075390631148, 1e-12));
  CHECK(close(sum_phi0(0.25), -1.6088760447112999305, 1e-12));
  CHECK(close(sum_phi1(1.0), 0.047831772007781321394, 1e-12));
  CHECK(close(sum_phi1(2.0), -0.0095453613090425466472, 1e-12));
  CHECK(close(sum_phi0_logn(1.0), -0.077596990273037304803, 1e-12));
  CHECK(close(sum_phi0_logn(2.0), -0.01949711810628303408, 1e-12));
  CHECK(close(herglotz_F(2.0), -0.43578713592609440587, 1e-12));
  CHECK(close(herglotz_F(0.5), -1.9789336902275097611, 1e-12));
}

TEST_CASE("error estimates bound the frozen error") {
  const RealResult s = sum_phi0(1.0, 1e-8);
  CHECK(s.error_estimate <= 1e-8);
  CHECK(std::abs(s.value + 0.13033070075390631148) <= s.error_estimate + 1e-15);
}

TEST_CASE("doubling the cutoff stays within the estimate") {
  for (double x : {0.1, 0.5, 1.0, 3.0}) {
    const SeriesPlan p = plan_for(x, 1e-12);
    CHECK(p.cutoff_N >= static_cast<std::int64_t>(std::ceil(12 / x)));
    CHECK(p.tail_error <= 0.5e-12);
    SeriesPlan q = p;
    q.cutoff_N *= 2;
    const RealResult a = sum_phi0(x, p), b = sum_phi0(x, q);
    CAPTURE(x);
    CHECK(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate);
    const RealResult c = sum_phi1(x, p), d = sum_phi1(x, q);
    CHECK(std::abs(c.value - d.value) <= c.error_estimate + d.error_estimate);
    const RealResult e = sum_phi0_logn(x, p), f = sum_phi0_logn(x, q);
    CHECK(std::abs(e.value - f.value) <= e.error_estimate + f.error_estimate);
  }
}

TEST_CASE("log-weighted sums decompose") {
  for (double x : {0.3, 1.0, 4.0}) {
    const double T = sum_phi0_logn(x, 1e-10).value;
    const double S = sum_phi0(x, 1e-10).value;
    CHECK(std::abs(sum_phi0_lognx(x, 1e-10).value - (T + std::log(x) * S)) <= 1e-13);
    CHECK(std::abs(phi_log(x, 1e-10).value - (T + std::log(x) / 2 * S)) <= 1e-13);
  }
}

TEST_CASE("F at 1 has a closed form") {
  const double g = oracle::kEulerGamma, pi = oracle::kPi;
  const double ref = -g * g / 2 - pi * pi / 12 - oracle::kStieltjesGamma1;
  CHECK(std::abs(ref - (-0.91624014984429583)) <= 1e-15);
  CHECK(std::abs(herglotz_F(1.0).value - ref) <= 1e-12);
}

TEST_CASE("two-term and three-term relations for F") {
  const double pi = oracle::kPi;
  const double F1 = herglotz_F(1.0).value;
  for (double x : {0.5, 2.0, 3.0, 7.0}) {
    const double l = std::log(x);
    const double rhs = 2 * F1 + l * l / 2 - pi * pi / 6 * (x + 1 / x - 2);
    CAPTURE(x);
    CHECK(std::abs(herglotz_F(x).value + herglotz_F(1 / x).value - rhs) <= 1e-10);
  }
  for (double x : {0.5, 1.0, 2.0}) {
    const double lhs = herglotz_F(x).value - herglotz_F(x + 1).value - herglotz_F(x / (x + 1)).value;
    const double rhs = -F1 + specfun::dilog(1 / (1 + x)).value;
    CAPTURE(x);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("sums decay like their leading tail") {
  // S0(x) ~ -zeta(2)/(12 x^2) for large x
  const double z2 = oracle::kPi * oracle::kPi / 6;
  for (double x : {50.0, 200.0}) CHECK(std::abs(sum_phi0(x).value * 12 * x * x / -z2 - 1) <= 1e-3);
}

TEST_CASE("domain and budget refusals") {
  // Rounding in the long direct sum alone exceeds 1e-12 here.
  CHECK_THROWS_AS(phi_log(0.3, 1e-12), BudgetExceeded);
  CHECK_THROWS_AS(herglotz_F(0.04), BudgetExceeded);
  CHECK_NOTHROW(herglotz_F(kMinHerglotzArgument));
  CHECK_THROWS_AS(sum_phi0(0.0), PoleError);
  CHECK_THROWS_AS(sum_phi0(-1.0), PoleError);
  CHECK_THROWS_AS(sum_phi0(std::nan("")), DomainError);
  CHECK_THROWS_AS(sum_phi0(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(plan_for(1e-6, 1e-12, 1000), BudgetExceeded);
}
