#include <cmath>
#include <string>
#include <vector>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

namespace {

constexpr int kMaxEtaTerms = 380;  // (3+sqrt 8)^n stays below double overflow
const double kLogBorweinRate = std::log(3.0 + std::sqrt(8.0));

// 1 - d_k/d_n for Borwein's Algorithm 2, k = 0..n-1.
std::vector<double> borwein_weights(int n) {
  std::vector<double> partial(n + 1);
  double a = 1.0 / n;  // (n-1)!/n!
  double acc = a;
  partial[0] = acc;
  for (int i = 1; i <= n; ++i) {
    a *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += a;
    partial[i] = acc;
  }
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = 1.0 - partial[k] / partial[n];
  return w;
}

int terms_needed(double sigma, double t, double log_inv_denom, double tol) {
  const double base = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * kPi * t + log_inv_denom + std::log(4.0 / tol);
  const double growth = std::max(0.0, 0.5 - sigma);
  int n = static_cast<int>(std::ceil(base / kLogBorweinRate));
  for (int it = 0; it < 3; ++it)
    n = static_cast<int>(std::ceil((base + growth * std::log(n + 1.0)) / kLogBorweinRate));
  return std::max(n, 4);
}

ComplexResult zeta_upper(complex w, double tol) {
  const double sigma = w.real();
  const double t = w.imag();
  const complex denom = 1.0 - std::exp((1.0 - w) * kLog2);
  const double denom_abs = std::abs(denom);
  const int n = terms_needed(sigma, t, -std::log(denom_abs), tol);
  if (n > kMaxEtaTerms)
    throw BudgetExceeded("riemann_zeta: " + std::to_string(n) + " eta terms needed at Im w = " + std::to_string(t));

  const std::vector<double> weight = borwein_weights(n);
  complex eta{};
  double magnitude = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double lk = std::log(k + 1.0);
    const complex term = weight[k] * std::exp(-w * lk);
    eta += (k % 2 == 0) ? term : -term;
    magnitude += weight[k] * std::exp(-sigma * lk);
  }
  const complex value = eta / denom;
  const double truncation = 3.0 * (1.0 + 2.0 * t) * std::exp(0.5 * kPi * t - n * kLogBorweinRate) *
                            std::pow(n + 1.0, std::max(0.0, 0.5 - sigma)) / denom_abs;
  const double roundoff = 8.0 * kEps * (magnitude / denom_abs + std::abs(value));
  return {value, truncation + roundoff};
}

}  // namespace

namespace detail {

ComplexResult zeta_core(complex w, double tol) {
  if (std::abs(w - 1.0) < 1e-10) throw PoleError("riemann_zeta: pole at w = 1");
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("riemann_zeta: non-finite argument");
  if (w.imag() < 0.0) {
    ComplexResult r = zeta_upper(std::conj(w), tol);
    r.value = std::conj(r.value);
    return r;
  }
  return zeta_upper(w, tol);
}

}  // namespace detail

ComplexResult riemann_zeta(complex w, const PrecisionBudget& budget) {
  budget.validate();
  ComplexResult r = detail::zeta_core(w, budget.target_abs_tol);
  if (r.error_estimate > budget.target_abs_tol * std::max(1.0, std::abs(r.value)))
    throw BudgetExceeded("riemann_zeta: tolerance unreachable");
  return r;
}

RealResult riemann_zeta(double s, const PrecisionBudget& budget) {
  const ComplexResult r = riemann_zeta(complex(s, 0.0), budget);
  return {r.value.real(), r.error_estimate};
}

}  // namespace herglotz::specfun
