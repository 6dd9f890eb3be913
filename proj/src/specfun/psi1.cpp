#include <cmath>
#include <string>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

namespace {

constexpr int kMaxTerms = 15;
constexpr double kPsi1LiftTo = 20.0;
constexpr int kPsi1Terms = 8;

// coeff[j][m][t] = B_{2m}/(2m)! * C(j,t) * t! * s(2m, t+1), j in {0,1}.
struct AsymptoticCoefficients {
  double c[2][kMaxTerms + 1][2] = {};
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients table = [] {
    AsymptoticCoefficients a;
    for (int m = 1; m <= kMaxTerms; ++m) {
      BigInt fact = 1;
      for (int i = 2; i <= 2 * m; ++i) fact *= i;
      const BigRational b = bernoulli_even(m) / BigRational(fact);
      for (int j = 0; j <= 1; ++j) {
        for (int t = 0; t <= j; ++t) {
          // C(j,t) t! is 1 for every (j,t) with j <= 1.
          a.c[j][m][t] = static_cast<double>(b * BigRational(stirling_first(2 * m, t + 1)));
        }
      }
    }
    return a;
  }();
  return table;
}

double asymptotic_term(int j, int m, double x, double L) {
  const auto& c = coefficients().c[j];
  double poly = 0.0;
  for (int t = 0; t <= j; ++t) poly += c[m][t] * std::pow(L, j - t);
  return poly * std::pow(x, -2.0 * m);
}

}  // namespace

double generalized_digamma_asymptotic(int j, double x, int terms) {
  if (j < 0 || j > 1) throw RangeError("generalized_digamma_asymptotic: only j = 0 and j = 1 are tabulated");
  if (terms < 0 || terms > kMaxTerms) throw RangeError("generalized_digamma_asymptotic: terms must be in [0, 15]");
  require_positive(x, "generalized_digamma_asymptotic");
  const double L = std::log(x);
  double sum = std::pow(L, j + 1) / (j + 1) - std::pow(L, j) / (2.0 * x);
  for (int m = 1; m <= terms; ++m) sum += asymptotic_term(j, m, x, L);
  return sum;
}

namespace detail {

RealResult psi1_core(double x) {
  if (!(x > 0.0)) throw PoleError("psi1: argument must be > 0");
  double shift = 0.0;
  double shift_abs = 0.0;
  while (x < kPsi1LiftTo) {
    const double term = std::log(x) / x;
    shift += term;
    shift_abs += std::abs(term);
    x += 1.0;
  }
  const double L = std::log(x);
  const double asym = generalized_digamma_asymptotic(1, x, kPsi1Terms);
  const double value = asym - shift;
  const double omitted = std::abs(asymptotic_term(1, kPsi1Terms + 1, x, L));
  const double err = 2.0 * omitted + 8.0 * kEps * (L * L + shift_abs + std::abs(value));
  return {value, err};
}

}  // namespace detail

RealResult psi1(double x, const PrecisionBudget& budget) {
  budget.validate();
  if (!(x > 0.0) || !std::isfinite(x)) throw PoleError("psi1: argument must be > 0");
  const RealResult r = detail::psi1_core(x);
  if (r.error_estimate > budget.target_abs_tol * std::max(1.0, std::abs(r.value)))
    throw BudgetExceeded("psi1: tolerance unreachable");
  return r;
}

}  // namespace herglotz::specfun
