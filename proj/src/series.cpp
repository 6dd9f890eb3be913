#include "herglotz/series.hpp"

#include <cmath>
#include <string>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::series {

namespace {

using specfun::bernoulli_even_table;

constexpr double kPhi0AsymptoticFrom = 12.0;
constexpr double kPhi1AsymptoticFrom = 20.0;

// H_{2m-1}
double odd_harmonic(int m) {
  double h = 0.0;
  for (int k = 1; k <= 2 * m - 1; ++k) h += 1.0 / k;
  return h;
}

// B_{2m}/(2m)
double bernoulli_ratio(int m) { return bernoulli_even_table()[m] / (2.0 * m); }

void check_argument(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
  if (!(x > 0.0)) throw PoleError(std::string(what) + ": argument must be > 0");
}

void check_budget(const RealResult& r, double tol, const char* what) {
  if (!(r.error_estimate <= tol * std::max(1.0, std::abs(r.value))))
    throw BudgetExceeded(std::string(what) + ": tolerance unreachable");
}

double hurwitz_value(double s, std::int64_t N, double& err) {
  const RealResult h = specfun::hurwitz_zeta(s, static_cast<double>(N + 1));
  err += h.error_estimate;
  return h.value;
}

double log_tail_value(int m, std::int64_t N, double& err) {
  const RealResult h = specfun::log_tail_sum(m, N);
  err += h.error_estimate;
  return h.value;
}

// Sum in reverse so the small late terms are added first.
template <class Term>
RealResult direct_sum(std::int64_t N, Term term) {
  double sum = 0.0;
  double err = 0.0;
  double mag = 0.0;
  for (std::int64_t n = N; n >= 1; --n) {
    const RealResult t = term(n);
    sum += t.value;
    err += t.error_estimate;
    mag += std::abs(t.value);
  }
  return {sum, err + 2.0 * kEps * mag};
}

double omitted_tail_bound(double x, std::int64_t N, int M) {
  const int m = M + 1;
  const double zeta = specfun::hurwitz_zeta(2.0 * m, static_cast<double>(N + 1)).value;
  const double logs = 1.0 + std::abs(std::log(x)) + std::log(static_cast<double>(N + 1)) + odd_harmonic(m);
  return std::abs(bernoulli_ratio(m)) * std::pow(x, -2.0 * m) * zeta * logs;
}

}  // namespace

RealResult phi0(double x) {
  check_argument(x, "phi0");
  if (x >= kPhi0AsymptoticFrom) {
    const double w2 = 1.0 / (x * x);
    double p = w2;
    double sum = 0.0;
    double omitted = 0.0;
    for (int m = 1; m <= 30; ++m) {
      const double term = -bernoulli_ratio(m) * p;
      omitted = std::abs(term);
      if (omitted <= 0.1 * kEps * std::abs(sum)) break;
      sum += term;
      p *= w2;
    }
    return {sum, omitted + kEps * std::abs(sum)};
  }
  const RealResult psi = specfun::detail::digamma_real(x);
  const double lx = std::log(x);
  const double inv = 0.5 / x;
  const double value = psi.value + inv - lx;
  return {value, psi.error_estimate + 4.0 * kEps * (std::abs(psi.value) + std::abs(lx) + inv)};
}

RealResult phi1(double x) {
  check_argument(x, "phi1");
  const double L = std::log(x);
  if (x >= kPhi1AsymptoticFrom) {
    // The log^2 and log/x terms of the psi_1 expansion cancel symbolically.
    const double w2 = 1.0 / (x * x);
    double p = w2;
    double sum = 0.0;
    double omitted = 0.0;
    for (int m = 1; m <= 30; ++m) {
      const double term = -bernoulli_ratio(m) * (L - odd_harmonic(m)) * p;
      omitted = std::abs(term);
      if (omitted <= 0.1 * kEps * std::abs(sum)) break;
      sum += term;
      p *= w2;
    }
    return {sum, omitted + kEps * std::abs(sum)};
  }
  const RealResult psi = specfun::detail::psi1_core(x);
  const double a = 0.5 * L / x;
  const double b = 0.5 * L * L;
  const double value = psi.value + a - b;
  return {value, psi.error_estimate + 4.0 * kEps * (std::abs(psi.value) + std::abs(a) + b)};
}

SeriesPlan plan_for(double x, double tol, std::int64_t max_terms) {
  check_argument(x, "plan_for");
  require_tolerance(tol, "plan_for");
  SeriesPlan plan;
  const double start = std::ceil(kPhi0AsymptoticFrom / x);
  if (start > static_cast<double>(max_terms)) throw BudgetExceeded("plan_for: cutoff exceeds term cap");
  plan.cutoff_N = std::max<std::int64_t>(1, static_cast<std::int64_t>(start));
  plan.tail_error = omitted_tail_bound(x, plan.cutoff_N, plan.tail_order_M);
  while (plan.tail_error > 0.5 * tol) {
    plan.cutoff_N *= 2;
    if (plan.cutoff_N > max_terms) throw BudgetExceeded("plan_for: cutoff exceeds term cap");
    plan.tail_error = omitted_tail_bound(x, plan.cutoff_N, plan.tail_order_M);
  }
  return plan;
}

RealResult sum_phi0(double x, const SeriesPlan& plan) {
  check_argument(x, "sum_phi0");
  const std::int64_t N = plan.cutoff_N;
  const RealResult head = direct_sum(N, [x](std::int64_t n) { return phi0(static_cast<double>(n) * x); });
  double err = head.error_estimate;
  double tail = 0.0;
  for (int m = 1; m <= plan.tail_order_M; ++m)
    tail -= bernoulli_ratio(m) * std::pow(x, -2.0 * m) * hurwitz_value(2.0 * m, N, err);
  const int o = plan.tail_order_M + 1;
  err += std::abs(bernoulli_ratio(o)) * std::pow(x, -2.0 * o) * specfun::hurwitz_zeta(2.0 * o, N + 1.0).value;
  const double value = head.value + tail;
  return {value, err + 2.0 * kEps * std::abs(value)};
}

RealResult sum_phi1(double x, const SeriesPlan& plan) {
  check_argument(x, "sum_phi1");
  const std::int64_t N = plan.cutoff_N;
  const double lx = std::log(x);
  const RealResult head = direct_sum(N, [x](std::int64_t n) { return phi1(static_cast<double>(n) * x); });
  double err = head.error_estimate;
  double tail = 0.0;
  for (int m = 1; m <= plan.tail_order_M; ++m) {
    const double lt = log_tail_value(2 * m, N, err);
    const double hz = hurwitz_value(2.0 * m, N, err);
    tail -= bernoulli_ratio(m) * std::pow(x, -2.0 * m) * (lt + (lx - odd_harmonic(m)) * hz);
  }
  const int o = plan.tail_order_M + 1;
  const double lt = specfun::log_tail_sum(2 * o, N).value;
  const double hz = specfun::hurwitz_zeta(2.0 * o, N + 1.0).value;
  err += std::abs(bernoulli_ratio(o)) * std::pow(x, -2.0 * o) * (lt + std::abs(lx - odd_harmonic(o)) * hz);
  const double value = head.value + tail;
  return {value, err + 2.0 * kEps * std::abs(value)};
}

RealResult sum_phi0_logn(double x, const SeriesPlan& plan) {
  check_argument(x, "sum_phi0_logn");
  const std::int64_t N = plan.cutoff_N;
  const RealResult head = direct_sum(N, [x](std::int64_t n) {
    const RealResult p = phi0(static_cast<double>(n) * x);
    const double l = std::log(static_cast<double>(n));
    return RealResult{p.value * l, p.error_estimate * l};
  });
  double err = head.error_estimate;
  double tail = 0.0;
  for (int m = 1; m <= plan.tail_order_M; ++m)
    tail -= bernoulli_ratio(m) * std::pow(x, -2.0 * m) * log_tail_value(2 * m, N, err);
  const int o = plan.tail_order_M + 1;
  err += std::abs(bernoulli_ratio(o)) * std::pow(x, -2.0 * o) * specfun::log_tail_sum(2 * o, N).value;
  const double value = head.value + tail;
  return {value, err + 2.0 * kEps * std::abs(value)};
}

RealResult herglotz_F(double x, const SeriesPlan& plan) {
  check_argument(x, "herglotz_F");
  if (x < kMinHerglotzArgument) throw BudgetExceeded("herglotz_F: x < 0.05 is not supported");
  const std::int64_t N = plan.cutoff_N;
  const RealResult head = direct_sum(N, [x](std::int64_t n) {
    const double dn = static_cast<double>(n);
    const RealResult p = phi0(dn * x);
    return RealResult{p.value / dn, p.error_estimate / dn};
  });
  double err = head.error_estimate;
  double tail = 0.0;
  for (int m = 1; m <= plan.tail_order_M; ++m)
    tail -= bernoulli_ratio(m) * std::pow(x, -2.0 * m) * hurwitz_value(2.0 * m + 1.0, N, err);
  const int o = plan.tail_order_M + 1;
  err += std::abs(bernoulli_ratio(o)) * std::pow(x, -2.0 * o) * specfun::hurwitz_zeta(2.0 * o + 1.0, N + 1.0).value;
  const double pole = specfun::kPi * specfun::kPi / (12.0 * x);
  const double value = head.value + tail - pole;
  return {value, err + 2.0 * kEps * (std::abs(value) + pole)};
}

RealResult sum_phi0(double x, double tol) {
  const RealResult r = sum_phi0(x, plan_for(x, tol));
  check_budget(r, tol, "sum_phi0");
  return r;
}

RealResult sum_phi1(double x, double tol) {
  const RealResult r = sum_phi1(x, plan_for(x, tol));
  check_budget(r, tol, "sum_phi1");
  return r;
}

RealResult sum_phi0_logn(double x, double tol) {
  const RealResult r = sum_phi0_logn(x, plan_for(x, tol));
  check_budget(r, tol, "sum_phi0_logn");
  return r;
}

RealResult phi_log(double x, double tol) {
  const SeriesPlan plan = plan_for(x, tol);
  const RealResult t = sum_phi0_logn(x, plan);
  const RealResult s = sum_phi0(x, plan);
  const double h = 0.5 * std::log(x);
  const double value = t.value + h * s.value;
  const RealResult r{value, t.error_estimate + std::abs(h) * s.error_estimate + 2.0 * kEps * std::abs(value)};
  check_budget(r, tol, "phi_log");
  return r;
}

RealResult sum_phi0_lognx(double x, double tol) {
  const SeriesPlan plan = plan_for(x, tol);
  const RealResult t = sum_phi0_logn(x, plan);
  const RealResult s = sum_phi0(x, plan);
  const double h = std::log(x);
  const double value = t.value + h * s.value;
  const RealResult r{value, t.error_estimate + std::abs(h) * s.error_estimate + 2.0 * kEps * std::abs(value)};
  check_budget(r, tol, "sum_phi0_lognx");
  return r;
}

RealResult herglotz_F(double x, double tol) {
  check_argument(x, "herglotz_F");
  if (x < kMinHerglotzArgument) throw BudgetExceeded("herglotz_F: x < 0.05 is not supported");
  const RealResult r = herglotz_F(x, plan_for(x, tol));
  check_budget(r, tol, "herglotz_F");
  return r;
}

}  // namespace herglotz::series
