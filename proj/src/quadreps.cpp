#include "herglotz/quadreps.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "herglotz/quadrature.hpp"
#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::quadreps {

namespace {

using specfun::kPi;
namespace sd = specfun::detail;

constexpr int kGradedLevels = 40;
constexpr double kBracketAsymptoticFrom = 12.0;
constexpr double kDoubleIntegralCutoff = 1e-9;  // outer integral starts here

// Split every panel into 2^r equal parts.
std::vector<double> refine(const std::vector<double>& bp, int r) {
  if (r <= 0) return bp;
  const int parts = 1 << r;
  std::vector<double> out;
  out.reserve((bp.size() - 1) * parts + 1);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    for (int k = 0; k < parts; ++k) out.push_back(bp[i] + (bp[i + 1] - bp[i]) * k / parts);
  out.push_back(bp.back());
  return out;
}

// Graded toward `lo` on [lo, 1], then unit panels to `hi` and dyadic beyond 16.
std::vector<double> singular_mesh(double lo, double hi, int levels) {
  std::vector<double> bp = quad::graded_breakpoints(lo, 1.0, levels);
  double p = 2.0;
  while (p < hi) {
    bp.push_back(p);
    p = p < 16.0 ? p + 1.0 : 2.0 * p;
  }
  if (hi > 1.0) bp.push_back(hi);
  return bp;
}

RealResult checked(const RealResult& r, double tol, const char* what) {
  if (!(r.error_estimate <= tol * std::max(1.0, std::abs(r.value))))
    throw BudgetExceeded(std::string(what) + ": tolerance unreachable");
  return r;
}

// log a - Re psi(ia) and its error; asymptotic for large a.
RealResult bracket(double a) {
  if (a >= kBracketAsymptoticFrom) {
    const auto& B = specfun::bernoulli_even_table();
    const double w2 = 1.0 / (a * a);
    double p = w2;
    double sum = 0.0;
    double omitted = 0.0;
    for (int m = 1; m <= 30; ++m) {
      const double term = (m % 2 == 0 ? 1.0 : -1.0) * B[m] / (2.0 * m) * p;
      omitted = std::abs(term);
      if (omitted <= 0.1 * kEps * std::abs(sum)) break;
      sum += term;
      p *= w2;
    }
    return {sum, omitted + kEps * std::abs(sum)};
  }
  // Re psi(ia) = Re psi(1+ia): the recurrence step adds -1/(ia), purely imaginary.
  const ComplexResult psi = sd::digamma_upper(complex(1.0, a));
  const double la = std::log(a);
  const double value = la - psi.value.real();
  return {value, psi.error_estimate + 4.0 * kEps * (std::abs(la) + std::abs(psi.value.real()))};
}

// 2 pi int_X^inf of the H integrand, with 1/(e^{2 pi x}-1) dropped (bounded
// separately) and the bracket replaced by its asymptotic series.
RealResult bracket_tail(double X, double y) {
  const auto& B = specfun::bernoulli_even_table();
  const double w2 = 1.0 / ((X * y) * (X * y));
  double p = w2;
  double sum = 0.0;
  double omitted = 0.0;
  for (int m = 1; m <= 30; ++m) {
    const double term = -(m % 2 == 0 ? 1.0 : -1.0) * B[m] / (4.0 * m * m) * p;
    omitted = std::abs(term);
    if (omitted <= 0.1 * kEps * std::abs(sum)) break;
    sum += term;
    p *= w2;
  }
  const double exp_part = 2.0 * std::exp(-2.0 * kPi * X) * (std::abs(bracket(X * y).value) + 1.0);
  return {sum, omitted + exp_part + kEps * std::abs(sum)};
}

double single_cutoff(double y) { return std::max(kBracketAsymptoticFrom / y, 6.0); }

RealResult wigert_core(double a, double tol) {
  const quad::AlternatingResult r = quad::cosine_integral_euler(sd::bose_minus_pole, a, tol);
  if (!r.converged) throw BudgetExceeded("wigert: half-period acceleration did not converge");
  return {r.value, r.error_estimate};
}

// Bounds on sum_{n>N} d(n) n^{-s} and sum_{n>N} d(n) log(n) n^{-s} from d(n) <= 2 sqrt n.
double divisor_tail_bound(double s, double N) { return 2.0 * std::pow(N, 1.5 - s) / (s - 1.5); }
double divisor_log_tail_bound(double s, double N) { return 3.0 * std::pow(N, 1.75 - s) / (s - 1.75); }

}  // namespace

QuadPlan plan_H_single(double y, [[maybe_unused]] double tol) {
  const double X = single_cutoff(y);
  return {Scheme::endpoint_singular, X, 20'000, bracket_tail(X, y).error_estimate};
}

QuadPlan plan_lemma41(double x, double tol) {
  const double U = std::max(2.0, std::max(40.0, -std::log(tol * x)) / x);
  const double q = std::exp(-x * U);
  return {Scheme::endpoint_singular, U, 20'000, std::log(U) / U * q / (x * (1.0 - q))};
}

QuadPlan plan_A_direct(double z, double tol) {
  const double m = std::min(z, 1.0);
  const double X = std::max(40.0, -std::log(tol)) / m;
  return {Scheme::smooth_decay, X, 20'000, 4.0 * std::exp(-m * X) / (m * X)};
}

RealResult H_single_integral(double y, QuadControl ctl) {
  require_positive(y, "H_single_integral");
  require_tolerance(ctl.tol, "H_single_integral");
  const QuadPlan plan = plan_H_single(y, ctl.tol);
  const quad::Integrand f = [y](double x) {
    return 2.0 * kPi * sd::bose_minus_pole(2.0 * kPi * x) * bracket(x * y).value;
  };
  const auto bp = refine(singular_mesh(0.0, plan.truncation_upper, kGradedLevels + 8 * ctl.refinement), ctl.refinement);
  const quad::QuadResult q = quad::gauss_kronrod(f, bp, {0.25 * ctl.tol, 0.0, plan.subdivision_cap});
  const RealResult tail = bracket_tail(plan.truncation_upper, y);
  const double value = q.value + tail.value;
  return checked({value, q.error_estimate + tail.error_estimate}, ctl.tol, "H_single_integral");
}

RealResult H_double_integral(double y, QuadControl ctl) {
  require_positive(y, "H_double_integral");
  if (!(ctl.tol >= kMinDoubleIntegralTol)) throw DomainError("H_double_integral: tolerance must be >= 1e-7");
  const double X = single_cutoff(y);
  const double x0 = kDoubleIntegralCutoff;
  // int_0^{x0} with bose = -1/2 + O(x) and bracket = log(xy) + gamma + O((xy)^2).
  const double gamma = specfun::math_constants().euler_gamma;
  const double lxy = std::log(x0 * y);
  const double head = -kPi * x0 * (lxy - 1.0 + gamma);
  const double head_bound = 2.0 * kPi * kPi * x0 * x0 * (std::abs(lxy) + 2.0) + kPi * x0 * (x0 * y) * (x0 * y);
  // Inner errors are weighted by int |2 pi bose| <= pi X.
  const double inner_tol = 0.1 * ctl.tol / (kPi * X);
  double inner_err = 0.0;
  const quad::Integrand f = [&](double x) {
    const RealResult w = wigert_core(x * y, inner_tol);
    const double weight = 2.0 * kPi * sd::bose_minus_pole(2.0 * kPi * x);
    inner_err = std::max(inner_err, w.error_estimate);
    return weight * w.value;
  };
  const auto bp = refine(singular_mesh(x0, X, 30 + 8 * ctl.refinement), ctl.refinement);
  const quad::QuadResult q = quad::gauss_kronrod(f, bp, {0.25 * ctl.tol, 0.0, 20'000});
  const RealResult tail = bracket_tail(X, y);
  const double value = head + q.value + tail.value;
  const double err = q.error_estimate + tail.error_estimate + head_bound + kPi * X * inner_err;
  return checked({value, err}, ctl.tol, "H_double_integral");
}

RealResult H_divisor_series(double y, QuadControl ctl) {
  require_positive(y, "H_divisor_series");
  require_tolerance(ctl.tol, "H_divisor_series");
  if (y < kMinDivisorArgument) throw BudgetExceeded("H_divisor_series: y < 0.05 is not supported");
  const double tol = ctl.tol;
  const double two_pi_y = 2.0 * kPi * y;
  const double log_c = std::log(two_pi_y);
  constexpr int K = 4;  // asymptotic terms k = 0..K-1 in the tail
  const double gamma = specfun::math_constants().euler_gamma;

  // psi(2k+2) = H_{2k+1} - gamma; (2k+1)!; C_k = (2k+1)!/(2 pi y)^{2k+2}
  double psi[K + 1];
  double Ck[K + 1];
  {
    double h = 0.0;
    double f = 1.0;
    for (int k = 0; k <= K; ++k) {
      if (k > 0) f *= (2.0 * k) * (2.0 * k + 1.0);
      for (int j = (k == 0 ? 1 : 2 * k); j <= 2 * k + 1; ++j) h += 1.0 / j;
      psi[k] = h - gamma;
      Ck[k] = f / std::pow(two_pi_y, 2.0 * k + 2.0);
    }
  }
  const auto omitted_bound = [&](std::int64_t N) {
    const double s = 2.0 * K + 2.0;
    const double n = static_cast<double>(N);
    return 4.0 * Ck[K] *
           ((std::abs(psi[K]) + std::abs(log_c)) * divisor_tail_bound(s, n) + divisor_log_tail_bound(s, n));
  };
  std::int64_t N = static_cast<std::int64_t>(std::ceil(60.0 / two_pi_y));
  while (omitted_bound(N) > 0.25 * tol) N += std::max<std::int64_t>(1, N / 4);
  if (N > 10'000'000) throw BudgetExceeded("H_divisor_series: cutoff exceeds term cap");

  // Direct Dirichlet tails for s >= 6 run to M where the remainder is negligible.
  std::int64_t M = N;
  for (int k = 2; k < K; ++k) {
    const double s = 2.0 * k + 2.0;
    const double target = 1e-3 * tol / (4.0 * Ck[k] * (std::abs(psi[k]) + std::abs(log_c) + 1.0));
    const double m = std::pow(3.0 / ((s - 1.75) * target), 1.0 / (s - 1.75));
    M = std::max<std::int64_t>(M, static_cast<std::int64_t>(std::ceil(std::min(m, 1e7))));
  }
  const std::vector<std::uint32_t> d = specfun::divisor_count_sieve(M);

  // Inner integrals n <= N after t = u/b: (1/b^2) int u log(u/b) e^{-u}/(1+(u/b)^2) du.
  constexpr double U = 60.0;
  double head = 0.0;
  double err = 0.0;
  const auto mesh = refine(singular_mesh(0.0, U, 20 + 8 * ctl.refinement), ctl.refinement);
  for (std::int64_t n = 1; n <= N; ++n) {
    const double b = two_pi_y * static_cast<double>(n);
    const double lb = std::log(b);
    const quad::Integrand f = [b, lb](double u) {
      const double r = u / b;
      return u * (std::log(u) - lb) * std::exp(-u) / (1.0 + r * r);
    };
    const double weight = 4.0 * d[n] / (b * b);
    const quad::QuadResult q = quad::gauss_kronrod(f, mesh, {0.1 * tol / (weight * static_cast<double>(N)), 0.0, 20'000});
    const double cut = U * std::exp(-U) * (std::abs(std::log(U) - lb) + 1.0);
    head += weight * q.value;
    err += weight * (q.error_estimate + cut);
  }

  // Tail n > N from the expansion of 1/(1+t^2).
  double tail = 0.0;
  for (int k = 0; k < K; ++k) {
    const int s = 2 * k + 2;
    double D = 0.0;
    double L = 0.0;
    double dl_err = 0.0;
    if (k < 2) {
      // zeta^2 and 2 zeta (-zeta') minus the partial sums.
      const double z = specfun::riemann_zeta(static_cast<double>(s)).value;
      const RealResult zp = specfun::log_tail_sum(s, 1);
      double pd = 0.0;
      double pl = 0.0;
      for (std::int64_t n = N; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        const double t = d[n] * std::pow(dn, -s);
        pd += t;
        pl += t * std::log(dn);
      }
      D = z * z - pd;
      L = 2.0 * z * zp.value - pl;
      dl_err = 8.0 * kEps * (z * z + 2.0 * z * zp.value) + 2.0 * z * zp.error_estimate;
    } else {
      for (std::int64_t n = M; n > N; --n) {
        const double dn = static_cast<double>(n);
        const double t = d[n] * std::pow(dn, -s);
        D += t;
        L += t * std::log(dn);
      }
      const double m = static_cast<double>(M);
      dl_err = divisor_tail_bound(s, m) + divisor_log_tail_bound(s, m) + 4.0 * kEps * (D + L);
    }
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    tail += 4.0 * sign * Ck[k] * ((psi[k] - log_c) * D - L);
    err += 4.0 * Ck[k] * (std::abs(psi[k] - log_c) + 1.0) * dl_err;
  }
  err += 2.0 * omitted_bound(N);

  const double pole = kPi * kPi / (4.0 * y);
  const double value = pole + head + tail;
  return checked({value, err + 4.0 * kEps * (pole + std::abs(head))}, tol, "H_divisor_series");
}

RealResult wigert_integral(double a, double tol) {
  require_positive(a, "wigert");
  require_tolerance(tol, "wigert");
  return wigert_core(a, tol);
}

RealResult wigert_closed_form(double a) {
  require_positive(a, "wigert_closed_form");
  return bracket(a);
}

std::pair<RealResult, RealResult> wigert(double a, double tol) {
  require_positive(a, "wigert");
  if (a < kMinWigertArgument) throw DomainError("wigert: a must be >= 1e-3");
  return {checked(wigert_integral(a, tol), tol, "wigert"), wigert_closed_form(a)};
}

RealResult lemma41_lhs(double x, QuadControl ctl) {
  require_positive(x, "lemma41_lhs");
  require_tolerance(ctl.tol, "lemma41_lhs");
  const QuadPlan plan = plan_lemma41(x, ctl.tol);
  const quad::Integrand f = [x](double t) { return t * std::log(t) / ((1.0 + t * t) * std::expm1(x * t)); };
  const auto bp = refine(singular_mesh(0.0, plan.truncation_upper, kGradedLevels + 8 * ctl.refinement), ctl.refinement);
  const quad::QuadResult q = quad::gauss_kronrod(f, bp, {0.25 * ctl.tol, 0.0, plan.subdivision_cap});
  return checked({q.value, q.error_estimate + plan.tail_bound}, ctl.tol, "lemma41_lhs");
}

RealResult A_direct(double z, QuadControl ctl) {
  require_positive(z, "A_direct");
  require_tolerance(ctl.tol, "A_direct");
  const QuadPlan plan = plan_A_direct(z, ctl.tol);
  const quad::Integrand f = [z](double x) { return sd::bose_minus_pole(x * z) * sd::bose_minus_pole(x); };
  std::vector<double> bp{0.0};
  for (double p = 0.125; p < plan.truncation_upper; p *= 2.0) bp.push_back(p);
  bp.push_back(plan.truncation_upper);
  bp = refine(bp, ctl.refinement);
  const quad::QuadResult q = quad::gauss_kronrod(f, bp, {0.25 * ctl.tol, 0.0, plan.subdivision_cap});
  const double tail = 1.0 / (z * plan.truncation_upper);
  const double value = q.value + tail;
  return checked({value, q.error_estimate + plan.tail_bound + kEps * tail}, ctl.tol, "A_direct");
}

}  // namespace herglotz::quadreps
