// Euler-Maclaurin tail primitives: Hurwitz zeta, log-weighted power tails,
// gamma_1, plus the real dilogarithm.

#include <cmath>
#include <string>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

namespace {

// B_{2k}/(2k)!
double bernoulli_over_factorial(int k) {
  static const std::array<double, 31> table = [] {
    std::array<double, 31> t{};
    const auto& B = bernoulli_even_table();
    double fact = 1.0;
    for (int k2 = 1; k2 <= 30; ++k2) {
      fact *= (2.0 * k2 - 1.0) * (2.0 * k2);
      t[k2] = B[k2] / fact;
    }
    return t;
  }();
  return table[k];
}

// Euler-Maclaurin correction -sum_k B_{2k}/(2k)! g^{(2k-1)}(A) for
// g(t) = log(t) t^{-p}, stopped at the smallest term.
std::pair<double, double> em_log_power_correction(double p, double A) {
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 30; ++k) {
    const double term = -bernoulli_over_factorial(k) * detail::log_power_derivative(p, 2 * k - 1, A);
    const double mag = std::abs(term);
    if (mag >= prev) return {sum, prev};
    if (mag <= 0.1 * kEps * std::abs(sum)) return {sum, mag};
    sum += term;
    prev = mag;
  }
  return {sum, prev};
}

}  // namespace

namespace detail {

double log_power_derivative(double p, int k, double t) {
  double a = 1.0;
  double b = 0.0;
  double q = p;
  for (int i = 0; i < k; ++i) {
    const double na = -q * a;
    const double nb = a - q * b;
    a = na;
    b = nb;
    q += 1.0;
  }
  return std::pow(t, -q) * (a * std::log(t) + b);
}

}  // namespace detail

RealResult hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("hurwitz_zeta: s must be > 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz_zeta: a must be > 0");

  const double target = std::max(12.0, s + 8.0);
  const long shift = a < target ? static_cast<long>(std::ceil(target - a)) : 0;
  double direct = 0.0;
  for (long n = shift - 1; n >= 0; --n) direct += std::pow(n + a, -s);

  const double A = a + static_cast<double>(shift);
  double em = std::pow(A, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(A, -s);
  double poch = s;                     // (s)_{2k-1}
  double power = std::pow(A, -s - 1);  // A^{-s-2k+1}
  double prev = std::numeric_limits<double>::infinity();
  double omitted = 0.0;
  for (int k = 1; k <= 30; ++k) {
    const double term = bernoulli_over_factorial(k) * poch * power;
    const double mag = std::abs(term);
    if (mag >= prev || mag <= 0.1 * kEps * (direct + em)) {
      omitted = std::min(mag, prev);
      break;
    }
    em += term;
    prev = mag;
    omitted = mag;
    poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    power /= A * A;
  }
  const double value = direct + em;
  return {value, omitted + 4.0 * kEps * std::abs(value)};
}

RealResult log_tail_sum(int m, std::int64_t N) {
  if (m < 2) throw DomainError("log_tail_sum: m must be >= 2");
  if (N < 0) throw DomainError("log_tail_sum: N must be >= 0");
  const std::int64_t A = std::max<std::int64_t>(N + 1, 12 + m);
  double direct = 0.0;
  for (std::int64_t n = A - 1; n > N; --n) {
    const double dn = static_cast<double>(n);
    direct += std::log(dn) * std::pow(dn, -m);
  }
  const double a = static_cast<double>(A);
  const double la = std::log(a);
  const double integral = std::pow(a, 1.0 - m) * (la / (m - 1.0) + 1.0 / ((m - 1.0) * (m - 1.0)));
  const auto [corr, omitted] = em_log_power_correction(m, a);
  const double value = direct + integral + 0.5 * la * std::pow(a, -m) + corr;
  return {value, omitted + 4.0 * kEps * std::abs(value)};
}

RealResult dilog(double x) {
  if (!(x <= 1.0)) throw DomainError("dilog: x must be <= 1");
  constexpr double kZeta2 = kPi * kPi / 6.0;
  if (x == 1.0) return {kZeta2, kEps * kZeta2};
  if (x == 0.0) return {0.0, 0.0};
  if (x > 0.5) {
    const RealResult r = dilog(1.0 - x);
    const double value = kZeta2 - std::log(x) * std::log1p(-x) - r.value;
    return {value, r.error_estimate + 4.0 * kEps * (kZeta2 + std::abs(value))};
  }
  if (x < -1.0) {
    const RealResult r = dilog(1.0 / x);
    const double l = std::log(-x);
    const double value = -kZeta2 - 0.5 * l * l - r.value;
    return {value, r.error_estimate + 4.0 * kEps * (kZeta2 + 0.5 * l * l)};
  }
  if (x < 0.0) {
    // Landen: x/(x-1) lands in (0, 1/2].
    const RealResult r = dilog(x / (x - 1.0));
    const double l = std::log1p(-x);
    const double value = -r.value - 0.5 * l * l;
    return {value, r.error_estimate + 4.0 * kEps * (std::abs(r.value) + 0.5 * l * l)};
  }
  double sum = 0.0;
  double p = x;
  for (int k = 1; k < 200; ++k) {
    const double term = p / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 0.1 * kEps * std::abs(sum)) break;
    p *= x;
  }
  return {sum, 4.0 * kEps * std::abs(sum)};
}

RealResult stieltjes_gamma1_at(int N) {
  if (N < 10) throw DomainError("stieltjes_gamma1_at: N must be >= 10");
  // Neumaier-compensated partial sum; the result cancels against log^2 N / 2.
  double partial = 0.0;
  double carry = 0.0;
  for (int n = N; n >= 2; --n) {
    const double term = std::log(n) / n;
    const double t = partial + term;
    carry += std::abs(partial) >= std::abs(term) ? (partial - t) + term : (term - t) + partial;
    partial = t;
  }
  partial += carry;
  const double dn = N;
  const double ln = std::log(dn);
  const auto [corr, omitted] = em_log_power_correction(1.0, dn);
  // sum_{n<=N} f(n) = gamma_1 + log^2 N / 2 + f(N)/2 - corr
  const double value = partial - 0.5 * ln * ln - 0.5 * ln / dn + corr;
  return {value, omitted + 4.0 * kEps * (std::abs(partial) + ln * ln)};
}

RealResult stieltjes_gamma1() { return stieltjes_gamma1_at(24); }

}  // namespace herglotz::specfun
