#include <cmath>
#include <string>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

namespace {

constexpr double kLiftRadius = 12.0;
constexpr double kPoleDistance = 1e-13;

bool near_nonpositive_integer(double re, double im) {
  if (std::abs(im) >= kPoleDistance || re > 0.5) return false;
  return std::abs(re - std::nearbyint(re)) < kPoleDistance;
}

// Asymptotic tail -sum B_{2m}/(2m) w^{2m}, stopped at the smallest term.
// Returns the sum and the magnitude of the first omitted term.
template <class T>
std::pair<T, double> bernoulli_tail(T w2) {
  const auto& B = bernoulli_even_table();
  T sum{};
  T p = w2;
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= 30; ++m) {
    const T term = (B[m] / (2.0 * m)) * p;
    const double mag = std::abs(term);
    if (mag >= prev) return {sum, prev};
    if (mag <= 0.25 * kEps * std::abs(sum)) return {sum, mag};
    sum -= term;
    prev = mag;
    p *= w2;
  }
  return {sum, prev};
}

void check_budget(double err, double value_mag, const PrecisionBudget& budget, const char* what) {
  const double allowed = budget.target_abs_tol * std::max(1.0, value_mag);
  if (err > allowed)
    throw BudgetExceeded(std::string(what) + ": error estimate " + std::to_string(err) +
                         " exceeds tolerance");
}

}  // namespace

namespace detail {

ComplexResult digamma_upper(complex z) {
  if (near_nonpositive_integer(z.real(), z.imag()))
    throw PoleError("digamma: argument is a non-positive integer");
  complex shift{};
  double shift_abs = 0.0;
  while (std::abs(z) < kLiftRadius || z.real() < 0.0) {
    shift += 1.0 / z;
    shift_abs += 1.0 / std::abs(z);
    z += 1.0;
  }
  const complex w = 1.0 / z;
  const complex lz = std::log(z);
  auto [tail, omitted] = bernoulli_tail(w * w);
  const complex value = lz - 0.5 * w + tail - shift;
  // Off the real axis the remainder is bounded by sec^2(arg/2) <= 2 times the
  // first omitted term for Re z >= 0.
  const double err = 2.0 * omitted + 4.0 * kEps * (std::abs(lz) + std::abs(w) + shift_abs + std::abs(value));
  return {value, err};
}

RealResult digamma_real(double x) {
  if (near_nonpositive_integer(x, 0.0)) throw PoleError("digamma: argument is a non-positive integer");
  double shift = 0.0;
  double shift_abs = 0.0;
  while (x < kLiftRadius) {
    shift += 1.0 / x;
    shift_abs += 1.0 / std::abs(x);
    x += 1.0;
  }
  const double w = 1.0 / x;
  const double lx = std::log(x);
  auto [tail, omitted] = bernoulli_tail(w * w);
  const double value = lx - 0.5 * w + tail - shift;
  const double err = omitted + 4.0 * kEps * (std::abs(lx) + shift_abs + std::abs(value));
  return {value, err};
}

}  // namespace detail

ComplexResult digamma(complex z, const PrecisionBudget& budget) {
  budget.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("digamma: non-finite argument");
  ComplexResult r;
  if (z.imag() < 0.0) {
    r = detail::digamma_upper(std::conj(z));
    r.value = std::conj(r.value);
  } else if (z.imag() == 0.0) {
    const RealResult rr = detail::digamma_real(z.real());
    r = {complex(rr.value, 0.0), rr.error_estimate};
  } else {
    r = detail::digamma_upper(z);
  }
  check_budget(r.error_estimate, std::abs(r.value), budget, "digamma");
  return r;
}

RealResult digamma(double x, const PrecisionBudget& budget) {
  budget.validate();
  if (!std::isfinite(x)) throw DomainError("digamma: non-finite argument");
  const RealResult r = detail::digamma_real(x);
  check_budget(r.error_estimate, std::abs(r.value), budget, "digamma");
  return r;
}

}  // namespace herglotz::specfun
