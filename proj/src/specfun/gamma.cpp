#include <cmath>

#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

namespace {

complex log_gamma_upper(complex z) {
  if (std::abs(z.imag()) < 1e-13 && z.real() <= 0.5 && std::abs(z.real() - std::nearbyint(z.real())) < 1e-13)
    throw PoleError("log_gamma: argument is a non-positive integer");
  complex shift{};
  while (std::abs(z) < 12.0 || z.real() < 0.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const auto& B = bernoulli_even_table();
  const complex w = 1.0 / z;
  const complex w2 = w * w;
  complex series{};
  complex p = w;
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= 30; ++m) {
    const complex term = B[m] / (2.0 * m * (2.0 * m - 1.0)) * p;
    const double mag = std::abs(term);
    if (mag >= prev || mag < 0.25 * kEps * std::abs(series)) break;
    series += term;
    prev = mag;
    p *= w2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series - shift;
}

}  // namespace

complex log_gamma(complex z) {
  if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
  return log_gamma_upper(z);
}

complex gamma(complex z) { return std::exp(log_gamma(z)); }

namespace detail {

complex csc_stable(complex z) {
  if (z.imag() < 0.0) return std::conj(csc_stable(std::conj(z)));
  // 1/sin z = 2i e^{iz} / (e^{2iz} - 1), |e^{iz}| = e^{-Im z} <= 1.
  const complex eiz = std::exp(complex(-z.imag(), z.real()));
  return complex(0.0, 2.0) * eiz / (eiz * eiz - 1.0);
}

complex cot_stable(complex z) {
  if (z.imag() < 0.0) return std::conj(cot_stable(std::conj(z)));
  const complex q = std::exp(complex(-2.0 * z.imag(), 2.0 * z.real()));
  return complex(0.0, 1.0) * (q + 1.0) / (q - 1.0);
}

double bose_minus_pole(double u) {
  if (std::abs(u) < 0.1) {
    const double u2 = u * u;
    return -0.5 + u * (1.0 / 12.0 +
                       u2 * (-1.0 / 720.0 + u2 * (1.0 / 30240.0 + u2 * (-1.0 / 1209600.0 + u2 / 47900160.0))));
  }
  return 1.0 / std::expm1(u) - 1.0 / u;
}

}  // namespace detail

}  // namespace herglotz::specfun
