#pragma once

// Deterministic real quadrature: adaptive Gauss-Kronrod (10/21), graded meshes
// for endpoint log singularities, and an Euler-accelerated half-period scheme
// for slowly decaying cosine integrals.

#include <functional>
#include <span>
#include <vector>

namespace herglotz::quad {

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = true;
};

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 0.0;
  int max_intervals = 20'000;
};

/// Global adaptive bisection over the panels given by `breakpoints`
/// (ascending, at least two entries). Bisects the panel with the largest
/// error estimate until the total meets the tolerance or the cap is hit.
QuadResult gauss_kronrod(const Integrand& f, std::span<const double> breakpoints, const AdaptiveOptions& opts);
QuadResult gauss_kronrod(const Integrand& f, double a, double b, const AdaptiveOptions& opts);

/// a, a + (b-a) r^levels, ..., a + (b-a) r, b with r = 1/2: a mesh graded
/// geometrically toward a.
std::vector<double> graded_breakpoints(double a, double b, int levels);

/// Integrate with a graded mesh toward `a`, for integrands with an integrable
/// log-type singularity there.
QuadResult integrate_graded(const Integrand& f, double a, double b, int levels, const AdaptiveOptions& opts);

struct AlternatingResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int half_periods = 0;
  bool converged = true;
};

/// int_0^inf f(t) cos(omega t) dt for f with a slowly varying, eventually
/// monotone envelope. The line is cut at the zeros of cos(omega t); the
/// partial sums alternate and are accelerated by repeated averaging (Euler
/// transform) until consecutive accelerants differ by < tol/4.
AlternatingResult cosine_integral_euler(const Integrand& f, double omega, double tol, int max_half_periods = 400);

}  // namespace herglotz::quad
