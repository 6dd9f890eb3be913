#pragma once

// Inverse-Mellin integrals (1/2 pi i) int_{(c)} K(w) x^{-w} dw along a vertical
// line. Every kernel here satisfies K(conj w) = conj K(w), so the integral
// reduces to (1/pi) int_0^inf Re[K(c+it) x^{-c-it}] dt, which is truncated at
// a height T with an explicit decay bound.

#include "herglotz/types.hpp"

namespace herglotz::contour {

enum class KernelId {
  H_KERNEL,     // pi^2 zeta(w) zeta(1-w) cot(pi w/2) / sin(pi w)
  J_KERNEL,     // pi zeta(w) zeta(1-w) (psi(w) + (pi/2) cot(pi w/2)) / sin(pi w)
  KLOOSTERMAN,  // -pi zeta(1-w) / sin(pi w)
  LEMMA41_RHS,  // (pi^2/4) Gamma(w) zeta(w) cot(pi w/2) csc(pi w/2)
  A_MELLIN,     // pi zeta(w) zeta(1-w) / sin(pi w)
};

const char* kernel_name(KernelId k);

struct ContourSpec {
  double abscissa_c = 0.5;
  double height_T = 40.0;
  /// Initial panels on [1, T]; [0, 1] is always split as [0, 1/4, 1/2, 1].
  int panel_count = 39;
  /// Exponential decay rate of |K(c+it)| used for the truncation bound.
  double decay_rate = 3.141592653589793;
  /// Filled by certify(): bound on the neglected part int_T^inf.
  double truncation_bound = 0.0;
};

/// Default plan for a kernel: c = 1/2 (d = 3/2 for LEMMA41_RHS), T = 40
/// (60 for the Gamma kernel), one panel per unit height.
ContourSpec default_spec(KernelId kernel);

/// Bound on (1/pi) int_T^inf |K(c+it) x^{-c-it}| dt from crude growth
/// estimates of each factor (heuristic for zeta on the critical strip).
double truncation_bound(KernelId kernel, double x, double c, double T);

/// Checks the abscissa and fills spec.truncation_bound.
/// Throws DomainError when c lies outside the kernel's strip, PoleTooClose
/// when it is within 0.05 of a pole, TruncationUncertified when the bound
/// exceeds tol/2.
ContourSpec certify(KernelId kernel, double x, ContourSpec spec, double tol);

/// The line integral at tolerance tol; spec is certified first.
RealResult line_integral(KernelId kernel, double x, const ContourSpec& spec, double tol = 1e-12);

/// K(w) itself, for tests.
complex kernel_value(KernelId kernel, complex w);

RealResult H_contour(double x, double tol = 1e-12);
RealResult J_contour(double x, double tol = 1e-12);
RealResult kloosterman(double x, double tol = 1e-12);
RealResult lemma41_rhs(double x, double tol = 1e-12);
RealResult A_inverse_mellin(double z, double tol = 1e-12);

}  // namespace herglotz::contour
