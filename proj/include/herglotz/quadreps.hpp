#pragma once

// Real-axis representations: three forms of H(y), the Wigert cosine integral,
// the left side of the Gamma-zeta Mellin lemma, and the auto-correlation A(z).

#include <utility>

#include "herglotz/types.hpp"

namespace herglotz::quadreps {

enum class Scheme { endpoint_singular, smooth_decay, oscillatory_halfperiod };

struct QuadPlan {
  Scheme scheme = Scheme::smooth_decay;
  /// Integration is carried out on [0, truncation_upper]; the rest is
  /// handled analytically or bounded by tail_bound.
  double truncation_upper = 0.0;
  int subdivision_cap = 20'000;
  double tail_bound = 0.0;
};

/// refinement > 0 splits every initial panel 2^refinement ways and deepens
/// the graded mesh; used to check that results are mesh independent.
struct QuadControl {
  double tol = 1e-12;
  int refinement = 0;
};

inline constexpr double kMinDivisorArgument = 0.05;
inline constexpr double kMinWigertArgument = 1e-3;
inline constexpr double kMinDoubleIntegralTol = 1e-7;

/// H(y) = pi^2/(4y) + 4 sum_n d(n) int_0^inf t log t e^{-2 pi n y t}/(1+t^2) dt.
/// Refuses y < 0.05 with BudgetExceeded.
RealResult H_divisor_series(double y, QuadControl ctl = {});

/// H(y) = 2 pi int_0^inf (1/(e^{2 pi x}-1) - 1/(2 pi x)) (log(xy) - Re psi(ixy)) dx
RealResult H_single_integral(double y, QuadControl ctl = {});

/// As H_single_integral, with log a - Re psi(ia) replaced by the cosine
/// integral evaluated by half-period acceleration. tol >= 1e-7.
RealResult H_double_integral(double y, QuadControl ctl = {1e-6, 0});

/// int_0^inf (1/(e^t-1) - 1/t) cos(at) dt by half-period acceleration.
RealResult wigert_integral(double a, double tol = 1e-12);

/// log a - Re psi(ia)
RealResult wigert_closed_form(double a);

/// (integral, closed form); refuses a < 1e-3.
std::pair<RealResult, RealResult> wigert(double a, double tol = 1e-12);

/// int_0^inf t log t / ((1+t^2)(e^{xt}-1)) dt
RealResult lemma41_lhs(double x, QuadControl ctl = {});

/// int_0^inf (1/(xz) - 1/(e^{xz}-1)) (1/x - 1/(e^x-1)) dx
RealResult A_direct(double z, QuadControl ctl = {});

/// The plan each evaluator would use, for inspection.
QuadPlan plan_H_single(double y, double tol);
QuadPlan plan_lemma41(double x, double tol);
QuadPlan plan_A_direct(double z, double tol);

}  // namespace herglotz::quadreps
