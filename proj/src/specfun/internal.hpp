#pragma once

// Unchecked kernels shared between modules. These skip budget validation and
// are used on hot paths (series summands, quadrature integrands) where the
// caller accounts for the error itself.

#include <cstdint>

#include "herglotz/specfun.hpp"

namespace herglotz::specfun::detail {

/// psi(z) for Im z > 0 (or anywhere off the poles), no budget check.
ComplexResult digamma_upper(complex z);
RealResult digamma_real(double x);

/// psi_1(x) for x > 0, no budget check.
RealResult psi1_core(double x);

/// zeta(w) at the requested absolute tolerance, no budget check.
ComplexResult zeta_core(complex w, double tol);

/// Derivatives of g(t) = log(t) t^{-p}: g^{(k)}(t) = t^{-p-k} (a_k log t + b_k).
/// Returns g^{(k)}(t).
double log_power_derivative(double p, int k, double t);

/// 1/sin(z) and cot(z), stable for large |Im z|.
complex csc_stable(complex z);
complex cot_stable(complex z);

/// 1/(e^u - 1) - 1/u, accurate near u = 0.
double bose_minus_pole(double u);

}  // namespace herglotz::specfun::detail
