#pragma once

// Scalar special functions and exact number-theoretic tables.

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "herglotz/types.hpp"

namespace herglotz::specfun {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLog2Pi = 1.837877066409345483560659472811235279;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;

struct MathConstants {
  double euler_gamma;       // gamma = -digamma(1)
  double stieltjes_gamma1;  // gamma_1 by Euler-Maclaurin
  double pi;
  double log_2pi;
};

/// Computed once on first use; safe to call from any thread.
const MathConstants& math_constants();

// ---------------------------------------------------------------------------
// Digamma family

/// psi(z) for complex z. Lifts with psi(z+1) = psi(z) + 1/z until |z| >= 12 and
/// Re z >= 0, then sums the Bernoulli asymptotic series up to its smallest term.
/// The result satisfies psi(conj z) == conj psi(z) bit for bit.
ComplexResult digamma(complex z, const PrecisionBudget& budget = {});
RealResult digamma(double x, const PrecisionBudget& budget = {});

/// Deninger's psi_1 = Gamma_1'/Gamma_1, for x > 0. Lifts with
/// psi_1(x+1) = psi_1(x) + log(x)/x until x >= 20, then uses the asymptotic
/// expansion with eight Bernoulli terms.
RealResult psi1(double x, const PrecisionBudget& budget = {});

/// The truncated large-x expansion of psi_j (j = 0 or 1), built from Bernoulli
/// and signed Stirling numbers:
///   log^{j+1}x/(j+1) - log^j x/(2x)
///     + sum_{m=1}^{terms} B_{2m}/(2m)! x^{-2m} sum_{t=0}^{j} C(j,t) t! s(2m,t+1) log^{j-t} x.
double generalized_digamma_asymptotic(int j, double x, int terms);

/// ln Gamma(z) on the principal sheet away from the negative real axis.
complex log_gamma(complex z);
complex gamma(complex z);

// ---------------------------------------------------------------------------
// Zeta functions and tails

/// zeta(w) from the alternating eta series with Borwein's Chebyshev weights.
/// Intended for -2 <= Re w <= 3, |Im w| <= 200.
ComplexResult riemann_zeta(complex w, const PrecisionBudget& budget = {});
RealResult riemann_zeta(double s, const PrecisionBudget& budget = {});

/// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} for real s > 1, a > 0.
RealResult hurwitz_zeta(double s, double a);

/// sum_{n>N} log(n) n^{-m}, m >= 2, N >= 0. With N = 0 or 1 this is -zeta'(m).
RealResult log_tail_sum(int m, std::int64_t N);

/// Real dilogarithm Li_2(x) for x <= 1.
RealResult dilog(double x);

/// gamma_1 from lim (sum_{n<=N} log n/n - log^2 N / 2) with an Euler-Maclaurin
/// correction at the given N.
RealResult stieltjes_gamma1_at(int N);
RealResult stieltjes_gamma1();

// ---------------------------------------------------------------------------
// Exact tables

/// B_{2m} exactly, 1 <= m <= 30.
BigRational bernoulli_even(int m);

/// B_{2m} as doubles, index 0..30 (index 0 holds B_0 = 1).
const std::array<double, 31>& bernoulli_even_table();

/// Signed Stirling number of the first kind, 0 <= k <= n <= 60, with
/// s(n+1,k) = s(n,k-1) - n s(n,k); x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
BigInt stirling_first(int n, int k);

/// d(n) for 0 <= n <= N (entry 0 is 0). N is capped at 1e8.
std::vector<std::uint32_t> divisor_count_sieve(std::int64_t N);

}  // namespace herglotz::specfun
