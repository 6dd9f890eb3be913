#pragma once

// Digamma-remainder functions and their sums over nx.
//
//   phi0(x) = psi(x) + 1/(2x) - log x
//   phi1(x) = psi_1(x) + log(x)/(2x) - log^2(x)/2
//
// Every sum is split at a cutoff N: n <= N is summed directly, n > N is
// replaced by the Bernoulli expansion of the summand summed in closed form
// with Hurwitz zeta and log-weighted tails.

#include <cstdint>

#include "herglotz/types.hpp"

namespace herglotz::series {

struct SeriesPlan {
  std::int64_t cutoff_N = 1;
  int tail_order_M = 6;
  /// Magnitude of the first omitted tail term, i.e. order M + 1.
  double tail_error = 0.0;
};

RealResult phi0(double x);
RealResult phi1(double x);

/// Smallest N >= ceil(12/x) whose omitted tail term is <= tol/2 for the sum
/// sum_phi0. Throws BudgetExceeded when N would exceed max_terms.
SeriesPlan plan_for(double x, double tol, std::int64_t max_terms = 10'000'000);

/// S0(x) = sum_{n>=1} phi0(nx)
RealResult sum_phi0(double x, double tol = 1e-12);
RealResult sum_phi0(double x, const SeriesPlan& plan);

/// S1(x) = sum_{n>=1} phi1(nx)
RealResult sum_phi1(double x, double tol = 1e-12);
RealResult sum_phi1(double x, const SeriesPlan& plan);

/// T(x) = sum_{n>=1} phi0(nx) log n
RealResult sum_phi0_logn(double x, double tol = 1e-12);
RealResult sum_phi0_logn(double x, const SeriesPlan& plan);

/// sum phi0(nx) log(n sqrt x) = T(x) + (log x / 2) S0(x)
RealResult phi_log(double x, double tol = 1e-12);

/// sum phi0(nx) log(nx) = T(x) + log(x) S0(x)
RealResult sum_phi0_lognx(double x, double tol = 1e-12);

/// Herglotz-Zagier F(x) = sum (psi(nx) - log(nx))/n. Refuses x < 0.05.
RealResult herglotz_F(double x, double tol = 1e-12);
RealResult herglotz_F(double x, const SeriesPlan& plan);

inline constexpr double kMinHerglotzArgument = 0.05;

}  // namespace herglotz::series
