#pragma once

// Composite functions built from the series and integrals, and residual checks
// of the modular relations and functional equations they satisfy.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "herglotz/types.hpp"

namespace herglotz::relations {

enum class HRep { contour, divisor, single, double_integral };

const char* hrep_name(HRep r);

/// H(y) through the chosen representation.
RealResult H_value(double y, double tol, HRep rep = HRep::contour);

/// phi_log(x) - H(x)/2 - (12 gamma^2 - 5 pi^2)/(48x) + (gamma log x + log(2 pi) log(2 pi x))/(4x)
RealResult G_fn(double x, double tol = 1e-10, HRep rep = HRep::contour);

/// S1(x) - sum log(nx) phi0(nx) + H(x)/2 - pi^2/(12x)
RealResult F_fn(double x, double tol = 1e-10, HRep rep = HRep::contour);

/// sqrt x {S1 + (log^2 2pi - (gamma - log x)^2)/(4x) + pi^2/(48x)}
///   - (sqrt x log x / 2) {S0 + (gamma - log 2 pi x)/(2x)}
RealResult F1_fn(double x, double tol = 1e-10);

/// sqrt x (S0(x) + (gamma - log 2 pi x)/(2x))
RealResult ramanujan_bracket(double x, double tol = 1e-12);

/// F(1) = -gamma^2/2 - pi^2/12 - gamma_1
RealResult herglotz_F1_closed_form();

enum class IdentityId {
  THM_1_1,
  THM_3_2,
  LEMMA_3_1,
  RAMANUJAN_W126,
  F1_K1,
  ZAGIER_2TERM,
  ZAGIER_3TERM,
  ZAGIER_F1,
  H_REP_CONTOUR_DIVISOR,
  H_REP_CONTOUR_SINGLE,
  H_REP_CONTOUR_DOUBLE,
  H_REP_DIVISOR_SINGLE,
  LEMMA_4_1,
  WIGERT,
  KLOOSTERMAN,
  A_PAIRING,
  A_SCALING,
};

struct IdentityInfo {
  IdentityId id;
  const char* name;
  const char* parameter;  // "alpha", "x", "y", "a" or "z"
  double default_tol;
  std::vector<double> default_grid;
};

/// Every identity, in a fixed order.
const std::vector<IdentityInfo>& identities();
const IdentityInfo& info(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

struct RelationReport {
  IdentityId identity;
  std::vector<double> params;
  RealResult lhs;
  RealResult rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Residual check of one identity at one parameter. For the modular relations
/// the partner parameter is 1/param. pass <=> residual <= max(tol, 10 (e_l + e_r)).
RelationReport verify(IdentityId id, double param, double tol);

/// Runs every (identity, grid point) pair with up to `jobs` concurrent tasks.
/// Reports come back in identity order, then grid order.
std::vector<RelationReport> verify_grid(std::span<const IdentityId> ids, int jobs = 1);

}  // namespace herglotz::relations
