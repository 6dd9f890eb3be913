#include "herglotz/registry.hpp"

#include <cmath>

#include "herglotz/contour.hpp"
#include "herglotz/quadreps.hpp"
#include "herglotz/relations.hpp"
#include "herglotz/series.hpp"
#include "herglotz/specfun.hpp"

namespace herglotz::registry {

namespace {

PrecisionBudget budget(double tol) { return PrecisionBudget{}.with_tolerance(tol); }

quadreps::QuadControl ctl(double tol) { return {tol, 0}; }

}  // namespace

const std::vector<FunctionEntry>& functions() {
  using namespace herglotz;
  static const std::vector<FunctionEntry> table = {
      {"digamma", "psi(x)", 1e-8, [](double x, double t) { return specfun::digamma(x, budget(t)); }},
      {"psi1", "Deninger psi_1(x)", 1e-8, [](double x, double t) { return specfun::psi1(x, budget(t)); }},
      {"zeta", "Riemann zeta(x), x != 1", 1e-8, [](double x, double t) { return specfun::riemann_zeta(x, budget(t)); }},
      {"phi0", "psi(x) + 1/(2x) - log x", 1e-8, [](double x, double) { return series::phi0(x); }},
      {"phi1", "psi_1(x) + log(x)/(2x) - log^2(x)/2", 1e-8, [](double x, double) { return series::phi1(x); }},
      {"sum_phi0", "sum phi0(nx)", 1e-8, [](double x, double t) { return series::sum_phi0(x, t); }},
      {"sum_phi1", "sum phi1(nx)", 1e-8, [](double x, double t) { return series::sum_phi1(x, t); }},
      {"sum_phi0_logn", "sum phi0(nx) log n", 1e-8, [](double x, double t) { return series::sum_phi0_logn(x, t); }},
      {"sum_phi0_lognx", "sum phi0(nx) log(nx)", 1e-8, [](double x, double t) { return series::sum_phi0_lognx(x, t); }},
      {"phi_log", "sum phi0(nx) log(n sqrt x)", 1e-8, [](double x, double t) { return series::phi_log(x, t); }},
      {"F", "Herglotz-Zagier F(x)", 1e-8, [](double x, double t) { return series::herglotz_F(x, t); }},
      {"H.contour", "H(x) on Re w = 1/2", 1e-8, [](double x, double t) { return contour::H_contour(x, t); }},
      {"H.divisor", "H(y) by the divisor series", 1e-8,
       [](double x, double t) { return quadreps::H_divisor_series(x, ctl(t)); }},
      {"H.single", "H(y) by the single integral", 1e-8,
       [](double x, double t) { return quadreps::H_single_integral(x, ctl(t)); }},
      {"H.double", "H(y) by the double integral", 1e-4,
       [](double x, double t) { return quadreps::H_double_integral(x, ctl(t)); }},
      {"J", "J(x) on Re w = 1/2", 1e-8, [](double x, double t) { return contour::J_contour(x, t); }},
      {"kloosterman", "contour form of psi(x+1) - log x", 1e-8,
       [](double x, double t) { return contour::kloosterman(x, t); }},
      {"A.direct", "A(z) by direct quadrature", 1e-8, [](double x, double t) { return quadreps::A_direct(x, ctl(t)); }},
      {"A.mellin", "A(z) by inverse Mellin", 1e-8, [](double x, double t) { return contour::A_inverse_mellin(x, t); }},
      {"G", "G(x)", 1e-8, [](double x, double t) { return relations::G_fn(x, t); }},
      {"Fcal", "script F(x)", 1e-8, [](double x, double t) { return relations::F_fn(x, t); }},
      {"F1", "script F_1(x)", 1e-8, [](double x, double t) { return relations::F1_fn(x, t); }},
      {"wigert", "cosine integral of 1/(e^t-1) - 1/t", 1e-8,
       [](double x, double t) { return quadreps::wigert(x, t).first; }},
      {"wigert.closed", "log a - Re psi(ia)", 1e-8,
       [](double x, double) {
         require_positive(x, "wigert.closed");
         return quadreps::wigert_closed_form(x);
       }},
      {"lemma41.lhs", "int t log t/((1+t^2)(e^{xt}-1)) dt", 1e-8,
       [](double x, double t) { return quadreps::lemma41_lhs(x, ctl(t)); }},
      {"lemma41.rhs", "Gamma-zeta inverse Mellin integral", 1e-8,
       [](double x, double t) { return contour::lemma41_rhs(x, t); }},
      {"ramanujan.bracket", "sqrt x (S0(x) + (gamma - log 2 pi x)/(2x))", 1e-8,
       [](double x, double t) { return relations::ramanujan_bracket(x, t); }},
  };
  return table;
}

const FunctionEntry* find(std::string_view name) {
  for (const FunctionEntry& f : functions())
    if (name == f.name) return &f;
  return nullptr;
}

}  // namespace herglotz::registry
