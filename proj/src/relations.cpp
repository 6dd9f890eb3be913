#include "herglotz/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "herglotz/contour.hpp"
#include "herglotz/quadreps.hpp"
#include "herglotz/series.hpp"
#include "herglotz/specfun.hpp"

namespace herglotz::relations {

namespace {

using specfun::kLog2Pi;
using specfun::kPi;

// Components are evaluated well inside the identity tolerance so the residual
// measures the identity, not the truncation. Composites split their budget
// four ways; the floor keeps each part above what the long direct sums can
// certify in double precision.
double component_tol(double tol) { return std::clamp(1e-3 * tol, 4e-11, 1e-8); }

RealResult scaled(const RealResult& r, double s) { return {s * r.value, std::abs(s) * r.error_estimate}; }

RealResult sum(std::initializer_list<RealResult> parts) {
  double v = 0.0;
  double e = 0.0;
  double mag = 0.0;
  for (const RealResult& p : parts) {
    v += p.value;
    e += p.error_estimate;
    mag += std::abs(p.value);
  }
  return {v, e + 2.0 * kEps * mag};
}

RealResult exact(double v) { return {v, kEps * std::abs(v)}; }

double euler_gamma() { return specfun::math_constants().euler_gamma; }

RelationReport make_report(IdentityId id, std::vector<double> params, RealResult lhs, RealResult rhs, double tol) {
  RelationReport r{id, std::move(params), lhs, rhs, 0.0, tol, false};
  r.residual = std::abs(lhs.value - rhs.value);
  r.pass = r.residual <= std::max(tol, 10.0 * (lhs.error_estimate + rhs.error_estimate));
  return r;
}

template <class Fn>
RelationReport modular(IdentityId id, double alpha, double tol, Fn f, bool sqrt_weight) {
  require_positive(alpha, info(id).name);
  const double beta = 1.0 / alpha;
  RealResult l = f(alpha);
  RealResult r = f(beta);
  if (sqrt_weight) {
    l = scaled(l, std::sqrt(alpha));
    r = scaled(r, std::sqrt(beta));
  }
  return make_report(id, {alpha, beta}, l, r, tol);
}

}  // namespace

const char* hrep_name(HRep r) {
  switch (r) {
    case HRep::contour: return "contour";
    case HRep::divisor: return "divisor";
    case HRep::single: return "single";
    case HRep::double_integral: return "double";
  }
  return "?";
}

RealResult H_value(double y, double tol, HRep rep) {
  switch (rep) {
    case HRep::contour: return contour::H_contour(y, tol);
    case HRep::divisor: return quadreps::H_divisor_series(y, {tol, 0});
    case HRep::single: return quadreps::H_single_integral(y, {tol, 0});
    case HRep::double_integral:
      return quadreps::H_double_integral(y, {std::max(tol, quadreps::kMinDoubleIntegralTol), 0});
  }
  throw DomainError("H_value: unknown representation");
}

RealResult G_fn(double x, double tol, HRep rep) {
  require_positive(x, "G");
  const double t = 0.25 * tol;
  const double g = euler_gamma();
  const double lx = std::log(x);
  return sum({series::phi_log(x, t), scaled(H_value(x, t, rep), -0.5),
              exact(-(12.0 * g * g - 5.0 * kPi * kPi) / (48.0 * x)),
              exact((g * lx + kLog2Pi * (kLog2Pi + lx)) / (4.0 * x))});
}

RealResult F_fn(double x, double tol, HRep rep) {
  require_positive(x, "Fcal");
  const double t = 0.25 * tol;
  return sum({series::sum_phi1(x, t), scaled(series::sum_phi0_lognx(x, t), -1.0),
              scaled(H_value(x, t, rep), 0.5), exact(-kPi * kPi / (12.0 * x))});
}

RealResult F1_fn(double x, double tol) {
  require_positive(x, "F1");
  const double t = 0.25 * tol;
  const double g = euler_gamma();
  const double lx = std::log(x);
  const double rx = std::sqrt(x);
  const RealResult a = sum({series::sum_phi1(x, t),
                            exact((kLog2Pi * kLog2Pi - (g - lx) * (g - lx)) / (4.0 * x) + kPi * kPi / (48.0 * x))});
  const RealResult b = sum({series::sum_phi0(x, t), exact((g - kLog2Pi - lx) / (2.0 * x))});
  return sum({scaled(a, rx), scaled(b, -0.5 * rx * lx)});
}

RealResult ramanujan_bracket(double x, double tol) {
  require_positive(x, "ramanujan_bracket");
  const RealResult b = sum({series::sum_phi0(x, tol), exact((euler_gamma() - kLog2Pi - std::log(x)) / (2.0 * x))});
  return scaled(b, std::sqrt(x));
}

RealResult herglotz_F1_closed_form() {
  const auto& c = specfun::math_constants();
  const RealResult g1 = specfun::stieltjes_gamma1();
  return sum({exact(-0.5 * c.euler_gamma * c.euler_gamma), exact(-kPi * kPi / 12.0), scaled(g1, -1.0)});
}

const std::vector<IdentityInfo>& identities() {
  static const std::vector<IdentityInfo> table = {
      {IdentityId::THM_1_1, "thm1.1", "alpha", 1e-6, {0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0}},
      {IdentityId::THM_3_2, "thm3.2", "alpha", 1e-6, {0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0}},
      {IdentityId::LEMMA_3_1, "lemma3.1", "alpha", 1e-6, {0.5, 0.8, 2.0, 3.0}},
      {IdentityId::RAMANUJAN_W126, "ramanujan.w126", "alpha", 1e-8, {0.5, 2.0, 5.0}},
      {IdentityId::F1_K1, "f1.k1", "alpha", 1e-6, {0.5, 2.0, 3.0}},
      {IdentityId::ZAGIER_2TERM, "zagier.2term", "x", 1e-8, {0.5, 2.0, 3.0}},
      {IdentityId::ZAGIER_3TERM, "zagier.3term", "x", 1e-8, {0.5, 1.0, 2.0}},
      {IdentityId::ZAGIER_F1, "zagier.f1", "x", 1e-8, {1.0}},
      {IdentityId::H_REP_CONTOUR_DIVISOR, "hrep.contour-divisor", "y", 1e-6, {0.5, 1.0, 2.0}},
      {IdentityId::H_REP_CONTOUR_SINGLE, "hrep.contour-single", "y", 1e-6, {0.5, 1.0, 2.0}},
      {IdentityId::H_REP_CONTOUR_DOUBLE, "hrep.contour-double", "y", 1e-4, {1.0}},
      {IdentityId::H_REP_DIVISOR_SINGLE, "hrep.divisor-single", "y", 1e-6, {0.5, 1.0, 2.0}},
      {IdentityId::LEMMA_4_1, "lemma4.1", "x", 1e-8, {1.0, 2.0 * kPi, 10.0}},
      {IdentityId::WIGERT, "wigert", "a", 1e-8, {0.5, 1.0, 3.0, 10.0}},
      {IdentityId::KLOOSTERMAN, "kloosterman", "x", 1e-10, {0.3, 1.0, 5.0}},
      {IdentityId::A_PAIRING, "a.pairing", "z", 1e-6, {1.0, 2.0}},
      {IdentityId::A_SCALING, "a.scaling", "z", 1e-8, {0.5, 4.0}},
  };
  return table;
}

const IdentityInfo& info(IdentityId id) {
  for (const IdentityInfo& i : identities())
    if (i.id == id) return i;
  throw DomainError("unknown identity");
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const IdentityInfo& i : identities())
    if (name == i.name) return i.id;
  return std::nullopt;
}

RelationReport verify(IdentityId id, double p, double tol) {
  require_tolerance(tol, "verify");
  if (!std::isfinite(p)) throw DomainError("verify: parameter must be finite");
  const double c = component_tol(tol);
  switch (id) {
    case IdentityId::THM_1_1:
      return modular(id, p, tol, [c](double x) { return G_fn(x, c); }, true);
    case IdentityId::THM_3_2:
      return modular(id, p, tol, [c](double x) { return F_fn(x, c); }, true);
    case IdentityId::LEMMA_3_1:
      return modular(id, p, tol, [c](double x) { return contour::J_contour(x, c); }, true);
    case IdentityId::RAMANUJAN_W126:
      return modular(id, p, tol, [c](double x) { return ramanujan_bracket(x, c); }, false);
    case IdentityId::F1_K1:
      return modular(id, p, tol, [c](double x) { return F1_fn(x, c); }, false);
    case IdentityId::ZAGIER_2TERM: {
      require_positive(p, "zagier.2term");
      const double lx = std::log(p);
      const RealResult lhs = sum({series::herglotz_F(p, c), series::herglotz_F(1.0 / p, c)});
      const RealResult rhs = sum({scaled(series::herglotz_F(1.0, c), 2.0), exact(0.5 * lx * lx),
                                  exact(-kPi * kPi * (p - 1.0) * (p - 1.0) / (6.0 * p))});
      return make_report(id, {p}, lhs, rhs, tol);
    }
    case IdentityId::ZAGIER_3TERM: {
      require_positive(p, "zagier.3term");
      const RealResult lhs = sum({series::herglotz_F(p, c), scaled(series::herglotz_F(p + 1.0, c), -1.0),
                                  scaled(series::herglotz_F(p / (p + 1.0), c), -1.0)});
      const RealResult rhs = sum({scaled(series::herglotz_F(1.0, c), -1.0), specfun::dilog(1.0 / (1.0 + p))});
      return make_report(id, {p}, lhs, rhs, tol);
    }
    case IdentityId::ZAGIER_F1:
      return make_report(id, {1.0}, series::herglotz_F(1.0, c), herglotz_F1_closed_form(), tol);
    case IdentityId::H_REP_CONTOUR_DIVISOR:
      return make_report(id, {p}, H_value(p, c, HRep::contour), H_value(p, c, HRep::divisor), tol);
    case IdentityId::H_REP_CONTOUR_SINGLE:
      return make_report(id, {p}, H_value(p, c, HRep::contour), H_value(p, c, HRep::single), tol);
    case IdentityId::H_REP_CONTOUR_DOUBLE:
      return make_report(id, {p}, H_value(p, c, HRep::contour), H_value(p, 1e-2 * tol, HRep::double_integral), tol);
    case IdentityId::H_REP_DIVISOR_SINGLE:
      return make_report(id, {p}, H_value(p, c, HRep::divisor), H_value(p, c, HRep::single), tol);
    case IdentityId::LEMMA_4_1:
      return make_report(id, {p}, quadreps::lemma41_lhs(p, {c, 0}), contour::lemma41_rhs(p, c), tol);
    case IdentityId::WIGERT: {
      const auto [lhs, rhs] = quadreps::wigert(p, c);
      return make_report(id, {p}, lhs, rhs, tol);
    }
    case IdentityId::KLOOSTERMAN: {
      require_positive(p, "kloosterman");
      const RealResult psi = specfun::digamma(p + 1.0);
      const RealResult rhs = sum({psi, exact(-std::log(p))});
      return make_report(id, {p}, contour::kloosterman(p, c), rhs, tol);
    }
    case IdentityId::A_PAIRING:
      return make_report(id, {p}, quadreps::A_direct(p, {c, 0}), contour::A_inverse_mellin(p, c), tol);
    case IdentityId::A_SCALING: {
      require_positive(p, "a.scaling");
      const RealResult lhs = quadreps::A_direct(p, {c, 0});
      const RealResult rhs = scaled(quadreps::A_direct(1.0 / p, {c, 0}), 1.0 / p);
      return make_report(id, {p, 1.0 / p}, lhs, rhs, tol);
    }
  }
  throw DomainError("verify: unknown identity");
}

std::vector<RelationReport> verify_grid(std::span<const IdentityId> ids, int jobs) {
  struct Task {
    IdentityId id;
    double param;
    double tol;
  };
  std::vector<Task> tasks;
  for (IdentityId id : ids) {
    const IdentityInfo& i = info(id);
    for (double p : i.default_grid) tasks.push_back({id, p, i.default_tol});
  }
  std::vector<std::optional<RelationReport>> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        out[k] = verify(tasks[k].id, tasks[k].param, tasks[k].tol);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::clamp(jobs, 1, 64);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<RelationReport> reports;
  reports.reserve(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    reports.push_back(std::move(*out[k]));
  }
  return reports;
}

}  // namespace herglotz::relations
