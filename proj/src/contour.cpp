#include "herglotz/contour.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "herglotz/quadrature.hpp"
#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::contour {

namespace {

using specfun::kPi;
namespace sd = specfun::detail;

constexpr double kPoleClearance = 0.05;
constexpr double kZetaTol = 1e-15;
constexpr double kZetaGrowthConstant = 3.0;
// Every kernel decays like e^{-pi t}: 1/sin(pi w), or Gamma(w) csc(pi w/2).
constexpr double kDecayRate = kPi;

struct Strip {
  double lo;
  double hi;
};

Strip legal_strip(KernelId k) {
  return k == KernelId::LEMMA41_RHS ? Strip{1.0, 2.0} : Strip{0.0, 1.0};
}

complex zeta(complex w) { return sd::zeta_core(w, kZetaTol).value; }

// Growth envelopes for t >= 2.
double zeta_envelope(double sigma, double t) {
  if (sigma >= 1.1) return specfun::riemann_zeta(sigma).value;
  const double expo = std::max({0.0, 0.5 * (1.0 - sigma), 0.5 - sigma});
  return kZetaGrowthConstant * std::pow(1.0 + t, expo) * std::log(std::exp(1.0) + t);
}

double csc_envelope(double a, double t) {  // |csc(a(c+it))| for a > 0
  const double q = std::exp(-a * t);
  return 2.0 * q / (1.0 - q * q);
}

double cot_envelope(double a, double t) {
  const double q = std::exp(-2.0 * a * t);
  return (1.0 + q) / (1.0 - q);
}

double kernel_envelope(KernelId k, double c, double t) {
  switch (k) {
    case KernelId::H_KERNEL:
      return kPi * kPi * zeta_envelope(c, t) * zeta_envelope(1.0 - c, t) * cot_envelope(0.5 * kPi, t) *
             csc_envelope(kPi, t);
    case KernelId::J_KERNEL:
      return kPi * zeta_envelope(c, t) * zeta_envelope(1.0 - c, t) * csc_envelope(kPi, t) *
             (std::log(2.0 + t) + kPi + 0.5 * kPi * cot_envelope(0.5 * kPi, t));
    case KernelId::KLOOSTERMAN:
      return kPi * zeta_envelope(1.0 - c, t) * csc_envelope(kPi, t);
    case KernelId::LEMMA41_RHS: {
      const double gamma_env = std::sqrt(2.0 * kPi) * std::pow(1.0 + t, c - 0.5) * std::exp(-0.5 * kPi * t + 1.0 / 6.0);
      return 0.25 * kPi * kPi * gamma_env * zeta_envelope(c, t) * cot_envelope(0.5 * kPi, t) *
             csc_envelope(0.5 * kPi, t);
    }
    case KernelId::A_MELLIN:
      return kPi * zeta_envelope(c, t) * zeta_envelope(1.0 - c, t) * csc_envelope(kPi, t);
  }
  return 0.0;
}

RealResult checked(const RealResult& r, double tol, const char* what) {
  if (!(r.error_estimate <= tol * std::max(1.0, std::abs(r.value))))
    throw BudgetExceeded(std::string(what) + ": tolerance unreachable");
  return r;
}

RealResult on_default_line(KernelId k, double x, double tol, const char* what) {
  require_positive(x, what);
  require_tolerance(tol, what);
  return checked(line_integral(k, x, default_spec(k), tol), tol, what);
}

}  // namespace

const char* kernel_name(KernelId k) {
  switch (k) {
    case KernelId::H_KERNEL: return "H";
    case KernelId::J_KERNEL: return "J";
    case KernelId::KLOOSTERMAN: return "kloosterman";
    case KernelId::LEMMA41_RHS: return "lemma41";
    case KernelId::A_MELLIN: return "A";
  }
  return "?";
}

ContourSpec default_spec(KernelId kernel) {
  ContourSpec s;
  if (kernel == KernelId::LEMMA41_RHS) {
    s.abscissa_c = 1.5;
    s.height_T = 60.0;
    s.panel_count = 59;
  }
  return s;
}

complex kernel_value(KernelId k, complex w) {
  switch (k) {
    case KernelId::H_KERNEL:
      return kPi * kPi * zeta(w) * zeta(1.0 - w) * sd::cot_stable(0.5 * kPi * w) * sd::csc_stable(kPi * w);
    case KernelId::J_KERNEL: {
      const complex psi = sd::digamma_upper(w).value;
      return kPi * zeta(w) * zeta(1.0 - w) * sd::csc_stable(kPi * w) * (psi + 0.5 * kPi * sd::cot_stable(0.5 * kPi * w));
    }
    case KernelId::KLOOSTERMAN:
      return -kPi * zeta(1.0 - w) * sd::csc_stable(kPi * w);
    case KernelId::LEMMA41_RHS:
      return 0.25 * kPi * kPi * specfun::gamma(w) * zeta(w) * sd::cot_stable(0.5 * kPi * w) *
             sd::csc_stable(0.5 * kPi * w);
    case KernelId::A_MELLIN:
      return kPi * zeta(w) * zeta(1.0 - w) * sd::csc_stable(kPi * w);
  }
  return {};
}

double truncation_bound(KernelId kernel, double x, double c, double T) {
  // P(t) e^{-rt} with P slowly varying: int_T^inf <= 2 P(T) e^{-rT} / r.
  const double t = std::max(T, 2.0);
  return std::pow(x, -c) / kPi * 2.0 * kernel_envelope(kernel, c, t) / kDecayRate;
}

ContourSpec certify(KernelId kernel, double x, ContourSpec spec, double tol) {
  require_positive(x, "contour");
  require_tolerance(tol, "contour");
  const Strip strip = legal_strip(kernel);
  const double c = spec.abscissa_c;
  if (!(c > strip.lo && c < strip.hi))
    throw DomainError(std::string("contour: abscissa outside the strip of kernel ") + kernel_name(kernel));
  if (c - strip.lo < kPoleClearance || strip.hi - c < kPoleClearance)
    throw PoleTooClose("contour: abscissa within 0.05 of a pole");
  if (!(spec.height_T > 1.0) || !std::isfinite(spec.height_T)) throw DomainError("contour: height must be > 1");
  if (spec.panel_count < 1) throw DomainError("contour: panel_count must be positive");
  spec.decay_rate = kDecayRate;
  spec.truncation_bound = truncation_bound(kernel, x, c, spec.height_T);
  if (!(spec.truncation_bound <= 0.5 * tol))
    throw TruncationUncertified("contour: truncation bound exceeds tol/2; raise the height");
  return spec;
}

RealResult line_integral(KernelId kernel, double x, const ContourSpec& requested, double tol) {
  const ContourSpec spec = certify(kernel, x, requested, tol);
  const double c = spec.abscissa_c;
  const double lx = std::log(x);
  const quad::Integrand f = [&](double t) {
    const complex w(c, t);
    return (kernel_value(kernel, w) * std::exp(-w * lx)).real() / kPi;
  };
  std::vector<double> bp{0.0, 0.25, 0.5, 1.0};
  for (int k = 1; k <= spec.panel_count; ++k)
    bp.push_back(1.0 + (spec.height_T - 1.0) * static_cast<double>(k) / spec.panel_count);
  const quad::QuadResult q = quad::gauss_kronrod(f, bp, {0.25 * tol, 0.0, 20'000});
  return {q.value, q.error_estimate + spec.truncation_bound};
}

RealResult H_contour(double x, double tol) { return on_default_line(KernelId::H_KERNEL, x, tol, "H_contour"); }
RealResult J_contour(double x, double tol) { return on_default_line(KernelId::J_KERNEL, x, tol, "J_contour"); }
RealResult kloosterman(double x, double tol) { return on_default_line(KernelId::KLOOSTERMAN, x, tol, "kloosterman"); }
RealResult lemma41_rhs(double x, double tol) { return on_default_line(KernelId::LEMMA41_RHS, x, tol, "lemma41_rhs"); }
RealResult A_inverse_mellin(double z, double tol) {
  return on_default_line(KernelId::A_MELLIN, z, tol, "A_inverse_mellin");
}

}  // namespace herglotz::contour
