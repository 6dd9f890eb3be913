#include "herglotz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "herglotz/types.hpp"

namespace herglotz::quad {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1].
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  }
};

Panel kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  double resabs = std::abs(resk);
  double fv1[10];
  double fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double h = std::abs(half);
  const double value = resk * half;
  resabs *= h;
  resasc *= h;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * kEps * resabs;
  err = std::max(err, floor);
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

}  // namespace

QuadResult gauss_kronrod(const Integrand& f, std::span<const double> breakpoints, const AdaptiveOptions& opts) {
  if (breakpoints.size() < 2) throw DomainError("gauss_kronrod: need at least two breakpoints");
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  std::vector<Panel> finished;  // panels too narrow to split further
  QuadResult out;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      if (breakpoints[i] == breakpoints[i + 1]) continue;
      throw DomainError("gauss_kronrod: breakpoints must ascend");
    }
    Panel p = kronrod21(f, breakpoints[i], breakpoints[i + 1]);
    out.evaluations += 21;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  const auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (!heap.empty() && total_err > target() &&
         static_cast<int>(heap.size() + finished.size()) < opts.max_intervals) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 1e-15 * std::max(std::abs(worst.a), std::abs(worst.b))) {
      finished.push_back(worst);
      continue;
    }
    const Panel left = kronrod21(f, worst.a, mid);
    const Panel right = kronrod21(f, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum in panel order so the result does not depend on heap layout.
  std::vector<Panel> all = std::move(finished);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  double err = 0.0;
  for (const Panel& p : all) {
    value += p.value;
    err += p.error;
  }
  out.value = value;
  out.error_estimate = err + 4.0 * kEps * std::abs(value);
  out.intervals = static_cast<int>(all.size());
  out.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return out;
}

QuadResult gauss_kronrod(const Integrand& f, double a, double b, const AdaptiveOptions& opts) {
  const double bp[2] = {a, b};
  return gauss_kronrod(f, bp, opts);
}

std::vector<double> graded_breakpoints(double a, double b, int levels) {
  std::vector<double> bp;
  bp.reserve(levels + 2);
  bp.push_back(a);
  for (int k = levels; k >= 1; --k) bp.push_back(a + (b - a) * std::ldexp(1.0, -k));
  bp.push_back(b);
  return bp;
}

QuadResult integrate_graded(const Integrand& f, double a, double b, int levels, const AdaptiveOptions& opts) {
  const std::vector<double> bp = graded_breakpoints(a, b, levels);
  return gauss_kronrod(f, bp, opts);
}

AlternatingResult cosine_integral_euler(const Integrand& f, double omega, double tol, int max_half_periods) {
  if (!(omega > 0.0)) throw DomainError("cosine_integral_euler: omega must be > 0");
  constexpr int kWindow = 20;
  constexpr int kWarmup = 4;
  const double half_period = std::numbers::pi / omega;
  const Integrand g = [&](double t) { return f(t) * std::cos(omega * t); };
  const AdaptiveOptions seg_opts{tol * 1e-3, 1e-14, 4000};

  AlternatingResult out;
  std::vector<double> partial;
  double running = 0.0;
  double quad_err = 0.0;
  double prev_accel = std::numeric_limits<double>::quiet_NaN();
  double prev_diff = std::numeric_limits<double>::infinity();
  std::vector<double> binom;

  for (int k = 0; k < max_half_periods; ++k) {
    const double lo = k == 0 ? 0.0 : (k - 0.5) * half_period;
    const double hi = (k + 0.5) * half_period;
    // Dyadic breakpoints resolve the O(1) scale of f inside long segments.
    std::vector<double> bp{lo};
    for (double p = 1.0; p < hi; p *= 2.0)
      if (p > lo) bp.push_back(p);
    bp.push_back(hi);
    const QuadResult seg = gauss_kronrod(g, bp, seg_opts);
    running += seg.value;
    quad_err += seg.error_estimate;
    partial.push_back(running);
    out.half_periods = k + 1;

    if (k < kWarmup) continue;
    const int L = std::min(k - 2, kWindow);
    binom.assign(L + 1, 1.0);
    for (int j = 1; j <= L; ++j) binom[j] = binom[j - 1] * (L - j + 1) / j;
    double accel = 0.0;
    for (int j = 0; j <= L; ++j) accel += binom[j] * partial[k - L + j];
    accel = std::ldexp(accel, -L);

    const double diff = std::abs(accel - prev_accel);
    if (diff < 0.25 * tol && prev_diff < 0.25 * tol) {
      out.value = accel;
      out.error_estimate = std::max(diff, prev_diff) + quad_err + 4.0 * kEps * std::abs(accel);
      return out;
    }
    prev_diff = diff;
    prev_accel = accel;
  }
  out.value = prev_accel;
  out.error_estimate = prev_diff + quad_err;
  out.converged = false;
  return out;
}

}  // namespace herglotz::quad
