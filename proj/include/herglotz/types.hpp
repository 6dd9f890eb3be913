#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace herglotz {

using complex = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// A value paired with an estimate of its absolute error.
///
/// Every analytic evaluation in the library returns one of these. The error
/// estimate is non-negative and finite whenever the value is finite; it is
/// meant as a bound, so composite quantities add the estimates of their parts.
template <class T>
struct EvalResult {
  T value{};
  double error_estimate = 0.0;
};

using RealResult = EvalResult<double>;
using ComplexResult = EvalResult<complex>;

/// Caller's accuracy request, threaded through the evaluators.
struct PrecisionBudget {
  /// Double-width arithmetic cannot honour anything tighter.
  static constexpr double kToleranceFloor = 1e-14;

  double target_abs_tol = 1e-12;
  std::int64_t max_series_terms = 10'000'000;
  double max_contour_height = 200.0;
  int max_quad_subdivisions = 20'000;

  /// Throws DomainError when a field is out of range.
  void validate() const;

  /// Copy with a different tolerance, clamped up to the floor.
  [[nodiscard]] PrecisionBudget with_tolerance(double tol) const;
};

enum class ErrorCode {
  Domain,
  Pole,
  BudgetExceeded,
  Range,
  PoleTooClose,
  TruncationUncertified,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};
struct PoleError : Error {
  explicit PoleError(const std::string& what) : Error(ErrorCode::Pole, what) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(ErrorCode::BudgetExceeded, what) {}
};
struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(ErrorCode::Range, what) {}
};
struct PoleTooClose : Error {
  explicit PoleTooClose(const std::string& what) : Error(ErrorCode::PoleTooClose, what) {}
};
struct TruncationUncertified : Error {
  explicit TruncationUncertified(const std::string& what)
      : Error(ErrorCode::TruncationUncertified, what) {}
};

inline void PrecisionBudget::validate() const {
  if (!(target_abs_tol >= kToleranceFloor) || !std::isfinite(target_abs_tol))
    throw DomainError("target_abs_tol must be finite and >= 1e-14");
  if (max_series_terms <= 0) throw DomainError("max_series_terms must be positive");
  if (!(max_contour_height > 0.0)) throw DomainError("max_contour_height must be positive");
  if (max_quad_subdivisions <= 0) throw DomainError("max_quad_subdivisions must be positive");
}

inline PrecisionBudget PrecisionBudget::with_tolerance(double tol) const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive and finite");
  PrecisionBudget b = *this;
  b.target_abs_tol = tol < kToleranceFloor ? kToleranceFloor : tol;
  return b;
}

/// Rejects a tolerance below the double-width floor or a non-positive one.
inline void require_tolerance(double tol, const char* what) {
  if (!(tol >= PrecisionBudget::kToleranceFloor) || !std::isfinite(tol))
    throw DomainError(std::string(what) + ": tolerance must be >= 1e-14");
}

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be > 0");
}

}  // namespace herglotz
