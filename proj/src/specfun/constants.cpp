#include "herglotz/specfun.hpp"
#include "specfun/internal.hpp"

namespace herglotz::specfun {

const MathConstants& math_constants() {
  static const MathConstants constants = [] {
    MathConstants c{};
    c.euler_gamma = -detail::digamma_real(1.0).value;
    c.stieltjes_gamma1 = stieltjes_gamma1().value;
    c.pi = kPi;
    c.log_2pi = kLog2Pi;
    return c;
  }();
  return constants;
}

}  // namespace herglotz::specfun
