#include <string>

#include "herglotz/specfun.hpp"

namespace herglotz::specfun {

namespace {

constexpr int kMaxBernoulliIndex = 60;
constexpr int kMaxStirling = 60;
constexpr std::int64_t kMaxSieve = 100'000'000;

// B_0..B_60 from sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<BigRational> build_bernoulli() {
  std::vector<BigRational> b(kMaxBernoulliIndex + 1);
  b[0] = 1;
  for (int n = 1; n <= kMaxBernoulliIndex; ++n) {
    BigRational acc = 0;
    BigInt binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += BigRational(binom) * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[n] = -acc / BigRational(n + 1);
  }
  return b;
}

const std::vector<BigRational>& bernoulli_all() {
  static const std::vector<BigRational> table = build_bernoulli();
  return table;
}

std::vector<std::vector<BigInt>> build_stirling() {
  std::vector<std::vector<BigInt>> s(kMaxStirling + 1, std::vector<BigInt>(kMaxStirling + 1));
  s[0][0] = 1;
  for (int n = 0; n < kMaxStirling; ++n) {
    for (int k = 1; k <= n + 1; ++k) s[n + 1][k] = s[n][k - 1] - BigInt(n) * s[n][k];
  }
  return s;
}

}  // namespace

BigRational bernoulli_even(int m) {
  if (m < 1 || 2 * m > kMaxBernoulliIndex)
    throw RangeError("bernoulli_even: m must be in [1, 30], got " + std::to_string(m));
  return bernoulli_all()[2 * m];
}

const std::array<double, 31>& bernoulli_even_table() {
  static const std::array<double, 31> table = [] {
    std::array<double, 31> t{};
    const auto& b = bernoulli_all();
    for (int m = 0; m <= 30; ++m) t[m] = static_cast<double>(b[2 * m]);
    return t;
  }();
  return table;
}

BigInt stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxStirling)
    throw RangeError("stirling_first: need 0 <= k <= n <= 60");
  static const std::vector<std::vector<BigInt>> table = build_stirling();
  return table[n][k];
}

std::vector<std::uint32_t> divisor_count_sieve(std::int64_t N) {
  if (N < 1 || N > kMaxSieve) throw RangeError("divisor_count_sieve: N must be in [1, 1e8]");
  std::vector<std::uint32_t> d(static_cast<std::size_t>(N) + 1, 0);
  for (std::int64_t k = 1; k <= N; ++k)
    for (std::int64_t m = k; m <= N; m += k) ++d[static_cast<std::size_t>(m)];
  return d;
}

}  // namespace herglotz::specfun
