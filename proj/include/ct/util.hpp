#ifndef CT_UTIL_HPP
#define CT_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace ct {

// Step/round/distance count that can be infinite. Infinity is a real
// sentinel, not a big number: comparisons and addition treat it explicitly.
struct Steps {
  int raw = -1;  // -1 encodes infinity

  constexpr Steps() = default;
  static constexpr Steps inf() { return Steps{}; }
  static constexpr Steps of(int v) {
    Steps s;
    s.raw = v;
    return s;
  }

  constexpr bool is_inf() const { return raw < 0; }
  constexpr bool is_finite() const { return raw >= 0; }
  constexpr int value() const {
    return raw;  // caller must check is_finite(); negative means misuse
  }

  friend constexpr bool operator==(Steps a, Steps b) { return a.raw == b.raw; }
  friend constexpr bool operator!=(Steps a, Steps b) { return a.raw != b.raw; }
  friend constexpr bool operator<(Steps a, Steps b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return a.raw < b.raw;
  }
  friend constexpr bool operator<=(Steps a, Steps b) { return a < b || a == b; }
  friend constexpr bool operator>(Steps a, Steps b) { return b < a; }
  friend constexpr bool operator>=(Steps a, Steps b) { return b <= a; }

  friend constexpr Steps operator+(Steps a, int d) {
    return a.is_inf() ? inf() : of(a.raw + d);
  }
  friend constexpr Steps operator+(int d, Steps a) { return a + d; }
  friend constexpr Steps operator+(Steps a, Steps b) {
    return (a.is_inf() || b.is_inf()) ? inf() : of(a.raw + b.raw);
  }

  std::string str() const { return is_inf() ? "inf" : std::to_string(raw); }
};

inline Steps min_steps(Steps a, Steps b) { return a < b ? a : b; }
inline Steps max_steps(Steps a, Steps b) { return a < b ? b : a; }

// floor(sqrt(x)) on integers.
inline int isqrt(int x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative value");
  int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<long long>(r) * r > x) --r;
  while (static_cast<long long>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

// ceil(sqrt(2*n) - 1/2): the smallest integer t with (2t+1)^2 >= 8n.
// Evaluated in exact integer arithmetic.
inline int path_throttling_formula(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  int t = 0;
  while (static_cast<long long>(2 * t + 1) * (2 * t + 1) < 8LL * n) ++t;
  return t;
}

// Binomial coefficients saturating at max(uint64).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t needed, std::uint64_t limit)
      : std::runtime_error("state budget exceeded: need " + std::to_string(needed) +
                           " states, limit " + std::to_string(limit)),
        needed_(needed),
        limit_(limit) {}
  std::uint64_t needed() const { return needed_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t needed_;
  std::uint64_t limit_;
};

// Worker count used by the subset/state enumerations. 1 = sequential.
int global_threads();
void set_global_threads(int t);

// Runs fn(lo, hi) over a partition of [0, total) on global_threads() threads.
// fn must only touch disjoint output slots per index range.
void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace ct

#endif
