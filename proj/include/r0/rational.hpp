#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace r0 {

// Exact rational with canonical form (den > 0, gcd(num, den) = 1).
// All membership grades and thresholds in this project are Rats; every
// comparison that the theory pivots on (strict vs. non-strict at breakpoints
// like mu(x) + t + k = 1) is decided exactly, never in floating point.
struct Rat {
  long long num{0};
  long long den{1};

  constexpr Rat() = default;
  Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  constexpr Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q", integers, and decimal literals ("0.35" -> 7/20).
  static std::optional<Rat> parse(std::string_view text);
};

// Grades are rationals confined to [0,1].
using Grade = Rat;

inline bool is_grade(const Rat& r) { return r >= Rat(0) && r <= Rat(1); }

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// The relation parameter k of the generalized quasi-coincidence x_t q_k mu
// (mu(x) + t + k > 1), together with its derived threshold (1-k)/2.
struct KParam {
  Rat k;

  explicit KParam(const Rat& value) : k(value) {
    if (k < Rat(0) || k >= Rat(1)) throw std::domain_error("k must lie in [0,1)");
  }
  static KParam zero() { return KParam(Rat(0)); }

  Rat half() const { return (Rat(1) - k) / Rat(2); }

  friend bool operator==(const KParam& a, const KParam& b) { return a.k == b.k; }
};

}  // namespace r0
