#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

/// Exact non-negative rational used for every threshold in the pipeline.
///
/// Thresholds such as "alpha * n" are turned into integer requirements with
/// ceil_mul / floor_mul, so no floating-point rounding ever decides whether a
/// colour class is rich.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Accepts "p/q", an integer, or a plain decimal such as "0.125" (parsed exactly).
  static Ratio parse(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("Ratio: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      return Ratio(parse_int(text.substr(0, slash), fail), parse_int(text.substr(slash + 1), fail));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      const auto frac = text.substr(dot + 1);
      if (frac.size() > 15) fail();
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::int64_t whole = dot == 0 ? 0 : parse_int(text.substr(0, dot), fail);
      const std::int64_t part = frac.empty() ? 0 : parse_int(frac, fail);
      return Ratio(whole * den + part, den);
    }
    return Ratio(parse_int(text, fail));
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Ratio operator*(Ratio a, Ratio b) {
    return Ratio(checked(static_cast<__int128>(a.num_) * b.num_), checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend constexpr Ratio operator/(Ratio a, Ratio b) {
    return Ratio(checked(static_cast<__int128>(a.num_) * b.den_), checked(static_cast<__int128>(a.den_) * b.num_));
  }
  friend constexpr Ratio operator+(Ratio a, Ratio b) {
    return Ratio(checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_),
                 checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend constexpr Ratio operator-(Ratio a, Ratio b) {
    return Ratio(checked(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_),
                 checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend constexpr bool operator==(Ratio a, Ratio b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend constexpr bool operator<(Ratio a, Ratio b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend constexpr bool operator<=(Ratio a, Ratio b) { return !(b < a); }
  friend constexpr bool operator>(Ratio a, Ratio b) { return b < a; }
  friend constexpr bool operator>=(Ratio a, Ratio b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, Ratio r) { return os << r.str(); }

 private:
  template <typename Fail>
  static std::int64_t parse_int(std::string_view s, Fail fail) {
    if (s.empty()) fail();
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
      if (s.size() == 1) fail();
    }
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      if (v > (INT64_MAX - 9) / 10) fail();
      v = v * 10 + (s[i] - '0');
    }
    return negative ? -v : v;
  }

  static constexpr std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Ratio: overflow");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// ceil(r * n) computed exactly.
constexpr std::int64_t ceil_mul(Ratio r, std::int64_t n) {
  const __int128 p = static_cast<__int128>(r.num()) * n;
  const __int128 q = r.den();
  __int128 d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return static_cast<std::int64_t>(d);
}

/// floor(r * n) computed exactly.
constexpr std::int64_t floor_mul(Ratio r, std::int64_t n) {
  const __int128 p = static_cast<__int128>(r.num()) * n;
  const __int128 q = r.den();
  __int128 d = p / q;
  if (p % q != 0 && p < 0) --d;
  return static_cast<std::int64_t>(d);
}

}  // namespace rainbow
