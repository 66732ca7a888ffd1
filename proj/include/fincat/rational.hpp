#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fincat {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline constexpr i128 kI64Max = std::numeric_limits<std::int64_t>::max();
inline constexpr i128 kI64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace detail

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) == 1). Intermediates run in 128 bits; a
/// reduced result that does not fit back into 64 bits throws
/// std::overflow_error instead of rounding.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: integers are rationals
  Rat(std::int64_t n, std::int64_t d) { *this = normalized(n, d); }

  static Rat normalized(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > detail::kI64Max || n < detail::kI64Min || d > detail::kI64Max)
      throw std::overflow_error("Rat: reduced value does not fit in 64 bits");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return normalized(static_cast<detail::i128>(a.num_) * b.den_ +
                          static_cast<detail::i128>(b.num_) * a.den_,
                      static_cast<detail::i128>(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return normalized(static_cast<detail::i128>(a.num_) * b.den_ -
                          static_cast<detail::i128>(b.num_) * a.den_,
                      static_cast<detail::i128>(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return normalized(static_cast<detail::i128>(a.num_) * b.num_,
                      static_cast<detail::i128>(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    return normalized(static_cast<detail::i128>(a.num_) * b.den_,
                      static_cast<detail::i128>(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<detail::i128>(a.num_) * b.den_ <
           static_cast<detail::i128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// |a - b| <= eps. With eps == 0 this is exact equality.
inline bool approx_equal(const Rat& a, const Rat& b, const Rat& eps) {
  return (a - b).abs() <= eps;
}

namespace detail {

inline i128 pow10_i128(int k) {
  i128 r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace detail

/// Parses "p/q", an integer, or a (possibly scientific) decimal such as
/// "0.25" or "1e-9". Decimals are converted exactly; at most 18 significant
/// decimal digits of scale are supported.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto bad = [&] { throw std::invalid_argument("parse_rat: cannot parse '" + text + "'"); };

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      std::size_t pa = 0, pb = 0;
      std::int64_t n = std::stoll(text.substr(0, slash), &pa);
      std::int64_t d = std::stoll(text.substr(slash + 1), &pb);
      if (pa != slash || pb != text.size() - slash - 1) bad();
      return Rat(n, d);
    } catch (const std::invalid_argument&) {
      bad();
    }
  }

  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  detail::i128 mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool in_frac = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (in_frac) bad();
      in_frac = true;
    } else if (c >= '0' && c <= '9') {
      any_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > detail::kI64Max * 10) bad();
      if (in_frac) ++frac_digits;
    } else {
      break;
    }
  }
  if (!any_digit) bad();
  int exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    try {
      exponent = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      bad();
    }
    pos += used;
  }
  if (pos != text.size()) bad();

  int net = exponent - frac_digits;
  if (net > 18 || net < -18) throw std::invalid_argument("parse_rat: exponent out of range in '" + text + "'");
  detail::i128 n = neg ? -mantissa : mantissa;
  if (net >= 0) return Rat::normalized(n * detail::pow10_i128(net), 1);
  return Rat::normalized(n, detail::pow10_i128(-net));
}

/// Best rational approximation to x with denominator <= max_den, via the
/// continued-fraction walk. Used when instance files carry long decimals
/// and the run is in exact mode.
inline Rat approx_with_den_bound(const Rat& x, std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("approx_with_den_bound: bound must be >= 1");
  if (x.den() <= max_den) return x;
  using detail::i128;
  i128 p = x.num() < 0 ? -x.num() : x.num();
  i128 q = x.den();
  // Convergents h/k of the continued fraction of p/q.
  i128 h0 = 0, k0 = 1, h1 = 1, k1 = 0;
  while (q != 0) {
    i128 a = p / q;
    i128 h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) {
      // Best semiconvergent under the bound; then the closer of it and h1/k1.
      i128 t = (max_den - k0) / k1;
      i128 hs = t * h1 + h0, ks = t * k1 + k0;
      Rat best = Rat::normalized(h1, k1);
      Rat semi = ks > 0 ? Rat::normalized(hs, ks) : best;
      Rat ax = x.abs();
      Rat r = ((ax - semi).abs() < (ax - best).abs()) ? semi : best;
      return x.num() < 0 ? -r : r;
    }
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
    i128 r = p % q;
    p = q;
    q = r;
  }
  Rat r = Rat::normalized(h1, k1);
  return x.num() < 0 ? -r : r;
}

}  // namespace fincat
