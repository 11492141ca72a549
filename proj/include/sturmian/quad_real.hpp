#ifndef STURMIAN_QUAD_REAL_HPP
#define STURMIAN_QUAD_REAL_HPP

// Exact arithmetic in real quadratic fields Q(sqrt(d)).
//
// A QuadReal holds (p + q*sqrt(d)) / r with big-integer components. The
// representation is canonical: r > 0, d square-free, gcd(p, q, r) = 1 and
// q = 0 forces d = 0. Arithmetic is closed on values sharing a radicand;
// combining two irrationals of different radicands throws
// mixed_radicand_error. compare_across_fields() is the one routine that
// orders values living in different fields.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "sturmian/errors.hpp"

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt quotient = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --quotient;
  return quotient;
}

inline BigInt pow10(unsigned exponent) {
  return boost::multiprecision::pow(BigInt(10), exponent);
}

// Sign of a + b*sqrt(d) for d >= 0 not a perfect square (or b = 0).
inline int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d) {
  const int sa = a.sign();
  const int sb = d == 0 ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// n = root^2 * free_part with free_part square-free.
struct SquareSplit {
  BigInt root;
  BigInt free_part;
};

template <class Int>
SquareSplit split_square_by_trial(Int n) {
  BigInt root = 1;
  BigInt free_part = 1;
  auto take = [&](Int prime) {
    int multiplicity = 0;
    while (n % prime == 0) {
      n /= prime;
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) root *= prime;
    if (multiplicity % 2 == 1) free_part *= prime;
  };
  take(Int(2));
  // Once prime^3 > n the cofactor has at most two prime factors.
  for (Int prime = 3; prime * prime * prime <= n; prime += 2) take(prime);
  if (n > 1) {
    const BigInt rest(n);
    const BigInt s = boost::multiprecision::sqrt(rest);
    if (s * s == rest) {
      root *= s;
    } else {
      free_part *= rest;
    }
  }
  return {root, free_part};
}

inline SquareSplit split_square(const BigInt& n) {
  static std::mutex mutex;
  static std::map<BigInt, SquareSplit> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  SquareSplit split =
      n <= BigInt(std::uint64_t{1} << 62)
          ? split_square_by_trial(n.convert_to<std::uint64_t>())
          : split_square_by_trial(n);
  std::lock_guard lock(mutex);
  cache.emplace(n, split);
  return split;
}

}  // namespace detail

class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(long long n) : p_(n) {}  // NOLINT(google-explicit-constructor)
  QuadReal(const BigInt& n) : p_(n) {}  // NOLINT(google-explicit-constructor)

  static QuadReal from_rational(const BigRational& x) {
    return make(numerator(x), 0, 0, denominator(x));
  }

  static QuadReal rational(const BigInt& num, const BigInt& den) {
    return make(num, 0, 0, den);
  }

  /// sqrt(n) for n >= 0; perfect squares collapse to integers.
  static QuadReal sqrt(const BigInt& n) {
    if (n < 0) throw domain_error("square root of a negative integer");
    return make(0, 1, n, 1);
  }

  /// (p + q*sqrt(d)) / r in canonical form. d need not be square-free.
  static QuadReal make(BigInt p, BigInt q, BigInt d, BigInt r) {
    if (r == 0) throw domain_error("QuadReal with zero denominator");
    if (d < 0) throw domain_error("QuadReal with negative radicand");
    if (r < 0) {
      p = -p;
      q = -q;
      r = -r;
    }
    if (q == 0 || d == 0) {
      q = 0;
      d = 0;
    } else {
      const auto split = detail::split_square(d);
      q *= split.root;
      d = split.free_part;
      if (d == 1) {
        p += q;
        q = 0;
        d = 0;
      }
    }
    BigInt g = gcd(gcd(p, q), r);
    if (g > 1) {
      p /= g;
      q /= g;
      r /= g;
    }
    QuadReal x;
    x.p_ = std::move(p);
    x.q_ = std::move(q);
    x.d_ = std::move(d);
    x.r_ = std::move(r);
    return x;
  }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& d() const { return d_; }
  const BigInt& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  int sign() const { return detail::sign_of_surd(p_, q_, d_); }

  BigRational to_rational() const {
    if (!is_rational()) throw domain_error("value is irrational");
    return BigRational(p_, r_);
  }

  QuadReal conjugate() const { return make(p_, -q_, d_, r_); }
  QuadReal abs() const { return sign() < 0 ? -*this : *this; }

  QuadReal operator-() const {
    QuadReal x = *this;
    x.p_ = -x.p_;
    x.q_ = -x.q_;
    return x;
  }

  friend QuadReal operator+(const QuadReal& x, const QuadReal& y) {
    const BigInt& d = common_radicand(x, y);
    return make(x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, d, x.r_ * y.r_);
  }

  friend QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }

  friend QuadReal operator*(const QuadReal& x, const QuadReal& y) {
    const BigInt& d = common_radicand(x, y);
    return make(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, d, x.r_ * y.r_);
  }

  friend QuadReal operator/(const QuadReal& x, const QuadReal& y) {
    if (y.is_zero()) throw domain_error("division by zero");
    const BigInt& d = common_radicand(x, y);
    // 1/y = r (p - q sqrt d) / (p^2 - q^2 d)
    const BigInt norm = y.p_ * y.p_ - y.q_ * y.q_ * d;
    const QuadReal inverse = make(y.r_ * y.p_, -y.r_ * y.q_, d, norm);
    return x * inverse;
  }

  QuadReal& operator+=(const QuadReal& y) { return *this = *this + y; }
  QuadReal& operator-=(const QuadReal& y) { return *this = *this - y; }
  QuadReal& operator*=(const QuadReal& y) { return *this = *this * y; }
  QuadReal& operator/=(const QuadReal& y) { return *this = *this / y; }

  friend bool operator==(const QuadReal&, const QuadReal&) = default;

  /// Exact ordering; both operands must share a radicand (or be rational).
  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  BigInt floor() const {
    BigInt numerator_floor;
    if (q_ == 0) {
      numerator_floor = p_;
    } else {
      // q*sqrt(d) is irrational, so floor(-y) = -floor(y) - 1.
      const BigInt s = boost::multiprecision::sqrt(BigInt(q_ * q_ * d_));
      numerator_floor = q_ > 0 ? BigInt(p_ + s) : BigInt(p_ - s - 1);
    }
    return detail::floor_div(numerator_floor, r_);
  }

  /// Fractional part {x} in [0, 1).
  QuadReal frac() const { return *this - QuadReal(floor()); }

  /// Decimal expansion correctly rounded (half-up) to `significant` digits.
  std::string to_decimal(unsigned significant = 40) const {
    if (significant == 0) significant = 1;
    if (is_zero()) return "0";
    const QuadReal magnitude = abs();
    // 10^e <= magnitude < 10^(e+1)
    long e = 0;
    if (magnitude >= QuadReal(1)) {
      while (power_of_ten(e + 1) <= magnitude) ++e;
    } else {
      while (power_of_ten(e) > magnitude) --e;
    }
    const long shift = static_cast<long>(significant) - 1 - e;
    const QuadReal scaled = magnitude * power_of_ten(shift);
    BigInt digits = scaled.floor();
    if (scaled - QuadReal(digits) >= QuadReal::rational(1, 2)) ++digits;
    if (digits == detail::pow10(significant)) {
      digits /= 10;
      ++e;
    }
    const std::string body = digits.str();
    std::string out = sign() < 0 ? "-" : "";
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e + 1);
      if (int_len >= body.size()) {
        out += body + std::string(int_len - body.size(), '0');
      } else {
        out += body.substr(0, int_len) + "." + body.substr(int_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + body;
    }
    return out;
  }

  double to_double() const { return std::stod(to_decimal(20)); }

  /// Human-readable closed form, e.g. "(3 - sqrt(5))/2".
  std::string to_string() const {
    std::string num;
    if (p_ != 0 || q_ == 0) num = p_.str();
    if (q_ != 0) {
      const BigInt mag = q_ < 0 ? BigInt(-q_) : q_;
      const std::string surd = (mag == 1 ? "" : mag.str() + "*") + "sqrt(" + d_.str() + ")";
      if (num.empty()) {
        num = (q_ < 0 ? "-" : "") + surd;
      } else {
        num += (q_ < 0 ? " - " : " + ") + surd;
      }
    }
    if (r_ == 1) return num;
    const bool compound = p_ != 0 && q_ != 0;
    return (compound ? "(" + num + ")" : num) + "/" + r_.str();
  }

 private:
  static const BigInt& common_radicand(const QuadReal& x, const QuadReal& y) {
    if (x.q_ == 0) return y.d_;
    if (y.q_ == 0) return x.d_;
    if (x.d_ != y.d_) {
      throw mixed_radicand_error("arithmetic between Q(sqrt(" + x.d_.str() + ")) and Q(sqrt(" +
                                 y.d_.str() + "))");
    }
    return x.d_;
  }

  static QuadReal power_of_ten(long e) {
    if (e >= 0) return QuadReal(detail::pow10(static_cast<unsigned>(e)));
    return rational(1, detail::pow10(static_cast<unsigned>(-e)));
  }

  BigInt p_ = 0;
  BigInt q_ = 0;
  BigInt d_ = 0;
  BigInt r_ = 1;
};

/// Orders x and y even when they live in different quadratic fields.
inline std::strong_ordering compare_across_fields(const QuadReal& x, const QuadReal& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) return x <=> y;
  // Compare u = (r'a - r a') + r' b sqrt(d) against v = r b' sqrt(e).
  const BigInt c = y.r() * x.p() - x.r() * y.p();
  const BigInt ub = y.r() * x.q();
  const BigInt vb = x.r() * y.q();
  const int su = detail::sign_of_surd(c, ub, x.d());
  const int sv = vb.sign();
  int s = 0;
  if (su != sv) {
    s = su > sv ? 1 : -1;
  } else if (su != 0) {
    const int squares =
        detail::sign_of_surd(c * c + ub * ub * x.d() - vb * vb * y.d(), 2 * c * ub, x.d());
    s = su > 0 ? squares : -squares;
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Distance to the nearest integer, min({x}, 1 - {x}).
inline QuadReal dist_to_int(const QuadReal& x) {
  const QuadReal f = x.frac();
  const QuadReal g = QuadReal(1) - f;
  return f <= g ? f : g;
}

}  // namespace sturmian

#endif  // STURMIAN_QUAD_REAL_HPP
