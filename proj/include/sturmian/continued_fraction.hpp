#ifndef STURMIAN_CONTINUED_FRACTION_HPP
#define STURMIAN_CONTINUED_FRACTION_HPP

// Eventually periodic continued fractions [a0; a1, ..., an, (b1, ..., bp)]
// and the exact quadratic irrationals they denote.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quad_real.hpp"

namespace sturmian {

struct Convergent {
  std::size_t t = 0;
  BigInt p;
  BigInt q;
};

/// A continued fraction with a finite preperiod (holding a0) and an optional
/// repeating tail. Instances are always canonical: the period is primitive,
/// the preperiod is as short as possible and a rational expansion does not
/// end in 1 (except for [1]).
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<BigInt> preperiod, std::vector<BigInt> period = {})
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (preperiod_.empty()) throw domain_error("continued fraction needs a0");
    for (std::size_t i = 1; i < preperiod_.size(); ++i) {
      if (preperiod_[i] < 1) {
        throw domain_error("partial quotient a" + std::to_string(i) + " = " + preperiod_[i].str() +
                           " is < 1");
      }
    }
    for (const BigInt& b : period_) {
      if (b < 1) throw domain_error("periodic partial quotient " + b.str() + " is < 1");
    }
    canonicalize();
  }

  /// Parses "[a0; a1, ..., an]" or "[a0; a1, ..., an, (b1, ..., bp)]".
  /// Whitespace is insignificant.
  static ContinuedFraction parse(std::string_view text);

  /// Inverse of parse(): "[0; 2, (1)]".
  std::string render() const {
    std::string out = "[" + preperiod_.front().str();
    if (preperiod_.size() == 1 && period_.empty()) return out + "]";
    out += "; ";
    for (std::size_t i = 1; i < preperiod_.size(); ++i) {
      if (i > 1) out += ", ";
      out += preperiod_[i].str();
    }
    if (!period_.empty()) {
      if (preperiod_.size() > 1) out += ", ";
      out += "(";
      for (std::size_t i = 0; i < period_.size(); ++i) {
        if (i > 0) out += ", ";
        out += period_[i].str();
      }
      out += ")";
    }
    return out + "]";
  }

  const std::vector<BigInt>& preperiod() const { return preperiod_; }
  const std::vector<BigInt>& period() const { return period_; }
  bool is_rational() const { return period_.empty(); }

  /// Number of partial quotients for rational expansions.
  std::optional<std::size_t> finite_length() const {
    if (is_rational()) return preperiod_.size();
    return std::nullopt;
  }

  /// The partial quotient a_t.
  const BigInt& quotient(std::size_t t) const {
    if (t < preperiod_.size()) return preperiod_[t];
    if (period_.empty()) throw domain_error("index past the end of a rational expansion");
    return period_[(t - preperiod_.size()) % period_.size()];
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  void canonicalize() {
    if (!period_.empty()) {
      const std::size_t n = period_.size();
      for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < n && repeats; ++i) repeats = period_[i] == period_[i - len];
        if (repeats) {
          period_.resize(len);
          break;
        }
      }
      while (preperiod_.size() > 1 && preperiod_.back() == period_.back()) {
        preperiod_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      }
    } else {
      while (preperiod_.size() > 1 && preperiod_.back() == 1) {
        preperiod_.pop_back();
        preperiod_.back() += 1;
      }
    }
  }

  std::vector<BigInt> preperiod_;
  std::vector<BigInt> period_;
};

namespace detail {

class CfParser {
 public:
  explicit CfParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact_ += c;
    }
  }

  ContinuedFraction run() {
    expect('[');
    std::vector<BigInt> preperiod{integer()};
    std::vector<BigInt> period;
    if (peek() == ';') {
      ++pos_;
      for (;;) {
        if (peek() == '(') {
          ++pos_;
          period.push_back(integer());
          while (peek() == ',') {
            ++pos_;
            period.push_back(integer());
          }
          expect(')');
          break;
        }
        preperiod.push_back(integer());
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(']');
    if (pos_ != compact_.size()) fail("trailing characters");
    return ContinuedFraction(std::move(preperiod), std::move(period));
  }

 private:
  char peek() const { return pos_ < compact_.size() ? compact_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BigInt integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string token = compact_.substr(start, pos_ - start);
    if (token.front() == '+') token.erase(0, 1);
    return BigInt(token);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("continued fraction: " + what + " at offset " + std::to_string(pos_) +
                      " of \"" + compact_ + "\"");
  }

  std::string compact_;
  std::size_t pos_ = 0;
};

// [b1; b2, ..., bp, b1, ...] for a purely periodic cycle; the value exceeds 1.
inline QuadReal purely_periodic_value(const std::vector<BigInt>& cycle) {
  // x = (A x + B) / (C x + D) with [[A, B], [C, D]] the product of [[b, 1], [1, 0]].
  BigInt a = 1, b = 0, c = 0, d = 1;
  for (const BigInt& q : cycle) {
    BigInt na = a * q + b;
    BigInt nc = c * q + d;
    b = std::move(a);
    d = std::move(c);
    a = std::move(na);
    c = std::move(nc);
  }
  // C x^2 + (D - A) x - B = 0, positive root.
  const BigInt disc = (d - a) * (d - a) + 4 * b * c;
  return QuadReal(a - d) / QuadReal(2 * c) + QuadReal::sqrt(disc) / QuadReal(2 * c);
}

// (p_n x + p_{n-1}) / (q_n x + q_{n-1}) for the prefix [a0; ..., an].
inline QuadReal fold_prefix(const std::vector<BigInt>& prefix, const QuadReal& tail) {
  BigInt p = 1, p_prev = 0, q = 0, q_prev = 1;
  for (const BigInt& a : prefix) {
    BigInt np = a * p + p_prev;
    BigInt nq = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(np);
    q = std::move(nq);
  }
  return (QuadReal(p) * tail + QuadReal(p_prev)) / (QuadReal(q) * tail + QuadReal(q_prev));
}

inline std::vector<BigInt> least_rotation(std::vector<BigInt> cycle) {
  std::vector<BigInt> best = cycle;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    if (cycle < best) best = cycle;
  }
  return best;
}

}  // namespace detail

inline ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  return detail::CfParser(text).run();
}

/// The exact value of a canonical continued fraction.
inline QuadReal value_of(const ContinuedFraction& cf) {
  if (cf.is_rational()) {
    const auto& a = cf.preperiod();
    BigRational x(a.back());
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) x = BigRational(*it) + 1 / x;
    return QuadReal::from_rational(x);
  }
  return detail::fold_prefix(cf.preperiod(), detail::purely_periodic_value(cf.period()));
}

/// Convergents p_t / q_t for t = 0..t_max (fewer when a rational expansion ends).
inline std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t t_max) {
  std::vector<Convergent> out;
  BigInt p = 1, p_prev = 0, q = 0, q_prev = 1;
  const std::size_t last = cf.finite_length() ? std::min(t_max, *cf.finite_length() - 1) : t_max;
  out.reserve(last + 1);
  for (std::size_t t = 0; t <= last; ++t) {
    const BigInt& a = cf.quotient(t);
    BigInt np = a * p + p_prev;
    BigInt nq = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(np);
    q = std::move(nq);
    out.push_back({t, p, q});
  }
  return out;
}

/// The Lagrange constant, i.e. the limsup of
/// [a_{t+1}; a_{t+2}, ...] + [0; a_t, a_{t-1}, ..., a_1].
///
/// Along each residue class of t modulo the period both tails converge to
/// purely periodic values, so the limsup is the largest of those p limits.
inline QuadReal lagrange_constant(const ContinuedFraction& cf) {
  if (cf.is_rational()) throw domain_error("Lagrange constant of a rational number is undefined");
  const auto& period = cf.period();
  const std::size_t n = period.size();
  std::optional<QuadReal> best;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> forward(n), backward(n);
    for (std::size_t i = 0; i < n; ++i) {
      forward[i] = period[(j + i) % n];
      backward[i] = period[(j + n - 1 - i) % n];
    }
    const QuadReal term = detail::purely_periodic_value(forward) +
                          QuadReal(1) / detail::purely_periodic_value(backward);
    if (!best || term > *best) best = term;
  }
  return *best;
}

/// Two numbers are equivalent when their expansions share a tail.
inline bool are_equivalent(const ContinuedFraction& a, const ContinuedFraction& b) {
  if (a.is_rational() || b.is_rational()) {
    throw domain_error("equivalence is defined here for eventually periodic expansions only");
  }
  return detail::least_rotation(a.period()) == detail::least_rotation(b.period());
}

}  // namespace sturmian

#endif  // STURMIAN_CONTINUED_FRACTION_HPP
