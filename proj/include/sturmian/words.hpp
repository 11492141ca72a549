#ifndef STURMIAN_WORDS_HPP
#define STURMIAN_WORDS_HPP

// Finite words, Sturmian codings of rotation orbits and the substitution
// 0 -> 02, 1 -> 1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/quad_real.hpp"

namespace sturmian {

enum class Alphabet { binary = 2, ternary = 3 };

/// A finite word over {0, 1} or {0, 1, 2}, stored as its digit string.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters, Alphabet alphabet = Alphabet::binary)
      : letters_(std::move(letters)), alphabet_(alphabet) {
    const char top = static_cast<char>('0' + static_cast<int>(alphabet_) - 1);
    for (char c : letters_) {
      if (c < '0' || c > top) throw domain_error("letter '" + std::string(1, c) + "' outside the alphabet");
    }
  }

  const std::string& str() const { return letters_; }
  std::string_view view() const { return letters_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len), alphabet_);
  }

  std::size_t count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
  }

  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_, std::max(a.alphabet_, b.alphabet_));
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::string letters_;
  Alphabet alphabet_ = Alphabet::binary;
};

/// Slope alpha in (0, 1), intercept x in [0, 1), endpoint convention.
struct SturmianSpec {
  QuadReal alpha;
  QuadReal intercept;
  EndpointConvention convention;

  SturmianSpec(QuadReal slope, const QuadReal& x, EndpointConvention conv = {})
      : alpha(std::move(slope)), intercept(x.frac()), convention(conv) {
    detail::require_irrational(alpha);
    if (alpha.sign() <= 0 || alpha >= QuadReal(1)) throw domain_error("slope must lie in (0, 1)");
  }
};

namespace detail {

// Walks R^i(x) with all points kept over one common denominator, emitting
// nu(R^i(x)): 0 on I_0 = I(0, {1 - alpha}), 1 on I_1.
class RotationCoder {
 public:
  RotationCoder(const QuadReal& alpha, const QuadReal& start, EndpointConvention conv)
      : radicand_(alpha.d()), zero_in_I0_(conv.zero_in_I0) {
    if (!start.is_rational() && start.d() != alpha.d()) {
      throw mixed_radicand_error("intercept and slope lie in different quadratic fields");
    }
    den_ = boost::multiprecision::lcm(alpha.r(), start.r());
    step_a_ = alpha.p() * (den_ / alpha.r());
    step_b_ = alpha.q() * (den_ / alpha.r());
    y_a_ = start.p() * (den_ / start.r());
    y_b_ = start.q() * (den_ / start.r());
    threshold_a_ = den_ - step_a_;
    threshold_b_ = -step_b_;
  }

  char next() {
    const int vs_threshold = sign_of_surd(y_a_ - threshold_a_, y_b_ - threshold_b_, radicand_);
    char letter = '1';
    if (zero_in_I0_) {
      if (vs_threshold < 0) letter = '0';
    } else {
      const bool at_zero = y_a_ == 0 && y_b_ == 0;
      if (!at_zero && vs_threshold <= 0) letter = '0';
    }
    y_a_ += step_a_;
    y_b_ += step_b_;
    if (sign_of_surd(y_a_ - den_, y_b_, radicand_) >= 0) y_a_ -= den_;
    return letter;
  }

 private:
  BigInt radicand_;
  bool zero_in_I0_;
  BigInt den_, step_a_, step_b_, y_a_, y_b_, threshold_a_, threshold_b_;
};

}  // namespace detail

/// The first n letters of s_{x,alpha}.
inline Word sturmian_prefix(const SturmianSpec& spec, std::size_t n) {
  detail::RotationCoder coder(spec.alpha, spec.intercept, spec.convention);
  std::string letters(n, '0');
  for (char& c : letters) c = coder.next();
  return Word(std::move(letters));
}

/// The factors of length n of slope alpha, one per level-n interval.
///
/// Every factor is the coding of n rotation steps from an interior point of
/// its interval. The comparisons of R^i(point) against 0 and {1 - alpha} are
/// read off the exact sorted order of the cuts {-j alpha}: R^i(y) lies in
/// I_1 exactly when y lies on the arc from {-(i+1) alpha} to {-i alpha}.
/// Letters are produced on demand, so long levels stay cheap to probe.
class LevelCoding {
 public:
  LevelCoding(const QuadReal& alpha, std::size_t n, EndpointConvention conv = {})
      : family_(make_family(alpha, n, conv, rank_)), n_(n) {}

  std::size_t length() const { return n_; }
  std::size_t count() const { return family_.size(); }
  const IntervalFamily& intervals() const { return family_; }

  char letter(std::size_t interval, std::size_t i) const {
    const std::size_t from = rank_[i + 1];
    const std::size_t to = rank_[i];
    const bool in_one = from < to ? (from <= interval && interval < to) : (interval >= from || interval < to);
    return in_one ? '1' : '0';
  }

  Word word(std::size_t interval) const { return word(interval, 0, n_); }

  Word word(std::size_t interval, std::size_t pos, std::size_t len) const {
    std::string letters(len, '0');
    for (std::size_t i = 0; i < len; ++i) letters[i] = letter(interval, pos + i);
    return Word(std::move(letters));
  }

  QuadReal midpoint(std::size_t interval) const {
    return (family_.start(interval) + family_.end(interval)) / QuadReal(2);
  }

 private:
  static IntervalFamily make_family(const QuadReal& alpha, std::size_t n, EndpointConvention conv,
                                    std::vector<std::size_t>& rank) {
    detail::require_irrational(alpha);
    std::vector<CirclePoint> points;
    points.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) points.emplace_back(-QuadReal(static_cast<long long>(j)) * alpha);
    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    rank.assign(n + 1, 0);
    std::vector<CirclePoint> sorted;
    sorted.reserve(n + 1);
    for (std::size_t pos = 0; pos <= n; ++pos) {
      rank[order[pos]] = pos;
      sorted.push_back(points[order[pos]]);
    }
    return IntervalFamily(std::move(sorted), conv);
  }

  std::vector<std::size_t> rank_;
  IntervalFamily family_;
  std::size_t n_;
};

/// A factor together with its interval [w] on the circle.
struct Factor {
  Word word;
  std::size_t interval = 0;
  QuadReal start;
  QuadReal end;  // unreduced; end > start
};

/// All n + 1 factors of length n, in circle order.
inline std::vector<Factor> factors_of_length(const QuadReal& alpha, std::size_t n, EndpointConvention conv = {}) {
  if (n < 1) throw domain_error("factor length must be at least 1");
  const LevelCoding coding(alpha, n, conv);
  std::vector<Factor> out;
  out.reserve(coding.count());
  for (std::size_t i = 0; i < coding.count(); ++i) {
    out.push_back({coding.word(i), i, coding.intervals().start(i), coding.intervals().end(i)});
  }
  return out;
}

/// Number of (possibly overlapping) occurrences of u in w.
inline std::size_t occurrences(std::string_view w, std::string_view u) {
  if (u.empty()) throw domain_error("occurrence count of the empty word");
  std::size_t total = 0;
  for (std::size_t pos = w.find(u); pos != std::string_view::npos; pos = w.find(u, pos + 1)) ++total;
  return total;
}

inline std::size_t occurrences(const Word& w, const Word& u) { return occurrences(w.view(), u.view()); }

/// sigma(0) = 02, sigma(1) = 1.
inline Word sigma_image(const Word& w) {
  std::string out;
  out.reserve(w.size() + w.count('0'));
  for (char c : w.str()) {
    if (c == '0') {
      out += "02";
    } else if (c == '1') {
      out += '1';
    } else {
      throw domain_error("sigma is defined on binary words only");
    }
  }
  return Word(std::move(out), Alphabet::ternary);
}

/// ||u|_0 - |v|_0| <= 1 for equal-length binary words.
inline bool is_balanced_pair(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw domain_error("balance compares words of equal length");
  if (u.count('2') > 0 || v.count('2') > 0) throw domain_error("balance is checked on binary words");
  const auto zu = static_cast<long long>(u.count('0'));
  const auto zv = static_cast<long long>(v.count('0'));
  return zu - zv <= 1 && zv - zu <= 1;
}

/// Factors u of length n such that both u0 and u1 are factors.
inline std::vector<Word> right_special_factors(const QuadReal& alpha, std::size_t n) {
  std::set<std::string> longer;
  for (const Factor& f : factors_of_length(alpha, n + 1)) longer.insert(f.word.str());
  std::set<std::string> special;
  for (const std::string& w : longer) {
    const std::string u = w.substr(0, n);
    if (longer.count(u + '0') && longer.count(u + '1')) special.insert(u);
  }
  std::vector<Word> out;
  for (const auto& s : special) out.emplace_back(s);
  return out;
}

}  // namespace sturmian

#endif  // STURMIAN_WORDS_HPP
