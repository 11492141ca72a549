#ifndef STURMIAN_CIRCLE_HPP
#define STURMIAN_CIRCLE_HPP

// Geometry of the rotation x -> {x + alpha} on the circle T = [0, 1).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quad_real.hpp"

namespace sturmian {

/// Which endpoint an interval keeps: [x, y) when zero_in_I0, else (x, y].
struct EndpointConvention {
  bool zero_in_I0 = true;

  friend bool operator==(const EndpointConvention&, const EndpointConvention&) = default;
};

/// A point of T, stored reduced modulo 1.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(const QuadReal& x) : value_(x.frac()) {}

  const QuadReal& value() const { return value_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint& a, const CirclePoint& b) { return a.value_ <=> b.value_; }

 private:
  QuadReal value_;
};

/// The partition of T cut by a finite point set. Interval i runs from
/// cut(i) to cut(i + 1), the last one wrapping through 0.
class IntervalFamily {
 public:
  IntervalFamily(std::vector<CirclePoint> cuts, EndpointConvention convention)
      : cuts_(std::move(cuts)), convention_(convention) {
    if (cuts_.empty()) throw domain_error("interval family needs at least one cut");
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
  }

  std::size_t size() const { return cuts_.size(); }
  const std::vector<CirclePoint>& cuts() const { return cuts_; }
  EndpointConvention convention() const { return convention_; }

  const QuadReal& start(std::size_t i) const { return cuts_[i].value(); }

  /// Right endpoint, unreduced: the last interval ends at cut(0) + 1.
  QuadReal end(std::size_t i) const {
    return i + 1 < cuts_.size() ? cuts_[i + 1].value() : cuts_.front().value() + QuadReal(1);
  }

  QuadReal length(std::size_t i) const { return end(i) - start(i); }

  std::vector<QuadReal> lengths() const {
    std::vector<QuadReal> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(length(i));
    return out;
  }

  /// Index of the interval holding x under the family's convention.
  std::size_t locate(const CirclePoint& x) const {
    // Cuts strictly below x (or at most x when intervals are closed on the left).
    auto it = convention_.zero_in_I0 ? std::upper_bound(cuts_.begin(), cuts_.end(), x)
                                     : std::lower_bound(cuts_.begin(), cuts_.end(), x);
    if (it == cuts_.begin()) return size() - 1;
    return static_cast<std::size_t>(it - cuts_.begin()) - 1;
  }

 private:
  std::vector<CirclePoint> cuts_;
  EndpointConvention convention_;
};

struct LengthExtremes {
  QuadReal min;
  QuadReal max;
};

namespace detail {

inline void require_irrational(const QuadReal& alpha) {
  if (alpha.is_rational()) throw domain_error("slope must be irrational, got " + alpha.to_string());
}

}  // namespace detail

/// {i * alpha} for each signed index i.
inline std::vector<CirclePoint> orbit_points(const QuadReal& alpha, const std::vector<long long>& indices) {
  detail::require_irrational(alpha);
  std::vector<CirclePoint> out;
  out.reserve(indices.size());
  for (long long i : indices) out.emplace_back(QuadReal(i) * alpha);
  return out;
}

/// The level-n intervals, cut by 0, {-alpha}, ..., {-n alpha}.
inline IntervalFamily level_intervals(const QuadReal& alpha, std::size_t n, EndpointConvention conv = {}) {
  std::vector<long long> indices(n + 1);
  for (std::size_t j = 0; j <= n; ++j) indices[j] = -static_cast<long long>(j);
  return IntervalFamily(orbit_points(alpha, indices), conv);
}

/// The intervals whose parts are the k-abelian classes of length-m factors:
/// cut by D = {0, {-alpha}, ..., {-min(m, k-1) alpha}} together with
/// R^{-(m-(k-1))}(D) when m >= k - 1.
inline IntervalFamily ikm_intervals(const QuadReal& alpha, std::size_t k, std::size_t m,
                                    EndpointConvention conv = {}) {
  if (k < 1) throw domain_error("k must be at least 1");
  if (m < 1) throw domain_error("m must be at least 1");
  const std::size_t reach = std::min(m, k - 1);
  std::vector<long long> indices;
  for (std::size_t j = 0; j <= reach; ++j) indices.push_back(-static_cast<long long>(j));
  if (m >= k - 1) {
    const std::size_t shift = m - (k - 1);
    for (std::size_t j = 0; j <= reach; ++j) indices.push_back(-static_cast<long long>(j + shift));
  }
  return IntervalFamily(orbit_points(alpha, indices), conv);
}

inline LengthExtremes family_extremes(const IntervalFamily& family) {
  LengthExtremes out{family.length(0), family.length(0)};
  for (std::size_t i = 1; i < family.size(); ++i) {
    QuadReal len = family.length(i);
    if (len < out.min) out.min = len;
    if (len > out.max) out.max = std::move(len);
  }
  return out;
}

}  // namespace sturmian

#endif  // STURMIAN_CIRCLE_HPP
