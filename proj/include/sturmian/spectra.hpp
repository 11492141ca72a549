#ifndef STURMIAN_SPECTRA_HPP
#define STURMIAN_SPECTRA_HPP

// Critical exponents Theta_k, samples of the k-Lagrange spectra and the
// construction of slopes with a prescribed Theta_infinity.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/powers.hpp"
#include "sturmian/quad_real.hpp"

namespace sturmian {

/// Theta_k(alpha) = max L(2k-2) * lambda(alpha).
inline QuadReal theta_k(const ContinuedFraction& cf, std::size_t k) {
  if (cf.is_rational()) throw domain_error("Theta_k of a rational slope is undefined");
  if (k < 1) throw domain_error("k must be at least 1");
  const QuadReal alpha = value_of(cf);
  return family_extremes(level_intervals(alpha, 2 * k - 2)).max * lagrange_constant(cf);
}

struct LimsupRow {
  std::size_t t = 0;
  BigInt q_t;
  BigInt exponent;  // A(q_t)
  BigRational ratio;
  QuadReal approximation;  // max L(2k-2) / (q_t ||q_t alpha||)
};

struct LimsupEstimate {
  BigRational estimate;
  QuadReal error_bound;  // 2 / q_{t_first} + |max approximation - max L(2k-2) * lambda|
  bool bound_applies = false;
  std::size_t t_first = 0;
  std::size_t t_last = 0;
  std::vector<LimsupRow> rows;
};

/// Estimates Theta_k as the largest A(q_t)/q_t over the last full period of
/// indices t <= t_max (t >= 1). When every ||q_t alpha|| in that window is
/// below min L(2k-2), the estimate is within error_bound of Theta_k.
inline LimsupEstimate theta_limsup_estimate(const ContinuedFraction& cf, std::size_t k, std::size_t t_max) {
  if (cf.is_rational()) throw domain_error("slope must be irrational");
  if (k < 1) throw domain_error("k must be at least 1");
  if (t_max < 1) throw domain_error("t_max must be at least 1");
  const QuadReal alpha = value_of(cf);
  const LengthExtremes level = family_extremes(level_intervals(alpha, 2 * k - 2));
  const auto conv = convergents(cf, t_max);
  const std::size_t period = cf.period().size();

  LimsupEstimate out;
  out.t_last = t_max;
  out.t_first = t_max >= period ? std::max<std::size_t>(1, t_max - period + 1) : 1;
  out.bound_applies = true;
  QuadReal widest;
  for (std::size_t t = out.t_first; t <= t_max; ++t) {
    const BigInt& q = conv[t].q;
    const std::size_t m = q.convert_to<std::size_t>();
    const QuadReal gap = dist_to_int(QuadReal(q) * alpha);
    LimsupRow row{t, q, max_kab_exponent(alpha, k, m, {}, 0).exponent, {}, level.max / (QuadReal(q) * gap)};
    row.ratio = BigRational(row.exponent, q);
    if (out.rows.empty() || row.ratio > out.estimate) out.estimate = row.ratio;
    if (out.rows.empty() || row.approximation > widest) widest = row.approximation;
    if (gap >= level.min) out.bound_applies = false;
    out.rows.push_back(std::move(row));
  }
  out.error_bound = QuadReal::rational(2, conv[out.t_first].q) + (widest - level.max * lagrange_constant(cf)).abs();
  return out;
}

struct SpectrumPoint {
  ContinuedFraction alpha_cf;
  std::size_t k = 1;
  std::optional<QuadReal> theta;  // nullopt is +infinity
};

/// Finite preperiods [0; c1, ..., cj] prepended to a periodic tail, listed by
/// length and then lexicographically with 1 <= ci <= max_quotient.
struct PreperiodPool {
  std::size_t count = 0;
  unsigned max_quotient = 9;
};

namespace detail {

inline std::vector<ContinuedFraction> equivalent_slopes(const ContinuedFraction& base, const PreperiodPool& pool) {
  std::vector<ContinuedFraction> out{base};
  std::set<std::string> seen{base.render()};
  std::vector<unsigned> digits;
  while (out.size() < pool.count) {
    // Next sequence in (length, lexicographic) order.
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == pool.max_quotient) digits[--i] = 1;
    if (i == 0) {
      digits.insert(digits.begin(), 1);
    } else {
      ++digits[i - 1];
    }
    std::vector<BigInt> pre{0};
    for (unsigned c : digits) pre.emplace_back(c);
    ContinuedFraction cf(std::move(pre), base.period());
    if (seen.insert(cf.render()).second) out.push_back(std::move(cf));
  }
  return out;
}

}  // namespace detail

/// Theta_k at max(1, pool.count) slopes sharing the tail of base, the first
/// being base itself. Points are evaluated on worker threads and returned in
/// enumeration order.
inline std::vector<SpectrumPoint> sample_spectrum(std::size_t k, const ContinuedFraction& base,
                                                  const PreperiodPool& pool, unsigned threads = 0) {
  if (base.is_rational()) throw domain_error("spectrum base must be eventually periodic");
  if (k < 1) throw domain_error("k must be at least 1");
  if (pool.max_quotient < 1) throw domain_error("max_quotient must be at least 1");
  const std::vector<ContinuedFraction> slopes = detail::equivalent_slopes(base, pool);
  std::vector<std::optional<SpectrumPoint>> slots(slopes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, slopes.size()));
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < slopes.size(); i += threads) {
          slots[i] = SpectrumPoint{slopes[i], k, theta_k(slopes[i], k)};
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<SpectrumPoint> points;
  points.reserve(slots.size());
  for (auto& slot : slots) points.push_back(std::move(*slot));
  return points;
}

struct LinftyStage {
  std::size_t t = 0;
  std::size_t k_t = 0;
  BigInt q;                // q_{k_t}
  BigInt r;                // integer part of the approximation
  BigInt s;                // 0 <= s < q
  BigInt quotient;         // a_{k_t + 1}
  BigRational ratio;       // (a_{k_t+1} + 2) / q_{k_t}
  BigRational error;       // lambda - ratio
};

struct LinftyConstruction {
  BigRational lambda;
  ContinuedFraction slope;  // explicit prefix followed by (1)
  std::vector<LinftyStage> stages;
};

/// Builds a slope with Theta_infinity = lambda. Stage t takes the least
/// index k_t > k_{t-1} (k_1 >= 2) at which v = floor(lambda q_{k_t}) >= 3 and
/// lambda - v/q_{k_t} < 2^-t, then sets a_{k_t+1} = v - 2; every later
/// quotient stays 1.
inline LinftyConstruction construct_linfty_slope(const BigRational& lambda, std::size_t stages) {
  if (lambda <= 0) throw domain_error("lambda must be positive");
  if (stages < 1) throw domain_error("at least one stage is required");
  std::vector<BigInt> a{0};
  auto quotient = [&a](std::size_t i) { return i < a.size() ? a[i] : BigInt(1); };

  LinftyConstruction out{lambda, ContinuedFraction({0}, {1}), {}};
  std::size_t k = 1;
  BigRational tolerance(1);
  for (std::size_t t = 1; t <= stages; ++t) {
    tolerance /= 2;
    // q_j for j <= k is fixed by earlier stages; walk forward from q_k.
    BigInt q = 0, q_prev = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt next = quotient(j) * q + q_prev;
      q_prev = std::move(q);
      q = std::move(next);
    }
    for (;;) {
      ++k;
      BigInt next = quotient(k) * q + q_prev;
      q_prev = std::move(q);
      q = std::move(next);
      if (k < 2) continue;
      const BigRational scaled = lambda * q;
      const BigInt v = numerator(scaled) / denominator(scaled);
      if (v >= 3 && lambda - BigRational(v, q) < tolerance) {
        if (a.size() < k + 2) a.resize(k + 2, 1);
        a[k + 1] = v - 2;
        out.stages.push_back({t, k, q, v / q, v % q, a[k + 1], BigRational(v, q), lambda - BigRational(v, q)});
        break;
      }
    }
  }
  out.slope = ContinuedFraction(a, {1});
  return out;
}

}  // namespace sturmian

#endif  // STURMIAN_SPECTRA_HPP
