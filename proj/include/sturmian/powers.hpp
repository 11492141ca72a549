#ifndef STURMIAN_POWERS_HPP
#define STURMIAN_POWERS_HPP

// Maximal exponents of k-abelian (and ordinary) powers of a fixed period in
// Sturmian words of a given slope: the closed form read off the I_{k,m}
// intervals and brute-force oracles working on exact factor lists.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/kabelian.hpp"
#include "sturmian/quad_real.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// Default symbol budget for the brute-force oracles.
inline constexpr std::size_t default_oracle_cap = 2000;

struct PowerWitness {
  QuadReal intercept;
  Word word;
};

struct ExponentRecord {
  std::optional<std::size_t> k;  // nullopt: ordinary powers (k = infinity)
  std::size_t m = 1;
  BigInt exponent = 1;
  std::optional<PowerWitness> witness;
};

/// Whether w is a concatenation of pairwise k-abelian equivalent blocks of length m.
inline bool is_kab_power(const Word& w, std::size_t m, std::size_t k) {
  if (m == 0 || w.size() % m != 0 || w.empty()) return false;
  const Word first = w.substr(0, m);
  for (std::size_t pos = m; pos < w.size(); pos += m) {
    if (!kab_equivalent(first, w.substr(pos, m), k)) return false;
  }
  return true;
}

/// A_{k,alpha}(m) = floor(max I_{k,m} / ||m alpha||) + gamma, gamma = 0 only
/// when max I_{k,m} equals ||m alpha||.
///
/// The witness intercept sits in the longest interval J of I_{k,m} (the last
/// one in circle order on ties), centred so that the A points x, x + m alpha,
/// ... stay inside J. It is produced when the power has at most
/// `witness_limit` letters.
inline ExponentRecord max_kab_exponent(const QuadReal& alpha, std::size_t k, std::size_t m,
                                       EndpointConvention conv = {}, std::size_t witness_limit = 4096) {
  const IntervalFamily family = ikm_intervals(alpha, k, m, conv);
  std::size_t longest = 0;
  QuadReal longest_len = family.length(0);
  for (std::size_t i = 1; i < family.size(); ++i) {
    QuadReal len = family.length(i);
    if (len >= longest_len) {
      longest = i;
      longest_len = std::move(len);
    }
  }
  const QuadReal step = QuadReal(static_cast<long long>(m)) * alpha;
  const QuadReal gap = dist_to_int(step);
  BigInt exponent = (longest_len / gap).floor();
  if (longest_len != gap) exponent += 1;

  ExponentRecord record{k, m, exponent, std::nullopt};
  if (exponent * m <= witness_limit) {
    const QuadReal spread = QuadReal(exponent - 1) * gap;
    const bool drifts_up = step.frac() < QuadReal::rational(1, 2);
    const QuadReal offset = drifts_up ? (longest_len - spread) / QuadReal(2) : (longest_len + spread) / QuadReal(2);
    const QuadReal x = (family.start(longest) + offset).frac();
    const auto length = exponent.convert_to<std::size_t>() * m;
    Word word = sturmian_prefix(SturmianSpec(alpha.frac(), x, conv), length);
    if (exponent >= 2 && !is_kab_power(word, m, k)) {
      throw invariant_violation("witness for A_{" + std::to_string(k) + "}(" + std::to_string(m) +
                                ") is not a k-abelian power");
    }
    record.witness = PowerWitness{x, std::move(word)};
  }
  return record;
}

/// Cap on oracle factor lengths: STURMIAN_SPECTRA_CAP when set, else the default.
inline std::size_t oracle_cap_from_env() {
  if (const char* raw = std::getenv("STURMIAN_SPECTRA_CAP")) {
    try {
      const unsigned long long v = std::stoull(raw);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw parse_error(std::string("STURMIAN_SPECTRA_CAP is not a positive integer: ") + raw);
  }
  return default_oracle_cap;
}

namespace detail {

// Prefix, suffix and length-k window counts of a binary block, packed.
struct PackedSignature {
  std::uint64_t prefix = 0;
  std::uint64_t suffix = 0;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const PackedSignature&, const PackedSignature&) = default;
};

template <class Letter>
PackedSignature packed_signature(const Letter& letter, std::size_t m, std::size_t k) {
  PackedSignature sig;
  const std::size_t edge = std::min(m, k - 1);
  for (std::size_t i = 0; i < edge; ++i) sig.prefix = (sig.prefix << 1) | (letter(i) == '1');
  for (std::size_t i = m - edge; i < m; ++i) sig.suffix = (sig.suffix << 1) | (letter(i) == '1');
  if (m >= k) {
    sig.counts.assign(std::size_t{1} << k, 0);
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::uint64_t window = 0;
    for (std::size_t i = 0; i < m; ++i) {
      window = ((window << 1) | (letter(i) == '1')) & mask;
      if (i + 1 >= k) ++sig.counts[window];
    }
  }
  return sig;
}

// Longest run of consecutive blocks equivalent to the first, over every
// factor of length blocks*m, doubling blocks until the run falls short.
template <class RunLength>
std::size_t brute_power_search(const QuadReal& alpha, std::size_t m, EndpointConvention conv, std::size_t cap,
                               const RunLength& run_length) {
  if (m < 1) throw domain_error("period must be at least 1");
  if (2 * m > cap) {
    throw resource_cap_exceeded("period " + std::to_string(m) + " needs more than " + std::to_string(cap) +
                                " symbols");
  }
  std::size_t blocks = 2;
  for (;;) {
    const LevelCoding coding(alpha, blocks * m, conv);
    std::size_t best = 0;
    for (std::size_t interval = 0; interval < coding.count(); ++interval) {
      best = std::max(best, run_length(coding, interval, blocks));
    }
    if (best < blocks) return best;
    if (blocks * m == (cap / m) * m) {
      throw resource_cap_exceeded("powers of period " + std::to_string(m) + " reach the " + std::to_string(cap) +
                                  "-symbol cap");
    }
    blocks = std::min(2 * blocks, cap / m);
  }
}

}  // namespace detail

/// Oracle for A_{k,alpha}(m): the largest n such that some factor of length
/// n*m splits into n pairwise k-abelian equivalent blocks. Works on the
/// exact factor lists only; needs factors up to `cap` symbols.
inline std::size_t brute_kab_exponent(const QuadReal& alpha, std::size_t k, std::size_t m,
                                      EndpointConvention conv = {}, std::size_t cap = default_oracle_cap) {
  if (k < 1) throw domain_error("k must be at least 1");
  auto run_length = [m, k](const LevelCoding& coding, std::size_t interval, std::size_t blocks) {
    auto block = [&](std::size_t j) {
      auto letter = [&, base = j * m](std::size_t i) { return coding.letter(interval, base + i); };
      return detail::packed_signature(letter, m, k);
    };
    const auto first = block(0);
    std::size_t run = 1;
    while (run < blocks && block(run) == first) ++run;
    return run;
  };
  if (k > 20) {
    // Packed windows would not fit; fall back to string signatures.
    auto slow = [m, k](const LevelCoding& coding, std::size_t interval, std::size_t blocks) {
      const Word first = coding.word(interval, 0, m);
      std::size_t run = 1;
      while (run < blocks && kab_equivalent(first, coding.word(interval, run * m, m), k)) ++run;
      return run;
    };
    return detail::brute_power_search(alpha, m, conv, cap, slow);
  }
  return detail::brute_power_search(alpha, m, conv, cap, run_length);
}

/// Largest n such that u^n is a factor for some u of length m.
inline std::size_t brute_integer_power_exponent(const QuadReal& alpha, std::size_t m, EndpointConvention conv = {},
                                                std::size_t cap = default_oracle_cap) {
  auto run_length = [m](const LevelCoding& coding, std::size_t interval, std::size_t blocks) {
    std::size_t run = 1;
    for (; run < blocks; ++run) {
      for (std::size_t i = 0; i < m; ++i) {
        if (coding.letter(interval, run * m + i) != coding.letter(interval, i)) return run;
      }
    }
    return run;
  };
  return detail::brute_power_search(alpha, m, conv, cap, run_length);
}

/// The highest integer exponent of a power of period m: a_{t+1} + 2 when
/// m = q_t with t > 1 and q_{t-1} > 1, otherwise found by brute force.
inline BigInt max_integer_power_exponent(const ContinuedFraction& cf, std::size_t m,
                                         std::size_t cap = default_oracle_cap) {
  if (cf.is_rational()) throw domain_error("slope must be irrational");
  if (m < 1) throw domain_error("period must be at least 1");
  BigInt p = 1, p_prev = 0, q = 0, q_prev = 1;
  for (std::size_t t = 0;; ++t) {
    BigInt nq = cf.quotient(t) * q + q_prev;
    q_prev = std::move(q);
    q = std::move(nq);
    if (q > m) break;
    if (t > 1 && q == m && q_prev > 1) return cf.quotient(t + 1) + 2;
  }
  return BigInt(brute_integer_power_exponent(value_of(cf).frac(), m, {}, cap));
}

struct BoundCheckRow {
  std::size_t t = 0;
  BigInt q_t;
  bool applicable = false;  // ||q_t alpha|| < min L(2k-2)
  BigInt exponent_at_q;     // A(q_t)
  BigInt max_exponent_below_next;  // max A(m) over 1 <= m < q_{t+1}
  bool within_plus_one = false;
  bool below_for_smaller_periods = false;  // A(m) < A(q_t) for all 1 <= m < q_t
};

struct BoundViolation {
  std::string rule;  // "convergents_enough" or "approximate_exponent"
  std::size_t t = 0;
  std::size_t m = 0;
  std::string detail;
};

struct BoundReport {
  std::size_t k = 1;
  std::vector<BoundCheckRow> rows;
  std::size_t approximate_checks = 0;
  std::vector<BoundViolation> violations;
};

/// Checks A(m) <= A(q_t) + 2 for 1 <= m < q_{t+1} at every t in
/// [t_min, t_max] with ||q_t alpha|| < min L(2k-2), and
/// |floor(max L(2k-2) / ||m alpha||) - A(m)| <= 1 whenever
/// ||m alpha|| < min L(2k-2).
inline BoundReport exponent_bound_check(const ContinuedFraction& cf, std::size_t k, std::size_t t_min,
                                        std::size_t t_max) {
  if (cf.is_rational()) throw domain_error("slope must be irrational");
  if (k < 1) throw domain_error("k must be at least 1");
  const QuadReal alpha = value_of(cf);
  const LengthExtremes level = family_extremes(level_intervals(alpha, 2 * k - 2));
  const auto conv = convergents(cf, t_max + 1);
  const std::size_t m_end = conv.back().q.convert_to<std::size_t>();  // exclusive

  BoundReport report;
  report.k = k;
  std::vector<BigInt> exponent(m_end);
  std::vector<QuadReal> gap(m_end);
  for (std::size_t m = 1; m < m_end; ++m) {
    exponent[m] = max_kab_exponent(alpha, k, m, {}, 0).exponent;
    gap[m] = dist_to_int(QuadReal(static_cast<long long>(m)) * alpha);
    if (gap[m] < level.min) {
      ++report.approximate_checks;
      const BigInt approx = (level.max / gap[m]).floor();
      const BigInt diff = approx - exponent[m];
      if (diff > 1 || diff < -1) {
        report.violations.push_back({"approximate_exponent", 0, m,
                                     "floor(max L / ||m alpha||) = " + approx.str() + ", A = " + exponent[m].str()});
      }
    }
  }
  for (std::size_t t = std::max<std::size_t>(t_min, 1); t <= t_max; ++t) {
    BoundCheckRow row;
    row.t = t;
    row.q_t = conv[t].q;
    const auto qt = conv[t].q.convert_to<std::size_t>();
    const auto next = conv[t + 1].q.convert_to<std::size_t>();
    row.exponent_at_q = exponent[qt];
    row.applicable = gap[qt] < level.min;
    row.below_for_smaller_periods = true;
    for (std::size_t m = 1; m < next; ++m) {
      if (exponent[m] > row.max_exponent_below_next) row.max_exponent_below_next = exponent[m];
      if (m < qt && exponent[m] >= exponent[qt]) row.below_for_smaller_periods = false;
      if (row.applicable && exponent[m] > exponent[qt] + 2) {
        report.violations.push_back({"convergents_enough", t, m,
                                     "A(m) = " + exponent[m].str() + " > A(q_t) + 2 = " + BigInt(exponent[qt] + 2).str()});
      }
    }
    row.within_plus_one = row.max_exponent_below_next <= exponent[qt] + 1;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sturmian

#endif  // STURMIAN_POWERS_HPP
