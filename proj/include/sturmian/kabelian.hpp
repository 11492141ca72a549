#ifndef STURMIAN_KABELIAN_HPP
#define STURMIAN_KABELIAN_HPP

// k-abelian equivalence: u ~_k v when |u|_w = |v|_w for every nonempty w
// with |w| <= k.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// Prefix and suffix of length min(m, k-1) plus the multiset of length-k
/// factors. For words of length at least k - 1 two words are k-abelian
/// equivalent exactly when their signatures agree; shorter words degenerate
/// to the word itself.
struct KAbelianSignature {
  std::size_t k = 1;
  std::size_t length = 0;
  std::string prefix;
  std::string suffix;
  std::map<std::string, std::size_t> counts;  // empty unless length >= k

  friend bool operator==(const KAbelianSignature&, const KAbelianSignature&) = default;
};

inline KAbelianSignature kab_signature(std::string_view u, std::size_t k) {
  if (k < 1) throw domain_error("k must be at least 1");
  KAbelianSignature sig;
  sig.k = k;
  sig.length = u.size();
  const std::size_t edge = std::min(u.size(), k - 1);
  sig.prefix = std::string(u.substr(0, edge));
  sig.suffix = std::string(u.substr(u.size() - edge));
  if (u.size() >= k) {
    for (std::size_t i = 0; i + k <= u.size(); ++i) ++sig.counts[std::string(u.substr(i, k))];
  }
  return sig;
}

inline bool kab_equivalent(const Word& u, const Word& v, std::size_t k) {
  if (u.size() != v.size()) throw domain_error("k-abelian equivalence compares words of equal length");
  return kab_signature(u.view(), k) == kab_signature(v.view(), k);
}

/// The definition itself: compares |.|_w for every w of length 1..k.
inline bool kab_equivalent_brute(const Word& u, const Word& v, std::size_t k) {
  if (u.size() != v.size()) throw domain_error("k-abelian equivalence compares words of equal length");
  if (k < 1) throw domain_error("k must be at least 1");
  for (std::size_t len = 1; len <= k && len <= u.size(); ++len) {
    std::map<std::string_view, long> balance;
    for (std::size_t i = 0; i + len <= u.size(); ++i) {
      ++balance[u.view().substr(i, len)];
      --balance[v.view().substr(i, len)];
    }
    for (const auto& [w, diff] : balance) {
      if (diff != 0) return false;
    }
  }
  return true;
}

/// Common prefix and common suffix of length `len`.
inline bool shares_prefix_suffix(std::string_view u, std::string_view v, std::size_t len) {
  if (len > u.size() || len > v.size()) return false;
  return u.substr(0, len) == v.substr(0, len) && u.substr(u.size() - len) == v.substr(v.size() - len);
}

struct FactorClass {
  std::size_t k = 1;
  std::size_t m = 0;
  std::vector<Word> members;  // sorted
  std::optional<std::size_t> interval_index;
};

/// Partition by the raw definition; classes ordered by their least member.
inline std::vector<FactorClass> classify_brute(const std::vector<Word>& words, std::size_t k) {
  std::vector<FactorClass> classes;
  if (words.empty()) return classes;
  const std::size_t m = words.front().size();
  for (const Word& w : words) {
    if (w.size() != m) throw domain_error("classify_brute expects words of one length");
  }
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Word& w : sorted) {
    auto home = std::find_if(classes.begin(), classes.end(), [&](const FactorClass& c) {
      return kab_equivalent_brute(c.members.front(), w, k);
    });
    if (home == classes.end()) {
      classes.push_back({k, m, {w}, std::nullopt});
    } else {
      home->members.push_back(w);
    }
  }
  return classes;
}

/// Groups the level-m factors by the interval of I_{k,m} containing their
/// own interval [u]. One class per interval of I_{k,m}, in circle order;
/// an interval holding no factor yields an empty class.
inline std::vector<FactorClass> classify_by_intervals(const QuadReal& alpha, std::size_t k, std::size_t m,
                                                      EndpointConvention conv = {}) {
  const LevelCoding level(alpha, m, conv);
  const IntervalFamily classes_family = ikm_intervals(alpha, k, m, conv);
  std::vector<FactorClass> classes(classes_family.size());
  for (std::size_t j = 0; j < classes.size(); ++j) classes[j] = {k, m, {}, j};
  for (std::size_t i = 0; i < level.count(); ++i) {
    const std::size_t j = classes_family.locate(CirclePoint(level.midpoint(i)));
    const QuadReal& u_start = level.intervals().start(i);
    const QuadReal u_end = level.intervals().end(i);
    if (u_start < classes_family.start(j) || u_end > classes_family.end(j)) {
      throw invariant_violation("level interval straddles a class boundary");
    }
    classes[j].members.push_back(level.word(i));
  }
  for (auto& c : classes) std::sort(c.members.begin(), c.members.end());
  return classes;
}

/// The nonempty classes as a set of member sets, for comparing partitions.
inline std::set<std::vector<Word>> partition_of(const std::vector<FactorClass>& classes) {
  std::set<std::vector<Word>> out;
  for (const auto& c : classes) {
    if (!c.members.empty()) out.insert(c.members);
  }
  return out;
}

/// Whether 2(k-1)||alpha|| > 1, in which case common prefixes and suffixes
/// of length min(|u|, k-1) already force k-abelian equivalence.
inline bool prefix_suffix_sufficient(const QuadReal& alpha, std::size_t k) {
  detail::require_irrational(alpha);
  if (k < 2) throw domain_error("prefix/suffix sufficiency needs k >= 2");
  return QuadReal(2 * static_cast<long long>(k - 1)) * dist_to_int(alpha) > QuadReal(1);
}

struct TernaryPairMismatch {
  Word u;
  Word v;
  bool equivalent = false;
  bool shares_prefix_suffix = false;
};

struct TernaryReport {
  std::size_t k = 2;
  std::size_t max_len = 0;
  std::size_t pairs_checked = 0;
  std::vector<TernaryPairMismatch> counterexamples;
};

/// Factors of length n of sigma(s) for a Sturmian word s of slope alpha.
inline std::vector<Word> sigma_factors(const QuadReal& alpha, std::size_t n) {
  std::set<std::string> found;
  for (const Factor& f : factors_of_length(alpha, n)) {
    const std::string image = sigma_image(f.word).str();
    for (std::size_t i = 0; i + n <= image.size(); ++i) found.insert(image.substr(i, n));
  }
  std::vector<Word> out;
  out.reserve(found.size());
  for (const auto& s : found) out.emplace_back(s, Alphabet::ternary);
  return out;
}

/// Checks, over every pair of equal-length factors of sigma(s) up to
/// max_len, that u ~_k v iff u and v share a prefix and a suffix of length
/// min(|u|, k-1).
inline TernaryReport verify_ternary_property(const SturmianSpec& spec, std::size_t k, std::size_t max_len) {
  if (k < 2) throw domain_error("the ternary property is stated for k >= 2");
  bool has_00 = false;
  for (const Factor& f : factors_of_length(spec.alpha, 2)) has_00 = has_00 || f.word.str() == "00";
  if (!has_00) throw domain_error("the Sturmian word must contain 00");
  TernaryReport report;
  report.k = k;
  report.max_len = max_len;
  for (std::size_t n = 1; n <= max_len; ++n) {
    const std::vector<Word> words = sigma_factors(spec.alpha, n);
    const std::size_t edge = std::min(n, k - 1);
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        const bool eq = kab_equivalent_brute(words[a], words[b], k);
        const bool ps = shares_prefix_suffix(words[a].view(), words[b].view(), edge);
        ++report.pairs_checked;
        if (eq != ps) report.counterexamples.push_back({words[a], words[b], eq, ps});
      }
    }
  }
  return report;
}

}  // namespace sturmian

#endif  // STURMIAN_KABELIAN_HPP
