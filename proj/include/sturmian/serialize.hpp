#ifndef STURMIAN_SERIALIZE_HPP
#define STURMIAN_SERIALIZE_HPP

// JSON and CSV encodings. Integers travel as decimal strings; every exact
// number carries a 40-digit decimal alongside.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/kabelian.hpp"
#include "sturmian/powers.hpp"
#include "sturmian/quad_real.hpp"
#include "sturmian/spectra.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

using json = nlohmann::ordered_json;

inline constexpr int decimal_digits = 40;

inline json to_json(const QuadReal& x) {
  return json{{"p", x.p().str()},
              {"q", x.q().str()},
              {"d", x.d().str()},
              {"r", x.r().str()},
              {"decimal", x.to_decimal(decimal_digits)}};
}

inline QuadReal quad_real_from_json(const json& j) {
  try {
    return QuadReal::make(BigInt(j.at("p").get<std::string>()), BigInt(j.at("q").get<std::string>()),
                          BigInt(j.at("d").get<std::string>()), BigInt(j.at("r").get<std::string>()));
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed QuadReal: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw parse_error(std::string("malformed QuadReal: ") + e.what());
  }
}

inline json to_json(const BigRational& x) {
  return json{{"num", numerator(x).str()},
              {"den", denominator(x).str()},
              {"decimal", QuadReal::from_rational(x).to_decimal(decimal_digits)}};
}

inline json to_json(const IntervalFamily& fam) {
  json intervals = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    intervals.push_back({{"start", to_json(fam.start(i))}, {"length", to_json(fam.length(i))}});
  }
  return json{{"zero_in_I0", fam.convention().zero_in_I0}, {"intervals", std::move(intervals)}};
}

inline json to_json(const std::vector<Factor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back({{"word", f.word.str()}, {"interval", f.interval}});
  return out;
}

inline json to_json(const std::vector<FactorClass>& classes, std::size_t k, std::size_t m) {
  json list = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& w : c.members) members.push_back(w.str());
    json entry;
    entry["interval_index"] = c.interval_index ? json(*c.interval_index) : json(nullptr);
    entry["members"] = std::move(members);
    list.push_back(std::move(entry));
  }
  return json{{"k", k}, {"m", m}, {"classes", std::move(list)}};
}

inline json to_json(const TernaryReport& report) {
  json bad = json::array();
  for (const auto& c : report.counterexamples) {
    bad.push_back({{"u", c.u.str()},
                   {"v", c.v.str()},
                   {"equivalent", c.equivalent},
                   {"shares_prefix_suffix", c.shares_prefix_suffix}});
  }
  return json{{"pairs_checked", report.pairs_checked}, {"counterexamples", std::move(bad)}};
}

inline json to_json(const ExponentRecord& rec) {
  json out;
  out["k"] = rec.k ? json(*rec.k) : json("inf");
  out["m"] = rec.m;
  out["exponent"] = rec.exponent.str();
  if (rec.witness) {
    out["witness"] = {{"intercept", to_json(rec.witness->intercept)}, {"word", rec.witness->word.str()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline json to_json(const SpectrumPoint& point) {
  return json{{"cf", point.alpha_cf.render()},
              {"k", point.k},
              {"theta", point.theta ? to_json(*point.theta) : json("inf")}};
}

/// One JSON object per line.
inline std::string spectrum_json_lines(const std::vector<SpectrumPoint>& points) {
  std::string out;
  for (const auto& p : points) out += to_json(p).dump() + "\n";
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace detail

/// Header plus one row per point: cf,k,p,q,d,r,decimal.
inline std::string spectrum_csv(const std::vector<SpectrumPoint>& points) {
  std::ostringstream out;
  out << "cf,k,p,q,d,r,decimal\n";
  for (const auto& pt : points) {
    out << detail::csv_field(pt.alpha_cf.render()) << ',' << pt.k << ',';
    if (pt.theta) {
      const QuadReal& t = *pt.theta;
      out << t.p() << ',' << t.q() << ',' << t.d() << ',' << t.r() << ',' << t.to_decimal(decimal_digits);
    } else {
      out << ",,,,inf";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sturmian

#endif  // STURMIAN_SERIALIZE_HPP
