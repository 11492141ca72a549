#ifndef STURMIAN_CLI_HPP
#define STURMIAN_CLI_HPP

// Command-line front end. run() parses arguments and returns the exit code
// with the text destined for stdout and stderr, so it can be driven in-process.

#include <CLI11.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sturmian/circle.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/kabelian.hpp"
#include "sturmian/powers.hpp"
#include "sturmian/serialize.hpp"
#include "sturmian/spectra.hpp"
#include "sturmian/words.hpp"

namespace sturmian::cli {

enum class ExitCode : int { ok = 0, usage = 2, resource_cap = 3, invariant = 4 };

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::string command;
  std::string cf_text;
  std::size_t k = 1;
  std::size_t m = 1;
  std::size_t t_max = 10;
  std::size_t pool = 200;
  std::size_t stages = 4;
  std::string lambda = "1";
  bool zero_in_I0 = true;
  bool verify = false;
  bool emit_circle = false;
  OutputFormat format = OutputFormat::json;
};

inline std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

inline json config_json(const RunConfig& c) {
  return json{{"command", c.command}, {"cf", c.cf_text},     {"k", c.k},
              {"m", c.m},             {"t_max", c.t_max},    {"pool", c.pool},
              {"stages", c.stages},   {"lambda", c.lambda},  {"zero_in_I0", c.zero_in_I0},
              {"verify", c.verify},   {"emit_circle", c.emit_circle}, {"format", format_name(c.format)}};
}

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in " + text);
    return BigRational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw parse_error("not a rational number: " + text);
  }
}

inline void require_format(const RunConfig& c, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed) {
    if (f == c.format) return;
  }
  throw domain_error("format " + format_name(c.format) + " is not available for " + c.command);
}

inline std::string cmd_cf(const RunConfig& c) {
  require_format(c, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});
  const auto cf = ContinuedFraction::parse(c.cf_text);
  const auto conv = convergents(cf, c.t_max);
  const QuadReal value = value_of(cf);
  std::optional<QuadReal> lambda;
  if (!cf.is_rational()) lambda = lagrange_constant(cf);
  std::ostringstream out;
  if (c.format == OutputFormat::csv) {
    out << "t,a,p,q\n";
    for (const auto& cv : conv) out << cv.t << ',' << cf.quotient(cv.t) << ',' << cv.p << ',' << cv.q << '\n';
    return out.str();
  }
  if (c.format == OutputFormat::text) {
    out << "cf      " << cf.render() << "\nvalue   " << value.to_string() << " = " << value.to_decimal(decimal_digits)
        << "\nlambda  " << (lambda ? lambda->to_string() + " = " + lambda->to_decimal(decimal_digits) : "undefined")
        << "\n t  a  p  q\n";
    for (const auto& cv : conv) out << cv.t << ' ' << cf.quotient(cv.t) << ' ' << cv.p << ' ' << cv.q << '\n';
    return out.str();
  }
  json rows = json::array();
  for (const auto& cv : conv) {
    rows.push_back({{"t", cv.t}, {"a", cf.quotient(cv.t).str()}, {"p", cv.p.str()}, {"q", cv.q.str()}});
  }
  json j{{"cf", cf.render()}, {"value", to_json(value)}};
  j["lambda"] = lambda ? to_json(*lambda) : json(nullptr);
  j["convergents"] = std::move(rows);
  return j.dump(2) + "\n";
}

inline json circle_data(const QuadReal& alpha, std::size_t m, const IntervalFamily& classes, EndpointConvention conv) {
  json cuts = json::array();
  for (std::size_t j = 0; j <= m; ++j) {
    cuts.push_back({{"j", j}, {"point", to_json(CirclePoint(-QuadReal(static_cast<long long>(j)) * alpha).value())}});
  }
  json labels = json::array();
  for (const auto& f : factors_of_length(alpha, m, conv)) {
    labels.push_back({{"word", f.word.str()},
                      {"start", to_json(f.start)},
                      {"end", to_json(f.end)},
                      {"class_interval", classes.locate(CirclePoint((f.start + f.end) / QuadReal(2)))}});
  }
  return json{{"level_cuts", std::move(cuts)}, {"factors", std::move(labels)}};
}

inline std::string cmd_classes(const RunConfig& c) {
  require_format(c, {OutputFormat::json, OutputFormat::text});
  const auto cf = ContinuedFraction::parse(c.cf_text);
  const QuadReal alpha = value_of(cf).frac();
  const EndpointConvention conv{c.zero_in_I0};
  const auto classes = classify_by_intervals(alpha, c.k, c.m, conv);
  const IntervalFamily family = ikm_intervals(alpha, c.k, c.m, conv);
  if (c.format == OutputFormat::text) {
    std::ostringstream out;
    for (const auto& cls : classes) {
      if (cls.members.empty()) continue;
      out << '{';
      for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? ", " : "") << cls.members[i].str();
      out << "}  interval " << *cls.interval_index << " starts at " << family.start(*cls.interval_index).to_decimal(12)
          << '\n';
    }
    return out.str();
  }
  json j = to_json(classes, c.k, c.m);
  j["intervals"] = to_json(family);
  if (c.emit_circle) j["circle"] = circle_data(alpha, c.m, family, conv);
  return j.dump(2) + "\n";
}

inline std::string cmd_exponent(const RunConfig& c, RunResult& result) {
  require_format(c, {OutputFormat::json, OutputFormat::text});
  const auto cf = ContinuedFraction::parse(c.cf_text);
  const QuadReal alpha = value_of(cf).frac();
  const EndpointConvention conv{c.zero_in_I0};
  const ExponentRecord rec = max_kab_exponent(alpha, c.k, c.m, conv);
  json j = to_json(rec);
  std::optional<std::size_t> oracle;
  if (c.verify) {
    oracle = brute_kab_exponent(alpha, c.k, c.m, conv, oracle_cap_from_env());
    const bool agrees = BigInt(*oracle) == rec.exponent;
    j["oracle"] = {{"exponent", std::to_string(*oracle)}, {"agrees", agrees}};
    if (!agrees) result.exit_code = static_cast<int>(ExitCode::invariant);
  }
  if (c.format == OutputFormat::text) {
    std::ostringstream out;
    out << "A_" << c.k << "(" << c.m << ") = " << rec.exponent << '\n';
    if (rec.witness) out << "witness " << rec.witness->word.str() << " at x = " << rec.witness->intercept.to_string() << '\n';
    if (oracle) out << "oracle " << *oracle << (BigInt(*oracle) == rec.exponent ? " (agrees)" : " (MISMATCH)") << '\n';
    return out.str();
  }
  return j.dump(2) + "\n";
}

inline std::string cmd_theta(const RunConfig& c) {
  require_format(c, {OutputFormat::json, OutputFormat::text});
  const auto cf = ContinuedFraction::parse(c.cf_text);
  const QuadReal theta = theta_k(cf, c.k);
  if (c.format == OutputFormat::text) {
    return "Theta_" + std::to_string(c.k) + " = " + theta.to_string() + " = " + theta.to_decimal(decimal_digits) + "\n";
  }
  return json{{"cf", cf.render()}, {"k", c.k}, {"theta", to_json(theta)}}.dump(2) + "\n";
}

inline std::string cmd_spectrum(const RunConfig& c) {
  const auto base = ContinuedFraction::parse(c.cf_text);
  const auto points = sample_spectrum(c.k, base, PreperiodPool{c.pool, 9});
  switch (c.format) {
    case OutputFormat::csv: return spectrum_csv(points);
    case OutputFormat::json: return spectrum_json_lines(points);
    case OutputFormat::text: {
      std::ostringstream out;
      for (const auto& p : points) out << p.alpha_cf.render() << "  " << p.theta->to_decimal(20) << '\n';
      return out.str();
    }
  }
  return {};
}

inline std::string cmd_linfty(const RunConfig& c) {
  require_format(c, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});
  const auto built = construct_linfty_slope(parse_rational(c.lambda), c.stages);
  std::ostringstream out;
  if (c.format != OutputFormat::json) {
    const char sep = c.format == OutputFormat::csv ? ',' : ' ';
    out << "t" << sep << "k_t" << sep << "q" << sep << "a" << sep << "ratio" << sep << "error" << sep << "bound\n";
    for (const auto& s : built.stages) {
      out << s.t << sep << s.k_t << sep << s.q << sep << s.quotient << sep << s.ratio << sep
          << QuadReal::from_rational(s.error).to_decimal(12) << sep << "2^-" << s.t << '\n';
    }
    if (c.format == OutputFormat::text) out << "slope " << built.slope.render() << '\n';
    return out.str();
  }
  json rows = json::array();
  for (const auto& s : built.stages) {
    const BigRational bound = BigRational(1, BigInt(1) << s.t);
    rows.push_back({{"t", s.t},
                    {"k_t", s.k_t},
                    {"q", s.q.str()},
                    {"r", s.r.str()},
                    {"s", s.s.str()},
                    {"quotient", s.quotient.str()},
                    {"ratio", to_json(s.ratio)},
                    {"error", to_json(s.error)},
                    {"within_bound", abs(s.error) < bound}});
  }
  return json{{"lambda", to_json(built.lambda)}, {"slope", built.slope.render()}, {"stages", std::move(rows)}}.dump(2) +
         "\n";
}

inline std::string error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}}.dump() + "\n";
}

}  // namespace detail

inline RunResult run(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Sturmian words, k-abelian powers and Lagrange spectra", "sturmian_cli"};
  app.require_subcommand(1);
  std::string format = "json";
  bool zero_in_I1 = false;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--zero-in-I1", zero_in_I1, "use (x, y] intervals");

  auto* cf = app.add_subcommand("cf", "convergents, value and Lagrange constant");
  cf->add_option("cf", c.cf_text, "continued fraction")->required();
  cf->add_option("--t-max", c.t_max, "last convergent index");

  auto* classes = app.add_subcommand("classes", "k-abelian classes of length-m factors");
  classes->add_option("cf", c.cf_text)->required();
  classes->add_option("-k", c.k)->required();
  classes->add_option("-m", c.m)->required();
  classes->add_flag("--emit-circle", c.emit_circle, "include circle coordinates");

  auto* exponent = app.add_subcommand("exponent", "maximal exponent of k-abelian powers of period m");
  exponent->add_option("cf", c.cf_text)->required();
  exponent->add_option("-k", c.k)->required();
  exponent->add_option("-m", c.m)->required();
  exponent->add_flag("--verify", c.verify, "compare with the brute-force oracle");

  auto* theta = app.add_subcommand("theta", "k-abelian critical exponent");
  theta->add_option("cf", c.cf_text)->required();
  theta->add_option("-k", c.k)->required();

  auto* spectrum = app.add_subcommand("spectrum", "sample of the k-Lagrange spectrum");
  spectrum->add_option("-k", c.k)->required();
  spectrum->add_option("--base", c.cf_text)->required();
  spectrum->add_option("--pool", c.pool, "number of slopes");

  auto* linfty = app.add_subcommand("linfty", "slope with a prescribed Theta_infinity");
  linfty->add_option("lambda", c.lambda, "positive rational, e.g. 7/3")->required();
  linfty->add_option("--stages", c.stages);

  for (auto* sub : {cf, classes, exponent, theta, spectrum, linfty}) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--zero-in-I1", zero_in_I1, "use (x, y] intervals");
  }

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = static_cast<int>(ExitCode::usage);
    result.err = detail::error_json("usage", e.what());
    return result;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.format = format == "csv" ? OutputFormat::csv : format == "text" ? OutputFormat::text : OutputFormat::json;
  c.zero_in_I0 = !zero_in_I1;

  try {
    if (c.command == "cf") result.out = detail::cmd_cf(c);
    if (c.command == "classes") result.out = detail::cmd_classes(c);
    if (c.command == "exponent") result.out = detail::cmd_exponent(c, result);
    if (c.command == "theta") result.out = detail::cmd_theta(c);
    if (c.command == "spectrum") result.out = detail::cmd_spectrum(c);
    if (c.command == "linfty") result.out = detail::cmd_linfty(c);
  } catch (const parse_error& e) {
    result = {static_cast<int>(ExitCode::usage), "", detail::error_json("parse", e.what())};
  } catch (const domain_error& e) {
    result = {static_cast<int>(ExitCode::usage), "", detail::error_json("domain", e.what())};
  } catch (const resource_cap_exceeded& e) {
    result = {static_cast<int>(ExitCode::resource_cap), "", detail::error_json("resource_cap", e.what())};
  } catch (const invariant_violation& e) {
    result = {static_cast<int>(ExitCode::invariant), "", detail::error_json("invariant", e.what())};
  } catch (const std::exception& e) {
    result = {static_cast<int>(ExitCode::invariant), "", detail::error_json("internal", e.what())};
  }
  return result;
}

}  // namespace sturmian::cli

#endif  // STURMIAN_CLI_HPP
