#include "fflab/io.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fflab::io {

namespace {

std::vector<double> number_list(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.empty()) throw std::invalid_argument(std::string(key) + " must be a non-empty array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) throw std::invalid_argument(std::string(key) + " entries must be numbers");
    const double d = x.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument(std::string(key) + " entries must be finite");
    out.push_back(d);
  }
  return out;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_or(const json& j, double fallback) { return j.is_number() ? j.get<double>() : fallback; }

}  // namespace

RootVector PolyInput::root_vector() const { return roots ? *roots : real_roots(poly); }

PolyInput parse_polynomial(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  const bool has_roots = j.contains("roots"), has_coeffs = j.contains("coeffs");
  if (has_roots == has_coeffs) throw std::invalid_argument("polynomial needs exactly one of \"roots\" or \"coeffs\"");
  if (has_roots) {
    RootVector r(number_list(j, "roots"));
    Polynomial p = from_roots(r);
    return {std::move(p), std::move(r)};
  }
  return {Polynomial::from_descending(number_list(j, "coeffs")), std::nullopt};
}

PolyInput parse_polynomial(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return parse_polynomial(j);
}

json coeffs_json(const Polynomial& p) {
  std::vector<double> c = p.descending();
  for (double& x : c) x += 0.0;  // no "-0.0" in the output
  return json{{"coeffs", c}};
}

json roots_json(const RootVector& r) { return json{{"roots", std::vector<double>(r.begin(), r.end())}}; }

json config_json(const TrialConfig& c) {
  return json{{"n", c.n},
              {"trials", c.trials},
              {"seed", c.seed},
              {"ensemble", std::string(to_string(c.ensemble))},
              {"tol", c.tol},
              {"min_gap_guard", c.min_gap_guard},
              {"fd_step", c.fd_step}};
}

TrialConfig parse_config(const json& j) {
  TrialConfig c;
  c.n = j.at("n").get<int>();
  c.trials = j.at("trials").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.ensemble = parse_ensemble(j.at("ensemble").get<std::string>());
  c.tol = j.at("tol").get<double>();
  c.min_gap_guard = j.at("min_gap_guard").get<double>();
  c.fd_step = j.at("fd_step").get<double>();
  return c;
}

json report_json(const CheckReport& r) {
  json margins = json::array(), bounds = json::array(), raw = json::array(), skipped = json::array(),
       trials = json::array();
  for (const CheckEntry& e : r.entries) {
    trials.push_back(e.trial);
    margins.push_back(finite_or_null(e.margin));
    bounds.push_back(e.bound);
    raw.push_back(finite_or_null(e.raw));
    skipped.push_back(e.skipped);
  }
  json worst = json::object();
  for (const auto& [k, v] : r.worst) worst[k] = finite_or_null(v);
  return json{{"suite", r.suite},
              {"config", config_json(r.config)},
              {"trial", trials},
              {"margins", margins},
              {"bounds", bounds},
              {"raw_margins", raw},
              {"skipped", skipped},
              {"min_margin", finite_or_null(r.min_margin)},
              {"failures", r.failures},
              {"degenerate_skips", r.degenerate_skips},
              {"side_failures", r.side_failures},
              {"worst", worst},
              {"wall_time", r.wall_time},
              {"passed", r.passed()}};
}

CheckReport parse_report(const json& j) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  CheckReport r;
  r.suite = j.at("suite").get<std::string>();
  r.config = parse_config(j.at("config"));
  const json& margins = j.at("margins");
  const std::size_t count = margins.size();
  for (std::size_t i = 0; i < count; ++i) {
    CheckEntry e;
    e.trial = j.at("trial").at(i).get<std::size_t>();
    e.margin = number_or(margins.at(i), nan);
    e.bound = j.at("bounds").at(i).get<double>();
    e.raw = number_or(j.at("raw_margins").at(i), nan);
    e.skipped = j.at("skipped").at(i).get<bool>();
    r.entries.push_back(e);
  }
  r.min_margin = number_or(j.at("min_margin"), std::numeric_limits<double>::infinity());
  r.failures = j.at("failures").get<std::size_t>();
  r.degenerate_skips = j.at("degenerate_skips").get<std::size_t>();
  r.side_failures = j.at("side_failures").get<std::map<std::string, std::size_t>>();
  for (const auto& [k, v] : j.at("worst").items()) r.worst[k] = number_or(v, std::numeric_limits<double>::infinity());
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out.precision(17);
  out << "suite,trial,margin,skipped\n";
  for (const CheckReport& r : reports)
    for (const CheckEntry& e : r.entries) {
      out << r.suite << ',' << e.trial << ',';
      if (!e.skipped) out << e.margin;
      out << ',' << (e.skipped ? 1 : 0) << '\n';
    }
  return out.str();
}

}  // namespace fflab::io
