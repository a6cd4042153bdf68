// fflab: finite free probability quantities and inequality checks from the shell.
//
// Exit codes: 0 ok, 1 a check suite reported failures, 2 malformed input or
// configuration, 3 a polynomial that is not real-rooted.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fflab/errors.hpp"
#include "fflab/finfree.hpp"
#include "fflab/info.hpp"
#include "fflab/io.hpp"
#include "fflab/verify.hpp"

using namespace fflab;
using io::json;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNonReal = 3;

// --p takes inline JSON or a path to a file holding it.
io::PolyInput read_poly(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return io::parse_polynomial(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read polynomial file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_polynomial(buf.str());
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("bad grid value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void apply_thread_env() {
  if (const char* env = std::getenv("FFLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw std::invalid_argument("FFLAB_THREADS must be a nonnegative integer");
    set_worker_cap(static_cast<int>(v));
  }
}

struct CheckArgs {
  std::string suite = "all";
  TrialConfig config;
  std::string ensemble = "gaussian-roots";
  std::string out;
  std::string format = "json";
  std::string t_grid = "0.25,1,4";
  std::string lambda_grid;
  double h = 1e-4;
  double t_max = 100.0;
  int quad_points = 1005;
  bool serial = false;
};

int run_check(CheckArgs& a) {
  a.config.ensemble = parse_ensemble(a.ensemble);
  const Exec exec = a.serial ? Exec::serial : Exec::parallel;
  std::vector<CheckReport> reports;
  const bool all = a.suite == "all";
  auto wants = [&](const char* s) { return all || a.suite == s; };
  bool known = all;
  for (const std::string& s : suite_names()) known = known || a.suite == s;
  if (!known) throw std::invalid_argument("unknown suite '" + a.suite + "'");

  for (const std::string& s : suite_names()) {
    if (!wants(s.c_str())) continue;
    if (all && a.config.n < 3 && (s == "entropy-mono" || s == "structure")) continue;
    if (s == "lieb")
      reports.push_back(check_lieb(a.config, a.lambda_grid.empty() ? default_lieb_grid() : parse_grid(a.lambda_grid), exec));
    else if (s == "debruijn")
      reports.push_back(check_debruijn(a.config, parse_grid(a.t_grid), a.h, exec));
    else if (s == "entropy-integral")
      reports.push_back(check_entropy_integral(a.config, a.t_max, a.quad_points, exec));
    else
      reports.push_back(run_suite(s, a.config, exec).front());
  }

  if (a.format == "csv") {
    emit(io::reports_csv(reports), a.out);
  } else {
    json j = json::array();
    for (const CheckReport& r : reports) j.push_back(io::report_json(r));
    emit(j.dump(2) + "\n", a.out);
  }
  std::size_t failures = 0;
  for (const CheckReport& r : reports) {
    failures += r.failures;
    std::cerr << r.suite << ": failures=" << r.failures << " skips=" << r.degenerate_skips
              << " min_margin=" << r.min_margin << " time=" << r.wall_time << "s\n";
  }
  return failures == 0 ? 0 : kExitFailures;
}

// Heat-flow root paths alpha_i(t) as CSV, plus the check alpha'(0) = score(alpha)
// by a one-sided second-order difference (the flow is only defined for t >= 0).
int run_trajectory(const std::string& p_arg, const std::string& grid, double h, const std::string& out) {
  const RootVector alpha = read_poly(p_arg).root_vector();
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,root_index,value\n";
  for (double t : parse_grid(grid)) {
    const RootVector r = heat_flow_roots(alpha, t);
    for (std::size_t i = 0; i < r.size(); ++i) csv << t << ',' << i << ',' << r[i] << '\n';
  }
  emit(csv.str(), out);

  json summary{{"h", h}};
  if (alpha.size() >= 2 && min_gap(alpha) > 0.0) {
    const RootVector r1 = heat_flow_roots(alpha, h), r2 = heat_flow_roots(alpha, 2.0 * h);
    const std::vector<double> s = score(alpha);
    double residual = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const double d = (-3.0 * alpha[i] + 4.0 * r1[i] - r2[i]) / (2.0 * h);
      residual = std::max(residual, std::fabs(d - s[i]));
    }
    summary["score_residual"] = residual;
  } else {
    summary["score_residual"] = nullptr;
  }
  (out.empty() || out == "-" ? std::cerr : std::cout) << summary.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite free convolution, heat flow, entropy and Fisher information of real-rooted polynomials"};
  app.require_subcommand(1);

  std::string p_arg, q_arg;
  double t = 0.0, tol = kDefaultRootTol;
  int n = 3;

  auto* roots_cmd = app.add_subcommand("roots", "Real roots, descending");
  roots_cmd->add_option("--p", p_arg, "Polynomial JSON or file")->required();
  roots_cmd->add_option("--tol", tol, "Root iteration tolerance");

  auto* conv_cmd = app.add_subcommand("convolve", "Finite free convolution p [+]_n q");
  conv_cmd->add_option("--p", p_arg)->required();
  conv_cmd->add_option("--q", q_arg)->required();

  auto* heat_cmd = app.add_subcommand("heatflow", "exp(-(t/2) d^2/dx^2) p");
  heat_cmd->add_option("--p", p_arg)->required();
  heat_cmd->add_option("--t", t, "Flow time, >= 0")->required();

  auto* score_cmd = app.add_subcommand("score", "Score vector");
  auto* fisher_cmd = app.add_subcommand("fisher", "Finite free Fisher information");
  auto* entropy_cmd = app.add_subcommand("entropy", "Finite free entropy (natural log)");
  auto* epower_cmd = app.add_subcommand("epower", "Entropy power exp(2 chi)");
  for (auto* c : {score_cmd, fisher_cmd, entropy_cmd, epower_cmd}) c->add_option("--p", p_arg)->required();

  auto* cn_cmd = app.add_subcommand("cn", "Entropy constant C_n");
  cn_cmd->add_option("--n", n)->required()->check(CLI::Range(3, 1 << 20));

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Run verification suites");
  check_cmd->add_option("--suite", ca.suite, "fisher-mono, stam, entropy-mono, epi, lieb, debruijn, entropy-integral, structure, all")
      ->capture_default_str();
  check_cmd->add_option("--n", ca.config.n)->capture_default_str();
  check_cmd->add_option("--trials", ca.config.trials)->capture_default_str();
  check_cmd->add_option("--seed", ca.config.seed)->capture_default_str();
  check_cmd->add_option("--ensemble", ca.ensemble, "gaussian-roots, uniform-roots, hermite, clustered")->capture_default_str();
  check_cmd->add_option("--tol", ca.config.tol)->capture_default_str();
  check_cmd->add_option("--min-gap-guard", ca.config.min_gap_guard)->capture_default_str();
  check_cmd->add_option("--fd-step", ca.config.fd_step)->capture_default_str();
  check_cmd->add_option("--t-grid", ca.t_grid, "de Bruijn times, comma separated")->capture_default_str();
  check_cmd->add_option("--lambda-grid", ca.lambda_grid, "Lieb mixing weights, comma separated");
  check_cmd->add_option("--step", ca.h, "de Bruijn difference step")->capture_default_str();
  check_cmd->add_option("--t-max", ca.t_max, "Entropy-integral truncation point")->capture_default_str();
  check_cmd->add_option("--quad-points", ca.quad_points, "Entropy-integral nodes on [0, t-max]")->capture_default_str();
  check_cmd->add_option("--out", ca.out, "Report path (stdout if absent)");
  check_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  check_cmd->add_flag("--serial", ca.serial, "Use the serial reference runner");

  std::string grid = "0,0.5,1", traj_out;
  double traj_h = 1e-6;
  auto* traj_cmd = app.add_subcommand("trajectory", "Heat-flow root trajectories as CSV");
  traj_cmd->add_option("--p", p_arg)->required();
  traj_cmd->add_option("--t-grid", grid)->capture_default_str();
  traj_cmd->add_option("--step", traj_h, "Step for the score residual")->capture_default_str();
  traj_cmd->add_option("--out", traj_out, "CSV path (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    apply_thread_env();
    if (*roots_cmd) {
      print(io::roots_json(real_roots(read_poly(p_arg).poly, tol)));
    } else if (*conv_cmd) {
      print(io::coeffs_json(convolve(read_poly(p_arg).poly, read_poly(q_arg).poly)));
    } else if (*heat_cmd) {
      print(io::coeffs_json(heat_flow(read_poly(p_arg).poly, t)));
    } else if (*score_cmd) {
      print(json{{"score", score(read_poly(p_arg).root_vector())}});
    } else if (*fisher_cmd) {
      const double phi = fisher(read_poly(p_arg).root_vector());
      print(json{{"fisher", std::isfinite(phi) ? json(phi) : json("inf")}});
    } else if (*entropy_cmd) {
      const double chi = entropy(read_poly(p_arg).root_vector());
      print(json{{"entropy", std::isfinite(chi) ? json(chi) : json("-inf")}});
    } else if (*epower_cmd) {
      print(json{{"entropy_power", entropy_power(read_poly(p_arg).root_vector())}});
    } else if (*cn_cmd) {
      print(json{{"n", n}, {"c_n", c_constant(n)}});
    } else if (*check_cmd) {
      return run_check(ca);
    } else if (*traj_cmd) {
      return run_trajectory(p_arg, grid, traj_h, traj_out);
    }
  } catch (const NonRealRooted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNonReal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
