#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fflab/execution.hpp"
#include "fflab/polynomial.hpp"
#include "fflab/roots.hpp"

namespace fflab {

enum class Ensemble { gaussian_roots, uniform_roots, hermite, clustered };

std::string_view to_string(Ensemble e);
// Accepts the CLI spellings gaussian-roots, uniform-roots, hermite, clustered.
Ensemble parse_ensemble(std::string_view name);

struct TrialConfig {
  int n = 5;
  int trials = 100;
  std::uint64_t seed = 0;
  Ensemble ensemble = Ensemble::gaussian_roots;
  double tol = 1e-8;
  double min_gap_guard = 1e-4;
  double fd_step = 1e-6;
};

// Throws std::invalid_argument unless n >= min_n, trials >= 1, tol > 0 and the guard
// and step are positive.
void validate(const TrialConfig& config, int min_n = 2);

// One row of a report. The entry fails when margin < -bound. Inequality suites use
// bound = tol; residual suites report margin = -residual with the allowed residual
// as bound.
struct CheckEntry {
  std::size_t trial = 0;
  double margin = 0.0;
  double bound = 0.0;
  bool skipped = false;
  double raw = 0.0;  // unnormalized margin where the suite normalizes
};

struct CheckReport {
  std::string suite;
  TrialConfig config;
  std::vector<CheckEntry> entries;
  double min_margin = 0.0;  // over non-skipped entries; +inf if all were skipped
  std::size_t failures = 0;
  std::size_t degenerate_skips = 0;
  double wall_time = 0.0;
  // Side conditions checked along the way (name -> number of violating trials).
  // They add to failures.
  std::map<std::string, std::size_t> side_failures;
  // Largest normalized residual per sub-check (structure suite; 1 means at the threshold).
  std::map<std::string, double> worst;

  bool passed() const { return failures == 0; }
};

// Roots of trial trial_index, stream 0 (p) or 1 (q). Deterministic in
// (seed, trial_index, stream) whatever the thread layout. Resamples until
// min_gap >= min_gap_guard; nullopt once the retry budget is spent.
std::optional<RootVector> sample_roots(const TrialConfig& config, std::uint64_t trial_index, int stream = 0);

// The sampled polynomial; throws DegenerateInput when the retry budget is spent.
Polynomial sample(const TrialConfig& config, std::uint64_t trial_index);

// Phi_n(p) - Phi_{n-1}(p~'), divided by Phi_n(p). p~' is the derivative rescaled to Var(p).
CheckReport check_fisher_monotonicity(const TrialConfig& config, Exec exec = Exec::parallel);

// 1/Phi(p boxplus q) - 1/Phi(p) - 1/Phi(q), divided by 1/Phi(p boxplus q).
CheckReport check_stam(const TrialConfig& config, Exec exec = Exec::parallel);

// chi_{n-1}(p~') + C_n - chi_n(p). Side check: chi_n(p) < chi_{n-1}(p~').
CheckReport check_entropy_monotonicity(const TrialConfig& config, Exec exec = Exec::parallel);

// (N(p boxplus q) - N(p) - N(q)) / (N(p) + N(q)).
// Side check: the same inequality for Disc^{1/C(n,2)}, evaluated in log space.
CheckReport check_epi(const TrialConfig& config, Exec exec = Exec::parallel);

// chi[sqrt(l)_* p boxplus sqrt(1-l)_* q] - l chi[p] - (1-l) chi[q] for every l in lambdas.
// For the hermite ensemble q is the same Hermite polynomial as p (the equality case).
CheckReport check_lieb(const TrialConfig& config, const std::vector<double>& lambdas, Exec exec = Exec::parallel);
std::vector<double> default_lieb_grid();

// |d/dt chi(p boxplus sqrt(t)_* H^_n) - Phi/2| at each t, derivative by central
// difference with step h. Allowed residual max(tol, 100 h^2 max(1, Phi)^3).
CheckReport check_debruijn(const TrialConfig& config, const std::vector<double>& t_grid, double h = 1e-4,
                           Exec exec = Exec::parallel);

// |chi(p) - chi(H^_n) - 1/2 int_0^inf (1/(1+t) - Phi(p boxplus sqrt(t)_* H^_n)) dt|.
// [0, t_max] is covered by quad_points Gauss-Kronrod nodes on geometric panels and
// the tail [t_max, inf) by the substitution t = t_max / u. Allowed residual 1e-3.
CheckReport check_entropy_integral(const TrialConfig& config, double t_max = 100.0, int quad_points = 1005,
                                   Exec exec = Exec::parallel);
inline constexpr double kEntropyIntegralTol = 1e-3;

// Structural identities of the root maps, one margin per trial:
// -max over sub-checks of residual / threshold, bound 1.
CheckReport check_structure(const TrialConfig& config, Exec exec = Exec::parallel);

// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

// Runs one named suite with its default grids; "all" runs every suite that the
// configured n admits.
std::vector<CheckReport> run_suite(std::string_view suite, const TrialConfig& config, Exec exec = Exec::parallel);

}  // namespace fflab
