#include "fflab/verify.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "fflab/errors.hpp"
#include "fflab/finfree.hpp"
#include "fflab/info.hpp"
#include "fflab/jacobian.hpp"

namespace fflab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSampleRetries = 100;

}  // namespace

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::gaussian_roots: return "gaussian-roots";
    case Ensemble::uniform_roots: return "uniform-roots";
    case Ensemble::hermite: return "hermite";
    case Ensemble::clustered: return "clustered";
  }
  return "?";
}

Ensemble parse_ensemble(std::string_view name) {
  for (Ensemble e : {Ensemble::gaussian_roots, Ensemble::uniform_roots, Ensemble::hermite, Ensemble::clustered})
    if (to_string(e) == name) return e;
  throw std::invalid_argument("unknown ensemble '" + std::string(name) + "'");
}

void validate(const TrialConfig& c, int min_n) {
  if (c.n < min_n) throw std::invalid_argument("n must be >= " + std::to_string(min_n));
  if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(c.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (!(c.min_gap_guard > 0.0)) throw std::invalid_argument("min_gap_guard must be > 0");
  if (!(c.fd_step >= 1e-8 && c.fd_step <= 1e-4)) throw std::invalid_argument("fd_step must lie in [1e-8, 1e-4]");
}

// ---------------------------------------------------------------- sampling

namespace {

// One generator per (seed, trial, stream), so no two trials share state and the
// draw does not depend on which thread runs the trial.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, int stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

RootVector unit_hermite_roots(int n) {
  return heat_flow_roots(RootVector(std::vector<double>(static_cast<std::size_t>(n), 0.0)), 1.0);
}

RootVector draw(const TrialConfig& c, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(c.n);
  std::vector<double> r(n);
  switch (c.ensemble) {
    case Ensemble::gaussian_roots:
    case Ensemble::clustered: {
      std::normal_distribution<double> normal;
      for (double& x : r) x = normal(rng);
      if (c.ensemble == Ensemble::clustered && n >= 2) {
        std::sort(r.begin(), r.end(), std::greater<>());
        const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
        r[i + 1] = r[i] - 10.0 * c.min_gap_guard;
      }
      break;
    }
    case Ensemble::uniform_roots: {
      std::uniform_real_distribution<double> uniform(-1.0, 1.0);
      for (double& x : r) x = uniform(rng);
      break;
    }
    case Ensemble::hermite: {
      const double scale = std::exp(std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
      const RootVector h = unit_hermite_roots(c.n);
      for (std::size_t i = 0; i < n; ++i) r[i] = scale * h[i];
      break;
    }
  }
  return RootVector(std::move(r));
}

}  // namespace

std::optional<RootVector> sample_roots(const TrialConfig& c, std::uint64_t trial_index, int stream) {
  if (c.n < 1) throw std::invalid_argument("sampling needs n >= 1");
  std::mt19937_64 rng = trial_rng(c.seed, trial_index, stream);
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    RootVector r = draw(c, rng);
    if (r.size() < 2 || min_gap(r) >= c.min_gap_guard) return r;
  }
  return std::nullopt;
}

Polynomial sample(const TrialConfig& c, std::uint64_t trial_index) {
  const auto r = sample_roots(c, trial_index);
  if (!r) throw DegenerateInput("sampling retries exhausted for trial " + std::to_string(trial_index));
  return from_roots(*r);
}

// ---------------------------------------------------------------- runner

namespace {

struct TrialOut {
  std::vector<CheckEntry> entries;
  std::vector<std::string> side;
  std::map<std::string, double> worst;
};

RootVector need_sample(const TrialConfig& c, std::size_t trial, int stream) {
  auto r = sample_roots(c, trial, stream);
  if (!r) throw DegenerateInput("sampling retries exhausted");
  return std::move(*r);
}

// Derived root vectors (after a derivative or a convolution) obey the same guard.
void guard(const TrialConfig& c, const RootVector& r) {
  if (r.size() >= 2 && min_gap(r) < c.min_gap_guard) throw DegenerateInput("derived roots closer than the guard");
}

RootVector scaled(const RootVector& r, double s) {
  std::vector<double> v(r.begin(), r.end());
  for (double& x : v) x *= s;
  return RootVector(std::move(v));
}

// p~': roots of p' rescaled so that Var(p~') = Var(p).
RootVector rescaled_derivative(const RootVector& alpha) {
  const double n = static_cast<double>(alpha.size());
  const RootVector delta = omega_der(alpha);
  if (alpha.size() < 3) return delta;
  return scaled(delta, std::sqrt((n - 1.0) / (n - 2.0)));
}

CheckEntry entry(std::size_t trial, double margin, double bound, double raw) {
  return CheckEntry{trial, margin, bound, false, raw};
}

template <class Body>
CheckReport run_trials(std::string suite, const TrialConfig& c, std::size_t per_trial, Exec exec, Body body) {
  const auto start = std::chrono::steady_clock::now();
  const auto trials = static_cast<std::size_t>(c.trials);
  std::vector<TrialOut> out(trials);
  for_each_index(trials, exec, [&](std::size_t t) {
    TrialOut& o = out[t];
    try {
      body(t, o);
    } catch (const Error&) {
      // Degenerate sample, derived roots under the guard, stencil crossing or a
      // non-real root: the trial is skipped and counted, never passed.
      o = TrialOut{};
    }
    if (o.entries.empty()) {
      o.entries.assign(per_trial, CheckEntry{t, kNaN, 0.0, true, kNaN});
      o.side.clear();
      o.worst.clear();
    }
  });

  CheckReport rep;
  rep.suite = std::move(suite);
  rep.config = c;
  rep.min_margin = kInf;
  for (const TrialOut& o : out) {
    for (const CheckEntry& e : o.entries) {
      rep.entries.push_back(e);
      if (e.skipped) {
        ++rep.degenerate_skips;
        continue;
      }
      rep.min_margin = std::min(rep.min_margin, e.margin);
      if (!(e.margin >= -e.bound)) ++rep.failures;
    }
    for (const std::string& s : o.side) {
      ++rep.side_failures[s];
      ++rep.failures;
    }
    for (const auto& [k, v] : o.worst) rep.worst[k] = std::max(rep.worst[k], v);
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

// ---------------------------------------------------------------- inequality suites

CheckReport check_fisher_monotonicity(const TrialConfig& c, Exec exec) {
  validate(c, 2);
  return run_trials("fisher-mono", c, 1, exec, [&](std::size_t t, TrialOut& o) {
    const RootVector alpha = need_sample(c, t, 0);
    const RootVector tilde = rescaled_derivative(alpha);
    guard(c, tilde);
    const double phi = fisher(alpha);
    const double raw = phi - fisher(tilde);
    o.entries.push_back(entry(t, raw / phi, c.tol, raw));
  });
}

CheckReport check_stam(const TrialConfig& c, Exec exec) {
  validate(c, 2);
  return run_trials("stam", c, 1, exec, [&](std::size_t t, TrialOut& o) {
    const RootVector alpha = need_sample(c, t, 0);
    const RootVector beta = need_sample(c, t, 1);
    const RootVector gamma = omega_conv(alpha, beta);
    guard(c, gamma);
    const double inv_g = 1.0 / fisher(gamma);
    const double raw = inv_g - 1.0 / fisher(alpha) - 1.0 / fisher(beta);
    o.entries.push_back(entry(t, raw / inv_g, c.tol, raw));
  });
}

CheckReport check_entropy_monotonicity(const TrialConfig& c, Exec exec) {
  validate(c, 3);
  const double cn = c_constant(c.n);
  return run_trials("entropy-mono", c, 1, exec, [&](std::size_t t, TrialOut& o) {
    const RootVector alpha = need_sample(c, t, 0);
    const RootVector tilde = rescaled_derivative(alpha);
    guard(c, tilde);
    const double chi_p = entropy(alpha);
    const double chi_d = entropy(tilde);
    const double margin = chi_d + cn - chi_p;
    o.entries.push_back(entry(t, margin, c.tol, margin));
    if (!(chi_p < chi_d)) o.side.push_back("strict");
  });
}

CheckReport check_epi(const TrialConfig& c, Exec exec) {
  validate(c, 2);
  const double pairs = 0.5 * c.n * (c.n - 1);
  return run_trials("epi", c, 1, exec, [&](std::size_t t, TrialOut& o) {
    const RootVector alpha = need_sample(c, t, 0);
    const RootVector beta = need_sample(c, t, 1);
    const RootVector gamma = omega_conv(alpha, beta);
    guard(c, gamma);
    const double na = entropy_power(alpha), nb = entropy_power(beta);
    const double raw = entropy_power(gamma) - na - nb;
    o.entries.push_back(entry(t, raw / (na + nb), c.tol, raw));

    // Disc^{1/C(n,2)} superadditivity, compared as logs.
    const double la = log_discriminant(alpha) / pairs;
    const double lb = log_discriminant(beta) / pairs;
    const double lg = log_discriminant(gamma) / pairs;
    const double hi = std::max(la, lb);
    const double log_sum = hi + std::log1p(std::exp(std::min(la, lb) - hi));
    if (!(lg - log_sum >= -c.tol)) o.side.push_back("discriminant");
  });
}

std::vector<double> default_lieb_grid() { return {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}; }

CheckReport check_lieb(const TrialConfig& c, const std::vector<double>& lambdas, Exec exec) {
  validate(c, 2);
  if (lambdas.empty()) throw std::invalid_argument("lambda grid is empty");
  for (double l : lambdas)
    if (!(l >= 0.0 && l <= 1.0)) throw std::invalid_argument("lambda values must lie in [0, 1]");
  // The equality case needs p and q to be the same Hermite polynomial.
  const int q_stream = c.ensemble == Ensemble::hermite ? 0 : 1;
  return run_trials("lieb", c, lambdas.size(), exec, [&](std::size_t t, TrialOut& o) {
    const RootVector alpha = need_sample(c, t, 0);
    const RootVector beta = need_sample(c, t, q_stream);
    const double chi_a = entropy(alpha), chi_b = entropy(beta);
    for (double l : lambdas) {
      double mixed;
      if (l == 0.0) {
        mixed = chi_b;  // 0_* p = x^n is the identity for boxplus
      } else if (l == 1.0) {
        mixed = chi_a;
      } else {
        const RootVector gamma = omega_conv(scaled(alpha, std::sqrt(l)), scaled(beta, std::sqrt(1.0 - l)));
        guard(c, gamma);
        mixed = entropy(gamma);
      }
      const double margin = mixed - l * chi_a - (1.0 - l) * chi_b;
      o.entries.push_back(entry(t, margin, c.tol, margin));
    }
  });
}

// ---------------------------------------------------------------- heat-flow identities

namespace {

// Roots of p boxplus sqrt(t)_* H^_n, i.e. heat flow for time t / (n - 1).
RootVector normalized_flow(const RootVector& alpha, double t) {
  return heat_flow_roots(alpha, t / static_cast<double>(alpha.size() - 1));
}

}  // namespace

CheckReport check_debruijn(const TrialConfig& c, const std::vector<double>& t_grid, double h, Exec exec) {
  validate(c, 2);
  if (t_grid.empty()) throw std::invalid_argument("t grid is empty");
  if (!(h > 0.0)) throw std::invalid_argument("step h must be > 0");
  for (double t : t_grid)
    if (!(t > h)) throw std::invalid_argument("t grid values must exceed the step h");
  return run_trials("debruijn", c, t_grid.size(), exec, [&](std::size_t trial, TrialOut& o) {
    const RootVector alpha = need_sample(c, trial, 0);
    for (double t : t_grid) {
      const double dchi = (entropy(normalized_flow(alpha, t + h)) - entropy(normalized_flow(alpha, t - h))) / (2.0 * h);
      const double phi = fisher(normalized_flow(alpha, t));
      const double residual = std::fabs(dchi - 0.5 * phi);
      const double scale = std::pow(std::max(1.0, phi), 3);
      o.entries.push_back(entry(trial, -residual, std::max(c.tol, 100.0 * h * h * scale), dchi - 0.5 * phi));
    }
  });
}

CheckReport check_entropy_integral(const TrialConfig& c, double t_max, int quad_points, Exec exec) {
  validate(c, 2);
  if (!(t_max >= 100.0)) throw std::invalid_argument("t_max must be >= 100");
  if (quad_points < 1000) throw std::invalid_argument("quad_points must be >= 1000");
  using boost::math::quadrature::gauss_kronrod;
  const int panels = std::max(2, quad_points / 15);
  const double chi_h = hermite_entropy(c.n);

  return run_trials("entropy-integral", c, 1, exec, [&](std::size_t trial, TrialOut& o) {
    const RootVector alpha = need_sample(c, trial, 0);
    auto integrand = [&](double t) { return 1.0 / (1.0 + t) - fisher(normalized_flow(alpha, t)); };

    // The integrand varies on the scale min_gap^2 near t = 0, so panels are geometric
    // from a first edge below that scale up to t_max.
    const double g = alpha.size() >= 2 ? min_gap(alpha) : 1.0;
    const double t_lo = std::min(1e-3, 1e-2 * g * g);
    const double ratio = std::pow(t_max / t_lo, 1.0 / (panels - 1));
    double integral = gauss_kronrod<double, 15>::integrate(integrand, 0.0, t_lo, 0);
    double a = t_lo;
    for (int k = 1; k < panels; ++k) {
      const double b = k + 1 == panels ? t_max : a * ratio;
      integral += gauss_kronrod<double, 15>::integrate(integrand, a, b, 0);
      a = b;
    }
    // Tail: t = t_max / u maps [t_max, inf) onto (0, 1]; the integrand decays like t^-2
    // so the mapped integrand stays bounded at u = 0 (never evaluated there).
    auto tail = [&](double u) { return integrand(t_max / u) * t_max / (u * u); };
    integral += gauss_kronrod<double, 61>::integrate(tail, 0.0, 1.0, 5, 1e-12);

    const double diff = entropy(alpha) - (chi_h + 0.5 * integral);
    o.entries.push_back(entry(trial, -std::fabs(diff), kEntropyIntegralTol, diff));
  });
}

// ---------------------------------------------------------------- structure

namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double max_dev(std::span<const double> v, double target) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x - target));
  return m;
}

std::vector<double> times(double a, std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v *= a;
  return out;
}

// Records residual / threshold under name; the trial margin is minus the largest ratio.
struct Ratios {
  std::map<std::string, double>& worst;
  double largest = 0.0;
  void add(const std::string& name, double residual, double threshold) {
    const double r = std::isnan(residual) ? kInf : residual / threshold;
    worst[name] = std::max(worst[name], r);
    largest = std::max(largest, r);
  }
};

}  // namespace

CheckReport check_structure(const TrialConfig& c, Exec exec) {
  validate(c, 3);
  const double n = c.n;
  return run_trials("structure", c, 1, exec, [&](std::size_t trial, TrialOut& o) {
    const RootVector alpha = need_sample(c, trial, 0);
    const RootVector beta = need_sample(c, trial, 1);
    const RootVector delta = omega_der(alpha);
    const RootVector gamma = omega_conv(alpha, beta);
    guard(c, delta);
    guard(c, gamma);
    Ratios r{o.worst};

    // Derivative map: Gauss-Lucas matrix against the FD Jacobian, stochasticity, moments.
    const DenseMatrix E = gauss_lucas(alpha);
    const DenseMatrix Jd = jacobian_der_fd(alpha, c.fd_step, Exec::serial);
    r.add("gauss_lucas_vs_fd", max_abs_diff(E.data(), Jd.data()), 1e-5);
    r.add("der_row_sums", max_dev(Jd.row_sums(), 1.0), 1e-6);
    r.add("der_col_sums", max_dev(Jd.col_sums(), (n - 1.0) / n), 1e-6);
    r.add("gauss_lucas_convexity", max_abs_diff(E * alpha.values(), delta.values()), 1e-8);
    r.add("rolle_interlacing", is_interlacing(alpha, delta) ? 0.0 : kInf, 1.0);
    const Moments ma = moments(alpha.values()), md = moments(delta.values());
    r.add("der_mean", std::fabs(md.m1 - ma.m1) / std::max(1.0, std::fabs(ma.m1)), 1e-8);
    r.add("der_variance", std::fabs(md.var - (n - 2.0) / (n - 1.0) * ma.var) / ma.var, 1e-8);

    const std::vector<double> sd = singular_values(Jd);
    r.add("der_sigma1", std::fabs(sd[0] - std::sqrt((n - 1.0) / n)), 1e-6);
    r.add("der_sigma2", std::fabs(sd[1] - std::sqrt((n - 2.0) / n)), 1e-6);

    const DenseMatrix P = differentiator(alpha);
    const DenseMatrix PPt = P * P.transpose();
    r.add("differentiator_orthonormal", max_abs_diff(PPt.data(), DenseMatrix::identity(PPt.rows()).data()), 1e-9);
    r.add("differentiator_kills_ones", max_abs(P * std::vector<double>(alpha.size(), 1.0)), 1e-9);

    // Convolution map: double stochasticity of both blocks, singular values, moments.
    const DenseMatrix Jc = jacobian_conv_fd(alpha, beta, c.fd_step, Exec::serial);
    const std::size_t m = alpha.size();
    for (std::size_t b = 0; b < 2; ++b) {
      const DenseMatrix blk = Jc.block_cols(b * m, m);
      r.add("conv_min_entry", std::max(0.0, -blk.min_entry()), 1e-7);
      r.add("conv_row_sums", max_dev(blk.row_sums(), 1.0), 1e-6);
      r.add("conv_col_sums", max_dev(blk.col_sums(), 1.0), 1e-6);
    }
    const std::vector<double> sc = singular_values(Jc);
    r.add("conv_sigma1", std::fabs(sc[0] - std::sqrt(2.0)), 1e-5);
    r.add("conv_sigma2", std::fabs(sc[1] - 1.0), 1e-5);
    const Moments mb = moments(beta.values()), mg = moments(gamma.values());
    r.add("conv_mean", std::fabs(mg.m1 - ma.m1 - mb.m1) / std::max(1.0, std::fabs(mg.m1)), 1e-8);
    r.add("conv_variance", std::fabs(mg.var - ma.var - mb.var) / mg.var, 1e-8);

    // Score transport through both Jacobians. Residuals are relative to the size of
    // the transported score, which grows like 1/min_gap.
    const std::vector<double> sa = score(alpha), sb = score(beta);
    const std::vector<double> lhs_d = score(delta);
    const std::vector<double> rhs_d = Jd * std::span<const double>(sa);
    r.add("score_transport_der", max_abs_diff(lhs_d, rhs_d) / std::max(1.0, max_abs(sa)), 1e-5);
    const std::vector<double> sg = score(gamma);
    for (const auto& [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, -1.0}}) {
      std::vector<double> w;
      w.reserve(2 * m);
      for (double x : sa) w.push_back(a * x);
      for (double x : sb) w.push_back(b * x);
      const std::vector<double> rhs = Jc * std::span<const double>(w);
      const std::vector<double> lhs = times(a + b, sg);
      r.add("score_transport_conv", max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(w)), 1e-5);
    }

    o.entries.push_back(entry(trial, -r.largest, 1.0, r.largest));
  });
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fisher-mono", "stam",           "entropy-mono",     "epi",
                                              "lieb",        "debruijn",       "entropy-integral", "structure"};
  return names;
}

std::vector<CheckReport> run_suite(std::string_view suite, const TrialConfig& c, Exec exec) {
  auto one = [&](std::string_view s) -> CheckReport {
    if (s == "fisher-mono") return check_fisher_monotonicity(c, exec);
    if (s == "stam") return check_stam(c, exec);
    if (s == "entropy-mono") return check_entropy_monotonicity(c, exec);
    if (s == "epi") return check_epi(c, exec);
    if (s == "lieb") return check_lieb(c, default_lieb_grid(), exec);
    if (s == "debruijn") return check_debruijn(c, {0.25, 1.0, 4.0}, 1e-4, exec);
    if (s == "entropy-integral") return check_entropy_integral(c, 100.0, 1005, exec);
    if (s == "structure") return check_structure(c, exec);
    throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
  };
  if (suite != "all") return {one(suite)};
  std::vector<CheckReport> out;
  for (const std::string& s : suite_names()) {
    if (c.n < 3 && (s == "entropy-mono" || s == "structure")) continue;
    out.push_back(one(s));
  }
  return out;
}

}  // namespace fflab
