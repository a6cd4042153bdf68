// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fflab/dense_matrix.hpp"
#include "fflab/errors.hpp"
#include "fflab/finfree.hpp"
#include "fflab/info.hpp"
#include "fflab/jacobian.hpp"
#include "fflab/verify.hpp"

using namespace fflab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failed = 0;

void criterion(int id, const char* name, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < time_limit;
  const bool pass = o.ok && in_time;
  if (!pass) ++failed;
  std::printf("%s %2d %-44s %s [%.2fs / limit %.0fs%s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              time_limit, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::mt19937_64 rng(12345);

RootVector gaussian_roots(int n, double gap) {
  std::normal_distribution<double> g;
  for (;;) {
    std::vector<double> r(static_cast<std::size_t>(n));
    for (double& x : r) x = g(rng);
    RootVector v(std::move(r));
    if (min_gap(v) >= gap) return v;
  }
}

// |x_k - y_k| relative to the size of the terms summed into y_k.
double termwise_error(std::span<const double> x, std::span<const double> y, std::span<const double> terms) {
  double worst = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k)
    worst = std::max(worst, std::fabs(x[k] - y[k]) / std::max({std::fabs(y[k]), terms[k], 1e-300}));
  return worst;
}

TrialConfig config(int n, int trials, Ensemble e, std::uint64_t seed = 1) {
  TrialConfig c;
  c.n = n;
  c.trials = trials;
  c.ensemble = e;
  c.seed = seed;
  return c;
}

// Runs a suite over the sweep and gathers failures, skips and the worst margin; hermite
// margins must lie within +-hermite_tol and every random-ensemble margin above margin_floor.
Outcome sweep(const std::function<CheckReport(const TrialConfig&)>& suite, const std::vector<int>& ns,
              double hermite_tol, double margin_floor = -INFINITY, int hermite_trials = 100) {
  std::size_t failures = 0, skips = 0, trials = 0;
  double worst = INFINITY, hermite_worst = 0.0;
  for (int n : ns) {
    for (Ensemble e : {Ensemble::gaussian_roots, Ensemble::uniform_roots}) {
      const CheckReport r = suite(config(n, 1000, e));
      failures += r.failures;
      skips += r.degenerate_skips;
      trials += r.entries.size();
      worst = std::min(worst, r.min_margin);
    }
    const CheckReport h = suite(config(n, hermite_trials, Ensemble::hermite));
    for (const CheckEntry& e : h.entries) hermite_worst = std::max(hermite_worst, std::fabs(e.margin));
    failures += h.failures;
  }
  return {failures == 0 && hermite_worst <= hermite_tol && worst >= margin_floor,
          "entries=" + std::to_string(trials) + " failures=" + std::to_string(failures) + " skips=" +
              std::to_string(skips) + fmt(" min_margin=%.3g", worst) + fmt(" hermite_max|margin|=%.2g", hermite_worst)};
}

}  // namespace

int main() {
  const std::vector<int> ns{3, 5, 10, 25};

  criterion(1, "convolution formula vs permutation average", 60, [] {
    double worst = 0.0;
    for (int n = 2; n <= 7; ++n)
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<ExactRational> a, b;
        std::vector<double> ad, bd;
        for (int i = 0; i < n; ++i)
          for (auto* v : {&a, &b}) {
            const int d = 1 + static_cast<int>(rng() % 8);
            const int k = static_cast<int>(rng() % (8 * d + 1)) - 4 * d;
            v->emplace_back(k, d);
            (v == &a ? ad : bd).push_back(v->back().convert_to<double>());
          }
        const auto exact = convolve_oracle(a, b);
        std::vector<double> e;
        for (const auto& x : exact) e.push_back(x.convert_to<double>());
        const Polynomial p = from_roots(ad), q = from_roots(bd);
        worst = std::max(worst, termwise_error(convolve(p, q).coeffs(), e, convolution_term_scale(p, q)));
      }
    return Outcome{worst <= 1e-10, fmt("max relative error %.2e", worst)};
  });

  criterion(2, "heat flow: convolution vs operator series", 10, [] {
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + trial % 32;
      std::vector<double> r(static_cast<std::size_t>(n));
      std::normal_distribution<double> g;
      for (double& x : r) x = g(rng);
      const Polynomial p = from_roots(r);
      const double t = std::uniform_real_distribution<double>(0.0, 4.0)(rng);
      const Polynomial h = scale(hermite(n), std::sqrt(t));
      worst = std::max(worst, termwise_error(heat_flow(p, t).coeffs(), heat_flow_operator(p, t).coeffs(),
                                             convolution_term_scale(p, h)));
    }
    return Outcome{worst <= 1e-10, fmt("max relative error %.2e", worst)};
  });

  criterion(3, "Fisher information monotonicity", 120,
            [&] { return sweep([](const TrialConfig& c) { return check_fisher_monotonicity(c); }, ns, 1e-8); });

  criterion(4, "Stam inequality", 180,
            [&] { return sweep([](const TrialConfig& c) { return check_stam(c); }, ns, 1e-7); });

  criterion(5, "entropy monotonicity and C_n < 0", 120, [&] {
    Outcome o = sweep([](const TrialConfig& c) { return check_entropy_monotonicity(c); }, ns, 1e-8);
    double route_gap = 0.0, largest = -INFINITY;
    for (int n = 3; n <= 200; ++n) {
      route_gap = std::max(route_gap, std::fabs(c_constant(n) - (hermite_entropy(n) - hermite_entropy(n - 1))));
      largest = std::max({largest, c_constant(n), hermite_entropy(n) - hermite_entropy(n - 1)});
    }
    o.ok = o.ok && route_gap <= 1e-12 && largest < 0.0;
    o.detail += fmt(" C_n routes differ by %.1e", route_gap) + fmt(" max C_n=%.3g", largest);
    return o;
  });

  criterion(6, "entropy power inequality", 120,
            [&] { return sweep([](const TrialConfig& c) { return check_epi(c); }, ns, 1e-8, -1e-8); });

  criterion(7, "de Bruijn identity along the heat flow", 60, [] {
    std::size_t failures = 0, entries = 0;
    double worst = 0.0;
    for (int n : {2, 4, 8, 16}) {
      TrialConfig c = config(n, 50, Ensemble::gaussian_roots);
      c.tol = 1e-6;
      const CheckReport r = check_debruijn(c, {0.25, 1.0, 4.0}, 1e-4);
      failures += r.failures;
      entries += r.entries.size();
      for (const CheckEntry& e : r.entries)
        if (!e.skipped) worst = std::max(worst, -e.margin);
    }
    return Outcome{failures == 0, "entries=" + std::to_string(entries) + " failures=" + std::to_string(failures) +
                                      fmt(" max residual %.2e", worst)};
  });

  criterion(8, "Gauss-Lucas matrix and differentiator", 60, [] {
    double fd = 0.0, ortho = 0.0, charpoly = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 19;
      const RootVector a = gaussian_roots(n, 1e-2), u = gaussian_roots(n, 0.0);
      fd = std::max(fd, max_abs_diff(gauss_lucas(a).data(), jacobian_der_fd(a, 1e-6, Exec::serial).data()));
      const DenseMatrix P = differentiator(a);
      const DenseMatrix PPt = P * P.transpose();
      ortho = std::max(ortho, max_abs_diff(PPt.data(), DenseMatrix::identity(PPt.rows()).data()));
      DenseMatrix D(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) D(i, i) = u[i];
      const Polynomial lhs = from_roots(symmetric_eigen(P * D * P.transpose()).values);
      const Polynomial rhs = derivative_monic(from_roots(u));
      double scale = 1.0, diff = 0.0;
      for (int k = 0; k < n; ++k) {
        scale = std::max(scale, std::fabs(rhs[k]));
        diff = std::max(diff, std::fabs(lhs[k] - rhs[k]));
      }
      charpoly = std::max(charpoly, diff / scale);
    }
    return Outcome{fd <= 1e-5 && ortho <= 1e-8 && charpoly <= 1e-8,
                   fmt("GL vs FD %.1e", fd) + fmt(" |PP^T - I| %.1e", ortho) + fmt(" char poly %.1e", charpoly)};
  });

  criterion(9, "singular values and vectors of the Jacobians", 60, [] {
    double der = 0.0, conv = 0.0, align = 0.0;
    for (int n : {3, 8, 16})
      for (int trial = 0; trial < 200; ++trial) {
        const RootVector a = gaussian_roots(n, 1e-2), b = gaussian_roots(n, 1e-2);
        const Svd f = svd(jacobian_der_fd(a, 1e-6, Exec::serial));
        der = std::max({der, std::fabs(f.singular[0] - std::sqrt((n - 1.0) / n)),
                        std::fabs(f.singular[1] - std::sqrt((n - 2.0) / n))});
        const std::vector<double> ca = centered(a), cd = centered(omega_der(a).values());
        const std::vector<double> v = f.right.column(1), w = f.left.column(1);
        const double cos_r = std::fabs(dot(v, ca)) / (norm2(v) * norm2(ca));
        const double cos_l = std::fabs(dot(w, cd)) / (norm2(w) * norm2(cd));
        align = std::max({align, 1.0 - cos_r, 1.0 - cos_l});
        if (trial % 4 == 0) {
          const std::vector<double> s = singular_values(jacobian_conv_fd(a, b, 1e-6, Exec::serial));
          conv = std::max({conv, std::fabs(s[0] - std::sqrt(2.0)), std::fabs(s[1] - 1.0)});
        }
      }
    return Outcome{der <= 1e-6 && conv <= 1e-5 && align <= 1e-6,
                   fmt("J_der %.1e", der) + fmt(" J_conv %.1e", conv) + fmt(" 1-cos %.1e", align)};
  });

  criterion(10, "double stochasticity of the FD Jacobians", 60, [] {
    double neg = 0.0, rows = 0.0, cols = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + trial % 8;
      const RootVector a = gaussian_roots(n, 1e-2), b = gaussian_roots(n, 1e-2);
      const DenseMatrix jd = jacobian_der_fd(a, 1e-6, Exec::serial);
      for (double x : jd.row_sums()) rows = std::max(rows, std::fabs(x - 1.0));
      for (double x : jd.col_sums()) cols = std::max(cols, std::fabs(x - (n - 1.0) / n));
      neg = std::max(neg, -jd.min_entry());
      const DenseMatrix jc = jacobian_conv_fd(a, b, 1e-6, Exec::serial);
      for (std::size_t blk = 0; blk < 2; ++blk) {
        const DenseMatrix m = jc.block_cols(blk * n, n);
        neg = std::max(neg, -m.min_entry());
        for (double x : m.row_sums()) rows = std::max(rows, std::fabs(x - 1.0));
        for (double x : m.col_sums()) cols = std::max(cols, std::fabs(x - 1.0));
      }
    }
    return Outcome{neg <= 1e-7 && rows <= 1e-6 && cols <= 1e-6,
                   fmt("most negative entry %.1e", -neg) + fmt(" row sums %.1e", rows) + fmt(" col sums %.1e", cols)};
  });

  criterion(11, "score transport through both Jacobians", 60, [] {
    double der = 0.0, conv = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + trial % 8;
      const RootVector a = gaussian_roots(n, 1e-2), b = gaussian_roots(n, 1e-2);
      const std::vector<double> sa = score(a), sb = score(b);
      der = std::max(der, max_abs_diff(score(omega_der(a)), jacobian_der_fd(a, 1e-6, Exec::serial) * sa));
      const DenseMatrix jc = jacobian_conv_fd(a, b, 1e-6, Exec::serial);
      const std::vector<double> sg = score(omega_conv(a, b));
      for (const auto& [x, y] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, -1.0}}) {
        std::vector<double> w, lhs;
        for (double s : sa) w.push_back(x * s);
        for (double s : sb) w.push_back(y * s);
        for (double s : sg) lhs.push_back((x + y) * s);
        conv = std::max(conv, max_abs_diff(lhs, jc * w));
      }
    }
    return Outcome{der <= 1e-5 && conv <= 1e-5, fmt("derivative %.1e", der) + fmt(" convolution %.1e", conv)};
  });

  criterion(12, "physicists' Hermite discriminant", 5, [] {
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
      std::vector<double> r;
      for (double x : real_roots(hermite(n))) r.push_back(x / std::sqrt(2.0));
      const double log_a = n * std::log(2.0);
      const double from_roots = log_discriminant(RootVector(r)) + 2.0 * (n - 1) * log_a;
      const double formula = physicist_hermite_log_disc(n);
      worst = std::max(worst, std::fabs(from_roots - formula) / std::fabs(formula));
    }
    return Outcome{worst <= 1e-9, fmt("max relative error %.1e", worst)};
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
