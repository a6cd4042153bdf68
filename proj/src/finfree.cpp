#include "fflab/finfree.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wide.hpp"

namespace fflab {

using boost::multiprecision::cpp_int;

double convolution_weight(int n, int i, int j) {
  if (i < 0 || j < 0 || i + j > n) throw std::invalid_argument("convolution weight out of range");
  double w = 1.0;
  for (int m = 0; m < j; ++m) w *= static_cast<double>(n - i - m) / static_cast<double>(n - m);
  return w;
}

namespace {

void require_same_degree(const Polynomial& p, const Polynomial& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("convolution needs equal degrees");
  if (p.degree() < 1) throw std::invalid_argument("convolution needs degree >= 1");
}

template <class Term>
std::vector<double> weighted_sum(int n, Term term) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += convolution_weight(n, i, j) * term(i, j);
  return c;
}

}  // namespace

Polynomial convolve(const Polynomial& p, const Polynomial& q) {
  require_same_degree(p, q);
  return Polynomial::from_signed(weighted_sum(p.degree(), [&](int i, int j) { return p[i] * q[j]; }));
}

std::vector<double> convolution_term_scale(const Polynomial& p, const Polynomial& q) {
  require_same_degree(p, q);
  return weighted_sum(p.degree(), [&](int i, int j) { return std::fabs(p[i] * q[j]); });
}

namespace {

// Depth-first enumeration of S_n sharing partial products between permutations
// with a common prefix. e holds the elementary symmetric sums of the prefix.
void enumerate(const std::vector<cpp_int>& a, const std::vector<cpp_int>& b, std::vector<bool>& used,
               std::vector<cpp_int>& e, std::size_t depth, std::vector<cpp_int>& total) {
  const std::size_t n = a.size();
  if (depth == n) {
    for (std::size_t k = 0; k <= n; ++k) total[k] += e[k];
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    const cpp_int s = a[depth] + b[j];
    std::vector<cpp_int> next(e);
    for (std::size_t k = depth + 1; k >= 1; --k) next[k] += s * e[k - 1];
    enumerate(a, b, used, next, depth + 1, total);
    used[j] = false;
  }
}

}  // namespace

std::vector<ExactRational> convolve_oracle(std::span<const ExactRational> alpha,
                                           std::span<const ExactRational> beta) {
  const std::size_t n = alpha.size();
  if (beta.size() != n) throw std::invalid_argument("oracle needs equal-length root vectors");
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n > 8) throw std::invalid_argument("permutation oracle is capped at n = 8");

  // Clear denominators: with L the lcm, every alpha_i + beta_j is an integer over L.
  cpp_int L = 1;
  for (const auto* v : {&alpha, &beta})
    for (const auto& r : *v) L = boost::multiprecision::lcm(L, boost::multiprecision::denominator(r));
  auto scaled = [&](std::span<const ExactRational> v) {
    std::vector<cpp_int> out;
    out.reserve(n);
    for (const auto& r : v) out.push_back(boost::multiprecision::numerator(r) * (L / boost::multiprecision::denominator(r)));
    return out;
  };
  const std::vector<cpp_int> a = scaled(alpha);
  const std::vector<cpp_int> b = scaled(beta);

  std::vector<cpp_int> total(n + 1, 0);
  std::vector<cpp_int> e(n + 1, 0);
  e[0] = 1;
  std::vector<bool> used(n, false);
  enumerate(a, b, used, e, 0, total);

  cpp_int nfact = 1;
  for (std::size_t k = 2; k <= n; ++k) nfact *= k;
  std::vector<ExactRational> out(n + 1);
  cpp_int Lk = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = ExactRational(total[k], nfact * Lk);
    Lk *= L;
  }
  return out;
}

Polynomial heat_flow(const Polynomial& p, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("heat flow time must be >= 0");
  if (p.degree() < 1) throw std::invalid_argument("heat flow needs degree >= 1");
  return convolve(p, scale(hermite(p.degree()), std::sqrt(t)));
}

Polynomial heat_flow_operator(const Polynomial& p, double t) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("heat flow needs degree >= 1");
  const std::vector<double> c = p.descending();  // c[i] multiplies x^{n-i}
  std::vector<double> out(c.size(), 0.0);
  for (int m = 0; m <= n; ++m) {
    // Coefficient of x^m collects (-t/2)^k/k! * c_{n-m-2k} * (m+2k)!/m!.
    double f = 1.0;
    double acc = 0.0;
    for (int k = 0; n - m - 2 * k >= 0; ++k) {
      if (k > 0) f *= (-t / 2.0) / k * (m + 2 * k - 1) * (m + 2 * k);
      acc += f * c[static_cast<std::size_t>(n - m - 2 * k)];
    }
    out[static_cast<std::size_t>(n - m)] = acc;
  }
  return Polynomial::from_descending(out);
}

namespace {

// Zero of f(s) = sum_h m_h / (s - d_h) on (0, w), where d_h = v_h - lo and the
// bracket endpoints are consecutive poles. f decreases from +inf to -inf.
double secular_zero(const std::vector<double>& d, const std::vector<int>& mult, double w) {
  auto eval = [&](double s, double& f, double& df) {
    f = 0.0;
    df = 0.0;
    for (std::size_t h = 0; h < d.size(); ++h) {
      const double r = 1.0 / (s - d[h]);
      f += mult[h] * r;
      df -= mult[h] * r * r;
    }
  };
  double lo = 0.0, hi = w;
  double s = 0.5 * w;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 200; ++it) {
    double f, df;
    eval(s, f, df);
    if (f == 0.0) return s;
    if (f > 0.0)
      lo = s;
    else
      hi = s;
    if (hi - lo <= 2.0 * eps * w) break;
    double next = s - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - s) <= eps * w) {
      s = next;
      break;
    }
    s = next;
  }
  return s;
}

}  // namespace

RootVector omega_der(const RootVector& alpha) {
  const std::size_t n = alpha.size();
  if (n < 2) throw std::invalid_argument("omega_der needs n >= 2");
  std::vector<double> v;
  std::vector<int> mult;
  for (double x : alpha) {
    if (!v.empty() && x == v.back())
      ++mult.back();
    else {
      v.push_back(x);
      mult.push_back(1);
    }
  }
  std::vector<double> out;
  out.reserve(n - 1);
  for (std::size_t g = 0; g < v.size(); ++g)
    for (int r = 1; r < mult[g]; ++r) out.push_back(v[g]);
  std::vector<double> d(v.size());
  for (std::size_t g = 0; g + 1 < v.size(); ++g) {
    const double lo = v[g + 1];
    for (std::size_t h = 0; h < v.size(); ++h) d[h] = v[h] - lo;
    out.push_back(lo + secular_zero(d, mult, v[g] - lo));
  }
  return RootVector(std::move(out));
}

namespace {

// Quad-precision coefficients keep the coefficient -> root step accurate well past
// the degree where double coefficients lose the roots (n around 25 for spread roots).
constexpr double kWideEps = 1e-32;

}  // namespace

RootVector omega_conv(const RootVector& alpha, const RootVector& beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw std::invalid_argument("omega_conv needs equal lengths n >= 1");
  return wide::real_roots(wide::convolve(wide::from_roots(alpha), wide::from_roots(beta)), kWideEps,
                          kDefaultRootTol);
}

RootVector heat_flow_roots(const RootVector& alpha, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("heat flow time must be >= 0");
  if (alpha.empty()) throw std::invalid_argument("heat flow needs n >= 1");
  if (t == 0.0) return alpha;
  const int n = static_cast<int>(alpha.size());
  return wide::real_roots(wide::convolve(wide::from_roots(alpha), wide::scaled_hermite(n, t)), kWideEps,
                          kDefaultRootTol);
}

}  // namespace fflab
