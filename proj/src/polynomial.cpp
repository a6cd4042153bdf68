#include "fflab/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace fflab {

namespace {

void require_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("polynomial coefficients must be finite");
}

}  // namespace

Polynomial::Polynomial() : a_{1.0} {}

Polynomial Polynomial::from_signed(std::vector<double> a) {
  if (a.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  require_finite(a);
  if (a[0] == 0.0) throw std::invalid_argument("leading coefficient is zero");
  const double lead = a[0];
  for (double& x : a) x /= lead;
  a[0] = 1.0;
  return Polynomial(std::move(a));
}

Polynomial Polynomial::from_descending(std::span<const double> c) {
  std::vector<double> a(c.begin(), c.end());
  for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
  return from_signed(std::move(a));
}

Polynomial Polynomial::monomial(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[0] = 1.0;
  return Polynomial(std::move(a));
}

std::vector<double> Polynomial::descending() const {
  std::vector<double> c(a_);
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return c;
}

Polynomial from_roots(std::span<const double> alpha) {
  require_finite(alpha);
  // a_j are elementary symmetric polynomials: e_j <- e_j + r e_{j-1}.
  std::vector<double> a(alpha.size() + 1, 0.0);
  a[0] = 1.0;
  std::size_t deg = 0;
  for (double r : alpha) {
    ++deg;
    for (std::size_t j = deg; j >= 1; --j) a[j] += r * a[j - 1];
  }
  return Polynomial::from_signed(std::move(a));
}

double eval(const Polynomial& p, double x) {
  const auto a = p.coeffs();
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc = acc * x + ((k & 1) ? -a[k] : a[k]);
  return acc;
}

Polynomial derivative_monic(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("derivative of a degree-0 polynomial");
  std::vector<double> b(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(k)] = p[k] * (n - k) / n;
  return Polynomial::from_signed(std::move(b));
}

Polynomial scale(const Polynomial& p, double c) {
  std::vector<double> a(p.coeffs().begin(), p.coeffs().end());
  double ck = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    ck *= c;
    a[k] *= ck;
  }
  return Polynomial::from_signed(std::move(a));
}

Polynomial shift(const Polynomial& p, double t) {
  // Taylor shift on ascending plain coefficients: b(x) -> b(x - t).
  const int n = p.degree();
  std::vector<double> desc = p.descending();
  std::vector<double> b(desc.rbegin(), desc.rend());
  const double s = -t;
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j)
      b[static_cast<std::size_t>(j)] += s * b[static_cast<std::size_t>(j) + 1];
  std::vector<double> out(b.rbegin(), b.rend());
  return Polynomial::from_descending(out);
}

Polynomial hermite(int n) {
  if (n < 0) throw std::invalid_argument("negative Hermite degree");
  // Signed convention: new_m = a_m - k * b_{m-2}.
  std::vector<double> prev{1.0};         // H_0
  if (n == 0) return Polynomial::from_signed(prev);
  std::vector<double> cur{1.0, 0.0};     // H_1
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur);
    next.push_back(0.0);
    for (std::size_t m = 2; m < next.size(); ++m) next[m] -= k * prev[m - 2];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Polynomial::from_signed(std::move(cur));
}

Polynomial hermite_normalized(int n) {
  if (n < 2) throw std::invalid_argument("normalized Hermite needs n >= 2");
  return scale(hermite(n), 1.0 / std::sqrt(static_cast<double>(n - 1)));
}

Moments moments(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("moments need degree >= 1");
  const double a1 = p[1];
  const double a2 = n >= 2 ? p[2] : 0.0;
  const double m1 = a1 / n;
  const double m2 = (a1 * a1 - 2.0 * a2) / n;
  return {m1, m2, m2 - m1 * m1};
}

Moments moments(std::span<const double> alpha) {
  if (alpha.empty()) throw std::invalid_argument("moments of an empty root vector");
  const double n = static_cast<double>(alpha.size());
  double s1 = 0.0;
  for (double x : alpha) s1 += x;
  const double m1 = s1 / n;
  double s2 = 0.0, c2 = 0.0;
  for (double x : alpha) {
    s2 += x * x;
    c2 += (x - m1) * (x - m1);
  }
  return {m1, s2 / n, c2 / n};
}

}  // namespace fflab
