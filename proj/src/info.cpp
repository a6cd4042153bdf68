#include "fflab/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fflab/errors.hpp"

namespace fflab {

namespace {

bool has_repeat(const RootVector& alpha) {
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] == alpha[i + 1]) return true;
  return false;
}

}  // namespace

std::vector<double> score(const RootVector& alpha) {
  const std::size_t n = alpha.size();
  if (n == 0) throw std::invalid_argument("score of an empty root vector");
  if (has_repeat(alpha)) throw RepeatedRoot("score is undefined at a repeated root");
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = 1.0 / (alpha[i] - alpha[j]);
      s[i] += r;
      s[j] -= r;
    }
  return s;
}

double fisher(const RootVector& alpha) {
  const std::size_t n = alpha.size();
  if (n == 0) throw std::invalid_argument("fisher of an empty root vector");
  if (n == 1) return 0.0;
  if (has_repeat(alpha)) return std::numeric_limits<double>::infinity();
  const std::vector<double> s = score(alpha);
  const double c = 2.0 / static_cast<double>(n - 1);
  double acc = 0.0;
  for (double x : s) acc += (c * x) * (c * x);
  return acc / static_cast<double>(n);
}

double log_discriminant(const RootVector& alpha) {
  const std::size_t n = alpha.size();
  if (n < 2) throw std::invalid_argument("log discriminant needs n >= 2");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) acc += std::log(std::fabs(alpha[i] - alpha[j]));
  return 2.0 * acc;
}

double entropy(const RootVector& alpha) {
  const double n = static_cast<double>(alpha.size());
  if (alpha.size() < 2) throw std::invalid_argument("entropy needs n >= 2");
  return log_discriminant(alpha) / (n * (n - 1.0));
}

double entropy_power(const RootVector& alpha) { return std::exp(2.0 * entropy(alpha)); }

double sum_k_log_k(int n) {
  double acc = 0.0;
  for (int k = 2; k <= n; ++k) acc += k * std::log(static_cast<double>(k));
  return acc;
}

double hermite_entropy(int n) {
  if (n < 2) throw std::invalid_argument("hermite_entropy needs n >= 2");
  const double nn = n;
  return -0.5 * std::log(nn - 1.0) + sum_k_log_k(n) / (nn * (nn - 1.0));
}

double c_constant(int n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  const double nn = n;
  return 0.5 * std::log((nn - 2.0) / (nn - 1.0)) + std::log(nn) / (nn - 1.0) -
         2.0 / (nn * (nn - 1.0) * (nn - 2.0)) * sum_k_log_k(n - 1);
}

double physicist_hermite_log_disc(int n) {
  if (n < 1) throw std::invalid_argument("Hermite discriminant needs n >= 1");
  const double nn = n;
  return 1.5 * nn * (nn - 1.0) * std::log(2.0) + sum_k_log_k(n);
}

}  // namespace fflab
