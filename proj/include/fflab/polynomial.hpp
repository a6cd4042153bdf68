#pragma once

#include <span>
#include <vector>

namespace fflab {

// Monic real polynomial of degree n stored in the alternating-sign convention
//
//   p(x) = sum_{k=0}^{n} (-1)^k a_k x^{n-k},   a_0 = 1,
//
// so that a_k is the k-th elementary symmetric polynomial of the roots.
// Plain descending coefficients c_k = (-1)^k a_k are only used at the
// serialization boundary (see descending()/from_descending()).
class Polynomial {
 public:
  // The constant polynomial 1 (degree 0).
  Polynomial();

  // Takes a_0..a_n. Non-monic input is normalized by a_0 (which must be nonzero).
  static Polynomial from_signed(std::vector<double> a);
  // Takes plain descending coefficients c_0..c_n (c_0 = leading); normalizes to monic.
  static Polynomial from_descending(std::span<const double> c);

  // x^n
  static Polynomial monomial(int n);

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  std::span<const double> coeffs() const { return a_; }
  double operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }

  // Plain descending coefficients, leading 1 first.
  std::vector<double> descending() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<double> a) : a_(std::move(a)) {}
  std::vector<double> a_;
};

struct Moments {
  double m1;
  double m2;
  double var;
};

// prod_i (x - alpha_i), built by multiplying in one linear factor at a time.
Polynomial from_roots(std::span<const double> alpha);

// Horner evaluation.
double eval(const Polynomial& p, double x);

// (1/n) p'(x): monic, degree n-1, same roots as p'.
Polynomial derivative_monic(const Polynomial& p);

// c_*p(x) = c^n p(x/c); roots are multiplied by c. c = 0 gives x^n.
Polynomial scale(const Polynomial& p, double c);

// p(x - t); roots are translated by +t.
Polynomial shift(const Polynomial& p, double t);

// Probabilists' monic Hermite polynomial H_n (H_{k+1} = x H_k - k H_{k-1}).
Polynomial hermite(int n);

// (n-1)^{-1/2}_* H_n, the unit-variance Hermite polynomial. Requires n >= 2.
Polynomial hermite_normalized(int n);

// Root moments read off the coefficients via Vieta. Requires n >= 1.
Moments moments(const Polynomial& p);

// Root moments computed directly from a root vector.
Moments moments(std::span<const double> alpha);

}  // namespace fflab
