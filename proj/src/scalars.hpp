#pragma once
// Scalar arithmetic at a fixed odd root of unity xi = exp(2*pi*i/ell):
// braided numbers {z} = xi^z - xi^{-z}, balanced q-integers and factorials,
// and a truncated q-exponential for nilpotent matrix arguments.

#include <complex>
#include <Eigen/Dense>

namespace relmod {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

constexpr double kDefaultTol = 1e-9;

inline bool approx_zero(const Cplx& z, double tol = kDefaultTol) {
  return std::abs(z) <= tol;
}
inline bool approx_eq(const Cplx& a, const Cplx& b, double tol = kDefaultTol) {
  return std::abs(a - b) <= tol;
}

// Fixed primitive root of unity xi = exp(2*pi*i/ell), ell odd, ell >= 3.
struct RootOfUnity {
  int ell = 0;
  Cplx xi;

  explicit RootOfUnity(int ell_);

  // xi^z for a complex exponent z, as exp(2*pi*i*z/ell).
  Cplx pow(const Cplx& z) const;

  // {z} = xi^z - xi^{-z}.
  Cplx qnum(const Cplx& z) const;

  // Balanced q-integer [z] = {z}/{1}.
  Cplx qint(const Cplx& z) const;

  // Balanced q-factorial [n]! = [1][2]...[n] for n >= 0.
  Cplx qfact(int n) const;

  // True iff {z} = 0 exactly: z real and 2z/ell an integer (within tol).
  bool vanishes(const Cplx& z, double tol = kDefaultTol) const;
};

// Truncated exponential  sum_{n>=0} X^n / (n)_q!  with Gauss factorials
// (n)_q = (1-q^n)/(1-q), (n)_q! = (1)_q (2)_q ... (n)_q.  The argument must be
// nilpotent: the series stops at the first vanishing power of X.  Throws
// std::domain_error if a factor (n)_q vanishes while X^n is still nonzero,
// or if no power vanishes within max_terms.
Mat qexp_trunc(const Cplx& q, const Mat& X, int max_terms = 64);

}  // namespace relmod
