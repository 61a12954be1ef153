#include "scalars.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relmod {

RootOfUnity::RootOfUnity(int ell_) : ell(ell_) {
  if (ell < 3 || ell % 2 == 0) {
    throw std::invalid_argument("RootOfUnity: ell must be odd and >= 3");
  }
  xi = std::polar(1.0, 2.0 * std::numbers::pi / ell);
}

Cplx RootOfUnity::pow(const Cplx& z) const {
  const Cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
  return std::exp(two_pi_i * z / static_cast<double>(ell));
}

Cplx RootOfUnity::qnum(const Cplx& z) const { return pow(z) - pow(-z); }

Cplx RootOfUnity::qint(const Cplx& z) const { return qnum(z) / qnum(1.0); }

Cplx RootOfUnity::qfact(int n) const {
  if (n < 0) throw std::invalid_argument("qfact: n must be >= 0");
  Cplx out = 1.0;
  for (int k = 2; k <= n; ++k) out *= qint(static_cast<double>(k));
  return out;
}

bool RootOfUnity::vanishes(const Cplx& z, double tol) const {
  if (std::abs(z.imag()) > tol) return false;
  const double t = 2.0 * z.real() / ell;
  return std::abs(t - std::round(t)) <= tol;
}

Mat qexp_trunc(const Cplx& q, const Mat& X, int max_terms) {
  if (X.rows() != X.cols()) {
    throw std::invalid_argument("qexp_trunc: X must be square");
  }
  Mat out = Mat::Identity(X.rows(), X.cols());
  Mat term = Mat::Identity(X.rows(), X.cols());
  const Cplx one = 1.0;
  for (int n = 1; n <= max_terms; ++n) {
    Mat next = term * X;  // X^n before dividing by (n)_q
    if (next.cwiseAbs().maxCoeff() < 1e-300) return out;
    // (n)_q = 1 + q + ... + q^{n-1}, stable also at q = 1.
    Cplx gauss = 0.0;
    Cplx qpow = one;
    for (int k = 0; k < n; ++k) {
      gauss += qpow;
      qpow *= q;
    }
    if (std::abs(gauss) < 1e-12) {
      throw std::domain_error("qexp_trunc: Gauss factor vanishes before nilpotency");
    }
    term = next / gauss;
    out += term;
  }
  throw std::domain_error("qexp_trunc: argument not nilpotent within max_terms");
}

}  // namespace relmod
