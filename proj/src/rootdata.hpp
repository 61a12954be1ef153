#pragma once
// Root data for the special linear Lie superalgebra sl(m|n), m != n, and the
// bilinear form it induces on the dual Cartan quotient h*.
//
// Conventions. Rank r = m+n-1; node signs d_i = +1 for i <= m and -1 for
// i > m; Cartan matrix A with diag(d)*A the Gram matrix of the simple roots
// in the eps/delta inner product (eps_i . eps_j = delta_ij,
// del_i . del_j = -delta_ij). Weights are stored by their coordinates
// c_i = lambda(H_i); the pairing of two weights uses the Gram matrix
// W = diag(d) * A^{-1}, the form of the quotient h* = X*/(C str). Pairings
// of a weight against root-lattice elements are representative independent:
// <lambda, alpha_i> = d_i c_i.

#include <vector>

#include "scalars.hpp"

namespace relmod {

// A root written in the simple-root basis. odd marks parity.
struct Root {
  Eigen::VectorXi k;
  bool odd = false;
};

// Weight in H-coordinates c_1..c_r. All entries may be complex; modules over
// the unrolled quantum group only require c_m to leave the integers.
using Weight = Eigen::VectorXcd;

struct RootSystem {
  int m = 0;
  int n = 0;
  int r = 0;
  Eigen::VectorXi d;           // node signs, size r
  Eigen::MatrixXi cartan;      // A
  Eigen::MatrixXi gram_roots;  // <alpha_i, alpha_j> = d_i * A_ij
  Eigen::MatrixXd gram_w;      // W = diag(d) * A^{-1}
  std::vector<Root> pos_even;  // eps_i - eps_j (i<j), del_i - del_j (i<j)
  std::vector<Root> pos_odd;   // eps_i - del_j, all i, j

  RootSystem(int m_, int n_);
};

// <lambda, mu> on h*.
Cplx pair_ww(const RootSystem& rs, const Weight& a, const Weight& b);

// <lambda, beta> for beta in the root lattice.
Cplx pair_wr(const RootSystem& rs, const Weight& a, const Root& beta);

// <beta, gamma> for root-lattice elements.
int pair_rr(const RootSystem& rs, const Root& beta, const Root& gamma);

// A root-lattice element as a weight: c_i = d_i <alpha_i, beta>.
Weight root_as_weight(const RootSystem& rs, const Root& beta);

// Weyl vector rho = sum of the fundamental weights away from node m
// (c_i = 1 for i != m, c_m = 0). Its odd counterpart is absorbed into the
// closed formulas used downstream.
Weight rho_weight(const RootSystem& rs);

// Shift weight pi at level ell: c_i = 2 - 2*ell for i != m,
// c_m = ell*(m - n).
Weight pi_weight(const RootSystem& rs, int ell);

// str-orthogonal representative of a weight in the eps/delta basis
// (coefficients of eps_1..eps_m, del_1..del_n; size m+n).
Eigen::VectorXcd epsdelta_rep(const RootSystem& rs, const Weight& a);

// The eps/delta inner product on X* (size-(m+n) coefficient vectors).
Cplx pair_epsdelta(int m, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g);

// Convenience constructor from c-coordinates.
Weight make_weight(const RootSystem& rs, const std::vector<Cplx>& c);

}  // namespace relmod
