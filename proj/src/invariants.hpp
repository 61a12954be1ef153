#pragma once
// Closed-form invariant data of the unrolled quantum supergroup of sl(m|n)
// at an odd root of unity: typicality and the alcove, gradings and lattices,
// twists, the open Hopf link scalar S', modified dimensions for both the
// projective and the perturbative trace, the compatibility map psi, and the
// sl(2|1) Kirby color with its surgery normalization scalars Delta_pm.
//
// Everything here is scalar arithmetic on weights. The module-level
// counterparts (actual representations, braidings, tangle evaluation) live
// in repr_sl21 / braiding / tangles and are tested against these formulas.

#include <vector>

#include "errors.hpp"
#include "rootdata.hpp"
#include "scalars.hpp"

namespace relmod {

// Which m-trace normalizes modified dimensions: the projective ideal (generic
// weights, d = mdim_proj) or the perturbative ideal (alcove weights,
// d = mdim_pert).
enum class Ideal { Projective, Perturbative };

// Aggregates the root datum with the fixed root of unity. Requires
// ell >= m + n - 1 (and RootOfUnity already requires ell odd, >= 3).
struct Context {
  RootSystem rs;
  RootOfUnity root;
  Ideal ideal;
  double tol;

  Context(int m, int n, int ell, Ideal ideal_ = Ideal::Perturbative,
          double tol_ = kDefaultTol);
};

// ---------------------------------------------------------------- typicality

struct TypicalityReport {
  bool typical = false;
  // Odd positive roots alpha with {<lambda + rho, alpha>} = 0.
  std::vector<Root> vanishing;
  // True when the smallest odd factor is within warn_margin of zero while
  // still counted as nonzero; such weights sit numerically near a wall.
  bool near_wall = false;
};

// Analytic test: lambda is typical iff no odd factor of the product
// prod_{alpha in Delta_1^+} {<lambda + rho, alpha>} vanishes.
TypicalityReport is_typical(const Context& cx, const Weight& lam);

// Arithmetic form of the same condition, written directly in the
// coordinates (c, a): for every 1 <= i <= m, 1 <= j <= n,
//   sum_{k=i}^{m-1} c_k + a - sum_{k=m+1}^{m+j-1} c_k + (m+1-i-j)
// must avoid (ell/2) Z. Agrees with is_typical on all weights.
bool is_typical_arith(const Context& cx, const Weight& lam);

// ------------------------------------------------------------------- alcove

// Membership in the closed (strict = false) or open (strict = true) alcove:
//   sum_{k=1}^{m-1} (c_k + 1)  and  sum_{k=1}^{n-1} (c_{m+k} + 1)
// both <= ell (resp. < ell). Throws NotInAlcoveError if the c-part is not a
// vector of nonnegative integers.
bool in_alcove(const Context& cx, const Weight& lam, bool strict);

// Dimension of the strictly negative Borel part,
// D = ell^{(m^2+n^2-m-n)/2} * 2^{mn}.
long long borel_dim(const Context& cx);

// ----------------------------------------------------------------- gradings

// Class of lambda in h*/Lambda_R: the coordinates of lambda in the basis of
// simple roots, with real parts reduced into [0, 1).
Vec full_grading_class(const Context& cx, const Weight& lam);

// Class of a = c_m in C/Z (real part reduced into [0, 1)).
Cplx pert_grading_class(const Weight& lam, int m);

// True iff the perturbative degree is critical: 2a integral.
bool is_critical(const Cplx& a, double tol = kDefaultTol);

// d = |m - n| / gcd(m, n).
int small_d(int m, int n);

// Lattice membership tests for one-dimensional module weights.
// Lambda_Z: 2<lambda, alpha_i> in ell Z for all i, i.e. 2 c_i in ell Z.
bool in_lambda_z(const Context& cx, const Weight& lam, double tol = kDefaultTol);
// Lambda_Z^0 = Lambda_Z intersected with the root lattice.
bool in_lambda_z0(const Context& cx, const Weight& lam, double tol = kDefaultTol);

// -------------------------------------------------------- scalar invariants

// Twist scalar of the simple module of highest weight lambda:
// theta = xi^{<lambda + pi, lambda>}.
Cplx twist_scalar(const Context& cx, const Weight& lam);

// Open Hopf link scalar: the circle colored by V^mu around the cut strand
// colored by V^lam,
//   S' = xi^{<2 lam + pi, mu>}
//        * prod_{alpha even pos} (1 - xi^{-ell z_alpha}) / (1 - xi^{-z_alpha})
//        * prod_{alpha odd pos} (1 - xi^{-z_alpha}),
// with z_alpha = <2 lam + pi, alpha>. Throws DegenerateWeightError when an
// even-root denominator vanishes.
Cplx s_prime(const Context& cx, const Weight& lam, const Weight& mu);

// Modified dimension in the projective ideal at generic lambda:
//   d(V^lam) = prod_{even pos} {z_alpha} /
//              ( prod_{even pos} {ell z_alpha} * prod_{odd pos} {z_alpha} ),
// z_alpha = <lambda + pi/2, alpha>. Throws DegenerateWeightError when a
// denominator factor vanishes (in particular whenever the c-part is real
// half-integral).
Cplx mdim_proj(const Context& cx, const Weight& lam);

// Modified dimension in the perturbative ideal for typical lambda in the
// closed alcove:
//   d^p = prod_{even pos} {<lam+rho,alpha>}/{<rho,alpha>}
//       * prod_{odd pos} 1/{<lam+rho,alpha>}.
// Zero exactly on the boundary shell (closed minus open alcove). Throws
// NotTypicalError / NotInAlcoveError on violated preconditions.
Cplx mdim_pert(const Context& cx, const Weight& lam);

// Per-term modularity identity scalar; equals 1 for generic lambda, mu:
//   mdim_proj(mu) * mdim_proj(lam) * s_prime(lam, mu)
//                 * s_prime(mu, -pi - lam).
Cplx zeta_term(const Context& cx, const Weight& lam, const Weight& mu);

// Compatibility map between the two gradings: psi(a, k) =
// xi^{ell * a * k * 2 d m n / (n - m)}, with d = small_d(m, n); the exponent
// coefficient 2 d m n / (n - m) is always an integer.
Cplx psi_compat(const Context& cx, const Cplx& a, int k);

// ------------------------------------------------------------ sl(2|1) layer

// Below, weights of sl(2|1) are described by the pair (alpha, c):
// highest weight c w_1 + alpha w_2, with c a nonnegative integer.
Weight weight_sl21(const Context& cx, const Cplx& alpha, int c);

// Renormalized invariant of the Hopf link colored by V(alpha, c) and
// V(alpha', c'), both typical:
//   xi^{-s (2 alpha + c + 1)(2 alpha' + c' + 1)} * {(c+1)(c'+1)} / {1},
// where s = +1 for the positive Hopf link and -1 for its mirror.
Cplx hopf_value_sl21(const Context& cx, const Cplx& alpha, int c,
                     const Cplx& alpha2, int c2, bool positive = true);

// One summand of the Kirby color.
struct KirbyTerm {
  int k = 0;  // a-offset
  int c = 0;  // even highest weight
  Weight lam;
  Cplx coeff;  // mdim_pert of lam
};

// Kirby color at non-critical degree a: all ell^2 summands
// (weight (a + k, c), coefficient d^p), k, c in 0..ell-1. Terms with
// c = ell - 1 carry coefficient zero and are kept in the list. Throws
// CriticalGradingError when 2a is integral.
std::vector<KirbyTerm> kirby_color_sl21(const Context& cx, const Cplx& a);

// Normalization scalars of the surgery invariant. Closed form:
//   Delta_+ = 2 ell (xi^{-1} - xi) / {1}^2 = -2 ell / {1},
//   Delta_- = 2 ell (xi - xi^{-1}) / {1}^2 = +2 ell / {1} = conj(Delta_+).
Cplx delta_closed_form(const Context& cx, int sign);

// The same scalars assembled term by term from the Kirby color: the
// (+/-1)-framed unknot colored by Omega, evaluated as
//   sum_{k,c} theta_W^s theta_V^s Hopf_s(W, V*) d^p(W) / d^p(V)
// over W = V(a + k, c), with V = V(a, 0), V* = V(-a-1, 0) and s = sign.
// Independent of the choice of non-critical a.
Cplx delta_numeric(const Context& cx, int sign, const Cplx& a);

}  // namespace relmod
