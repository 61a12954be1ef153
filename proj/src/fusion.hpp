#pragma once
// Young-diagram combinatorics for tensor decompositions of typical envelopes:
// diagrams in the m x n box, complement/conjugate bookkeeping, the summands
// of V^{lam_a^0} (x) V^{lam_b^0}, the one-box step for tensoring with the
// standard module, and exact characters with parity-split multiplicities.

#include <map>
#include <utility>
#include <vector>

#include "invariants.hpp"

namespace relmod {

// Partition with m parts, weakly decreasing, each at most n.
using BoxPartition = std::vector<int>;

// All C(m+n, m) partitions in the m x n box, ascending lexicographic order.
std::vector<BoxPartition> diagrams_in_box(int m, int n);

struct ComplementConjugate {
  BoxPartition hat;     // hat_i = n - lam_{m+1-i}, again in the box
  std::vector<int> mu;  // conjugate of hat, padded to n parts
};
ComplementConjugate complement_conjugate(const BoxPartition& lam, int m,
                                         int n);

// Highest weight of the summand attached to a box diagram when fusing two
// weights with a-parameters summing to z:
//   c = (lam_1-lam_2, ..., lam_{m-1}-lam_m, a_lam, mu_1-mu_2, ...),
//   a_lam = z + mu_1 + lam_m - n.
// (The a-shift is forced by the Cauchy decomposition of the doubled odd
// exterior algebra: the summand highest weights are the weights
// lam_a + lam_b - [hw of S_hat(std_m^*) (x) S_mu(std_n)].)
Weight summand_weight(const Context& cx, const BoxPartition& lam,
                      const Cplx& z);

// The full multiset of summands of V^{lam_a^0} (x) V^{lam_b^0}: one weight
// per box diagram, each typical and in the closed alcove, pairwise distinct.
// Throws CriticalGradingError when a + b has critical degree.
std::vector<Weight> tensor_decompose_zero(const Context& cx, const Cplx& a,
                                          const Cplx& b);

// Dimension of the simple g_0-module with the given integral c-part (product
// of the sl(m) and sl(n) factors, counted by semistandard tableaux), and the
// dimension 2^{mn} g0_dim of its typical envelope. Both require the weight
// to lie in the closed alcove.
long long g0_dim(const Context& cx, const Weight& lam);
long long envelope_dim(const Context& cx, const Weight& lam);

// One-box step: the summands of V^lam (x) v obtained by adding a single box
// to either diagram factor (equivalently, adding a weight of the standard
// module to lam and keeping the dominant results). Requires lam typical and
// strictly inside the alcove; outputs land in the closed alcove and satisfy
// sum envelope_dim(outputs) = envelope_dim(lam) * (m + n).
std::vector<Weight> pieri_step(const Context& cx, const Weight& lam);

// Character with parity-split multiplicities. A term (offset -> (even, odd))
// represents a weight base + offset, the offset being an integer vector in
// the eps/delta coordinates (weights within one module differ by root
// lattice elements, which are integral there). The base is the str-projected
// eps/delta representative of the highest weight, so bases of characters in
// the same grading class differ by integer vectors.
struct Character {
  Eigen::VectorXcd base;
  std::map<std::vector<int>, std::pair<long long, long long>> terms;
};

// Character of the typical envelope of highest weight lam (integral c-part
// in the closed alcove): exterior algebra on the mn odd directions times the
// g_0-character enumerated by semistandard tableaux.
Character envelope_character(const Context& cx, const Weight& lam);

// Product (tensor) and sum (direct sum) of characters; the sum requires the
// two bases to differ by an integer eps/delta vector.
Character char_mul(const Character& x, const Character& y);
Character char_add(const Character& x, const Character& y);

// Exact equality of weight multiplicity tables, allowing the bases to differ
// by an integer vector.
bool char_eq(const Character& x, const Character& y, double tol = kDefaultTol);

// Total dimension (even + odd multiplicities).
long long char_dim(const Character& ch);

// Ring morphism evaluating the supercharacter: a term of weight w (with
// multiplicities e, o) contributes (e - o) * omega^{S(w)} * (-1)^{Y(w)},
// where omega = xi^{ell n / (2(m-n))}, S is the sum of all eps/delta
// coefficients and Y the sum of the delta ones; both exponentials are taken
// through xi^z = exp(2 pi i z / ell), so non-integral weights are allowed.
Cplx psi_superdim(const Context& cx, const Character& ch);

// Supercharacter of the largest typical envelope, of highest weight
// (ell-1) rho_0, assembled from the factorized product
//   [(ell-1) rho_0] * prod_{even pos} (1 + [-a] + ... + [(1-ell) a])
//                   * prod_{odd pos} (1 - [-a]).
// Its psi_superdim value is the Borel dimension D.
Character top_supercharacter(const Context& cx);

}  // namespace relmod
