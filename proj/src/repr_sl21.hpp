#pragma once
// Explicit weight modules over the unrolled quantum supergroup of sl(2|1):
// the standard three-dimensional module, typical modules V(lambda_a^c) on
// the PBW basis F2^{e2} F12^{e12} F1^s . v+, one-dimensional modules
// (sigma(zbar, lambda), the odd trivial module, epsilon), duals with the
// K_pi pivot, tensor products with super Kronecker signs, and a
// defining-relations checker that gates every construction.
//
// Matrix conventions. A module is a list of weight vectors; the generator
// matrices act on columns, H_i is diagonal with the i-th coordinate of each
// weight, and K_i = xi^{d_i H_i} entrywise on that diagonal. Algebra
// relations hold as plain matrix identities; all Koszul signs live in the
// tensor product, the duality maps and the morphism condition.

#include <string>
#include <utility>
#include <vector>

#include "invariants.hpp"

namespace relmod {

struct WeightModule {
  int dim = 0;
  std::vector<Weight> weights;  // per basis vector, H-coordinates c_1..c_r
  std::vector<int> parities;    // 0 even, 1 odd
  std::vector<Mat> E, F, H;     // generator matrices, indices 0..r-1
  std::string label;
};

// An equivariant map f : source -> target. Even maps intertwine on the
// nose; a map of odd parity picks up the Koszul sign (-1)^{|u|} against odd
// generators u.
struct MorphismMatrix {
  WeightModule source;
  WeightModule target;
  Mat entries;
  int parity = 0;
};

// ------------------------------------------------------------ constructors

// The standard 3-dimensional module v: basis weights eps_1, eps_2, del_1
// (in coordinates (1,0), (-1,1), (0,1)), parities (even, even, odd),
// generators the elementary matrices E_1 = E_{12}, E_2 = E_{23},
// F_1 = E_{21}, F_2 = E_{32}, H_1 = E_{11} - E_{22}, H_2 = E_{22} + E_{33}.
WeightModule make_standard(const Context& cx);

// The typical module V(lambda_a^c) of highest weight (c, a), dimension
// 4(c+1), on the basis F2^{e2} F12^{e12} F1^s . v+ with s = 0..c and
// F12 := F1 F2 - xi^{-1} F2 F1 (the q-bracketed odd root vector; the
// exponent is <alpha_1, alpha_2> = -1). Generator actions are obtained by
// normal ordering with the commutators, derived once by direct expansion
// from the defining relations:
//   F1 F12 = xi F12 F1,        F2 F12 = -xi F12 F2,      F12^2 = F2^2 = 0,
//   [E1, F12] = F2 K1,         E2 F12 + F12 E2 = -xi^{-1} F1 K2^{-1},
//   [E1, F2] = [E2, F1] = 0,   E2 F2 + F2 E2 = (K2 - K2^{-1})/(xi - xi^{-1}),
// together with the sl(2)-string action of E1, F1 on F1^s v+ truncated at
// s = c. Requires (c, a) typical and c strictly inside the alcove
// (0 <= c <= ell - 2). Throws NotTypicalError / NotInAlcoveError.
WeightModule make_typical(const Context& cx, const Cplx& a, int c);

// One-dimensional module sigma(zbar, lambda): parity zbar, E_i and F_i act
// by zero, H_i by lambda(H_i). Well defined exactly when the K_i act by
// +-1, i.e. 2<lambda, alpha_i> in ell Z; throws NotInLambdaZError
// otherwise. (When lambda also lies in the root lattice, i.e. in
// Lambda_Z^0, the quantum dimension is (-1)^{zbar} and sigma is
// transparent.)
WeightModule make_sigma(const Context& cx, int zbar, const Weight& lam);

// sigma(0, 0): the tensor unit.
WeightModule make_trivial(const Context& cx);

// The odd trivial module: one odd vector, all generators act by zero.
WeightModule make_odd_trivial(const Context& cx);

// The one-dimensional module where H_m acts by ell (so every K_i acts by
// 1) and all other generators act by zero.
WeightModule make_epsilon(const Context& cx);

// Dual module V*: basis dual to that of V, weights negated, parities kept,
// action u . phi = (-1)^{|u||phi|} phi(S(u) . ) with the antipode
// S(E_i) = -K_i E_i, S(F_i) = -F_i K_i^{-1}, S(H_i) = -H_i.
WeightModule dual_module(const Context& cx, const WeightModule& v);

// Tensor product with the coproduct
//   E_i  |->  E_i (x) 1 + K_i^{-1} (x) E_i,
//   F_i  |->  F_i (x) K_i + 1 (x) F_i,
//   H_i  |->  H_i (x) 1 + 1 (x) H_i,
// realized with super Kronecker products: an odd right factor acting past
// an odd left vector contributes (-1). Basis order is row-major
// (i, j) -> i * dim(w) + j; weights add, parities add mod 2.
WeightModule tensor_module(const Context& cx, const WeightModule& v,
                           const WeightModule& w);

// ------------------------------------------------------------------ pieces

// K_i^{power} as a diagonal matrix, xi^{power d_i c_i} per basis weight.
Mat k_matrix(const Context& cx, const WeightModule& v, int i, int power = 1);

// The pivot K_pi^{power}: diagonal xi^{power <pi, w_j>}.
Mat k_pi_matrix(const Context& cx, const WeightModule& v, int power = 1);

// Super Kronecker product of two operators: the matrix of A (x) B on the
// tensor product, (A (x) B)(v_k (x) w_l) = (-1)^{|B||v_k|} A v_k (x) B w_l,
// in the row-major basis ordering (i, j) -> i * dim(right) + j. b_parity is
// the parity of B; left_parities are the basis parities of the space A acts
// on (the Koszul sign is keyed to the column of A).
Mat super_kron(const Mat& a, const Mat& b, int b_parity,
               const std::vector<int>& left_parities);

// q-bracketed root vectors for the nonsimple positive root alpha_1+alpha_2
// (rank 2 only): E_12 = E_1 E_2 - xi^{-1} E_2 E_1 and the F counterpart
// used for the PBW basis. The braiding layer fixes its normalization
// constants against exactly these matrices.
Mat e12_matrix(const Context& cx, const WeightModule& v);
Mat f12_matrix(const Context& cx, const WeightModule& v);

// --------------------------------------------------------------- dualities

// ev : V* (x) V -> I,  phi (x) v |-> phi(v).
MorphismMatrix ev_left(const Context& cx, const WeightModule& v);
// coev : I -> V (x) V*,  1 |-> sum_j v_j (x) phi_j.
MorphismMatrix coev_left(const Context& cx, const WeightModule& v);
// ev' : V (x) V* -> I,  v_j (x) phi_i |-> (-1)^{p_i} phi_i(K_pi v_j).
MorphismMatrix ev_right(const Context& cx, const WeightModule& v);
// coev' : I -> V* (x) V,  1 |-> sum_j (-1)^{p_j} phi_j (x) K_pi^{-1} v_j.
MorphismMatrix coev_right(const Context& cx, const WeightModule& v);

// ev' . coev : the quantum dimension sum_j (-1)^{p_j} xi^{<pi, w_j>}.
// Vanishes on every typical module.
Cplx quantum_dimension(const Context& cx, const WeightModule& v);

// ------------------------------------------------------------------ checks

struct RelationsReport {
  double max_residual = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> checks;
};

// Residuals of all defining relations on the module: H_i diagonal and
// commuting, [H_i, X_j] = +-a_ij X_j, K-conjugation, the (anti)commutators
// [E_i, F_j], E_m^2 = F_m^2 = 0, the quantum Serre relations, the
// truncation E_i^ell = F_i^ell = 0 for even nodes, and parity homogeneity
// of every generator matrix. pass iff max residual <= tol.
RelationsReport check_relations(const Context& cx, const WeightModule& v,
                                double tol = 1e-10);

// Largest violation of the intertwining property
// f . rho_source(u) = (-1)^{|u||f|} rho_target(u) . f over all generators.
double morphism_residual(const Context& cx, const MorphismMatrix& f);

// Columns spanning the joint kernel of all E_i (the highest weight
// vectors).
Mat highest_weight_vectors(const Context& cx, const WeightModule& v);

// True iff the closure of every single basis vector under all E_i, F_i
// spans the whole module.
bool is_simple_module(const Context& cx, const WeightModule& v,
                      double tol = 1e-8);

}  // namespace relmod
