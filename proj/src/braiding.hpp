#pragma once
// Braiding structure on constructed sl(2|1) weight modules at an odd root of
// unity: the diagonal Cartan operator H, the truncated quasi-R-matrix R-bar
// (a normally ordered product of truncated quantum exponentials in the root
// vectors), the braiding c_{V,W} = super-flip . (R-bar . H), the ribbon twist
// as a right partial trace of c_{V,V}, and residual checkers for the
// quasitriangularity identities
//
//   (Delta (x) Id) R = R_13 R_23,   (Id (x) Delta) R = R_13 R_12,
//   R Delta(x) = Delta^op(x) R,
//
// where R = R-bar . H on each pair of modules.

#include <string>
#include <vector>

#include "braiding_conventions.hpp"
#include "repr_sl21.hpp"

namespace relmod {

// Braiding c_{V,W}: V (x) W -> W (x) V together with its inverse. The
// operator is even and intertwines the tensor module structures.
struct BraidingOperator {
  WeightModule source;  // V (x) W
  WeightModule target;  // W (x) V
  Mat forward;          // matrix of c_{V,W}
  Mat inverse;          // matrix of c_{V,W}^{-1}: W (x) V -> V (x) W
};

// Diagonal Cartan operator on V (x) W: (v (x) w) -> xi^{<wt v, wt w>} v (x) w.
Mat cartan_op(const Context& cx, const WeightModule& v, const WeightModule& w);

// Super-flip tau: V (x) W -> W (x) V, v (x) w -> (-1)^{|v||w|} w (x) v.
Mat super_flip(const WeightModule& v, const WeightModule& w);

// Truncated quasi-R-matrix R-bar on V (x) W: product over the positive roots
// alpha_1 < alpha_1+alpha_2 < alpha_2 of truncated quantum exponentials
// exp^<_{q_alpha}((-1)^{p(alpha)} a_alpha^{-1} (xi - xi^{-1})
// E_alpha (x) F_alpha); unipotent (strictly raises the left weight).
// Conventions (root vectors, constants a_alpha, order) are the frozen
// calibrated ones; quasi_R_with exposes them for the calibration search.
Mat quasi_R(const Context& cx, const WeightModule& v, const WeightModule& w);
Mat quasi_R_with(const Context& cx, const WeightModule& v,
                 const WeightModule& w, const QuasiRConventions& conv);

// Braiding c_{V,W} = tau . (quasi_R . cartan_op) with its inverse.
BraidingOperator braiding(const Context& cx, const WeightModule& v,
                          const WeightModule& w);

// Double braiding c_{W,V} . c_{V,W}: V (x) W -> V (x) W.
Mat double_braiding(const Context& cx, const WeightModule& v,
                    const WeightModule& w);

// Ribbon twist theta_V = (Id (x) ev') . (c_{V,V} (x) Id) . (Id (x) coev)
// as a matrix on V.
Mat twist_op(const Context& cx, const WeightModule& v);

// The twist scalar of a simple module: twist_op must be a scalar multiple of
// the identity (within tol); throws NotSimpleError otherwise. For the
// typical module of highest weight lambda the value is xi^{<lambda+pi,
// lambda>}.
Cplx twist_op_scalar(const Context& cx, const WeightModule& v,
                     double tol = 1e-8);

// Residuals of the three quasitriangularity identities: (1) and (2) as
// operators on V (x) W (x) U, (3) sampled over all generators E_i, F_i, H_i,
// K_i^{+-1} on V (x) W.
struct QuasitriangularReport {
  double coproduct_left = 0.0;   // (Delta (x) Id) R - R_13 R_23
  double coproduct_right = 0.0;  // (Id (x) Delta) R - R_13 R_12
  double intertwine = 0.0;       // max over generators of R Delta - Delta^op R
  bool pass = false;
  std::vector<std::pair<std::string, double>> checks;
};
QuasitriangularReport check_quasitriangular(const Context& cx,
                                            const WeightModule& v,
                                            const WeightModule& w,
                                            const WeightModule& u,
                                            double tol = 1e-9);

}  // namespace relmod
