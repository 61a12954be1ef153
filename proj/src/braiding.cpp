#include "braiding.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace relmod {

namespace {

void require_sl21(const Context& cx, const char* who) {
  if (cx.rs.m != 2 || cx.rs.n != 1) {
    throw Error(Status::InvalidArgument,
                std::string(who) + ": requires the (m, n) = (2, 1) root system");
  }
}

double max_abs(const Mat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

Mat kron_plain(const Mat& a, const Mat& b) {
  static const std::vector<int> no_parities;
  return super_kron(a, b, 0, no_parities);
}

// exp^<_q(X): exponential series with Gauss factorials (n)_q = 1 + q + ...
// + q^{n-1}, truncated strictly below the first vanishing factor. For q a
// nontrivial root of unity the series is a finite polynomial in X regardless
// of nilpotency.
Mat qexp_below(const Cplx& q, const Mat& x) {
  Mat out = Mat::Identity(x.rows(), x.cols());
  Mat term = Mat::Identity(x.rows(), x.cols());
  Cplx qpow(1, 0);
  Cplx gauss(0, 0);
  for (int n = 1; n <= 256; ++n) {
    gauss += qpow;  // (n)_q
    qpow *= q;
    if (std::abs(gauss) < 1e-9) return out;
    term = term * x / gauss;
    out += term;
  }
  throw Error(Status::Internal,
              "qexp_below: no Gauss factor vanished within 256 terms");
}

struct RootFactor {
  Mat e, f;    // root vectors acting on the two tensor legs
  int parity;  // p(alpha)
  Cplx base;   // q_alpha = (-1)^{p(alpha)} xi^{-<alpha,alpha>}
  Cplx coeff;  // (-1)^{p(alpha)} a_alpha^{-1} (xi - xi^{-1})
};

}  // namespace

Mat cartan_op(const Context& cx, const WeightModule& v, const WeightModule& w) {
  const Eigen::Index d = static_cast<Eigen::Index>(v.dim) * w.dim;
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < v.dim; ++i) {
    for (int j = 0; j < w.dim; ++j) {
      const Eigen::Index k = static_cast<Eigen::Index>(i) * w.dim + j;
      out(k, k) = cx.root.pow(pair_ww(cx.rs, v.weights[static_cast<size_t>(i)],
                                      w.weights[static_cast<size_t>(j)]));
    }
  }
  return out;
}

Mat super_flip(const WeightModule& v, const WeightModule& w) {
  const Eigen::Index d = static_cast<Eigen::Index>(v.dim) * w.dim;
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < v.dim; ++i) {
    for (int j = 0; j < w.dim; ++j) {
      const double sign = (v.parities[static_cast<size_t>(i)] != 0 &&
                           w.parities[static_cast<size_t>(j)] != 0)
                              ? -1.0
                              : 1.0;
      out(static_cast<Eigen::Index>(j) * v.dim + i,
          static_cast<Eigen::Index>(i) * w.dim + j) = sign;
    }
  }
  return out;
}

Mat quasi_R_with(const Context& cx, const WeightModule& v,
                 const WeightModule& w, const QuasiRConventions& conv) {
  require_sl21(cx, "quasi_R");
  const Cplx qq = cx.root.pow(Cplx(1, 0)) - cx.root.pow(Cplx(-1, 0));
  const Mat e12 = v.E[0] * v.E[1] - conv.bracket_t * v.E[1] * v.E[0];
  const Mat f12 = w.F[0] * w.F[1] - conv.bracket_t * w.F[1] * w.F[0];

  std::vector<RootFactor> factors(3);
  factors[0] = {v.E[0], w.F[0], 0, cx.root.pow(Cplx(-2, 0)),
                qq / conv.a_alpha1};
  factors[1] = {e12, f12, 1, Cplx(-1, 0), -qq / conv.a_alpha12};
  factors[2] = {v.E[1], w.F[1], 1, Cplx(-1, 0), -qq / conv.a_alpha2};
  if (conv.reverse_product) std::swap(factors[0], factors[2]);

  const Eigen::Index d = static_cast<Eigen::Index>(v.dim) * w.dim;
  Mat out = Mat::Identity(d, d);
  for (const RootFactor& rf : factors) {
    const Mat x = rf.coeff * super_kron(rf.e, rf.f, rf.parity, v.parities);
    out = out * qexp_below(rf.base, x);
  }
  return out;
}

Mat quasi_R(const Context& cx, const WeightModule& v, const WeightModule& w) {
  return quasi_R_with(cx, v, w, frozen_conventions(cx.root));
}

BraidingOperator braiding(const Context& cx, const WeightModule& v,
                          const WeightModule& w) {
  BraidingOperator op;
  op.source = tensor_module(cx, v, w);
  op.target = tensor_module(cx, w, v);
  op.forward = super_flip(v, w) * (quasi_R(cx, v, w) * cartan_op(cx, v, w));
  op.inverse = op.forward.partialPivLu().inverse();
  return op;
}

Mat double_braiding(const Context& cx, const WeightModule& v,
                    const WeightModule& w) {
  return braiding(cx, w, v).forward * braiding(cx, v, w).forward;
}

Mat twist_op(const Context& cx, const WeightModule& v) {
  // (Id (x) ev') . (c_{V,V} (x) Id) . (Id (x) coev) contracted symbolically:
  // coev pairs the third leg with the second, ev' closes them with the
  // pivot, leaving the partial trace
  //   theta_{ij} = sum_k c_{(i,k),(j,k)} (-1)^{p_k} (K_pi)_{kk}.
  const Eigen::Index d = v.dim;
  const Mat c = braiding(cx, v, v).forward;
  const Mat kpi = k_pi_matrix(cx, v, +1);
  Mat out = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Cplx acc(0, 0);
      for (Eigen::Index k = 0; k < d; ++k) {
        const double sign = v.parities[static_cast<size_t>(k)] != 0 ? -1.0 : 1.0;
        acc += c(i * d + k, j * d + k) * sign * kpi(k, k);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Cplx twist_op_scalar(const Context& cx, const WeightModule& v, double tol) {
  const Mat th = twist_op(cx, v);
  const Cplx s = th.trace() / static_cast<double>(v.dim);
  const Mat id = Mat::Identity(v.dim, v.dim);
  if (max_abs(th - s * id) > tol * (1.0 + std::abs(s))) {
    throw NotSimpleError(
        "twist_op_scalar: twist of '" + v.label + "' is not a scalar");
  }
  return s;
}

QuasitriangularReport check_quasitriangular(const Context& cx,
                                            const WeightModule& v,
                                            const WeightModule& w,
                                            const WeightModule& u,
                                            double tol) {
  QuasitriangularReport rep;
  auto rfull = [&](const WeightModule& a, const WeightModule& b) -> Mat {
    return quasi_R(cx, a, b) * cartan_op(cx, a, b);
  };
  const Mat idv = Mat::Identity(v.dim, v.dim);
  const Mat idw = Mat::Identity(w.dim, w.dim);
  const Mat idu = Mat::Identity(u.dim, u.dim);

  WeightModule vw = tensor_module(cx, v, w);
  WeightModule wu = tensor_module(cx, w, u);

  // R_13 on V (x) W (x) U: conjugate R_{V,U} by the middle/right super-flip.
  const Mat r13 = kron_plain(idv, super_flip(u, w)) *
                  kron_plain(rfull(v, u), idw) *
                  kron_plain(idv, super_flip(w, u));
  const Mat r23 = kron_plain(idv, rfull(w, u));
  const Mat r12 = kron_plain(rfull(v, w), idu);

  rep.coproduct_left = max_abs(rfull(vw, u) - r13 * r23);
  rep.coproduct_right = max_abs(rfull(v, wu) - r13 * r12);
  rep.checks.emplace_back("(Delta (x) Id) R = R13 R23", rep.coproduct_left);
  rep.checks.emplace_back("(Id (x) Delta) R = R13 R12", rep.coproduct_right);

  // R Delta(x) = Delta^op(x) R on V (x) W, over all generators.
  const Mat r = rfull(v, w);
  WeightModule wv = tensor_module(cx, w, v);
  const Mat tvw = super_flip(v, w);
  const Mat twv = super_flip(w, v);
  auto op_side = [&](const Mat& on_wv) -> Mat { return twv * on_wv * tvw; };
  std::vector<std::pair<std::string, std::pair<Mat, Mat>>> gens;
  for (int i = 0; i < cx.rs.r; ++i) {
    const std::string si = std::to_string(i + 1);
    gens.push_back({"E" + si, {vw.E[static_cast<size_t>(i)],
                               wv.E[static_cast<size_t>(i)]}});
    gens.push_back({"F" + si, {vw.F[static_cast<size_t>(i)],
                               wv.F[static_cast<size_t>(i)]}});
    gens.push_back({"H" + si, {vw.H[static_cast<size_t>(i)],
                               wv.H[static_cast<size_t>(i)]}});
    gens.push_back({"K" + si, {k_matrix(cx, vw, i, +1),
                               k_matrix(cx, wv, i, +1)}});
    gens.push_back({"K" + si + "^-1", {k_matrix(cx, vw, i, -1),
                                       k_matrix(cx, wv, i, -1)}});
  }
  rep.intertwine = 0.0;
  for (const auto& g : gens) {
    const double res =
        max_abs(r * g.second.first - op_side(g.second.second) * r);
    rep.checks.emplace_back("R Delta(" + g.first + ") = Delta^op(" + g.first +
                                ") R",
                            res);
    if (res > rep.intertwine) rep.intertwine = res;
  }

  rep.pass = rep.coproduct_left <= tol && rep.coproduct_right <= tol &&
             rep.intertwine <= tol;
  return rep;
}

}  // namespace relmod
