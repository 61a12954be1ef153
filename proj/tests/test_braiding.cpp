#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "braiding.hpp"
#include "fusion.hpp"
#include "invariants.hpp"

using namespace relmod;

namespace {

bool close(const Cplx& x, const Cplx& y, double tol = 1e-10) {
  return std::abs(x - y) <= tol * (1.0 + std::abs(x) + std::abs(y));
}

double max_abs(const Mat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

Mat kron_plain(const Mat& a, const Mat& b) {
  static const std::vector<int> none;
  return super_kron(a, b, 0, none);
}

// Residual of R Delta(x) = Delta^op(x) R over all generators, for a given
// choice of the quasi-R conventions (used by the calibration search).
double intertwine_residual(const Context& cx, const WeightModule& v,
                           const WeightModule& w, const WeightModule& vw,
                           const WeightModule& wv,
                           const QuasiRConventions& conv) {
  const Mat r = quasi_R_with(cx, v, w, conv) * cartan_op(cx, v, w);
  const Mat tvw = super_flip(v, w);
  const Mat twv = super_flip(w, v);
  double worst = 0.0;
  for (int i = 0; i < cx.rs.r; ++i) {
    const size_t si = static_cast<size_t>(i);
    const Mat pairs[8] = {vw.E[si], wv.E[si], vw.F[si], wv.F[si],
                          vw.H[si], wv.H[si],
                          k_matrix(cx, vw, i, +1), k_matrix(cx, wv, i, +1)};
    for (int g = 0; g < 4; ++g) {
      const Mat lhs = r * pairs[2 * g];
      const Mat rhs = twv * pairs[2 * g + 1] * tvw * r;
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  }
  return worst;
}

// Orthonormal basis of the submodule generated by one vector.
Mat closure_basis(const Context& cx, const WeightModule& v, const Vec& start) {
  Mat q = Mat::Zero(v.dim, v.dim);
  q.col(0) = start / start.norm();
  int k = 1;
  for (int head = 0; head < k && k < v.dim; ++head) {
    for (int i = 0; i < cx.rs.r; ++i) {
      for (const Mat* g : {&v.E[static_cast<size_t>(i)],
                           &v.F[static_cast<size_t>(i)]}) {
        Vec w = (*g) * q.col(head);
        w -= q.leftCols(k) * (q.leftCols(k).adjoint() * w);
        w -= q.leftCols(k) * (q.leftCols(k).adjoint() * w);
        if (w.norm() > 1e-8) {
          q.col(k) = w / w.norm();
          if (++k == v.dim) return q.leftCols(k);
        }
      }
    }
  }
  return q.leftCols(k);
}

// One highest weight vector at the given weight, embedded in the module.
Vec hw_vector_at(const Context& cx, const WeightModule& v, const Weight& mu) {
  std::vector<int> cols;
  for (int j = 0; j < v.dim; ++j) {
    const Weight& w = v.weights[static_cast<size_t>(j)];
    if (std::abs(w[0] - mu[0]) < 1e-8 && std::abs(w[1] - mu[1]) < 1e-8) {
      cols.push_back(j);
    }
  }
  REQUIRE(!cols.empty());
  Mat stack(cx.rs.r * v.dim, static_cast<Eigen::Index>(cols.size()));
  for (int i = 0; i < cx.rs.r; ++i) {
    for (size_t c = 0; c < cols.size(); ++c) {
      stack.block(i * v.dim, static_cast<Eigen::Index>(c), v.dim, 1) =
          v.E[static_cast<size_t>(i)].col(cols[c]);
    }
  }
  Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeFullV);
  Vec small = svd.matrixV().col(static_cast<Eigen::Index>(cols.size()) - 1);
  Vec out = Vec::Zero(v.dim);
  for (size_t c = 0; c < cols.size(); ++c) {
    out(cols[c]) = small(static_cast<Eigen::Index>(c));
  }
  return out;
}

}  // namespace

TEST_CASE("cartan operator is the diagonal weight pairing") {
  Context cx(2, 1, 5);
  WeightModule v = make_typical(cx, Cplx(0.3, 0.1), 2);
  WeightModule unit = make_trivial(cx);

  CHECK(max_abs(cartan_op(cx, unit, v) - Mat::Identity(v.dim, v.dim)) <
        1e-14);
  CHECK(max_abs(cartan_op(cx, v, unit) - Mat::Identity(v.dim, v.dim)) <
        1e-14);

  // On sigma (x) sigma it is the scalar xi^{<lam, lam'>}.
  Weight l1 = make_weight(cx.rs, {Cplx(0, 0), Cplx(-5, 0)});
  Weight l2 = make_weight(cx.rs, {Cplx(10, 0), Cplx(-5, 0)});
  WeightModule s1 = make_sigma(cx, 1, l1);
  WeightModule s2 = make_sigma(cx, 0, l2);
  Mat h = cartan_op(cx, s1, s2);
  CHECK(h.rows() == 1);
  CHECK(close(h(0, 0), cx.root.pow(pair_ww(cx.rs, l1, l2))));

  // Highest (x) highest diagonal entry of two typicals.
  WeightModule w = make_typical(cx, Cplx(0.45, 0), 1);
  Mat hv = cartan_op(cx, v, w);
  const Weight lam = make_weight(cx.rs, {Cplx(2, 0), Cplx(0.3, 0.1)});
  const Weight mu = make_weight(cx.rs, {Cplx(1, 0), Cplx(0.45, 0)});
  CHECK(close(hv(0, 0), cx.root.pow(pair_ww(cx.rs, lam, mu))));
  // Diagonal, and every entry a root-of-unity power times nothing else.
  CHECK(max_abs(hv - Mat(hv.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("quasi-R is unipotent and trivial on invertible modules") {
  Context cx(2, 1, 5);
  WeightModule v = make_typical(cx, Cplx(0.3, 0.7), 1);
  WeightModule st = make_standard(cx);
  Weight l1 = make_weight(cx.rs, {Cplx(0, 0), Cplx(5, 0)});
  WeightModule s1 = make_sigma(cx, 0, l1);

  // Root vectors vanish on one-dimensional modules.
  CHECK(max_abs(quasi_R(cx, s1, v) - Mat::Identity(v.dim, v.dim)) < 1e-14);
  CHECK(max_abs(quasi_R(cx, v, s1) - Mat::Identity(v.dim, v.dim)) < 1e-14);

  // (quasi_R - I) is nilpotent: it strictly raises the left weight.
  for (const WeightModule* m : {&v, &st}) {
    WeightModule t = tensor_module(cx, *m, *m);
    Mat n = quasi_R(cx, *m, *m) - Mat::Identity(t.dim, t.dim);
    Mat p = n;
    for (int k = 1; k < m->dim; ++k) p = p * n;
    CHECK(max_abs(p) < 1e-10);
  }
}

TEST_CASE("calibration: frozen conventions are the unique solution") {
  Context cx(2, 1, 5);
  WeightModule st = make_standard(cx);
  WeightModule ty = make_typical(cx, Cplx(0.3, 0.7), 1);
  WeightModule st2 = tensor_module(cx, st, st);
  WeightModule st2r = st2;
  WeightModule tyst = tensor_module(cx, ty, st);
  WeightModule stty = tensor_module(cx, st, ty);

  const QuasiRConventions frozen = frozen_conventions(cx.root);
  std::vector<QuasiRConventions> survivors;
  for (int tpow : {-1, 1}) {
    for (int rev = 0; rev < 2; ++rev) {
      for (int s1 = 0; s1 < 2; ++s1) {
        for (int k1 = 0; k1 < cx.root.ell; ++k1) {
          for (int s12 = 0; s12 < 2; ++s12) {
            for (int k12 = 0; k12 < cx.root.ell; ++k12) {
              for (int s2 = 0; s2 < 2; ++s2) {
                for (int k2 = 0; k2 < cx.root.ell; ++k2) {
                  QuasiRConventions c;
                  c.bracket_t = cx.root.pow(Cplx(tpow, 0));
                  c.reverse_product = rev != 0;
                  c.a_alpha1 = (s1 ? -1.0 : 1.0) * cx.root.pow(Cplx(k1, 0));
                  c.a_alpha12 = (s12 ? -1.0 : 1.0) * cx.root.pow(Cplx(k12, 0));
                  c.a_alpha2 = (s2 ? -1.0 : 1.0) * cx.root.pow(Cplx(k2, 0));
                  if (intertwine_residual(cx, st, st, st2, st2r, c) < 1e-8) {
                    survivors.push_back(c);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  // The standard-module pair alone leaves a small degenerate set ...
  CHECK(survivors.size() == 4);
  // ... and a faithful typical pair cuts it to the two mutually inverse
  // normal orders. With the product order fixed, the solution is unique and
  // equals the frozen conventions.
  int passing = 0, passing_forward = 0;
  for (const QuasiRConventions& c : survivors) {
    if (intertwine_residual(cx, ty, st, tyst, stty, c) < 1e-8) {
      ++passing;
      if (!c.reverse_product) {
        ++passing_forward;
        CHECK(close(c.bracket_t, frozen.bracket_t, 1e-12));
        CHECK(close(c.a_alpha1, frozen.a_alpha1, 1e-12));
        CHECK(close(c.a_alpha12, frozen.a_alpha12, 1e-12));
        CHECK(close(c.a_alpha2, frozen.a_alpha2, 1e-12));
      }
    }
  }
  CHECK(passing == 2);
  CHECK(passing_forward == 1);

  // The frozen values are literally a_alpha = 1, 1, -xi^{-1} and t = xi^{-1}.
  CHECK(close(frozen.a_alpha1, Cplx(1, 0)));
  CHECK(close(frozen.a_alpha2, Cplx(1, 0)));
  CHECK(close(frozen.a_alpha12, -cx.root.pow(Cplx(-1, 0))));
  CHECK(close(frozen.bracket_t, cx.root.pow(Cplx(-1, 0))));
  CHECK_FALSE(frozen.reverse_product);
}

TEST_CASE("braiding: unit slots, invertibility, equivariance, YBE") {
  Context cx(2, 1, 5);
  WeightModule v = make_typical(cx, Cplx(0.3, 0), 0);
  WeightModule w = make_typical(cx, Cplx(0.45, 0), 0);
  WeightModule st = make_standard(cx);
  WeightModule unit = make_trivial(cx);

  // Braiding against the tensor unit is the identity map.
  CHECK(max_abs(braiding(cx, unit, v).forward - Mat::Identity(v.dim, v.dim)) <
        1e-14);
  CHECK(max_abs(braiding(cx, v, unit).forward - Mat::Identity(v.dim, v.dim)) <
        1e-14);

  // Invertibility and module-map property on several pairs.
  const std::vector<std::pair<const WeightModule*, const WeightModule*>>
      pairs = {{&st, &st}, {&v, &st}, {&v, &w}};
  for (const auto& p : pairs) {
    BraidingOperator c = braiding(cx, *p.first, *p.second);
    CHECK(max_abs(c.forward * c.inverse -
                  Mat::Identity(c.forward.rows(), c.forward.cols())) < 1e-10);
    MorphismMatrix m;
    m.source = c.source;
    m.target = c.target;
    m.entries = c.forward;
    CHECK(morphism_residual(cx, m) < 1e-10);
  }

  // Yang-Baxter on v (x) v (x) v.
  for (const WeightModule* m : {&st, &v}) {
    const Mat id = Mat::Identity(m->dim, m->dim);
    const Mat c = braiding(cx, *m, *m).forward;
    const Mat c1 = kron_plain(c, id);
    const Mat c2 = kron_plain(id, c);
    CHECK(max_abs(c1 * c2 * c1 - c2 * c1 * c2) < 1e-10);
  }
}

TEST_CASE("braiding is natural against summand projections") {
  Context cx(2, 1, 5);
  const Cplx a(0.3, 0.0), b(0.45, 0.0);
  WeightModule t = tensor_module(cx, make_typical(cx, a, 0),
                                 make_typical(cx, b, 0));
  WeightModule st = make_standard(cx);

  // Assemble the three summand projectors from closure bases of the
  // highest weight vectors.
  std::vector<Weight> parts = tensor_decompose_zero(cx, a, b);
  REQUIRE(parts.size() == 3);
  Mat basis(t.dim, t.dim);
  std::vector<int> block_lo, block_hi;
  int at = 0;
  for (const Weight& mu : parts) {
    Mat bk = closure_basis(cx, t, hw_vector_at(cx, t, mu));
    block_lo.push_back(at);
    block_hi.push_back(at + static_cast<int>(bk.cols()));
    basis.block(0, at, t.dim, bk.cols()) = bk;
    at += static_cast<int>(bk.cols());
  }
  REQUIRE(at == t.dim);
  const Mat basis_inv = basis.partialPivLu().inverse();

  const BraidingOperator c1 = braiding(cx, t, st);  // slot-one naturality
  const BraidingOperator c2 = braiding(cx, st, t);  // slot-two naturality
  const Mat idw = Mat::Identity(st.dim, st.dim);
  Mat sum = Mat::Zero(t.dim, t.dim);
  for (size_t k = 0; k < parts.size(); ++k) {
    Mat sel = Mat::Zero(t.dim, t.dim);
    for (int j = block_lo[k]; j < block_hi[k]; ++j) sel(j, j) = 1.0;
    const Mat p = basis * sel * basis_inv;
    sum += p;

    // p is an idempotent module endomorphism.
    CHECK(max_abs(p * p - p) < 1e-8);
    MorphismMatrix pm;
    pm.source = t;
    pm.target = t;
    pm.entries = p;
    CHECK(morphism_residual(cx, pm) < 1e-8);

    // c_{T,W} (p (x) id) = (id (x) p) c_{T,W} and the slot-two mirror.
    CHECK(max_abs(c1.forward * kron_plain(p, idw) -
                  kron_plain(idw, p) * c1.forward) < 1e-8);
    CHECK(max_abs(c2.forward * kron_plain(idw, p) -
                  kron_plain(p, idw) * c2.forward) < 1e-8);
  }
  CHECK(max_abs(sum - Mat::Identity(t.dim, t.dim)) < 1e-8);
}

TEST_CASE("double braiding against invertibles is the compatibility scalar") {
  Context cx(2, 1, 5);
  const Cplx a(0.3, 0.0);
  for (int c = 0; c <= 1; ++c) {
    WeightModule v = make_typical(cx, a, c);
    const Weight lam = make_weight(cx.rs, {Cplx(c, 0), a});
    for (int k = -2; k <= 2; ++k) {
      const Weight lz = make_weight(cx.rs, {Cplx(0, 0), Cplx(5.0 * k, 0)});
      REQUIRE(in_lambda_z0(cx, lz));
      WeightModule s = make_sigma(cx, k % 2 ? 1 : 0, lz);
      const Mat db = double_braiding(cx, v, s);
      const Cplx scalar = db(0, 0);
      CHECK(max_abs(db - scalar * Mat::Identity(db.rows(), db.cols())) <
            1e-10);
      // xi^{2 <w(v), w(s)>}, constant across weight vectors v ...
      CHECK(close(scalar, cx.root.pow(2.0 * pair_ww(cx.rs, lam, lz))));
      // ... and equal to the grading compatibility map psi(a-bar, k).
      CHECK(close(scalar, psi_compat(cx, a, k)));
    }
  }
}

TEST_CASE("twist: closed forms, duality, non-simple rejection") {
  Context cx(2, 1, 5);

  // Unit, odd unit, sigma over Lambda_Z^0, and epsilon all have twist 1
  // (odd unit: the flip sign cancels against the pivot sign).
  CHECK(close(twist_op_scalar(cx, make_trivial(cx)), Cplx(1, 0)));
  Weight lz = make_weight(cx.rs, {Cplx(0, 0), Cplx(-5, 0)});
  CHECK(close(twist_op_scalar(cx, make_sigma(cx, 0, lz)), Cplx(1, 0)));
  CHECK(close(twist_op_scalar(cx, make_sigma(cx, 1, lz)), Cplx(1, 0)));
  CHECK(close(twist_op_scalar(cx, make_epsilon(cx)), Cplx(1, 0)));

  // Typical modules: the partial trace equals xi^{-2 alpha (alpha + c + 1)}.
  const std::vector<std::pair<Cplx, int>> samples = {
      {Cplx(0.3, 0), 0}, {Cplx(0.45, 0), 1}, {Cplx(0.3, 0.7), 2},
      {Cplx(-1.2, 0.4), 3}};
  for (const auto& s : samples) {
    WeightModule v = make_typical(cx, s.first, s.second);
    const Cplx th = twist_op_scalar(cx, v);
    const Cplx closed =
        cx.root.pow(-2.0 * s.first * (s.first + Cplx(s.second + 1, 0)));
    CHECK(close(th, closed));
  }

  // Partial trace agrees with the naive composition of structure maps on a
  // small module (validates the contraction shortcut).
  {
    WeightModule st = make_standard(cx);
    const Mat id = Mat::Identity(st.dim, st.dim);
    const Mat naive = kron_plain(id, ev_right(cx, st).entries) *
                      kron_plain(braiding(cx, st, st).forward, id) *
                      kron_plain(id, coev_left(cx, st).entries);
    CHECK(max_abs(naive - twist_op(cx, st)) < 1e-12);
  }

  // Eq-by-weight formula xi^{<lam + pi, lam>} on 20 random typicals.
  std::mt19937 rng(20260815u);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(-1.5, 1.5);
  std::uniform_int_distribution<int> cdist(0, 3);
  int done = 0;
  while (done < 20) {
    const Cplx a(re(rng), im(rng));
    const int c = cdist(rng);
    const Weight lam = make_weight(cx.rs, {Cplx(c, 0), a});
    if (!is_typical(cx, lam).typical) continue;
    WeightModule v = make_typical(cx, a, c);
    CHECK(close(twist_op_scalar(cx, v), twist_scalar(cx, lam), 1e-10));
    ++done;
  }

  // Twist is preserved by duality for generic simple modules.
  for (const auto& s : {std::make_pair(Cplx(0.3, 0.2), 0),
                        std::make_pair(Cplx(-0.7, 0.1), 2)}) {
    WeightModule v = make_typical(cx, s.first, s.second);
    CHECK(close(twist_op_scalar(cx, v),
                twist_op_scalar(cx, dual_module(cx, v)), 1e-9));
  }

  // A decomposable module has no twist scalar.
  WeightModule t = tensor_module(cx, make_typical(cx, Cplx(0.3, 0), 0),
                                 make_typical(cx, Cplx(0.45, 0), 0));
  CHECK_THROWS_AS(twist_op_scalar(cx, t), NotSimpleError);

  // Larger root spot check.
  Context cx7(2, 1, 7);
  WeightModule v7 = make_typical(cx7, Cplx(0.3, 0.7), 2);
  CHECK(close(twist_op_scalar(cx7, v7),
              cx7.root.pow(-2.0 * Cplx(0.3, 0.7) * (Cplx(3.3, 0.7)))));
}

TEST_CASE("quasitriangularity identities on module triples") {
  Context cx(2, 1, 5);
  WeightModule st = make_standard(cx);
  WeightModule va = make_typical(cx, Cplx(0.3, 0), 0);
  WeightModule vb = make_typical(cx, Cplx(0.45, 0), 0);
  Weight lz = make_weight(cx.rs, {Cplx(0, 0), Cplx(5, 0)});
  WeightModule s1 = make_sigma(cx, 0, lz);
  WeightModule s2 = make_sigma(cx, 1, lz);

  // All-invertible triple: identities hold exactly.
  QuasitriangularReport r0 = check_quasitriangular(cx, s1, s2, s1);
  CHECK(r0.pass);
  CHECK(r0.coproduct_left < 1e-12);
  CHECK(r0.coproduct_right < 1e-12);
  CHECK(r0.intertwine < 1e-12);

  QuasitriangularReport r1 = check_quasitriangular(cx, st, st, st);
  CHECK(r1.pass);
  CHECK(r1.coproduct_left < 1e-10);
  CHECK(r1.coproduct_right < 1e-10);
  CHECK(r1.intertwine < 1e-10);
  CHECK(!r1.checks.empty());

  QuasitriangularReport r2 = check_quasitriangular(cx, va, st, vb);
  CHECK(r2.pass);
  CHECK(r2.coproduct_left < 1e-9);
  CHECK(r2.coproduct_right < 1e-9);
  CHECK(r2.intertwine < 1e-9);

  Context cx7(2, 1, 7);
  WeightModule st7 = make_standard(cx7);
  QuasitriangularReport r3 = check_quasitriangular(cx7, st7, st7, st7);
  CHECK(r3.pass);
}
