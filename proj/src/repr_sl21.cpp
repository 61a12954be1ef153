#include "repr_sl21.hpp"

#include <cmath>
#include <sstream>

namespace relmod {

namespace {

// 0-based index of the odd node.
int odd_node(const RootSystem& rs) { return rs.m - 1; }

int generator_parity(const RootSystem& rs, int i) {
  return i == odd_node(rs) ? 1 : 0;
}

void require_sl21(const Context& cx, const char* who) {
  if (cx.rs.m != 2 || cx.rs.n != 1) {
    std::ostringstream os;
    os << who << " is defined for sl(2|1) only, got sl(" << cx.rs.m << "|"
       << cx.rs.n << ")";
    throw Error(Status::InvalidArgument, os.str());
  }
}

std::string cplx_str(const Cplx& z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

Mat zero_mat(int d) { return Mat::Zero(d, d); }

void finish_h(const Context& cx, WeightModule& v) {
  const int r = cx.rs.r;
  v.H.assign(r, zero_mat(v.dim));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < v.dim; ++j) v.H[i](j, j) = v.weights[j][i];
  }
}

double max_abs(const Mat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

Mat mat_pow(const Mat& x, int n) {
  Mat out = Mat::Identity(x.rows(), x.cols());
  for (int k = 0; k < n; ++k) out = out * x;
  return out;
}

}  // namespace

Mat super_kron(const Mat& a, const Mat& b, int b_parity,
               const std::vector<int>& left_parities) {
  Mat out = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == Cplx(0, 0)) continue;
      const double sign =
          (b_parity != 0 && left_parities[static_cast<size_t>(k)] != 0) ? -1.0
                                                                        : 1.0;
      for (Eigen::Index j = 0; j < b.rows(); ++j) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + j, k * b.cols() + l) += sign * a(i, k) * b(j, l);
        }
      }
    }
  }
  return out;
}

// -------------------------------------------------------------- sl(2|1) v

WeightModule make_standard(const Context& cx) {
  require_sl21(cx, "make_standard");
  WeightModule v;
  v.dim = 3;
  v.label = "standard";
  v.weights = {make_weight(cx.rs, {Cplx(1, 0), Cplx(0, 0)}),
               make_weight(cx.rs, {Cplx(-1, 0), Cplx(1, 0)}),
               make_weight(cx.rs, {Cplx(0, 0), Cplx(1, 0)})};
  v.parities = {0, 0, 1};
  v.E.assign(2, zero_mat(3));
  v.F.assign(2, zero_mat(3));
  v.E[0](0, 1) = 1;  // E_1 = E_{12}
  v.E[1](1, 2) = 1;  // E_2 = E_{23}
  v.F[0](1, 0) = 1;  // F_1 = E_{21}
  v.F[1](2, 1) = 1;  // F_2 = E_{32}
  finish_h(cx, v);
  return v;
}

// ------------------------------------------------------- typical V(c, a)

WeightModule make_typical(const Context& cx, const Cplx& a, int c) {
  require_sl21(cx, "make_typical");
  const Weight lam = make_weight(cx.rs, {Cplx(c, 0), a});
  if (!in_alcove(cx, lam, /*strict=*/true)) {
    std::ostringstream os;
    os << "typical module needs 0 <= c <= ell-2, got c = " << c;
    throw NotInAlcoveError(os.str());
  }
  if (!is_typical(cx, lam).typical) {
    std::ostringstream os;
    os << "weight (c, a) = (" << c << ", " << cplx_str(a) << ") is atypical";
    throw NotTypicalError(os.str());
  }

  const RootOfUnity& root = cx.root;
  WeightModule v;
  v.dim = 4 * (c + 1);
  {
    std::ostringstream os;
    os << "typical(a=" << cplx_str(a) << ",c=" << c << ")";
    v.label = os.str();
  }
  v.weights.resize(static_cast<size_t>(v.dim));
  v.parities.resize(static_cast<size_t>(v.dim));
  v.E.assign(2, zero_mat(v.dim));
  v.F.assign(2, zero_mat(v.dim));

  // Basis word F2^{e2} F12^{e12} F1^s . v+ at position (e2*2 + e12)*(c+1)+s.
  auto idx = [c](int e2, int e12, int s) { return (e2 * 2 + e12) * (c + 1) + s; };

  for (int e2 = 0; e2 < 2; ++e2) {
    for (int e12 = 0; e12 < 2; ++e12) {
      for (int s = 0; s <= c; ++s) {
        const int col = idx(e2, e12, s);
        v.weights[static_cast<size_t>(col)] = make_weight(
            cx.rs, {Cplx(c - 2 * s - e12 + e2, 0), a + Cplx(s + e12, 0)});
        v.parities[static_cast<size_t>(col)] = (e2 + e12) % 2;

        // F1: commute past F2^{e2} F12^{e12} (factor xi^{e12 - e2}); eating
        // the F2 creates a word with F12 in its place.
        if (s + 1 <= c) {
          v.F[0](idx(e2, e12, s + 1), col) += root.pow(Cplx(e12 - e2, 0));
        }
        if (e2 == 1 && e12 == 0) v.F[0](idx(0, 1, s), col) += 1.0;

        // F2: prepend, killed by F2^2 = 0.
        if (e2 == 0) v.F[1](idx(1, e12, s), col) += 1.0;

        // E1: sl(2)-string on F1^s v+, plus [E1, F12] = F2 K1 when the word
        // has an F12 and no F2 in front.
        if (s >= 1) {
          v.E[0](idx(e2, e12, s - 1), col) +=
              root.qint(Cplx(s, 0)) * root.qint(Cplx(c - s + 1, 0));
        }
        if (e2 == 0 && e12 == 1) {
          v.E[0](idx(1, 0, s), col) += root.pow(Cplx(c - 2 * s, 0));
        }

        // E2: anticommutators E2 F2 + F2 E2 = (K2 - K2^{-1})/(xi - xi^{-1})
        // and E2 F12 + F12 E2 = -xi^{-1} F1 K2^{-1}.
        if (e2 == 0 && e12 == 1 && s + 1 <= c) {
          v.E[1](idx(0, 0, s + 1), col) -= root.pow(-(a + Cplx(s + 1, 0)));
        }
        if (e2 == 1 && e12 == 0) {
          v.E[1](idx(0, 0, s), col) += root.qint(a + Cplx(s, 0));
        }
        if (e2 == 1 && e12 == 1) {
          if (s + 1 <= c) {
            v.E[1](idx(1, 0, s + 1), col) += root.pow(-(a + Cplx(s + 1, 0)));
          }
          v.E[1](idx(0, 1, s), col) += root.qint(a + Cplx(s + 1, 0));
        }
      }
    }
  }
  finish_h(cx, v);
  return v;
}

// ---------------------------------------------------- one-dim and friends

WeightModule make_sigma(const Context& cx, int zbar, const Weight& lam) {
  if (!in_lambda_z(cx, lam)) {
    throw NotInLambdaZError(
        "sigma weight needs 2<lambda, alpha_i> in ell Z for all i");
  }
  WeightModule v;
  v.dim = 1;
  v.weights = {lam};
  v.parities = {zbar & 1};
  v.E.assign(static_cast<size_t>(cx.rs.r), zero_mat(1));
  v.F.assign(static_cast<size_t>(cx.rs.r), zero_mat(1));
  {
    std::ostringstream os;
    os << "sigma(zbar=" << (zbar & 1) << ",lam=[";
    for (int i = 0; i < cx.rs.r; ++i) {
      os << (i ? "," : "") << cplx_str(lam[i]);
    }
    os << "])";
    v.label = os.str();
  }
  finish_h(cx, v);
  return v;
}

WeightModule make_trivial(const Context& cx) {
  std::vector<Cplx> zeros(static_cast<size_t>(cx.rs.r), Cplx(0, 0));
  WeightModule v = make_sigma(cx, 0, make_weight(cx.rs, zeros));
  v.label = "trivial";
  return v;
}

WeightModule make_odd_trivial(const Context& cx) {
  std::vector<Cplx> zeros(static_cast<size_t>(cx.rs.r), Cplx(0, 0));
  WeightModule v = make_sigma(cx, 1, make_weight(cx.rs, zeros));
  v.label = "odd-trivial";
  return v;
}

WeightModule make_epsilon(const Context& cx) {
  std::vector<Cplx> coords(static_cast<size_t>(cx.rs.r), Cplx(0, 0));
  coords[static_cast<size_t>(odd_node(cx.rs))] = Cplx(cx.root.ell, 0);
  WeightModule v = make_sigma(cx, 0, make_weight(cx.rs, coords));
  v.label = "epsilon";
  return v;
}

// ------------------------------------------------------------------ pieces

Mat k_matrix(const Context& cx, const WeightModule& v, int i, int power) {
  Mat out = zero_mat(v.dim);
  const double di = static_cast<double>(cx.rs.d[i]);
  for (int j = 0; j < v.dim; ++j) {
    out(j, j) = cx.root.pow(Cplx(power * di, 0) * v.weights[static_cast<size_t>(j)][i]);
  }
  return out;
}

Mat k_pi_matrix(const Context& cx, const WeightModule& v, int power) {
  const Weight pi = pi_weight(cx.rs, cx.root.ell);
  Mat out = zero_mat(v.dim);
  for (int j = 0; j < v.dim; ++j) {
    out(j, j) = cx.root.pow(Cplx(power, 0) *
                            pair_ww(cx.rs, pi, v.weights[static_cast<size_t>(j)]));
  }
  return out;
}

Mat e12_matrix(const Context& cx, const WeightModule& v) {
  require_sl21(cx, "e12_matrix");
  return v.E[0] * v.E[1] - cx.root.pow(Cplx(-1, 0)) * v.E[1] * v.E[0];
}

Mat f12_matrix(const Context& cx, const WeightModule& v) {
  require_sl21(cx, "f12_matrix");
  return v.F[0] * v.F[1] - cx.root.pow(Cplx(-1, 0)) * v.F[1] * v.F[0];
}

// ------------------------------------------------------------------- duals

WeightModule dual_module(const Context& cx, const WeightModule& v) {
  const int r = cx.rs.r;
  WeightModule w;
  w.dim = v.dim;
  w.label = "dual(" + v.label + ")";
  w.parities = v.parities;
  w.weights.reserve(static_cast<size_t>(v.dim));
  for (const Weight& mu : v.weights) w.weights.push_back(-mu);
  w.E.assign(static_cast<size_t>(r), zero_mat(v.dim));
  w.F.assign(static_cast<size_t>(r), zero_mat(v.dim));

  // rho*(u)_{ij} = (-1)^{|u| p_j} rho(S(u))_{ji}.
  auto dualize = [&](const Mat& su, int u_parity) {
    Mat out = su.transpose();
    if (u_parity != 0) {
      for (int j = 0; j < v.dim; ++j) {
        if (v.parities[static_cast<size_t>(j)] != 0) out.col(j) *= -1.0;
      }
    }
    return out;
  };
  for (int i = 0; i < r; ++i) {
    const int par = generator_parity(cx.rs, i);
    const Mat se = -(k_matrix(cx, v, i, +1) * v.E[i]);  // S(E_i) = -K_i E_i
    const Mat sf = -(v.F[i] * k_matrix(cx, v, i, -1));  // S(F_i) = -F_i K_i^{-1}
    w.E[i] = dualize(se, par);
    w.F[i] = dualize(sf, par);
  }
  finish_h(cx, w);
  return w;
}

// ------------------------------------------------------------------ tensor

WeightModule tensor_module(const Context& cx, const WeightModule& v,
                           const WeightModule& w) {
  const int r = cx.rs.r;
  WeightModule t;
  t.dim = v.dim * w.dim;
  t.label = "(" + v.label + ")(x)(" + w.label + ")";
  t.weights.reserve(static_cast<size_t>(t.dim));
  t.parities.reserve(static_cast<size_t>(t.dim));
  for (int i = 0; i < v.dim; ++i) {
    for (int j = 0; j < w.dim; ++j) {
      t.weights.push_back(v.weights[static_cast<size_t>(i)] +
                          w.weights[static_cast<size_t>(j)]);
      t.parities.push_back((v.parities[static_cast<size_t>(i)] +
                            w.parities[static_cast<size_t>(j)]) %
                           2);
    }
  }
  t.E.assign(static_cast<size_t>(r), Mat());
  t.F.assign(static_cast<size_t>(r), Mat());
  const Mat idv = Mat::Identity(v.dim, v.dim);
  const Mat idw = Mat::Identity(w.dim, w.dim);
  for (int i = 0; i < r; ++i) {
    const int par = generator_parity(cx.rs, i);
    t.E[i] = super_kron(v.E[i], idw, 0, v.parities) +
             super_kron(k_matrix(cx, v, i, -1), w.E[i], par, v.parities);
    t.F[i] = super_kron(v.F[i], k_matrix(cx, w, i, +1), 0, v.parities) +
             super_kron(idv, w.F[i], par, v.parities);
  }
  finish_h(cx, t);
  return t;
}

// --------------------------------------------------------------- dualities

MorphismMatrix ev_left(const Context& cx, const WeightModule& v) {
  MorphismMatrix f;
  f.source = tensor_module(cx, dual_module(cx, v), v);
  f.target = make_trivial(cx);
  f.entries = Mat::Zero(1, v.dim * v.dim);
  for (int i = 0; i < v.dim; ++i) f.entries(0, i * v.dim + i) = 1.0;
  return f;
}

MorphismMatrix coev_left(const Context& cx, const WeightModule& v) {
  MorphismMatrix f;
  f.source = make_trivial(cx);
  f.target = tensor_module(cx, v, dual_module(cx, v));
  f.entries = Mat::Zero(v.dim * v.dim, 1);
  for (int i = 0; i < v.dim; ++i) f.entries(i * v.dim + i, 0) = 1.0;
  return f;
}

MorphismMatrix ev_right(const Context& cx, const WeightModule& v) {
  MorphismMatrix f;
  f.source = tensor_module(cx, v, dual_module(cx, v));
  f.target = make_trivial(cx);
  f.entries = Mat::Zero(1, v.dim * v.dim);
  const Mat kpi = k_pi_matrix(cx, v, +1);
  for (int j = 0; j < v.dim; ++j) {
    const double sign = v.parities[static_cast<size_t>(j)] != 0 ? -1.0 : 1.0;
    f.entries(0, j * v.dim + j) = sign * kpi(j, j);
  }
  return f;
}

MorphismMatrix coev_right(const Context& cx, const WeightModule& v) {
  MorphismMatrix f;
  f.source = make_trivial(cx);
  f.target = tensor_module(cx, dual_module(cx, v), v);
  f.entries = Mat::Zero(v.dim * v.dim, 1);
  const Mat kpi_inv = k_pi_matrix(cx, v, -1);
  for (int j = 0; j < v.dim; ++j) {
    const double sign = v.parities[static_cast<size_t>(j)] != 0 ? -1.0 : 1.0;
    f.entries(j * v.dim + j, 0) = sign * kpi_inv(j, j);
  }
  return f;
}

Cplx quantum_dimension(const Context& cx, const WeightModule& v) {
  const Mat kpi = k_pi_matrix(cx, v, +1);
  Cplx total(0, 0);
  for (int j = 0; j < v.dim; ++j) {
    const double sign = v.parities[static_cast<size_t>(j)] != 0 ? -1.0 : 1.0;
    total += sign * kpi(j, j);
  }
  return total;
}

// ------------------------------------------------------------------ checks

RelationsReport check_relations(const Context& cx, const WeightModule& v,
                                double tol) {
  const RootSystem& rs = cx.rs;
  const RootOfUnity& root = cx.root;
  const int r = rs.r;
  const int mi = odd_node(rs);
  RelationsReport rep;
  auto add = [&rep](const std::string& name, double res) {
    rep.checks.emplace_back(name, res);
    if (res > rep.max_residual) rep.max_residual = res;
  };
  auto tag = [](const std::string& base, int i, int j = -1) {
    std::string s = base + "[" + std::to_string(i + 1);
    if (j >= 0) s += "," + std::to_string(j + 1);
    return s + "]";
  };

  // H_i diagonal, commuting, and weight bookkeeping.
  for (int i = 0; i < r; ++i) {
    Mat off = v.H[i];
    off.diagonal().setZero();
    add(tag("H diagonal ", i), max_abs(off));
  }

  // [H_i, X_j] = +- a_ij X_j and the K-conjugation it integrates to.
  for (int i = 0; i < r; ++i) {
    const Mat ki = k_matrix(cx, v, i, +1);
    const Mat ki_inv = k_matrix(cx, v, i, -1);
    for (int j = 0; j < r; ++j) {
      const Cplx aij(static_cast<double>(rs.cartan(i, j)), 0);
      add(tag("[H,E] ", i, j),
          max_abs(v.H[i] * v.E[j] - v.E[j] * v.H[i] - aij * v.E[j]));
      add(tag("[H,F] ", i, j),
          max_abs(v.H[i] * v.F[j] - v.F[j] * v.H[i] + aij * v.F[j]));
      const Cplx phase = root.pow(Cplx(rs.gram_roots(i, j), 0));
      add(tag("K E K^{-1} ", i, j),
          max_abs(ki * v.E[j] * ki_inv - phase * v.E[j]));
      add(tag("K F K^{-1} ", i, j),
          max_abs(ki * v.F[j] * ki_inv - (Cplx(1, 0) / phase) * v.F[j]));
    }
  }

  // Super-commutators [E_i, F_j] = delta_ij (K_i - K_i^{-1})/{d_i}.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double sg =
          (generator_parity(rs, i) != 0 && generator_parity(rs, j) != 0)
              ? -1.0
              : 1.0;
      Mat lhs = v.E[i] * v.F[j] - sg * v.F[j] * v.E[i];
      if (i == j) {
        const Cplx den = root.qnum(Cplx(rs.d[i], 0));
        lhs -= (k_matrix(cx, v, i, +1) - k_matrix(cx, v, i, -1)) / den;
      }
      add(tag("[E,F] ", i, j), max_abs(lhs));
    }
  }

  // Odd generators square to zero.
  add("E_m^2", max_abs(v.E[mi] * v.E[mi]));
  add("F_m^2", max_abs(v.F[mi] * v.F[mi]));

  // Distant-node super-commutators vanish (a_ij = 0, i != j).
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (rs.cartan(i, j) != 0) continue;
      const double sg =
          (generator_parity(rs, i) != 0 && generator_parity(rs, j) != 0)
              ? -1.0
              : 1.0;
      add(tag("[E,E] distant ", i, j),
          max_abs(v.E[i] * v.E[j] - sg * v.E[j] * v.E[i]));
      add(tag("[F,F] distant ", i, j),
          max_abs(v.F[i] * v.F[j] - sg * v.F[j] * v.F[i]));
    }
  }

  // Quantum Serre relation for adjacent nodes with an even squared leg.
  const Cplx q1 = root.pow(Cplx(1, 0)) + root.pow(Cplx(-1, 0));
  for (int i = 0; i < r; ++i) {
    if (i == mi) continue;
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j >= r) continue;
      add(tag("Serre E ", i, j),
          max_abs(v.E[i] * v.E[i] * v.E[j] - q1 * v.E[i] * v.E[j] * v.E[i] +
                  v.E[j] * v.E[i] * v.E[i]));
      add(tag("Serre F ", i, j),
          max_abs(v.F[i] * v.F[i] * v.F[j] - q1 * v.F[i] * v.F[j] * v.F[i] +
                  v.F[j] * v.F[i] * v.F[i]));
    }
  }

  // Four-term Serre relation around the odd node (vacuous unless the odd
  // node has neighbors on both sides).
  if (mi - 1 >= 0 && mi + 1 < r) {
    auto serre4 = [&](const std::vector<Mat>& x) {
      const Mat &xm = x[mi], &xl = x[mi - 1], &xr = x[mi + 1];
      return xm * xl * xm * xr + xm * xr * xm * xl + xl * xm * xr * xm +
             xr * xm * xl * xm - q1 * xm * xl * xr * xm;
    };
    add("Serre4 E", max_abs(serre4(v.E)));
    add("Serre4 F", max_abs(serre4(v.F)));
  }

  // Truncation at the root of unity on even nodes.
  for (int i = 0; i < r; ++i) {
    if (i == mi) continue;
    add(tag("E^ell ", i), max_abs(mat_pow(v.E[i], root.ell)));
    add(tag("F^ell ", i), max_abs(mat_pow(v.F[i], root.ell)));
  }

  // Parity homogeneity of every generator matrix.
  auto parity_residual = [&](const Mat& x, int x_parity) {
    double worst = 0.0;
    for (int a = 0; a < v.dim; ++a) {
      for (int b = 0; b < v.dim; ++b) {
        const int need = (v.parities[static_cast<size_t>(a)] +
                          v.parities[static_cast<size_t>(b)] + x_parity) %
                         2;
        if (need != 0) worst = std::max(worst, std::abs(x(a, b)));
      }
    }
    return worst;
  };
  for (int i = 0; i < r; ++i) {
    const int par = generator_parity(rs, i);
    add(tag("parity E ", i), parity_residual(v.E[i], par));
    add(tag("parity F ", i), parity_residual(v.F[i], par));
    add(tag("parity H ", i), parity_residual(v.H[i], 0));
  }

  rep.pass = rep.max_residual <= tol;
  return rep;
}

double morphism_residual(const Context& cx, const MorphismMatrix& f) {
  const int r = cx.rs.r;
  double worst = 0.0;
  auto check = [&](const Mat& src, const Mat& tgt, int u_parity) {
    const double sg = (u_parity != 0 && f.parity != 0) ? -1.0 : 1.0;
    worst = std::max(worst, max_abs(f.entries * src - sg * tgt * f.entries));
  };
  for (int i = 0; i < r; ++i) {
    const int par = generator_parity(cx.rs, i);
    check(f.source.E[i], f.target.E[i], par);
    check(f.source.F[i], f.target.F[i], par);
    check(f.source.H[i], f.target.H[i], 0);
  }
  return worst;
}

Mat highest_weight_vectors(const Context& cx, const WeightModule& v) {
  const int r = cx.rs.r;
  Mat stack(r * v.dim, v.dim);
  for (int i = 0; i < r; ++i) stack.middleRows(i * v.dim, v.dim) = v.E[i];
  Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = (sv.size() ? sv(0) : 0.0) * 1e-10 + 1e-12;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(v.dim - rank);
}

bool is_simple_module(const Context& cx, const WeightModule& v, double tol) {
  const int r = cx.rs.r;
  std::vector<const Mat*> gens;
  for (int i = 0; i < r; ++i) {
    gens.push_back(&v.E[i]);
    gens.push_back(&v.F[i]);
  }
  for (int b = 0; b < v.dim; ++b) {
    Mat q = Mat::Zero(v.dim, v.dim);
    q.col(0)(b) = 1.0;
    int k = 1;
    for (int head = 0; head < k && k < v.dim; ++head) {
      for (const Mat* g : gens) {
        Vec w = (*g) * q.col(head);
        w -= q.leftCols(k) * (q.leftCols(k).adjoint() * w);
        w -= q.leftCols(k) * (q.leftCols(k).adjoint() * w);  // re-orthogonalize
        const double nrm = w.norm();
        if (nrm > tol) {
          q.col(k) = w / nrm;
          if (++k == v.dim) break;
        }
      }
    }
    if (k < v.dim) return false;
  }
  return true;
}

}  // namespace relmod
