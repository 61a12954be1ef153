#include "rootdata.hpp"

#include <stdexcept>

namespace relmod {

namespace {

// Simple root alpha_i as an eps/delta coefficient vector (size m+n).
Eigen::VectorXi simple_root_epsdelta(int m, int n, int i) {
  Eigen::VectorXi v = Eigen::VectorXi::Zero(m + n);
  if (i < m) {  // eps_i - eps_{i+1}, 1-based i
    v(i - 1) = 1;
    v(i) = -1;
  } else if (i == m) {  // eps_m - del_1
    v(m - 1) = 1;
    v(m) = -1;
  } else {  // del_j - del_{j+1}, j = i - m
    v(i - 1) = 1;
    v(i) = -1;
  }
  return v;
}

int form_epsdelta(int m, const Eigen::VectorXi& f, const Eigen::VectorXi& g) {
  int s = 0;
  for (int i = 0; i < f.size(); ++i) s += (i < m ? 1 : -1) * f(i) * g(i);
  return s;
}

}  // namespace

RootSystem::RootSystem(int m_, int n_) : m(m_), n(n_), r(m_ + n_ - 1) {
  if (m < 1 || n < 1 || m == n) {
    throw std::invalid_argument("RootSystem: need m,n >= 1 and m != n");
  }
  d = Eigen::VectorXi::Ones(r);
  for (int i = m + 1; i <= r; ++i) d(i - 1) = -1;

  gram_roots.resize(r, r);
  for (int i = 1; i <= r; ++i) {
    Eigen::VectorXi ai = simple_root_epsdelta(m, n, i);
    for (int j = 1; j <= r; ++j) {
      gram_roots(i - 1, j - 1) = form_epsdelta(m, ai, simple_root_epsdelta(m, n, j));
    }
  }
  cartan.resize(r, r);
  for (int i = 0; i < r; ++i) cartan.row(i) = d(i) * gram_roots.row(i);

  Eigen::MatrixXd Ad = cartan.cast<double>();
  gram_w = d.cast<double>().asDiagonal() * Ad.inverse();

  // Positive even roots: eps_i - eps_j (i<j<=m) then del_i - del_j (i<j<=n).
  auto span = [&](int lo, int hi) {  // alpha_lo + ... + alpha_hi, 1-based
    Eigen::VectorXi k = Eigen::VectorXi::Zero(r);
    for (int t = lo; t <= hi; ++t) k(t - 1) = 1;
    return k;
  };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pos_even.push_back({span(i, j - 1), false});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos_even.push_back({span(m + i, m + j - 1), false});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) pos_odd.push_back({span(i, m + j - 1), true});
}

Cplx pair_ww(const RootSystem& rs, const Weight& a, const Weight& b) {
  return (a.transpose() * rs.gram_w.cast<Cplx>() * b)(0);
}

Cplx pair_wr(const RootSystem& rs, const Weight& a, const Root& beta) {
  Cplx s = 0.0;
  for (int i = 0; i < rs.r; ++i) {
    s += static_cast<double>(rs.d(i) * beta.k(i)) * a(i);
  }
  return s;
}

int pair_rr(const RootSystem& rs, const Root& beta, const Root& gamma) {
  return beta.k.dot(rs.gram_roots * gamma.k);
}

Weight root_as_weight(const RootSystem& rs, const Root& beta) {
  Eigen::VectorXi c = Eigen::VectorXi::Zero(rs.r);
  Eigen::VectorXi gk = rs.gram_roots * beta.k;
  for (int i = 0; i < rs.r; ++i) c(i) = rs.d(i) * gk(i);
  return c.cast<Cplx>();
}

Weight rho_weight(const RootSystem& rs) {
  Weight w = Weight::Ones(rs.r);
  w(rs.m - 1) = 0.0;
  return w;
}

Weight pi_weight(const RootSystem& rs, int ell) {
  Weight w = Weight::Constant(rs.r, Cplx(2.0 - 2.0 * ell, 0.0));
  w(rs.m - 1) = Cplx(static_cast<double>(ell) * (rs.m - rs.n), 0.0);
  return w;
}

Eigen::VectorXcd epsdelta_rep(const RootSystem& rs, const Weight& a) {
  const int m = rs.m, n = rs.n;
  Eigen::VectorXcd raw = Eigen::VectorXcd::Zero(m + n);
  // Raw fundamental representatives: w_k = eps_1+..+eps_k for k <= m,
  // w_{m+j} = -(eps_1+..+eps_m) + (del_1+..+del_j).
  for (int k = 1; k <= rs.r; ++k) {
    Eigen::VectorXcd wk = Eigen::VectorXcd::Zero(m + n);
    if (k <= m) {
      for (int i = 0; i < k; ++i) wk(i) = 1.0;
    } else {
      for (int i = 0; i < m; ++i) wk(i) = -1.0;
      for (int j = 0; j < k - m; ++j) wk(m + j) = 1.0;
    }
    raw += a(k - 1) * wk;
  }
  // Project off the supertrace direction: the form lives on X*/(C str).
  Eigen::VectorXcd str = Eigen::VectorXcd::Zero(m + n);
  for (int i = 0; i < m; ++i) str(i) = 1.0;
  for (int j = 0; j < n; ++j) str(m + j) = -1.0;
  Cplx coef = pair_epsdelta(m, raw, str) / static_cast<double>(m - n);
  return raw - coef * str;
}

Cplx pair_epsdelta(int m, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
  Cplx s = 0.0;
  for (int i = 0; i < f.size(); ++i) s += (i < m ? 1.0 : -1.0) * f(i) * g(i);
  return s;
}

Weight make_weight(const RootSystem& rs, const std::vector<Cplx>& c) {
  if (static_cast<int>(c.size()) != rs.r) {
    throw std::invalid_argument("make_weight: expected r coordinates");
  }
  Weight w(rs.r);
  for (int i = 0; i < rs.r; ++i) w(i) = c[i];
  return w;
}

}  // namespace relmod
