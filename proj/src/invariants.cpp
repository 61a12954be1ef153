#include "invariants.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace relmod {

namespace {

// True iff z is within tol of a real integer.
bool near_int(const Cplx& z, double tol) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

// Reduce the real part of z into [0, 1), snapping values that are within
// 1e-9 of the upper edge back to 0 so that classes of exact lattice points
// come out as exact zeros.
Cplx reduce_mod_one(const Cplx& z) {
  double re = z.real() - std::floor(z.real());
  if (re > 1.0 - 1e-9) re = 0.0;
  return Cplx(re, z.imag());
}

std::string weight_str(const Weight& lam) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < lam.size(); ++i) {
    if (i) os << ", ";
    os << lam[i].real();
    if (lam[i].imag() != 0.0) os << (lam[i].imag() < 0 ? "-" : "+")
                                 << std::abs(lam[i].imag()) << "i";
  }
  os << ")";
  return os.str();
}

}  // namespace

Context::Context(int m, int n, int ell, Ideal ideal_, double tol_)
    : rs(m, n), root(ell), ideal(ideal_), tol(tol_) {
  if (ell < m + n - 1)
    throw std::invalid_argument("level ell must be at least m + n - 1");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
}

TypicalityReport is_typical(const Context& cx, const Weight& lam) {
  TypicalityReport rep;
  const Weight nu = lam + rho_weight(cx.rs);
  for (const Root& alpha : cx.rs.pos_odd) {
    const Cplx z = pair_wr(cx.rs, nu, alpha);
    const Cplx factor = cx.root.qnum(z);
    if (std::abs(factor) <= cx.tol) {
      rep.vanishing.push_back(alpha);
      // Flag factors that vanish only numerically: z is not actually on the
      // wall lattice (ell/2) Z, yet the braided number is below tolerance.
      if (!cx.root.vanishes(z, cx.tol)) rep.near_wall = true;
    }
  }
  rep.typical = rep.vanishing.empty();
  return rep;
}

bool is_typical_arith(const Context& cx, const Weight& lam) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      Cplx v(m + 1 - i - j, 0);
      for (int k = i; k <= m - 1; ++k) v += lam[k - 1];
      v += lam[m - 1];
      for (int k = m + 1; k <= m + j - 1; ++k) v -= lam[k - 1];
      if (cx.root.vanishes(v, cx.tol)) return false;
    }
  }
  return true;
}

bool in_alcove(const Context& cx, const Weight& lam, bool strict) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  long long sum1 = 0, sum2 = 0;
  for (int i = 1; i <= cx.rs.r; ++i) {
    if (i == m) continue;
    const Cplx c = lam[i - 1];
    if (!near_int(c, cx.tol) || std::round(c.real()) < 0)
      throw NotInAlcoveError("c-part of " + weight_str(lam) +
                             " is not a vector of nonnegative integers");
    const long long ci = std::llround(c.real());
    (i < m ? sum1 : sum2) += ci + 1;
  }
  if (strict) return sum1 < cx.root.ell && sum2 < cx.root.ell;
  return sum1 <= cx.root.ell && sum2 <= cx.root.ell;
}

long long borel_dim(const Context& cx) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  const int e = (m * m + n * n - m - n) / 2;
  long long d = 1;
  for (int i = 0; i < e; ++i) {
    if (d > (9e18 / cx.root.ell))
      throw Error(Status::InvalidArgument, "Borel dimension overflows");
    d *= cx.root.ell;
  }
  for (int i = 0; i < m * n; ++i) {
    if (d > (9e18 / 2))
      throw Error(Status::InvalidArgument, "Borel dimension overflows");
    d *= 2;
  }
  return d;
}

Vec full_grading_class(const Context& cx, const Weight& lam) {
  // lambda = sum x_j alpha_j has c-coordinates c = A x, so the class of
  // lambda modulo the root lattice is A^{-1} c mod Z^r. Since
  // gram_w = diag(d) A^{-1} and diag(d)^2 = 1, A^{-1} = diag(d) gram_w.
  Vec x = cx.rs.d.cast<double>().asDiagonal() * (cx.rs.gram_w * lam);
  for (int i = 0; i < x.size(); ++i) x[i] = reduce_mod_one(x[i]);
  return x;
}

Cplx pert_grading_class(const Weight& lam, int m) {
  return reduce_mod_one(lam[m - 1]);
}

bool is_critical(const Cplx& a, double tol) { return near_int(2.0 * a, tol); }

int small_d(int m, int n) { return std::abs(m - n) / std::gcd(m, n); }

bool in_lambda_z(const Context& cx, const Weight& lam, double tol) {
  // 2 <lambda, alpha_i> = 2 d_i c_i in ell Z for all i, equivalently every
  // c_i lies in (ell/2) Z.
  for (int i = 0; i < lam.size(); ++i) {
    const Cplx t = 2.0 * lam[i] / Cplx(cx.root.ell, 0);
    if (!near_int(t, tol)) return false;
  }
  return true;
}

bool in_lambda_z0(const Context& cx, const Weight& lam, double tol) {
  if (!in_lambda_z(cx, lam, tol)) return false;
  const Vec x = cx.rs.d.cast<double>().asDiagonal() * (cx.rs.gram_w * lam);
  for (int i = 0; i < x.size(); ++i)
    if (!near_int(x[i], tol)) return false;
  return true;
}

Cplx twist_scalar(const Context& cx, const Weight& lam) {
  const Weight shifted = lam + pi_weight(cx.rs, cx.root.ell);
  return cx.root.pow(pair_ww(cx.rs, shifted, lam));
}

Cplx s_prime(const Context& cx, const Weight& lam, const Weight& mu) {
  const Weight w2 = 2.0 * lam + pi_weight(cx.rs, cx.root.ell);
  Cplx value = cx.root.pow(pair_ww(cx.rs, w2, mu));
  for (const Root& alpha : cx.rs.pos_even) {
    const Cplx z = pair_wr(cx.rs, w2, alpha);
    const Cplx den = 1.0 - cx.root.pow(-z);
    if (std::abs(den) <= cx.tol)
      throw DegenerateWeightError(
          "even-root denominator of S' vanishes at " + weight_str(lam));
    value *= (1.0 - cx.root.pow(-Cplx(cx.root.ell, 0) * z)) / den;
  }
  for (const Root& alpha : cx.rs.pos_odd)
    value *= 1.0 - cx.root.pow(-pair_wr(cx.rs, w2, alpha));
  return value;
}

Cplx mdim_proj(const Context& cx, const Weight& lam) {
  const Weight nu = lam + 0.5 * pi_weight(cx.rs, cx.root.ell);
  Cplx num(1, 0), den(1, 0);
  for (const Root& alpha : cx.rs.pos_even) {
    const Cplx z = pair_wr(cx.rs, nu, alpha);
    num *= cx.root.qnum(z);
    const Cplx f = cx.root.qnum(Cplx(cx.root.ell, 0) * z);
    if (std::abs(f) <= cx.tol)
      throw DegenerateWeightError(
          "even-root denominator of the projective modified dimension "
          "vanishes at " + weight_str(lam));
    den *= f;
  }
  for (const Root& alpha : cx.rs.pos_odd) {
    const Cplx f = cx.root.qnum(pair_wr(cx.rs, nu, alpha));
    if (std::abs(f) <= cx.tol)
      throw DegenerateWeightError(
          "odd-root denominator of the projective modified dimension "
          "vanishes at " + weight_str(lam));
    den *= f;
  }
  return num / den;
}

Cplx mdim_pert(const Context& cx, const Weight& lam) {
  if (!in_alcove(cx, lam, /*strict=*/false))
    throw NotInAlcoveError("weight " + weight_str(lam) +
                           " lies outside the closed alcove");
  const TypicalityReport rep = is_typical(cx, lam);
  if (!rep.typical)
    throw NotTypicalError("weight " + weight_str(lam) + " is atypical");
  const Weight rho = rho_weight(cx.rs);
  const Weight nu = lam + rho;
  Cplx value(1, 0);
  for (const Root& alpha : cx.rs.pos_even)
    value *= cx.root.qnum(pair_wr(cx.rs, nu, alpha)) /
             cx.root.qnum(pair_wr(cx.rs, rho, alpha));
  for (const Root& alpha : cx.rs.pos_odd)
    value /= cx.root.qnum(pair_wr(cx.rs, nu, alpha));
  return value;
}

Cplx zeta_term(const Context& cx, const Weight& lam, const Weight& mu) {
  const Weight dual = -pi_weight(cx.rs, cx.root.ell) - lam;
  return mdim_proj(cx, mu) * mdim_proj(cx, lam) * s_prime(cx, lam, mu) *
         s_prime(cx, mu, dual);
}

Cplx psi_compat(const Context& cx, const Cplx& a, int k) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  const int num = 2 * small_d(m, n) * m * n;
  if (num % (n - m) != 0)
    throw Error(Status::Internal, "psi exponent coefficient is not integral");
  const int coeff = num / (n - m);
  return cx.root.pow(Cplx(cx.root.ell, 0) * a * Cplx(k * coeff, 0));
}

Weight weight_sl21(const Context& cx, const Cplx& alpha, int c) {
  if (cx.rs.m != 2 || cx.rs.n != 1)
    throw std::invalid_argument("weight_sl21 requires the sl(2|1) datum");
  if (c < 0) throw std::invalid_argument("even highest weight c must be >= 0");
  Weight lam(2);
  lam << Cplx(c, 0), alpha;
  return lam;
}

Cplx hopf_value_sl21(const Context& cx, const Cplx& alpha, int c,
                     const Cplx& alpha2, int c2, bool positive) {
  const Weight lam = weight_sl21(cx, alpha, c);
  const Weight lam2 = weight_sl21(cx, alpha2, c2);
  if (!is_typical(cx, lam).typical || !is_typical(cx, lam2).typical)
    throw NotTypicalError("Hopf link colors must be typical");
  const double s = positive ? 1.0 : -1.0;
  const Cplx e = -s * (2.0 * alpha + Cplx(c + 1, 0)) *
                 (2.0 * alpha2 + Cplx(c2 + 1, 0));
  return cx.root.pow(e) *
         cx.root.qnum(Cplx((c + 1) * (c2 + 1), 0)) / cx.root.qnum(1.0);
}

std::vector<KirbyTerm> kirby_color_sl21(const Context& cx, const Cplx& a) {
  if (is_critical(a, cx.tol))
    throw CriticalGradingError(
        "Kirby color requires a non-critical degree (2a not integral)");
  std::vector<KirbyTerm> terms;
  terms.reserve(static_cast<size_t>(cx.root.ell) * cx.root.ell);
  for (int k = 0; k < cx.root.ell; ++k) {
    for (int c = 0; c < cx.root.ell; ++c) {
      KirbyTerm t;
      t.k = k;
      t.c = c;
      t.lam = weight_sl21(cx, a + Cplx(k, 0), c);
      t.coeff = mdim_pert(cx, t.lam);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

Cplx delta_closed_form(const Context& cx, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  // The double sum is independent of a, so it equals its formal limit
  // xi^a -> infinity, where {a+c} ~ xi^{a+c}. Expanding
  // {m+1}^2 = xi^{2m+2} - 2 + xi^{-2m-2} leaves three geometric series in m
  // with ratios xi^{2-2k}, xi^{-2k}, xi^{-2-2k}; they survive only at
  // k = 1, 0, ell-1 and give ell (xi^{-1} - 2 xi + xi^{-1}) / {1}^2, i.e.
  //   Delta_+ = 2 ell (xi^{-1} - xi) / {1}^2 = -2 ell / {1},
  // and Delta_- is its conjugate 2 ell / {1}.
  const double s = sign;
  return -s * 2.0 * Cplx(cx.root.ell, 0) / cx.root.qnum(1.0);
}

Cplx delta_numeric(const Context& cx, int sign, const Cplx& a) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  if (is_critical(a, cx.tol))
    throw CriticalGradingError(
        "Delta sums require a non-critical degree (2a not integral)");
  const Weight base = weight_sl21(cx, a, 0);
  const Cplx d_base = mdim_pert(cx, base);
  if (std::abs(d_base) <= cx.tol)
    throw DegenerateWeightError("base color has vanishing modified dimension");
  Cplx theta_base = twist_scalar(cx, base);
  if (sign < 0) theta_base = 1.0 / theta_base;
  const Cplx dual_a = -a - 1.0;
  Cplx sum(0, 0);
  for (int k = 0; k < cx.root.ell; ++k) {
    for (int c = 0; c < cx.root.ell; ++c) {
      const Weight w = weight_sl21(cx, a + Cplx(k, 0), c);
      const Cplx d_w = mdim_pert(cx, w);
      Cplx theta_w = twist_scalar(cx, w);
      if (sign < 0) theta_w = 1.0 / theta_w;
      const Cplx hopf =
          hopf_value_sl21(cx, a + Cplx(k, 0), c, dual_a, 0, sign > 0);
      sum += theta_w * theta_base * hopf * d_w / d_base;
    }
  }
  return sum;
}

}  // namespace relmod
