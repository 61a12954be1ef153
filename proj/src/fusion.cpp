#include "fusion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace relmod {

namespace {

bool near_int(double x, double tol) {
  return std::abs(x - std::round(x)) <= tol;
}

void check_box_partition(const BoxPartition& lam, int m, int n) {
  if (static_cast<int>(lam.size()) != m) {
    throw std::invalid_argument("box partition must have m parts");
  }
  for (int i = 0; i < m; ++i) {
    if (lam[i] < 0 || lam[i] > n) {
      throw std::invalid_argument("box partition parts must lie in [0, n]");
    }
    if (i > 0 && lam[i] > lam[i - 1]) {
      throw std::invalid_argument("box partition must be weakly decreasing");
    }
  }
}

// Positive root as an integer vector of eps/delta coefficients (size m+n);
// every simple root is e_k - e_{k+1} in the concatenated basis.
std::vector<int> root_epsdelta(const RootSystem& rs, const Root& beta) {
  std::vector<int> v(rs.m + rs.n, 0);
  for (int j = 0; j < rs.r; ++j) {
    v[j] += beta.k[j];
    v[j + 1] -= beta.k[j];
  }
  return v;
}

// H-coordinates of the basis functional e_idx (eps_idx for idx < m, else
// delta_{idx-m}): c_k = d_k <e_idx, alpha_k>.
Weight unit_weight(const RootSystem& rs, int idx) {
  Weight c = Weight::Zero(rs.r);
  const double sign = idx < rs.m ? 1.0 : -1.0;  // <e_idx, e_idx>
  for (int k = 0; k < rs.r; ++k) {
    double val = 0.0;
    if (idx == k) val = sign;
    if (idx == k + 1) val = -sign;
    c[k] = Cplx(rs.d[k] * val, 0.0);
  }
  return c;
}

// Partition shapes of the two g_0 factors read off an integral c-part.
void factor_shapes(const Context& cx, const Weight& lam, std::vector<int>& p,
                   std::vector<int>& q) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  p.assign(m, 0);
  for (int i = m - 2; i >= 0; --i) {
    p[i] = p[i + 1] + static_cast<int>(std::llround(lam[i].real()));
  }
  q.assign(n, 0);
  for (int j = n - 2; j >= 0; --j) {
    q[j] = q[j + 1] + static_cast<int>(std::llround(lam[m + j].real()));
  }
}

// Contents of all semistandard tableaux of the given shape with entries in
// 1..max_entry (rows weakly increase, columns strictly increase).
std::vector<std::vector<int>> ssyt_contents(const std::vector<int>& shape,
                                            int max_entry) {
  std::vector<int> rows;
  for (int s : shape) {
    if (s > 0) rows.push_back(s);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> content(max_entry, 0);
  if (rows.empty()) {
    out.push_back(content);
    return out;
  }
  std::vector<std::vector<int>> tab(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) tab[i].assign(rows[i], 0);

  std::function<void(size_t, int)> fill = [&](size_t row, int col) {
    if (row == rows.size()) {
      out.push_back(content);
      return;
    }
    size_t next_row = row;
    int next_col = col + 1;
    if (next_col >= rows[row]) {
      next_row = row + 1;
      next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[row][col - 1]);
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      tab[row][col] = v;
      ++content[v - 1];
      fill(next_row, next_col);
      --content[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

void require_closed_alcove(const Context& cx, const Weight& lam,
                           const char* what) {
  if (!in_alcove(cx, lam, false)) {
    std::ostringstream os;
    os << what << " requires a weight in the closed alcove";
    throw NotInAlcoveError(os.str());
  }
}

void add_term(Character& ch, const std::vector<int>& offset, long long even,
              long long odd) {
  auto& slot = ch.terms[offset];
  slot.first += even;
  slot.second += odd;
}

void drop_zero_terms(Character& ch) {
  for (auto it = ch.terms.begin(); it != ch.terms.end();) {
    if (it->second.first == 0 && it->second.second == 0) {
      it = ch.terms.erase(it);
    } else {
      ++it;
    }
  }
}

// Integer eps/delta shift between two bases, or false if not integral.
bool base_shift(const Eigen::VectorXcd& from, const Eigen::VectorXcd& to,
                double tol, std::vector<int>& shift) {
  if (from.size() != to.size()) return false;
  shift.assign(from.size(), 0);
  for (Eigen::Index i = 0; i < from.size(); ++i) {
    const Cplx d = from[i] - to[i];
    if (std::abs(d.imag()) > tol || !near_int(d.real(), tol)) return false;
    shift[i] = static_cast<int>(std::llround(d.real()));
  }
  return true;
}

}  // namespace

std::vector<BoxPartition> diagrams_in_box(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("box dimensions must be positive");
  }
  std::vector<BoxPartition> out;
  BoxPartition cur(m, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    const int hi = pos == 0 ? n : cur[pos - 1];
    for (int v = 0; v <= hi; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

ComplementConjugate complement_conjugate(const BoxPartition& lam, int m,
                                         int n) {
  check_box_partition(lam, m, n);
  ComplementConjugate cc;
  cc.hat.assign(m, 0);
  for (int i = 0; i < m; ++i) cc.hat[i] = n - lam[m - 1 - i];
  cc.mu.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (cc.hat[i] >= j + 1) ++count;
    }
    cc.mu[j] = count;
  }
  return cc;
}

Weight summand_weight(const Context& cx, const BoxPartition& lam,
                      const Cplx& z) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  check_box_partition(lam, m, n);
  const ComplementConjugate cc = complement_conjugate(lam, m, n);
  Weight c(cx.rs.r);
  for (int i = 0; i + 1 < m; ++i) c[i] = Cplx(lam[i] - lam[i + 1], 0.0);
  // The H_m coordinate comes from normalizing the Cauchy piece
  // S_{hat}(std_m^*) (x) S_{mu}(std_n) of the doubled exterior algebra to a
  // dominant triple: a_lam = z + mu_1 + lam_m - n. The full rectangle keeps
  // a = z, so V^{lam^0_{a+b}} is always a summand.
  c[m - 1] = z + Cplx(cc.mu[0] + lam[m - 1] - n, 0.0);
  for (int j = 0; j + 1 < n; ++j) {
    c[m + j] = Cplx(cc.mu[j] - cc.mu[j + 1], 0.0);
  }
  return c;
}

std::vector<Weight> tensor_decompose_zero(const Context& cx, const Cplx& a,
                                          const Cplx& b) {
  const Cplx z = a + b;
  if (is_critical(z, cx.tol)) {
    throw CriticalGradingError(
        "tensor decomposition requires a non-critical total degree");
  }
  std::vector<Weight> out;
  for (const BoxPartition& lam : diagrams_in_box(cx.rs.m, cx.rs.n)) {
    out.push_back(summand_weight(cx, lam, z));
  }
  return out;
}

long long g0_dim(const Context& cx, const Weight& lam) {
  require_closed_alcove(cx, lam, "g0_dim");
  std::vector<int> p, q;
  factor_shapes(cx, lam, p, q);
  const long long dm =
      static_cast<long long>(ssyt_contents(p, cx.rs.m).size());
  const long long dn =
      static_cast<long long>(ssyt_contents(q, cx.rs.n).size());
  return dm * dn;
}

long long envelope_dim(const Context& cx, const Weight& lam) {
  return (1LL << (cx.rs.m * cx.rs.n)) * g0_dim(cx, lam);
}

std::vector<Weight> pieri_step(const Context& cx, const Weight& lam) {
  if (!in_alcove(cx, lam, true)) {
    throw NotInAlcoveError(
        "one-box step requires a weight strictly inside the alcove");
  }
  if (!is_typical(cx, lam).typical) {
    throw NotTypicalError("one-box step requires a typical weight");
  }
  std::vector<Weight> out;
  for (int idx = 0; idx < cx.rs.m + cx.rs.n; ++idx) {
    Weight cand = lam + unit_weight(cx.rs, idx);
    try {
      if (in_alcove(cx, cand, false)) out.push_back(cand);
    } catch (const NotInAlcoveError&) {
      // adding a box here breaks dominance; no summand
    }
  }
  return out;
}

Character envelope_character(const Context& cx, const Weight& lam) {
  require_closed_alcove(cx, lam, "envelope_character");
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  std::vector<int> p, q;
  factor_shapes(cx, lam, p, q);
  const auto contents_m = ssyt_contents(p, m);
  const auto contents_n = ssyt_contents(q, n);

  Character ch;
  ch.base = epsdelta_rep(cx.rs, lam);
  // Odd directions eps_i - delta_j; a subset S contributes the offset
  // -sum_S (e_i - e_{m+j}) with parity |S|.
  const int mn = m * n;
  std::vector<int> offset(m + n, 0);
  for (const auto& tm : contents_m) {
    for (const auto& tn : contents_n) {
      for (int mask = 0; mask < (1 << mn); ++mask) {
        std::fill(offset.begin(), offset.end(), 0);
        for (int i = 0; i < m; ++i) offset[i] = tm[i] - p[i];
        for (int j = 0; j < n; ++j) offset[m + j] = tn[j] - q[j];
        int parity = 0;
        for (int bit = 0; bit < mn; ++bit) {
          if (mask & (1 << bit)) {
            const int i = bit / n;
            const int j = bit % n;
            offset[i] -= 1;
            offset[m + j] += 1;
            ++parity;
          }
        }
        add_term(ch, offset, (parity % 2 == 0) ? 1 : 0,
                 (parity % 2 == 0) ? 0 : 1);
      }
    }
  }
  return ch;
}

Character char_mul(const Character& x, const Character& y) {
  if (x.base.size() != y.base.size()) {
    throw std::invalid_argument("character product: mismatched rank");
  }
  Character out;
  out.base = x.base + y.base;
  std::vector<int> offset(x.base.size(), 0);
  for (const auto& [ox, mx] : x.terms) {
    for (const auto& [oy, my] : y.terms) {
      for (size_t i = 0; i < offset.size(); ++i) offset[i] = ox[i] + oy[i];
      const long long even = mx.first * my.first + mx.second * my.second;
      const long long odd = mx.first * my.second + mx.second * my.first;
      add_term(out, offset, even, odd);
    }
  }
  drop_zero_terms(out);
  return out;
}

Character char_add(const Character& x, const Character& y) {
  std::vector<int> shift;
  if (!base_shift(y.base, x.base, kDefaultTol, shift)) {
    throw std::invalid_argument(
        "character sum: bases must differ by an integer eps/delta vector");
  }
  Character out = x;
  std::vector<int> offset(x.base.size(), 0);
  for (const auto& [oy, my] : y.terms) {
    for (size_t i = 0; i < offset.size(); ++i) offset[i] = oy[i] + shift[i];
    add_term(out, offset, my.first, my.second);
  }
  drop_zero_terms(out);
  return out;
}

bool char_eq(const Character& x, const Character& y, double tol) {
  std::vector<int> shift;
  if (!base_shift(y.base, x.base, tol, shift)) return false;
  Character xn = x;
  drop_zero_terms(xn);
  std::map<std::vector<int>, std::pair<long long, long long>> yshift;
  std::vector<int> offset(x.base.size(), 0);
  for (const auto& [oy, my] : y.terms) {
    if (my.first == 0 && my.second == 0) continue;
    for (size_t i = 0; i < offset.size(); ++i) offset[i] = oy[i] + shift[i];
    yshift[offset] = my;
  }
  return xn.terms == yshift;
}

long long char_dim(const Character& ch) {
  long long total = 0;
  for (const auto& [offset, mult] : ch.terms) {
    (void)offset;
    total += mult.first + mult.second;
  }
  return total;
}

Cplx psi_superdim(const Context& cx, const Character& ch) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  // omega^{S} * (-1)^{Y} = xi^{x S + (ell/2) Y} with x = ell n / (2(m-n)).
  const double x = static_cast<double>(cx.root.ell) * n / (2.0 * (m - n));
  const double half = cx.root.ell / 2.0;
  Cplx total(0.0, 0.0);
  for (const auto& [offset, mult] : ch.terms) {
    Cplx s(0.0, 0.0);
    Cplx y(0.0, 0.0);
    for (int i = 0; i < m + n; ++i) {
      const Cplx wi = ch.base[i] + Cplx(offset[i], 0.0);
      s += wi;
      if (i >= m) y += wi;
    }
    const double signed_mult = static_cast<double>(mult.first - mult.second);
    total += signed_mult * cx.root.pow(x * s + half * y);
  }
  return total;
}

Character top_supercharacter(const Context& cx) {
  const int m = cx.rs.m;
  const int n = cx.rs.n;
  const int ell = cx.root.ell;
  Weight top(cx.rs.r);
  for (int i = 0; i < cx.rs.r; ++i) top[i] = Cplx(ell - 1, 0.0);
  top[m - 1] = Cplx((ell - 1) * (n - m) / 2, 0.0);

  Character ch;
  ch.base = epsdelta_rep(cx.rs, top);
  ch.terms[std::vector<int>(m + n, 0)] = {1, 0};

  std::vector<int> offset(m + n, 0);
  for (const Root& alpha : cx.rs.pos_even) {
    const std::vector<int> v = root_epsdelta(cx.rs, alpha);
    Character next;
    next.base = ch.base;
    for (const auto& [o, mult] : ch.terms) {
      for (int k = 0; k < ell; ++k) {
        for (int i = 0; i < m + n; ++i) offset[i] = o[i] - k * v[i];
        add_term(next, offset, mult.first, mult.second);
      }
    }
    ch = std::move(next);
  }
  for (const Root& alpha : cx.rs.pos_odd) {
    const std::vector<int> v = root_epsdelta(cx.rs, alpha);
    Character next;
    next.base = ch.base;
    for (const auto& [o, mult] : ch.terms) {
      add_term(next, o, mult.first, mult.second);
      for (int i = 0; i < m + n; ++i) offset[i] = o[i] - v[i];
      // multiplying by an odd group-like flips the parity split
      add_term(next, offset, mult.second, mult.first);
    }
    ch = std::move(next);
  }
  return ch;
}

}  // namespace relmod
