#include "tangles.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "errors.hpp"

namespace relmod {

namespace {

// Contracts a piece matrix `a` (dim_y x dim_x) into the middle factor of the
// running state `m`, whose rows are indexed by (left, x, right) with `left`
// slowest.  Returns the state with rows indexed by (left, y, right).  All
// pieces are parity-even, so no Koszul signs appear at placement time.
Mat apply_middle(const Mat& m, const Mat& a, Eigen::Index dim_l,
                 Eigen::Index dim_x, Eigen::Index dim_r) {
  const Eigen::Index dim_y = a.rows();
  Mat out = Mat::Zero(dim_l * dim_y * dim_r, m.cols());
  for (Eigen::Index l = 0; l < dim_l; ++l) {
    for (Eigen::Index y = 0; y < dim_y; ++y) {
      auto dst = out.middleRows((l * dim_y + y) * dim_r, dim_r);
      for (Eigen::Index x = 0; x < dim_x; ++x) {
        const Cplx c = a(y, x);
        if (c == Cplx(0, 0)) continue;
        dst += c * m.middleRows((l * dim_x + x) * dim_r, dim_r);
      }
    }
  }
  return out;
}

std::string strand_key(const StrandColor& s) {
  return std::to_string(s.color) + (s.dual ? "*" : "");
}

class Evaluator {
 public:
  Evaluator(const Context& cx, const MorseDiagram& d)
      : cx_(cx), d_(d), duals_(d.palette.size()) {}

  const WeightModule& mod(const StrandColor& s) {
    if (s.color < 0 || s.color >= static_cast<int>(d_.palette.size())) {
      throw Error(Status::InvalidArgument,
                  "strand color is not a palette index");
    }
    if (!s.dual) return d_.palette[s.color];
    auto& slot = duals_[s.color];
    if (!slot) slot = dual_module(cx_, d_.palette[s.color]);
    return *slot;
  }

  Eigen::Index dim(const StrandColor& s) {
    return static_cast<Eigen::Index>(mod(s).weights.size());
  }

  // Runs the word; returns the final boundary and the state matrix
  // (final dimension x bottom dimension).
  std::pair<std::vector<StrandColor>, Mat> run() {
    std::vector<StrandColor> strands = d_.bottom;
    Eigen::Index total = 1;
    for (const auto& s : strands) total *= dim(s);
    Mat m = Mat::Identity(total, total);
    for (std::size_t i = 0; i < d_.slices.size(); ++i) {
      apply_slice(d_.slices[i], i, strands, m);
      if (m.rows() * m.cols() > (Eigen::Index(1) << 26)) {
        throw Error(Status::Internal, "evaluation state too large");
      }
    }
    return {std::move(strands), std::move(m)};
  }

 private:
  [[noreturn]] void fail(std::size_t index, const std::string& what) {
    throw IllFormedDiagramError("slice " + std::to_string(index) + ": " +
                                what);
  }

  const Mat& cached(const std::string& key, const std::function<Mat()>& make) {
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, make()).first;
    return it->second;
  }

  void apply_slice(const Slice& sl, std::size_t index,
                   std::vector<StrandColor>& strands, Mat& m) {
    const int n = static_cast<int>(strands.size());
    const auto prod_dims = [&](int from, int to) {
      Eigen::Index p = 1;
      for (int k = from; k < to; ++k) p *= dim(strands[k]);
      return p;
    };
    switch (sl.kind) {
      case Piece::CupL:
      case Piece::CupR: {
        if (sl.pos < 0 || sl.pos > n) fail(index, "cup position out of range");
        if (sl.color < 0) fail(index, "cup requires a palette color");
        const StrandColor up{sl.color, false};
        const StrandColor down{sl.color, true};
        const bool left = sl.kind == Piece::CupL;
        const WeightModule& v = mod(up);
        const Mat& a = cached(
            (left ? "cupL:" : "cupR:") + std::to_string(sl.color),
            [&]() -> Mat {
              return left ? coev_left(cx_, v).entries
                          : coev_right(cx_, v).entries;
            });
        m = apply_middle(m, a, prod_dims(0, sl.pos), 1, prod_dims(sl.pos, n));
        strands.insert(strands.begin() + sl.pos, {left ? up : down});
        strands.insert(strands.begin() + sl.pos + 1, {left ? down : up});
        break;
      }
      case Piece::CapL:
      case Piece::CapR: {
        if (sl.pos < 0 || sl.pos + 2 > n) fail(index, "cap position out of range");
        const StrandColor s0 = strands[sl.pos];
        const StrandColor s1 = strands[sl.pos + 1];
        const bool left = sl.kind == Piece::CapL;
        if (s0.color != s1.color || s0.dual == s1.dual ||
            s0.dual != left) {
          fail(index, left ? "left cap expects a (dual, plain) pair"
                           : "right cap expects a (plain, dual) pair");
        }
        const WeightModule& v = mod({s0.color, false});
        const Mat& a = cached(
            (left ? "capL:" : "capR:") + std::to_string(s0.color),
            [&]() -> Mat {
              return left ? ev_left(cx_, v).entries : ev_right(cx_, v).entries;
            });
        const Eigen::Index dx = dim(s0) * dim(s1);
        m = apply_middle(m, a, prod_dims(0, sl.pos), dx,
                         prod_dims(sl.pos + 2, n));
        strands.erase(strands.begin() + sl.pos, strands.begin() + sl.pos + 2);
        break;
      }
      case Piece::CrossPos:
      case Piece::CrossNeg: {
        if (sl.pos < 0 || sl.pos + 2 > n) {
          fail(index, "crossing position out of range");
        }
        const StrandColor s0 = strands[sl.pos];
        const StrandColor s1 = strands[sl.pos + 1];
        const bool pos_cross = sl.kind == Piece::CrossPos;
        const Mat& a = cached(
            (pos_cross ? "xP:" : "xN:") + strand_key(s0) + "|" +
                strand_key(s1),
            [&]() -> Mat {
              // CrossPos is the braiding c_{X,Y}; CrossNeg is the other
              // positive braiding's inverse c_{Y,X}^{-1}, also X(x)Y -> Y(x)X.
              return pos_cross ? braiding(cx_, mod(s0), mod(s1)).forward
                               : braiding(cx_, mod(s1), mod(s0)).inverse;
            });
        const Eigen::Index dx = dim(s0) * dim(s1);
        m = apply_middle(m, a, prod_dims(0, sl.pos), dx,
                         prod_dims(sl.pos + 2, n));
        std::swap(strands[sl.pos], strands[sl.pos + 1]);
        break;
      }
      case Piece::TwistPos:
      case Piece::TwistNeg: {
        if (sl.pos < 0 || sl.pos >= n) fail(index, "twist position out of range");
        const StrandColor s0 = strands[sl.pos];
        const bool pos_twist = sl.kind == Piece::TwistPos;
        const Mat& a = cached(
            (pos_twist ? "tw+:" : "tw-:") + strand_key(s0), [&]() -> Mat {
              Mat t = twist_op(cx_, mod(s0));
              return pos_twist ? t : Mat(t.partialPivLu().inverse());
            });
        m = apply_middle(m, a, prod_dims(0, sl.pos), dim(s0),
                         prod_dims(sl.pos + 1, n));
        break;
      }
    }
  }

  const Context& cx_;
  const MorseDiagram& d_;
  std::vector<std::optional<WeightModule>> duals_;
  std::unordered_map<std::string, Mat> cache_;
};

WeightModule fold_boundary(const Context& cx, Evaluator& ev,
                           const std::vector<StrandColor>& strands) {
  if (strands.empty()) return make_trivial(cx);
  WeightModule acc = ev.mod(strands[0]);
  for (std::size_t i = 1; i < strands.size(); ++i) {
    acc = tensor_module(cx, acc, ev.mod(strands[i]));
  }
  return acc;
}

// The weight of the unique highest-weight line of a simple module.  The
// joint kernel of the raising operators is weight-graded, so a
// one-dimensional kernel is supported in a single weight space.
Weight module_highest_weight(const Context& cx, const WeightModule& v) {
  const Mat hw = highest_weight_vectors(cx, v);
  if (hw.cols() != 1) {
    throw NotSimpleError(
        "cut color does not have a unique highest-weight line");
  }
  Eigen::Index best = 0;
  hw.col(0).cwiseAbs().maxCoeff(&best);
  return v.weights[static_cast<std::size_t>(best)];
}

}  // namespace

MorphismMatrix evaluate(const Context& cx, const MorseDiagram& d) {
  Evaluator ev(cx, d);
  auto [top, m] = ev.run();
  MorphismMatrix out;
  out.source = fold_boundary(cx, ev, d.bottom);
  out.target = fold_boundary(cx, ev, top);
  out.entries = std::move(m);
  return out;
}

Cplx f_prime(const Context& cx, const MorseDiagram& d) {
  if (d.bottom.size() != 1 || d.bottom[0].dual) {
    throw Error(Status::InvalidArgument,
                "the diagram must be cut open along a single upward strand");
  }
  Evaluator ev(cx, d);
  auto [top, m] = ev.run();
  if (top.size() != 1 || top[0].color != d.bottom[0].color ||
      top[0].dual != d.bottom[0].dual) {
    throw IllFormedDiagramError(
        "a cut diagram must close up onto its starting strand");
  }
  const WeightModule& v = ev.mod(d.bottom[0]);
  const Eigen::Index n = static_cast<Eigen::Index>(v.weights.size());
  const Cplx scalar = m.trace() / Cplx(static_cast<double>(n), 0);
  const double resid = (m - scalar * Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (resid > 1e-8 * (1.0 + std::abs(scalar))) {
    throw NotSimpleError("diagram endomorphism is not a scalar on the cut color");
  }
  const Weight lam = module_highest_weight(cx, v);
  const Cplx md = cx.ideal == Ideal::Projective ? mdim_proj(cx, lam)
                                                : mdim_pert(cx, lam);
  return md * scalar;
}

std::vector<WeightedDiagram> expand_kirby(const Context& cx,
                                          const MorseDiagram& d,
                                          const std::vector<int>& kirby_slots,
                                          const std::vector<Cplx>& gradings) {
  if (kirby_slots.size() != gradings.size()) {
    throw Error(Status::InvalidArgument,
                "expected exactly one grading per Kirby slot");
  }
  for (std::size_t i = 0; i < kirby_slots.size(); ++i) {
    const int slot = kirby_slots[i];
    if (slot < 0 || slot >= static_cast<int>(d.palette.size())) {
      throw Error(Status::InvalidArgument, "Kirby slot is not a palette index");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (kirby_slots[j] == slot) {
        throw Error(Status::InvalidArgument, "duplicate Kirby slot");
      }
    }
  }
  std::vector<WeightedDiagram> out;
  out.push_back({Cplx(1, 0), d});
  for (std::size_t i = 0; i < kirby_slots.size(); ++i) {
    const auto terms = kirby_color_sl21(cx, gradings[i]);
    std::vector<WeightedDiagram> next;
    next.reserve(out.size() * terms.size());
    for (const auto& wd : out) {
      for (const auto& t : terms) {
        if (std::abs(t.coeff) < 1e-14) continue;  // dropped boundary terms
        WeightedDiagram nd = wd;
        nd.weight *= t.coeff;
        nd.diagram.palette[kirby_slots[i]] =
            make_typical(cx, gradings[i] + Cplx(t.k, 0), t.c);
        next.push_back(std::move(nd));
      }
    }
    out = std::move(next);
  }
  return out;
}

Cplx cgp_invariant(const Context& cx, const SurgeryPresentation& p) {
  const auto ns = static_cast<Eigen::Index>(p.kirby_slots.size());
  if (p.linking.rows() != ns || p.linking.cols() != ns) {
    throw Error(Status::InvalidArgument,
                "linking matrix size must match the number of surgery "
                "components");
  }
  int b_plus = 0;
  int b_minus = 0;
  if (ns > 0) {
    if ((p.linking - p.linking.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw Error(Status::InvalidArgument, "linking matrix must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.linking);
    for (Eigen::Index i = 0; i < ns; ++i) {
      const double ev = es.eigenvalues()[i];
      if (ev > 1e-9) ++b_plus;
      if (ev < -1e-9) ++b_minus;
    }
  }
  const auto expanded = expand_kirby(cx, p.diagram, p.kirby_slots, p.gradings);
  Cplx sum(0, 0);
  for (const auto& wd : expanded) sum += wd.weight * f_prime(cx, wd.diagram);
  Cplx norm(1, 0);
  if (b_plus > 0) {
    const Cplx dp = delta_closed_form(cx, +1);
    if (std::abs(dp) < 1e-12) throw DegenerateDeltaError("Delta_+ vanishes");
    for (int i = 0; i < b_plus; ++i) norm *= dp;
  }
  if (b_minus > 0) {
    const Cplx dm = delta_closed_form(cx, -1);
    if (std::abs(dm) < 1e-12) throw DegenerateDeltaError("Delta_- vanishes");
    for (int i = 0; i < b_minus; ++i) norm *= dm;
  }
  return sum / norm;
}

MorseDiagram closed_unknot_diagram(const WeightModule& v, int framing) {
  MorseDiagram d;
  d.palette = {v};
  d.slices.push_back({Piece::CupL, 0, 0});
  for (int i = 0; i < std::abs(framing); ++i) {
    d.slices.push_back({framing > 0 ? Piece::TwistPos : Piece::TwistNeg, 0, -1});
  }
  d.slices.push_back({Piece::CapR, 0, -1});
  return d;
}

MorseDiagram cut_unknot_diagram(const WeightModule& v, int framing) {
  MorseDiagram d;
  d.palette = {v};
  d.bottom = {{0, false}};
  for (int i = 0; i < std::abs(framing); ++i) {
    d.slices.push_back({framing > 0 ? Piece::TwistPos : Piece::TwistNeg, 0, -1});
  }
  return d;
}

MorseDiagram open_hopf_diagram(const WeightModule& cut,
                               const WeightModule& circle, bool positive,
                               int circle_framing) {
  MorseDiagram d;
  d.palette = {cut, circle};
  d.bottom = {{0, false}};
  d.slices.push_back({Piece::CupL, 1, 1});
  for (int i = 0; i < std::abs(circle_framing); ++i) {
    d.slices.push_back(
        {circle_framing > 0 ? Piece::TwistPos : Piece::TwistNeg, 1, -1});
  }
  // The cut strand goes over the near side of the circle and under the far
  // side (or the mirror of that): equal crossing kinds would let the strand
  // pull off the circle entirely (linking number zero).
  d.slices.push_back({positive ? Piece::CrossPos : Piece::CrossNeg, 0, -1});
  d.slices.push_back({positive ? Piece::CrossNeg : Piece::CrossPos, 1, -1});
  d.slices.push_back({Piece::CapR, 0, -1});
  return d;
}

}  // namespace relmod
