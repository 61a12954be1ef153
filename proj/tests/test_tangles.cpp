#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <vector>

#include "doctest.h"
#include "invariants.hpp"
#include "tangles.hpp"

using namespace relmod;

namespace {

bool close(const Cplx& a, const Cplx& b, double tol) {
  return std::abs(a - b) <= tol;
}

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void add(MorseDiagram& d, Piece k, int pos, int color = -1) {
  d.slices.push_back({k, pos, color});
}

// Largest entry of the difference of two evaluated words (they must share
// boundaries).
double diagram_diff(const Context& cx, const MorseDiagram& d1,
                    const MorseDiagram& d2) {
  const Mat m1 = evaluate(cx, d1).entries;
  const Mat m2 = evaluate(cx, d2).entries;
  REQUIRE(m1.rows() == m2.rows());
  REQUIRE(m1.cols() == m2.cols());
  return max_abs(m1 - m2);
}

// V strand vertically through a framed circle: the cut-open Hopf pattern
// with an extra framing bead on the cut strand itself.
MorseDiagram beaded_hopf(const WeightModule& cut, const WeightModule& circle,
                         bool positive, int circle_framing, int cut_framing) {
  MorseDiagram d = open_hopf_diagram(cut, circle, positive, circle_framing);
  for (int i = 0; i < std::abs(cut_framing); ++i) {
    d.slices.insert(d.slices.begin(),
                    {cut_framing > 0 ? Piece::TwistPos : Piece::TwistNeg, 0, -1});
  }
  return d;
}

}  // namespace

TEST_CASE("evaluate: boundaries, closed circles, and malformed words") {
  Context cx(2, 1, 5);
  const auto v = make_typical(cx, Cplx(0.3, 0), 1);
  const auto w = make_typical(cx, Cplx(0.45, 0), 0);
  const auto st = make_standard(cx);

  SUBCASE("empty word is the identity on its boundary") {
    MorseDiagram d;
    d.palette = {v, w};
    d.bottom = {{0, false}, {1, true}};
    const MorphismMatrix m = evaluate(cx, d);
    CHECK(m.entries.rows() == 32);
    CHECK(max_abs(m.entries - Mat::Identity(32, 32)) == 0.0);
    CHECK(m.source.weights.size() == 32);
    CHECK(m.target.parities == m.source.parities);
  }

  SUBCASE("closed circles evaluate to quantum dimensions") {
    // Typical colors have vanishing quantum dimension.
    const Mat mt = evaluate(cx, closed_unknot_diagram(v, 0)).entries;
    REQUIRE(mt.rows() == 1);
    CHECK(std::abs(mt(0, 0)) < 1e-12);
    // Non-typical colors reproduce quantum_dimension exactly.
    for (const auto& m : {st, make_sigma(cx, 1, make_weight(cx.rs, {Cplx(0, 0), Cplx(-5, 0)})),
                          make_epsilon(cx)}) {
      const Mat mm = evaluate(cx, closed_unknot_diagram(m, 0)).entries;
      REQUIRE(mm.rows() == 1);
      CHECK(close(mm(0, 0), quantum_dimension(cx, m), 1e-10));
    }
    // The two closures (left cup / right cap vs right cup / left cap)
    // agree: the pivot makes the two circle orientations equal.
    MorseDiagram other;
    other.palette = {st};
    add(other, Piece::CupR, 0, 0);
    add(other, Piece::CapL, 0);
    CHECK(close(evaluate(cx, other).entries(0, 0), quantum_dimension(cx, st),
                1e-10));
  }

  SUBCASE("malformed words throw IllFormedDiagramError") {
    MorseDiagram d;
    d.palette = {v, w};
    d.bottom = {{0, false}, {1, false}};
    // Cap over two distinct colors.
    add(d, Piece::CapR, 0);
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    // Cap with the wrong orientation pattern.
    d.slices = {{Piece::CapL, 0, -1}};
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    // Cup without a color.
    d.slices = {{Piece::CupL, 0, -1}};
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    // Positions out of range.
    d.slices = {{Piece::CrossPos, 1, -1}};
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    d.slices = {{Piece::TwistPos, 2, -1}};
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    d.slices = {{Piece::CupL, 3, 0}};
    CHECK_THROWS_AS(evaluate(cx, d), IllFormedDiagramError);
    // Palette index out of range is an argument error.
    d.slices = {};
    d.bottom = {{7, false}};
    CHECK_THROWS_AS(evaluate(cx, d), Error);
  }

  SUBCASE("a cut diagram must close onto its own strand") {
    MorseDiagram d;
    d.palette = {v, w};
    d.bottom = {{0, false}};
    add(d, Piece::CupL, 1, 1);  // leaves three strands on top
    CHECK_THROWS_AS(f_prime(cx, d), IllFormedDiagramError);
  }
}

TEST_CASE("evaluated words are module morphisms") {
  Context cx(2, 1, 5);
  const auto v = make_typical(cx, Cplx(0.3, 0), 1);
  const auto w = make_standard(cx);

  // A single crossing placed by the engine.
  MorseDiagram d1;
  d1.palette = {v, w};
  d1.bottom = {{0, false}, {1, false}};
  add(d1, Piece::CrossPos, 0);
  CHECK(morphism_residual(cx, evaluate(cx, d1)) < 1e-8);

  // An open word with a cup, a twist, and a crossing, ending on a larger
  // boundary: tests equivariance of the placement across three factors.
  MorseDiagram d2;
  d2.palette = {v, w};
  d2.bottom = {{0, false}};
  add(d2, Piece::CupL, 1, 1);
  add(d2, Piece::TwistPos, 1);
  add(d2, Piece::CrossNeg, 0);
  CHECK(morphism_residual(cx, evaluate(cx, d2)) < 1e-8);

  // The full open Hopf pattern as an endomorphism of the cut strand.
  CHECK(morphism_residual(cx, evaluate(cx, open_hopf_diagram(v, w, true))) <
        1e-8);
}

TEST_CASE("unknots: modified dimension, framing beads, ideal selection") {
  Context cx(2, 1, 5);

  SUBCASE("zero framing gives the modified dimension of the cut color") {
    for (const auto& [a, c] : std::vector<std::pair<Cplx, int>>{
             {Cplx(0.3, 0), 0}, {Cplx(0.45, 0), 2}, {Cplx(0.3, 0.7), 1}}) {
      const auto v = make_typical(cx, a, c);
      const Cplx fp = f_prime(cx, cut_unknot_diagram(v, 0));
      CHECK(close(fp, mdim_pert(cx, weight_sl21(cx, a, c)), 1e-10));
    }
  }

  SUBCASE("framing beads multiply by the twist scalar") {
    const Cplx a(0.3, 0);
    const int c = 1;
    const auto v = make_typical(cx, a, c);
    const Weight lam = weight_sl21(cx, a, c);
    const Cplx md = mdim_pert(cx, lam);
    const Cplx th = twist_scalar(cx, lam);
    for (int fr : {1, -1, 3, -2}) {
      const Cplx fp = f_prime(cx, cut_unknot_diagram(v, fr));
      CHECK(close(fp, md * std::pow(th, fr), 1e-9));
    }
  }

  SUBCASE("the projective ideal rejects integral-alcove colors") {
    // Integer-c typicals lie outside the domain of the generic-weight
    // modified dimension: ideal selection is explicit and mixing is an
    // error, not a silent fallback.
    Context proj(2, 1, 5, Ideal::Projective);
    const auto v = make_typical(proj, Cplx(0.3, 0), 0);
    CHECK_THROWS_AS(f_prime(proj, cut_unknot_diagram(v, 0)),
                    DegenerateWeightError);
  }

  SUBCASE("non-simple cut colors are rejected") {
    const auto v = make_typical(cx, Cplx(0.3, 0), 0);
    const auto w = make_typical(cx, Cplx(0.45, 0), 0);
    const auto vw = tensor_module(cx, v, w);
    CHECK_THROWS_AS(f_prime(cx, cut_unknot_diagram(vw, 0)), NotSimpleError);
  }
}

TEST_CASE("Hopf links match the closed-form pairing") {
  Context cx(2, 1, 5);
  const std::vector<std::tuple<Cplx, int, Cplx, int>> grid = {
      {Cplx(0.3, 0), 0, Cplx(0.45, 0), 0},
      {Cplx(0.3, 0), 1, Cplx(0.45, 0), 0},
      {Cplx(0.25, 0), 2, Cplx(-1.4, 0), 1},
      {Cplx(0.3, 0.7), 0, Cplx(0.45, 0), 1},
  };

  SUBCASE("positive and negative Hopf links, both cut choices") {
    for (const auto& [a1, c1, a2, c2] : grid) {
      const auto v1 = make_typical(cx, a1, c1);
      const auto v2 = make_typical(cx, a2, c2);
      for (bool pos : {true, false}) {
        const Cplx want = hopf_value_sl21(cx, a1, c1, a2, c2, pos);
        const Cplx fp1 = f_prime(cx, open_hopf_diagram(v1, v2, pos));
        CHECK(close(fp1, want, 1e-9));
        // Cutting the other component gives the same invariant: this is
        // the symmetry d(V) S'(V, W circle) = d(W) S'(W, V circle).
        const Cplx fp2 = f_prime(cx, open_hopf_diagram(v2, v1, pos));
        CHECK(close(fp2, want, 1e-9));
      }
    }
  }

  SUBCASE("framing beads on the circle") {
    const Cplx a1(0.3, 0), a2(0.45, 0);
    const auto v1 = make_typical(cx, a1, 1);
    const auto v2 = make_typical(cx, a2, 0);
    const Cplx th2 = twist_scalar(cx, weight_sl21(cx, a2, 0));
    const Cplx fp = f_prime(cx, open_hopf_diagram(v1, v2, true, 2));
    CHECK(close(fp, th2 * th2 * hopf_value_sl21(cx, a1, 1, a2, 0, true), 1e-9));
  }

  SUBCASE("cyclic re-cutting: beads commute around the cut strand") {
    const auto v1 = make_typical(cx, Cplx(0.3, 0), 1);
    const auto v2 = make_typical(cx, Cplx(0.45, 0), 0);
    MorseDiagram before = open_hopf_diagram(v1, v2, true);
    before.slices.insert(before.slices.begin(), {Piece::TwistPos, 0, -1});
    MorseDiagram after = open_hopf_diagram(v1, v2, true);
    add(after, Piece::TwistPos, 0);
    CHECK(close(f_prime(cx, before), f_prime(cx, after), 1e-9));
  }

  SUBCASE("invertible circles act by the grading compatibility scalar") {
    const Cplx a(0.3, 0);
    const auto v = make_typical(cx, a, 1);
    const Cplx md = mdim_pert(cx, weight_sl21(cx, a, 1));
    for (int k : {1, 2, -1}) {
      const auto sig =
          make_sigma(cx, 0, make_weight(cx.rs, {Cplx(0, 0), Cplx(5.0 * k, 0)}));
      const Cplx fp = f_prime(cx, open_hopf_diagram(v, sig, true));
      CHECK(close(fp / md, psi_compat(cx, a, k), 1e-9));
      const Cplx fn = f_prime(cx, open_hopf_diagram(v, sig, false));
      CHECK(close(fn / md, psi_compat(cx, a, -k), 1e-9));
    }
  }
}

TEST_CASE("isotopy battery: framed Reidemeister moves and zig-zags") {
  Context cx(2, 1, 5);
  const auto v = make_typical(cx, Cplx(0.3, 0), 1);
  const auto w = make_typical(cx, Cplx(0.45, 0), 0);
  const auto st = make_standard(cx);
  const auto sig = make_sigma(cx, 1, make_weight(cx.rs, {Cplx(0, 0), Cplx(-5, 0)}));

  int verified = 0;
  const auto pair_eq = [&](const MorseDiagram& d1, const MorseDiagram& d2) {
    CHECK(diagram_diff(cx, d1, d2) < 1e-9);
    ++verified;
  };
  const auto on = [](std::vector<WeightModule> pal,
                     std::vector<StrandColor> bot) {
    MorseDiagram d;
    d.palette = std::move(pal);
    d.bottom = std::move(bot);
    return d;
  };

  // 1, 2) Reidemeister II, both orders.
  {
    MorseDiagram d1 = on({v, w}, {{0, false}, {1, false}});
    add(d1, Piece::CrossPos, 0);
    add(d1, Piece::CrossNeg, 0);
    pair_eq(d1, on({v, w}, {{0, false}, {1, false}}));

    MorseDiagram d2 = on({st, w}, {{0, false}, {1, false}});
    add(d2, Piece::CrossNeg, 0);
    add(d2, Piece::CrossPos, 0);
    pair_eq(d2, on({st, w}, {{0, false}, {1, false}}));
  }

  // 3) Reidemeister II across a dual strand.
  {
    MorseDiagram d = on({v, w}, {{0, true}, {1, false}});
    add(d, Piece::CrossPos, 0);
    add(d, Piece::CrossNeg, 0);
    pair_eq(d, on({v, w}, {{0, true}, {1, false}}));
  }

  // 4, 5) Reidemeister III, positive and negative.
  {
    const std::vector<StrandColor> bot = {{0, false}, {1, false}, {2, false}};
    for (Piece x : {Piece::CrossPos, Piece::CrossNeg}) {
      MorseDiagram d1 = on({v, w, st}, bot);
      add(d1, x, 0);
      add(d1, x, 1);
      add(d1, x, 0);
      MorseDiagram d2 = on({v, w, st}, bot);
      add(d2, x, 1);
      add(d2, x, 0);
      add(d2, x, 1);
      pair_eq(d1, d2);
    }
  }

  // 6, 7) Zig-zags through both dualities.
  {
    MorseDiagram d1 = on({v}, {{0, false}});
    add(d1, Piece::CupL, 0, 0);
    add(d1, Piece::CapL, 1);
    pair_eq(d1, on({v}, {{0, false}}));

    MorseDiagram d2 = on({v}, {{0, false}});
    add(d2, Piece::CupR, 1, 0);
    add(d2, Piece::CapR, 0);
    pair_eq(d2, on({v}, {{0, false}}));
  }

  // 8) Zig-zag on a downward (dual) strand.
  {
    MorseDiagram d = on({st}, {{0, true}});
    add(d, Piece::CupL, 1, 0);
    add(d, Piece::CapL, 0);
    pair_eq(d, on({st}, {{0, true}}));
  }

  // 9) Framing twist cancellation.
  {
    MorseDiagram d = on({v}, {{0, false}});
    add(d, Piece::TwistPos, 0);
    add(d, Piece::TwistNeg, 0);
    pair_eq(d, on({v}, {{0, false}}));
  }

  // 10) Twist beads slide through crossings (naturality of the twist).
  {
    MorseDiagram d1 = on({v, w}, {{0, false}, {1, false}});
    add(d1, Piece::TwistPos, 0);
    add(d1, Piece::CrossPos, 0);
    MorseDiagram d2 = on({v, w}, {{0, false}, {1, false}});
    add(d2, Piece::CrossPos, 0);
    add(d2, Piece::TwistPos, 1);
    pair_eq(d1, d2);
  }

  // 11) A strand pushed into and back out of a closed circle (Reidemeister
  // II over a cup/cap pair); the sigma color keeps the circle value nonzero.
  {
    MorseDiagram d1 = on({v, sig}, {{0, false}});
    add(d1, Piece::CupL, 1, 1);
    add(d1, Piece::CrossPos, 0);
    add(d1, Piece::CrossNeg, 0);
    add(d1, Piece::CapR, 1);
    MorseDiagram d2 = on({v, sig}, {{0, false}});
    add(d2, Piece::CupL, 1, 1);
    add(d2, Piece::CapR, 1);
    pair_eq(d1, d2);
  }

  CHECK(verified >= 10);
}

TEST_CASE("Kirby expansion: counts, weights, and errors") {
  Context cx(2, 1, 5);
  const auto v = make_typical(cx, Cplx(0.3, 0), 0);
  const auto slot = make_typical(cx, Cplx(0.99, 0), 0);  // placeholder color
  const MorseDiagram d = open_hopf_diagram(v, slot, true, 1);

  SUBCASE("no slots: singleton with weight one") {
    const auto out = expand_kirby(cx, d, {}, {});
    REQUIRE(out.size() == 1);
    CHECK(out[0].weight == Cplx(1, 0));
    CHECK(out[0].diagram.palette.size() == d.palette.size());
  }

  SUBCASE("one slot: the nonzero Kirby summands in canonical order") {
    const Cplx g(0.7, 0);
    const auto out = expand_kirby(cx, d, {1}, {g});
    CHECK(out.size() == 20);  // ell^2 = 25 minus 5 boundary terms
    const auto terms = kirby_color_sl21(cx, g);
    std::size_t j = 0;
    for (const auto& t : terms) {
      if (std::abs(t.coeff) < 1e-14) continue;
      REQUIRE(j < out.size());
      CHECK(close(out[j].weight, t.coeff, 1e-12));
      const auto& mod = out[j].diagram.palette[1];
      CHECK(static_cast<int>(mod.weights.size()) == 4 * (t.c + 1));
      ++j;
    }
    CHECK(j == out.size());
    // The cut color is untouched.
    CHECK(out[0].diagram.palette[0].weights.size() == v.weights.size());
  }

  SUBCASE("two slots: full product expansion") {
    MorseDiagram d2;
    d2.palette = {v, slot, slot};
    d2.bottom = {{0, false}};
    for (int color : {1, 2}) {
      add(d2, Piece::CupL, 1, color);
      add(d2, Piece::TwistPos, 1);
      add(d2, Piece::CrossPos, 0);
      add(d2, Piece::CrossNeg, 1);
      add(d2, Piece::CapR, 0);
    }
    const auto out = expand_kirby(cx, d2, {1, 2}, {Cplx(0.7, 0), Cplx(0.7, 0)});
    CHECK(out.size() == 400);
    // Spot-check multiplicativity of the first weight.
    const auto terms = kirby_color_sl21(cx, Cplx(0.7, 0));
    CHECK(close(out[0].weight, terms[0].coeff * terms[0].coeff, 1e-12));
  }

  SUBCASE("argument errors") {
    CHECK_THROWS_AS(expand_kirby(cx, d, {1}, {}), Error);
    CHECK_THROWS_AS(expand_kirby(cx, d, {1, 1}, {Cplx(0.7, 0), Cplx(0.7, 0)}),
                    Error);
    CHECK_THROWS_AS(expand_kirby(cx, d, {5}, {Cplx(0.7, 0)}), Error);
    CHECK_THROWS_AS(expand_kirby(cx, d, {1}, {Cplx(0.5, 0)}),
                    CriticalGradingError);
  }
}

TEST_CASE("surgery invariant: stabilization fixes the Delta conventions") {
  Context cx(2, 1, 5);
  const Cplx a(0.3, 0);
  const auto v = make_typical(cx, a, 0);
  const auto slot = make_typical(cx, Cplx(0.99, 0), 0);
  const Cplx md = mdim_pert(cx, weight_sl21(cx, a, 0));

  SUBCASE("empty surgery: the invariant of the unknot in S^3") {
    SurgeryPresentation p;
    p.diagram = cut_unknot_diagram(v, 0);
    p.linking = Eigen::MatrixXd::Zero(0, 0);
    CHECK(close(cgp_invariant(cx, p), md, 1e-10));
  }

  SUBCASE("one positive and one negative stabilization") {
    // A +/-1-framed Kirby circle encircling the cut strand presents S^3
    // again, with the strand's framing shifted by -/+1; the compensating
    // bead keeps the pair equal to the 0-framed unknot.  The circle's
    // grading solves fr * g + lk * a in Z.  Matching the base value checks
    // the sign convention of Delta_+ and Delta_- separately.
    for (int fr : {+1, -1}) {
      SurgeryPresentation p;
      p.diagram = beaded_hopf(v, slot, true, fr, fr);
      p.kirby_slots = {1};
      p.gradings = {fr > 0 ? Cplx(0.7, 0) : Cplx(0.3, 0)};
      p.linking = Eigen::MatrixXd::Constant(1, 1, double(fr));
      CHECK(close(cgp_invariant(cx, p), md, 1e-8));
    }
  }

  SUBCASE("two stacked positive stabilizations normalize by Delta_+^2") {
    MorseDiagram d;
    d.palette = {v, slot, slot};
    d.bottom = {{0, false}};
    add(d, Piece::TwistPos, 0);
    add(d, Piece::TwistPos, 0);
    for (int color : {1, 2}) {
      add(d, Piece::CupL, 1, color);
      add(d, Piece::TwistPos, 1);
      add(d, Piece::CrossPos, 0);
      add(d, Piece::CrossNeg, 1);
      add(d, Piece::CapR, 0);
    }
    SurgeryPresentation p;
    p.diagram = d;
    p.kirby_slots = {1, 2};
    p.gradings = {Cplx(0.7, 0), Cplx(0.7, 0)};
    p.linking = Eigen::MatrixXd::Identity(2, 2);
    CHECK(close(cgp_invariant(cx, p), md, 1e-8));
  }

  SUBCASE("presentation errors") {
    SurgeryPresentation p;
    p.diagram = beaded_hopf(v, slot, true, 1, 1);
    p.kirby_slots = {1};
    p.gradings = {Cplx(0.7, 0)};
    p.linking = Eigen::MatrixXd::Zero(2, 2);
    CHECK_THROWS_AS(cgp_invariant(cx, p), Error);  // size mismatch
    p.linking = Eigen::MatrixXd::Constant(1, 1, 1.0);
    p.gradings = {Cplx(0.5, 0)};
    CHECK_THROWS_AS(cgp_invariant(cx, p), CriticalGradingError);
    MorseDiagram bad;
    bad.palette = {v, slot};
    bad.bottom = {{0, false}, {0, false}};
    SurgeryPresentation p2{bad, {1}, {Cplx(0.7, 0)},
                           Eigen::MatrixXd::Constant(1, 1, 1.0)};
    CHECK_THROWS_AS(cgp_invariant(cx, p2), Error);  // not cut open
    Eigen::MatrixXd asym(2, 2);
    asym << 1, 1, 0, 1;
    SurgeryPresentation p3{beaded_hopf(v, slot, true, 1, 1),
                           {1, 1},
                           {Cplx(0.7, 0), Cplx(0.7, 0)},
                           asym};
    CHECK_THROWS_AS(cgp_invariant(cx, p3), Error);  // duplicate slot / asym
  }
}

TEST_CASE("surgery invariant: handle slide across a Kirby circle") {
  Context cx(2, 1, 5);
  const Cplx a(0.3, 0), b(0.45, 0);
  const auto v = make_typical(cx, a, 0);
  const auto u2 = make_typical(cx, b, 0);
  const auto slot = make_typical(cx, Cplx(0.99, 0), 0);

  // Presentation A: cut strand V through a +1-framed Kirby circle U1
  // (grading -a mod 1) and, independently, through a plain circle colored
  // V(b, 0) with framing 0, unlinked from U1.
  MorseDiagram da;
  da.palette = {v, slot, u2};
  da.bottom = {{0, false}};
  add(da, Piece::CupL, 1, 1);
  add(da, Piece::TwistPos, 1);
  add(da, Piece::CrossPos, 0);
  add(da, Piece::CrossNeg, 1);
  add(da, Piece::CapR, 0);
  add(da, Piece::CupL, 1, 2);
  add(da, Piece::CrossPos, 0);
  add(da, Piece::CrossNeg, 1);
  add(da, Piece::CapR, 0);
  SurgeryPresentation pa{da, {1}, {Cplx(0.7, 0)},
                         Eigen::MatrixXd::Constant(1, 1, 1.0)};
  const Cplx na = cgp_invariant(cx, pa);

  // Blowing the Kirby circle down turns A into the positive Hopf link of
  // V(a,0) and V(b,0) with a -1 kink on the cut strand.
  const Cplx oracle = hopf_value_sl21(cx, a, 0, b, 0, true) /
                      twist_scalar(cx, weight_sl21(cx, a, 0));
  CHECK(close(na, oracle, 1e-9));

  // Presentation B: slide the plain circle over the Kirby circle (with the
  // reversed push-off).  The slid circle becomes a +1-framed meridian of
  // U1 with linking -1 and no longer meets V; the longitude condition now
  // gives U1 the grading b - a mod 1.
  MorseDiagram db;
  db.palette = {v, slot, u2};
  db.bottom = {{0, false}};
  add(db, Piece::CupL, 1, 1);
  add(db, Piece::TwistPos, 1);
  add(db, Piece::CrossPos, 0);
  add(db, Piece::CrossNeg, 1);
  add(db, Piece::CupL, 0, 2);
  add(db, Piece::TwistPos, 0);
  add(db, Piece::CrossPos, 1);
  add(db, Piece::CrossNeg, 0);
  add(db, Piece::CapR, 1);
  add(db, Piece::CapR, 0);
  SurgeryPresentation pb{db, {1}, {Cplx(0.15, 0)},
                         Eigen::MatrixXd::Constant(1, 1, 1.0)};
  const Cplx nb = cgp_invariant(cx, pb);
  CHECK(close(na, nb, 1e-8));
}
