#pragma once

// Morse-word tangle calculus over the constructed weight modules.
//
// A framed, colored tangle diagram is presented as a generic Morse word: an
// ordered list of elementary slices composed bottom-to-top.  Each slice acts
// on a contiguous block of strands at a horizontal position and is the
// identity elsewhere.  Strand colors are drawn from a palette of modules;
// a strand is either the palette module itself (upward orientation) or its
// dual (downward orientation).  The elementary pieces are
//
//   CupL(c)   : 1 -> V (x) V*    left coevaluation (creates  V, V*)
//   CupR(c)   : 1 -> V* (x) V    right coevaluation (creates V*, V)
//   CapL      : V* (x) V -> 1    left evaluation  (consumes V*, V)
//   CapR      : V (x) V* -> 1    right evaluation (consumes V, V*), pivotal
//   CrossPos  : X (x) Y -> Y (x) X   braiding c_{X,Y} (positive crossing)
//   CrossNeg  : X (x) Y -> Y (x) X   inverse braiding c_{Y,X}^{-1}
//   TwistPos  : X -> X   ribbon twist theta_X (positive framing kink)
//   TwistNeg  : X -> X   inverse twist theta_X^{-1}
//
// Every elementary piece is a parity-even module map, so placing it in a
// tensor position with plain Kronecker identities is Koszul-correct; all
// super-signs live inside the braiding, flip, and duality matrices
// themselves.  There is no isotopy engine: diagrams are evaluated literally,
// and isotopy invariance (Reidemeister II/III, zig-zags, framed twist
// cancellation) is a checked property of the structure maps, not of the
// data structure.

#include <vector>

#include "braiding.hpp"
#include "invariants.hpp"
#include "repr_sl21.hpp"

namespace relmod {

enum class Piece {
  CupL,
  CupR,
  CapL,
  CapR,
  CrossPos,
  CrossNeg,
  TwistPos,
  TwistNeg,
};

// One strand of a horizontal boundary: a palette index plus an orientation
// flag (dual = true means the strand carries the dual module, i.e. points
// downward).
struct StrandColor {
  int color = 0;
  bool dual = false;
};

// One elementary slice.  `pos` counts strands from the left (0-based): cups
// insert their pair at that index, caps/crossings consume the strands at
// pos, pos+1, twists act on the strand at pos.  `color` is the palette index
// of the created pair and is required (>= 0) only for CupL/CupR; caps,
// crossings and twists act on whatever strands are present, which keeps the
// word language small and makes malformed words detectable purely from the
// running boundary.
struct Slice {
  Piece kind = Piece::CupL;
  int pos = 0;
  int color = -1;
};

struct MorseDiagram {
  std::vector<WeightModule> palette;
  std::vector<StrandColor> bottom;  // boundary below the first slice
  std::vector<Slice> slices;        // composed bottom-to-top
};

// Composes the slice operators bottom-to-top and returns the resulting
// module morphism from the tensor product of the bottom colors to the
// tensor product of the top colors (the empty boundary is the trivial
// module).  The evaluation keeps only the current state matrix and applies
// each piece by contracting the middle tensor factor, so intermediate
// boundaries may be much larger than either end.  Throws
// IllFormedDiagramError when a slice does not fit the running boundary
// (position out of range, cap on a mismatched pair) and
// Error(InvalidArgument) on palette index errors.
MorphismMatrix evaluate(const Context& cx, const MorseDiagram& d);

// Renormalized closed-diagram invariant F'.  The closed diagram is supplied
// cut open along one strand whose color is a simple module V: the word must
// begin and end on the single upward boundary [V].  The evaluation gives an
// endomorphism f = <f> Id_V; the invariant is d(V) <f> with d the modified
// dimension selected by cx.ideal (mdim_proj for Projective, mdim_pert for
// Perturbative).  Throws NotSimpleError when the endomorphism is not scalar
// (or the color has no unique highest-weight line), and the underlying
// modified dimension's errors (DegenerateWeightError, NotTypicalError,
// NotInAlcoveError) when the cut color is outside the chosen ideal.
Cplx f_prime(const Context& cx, const MorseDiagram& d);

struct WeightedDiagram {
  Cplx weight;
  MorseDiagram diagram;
};

// Multilinear expansion of Kirby colors.  Each listed palette slot is
// replaced, in canonical order (slots outer to inner, Kirby terms in their
// defining (k, c) order), by the typical summands of the Kirby color of the
// corresponding grading; the weight of an expanded diagram is the product
// of the summand coefficients.  Zero-coefficient summands (boundary weights
// with vanishing modified dimension) are dropped.  With no slots the result
// is the singleton {1, d}.  Throws CriticalGradingError on critical
// gradings and Error(InvalidArgument) on slot/grading mismatches.
std::vector<WeightedDiagram> expand_kirby(const Context& cx,
                                          const MorseDiagram& d,
                                          const std::vector<int>& kirby_slots,
                                          const std::vector<Cplx>& gradings);

// A surgery presentation of a closed 3-manifold containing a colored link:
// a Morse diagram cut open along a simple link strand, the palette slots
// carrying Kirby colors (one per surgery component, with the grading of
// that component), and the symmetric linking matrix of the surgery
// components (diagonal = framings, which the word must realize by twist
// beads).
struct SurgeryPresentation {
  MorseDiagram diagram;
  std::vector<int> kirby_slots;
  std::vector<Cplx> gradings;
  Eigen::MatrixXd linking;
};

// The renormalized surgery invariant
//   N = F'(expanded diagram) / (Delta_+^{b_+} Delta_-^{b_-}),
// where (b_+, b_-) is the signature of the linking matrix (zero eigenvalues
// contribute to neither count; no extra global factor for the nullity is
// applied).  Throws CriticalGradingError for critical gradings,
// DegenerateDeltaError if a required Delta normalization vanishes, and
// Error(InvalidArgument) for a non-symmetric linking matrix or slot
// mismatches.
Cplx cgp_invariant(const Context& cx, const SurgeryPresentation& p);

// --------------------------------------------------------------- builders

// Closed unknot with framing twists, evaluating to theta^framing qdim(V).
MorseDiagram closed_unknot_diagram(const WeightModule& v, int framing = 0);

// Unknot cut open along its single strand: a vertical strand with framing
// twist beads.  F' = theta_V^framing d(V).
MorseDiagram cut_unknot_diagram(const WeightModule& v, int framing = 0);

// Hopf link cut open along the first component: a vertical `cut` strand
// encircled once by a `circle`-colored unknot with the given framing.
// `positive` selects the positive Hopf link (linking number +1), the other
// choice its mirror.
MorseDiagram open_hopf_diagram(const WeightModule& cut,
                               const WeightModule& circle, bool positive,
                               int circle_framing = 0);

}  // namespace relmod
