// Self-check suite: ten numbered criteria covering the whole library, from
// the scalar layer up to the surgery invariant. Each criterion bundles a
// list of named checks with residuals and tolerances; the suite passes iff
// every check passes. Randomized checks draw from a seeded generator so
// reports are reproducible.

#ifndef RELMOD_VERIFY_HPP
#define RELMOD_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace relmod {

struct VerifyOptions {
  int m = 2;
  int n = 1;
  int ell = 5;
  unsigned seed = 20260815u;
  // When set, replaces the tolerance of every residual check (used to probe
  // that the suite actually measures something: 1e-30 must fail).
  std::optional<double> tol_override;
};

// One named measurement. For residual checks, pass iff residual <= tol.
// Boolean checks are encoded with residual 0 or 1 against tol 0.5.
struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyCriterion {
  int number = 0;
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest residual/tol ratio over the checks
  std::vector<VerifyCheck> checks;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCriterion> criteria;
  bool pass = false;
};

// Runs the ten criteria at the configured scale. Criteria that exercise the
// explicit sl(2|1) layer always run at (2,1); generality spot-checks add
// (3,1) and ell = 7 where stated. Throws Error (InvalidArgument) when the
// options violate the root-datum preconditions.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace relmod

#endif  // RELMOD_VERIFY_HPP
