#pragma once

#include <vector>

#include "liebound/groups.hpp"

namespace liebound {

enum class MetricKind { exact_closed_form, log_upper_bound, refined_upper_bound };

// A metric value together with the exponential decomposition witnessing it:
// g^{-1}h = exp(Y_1) ... exp(Y_n) and value = sum ||Y_j||.  Every reported
// number is therefore independently checkable from the witness.
struct MetricResult {
  double value = 0.0;
  MetricKind kind = MetricKind::log_upper_bound;
  std::vector<AlgebraElement> decomposition;
  bool certified_exact = false;
  // Within the conservative radius (value < pi/2) where Hilbert-space-level
  // comparisons of projective representations are meaningful.
  bool local_regime = false;
};

// Principal log of a group element, landing in the Lie algebra (projected
// onto the orthonormal basis after a membership check).  Heisenberg
// elements are their own logarithm.
AlgebraElement group_log(const GroupElement& g, double member_tol = 1e-8);

// Exact distance where a closed form is proven: Ad-invariant inner products
// (su2, so2m) via the principal log, and the Heisenberg group for elements
// with vanishing central component.  The exactness certificate requires
// ||log||_op < pi; beyond that the value downgrades to an upper bound.
MetricResult distance_closed_form(const GroupElement& g, const GroupElement& h);

// ||log(g^{-1}h)||_g, always a valid upper bound on d(g,h).
MetricResult distance_log_bound(const GroupElement& g, const GroupElement& h);

struct RefineOptions {
  int segments = 8;   // K
  int iters = 12;     // round-robin sweeps over interior points
  uint64_t seed = 0;
  int nm_evals_per_dim = 25;  // Nelder-Mead budget per point per sweep
};

// Piecewise-exponential path shortening: minimizes the summed segment norms
// over K-1 interior points, initialized on the one-parameter curve (or a
// random two-piece decomposition when the principal log fails).  Always a
// valid upper bound; K = 1 reduces to the log bound.
MetricResult distance_refined(const GroupElement& g, const GroupElement& h,
                              const RefineOptions& opt = {});

// Dispatch: closed form when available, otherwise the refined bound with
// the default K = 8.  All bound evaluators consume this value.
MetricResult distance_best(const GroupElement& g, const GroupElement& h);

}  // namespace liebound
