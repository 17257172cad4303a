#include "liebound/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace liebound {

namespace {

constexpr double kLocalRadius = std::numbers::pi / 2.0;

GroupElement relative_element(const GroupElement& g, const GroupElement& h) {
  return group_mul(group_inv(g), h);
}

double witness_value(const std::vector<AlgebraElement>& word) {
  double v = 0.0;
  for (const auto& y : word) v += algebra_norm(y);
  return v;
}

// Minimize f over R^d with a warm start; plain Nelder-Mead with a fixed
// evaluation budget to keep the round-robin sweeps deterministic and cheap.
RVec nelder_mead(const std::function<double(const RVec&)>& f, RVec x0,
                 double step, int max_evals) {
  const int d = static_cast<int>(x0.size());
  std::vector<RVec> pts(d + 1, x0);
  std::vector<double> val(d + 1);
  for (int i = 1; i <= d; ++i) pts[i](i - 1) += step;
  int evals = 0;
  for (int i = 0; i <= d; ++i) { val[i] = f(pts[i]); ++evals; }

  while (evals < max_evals) {
    std::vector<int> order(d + 1);
    for (int i = 0; i <= d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return val[a] < val[b]; });
    std::vector<RVec> p2(d + 1);
    std::vector<double> v2(d + 1);
    for (int i = 0; i <= d; ++i) { p2[i] = pts[order[i]]; v2[i] = val[order[i]]; }
    pts = std::move(p2);
    val = std::move(v2);
    if (std::abs(val[d] - val[0]) < 1e-13 * (1.0 + std::abs(val[0]))) break;

    RVec centroid = RVec::Zero(d);
    for (int i = 0; i < d; ++i) centroid += pts[i];
    centroid /= d;

    const RVec xr = centroid + (centroid - pts[d]);
    const double fr = f(xr); ++evals;
    if (fr < val[0]) {
      const RVec xe = centroid + 2.0 * (centroid - pts[d]);
      const double fe = f(xe); ++evals;
      if (fe < fr) { pts[d] = xe; val[d] = fe; }
      else { pts[d] = xr; val[d] = fr; }
    } else if (fr < val[d - 1]) {
      pts[d] = xr; val[d] = fr;
    } else {
      const RVec xc = centroid + 0.5 * (pts[d] - centroid);
      const double fc = f(xc); ++evals;
      if (fc < val[d]) { pts[d] = xc; val[d] = fc; }
      else {
        for (int i = 1; i <= d; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          val[i] = f(pts[i]); ++evals;
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= d; ++i) if (val[i] < val[best]) best = i;
  return pts[best];
}

}  // namespace

AlgebraElement group_log(const GroupElement& g, double member_tol) {
  if (g.group->is_heisenberg()) return {g.group, g.mat};
  const Mat l = logm_principal(g.mat);
  AlgebraElement x{g.group, l};
  const Membership mem = is_member(x, member_tol);
  if (!mem.ok)
    throw InvalidLog("group_log: logarithm not in the Lie algebra, residual " +
                     std::to_string(mem.residual));
  // project away numerical dust orthogonal to the algebra
  return from_coords(g.group, coords(x));
}

MetricResult distance_closed_form(const GroupElement& g, const GroupElement& h) {
  const GroupSpec& spec = *g.group;
  if (spec.is_heisenberg()) {
    const int last = spec.matrix_dim - 1;
    if (std::abs(g.mat(last, 0)) > 1e-12 || std::abs(h.mat(last, 0)) > 1e-12)
      throw NotApplicable(
          "distance_closed_form: Heisenberg closed form needs zero central "
          "components");
    const GroupElement delta = relative_element(g, h);
    AlgebraElement w{g.group, delta.mat};
    MetricResult res;
    res.value = algebra_norm(w);
    res.kind = MetricKind::exact_closed_form;
    res.certified_exact = true;
    res.local_regime = res.value < kLocalRadius;
    res.decomposition = {std::move(w)};
    return res;
  }
  if (!spec.ad_invariant)
    throw NotApplicable(
        "distance_closed_form: no proven closed form for this group");

  const GroupElement delta = relative_element(g, h);
  AlgebraElement l = [&] {
    try {
      return group_log(delta);
    } catch (const BranchFailure& e) {
      throw NotApplicable(std::string("distance_closed_form: ") + e.what());
    }
  }();

  MetricResult res;
  res.value = algebra_norm(l);
  // The principal-branch geodesic is certified minimizing only inside the
  // operator-norm pi ball.
  if (norm_operator(l.mat) < std::numbers::pi) {
    res.kind = MetricKind::exact_closed_form;
    res.certified_exact = true;
  } else {
    res.kind = MetricKind::log_upper_bound;
    res.certified_exact = false;
  }
  res.local_regime = res.value < kLocalRadius;
  res.decomposition = {std::move(l)};
  return res;
}

MetricResult distance_log_bound(const GroupElement& g, const GroupElement& h) {
  const GroupElement delta = relative_element(g, h);
  AlgebraElement l = group_log(delta);
  MetricResult res;
  res.value = algebra_norm(l);
  res.kind = MetricKind::log_upper_bound;
  res.certified_exact = false;
  res.local_regime = res.value < kLocalRadius;
  res.decomposition = {std::move(l)};
  return res;
}

MetricResult distance_refined(const GroupElement& g, const GroupElement& h,
                              const RefineOptions& opt) {
  if (opt.segments < 1)
    throw std::invalid_argument("distance_refined: segments must be >= 1");
  const GroupPtr spec = g.group;
  const GroupElement delta = relative_element(g, h);
  const int K = opt.segments;

  if (K == 1) return distance_log_bound(g, h);

  // Feasible initial path: the one-parameter curve when the log exists,
  // otherwise a random two-piece decomposition.
  std::vector<RVec> z(K - 1);  // coordinates of interior points
  bool have_init = false;
  try {
    const RVec c = coords(group_log(delta));
    for (int j = 1; j < K; ++j) z[j - 1] = (double(j) / K) * c;
    have_init = true;
  } catch (const NumericalError&) {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 64 && !have_init; ++attempt) {
      const AlgebraElement v = random_algebra_element(spec, 0.5, rng);
      try {
        const GroupElement rest =
            group_mul(group_inv(group_exp(v)), delta);
        const RVec c2 = coords(group_log(rest));
        const RVec c1 = coords(v);
        // distribute interior points along the two legs
        for (int j = 1; j < K; ++j) {
          const double t = double(j) / K;
          if (t <= 0.5) {
            z[j - 1] = (2.0 * t) * c1;
          } else {
            // exp(c1) exp(s c2) is not exp of a single element in general;
            // re-log the product to stay in single-exponential coordinates
            const GroupElement p = group_mul(
                group_exp(v),
                group_exp(from_coords(spec, (2.0 * t - 1.0) * c2)));
            z[j - 1] = coords(group_log(p));
          }
        }
        have_init = true;
      } catch (const NumericalError&) {
        continue;
      }
    }
    if (!have_init)
      throw NoDecomposition(
          "distance_refined: no feasible initialization found");
  }

  auto point = [&](int j) -> GroupElement {
    // j in [0, K]; endpoints fixed
    if (j == 0) return group_identity(spec);
    if (j == K) return delta;
    return group_exp(from_coords(spec, z[j - 1]));
  };
  auto segment_norm = [&](const GroupElement& a,
                          const GroupElement& b) -> double {
    try {
      return algebra_norm(group_log(group_mul(group_inv(a), b)));
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  auto total = [&]() {
    double v = 0.0;
    for (int j = 1; j <= K; ++j) v += segment_norm(point(j - 1), point(j));
    return v;
  };

  const int d = spec->algebra_dim;
  double best = total();
  for (int sweep = 0; sweep < opt.iters; ++sweep) {
    for (int j = 1; j < K; ++j) {
      const GroupElement left = point(j - 1);
      const GroupElement right = point(j + 1);
      auto f = [&](const RVec& zz) {
        const GroupElement p = group_exp(from_coords(spec, zz));
        return segment_norm(left, p) + segment_norm(p, right);
      };
      const double step = std::max(1e-4, 0.05 * std::max(1.0, z[j - 1].norm()));
      z[j - 1] = nelder_mead(f, z[j - 1], step, opt.nm_evals_per_dim * d);
    }
    const double now = total();
    if (best - now < 1e-10 * (1.0 + best)) { best = now; break; }
    best = now;
  }

  // Recompute the witness from the final path.
  MetricResult res;
  res.kind = MetricKind::refined_upper_bound;
  res.certified_exact = false;
  for (int j = 1; j <= K; ++j) {
    const AlgebraElement y =
        group_log(group_mul(group_inv(point(j - 1)), point(j)));
    res.decomposition.push_back(y);
  }
  res.value = witness_value(res.decomposition);
  res.local_regime = res.value < kLocalRadius;
  return res;
}

MetricResult distance_best(const GroupElement& g, const GroupElement& h) {
  const GroupSpec& spec = *g.group;
  if (spec.ad_invariant || spec.is_heisenberg()) {
    try {
      return distance_closed_form(g, h);
    } catch (const NotApplicable&) {
      // fall through to the refined bound
    }
  }
  return distance_refined(g, h, RefineOptions{});
}

}  // namespace liebound
