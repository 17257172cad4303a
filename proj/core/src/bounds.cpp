#include "liebound/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

namespace liebound {

namespace {

Vec require_unit(const Vec& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-6)
    throw std::invalid_argument("bound: state must be normalized");
  return psi / n;
}

BoundReport assemble(MetricResult metric, double energy_term, Regime regime) {
  BoundReport rep;
  rep.bound_value = energy_term * metric.value;
  rep.metric = std::move(metric);
  rep.energy_term = energy_term;
  rep.regime = regime;
  return rep;
}

}  // namespace

BoundReport with_oracle(BoundReport report, double oracle) {
  report.oracle_value = oracle;
  report.slack = report.bound_value - oracle;
  return report;
}

BoundReport state_bound(const Representation& rep, const GroupElement& g,
                        const GroupElement& h, const Vec& psi,
                        const EnergyOperator& energy_op) {
  const Vec u = require_unit(psi);
  MetricResult metric = distance_best(g, h);
  if (rep.projective && !metric.local_regime)
    throw LocalRegimeViolation(
        "state_bound: projective representation outside the local regime; "
        "use channel_trace_bound");
  const double e = std::sqrt(std::max(0.0, energy_expectation(energy_op, u)));
  return assemble(std::move(metric), e,
                  rep.projective ? Regime::local_only : Regime::global_regime);
}

double exact_state_distance(const Representation& rep,
                            const std::vector<AlgebraElement>& g_word,
                            const std::vector<AlgebraElement>& h_word,
                            const Vec& psi) {
  const Vec u = require_unit(psi);
  const Mat ug = rep.unitary(g_word);
  const Mat uh = rep.unitary(h_word);
  return (ug * u - uh * u).norm();
}

BoundReport channel_trace_bound(const Representation& rep, const GroupElement& g,
                                const GroupElement& h, const Vec& psi,
                                const EnergyOperator& energy_op) {
  const Vec u = require_unit(psi);
  MetricResult metric = distance_best(g, h);
  const double e =
      2.0 * std::sqrt(std::max(0.0, energy_expectation(energy_op, u)));
  return assemble(std::move(metric), e, Regime::global_regime);
}

double pure_trace_distance(const Representation& rep,
                           const std::vector<AlgebraElement>& g_word,
                           const std::vector<AlgebraElement>& h_word,
                           const Vec& psi) {
  const Vec u = require_unit(psi);
  const Mat ug = rep.unitary(g_word);
  const Mat uh = rep.unitary(h_word);
  const cd ov = (ug * u).adjoint() * (uh * u);
  const double a = std::min(1.0, std::abs(ov));
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - a * a));
}

BoundReport ecd_bound(const Representation& rep, const GroupElement& g,
                      const GroupElement& h, double energy_budget,
                      const EnergyOperator& energy_op) {
  (void)rep;
  if (energy_budget <= energy_op.spectral_floor)
    throw InvalidEnergyBudget(
        "ecd_bound: energy budget must exceed the spectral floor " +
        std::to_string(energy_op.spectral_floor));
  MetricResult metric = distance_best(g, h);
  const double e = 2.0 * std::sqrt(energy_budget);
  return assemble(std::move(metric), e, Regime::global_regime);
}

// ---------------------------------------------------------------------------
// Diamond-distance oracle for unitary channels.

double hull_distance_to_origin(const std::vector<cd>& points) {
  if (points.empty())
    throw std::invalid_argument("hull_distance_to_origin: no points");
  using P = Eigen::Vector2d;
  std::vector<P> pts;
  pts.reserve(points.size());
  for (const cd& z : points) pts.emplace_back(z.real(), z.imag());
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P& a, const P& b) {
                          return (a - b).norm() < 1e-15;
                        }),
            pts.end());

  auto cross = [](const P& o, const P& a, const P& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  // Andrew monotone chain
  std::vector<P> hull;
  if (pts.size() <= 2) {
    hull = pts;
  } else {
    std::vector<P> lower, upper;
    for (const P& p : pts) {
      while (lower.size() >= 2 &&
             cross(lower[lower.size() - 2], lower.back(), p) <= 0.0)
        lower.pop_back();
      lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      while (upper.size() >= 2 &&
             cross(upper[upper.size() - 2], upper.back(), *it) <= 0.0)
        upper.pop_back();
      upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    hull = lower;
    hull.insert(hull.end(), upper.begin(), upper.end());
  }

  auto segment_distance = [](const P& a, const P& b) {
    const P ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return a.norm();
    const double t = std::clamp(-a.dot(ab) / len2, 0.0, 1.0);
    return (a + t * ab).norm();
  };

  if (hull.size() == 1) return hull[0].norm();
  if (hull.size() == 2) return segment_distance(hull[0], hull[1]);

  // inside test: origin is interior iff it is on the same side of all edges
  bool inside = true;
  for (size_t i = 0; i < hull.size(); ++i) {
    const P& a = hull[i];
    const P& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, P::Zero()) < 0.0) { inside = false; break; }
  }
  if (inside) return 0.0;

  double best = hull[0].norm();
  for (size_t i = 0; i < hull.size(); ++i)
    best = std::min(best,
                    segment_distance(hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

double exact_diamond_unitary(const Mat& u, const Mat& v) {
  if (!is_unitary(u) || !is_unitary(v))
    throw std::invalid_argument("exact_diamond_unitary: inputs must be unitary");
  const Mat w = u.adjoint() * v;
  Eigen::ComplexSchur<Mat> schur(w);
  if (schur.info() != Eigen::Success)
    throw NumericalError("exact_diamond_unitary: Schur failed");
  std::vector<cd> eigs(w.rows());
  for (Eigen::Index i = 0; i < w.rows(); ++i) eigs[i] = schur.matrixT()(i, i);
  const double delta = hull_distance_to_origin(eigs);
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - delta * delta));
}

// ---------------------------------------------------------------------------
// Energy-constrained pure-state optimizer.

namespace {

// Shrink toward the ground state of K until the energy constraint holds.
// c is assumed normalized on entry and stays normalized.
void project_energy(Vec& c, const RVec& lam, double energy) {
  auto energy_of = [&](const Vec& x) {
    double e = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      e += lam(i) * std::norm(x(i));
    return e;
  };
  if (energy_of(c) <= energy) return;
  const double lmin = lam.minCoeff();
  double lo = 0.0, hi = 1.0;
  auto damp = [&](double mu) {
    Vec d = c;
    for (Eigen::Index i = 0; i < d.size(); ++i)
      d(i) /= 1.0 + mu * std::max(0.0, lam(i) - lmin);
    d.normalize();
    return d;
  };
  while (energy_of(damp(hi)) > energy) {
    hi *= 2.0;
    if (hi > 1e12) { hi = 1e12; break; }
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (energy_of(damp(mid)) > energy) lo = mid; else hi = mid;
  }
  c = damp(hi);
}

}  // namespace

EcdSupResult ecd_pure_state_sup(const Mat& u_g, const Mat& u_h,
                                const EnergyOperator& energy_op, double energy,
                                const EcdSupOptions& opt) {
  if (energy <= energy_op.spectral_floor)
    throw InvalidEnergyBudget("ecd_pure_state_sup: infeasible energy budget");
  const Eigen::Index d = u_g.rows();
  const auto [lam, vbasis] = eig_hermitian(energy_op.dense());
  // work in the eigenbasis of K
  const Mat w = vbasis.adjoint() * (u_g.adjoint() * u_h) * vbasis;
  const Mat wh = w.adjoint();

  auto objective = [&](const Vec& c) {
    const cd z = c.adjoint() * (w * c);
    return std::norm(z);  // minimize |z|^2
  };

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 1.0;
  bool converged = false;

  for (int r = 0; r < opt.restarts; ++r) {
    Vec c(d);
    for (Eigen::Index i = 0; i < d; ++i) c(i) = cd(gauss(rng), gauss(rng));
    c.normalize();
    project_energy(c, lam, energy);

    double f = objective(c);
    double step = 0.25;
    int stall = 0;
    for (int it = 0; it < opt.iters; ++it) {
      const cd z = c.adjoint() * (w * c);
      const Vec grad = std::conj(z) * (w * c) + z * (wh * c);
      Vec trial = c - step * grad;
      trial.normalize();
      project_energy(trial, lam, energy);
      const double ft = objective(trial);
      if (ft < f - 1e-16) {
        c = trial;
        f = ft;
        step = std::min(0.5, step * 1.2);
        stall = 0;
      } else {
        step *= 0.5;
        if (step < 1e-12) { converged = true; break; }
        ++stall;
        if (stall > 60) break;
      }
    }
    best = std::min(best, f);
  }

  EcdSupResult out;
  const double a2 = std::clamp(best, 0.0, 1.0);
  out.value = 2.0 * std::sqrt(std::max(0.0, 1.0 - a2));
  out.converged = converged;
  return out;
}

}  // namespace liebound
