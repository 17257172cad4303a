#pragma once

#include <optional>

#include "liebound/metric.hpp"
#include "liebound/nelson.hpp"

namespace liebound {

enum class Regime { global_regime, local_only };

struct BoundReport {
  double bound_value = 0.0;
  MetricResult metric;
  double energy_term = 0.0;  // sqrt(<psi,K psi>) or 2 sqrt(E)
  std::optional<double> oracle_value;
  std::optional<double> slack;  // bound - oracle
  Regime regime = Regime::global_regime;
};

BoundReport with_oracle(BoundReport report, double oracle);

// ||(U_g - U_h) psi|| <= sqrt(<psi, K psi>) d(g, h).  Projective
// representations are accepted only in the local regime of the metric;
// outside it the Hilbert-space comparison is phase-ambiguous and the call
// throws LocalRegimeViolation.
BoundReport state_bound(const Representation& rep, const GroupElement& g,
                        const GroupElement& h, const Vec& psi,
                        const EnergyOperator& energy_op);

// ||U(g_word) psi - U(h_word) psi|| from materialized unitaries.
double exact_state_distance(const Representation& rep,
                            const std::vector<AlgebraElement>& g_word,
                            const std::vector<AlgebraElement>& h_word,
                            const Vec& psi);

// ||U_g(rho_psi) - U_h(rho_psi)||_1 <= 2 sqrt(<psi,K psi>) d(g,h); valid for
// projective representations globally since the phases cancel.
BoundReport channel_trace_bound(const Representation& rep, const GroupElement& g,
                                const GroupElement& h, const Vec& psi,
                                const EnergyOperator& energy_op);

// 2 sqrt(1 - |<U_g psi, U_h psi>|^2), the trace distance of the two pure
// output states.
double pure_trace_distance(const Representation& rep,
                           const std::vector<AlgebraElement>& g_word,
                           const std::vector<AlgebraElement>& h_word,
                           const Vec& psi);

// Energy-constrained diamond bound 2 sqrt(E) d(g, h); requires E above the
// spectral floor of the reference operator.
BoundReport ecd_bound(const Representation& rep, const GroupElement& g,
                      const GroupElement& h, double energy_budget,
                      const EnergyOperator& energy_op);

// Distance from the origin to the convex hull of a point set in C.
double hull_distance_to_origin(const std::vector<cd>& points);

// Diamond distance of the unitary channels of U and V:
// 2 sqrt(1 - delta^2) with delta the distance from the origin to the convex
// hull of spec(U^† V).  Exact, and a valid ECD oracle when the reference
// operator is proportional to the identity.
double exact_diamond_unitary(const Mat& u, const Mat& v);

struct EcdSupOptions {
  int restarts = 12;
  int iters = 400;
  std::uint64_t seed = 1;
};

struct EcdSupResult {
  double value = 0.0;
  bool converged = false;
};

// Projected-gradient maximization of the pure-state trace distance
// 2 sqrt(1 - |<U_g psi, U_h psi>|^2) over unit psi with <psi,K psi> <= E.
// Any feasible iterate certifies a lower bound on the ECD distance.
EcdSupResult ecd_pure_state_sup(const Mat& u_g, const Mat& u_h,
                                const EnergyOperator& energy_op, double energy,
                                const EcdSupOptions& opt = {});

}  // namespace liebound
