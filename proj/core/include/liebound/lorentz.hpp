#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "liebound/groups.hpp"

namespace liebound {

// Gaussian wavepacket on the positive-mass hyperboloid, psi(p) proportional
// to exp(-|p - pbar|^2 / (4 sigma^2)), normalized against the Lorentz
// invariant measure d^3p / (2 p0).
struct Wavepacket {
  double mass = 1.0;
  Eigen::Vector3d mean_momentum = Eigen::Vector3d::Zero();
  double sigma = 1.0;
};

struct QuadratureConfig {
  int nodes = 40;               // Gauss-Hermite nodes per axis
  double refine_reltol = 1e-4;  // agreement required between refinements
  bool check_convergence = true;
};

// Gauss-Hermite nodes and weights for weight e^{-x^2} (Golub-Welsch).
std::pair<RVec, RVec> gauss_hermite(int n);

// Integral over the mass hyperboloid of e^{-|u|^2} g(u, p, p0) in the
// Gaussian-adapted coordinates p = pbar + sqrt(2) sigma u (the e^{-|u|^2}
// factor is carried by the quadrature weights).
double hyperboloid_integral(
    const Wavepacket& wp, int nodes,
    const std::function<double(const Eigen::Vector3d& u,
                               const Eigen::Vector3d& p, double p0)>& g);

// Normalization constant C with  ∫ |C f|^2 d^3p/(2 p0) = 1.
double norm_constant(const Wavepacket& wp, int nodes);

// Expectation of the Nelson Laplacian,
//   <psi, Delta psi> = || |p| grad psi ||^2 - || eta(p, grad psi) ||^2,
// evaluated with the time-independent smooth extension of psi, for which
// the difference is manifestly nonnegative.  |p| is the Euclidean norm of
// the 4-vector.
double lorentz_nelson_expectation(const Wavepacket& wp,
                                  const QuadratureConfig& quad = {});

// Same expectation as the explicit sum over the six orthonormal generators
// (extension-independent oracle).
double lorentz_nelson_expectation_sum(const Wavepacket& wp, int nodes);

// Monte Carlo oracle on the same integrand, deterministic in the seed.
double lorentz_nelson_expectation_mc(const Wavepacket& wp, std::int64_t samples,
                                     std::uint64_t seed);

// Re <U_Lambda psi, U_LambdaTilde psi>; reduces to <psi, psi(W .)> with
// W = LambdaTilde^{-1} Lambda by invariance of the measure.
double lorentz_overlap(const Wavepacket& wp, const GroupElement& w, int nodes);

// || U_Lambda psi - U_LambdaTilde psi || by quadrature.
double lorentz_exact_distance(const Wavepacket& wp, const GroupElement& lambda,
                              const GroupElement& lambda_tilde,
                              const QuadratureConfig& quad = {});

// sqrt(<Delta>) * || log(LambdaTilde^{-1} Lambda) ||_{so(1,3)}; the algebra
// norm is 2^{-1/2} times the Frobenius norm.
double lorentz_state_bound(const Wavepacket& wp, const GroupElement& lambda,
                           const GroupElement& lambda_tilde,
                           const QuadratureConfig& quad = {});

}  // namespace liebound
