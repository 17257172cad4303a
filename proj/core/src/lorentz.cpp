#include "liebound/lorentz.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "liebound/metric.hpp"

namespace liebound {

namespace {

double onshell_energy(const Wavepacket& wp, const Eigen::Vector3d& p) {
  return std::sqrt(p.squaredNorm() + wp.mass * wp.mass);
}

}  // namespace

std::pair<RVec, RVec> gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  RMat jac = RMat::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(k / 2.0);
    jac(k - 1, k) = b;
    jac(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<RMat> es(jac);
  RVec nodes = es.eigenvalues();
  RVec weights(n);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    weights(i) = sqrt_pi * v0 * v0;
  }
  return {nodes, weights};
}

double hyperboloid_integral(
    const Wavepacket& wp, int nodes,
    const std::function<double(const Eigen::Vector3d&, const Eigen::Vector3d&,
                               double)>& g) {
  const auto [x, w] = gauss_hermite(nodes);
  const double scale = std::sqrt(2.0) * wp.sigma;
  const double jac = scale * scale * scale;
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      for (int k = 0; k < nodes; ++k) {
        const Eigen::Vector3d u(x(i), x(j), x(k));
        const Eigen::Vector3d p = wp.mean_momentum + scale * u;
        acc += w(i) * w(j) * w(k) * g(u, p, onshell_energy(wp, p));
      }
  return jac * acc;
}

double norm_constant(const Wavepacket& wp, int nodes) {
  const double n0 = hyperboloid_integral(
      wp, nodes,
      [](const Eigen::Vector3d&, const Eigen::Vector3d&, double p0) {
        return 1.0 / (2.0 * p0);
      });
  return 1.0 / std::sqrt(n0);
}

namespace {

// Integrand of <Delta> with e^{-|u|^2} stripped, in units of C^2:
//   (p0^2 + |p|^2) |grad psi|^2 - |p . grad psi|^2   over 2 p0,
// with the time-independent extension, grad psi = -(p - pbar)/(2 sigma^2) psi.
// |p| is the Euclidean 4-vector norm, so the integrand is nonnegative.
double nelson_integrand(const Wavepacket& wp, const Eigen::Vector3d&,
                        const Eigen::Vector3d& p, double p0) {
  const double s2 = wp.sigma * wp.sigma;
  const Eigen::Vector3d grad_pref = -(p - wp.mean_momentum) / (2.0 * s2);
  const double g2 = grad_pref.squaredNorm();
  const double pdot = p.dot(grad_pref);
  const double euclid4 = p0 * p0 + p.squaredNorm();
  return (euclid4 * g2 - pdot * pdot) / (2.0 * p0);
}

}  // namespace

double lorentz_nelson_expectation(const Wavepacket& wp,
                                  const QuadratureConfig& quad) {
  auto value_at = [&](int n) {
    const double c = norm_constant(wp, n);
    return c * c *
           hyperboloid_integral(wp, n,
                                [&](const Eigen::Vector3d& u,
                                    const Eigen::Vector3d& p, double p0) {
                                  return nelson_integrand(wp, u, p, p0);
                                });
  };
  const double v = value_at(quad.nodes);
  if (quad.check_convergence) {
    const double v2 = value_at(quad.nodes + 12);
    if (std::abs(v2 - v) > quad.refine_reltol * std::max(1.0, std::abs(v2)))
      throw NonConvergence(
          "lorentz_nelson_expectation: quadrature did not converge");
    return v2;
  }
  return v;
}

double lorentz_nelson_expectation_sum(const Wavepacket& wp, int nodes) {
  const GroupPtr lor = make_group(GroupId::lorentz);
  const double c = norm_constant(wp, nodes);
  double total = 0.0;
  for (const Mat& xb : lor->basis) {
    const Eigen::Matrix4d x = xb.real();
    total += hyperboloid_integral(
        wp, nodes,
        [&](const Eigen::Vector3d&, const Eigen::Vector3d& p, double p0) {
          const Eigen::Vector4d p4(p0, p(0), p(1), p(2));
          const Eigen::Vector4d v = x * p4;
          const Eigen::Vector3d grad_pref =
              -(p - wp.mean_momentum) / (2.0 * wp.sigma * wp.sigma);
          // X p is tangent to the hyperboloid, so only the spatial gradient
          // of the extension enters
          const double contr = v.tail<3>().dot(grad_pref);
          return contr * contr / (2.0 * p0);
        });
  }
  return c * c * total;
}

double lorentz_nelson_expectation_mc(const Wavepacket& wp, std::int64_t samples,
                                     std::uint64_t seed) {
  // e^{-|u|^2} is a normal law with variance 1/2 per axis; the pi^{3/2} and
  // jacobian factors cancel in the ratio against the norm integral computed
  // on the same sample set.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  const double scale = std::sqrt(2.0) * wp.sigma;
  double num = 0.0, den = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const Eigen::Vector3d u(gauss(rng), gauss(rng), gauss(rng));
    const Eigen::Vector3d p = wp.mean_momentum + scale * u;
    const double p0 = onshell_energy(wp, p);
    num += nelson_integrand(wp, u, p, p0);
    den += 1.0 / (2.0 * p0);
  }
  return num / den;
}

double lorentz_overlap(const Wavepacket& wp, const GroupElement& w, int nodes) {
  const Eigen::Matrix4d wm = w.mat.real();
  const double c = norm_constant(wp, nodes);
  const double s2 = wp.sigma * wp.sigma;
  const double ov = hyperboloid_integral(
      wp, nodes,
      [&](const Eigen::Vector3d& u, const Eigen::Vector3d& p, double p0) {
        const Eigen::Vector4d p4(p0, p(0), p(1), p(2));
        const Eigen::Vector4d q = wm * p4;
        const Eigen::Vector3d q3 = q.tail<3>();
        // psi(p) psi(Wp): psi(p) contributes e^{-|u|^2/2}, half of which is
        // returned here because the quadrature weight carries e^{-|u|^2}
        const double f_w =
            std::exp(0.5 * u.squaredNorm() -
                     (q3 - wp.mean_momentum).squaredNorm() / (4.0 * s2));
        return f_w / (2.0 * p0);
      });
  return c * c * ov;
}

double lorentz_exact_distance(const Wavepacket& wp, const GroupElement& lambda,
                              const GroupElement& lambda_tilde,
                              const QuadratureConfig& quad) {
  const GroupElement w = group_mul(group_inv(lambda_tilde), lambda);
  auto value_at = [&](int n) {
    const double ov = lorentz_overlap(wp, w, n);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * ov));
  };
  const double v = value_at(quad.nodes);
  if (quad.check_convergence) {
    const double v2 = value_at(quad.nodes + 12);
    if (std::abs(v2 - v) > quad.refine_reltol * std::max(1.0, std::abs(v2)))
      throw NonConvergence("lorentz_exact_distance: quadrature did not converge");
    return v2;
  }
  return v;
}

double lorentz_state_bound(const Wavepacket& wp, const GroupElement& lambda,
                           const GroupElement& lambda_tilde,
                           const QuadratureConfig& quad) {
  const double expectation = lorentz_nelson_expectation(wp, quad);
  const GroupElement w = group_mul(group_inv(lambda_tilde), lambda);
  const AlgebraElement logw = group_log(w);
  return std::sqrt(std::max(0.0, expectation)) * algebra_norm(logw);
}

}  // namespace liebound
