#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "liebound/groups.hpp"

namespace liebound {

enum class RepKind { spin, flo, displacement, metaplectic, su11_sector, lorentz_scalar };

// Truncated ladder machinery for one or more bosonic modes, everything kept
// sparse.  a|n> = sqrt(n)|n-1>, Q = (a + a^†)/sqrt(2), P = i(a^† - a)/sqrt(2),
// H = (1/2) sum_k (Q_k^2 + P_k^2).  Multi-mode Fock index is row-major with
// mode 0 most significant.
struct BosonOps {
  int m = 1;
  int cutoff = 0;
  Eigen::Index dim = 0;
  std::vector<SpMat> q, p, a, ad, n;  // one per mode, full dimension
  SpMat number_total;                 // sum_k a_k^† a_k
  SpMat h;                            // harmonic oscillator
};
BosonOps boson_ops(int m, int cutoff);

// su(1,1) generators restricted to the two-mode sector n1 - n2 = n, in the
// basis |k+|n|, k>, k = 0..cutoff-1, plus the sector Nelson Laplacian
// 2 K0^2 + (1-n^2)/4.
struct Su11SectorOps {
  int n = 0;
  int cutoff = 0;
  SpMat k0, k1, k2, delta;
};
Su11SectorOps su11_sector_ops(int n, int cutoff);

// Truncated displacement unitary exp(-i xi . Omega R) for m modes.
Mat displacement(int m, int cutoff, const RVec& xi);

// The 2m Jordan-Wigner Majorana operators on (C^2)^{tensor m}.
std::vector<Mat> majorana_operators(int m);

// A concrete representation: Hermitian generator matrices aligned with the
// group's orthonormal algebra basis.  The Lorentz scalar representation is
// functional-only (see lorentz.hpp) and never materializes operators.
class Representation {
 public:
  RepKind kind = RepKind::spin;
  GroupPtr group;
  Eigen::Index dim = 0;
  bool projective = false;
  bool truncated = false;
  double spin_j = 0.0;
  int m = 1;
  int cutoff = 0;
  int sector_n = 0;
  double mass = 0.0;
  std::vector<SpMat> gens;

  std::string id() const;

  // A(X), linear in X.  Throws NotMaterializable for lorentz_scalar and on
  // algebra mismatch.
  SpMat generator_sparse(const AlgebraElement& x) const;
  Mat generator(const AlgebraElement& x) const;

  // Product of exp(-i A(Y_j)) over the word, left to right.
  Mat unitary(const std::vector<AlgebraElement>& word) const;
};

using RepPtr = std::shared_ptr<const Representation>;

RepPtr make_spin(double j);
RepPtr make_flo(int m);
RepPtr make_displacement(int m, int cutoff);
RepPtr make_metaplectic(int m, int cutoff);
RepPtr make_su11_sector(int n, int cutoff);
RepPtr make_lorentz_scalar(double mass);

// Fock-space helpers for truncated representations.
Eigen::Index fock_index(const std::vector<int>& occupations, int cutoff);
std::vector<int> fock_occupations(Eigen::Index index, int m, int cutoff);
// Indices of all Fock states with total occupation <= max_total.
std::vector<Eigen::Index> fock_indices_up_to(int m, int cutoff, int max_total);
Vec fock_state(const Representation& rep, const std::vector<int>& occupations);

// Plain-text state format: one complex amplitude per line as "re im".
Vec load_state_text(std::istream& in);
Vec load_state_file(const std::string& path);
Vec normalized(const Vec& v);

}  // namespace liebound
