#include "liebound/reps.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace liebound {

namespace {

const cd I(0.0, 1.0);

SpMat to_sparse(const Mat& d, double drop = 0.0) {
  std::vector<Eigen::Triplet<cd>> trip;
  for (Eigen::Index j = 0; j < d.cols(); ++j)
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      if (std::abs(d(i, j)) > drop) trip.emplace_back(i, j, d(i, j));
  SpMat s(d.rows(), d.cols());
  s.setFromTriplets(trip.begin(), trip.end());
  return s;
}

SpMat single_mode_annihilator(int cutoff) {
  std::vector<Eigen::Triplet<cd>> trip;
  for (int k = 1; k < cutoff; ++k)
    trip.emplace_back(k - 1, k, std::sqrt(double(k)));
  SpMat a(cutoff, cutoff);
  a.setFromTriplets(trip.begin(), trip.end());
  return a;
}

SpMat embed_mode(const SpMat& op, int mode, int m, int cutoff) {
  SpMat out = (mode == 0) ? op : sparse_identity(cutoff);
  for (int k = 1; k < m; ++k)
    out = kron_sparse(out, (k == mode) ? op : sparse_identity(cutoff));
  return out;
}

}  // namespace

BosonOps boson_ops(int m, int cutoff) {
  if (cutoff < 4) throw ValidationError("boson_ops: cutoff must be >= 4");
  if (m < 1) throw ValidationError("boson_ops: m must be >= 1");
  BosonOps ops;
  ops.m = m;
  ops.cutoff = cutoff;
  ops.dim = 1;
  for (int k = 0; k < m; ++k) ops.dim *= cutoff;

  const SpMat a1 = single_mode_annihilator(cutoff);
  const SpMat ad1 = SpMat(a1.adjoint());
  const double r = 1.0 / std::sqrt(2.0);
  const SpMat q1 = r * (a1 + ad1);
  const SpMat p1 = SpMat(I * r * (ad1 - a1));
  const SpMat n1 = ad1 * a1;

  SpMat ntot(ops.dim, ops.dim);
  for (int k = 0; k < m; ++k) {
    ops.a.push_back(embed_mode(a1, k, m, cutoff));
    ops.ad.push_back(embed_mode(ad1, k, m, cutoff));
    ops.q.push_back(embed_mode(q1, k, m, cutoff));
    ops.p.push_back(embed_mode(p1, k, m, cutoff));
    ops.n.push_back(embed_mode(n1, k, m, cutoff));
    ntot = ntot + ops.n.back();
  }
  ops.number_total = ntot;
  SpMat h(ops.dim, ops.dim);
  for (int k = 0; k < m; ++k)
    h = h + SpMat(0.5 * (SpMat(ops.q[k] * ops.q[k]) + SpMat(ops.p[k] * ops.p[k])));
  ops.h = h;
  return ops;
}

Su11SectorOps su11_sector_ops(int n, int cutoff) {
  if (cutoff < 4) throw ValidationError("su11_sector_ops: cutoff must be >= 4");
  Su11SectorOps ops;
  ops.n = n;
  ops.cutoff = cutoff;
  const int an = std::abs(n);
  std::vector<Eigen::Triplet<cd>> t0, t1, t2, td;
  for (int k = 0; k < cutoff; ++k) {
    const double k0 = k + (an + 1) / 2.0;
    t0.emplace_back(k, k, k0);
    td.emplace_back(k, k, 2.0 * k0 * k0 + (1.0 - double(n) * n) / 4.0);
    if (k + 1 < cutoff) {
      // a1^† a2^† inside the sector: |k+|n|, k> -> |k+|n|+1, k+1>
      const double amp = std::sqrt(double(k + an + 1) * double(k + 1));
      t1.emplace_back(k + 1, k, 0.5 * amp);
      t1.emplace_back(k, k + 1, 0.5 * amp);
      t2.emplace_back(k + 1, k, cd(0.0, -0.5) * amp);
      t2.emplace_back(k, k + 1, cd(0.0, 0.5) * amp);
    }
  }
  ops.k0.resize(cutoff, cutoff);
  ops.k1.resize(cutoff, cutoff);
  ops.k2.resize(cutoff, cutoff);
  ops.delta.resize(cutoff, cutoff);
  ops.k0.setFromTriplets(t0.begin(), t0.end());
  ops.k1.setFromTriplets(t1.begin(), t1.end());
  ops.k2.setFromTriplets(t2.begin(), t2.end());
  ops.delta.setFromTriplets(td.begin(), td.end());
  return ops;
}

Mat displacement(int m, int cutoff, const RVec& xi) {
  if (xi.size() != 2 * m)
    throw std::invalid_argument("displacement: xi must have length 2m");
  const BosonOps ops = boson_ops(m, cutoff);
  const GroupPtr heis = make_group(GroupId::heisenberg, m);
  const RMat omega = heis->omega.real();
  // xi.Omega R = sum_b (Omega^T xi)_b R_b with R = (Q_1..Q_m, P_1..P_m)
  const RVec w = omega.transpose() * xi;
  SpMat gen(ops.dim, ops.dim);
  for (int k = 0; k < m; ++k) {
    if (w(k) != 0.0) gen = gen + SpMat(w(k) * ops.q[k]);
    if (w(m + k) != 0.0) gen = gen + SpMat(w(m + k) * ops.p[k]);
  }
  return expm(Mat(-I * Mat(gen)));
}

std::string Representation::id() const {
  std::ostringstream os;
  switch (kind) {
    case RepKind::spin: os << "spin(j=" << spin_j << ")"; break;
    case RepKind::flo: os << "flo(m=" << m << ")"; break;
    case RepKind::displacement:
      os << "displacement(m=" << m << ",cutoff=" << cutoff << ")"; break;
    case RepKind::metaplectic:
      os << "metaplectic(m=" << m << ",cutoff=" << cutoff << ")"; break;
    case RepKind::su11_sector:
      os << "su11_sector(n=" << sector_n << ",cutoff=" << cutoff << ")"; break;
    case RepKind::lorentz_scalar:
      os << "lorentz_scalar(mass=" << mass << ")"; break;
  }
  return os.str();
}

SpMat Representation::generator_sparse(const AlgebraElement& x) const {
  if (kind == RepKind::lorentz_scalar)
    throw NotMaterializable(
        "generator: lorentz_scalar exposes expectation functionals only");
  if (x.group->id != group->id || x.group->m != group->m)
    throw std::invalid_argument("generator: algebra element from wrong group");
  const RVec c = coords(x);
  SpMat out(dim, dim);
  for (int j = 0; j < c.size(); ++j)
    if (c(j) != 0.0) out = out + SpMat(c(j) * gens[j]);
  return out;
}

Mat Representation::generator(const AlgebraElement& x) const {
  return Mat(generator_sparse(x));
}

Mat Representation::unitary(const std::vector<AlgebraElement>& word) const {
  if (kind == RepKind::lorentz_scalar)
    throw NotMaterializable("unitary: lorentz_scalar is functional-only");
  if (word.empty()) throw std::invalid_argument("unitary: empty word");
  Mat u = Mat::Identity(dim, dim);
  for (const auto& y : word) u = u * expm(Mat(-I * Mat(generator_sparse(y))));
  return u;
}

RepPtr make_spin(double j) {
  const double twoj = 2.0 * j;
  if (j <= 0.0 || std::abs(twoj - std::round(twoj)) > 1e-12)
    throw ValidationError("make_spin: j must be a positive half-integer");
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::spin;
  rep->group = make_group(GroupId::su2);
  rep->spin_j = j;
  const int d = static_cast<int>(std::round(twoj)) + 1;
  rep->dim = d;
  rep->projective = false;  // proper representation of SU(2) itself
  rep->truncated = false;

  // ladder construction in the basis |m>, m = j .. -j
  Mat sz = Mat::Zero(d, d), sp = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) sz(i, i) = j - i;
  for (int i = 1; i < d; ++i) {
    const double mm = j - i;  // S+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>
    sp(i - 1, i) = std::sqrt(j * (j + 1) - mm * (mm + 1));
  }
  const Mat sm = sp.adjoint();
  const Mat sx = (sp + sm) / 2.0;
  const Mat sy = (sp - sm) / (2.0 * I);
  rep->gens = {to_sparse(sx), to_sparse(sy), to_sparse(sz)};
  return rep;
}

std::vector<Mat> majorana_operators(int m) {
  // Jordan-Wigner: c_{2k-1} = Z..Z X 1..1, c_{2k} = Z..Z Y 1..1
  Mat X(2, 2), Y(2, 2), Z(2, 2), Id = Mat::Identity(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, -I, I, 0;
  Z << 1, 0, 0, -1;
  std::vector<Mat> c(2 * m);
  for (int k = 0; k < m; ++k) {
    Mat odd(1, 1), even(1, 1);
    odd(0, 0) = 1.0;
    even(0, 0) = 1.0;
    for (int site = 0; site < m; ++site) {
      const Mat& fo = (site < k) ? Z : (site == k ? X : Id);
      const Mat& fe = (site < k) ? Z : (site == k ? Y : Id);
      odd = kron(odd, fo);
      even = kron(even, fe);
    }
    c[2 * k] = odd;
    c[2 * k + 1] = even;
  }
  return c;
}

RepPtr make_flo(int m) {
  if (m < 1) throw ValidationError("make_flo: m must be >= 1");
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::flo;
  rep->group = make_group(GroupId::so2m, m);
  rep->m = m;
  rep->dim = Eigen::Index(1) << m;
  rep->projective = true;  // Spin(2m) double cover of SO(2m)
  rep->truncated = false;

  const std::vector<Mat> c = majorana_operators(m);
  const Eigen::Index d = rep->dim;
  // A(X) = (i/4) c . X c
  for (const Mat& b : rep->group->basis) {
    Mat acc = Mat::Zero(d, d);
    for (int aa = 0; aa < 2 * m; ++aa)
      for (int bb = 0; bb < 2 * m; ++bb) {
        const cd w = b(aa, bb);
        if (std::abs(w) > 0.0) acc += (I / 4.0) * w * (c[aa] * c[bb]);
      }
    rep->gens.push_back(to_sparse(acc, 1e-15));
  }
  return rep;
}

RepPtr make_displacement(int m, int cutoff) {
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::displacement;
  rep->group = make_group(GroupId::heisenberg, m);
  rep->m = m;
  rep->cutoff = cutoff;
  const BosonOps ops = boson_ops(m, cutoff);
  rep->dim = ops.dim;
  // Proper representation of the Heisenberg group: the central direction is
  // represented faithfully, so there is no leftover phase ambiguity.
  rep->projective = false;
  rep->truncated = true;

  const RMat omega = rep->group->omega.real();
  for (int j = 0; j < 2 * m; ++j) {
    // A(e_j) = e_j . Omega R
    const RVec w = omega.transpose() * RVec::Unit(2 * m, j);
    SpMat gen(ops.dim, ops.dim);
    for (int k = 0; k < m; ++k) {
      if (w(k) != 0.0) gen = gen + SpMat(w(k) * ops.q[k]);
      if (w(m + k) != 0.0) gen = gen + SpMat(w(m + k) * ops.p[k]);
    }
    rep->gens.push_back(gen);
  }
  // central direction: U(exp(t e_c)) = e^{it} 1  =>  A(e_c) = -1
  rep->gens.push_back(SpMat(-1.0 * sparse_identity(ops.dim)));
  return rep;
}

RepPtr make_metaplectic(int m, int cutoff) {
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::metaplectic;
  rep->group = make_group(GroupId::sp2m, m);
  rep->m = m;
  rep->cutoff = cutoff;
  const BosonOps ops = boson_ops(m, cutoff);
  rep->dim = ops.dim;
  rep->projective = true;  // metaplectic double cover
  rep->truncated = true;

  const RMat omega = rep->group->omega.real();
  std::vector<const SpMat*> R(2 * m);
  for (int k = 0; k < m; ++k) {
    R[k] = &ops.q[k];
    R[m + k] = &ops.p[k];
  }
  // A(X) = -(1/2) R . (Omega X) R; this sign gives [A(X),A(Y)] = i A([X,Y])
  // with [Q,P] = i and the Omega above, and sends +Omega to the harmonic
  // oscillator.
  for (const Mat& b : rep->group->basis) {
    const RMat s = omega * b.real();  // symmetric for X in sp(2m)
    SpMat acc(ops.dim, ops.dim);
    for (int aa = 0; aa < 2 * m; ++aa)
      for (int bb = 0; bb < 2 * m; ++bb)
        if (std::abs(s(aa, bb)) > 1e-15)
          acc = acc + SpMat((-0.5 * s(aa, bb)) * SpMat((*R[aa]) * (*R[bb])));
    rep->gens.push_back(acc);
  }
  return rep;
}

RepPtr make_su11_sector(int n, int cutoff) {
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::su11_sector;
  rep->group = make_group(GroupId::su11);
  rep->sector_n = n;
  rep->cutoff = cutoff;
  const Su11SectorOps ops = su11_sector_ops(n, cutoff);
  rep->dim = cutoff;
  rep->projective = false;
  rep->truncated = true;
  rep->gens = {ops.k0, ops.k1, ops.k2};
  return rep;
}

RepPtr make_lorentz_scalar(double mass) {
  if (mass <= 0.0) throw ValidationError("make_lorentz_scalar: mass must be > 0");
  auto rep = std::make_shared<Representation>();
  rep->kind = RepKind::lorentz_scalar;
  rep->group = make_group(GroupId::lorentz);
  rep->mass = mass;
  rep->dim = 0;
  rep->projective = false;
  rep->truncated = false;
  return rep;
}

Eigen::Index fock_index(const std::vector<int>& occ, int cutoff) {
  Eigen::Index idx = 0;
  for (int nk : occ) {
    if (nk < 0 || nk >= cutoff)
      throw std::invalid_argument("fock_index: occupation out of range");
    idx = idx * cutoff + nk;
  }
  return idx;
}

std::vector<int> fock_occupations(Eigen::Index index, int m, int cutoff) {
  std::vector<int> occ(m);
  for (int k = m - 1; k >= 0; --k) {
    occ[k] = static_cast<int>(index % cutoff);
    index /= cutoff;
  }
  return occ;
}

std::vector<Eigen::Index> fock_indices_up_to(int m, int cutoff, int max_total) {
  std::vector<Eigen::Index> out;
  Eigen::Index dim = 1;
  for (int k = 0; k < m; ++k) dim *= cutoff;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto occ = fock_occupations(i, m, cutoff);
    int tot = 0;
    for (int nk : occ) tot += nk;
    if (tot <= max_total) out.push_back(i);
  }
  return out;
}

Vec fock_state(const Representation& rep, const std::vector<int>& occ) {
  Vec v = Vec::Zero(rep.dim);
  if (rep.kind == RepKind::su11_sector) {
    if (occ.size() != 1)
      throw std::invalid_argument("fock_state: sector states take one label");
    v(occ[0]) = 1.0;
    return v;
  }
  v(fock_index(occ, rep.cutoff)) = 1.0;
  return v;
}

Vec load_state_text(std::istream& in) {
  std::vector<cd> amps;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    double re, im;
    if (ls >> re >> im) amps.emplace_back(re, im);
  }
  if (amps.empty()) throw ValidationError("load_state_text: no amplitudes");
  Vec v(amps.size());
  for (size_t i = 0; i < amps.size(); ++i) v(i) = amps[i];
  return v;
}

Vec load_state_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("load_state_file: cannot open " + path);
  return load_state_text(f);
}

Vec normalized(const Vec& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return v / n;
}

}  // namespace liebound
