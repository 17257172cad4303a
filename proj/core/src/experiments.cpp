#include "liebound/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace liebound {

namespace {

const cd I(0.0, 1.0);

void append_row(ResultTable& t, std::initializer_list<double> vals) {
  t.rows.emplace_back(vals);
}

std::string kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::so_compare: return "so_compare";
    case ExperimentKind::trotter_compare: return "trotter_compare";
    case ExperimentKind::bound_sweep: return "bound_sweep";
    case ExperimentKind::lorentz_demo: return "lorentz_demo";
  }
  return "?";
}

}  // namespace

int ResultTable::column(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("ResultTable: no column " + name);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.grid.empty() && cfg.kind != ExperimentKind::bound_sweep)
    throw ValidationError("config: grid must be nonempty");
  for (size_t i = 1; i < cfg.grid.size(); ++i)
    if (cfg.grid[i] <= cfg.grid[i - 1])
      throw ValidationError("config: grid must be strictly increasing");
  if (cfg.kind == ExperimentKind::trotter_compare) {
    for (double l : cfg.grid)
      if (l < 1.0 || std::abs(l - std::round(l)) > 1e-12)
        throw ValidationError("config: trotter steps must be positive integers");
    if (cfg.cutoff < 16)
      throw ValidationError("config: cutoff must be >= 16 for bosonic runs");
  }
  if (cfg.kind == ExperimentKind::bound_sweep) {
    if (cfg.sweep_samples < 1)
      throw ValidationError("config: sweep_samples must be >= 1");
    if ((cfg.rep == "metaplectic" || cfg.rep == "displacement") &&
        cfg.cutoff < 16)
      throw ValidationError("config: cutoff must be >= 16 for bosonic runs");
  }
  if (cfg.m < 1) throw ValidationError("config: m must be >= 1");
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << kind_name(cfg.kind) << '|' << cfg.m << '|' << cfg.j << '|' << cfg.n
     << '|' << cfg.mass << '|' << cfg.sigma << '|' << cfg.pbar.transpose()
     << '|' << cfg.t << '|' << cfg.gen_x << '|' << cfg.gen_y << '|'
     << cfg.apply_omega << '|' << cfg.energy << '|' << cfg.cutoff << '|'
     << cfg.seed << '|' << cfg.rep << '|' << cfg.sweep_samples;
  for (double g : cfg.grid) os << ',' << format_full(g);
  const std::string s = os.str();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const ResultTable& table, std::ostream& os) {
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  if (!table.provenance.empty()) os << "# " << table.provenance << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_full(row[i]);
    os << '\n';
  }
}

void write_csv(const ResultTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("write_csv: cannot open " + path);
  write_csv(table, f);
}

AlgebraElement named_sp2_generator(const GroupPtr& sp, const std::string& name) {
  if (sp->id != GroupId::sp2m || sp->m != 1)
    throw ValidationError("named generators are defined for sp(2) only");
  Mat omega(2, 2), sx(2, 2), sz(2, 2);
  omega << 0, 1, -1, 0;
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  Mat mat;
  if (name == "Omega") mat = omega;
  else if (name == "Omega*sigma_x") mat = omega * sx;
  else if (name == "sigma_x") mat = sx;
  else if (name == "sigma_z") mat = sz;
  else throw ValidationError("unknown generator name '" + name + "'");
  AlgebraElement x{sp, mat};
  const Membership mem = is_member(x);
  if (!mem.ok)
    throw ValidationError("generator '" + name + "' is not in sp(2)");
  return x;
}

double oszmaniec_bound(int m, const GroupElement& g, const GroupElement& h) {
  const Membership mg = is_member(g), mh = is_member(h);
  if (!mg.ok || !mh.ok)
    throw std::invalid_argument("oszmaniec_bound: inputs must be in SO(2m)");
  return 2.0 * m * norm_operator(g.mat - h.mat);
}

double our_so_bound(int m, const GroupElement& g, const GroupElement& h) {
  const double pref = std::sqrt(m * (2.0 * m - 1.0) / 2.0);
  try {
    const GroupElement delta = group_mul(group_inv(g), h);
    return pref * norm_frobenius(logm_principal(delta.mat));
  } catch (const NumericalError&) {
    return std::numbers::pi / (2.0 * std::sqrt(2.0)) *
           std::sqrt(m * (2.0 * m - 1.0)) * norm_frobenius(g.mat - h.mat);
  }
}

TrotterWords trotter_word(double t, int steps, const AlgebraElement& x,
                          const AlgebraElement& y) {
  if (steps < 1) throw ValidationError("trotter_word: steps must be >= 1");
  TrotterWords out;
  const GroupPtr grp = x.group;
  AlgebraElement target{grp, -t * (x.mat + y.mat)};
  out.g_word = {target};
  const AlgebraElement leg_x{grp, -t / steps * x.mat};
  const AlgebraElement leg_y{grp, -t / steps * y.mat};
  out.h_word.reserve(2 * steps);
  for (int l = 0; l < steps; ++l) {
    out.h_word.push_back(leg_x);
    out.h_word.push_back(leg_y);
  }
  out.g = group_exp(target);
  // (e^{-tX/L} e^{-tY/L})^L via a matrix power of the two-factor block
  const GroupElement block = group_mul(group_exp(leg_x), group_exp(leg_y));
  GroupElement acc = group_identity(grp);
  GroupElement base = block;
  int e = steps;
  while (e > 0) {
    if (e & 1) acc = group_mul(acc, base);
    base = group_mul(base, base);
    e >>= 1;
  }
  out.h = acc;
  return out;
}

double becker_bound(const GroupElement& g, const GroupElement& h, int m,
                    double energy) {
  const GroupElement delta = group_mul(group_inv(g), h);
  const double ninf = norm_operator(delta.mat);
  const double ndef = norm_frobenius(delta.mat -
                                     Mat::Identity(delta.mat.rows(),
                                                   delta.mat.cols()));
  const double pref =
      2.0 * std::sqrt((std::sqrt(6.0) + std::sqrt(10.0) +
                       5.0 * std::sqrt(2.0) * m) *
                      (energy + 1.0));
  const double mid = std::sqrt(std::numbers::pi / (ninf + 1.0)) +
                     std::sqrt(2.0 * ninf);
  return pref * mid * std::sqrt(ndef);
}

double our_symplectic_bound(const GroupElement& g, const GroupElement& h, int m,
                            double energy) {
  const GroupElement delta = group_mul(group_inv(g), h);
  const double ninf = norm_operator(delta.mat);
  const double ndef = norm_frobenius(delta.mat -
                                     Mat::Identity(delta.mat.rows(),
                                                   delta.mat.cols()));
  const double pref = 2.0 * std::sqrt(energy + 3.0 * m / 8.0);
  const double mid = std::numbers::pi / (ninf + 1.0) + 2.0 * ninf;
  return pref * mid * ndef;
}

double our_symplectic_ecd_bound(const GroupElement& g, const GroupElement& h,
                                int m, double energy) {
  return 2.0 * std::sqrt(energy + 3.0 * m / 8.0) * distance_best(g, h).value;
}

double fit_loglog_slope(const ResultTable& table, const std::string& x_col,
                        const std::string& y_col) {
  if (table.rows.size() < 4)
    throw std::invalid_argument("fit_loglog_slope: need at least 4 rows");
  const int xi = table.column(x_col);
  const int yi = table.column(y_col);
  const size_t start = table.rows.size() / 2;  // asymptotic half
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = 0;
  for (size_t r = start; r < table.rows.size(); ++r) {
    const double x = table.rows[r][xi];
    const double y = table.rows[r][yi];
    if (x <= 0.0 || y <= 0.0)
      throw std::invalid_argument("fit_loglog_slope: nonpositive data");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

namespace {

ResultTable run_so_compare(const ExperimentConfig& cfg) {
  const GroupPtr so = make_group(GroupId::so2m, cfg.m);
  const AlgebraElement b21 = so_generator(so, 2, 1);
  const AlgebraElement b31 = so_generator(so, 3, 1);
  const GroupElement g = group_exp(b21);
  ResultTable t;
  t.columns = {"a", "ours", "oszmaniec"};
  for (double a : cfg.grid) {
    const GroupElement h = group_exp({so, b21.mat + a * b31.mat});
    append_row(t, {a, our_so_bound(cfg.m, g, h), oszmaniec_bound(cfg.m, g, h)});
  }
  return t;
}

ResultTable run_trotter_compare(const ExperimentConfig& cfg) {
  const GroupPtr sp = make_group(GroupId::sp2m, cfg.m);
  AlgebraElement x = named_sp2_generator(sp, cfg.gen_x);
  AlgebraElement y = named_sp2_generator(sp, cfg.gen_y);
  if (cfg.apply_omega) {
    // alternative reading: the named matrices are symmetric Hamiltonian
    // matrices and Omega X, Omega Y are the group generators
    x = AlgebraElement{sp, sp->omega * x.mat};
    y = AlgebraElement{sp, sp->omega * y.mat};
    const Membership mx = is_member(x), my = is_member(y);
    if (!mx.ok || !my.ok)
      throw ValidationError(
          "trotter: omega-applied generators leave sp(2m); this reading does "
          "not define a symplectic product formula for the given X, Y");
  }
  ResultTable t;
  t.columns = {"L", "ours", "becker"};
  for (double ld : cfg.grid) {
    const int l = static_cast<int>(std::llround(ld));
    const TrotterWords w = trotter_word(cfg.t, l, x, y);
    append_row(t, {double(l), our_symplectic_bound(w.g, w.h, cfg.m, cfg.energy),
                   becker_bound(w.g, w.h, cfg.m, cfg.energy)});
  }
  return t;
}

ResultTable run_lorentz_demo(const ExperimentConfig& cfg) {
  Wavepacket wp{cfg.mass, cfg.pbar, cfg.sigma};
  const GroupPtr lor = make_group(GroupId::lorentz);
  const GroupElement id = group_identity(lor);
  const AlgebraElement k1{lor, lor->basis[3]};  // boost direction
  QuadratureConfig quad;
  const double expectation = lorentz_nelson_expectation(wp, quad);
  ResultTable t;
  t.columns = {"s", "expectation", "bound", "exact"};
  for (double s : cfg.grid) {
    const GroupElement lam = group_exp({lor, s * k1.mat});
    const double bound =
        std::sqrt(std::max(0.0, expectation)) *
        algebra_norm(group_log(group_mul(group_inv(id), lam)));
    const double exact = lorentz_exact_distance(wp, lam, id, quad);
    append_row(t, {s, expectation, bound, exact});
  }
  return t;
}

struct SweepRep {
  RepPtr rep;
  double word_scale = 0.4;
  int state_support = 0;  // 0 = full support
};

SweepRep sweep_target(const ExperimentConfig& cfg) {
  SweepRep out;
  if (cfg.rep == "spin") {
    out.rep = make_spin(cfg.j);
    out.word_scale = 0.8;
  } else if (cfg.rep == "flo") {
    out.rep = make_flo(cfg.m);
    out.word_scale = 0.25;  // keep the local regime for the projective rep
  } else if (cfg.rep == "displacement") {
    out.rep = make_displacement(cfg.m, cfg.cutoff);
    out.word_scale = 0.5;
    out.state_support = cfg.cutoff / 4;
  } else if (cfg.rep == "metaplectic") {
    out.rep = make_metaplectic(cfg.m, cfg.cutoff);
    out.word_scale = 0.2;
    out.state_support = cfg.cutoff / 8;
  } else if (cfg.rep == "su11") {
    out.rep = make_su11_sector(cfg.n, cfg.cutoff);
    out.word_scale = 0.25;
    out.state_support = cfg.cutoff / 8;
  } else {
    throw ValidationError("bound_sweep: unknown rep '" + cfg.rep + "'");
  }
  return out;
}

std::vector<AlgebraElement> random_word(const GroupPtr& grp, double scale,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nf(1, 3);
  std::vector<AlgebraElement> w;
  const int n = nf(rng);
  for (int k = 0; k < n; ++k)
    w.push_back(random_algebra_element(grp, scale / n, rng));
  return w;
}

Vec random_state(Eigen::Index dim, int support, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v = Vec::Zero(dim);
  const Eigen::Index lim = (support > 0) ? std::min<Eigen::Index>(support, dim)
                                         : dim;
  for (Eigen::Index i = 0; i < lim; ++i) v(i) = cd(gauss(rng), gauss(rng));
  return normalized(v);
}

SweepOutcome run_bound_sweep_impl(const ExperimentConfig& cfg) {
  const SweepRep target = sweep_target(cfg);
  const RepPtr rep = target.rep;
  const EnergyOperator delta = nelson_closed_form(rep);
  std::mt19937_64 rng(cfg.seed);

  SweepOutcome out;
  out.table.columns = {"sample",       "metric",       "state_bound",
                       "state_oracle", "trace_bound",  "trace_oracle",
                       "state_slack",  "trace_slack"};
  const double tol = 1e-7;
  for (int s = 0; s < cfg.sweep_samples; ++s) {
    const auto gw = random_word(rep->group, target.word_scale, rng);
    const auto hw = random_word(rep->group, target.word_scale, rng);
    const GroupElement g = element_from_word(gw);
    const GroupElement h = element_from_word(hw);
    const Vec psi = random_state(rep->dim, target.state_support, rng);

    const BoundReport trace = channel_trace_bound(*rep, g, h, psi, delta);
    const double trace_oracle = pure_trace_distance(*rep, gw, hw, psi);

    double sb = -1.0, so = -1.0, sslack = 0.0;
    const bool state_ok = !rep->projective || trace.metric.local_regime;
    if (state_ok) {
      const BoundReport sr = state_bound(*rep, g, h, psi, delta);
      sb = sr.bound_value;
      so = exact_state_distance(*rep, gw, hw, psi);
      sslack = sb - so;
      if (sslack < -tol) ++out.violations;
    }
    const double tslack = trace.bound_value - trace_oracle;
    if (tslack < -tol) ++out.violations;
    append_row(out.table, {double(s), trace.metric.value, sb, so,
                           trace.bound_value, trace_oracle, sslack, tslack});
  }
  return out;
}

}  // namespace

SweepOutcome run_bound_sweep(const ExperimentConfig& cfg) {
  validate(cfg);
  SweepOutcome out = run_bound_sweep_impl(cfg);
  std::ostringstream prov;
  prov << "config=" << std::hex << config_hash(cfg) << std::dec
       << " seed=" << cfg.seed << " rep=" << cfg.rep;
  out.table.provenance = prov.str();
  if (!cfg.out.empty()) write_csv(out.table, cfg.out);
  return out;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ResultTable t;
  switch (cfg.kind) {
    case ExperimentKind::so_compare: t = run_so_compare(cfg); break;
    case ExperimentKind::trotter_compare: t = run_trotter_compare(cfg); break;
    case ExperimentKind::lorentz_demo: t = run_lorentz_demo(cfg); break;
    case ExperimentKind::bound_sweep: return run_bound_sweep(cfg).table;
  }
  std::ostringstream prov;
  prov << "config=" << std::hex << config_hash(cfg) << std::dec
       << " seed=" << cfg.seed;
  t.provenance = prov.str();
  if (!cfg.out.empty()) write_csv(t, cfg.out);
  return t;
}

}  // namespace liebound
