// Command-line surface: certified metric values, Nelson spectra, error
// bounds with oracles, and the two comparison experiments.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 soundness violation (an oracle exceeded its bound).

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "liebound/bounds.hpp"
#include "liebound/experiments.hpp"
#include "liebound/lorentz.hpp"

using namespace liebound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitSoundness = 4;

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

// A word is a semicolon-separated list of coordinate vectors in the
// orthonormal algebra basis; the element is the product of exponentials.
std::vector<AlgebraElement> parse_word(const GroupPtr& grp,
                                       const std::string& s) {
  std::vector<AlgebraElement> word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    const std::vector<double> c = parse_list(tok);
    if (static_cast<int>(c.size()) != grp->algebra_dim)
      throw ValidationError("word: expected " +
                            std::to_string(grp->algebra_dim) +
                            " coordinates, got " + std::to_string(c.size()));
    RVec v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v(i) = c[i];
    word.push_back(from_coords(grp, v));
  }
  if (word.empty()) throw ValidationError("word: empty");
  return word;
}

std::string kind_label(MetricKind k) {
  switch (k) {
    case MetricKind::exact_closed_form: return "exact_closed_form";
    case MetricKind::log_upper_bound: return "log_upper_bound";
    case MetricKind::refined_upper_bound: return "refined_upper_bound";
  }
  return "?";
}

RepPtr rep_from_flags(const std::string& rep, double j, int m, int n,
                      int cutoff) {
  if (rep == "spin") return make_spin(j);
  if (rep == "flo") return make_flo(m);
  if (rep == "displacement") return make_displacement(m, cutoff);
  if (rep == "metaplectic") return make_metaplectic(m, cutoff);
  if (rep == "su11") return make_su11_sector(n, cutoff);
  throw ValidationError("unknown rep '" + rep + "'");
}

std::vector<double> range_grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double a = lo; a <= hi + 1e-12; a += step) g.push_back(a);
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"certified error bounds for unitary representations of Lie groups"};
  app.require_subcommand(1);
  // long-form flags only
  app.set_help_flag("--help", "print help");
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  // ------------------------------------------------------------------ metric
  auto* cm = app.add_subcommand("metric", "left-invariant metric between two elements");
  std::string m_group = "su2", m_gword, m_hword;
  int m_m = 1, m_segments = 8, m_iters = 12;
  std::uint64_t m_seed = 0;
  bool m_refine = false;
  cm->add_option("--group", m_group, "su2|so2m|sp2m|su11|lorentz|heisenberg");
  cm->add_option("--m", m_m, "size parameter for so2m/sp2m/heisenberg");
  cm->add_option("--g", m_gword, "word for g: coords;coords;...")->required();
  cm->add_option("--h", m_hword, "word for h")->required();
  cm->add_flag("--refine", m_refine, "force the path-refined upper bound");
  cm->add_option("--segments", m_segments, "refinement segments K");
  cm->add_option("--iters", m_iters, "refinement sweeps");
  cm->add_option("--seed", m_seed, "refinement seed");
  cm->set_help_flag("--help", "print help");
  cm->set_config("--config");

  // ------------------------------------------------------------------ nelson
  auto* cn = app.add_subcommand("nelson", "Nelson Laplacian spectrum as CSV");
  std::string n_rep = "spin", n_out;
  double n_j = 0.5;
  int n_m = 1, n_n = 0, n_cutoff = 64;
  bool n_closed = false;
  cn->add_option("--rep", n_rep, "spin|flo|displacement|metaplectic|su11");
  cn->add_option("--j", n_j, "spin j");
  cn->add_option("--m", n_m, "modes / size parameter");
  cn->add_option("--n", n_n, "su11 sector");
  cn->add_option("--cutoff", n_cutoff, "Fock cutoff per mode");
  cn->add_flag("--closed-form", n_closed, "use the analytic closed form");
  cn->add_option("--out", n_out, "CSV output path");
  cn->set_help_flag("--help", "print help");
  cn->set_config("--config");

  // ------------------------------------------------------------------- bound
  auto* cb = app.add_subcommand("bound", "state/channel/ECD bounds with oracles");
  std::string b_rep = "spin", b_gword, b_hword, b_psi, b_k = "nelson", b_out;
  double b_j = 0.5, b_energy = -1.0;
  int b_m = 1, b_n = 0, b_cutoff = 64, b_sweep = 0;
  std::uint64_t b_seed = 0;
  bool b_check = false;
  cb->add_option("--rep", b_rep, "spin|flo|displacement|metaplectic|su11");
  cb->add_option("--j", b_j, "spin j");
  cb->add_option("--m", b_m, "modes / size parameter");
  cb->add_option("--n", b_n, "su11 sector");
  cb->add_option("--cutoff", b_cutoff, "Fock cutoff per mode");
  cb->add_option("--g", b_gword, "word for g");
  cb->add_option("--h", b_hword, "word for h");
  cb->add_option("--psi", b_psi, "state file, one 're im' pair per line");
  cb->add_option("--K", b_k, "nelson|closed|improved reference operator");
  cb->add_option("--energy", b_energy, "ECD energy budget (enables the ECD bound)");
  cb->add_flag("--check", b_check, "compute exact oracles and slack");
  cb->add_option("--sweep", b_sweep, "run a random soundness sweep of this size");
  cb->add_option("--seed", b_seed, "sweep seed");
  cb->add_option("--out", b_out, "sweep CSV output path");
  cb->set_help_flag("--help", "print help");
  cb->set_config("--config");

  // -------------------------------------------------------------- so-compare
  auto* cs = app.add_subcommand("so-compare", "SO(2m) channel-bound comparison table");
  int s_m = 2;
  double s_amin = 0.05, s_amax = 2.0, s_astep = 0.05;
  std::string s_out = "so_compare.csv";
  cs->add_option("--m", s_m, "SO(2m) size parameter");
  cs->add_option("--a-min", s_amin, "grid start");
  cs->add_option("--a-max", s_amax, "grid end");
  cs->add_option("--a-step", s_astep, "grid step");
  cs->add_option("--out", s_out, "CSV output path");
  cs->set_help_flag("--help", "print help");
  cs->set_config("--config");

  // ------------------------------------------------------------------ trotter
  auto* ct = app.add_subcommand("trotter", "product-formula ECD bound comparison table");
  int t_m = 1, t_lmax = 1024, t_cutoff = 64;
  double t_t = 1.0, t_energy = 2.0;
  std::string t_x = "Omega", t_y = "Omega*sigma_x", t_out = "trotter_compare.csv";
  bool t_apply_omega = false;
  ct->add_option("--m", t_m, "modes");
  ct->add_option("--t", t_t, "evolution time");
  ct->add_option("--x", t_x, "generator X (Omega|Omega*sigma_x|sigma_x|sigma_z)");
  ct->add_option("--y", t_y, "generator Y");
  ct->add_option("--lmax", t_lmax, "largest step count (powers of two from 1)");
  ct->add_option("--energy", t_energy, "ECD energy budget");
  ct->add_option("--cutoff", t_cutoff, "Fock cutoff");
  ct->add_flag("--apply-omega", t_apply_omega,
               "treat X, Y as symmetric Hamiltonians with generators Omega X, Omega Y");
  ct->add_option("--out", t_out, "CSV output path");
  ct->set_help_flag("--help", "print help");
  ct->set_config("--config");

  // ------------------------------------------------------------------ lorentz
  auto* cl = app.add_subcommand("lorentz", "scalar-representation boost demo table");
  double l_mass = 1.0, l_sigma = 1.0, l_smin = 0.05, l_smax = 0.3, l_sstep = 0.05;
  std::string l_pbar = "0,0,0", l_out = "lorentz_demo.csv";
  cl->add_option("--mass", l_mass, "wavepacket mass");
  cl->add_option("--sigma", l_sigma, "wavepacket width");
  cl->add_option("--pbar", l_pbar, "mean momentum px,py,pz");
  cl->add_option("--s-min", l_smin, "boost grid start");
  cl->add_option("--s-max", l_smax, "boost grid end");
  cl->add_option("--s-step", l_sstep, "boost grid step");
  cl->add_option("--out", l_out, "CSV output path");
  cl->set_help_flag("--help", "print help");
  cl->set_config("--config");

  CLI11_PARSE(app, argc, argv);

  if (cm->parsed()) {
    const GroupPtr grp = make_group(m_group, m_m);
    const GroupElement g = element_from_word(parse_word(grp, m_gword));
    const GroupElement h = element_from_word(parse_word(grp, m_hword));
    MetricResult res;
    if (m_refine) {
      RefineOptions opt;
      opt.segments = m_segments;
      opt.iters = m_iters;
      opt.seed = m_seed;
      res = distance_refined(g, h, opt);
    } else {
      res = distance_best(g, h);
    }
    std::cout << "value=" << format_full(res.value) << "\n"
              << "kind=" << kind_label(res.kind) << "\n"
              << "certified_exact=" << (res.certified_exact ? 1 : 0) << "\n"
              << "local_regime=" << (res.local_regime ? 1 : 0) << "\n"
              << "segments=" << res.decomposition.size() << "\n";
    if (grp->id == GroupId::su2)
      std::cout << "value_frobenius=" << format_full(res.value / std::sqrt(2.0))
                << "\n";
    return kExitOk;
  }

  if (cn->parsed()) {
    const RepPtr rep = rep_from_flags(n_rep, n_j, n_m, n_n, n_cutoff);
    const EnergyOperator op =
        n_closed ? nelson_closed_form(rep) : nelson_basis_sum(rep);
    ResultTable t;
    t.columns = {"index", "eigenvalue"};
    if (is_diagonal_sparse(op.mat)) {
      std::vector<double> d(rep->dim);
      for (Eigen::Index i = 0; i < rep->dim; ++i)
        d[i] = op.mat.coeff(i, i).real();
      std::sort(d.begin(), d.end());
      for (Eigen::Index i = 0; i < rep->dim; ++i)
        t.rows.push_back({double(i), d[i]});
    } else {
      const auto [ev, vecs] = eig_hermitian(op.dense());
      for (Eigen::Index i = 0; i < ev.size(); ++i)
        t.rows.push_back({double(i), ev(i)});
    }
    t.provenance = "rep=" + rep->id() + " kind=" +
                   (n_closed ? std::string("closed_form") : "basis_sum");
    if (!n_out.empty()) write_csv(t, n_out); else write_csv(t, std::cout);
    return kExitOk;
  }

  if (cb->parsed()) {
    if (b_sweep > 0) {
      ExperimentConfig cfg;
      cfg.kind = ExperimentKind::bound_sweep;
      cfg.rep = (b_rep == "su11") ? "su11" : b_rep;
      cfg.j = b_j;
      cfg.m = b_m;
      cfg.n = b_n;
      cfg.cutoff = b_cutoff;
      cfg.seed = b_seed;
      cfg.sweep_samples = b_sweep;
      cfg.out = b_out;
      const SweepOutcome sw = run_bound_sweep(cfg);
      std::cout << "samples=" << cfg.sweep_samples
                << " violations=" << sw.violations << "\n";
      return sw.violations == 0 ? kExitOk : kExitSoundness;
    }
    if (b_gword.empty() || b_hword.empty())
      throw ValidationError("bound: --g and --h are required without --sweep");
    const RepPtr rep = rep_from_flags(b_rep, b_j, b_m, b_n, b_cutoff);
    const GroupPtr grp = rep->group;
    const auto gw = parse_word(grp, b_gword);
    const auto hw = parse_word(grp, b_hword);
    const GroupElement g = element_from_word(gw);
    const GroupElement h = element_from_word(hw);
    Vec psi;
    if (!b_psi.empty()) {
      psi = normalized(load_state_file(b_psi));
      if (psi.size() != rep->dim)
        throw ValidationError("bound: state dimension mismatch");
    } else {
      psi = Vec::Zero(rep->dim);
      psi(0) = 1.0;
    }
    EnergyOperator K = (b_k == "improved")  ? improved_k(rep)
                       : (b_k == "closed")  ? nelson_closed_form(rep)
                                            : nelson_basis_sum(rep);
    bool violated = false;
    auto report = [&](const char* label, const BoundReport& r) {
      std::cout << label << "=" << format_full(r.bound_value)
                << " metric=" << format_full(r.metric.value)
                << " kind=" << kind_label(r.metric.kind);
      if (r.oracle_value) {
        std::cout << " oracle=" << format_full(*r.oracle_value)
                  << " slack=" << format_full(*r.slack);
        if (*r.slack < -1e-8) violated = true;
      }
      std::cout << "\n";
    };

    BoundReport trace = channel_trace_bound(*rep, g, h, psi, K);
    if (b_check)
      trace = with_oracle(std::move(trace),
                          pure_trace_distance(*rep, gw, hw, psi));
    report("trace_bound", trace);

    try {
      BoundReport state = state_bound(*rep, g, h, psi, K);
      if (b_check)
        state = with_oracle(std::move(state),
                            exact_state_distance(*rep, gw, hw, psi));
      report("state_bound", state);
    } catch (const LocalRegimeViolation& e) {
      std::cout << "state_bound=unavailable (" << e.what() << ")\n";
    }

    if (b_energy > 0.0) {
      BoundReport ecd = ecd_bound(*rep, g, h, b_energy, K);
      if (b_check) {
        const Mat ug = rep->unitary(gw), uh = rep->unitary(hw);
        const EcdSupResult sup = ecd_pure_state_sup(ug, uh, K, b_energy);
        ecd = with_oracle(std::move(ecd), sup.value);
      }
      report("ecd_bound", ecd);
    }
    return violated ? kExitSoundness : kExitOk;
  }

  if (cs->parsed()) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::so_compare;
    cfg.m = s_m;
    cfg.grid = range_grid(s_amin, s_amax, s_astep);
    cfg.out = s_out;
    const ResultTable t = run_experiment(cfg);
    std::cout << "rows=" << t.rows.size() << " out=" << s_out << "\n";
    return kExitOk;
  }

  if (ct->parsed()) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::trotter_compare;
    cfg.m = t_m;
    cfg.t = t_t;
    cfg.gen_x = t_x;
    cfg.gen_y = t_y;
    cfg.energy = t_energy;
    cfg.cutoff = t_cutoff;
    cfg.apply_omega = t_apply_omega;
    for (int l = 1; l <= t_lmax; l *= 2) cfg.grid.push_back(l);
    cfg.out = t_out;
    const ResultTable t = run_experiment(cfg);
    std::cout << "rows=" << t.rows.size()
              << " ours_slope=" << format_full(fit_loglog_slope(t, "L", "ours"))
              << " becker_slope="
              << format_full(fit_loglog_slope(t, "L", "becker"))
              << " out=" << t_out << "\n";
    return kExitOk;
  }

  if (cl->parsed()) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::lorentz_demo;
    cfg.mass = l_mass;
    cfg.sigma = l_sigma;
    const auto pv = parse_list(l_pbar);
    if (pv.size() != 3) throw ValidationError("lorentz: --pbar needs px,py,pz");
    cfg.pbar = Eigen::Vector3d(pv[0], pv[1], pv[2]);
    cfg.grid = range_grid(l_smin, l_smax, l_sstep);
    cfg.out = l_out;
    const ResultTable t = run_experiment(cfg);
    std::cout << "rows=" << t.rows.size() << " out=" << l_out << "\n";
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CLI::Error& e) {
    std::cerr << "cli error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NonConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
