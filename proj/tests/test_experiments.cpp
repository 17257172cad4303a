#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "liebound/experiments.hpp"

using namespace liebound;

namespace {

std::string render_csv(const ResultTable& t) {
  std::ostringstream os;
  write_csv(t, os);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

ExperimentConfig fig1_config() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::so_compare;
  cfg.m = 2;
  for (int i = 1; i <= 40; ++i) cfg.grid.push_back(0.05 * i);
  return cfg;
}

ExperimentConfig fig2_config() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::trotter_compare;
  cfg.m = 1;
  cfg.t = 1.0;
  cfg.gen_x = "Omega";
  cfg.gen_y = "Omega*sigma_x";
  cfg.energy = 2.0;
  cfg.cutoff = 64;
  for (int l = 1; l <= 1024; l *= 2) cfg.grid.push_back(l);
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig cfg = fig1_config();
  cfg.grid.clear();
  CHECK_THROWS_AS(validate(cfg), ValidationError);

  cfg = fig1_config();
  cfg.grid[5] = cfg.grid[4];
  CHECK_THROWS_AS(validate(cfg), ValidationError);

  cfg = fig2_config();
  cfg.grid[1] = 2.5;
  CHECK_THROWS_AS(validate(cfg), ValidationError);

  cfg = fig2_config();
  cfg.cutoff = 8;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
}

TEST_CASE("oszmaniec bound basics") {
  const auto so4 = make_group(GroupId::so2m, 2);
  const auto b21 = so_generator(so4, 2, 1);
  const auto g = group_exp(b21);
  CHECK(oszmaniec_bound(2, g, g) == doctest::Approx(0.0));

  // linear to first order in a small perturbation
  const auto b31 = so_generator(so4, 3, 1);
  const double e1 = 1e-3, e2 = 2e-3;
  const auto h1 = group_mul(g, group_exp({so4, e1 * b31.mat}));
  const auto h2 = group_mul(g, group_exp({so4, e2 * b31.mat}));
  const double v1 = oszmaniec_bound(2, g, h1);
  const double v2 = oszmaniec_bound(2, g, h2);
  CHECK(v1 > 0.0);
  CHECK(v2 / v1 == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("our so bound: log form and fallback") {
  const auto so4 = make_group(GroupId::so2m, 2);
  const auto id = group_identity(so4);
  CHECK(our_so_bound(2, id, id) == doctest::Approx(0.0));

  const auto b21 = so_generator(so4, 2, 1);
  const auto h = group_exp({so4, 0.4 * b21.mat});
  CHECK(our_so_bound(2, id, h) ==
        doctest::Approx(std::sqrt(3.0) * 0.4).epsilon(1e-10));

  // rotation by pi in both planes: the principal log fails, the Frobenius
  // fallback takes over
  Mat rot = Mat::Zero(4, 4);
  rot(0, 0) = rot(1, 1) = rot(2, 2) = rot(3, 3) = -1.0;
  const GroupElement anti{so4, rot};
  const double fallback = std::numbers::pi / (2.0 * std::sqrt(2.0)) *
                          std::sqrt(6.0) * norm_frobenius(id.mat - rot);
  CHECK(our_so_bound(2, id, anti) == doctest::Approx(fallback).epsilon(1e-12));
}

TEST_CASE("trotter words: degenerate and convergent cases") {
  const auto sp2 = make_group(GroupId::sp2m, 1);
  const auto zero = zero_element(sp2);
  const auto w0 = trotter_word(1.0, 4, zero, zero);
  CHECK((w0.g.mat - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK((w0.h.mat - Mat::Identity(2, 2)).norm() < 1e-14);

  const auto x = named_sp2_generator(sp2, "Omega");
  const auto y = named_sp2_generator(sp2, "Omega*sigma_x");
  double prev = 1e9;
  for (int l = 1; l <= 1024; l *= 2) {
    const auto w = trotter_word(1.0, l, x, y);
    const GroupElement delta = group_mul(group_inv(w.g), w.h);
    const double defect = (delta.mat - Mat::Identity(2, 2)).norm();
    CHECK(defect < prev + 1e-12);
    prev = defect;
    // h equals the literal product for small step counts
    if (l <= 4) {
      Mat lit = Mat::Identity(2, 2);
      for (int rep = 0; rep < l; ++rep)
        lit = lit * expm(Mat(-x.mat / l)) * expm(Mat(-y.mat / l));
      CHECK((w.h.mat - lit).norm() < 1e-12);
    }
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("becker bound: zero at coincidence, sqrt scaling in the defect") {
  const auto sp2 = make_group(GroupId::sp2m, 1);
  const auto id = group_identity(sp2);
  CHECK(becker_bound(id, id, 1, 2.0) == doctest::Approx(0.0));

  const auto x = named_sp2_generator(sp2, "sigma_z");
  const double e1 = 1e-4;
  const auto h1 = group_exp({sp2, e1 * x.mat});
  const auto h2 = group_exp({sp2, 0.5 * e1 * x.mat});
  const double r = becker_bound(id, h2, 1, 2.0) / becker_bound(id, h1, 1, 2.0);
  CHECK(r == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.02));
}

TEST_CASE("our symplectic bound: zero at coincidence, linear in the defect") {
  const auto sp2 = make_group(GroupId::sp2m, 1);
  const auto id = group_identity(sp2);
  CHECK(our_symplectic_bound(id, id, 1, 2.0) == doctest::Approx(0.0));

  const auto x = named_sp2_generator(sp2, "sigma_z");
  const double e1 = 1e-4;
  const auto h1 = group_exp({sp2, e1 * x.mat});
  const auto h2 = group_exp({sp2, 0.5 * e1 * x.mat});
  const double r =
      our_symplectic_bound(id, h2, 1, 2.0) / our_symplectic_bound(id, h1, 1, 2.0);
  CHECK(r == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("loglog slope fits exact power laws") {
  ResultTable t;
  t.columns = {"x", "inv", "invsqrt"};
  for (int k = 1; k <= 16; ++k) {
    const double x = k;
    t.rows.push_back({x, 1.0 / x, 1.0 / std::sqrt(x)});
  }
  CHECK(fit_loglog_slope(t, "x", "inv") == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit_loglog_slope(t, "x", "invsqrt") ==
        doctest::Approx(-0.5).epsilon(1e-12));
  ResultTable small;
  small.columns = {"x", "y"};
  small.rows = {{1, 1}, {2, 1}};
  CHECK_THROWS_AS(fit_loglog_slope(small, "x", "y"), std::invalid_argument);
}

TEST_CASE("so-compare experiment: grid size, ordering, determinism, golden") {
  ExperimentConfig cfg = fig1_config();
  const ResultTable t = run_experiment(cfg);
  REQUIRE(t.rows.size() == 40);
  for (const auto& row : t.rows) {
    CHECK(row[1] < row[2]);  // ours < oszmaniec at every grid point
    CHECK(std::isfinite(row[1]));
    CHECK(std::isfinite(row[2]));
  }
  const ResultTable t2 = run_experiment(cfg);
  CHECK(render_csv(t) == render_csv(t2));

  const std::string golden = read_file(std::string(LIEBOUND_GOLDEN_DIR) +
                                       "/so_compare.csv");
  CHECK(render_csv(t) == golden);
}

TEST_CASE("trotter experiment: slopes and golden") {
  ExperimentConfig cfg = fig2_config();
  const ResultTable t = run_experiment(cfg);
  REQUIRE(t.rows.size() == 11);
  const double ours = fit_loglog_slope(t, "L", "ours");
  const double becker = fit_loglog_slope(t, "L", "becker");
  CHECK(ours > -1.1);
  CHECK(ours < -0.9);
  CHECK(becker > -0.6);
  CHECK(becker < -0.4);

  const ResultTable t2 = run_experiment(cfg);
  CHECK(render_csv(t) == render_csv(t2));
  const std::string golden = read_file(std::string(LIEBOUND_GOLDEN_DIR) +
                                       "/trotter_compare.csv");
  CHECK(render_csv(t) == golden);
}

TEST_CASE("trotter omega-applied reading is rejected for the figure config") {
  ExperimentConfig cfg = fig2_config();
  cfg.apply_omega = true;
  CHECK_THROWS_AS(run_experiment(cfg), ValidationError);
}

TEST_CASE("trotter sandwich: pure-state sup below the ECD bound at every L") {
  ExperimentConfig cfg = fig2_config();
  const auto sp2 = make_group(GroupId::sp2m, 1);
  const auto x = named_sp2_generator(sp2, cfg.gen_x);
  const auto y = named_sp2_generator(sp2, cfg.gen_y);
  const auto rep = make_metaplectic(1, cfg.cutoff);

  // energy measured against H^2 on both sides
  const auto ops = boson_ops(1, cfg.cutoff);
  EnergyOperator h2;
  h2.rep = rep;
  h2.mat = SpMat(ops.h * ops.h);
  h2.kind = EnergyKind::improved_k;
  h2.inner_product_tag = "sp2";
  h2.spectral_floor = 0.25;

  for (double ld : cfg.grid) {
    const int l = static_cast<int>(ld);
    const auto w = trotter_word(cfg.t, l, x, y);
    const Mat ug = rep->unitary(w.g_word);
    Mat uh = Mat::Identity(rep->dim, rep->dim);
    {
      const Mat block = rep->unitary({w.h_word[0], w.h_word[1]});
      Mat base = block;
      int e = l;
      while (e > 0) {
        if (e & 1) uh = uh * base;
        base = base * base;
        e >>= 1;
      }
    }
    EcdSupOptions opt;
    opt.restarts = 6;
    opt.iters = 250;
    opt.seed = 5;
    const auto sup = ecd_pure_state_sup(ug, uh, h2, cfg.energy, opt);
    const double sharp = our_symplectic_ecd_bound(w.g, w.h, 1, cfg.energy);
    const double reported = our_symplectic_bound(w.g, w.h, 1, cfg.energy);
    CHECK(sup.value <= sharp + 1e-6);
    CHECK(sharp <= reported + 1e-9);
  }
}

TEST_CASE("lorentz demo experiment") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::lorentz_demo;
  cfg.mass = 1.0;
  cfg.sigma = 1.0;
  cfg.grid = {0.1, 0.2, 0.3};
  const ResultTable t = run_experiment(cfg);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    CHECK(row[1] >= 0.0);           // expectation
    CHECK(row[3] <= row[2] + 1e-4); // exact <= bound
  }
}

TEST_CASE("bound sweep is deterministic and sound on a small run") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::bound_sweep;
  cfg.rep = "spin";
  cfg.j = 1.0;
  cfg.sweep_samples = 50;
  cfg.seed = 9;
  const SweepOutcome a = run_bound_sweep(cfg);
  const SweepOutcome b = run_bound_sweep(cfg);
  CHECK(a.violations == 0);
  CHECK(render_csv(a.table) == render_csv(b.table));
}

TEST_CASE("csv format: header first, provenance comment, 17 digits") {
  ResultTable t;
  t.columns = {"a", "b"};
  t.provenance = "config=abc seed=1";
  t.rows = {{1.0 / 3.0, 2.0}};
  const std::string s = render_csv(t);
  CHECK(s.rfind("a,b\n# config=abc seed=1\n", 0) == 0);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
}
