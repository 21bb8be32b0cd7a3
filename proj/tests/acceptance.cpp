// Acceptance battery: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

#include <unistd.h>

#include "gk/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kGroups = {"T2", "A1,U1", "A1,A1", "A2"};

gk::RunConfig config_for(const std::string& group, gk::Preset p) {
  std::map<std::string, std::string> keys{{"group", group}, {"preset", gk::preset_name(p)}};
  if (group == "A2") keys["field-d"] = "3";
  return gk::config_from_keys(keys);
}

const gk::RunContext& context(const std::string& group, gk::Preset p) {
  static std::map<std::pair<std::string, gk::Preset>, gk::RunContext> cache;
  auto it = cache.find({group, p});
  if (it == cache.end()) it = cache.emplace(std::make_pair(group, p), gk::make_context(config_for(group, p))).first;
  return it->second;
}

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

bool passes(const gk::CheckRecord& r) { return r.status == gk::Status::Pass; }

// Runs `check` on the listed groups and every preset; records the first failure.
void over_pairs(Outcome& o, const std::vector<std::string>& groups, const std::string& check) {
  for (const auto& g : groups) {
    for (auto p : gk::all_presets()) {
      const auto rec = gk::run_check(context(g, p), check);
      std::string detail;
      for (const auto& [k, v] : rec.witness) {
        if (k == "failure" || k == "error") detail = v;
      }
      o.require(passes(rec), check + " on " + g + "/" + gk::preset_name(p) + " " + detail);
    }
  }
}

void over_groups(Outcome& o, const std::vector<std::string>& groups, const std::string& check) {
  for (const auto& g : groups) {
    o.require(passes(gk::run_check(context(g, gk::Preset::Canonical), check)), check + " on " + g);
  }
}

std::string witness(const gk::CheckRecord& r, const std::string& key) {
  auto it = r.witness.find(key);
  return it == r.witness.end() ? "" : it->second;
}

Outcome c1() {
  Outcome o;
  over_groups(o, kGroups, "clifford.d-squared");
  return o;
}

Outcome c2() {
  Outcome o;
  over_groups(o, {"A1,U1", "A1,A1"}, "clifford.quantization");
  return o;
}

Outcome c3() {
  Outcome o;
  over_groups(o, kGroups, "clifford.spin");
  return o;
}

Outcome c4() {
  Outcome o;
  over_pairs(o, kGroups, "prop.dcl-spinor");
  // At least two induced non-canonical pairs per nonabelian group.
  for (const auto& g : {"A1,U1", "A1,A1", "A2"}) {
    int induced = 0;
    for (auto p : gk::all_presets()) {
      const auto& pair = context(g, p).pair;
      if (pair.induced && !pair.canonical) ++induced;
    }
    o.require(induced >= 2, std::string("fewer than two induced pairs on ") + g);
  }
  return o;
}

Outcome c5() {
  Outcome o;
  over_pairs(o, kGroups, "thm.degree");
  over_pairs(o, kGroups, "cor.calabi-yau");
  // Independent value for A1+U1: rho = alpha^sharp / 2, so kappa(rho, rho) = alpha(h)^2 / (4 kappa(h, h)),
  // with kappa(h, h) = -tr(ad_h ad_h) from the adjoint matrices.
  const auto& ctx = context("A1,U1", gk::Preset::Canonical);
  const auto& g = *ctx.g;
  const gk::Vec h = g.basis(g.cartan_indices()[0]);
  const gk::Matrix adh = g.ad(h);
  gk::Scalar tr;
  const gk::Matrix sq = adh * adh;
  for (std::size_t i = 0; i < sq.rows(); ++i) tr += sq.at(i, i);
  const std::size_t e = g.roots()[0].vector_index;
  const gk::Scalar alpha_h = adh.at(e, e);  // ad_h e_alpha = alpha(h) e_alpha
  const gk::Scalar expect = alpha_h * alpha_h / (gk::Scalar(4) * -tr);
  o.require(expect == gk::Scalar::rational(-1, 8), "independent kappa(rho, rho) is " + expect.str());
  const auto deg = gk::run_check(ctx, "thm.degree");
  o.require(witness(deg, "kappa_rho_rho") == expect.str(), "kappa(rho, rho) witness " + witness(deg, "kappa_rho_rho"));
  o.require(witness(deg, "degree_plus") == "1/4" && witness(deg, "degree_minus") == "1/4", "A1+U1 degree");
  const auto& tctx = context("T2", gk::Preset::Canonical);
  const auto tdeg = gk::run_check(tctx, "thm.degree");
  o.require(witness(tdeg, "degree_plus") == "0" && witness(tdeg, "degree_minus") == "0", "torus degree");
  const auto cy = gk::run_check(tctx, "cor.calabi-yau");
  o.require(witness(cy, "calabi_yau_plus") == "true" && witness(cy, "calabi_yau_minus") == "true", "torus flags");
  const auto cy2 = gk::run_check(ctx, "cor.calabi-yau");
  o.require(witness(cy2, "calabi_yau_plus") == "false", "A1+U1 flags");
  return o;
}

Outcome c6() {
  Outcome o;
  over_pairs(o, kGroups, "prop.hodge-grid");
  return o;
}

Outcome c7() {
  Outcome o;
  over_pairs(o, kGroups, "thm.graded-dcl");
  return o;
}

Outcome c8() {
  Outcome o;
  over_pairs(o, kGroups, "lemma.pure-spinor");
  return o;
}

Outcome c9() {
  Outcome o;
  over_pairs(o, kGroups, "cor.spectral-sequence");
  return o;
}

Outcome c10() {
  Outcome o;
  over_pairs(o, kGroups, "lemma.lagrangian");
  gk::GroupSpec a1 = gk::GroupSpec::parse("A1");
  a1.allow_odd = true;
  const gk::CartanFrame f(std::make_shared<const gk::LieAlgebra>(a1));
  o.require(gk::enumerate_bd(f).size() == 2, "A1 triple count");
  const auto a2 = gk::run_check(context("A2", gk::Preset::Canonical), "lemma.lagrangian");
  o.require(passes(a2), "A2 enumeration consistency");
  return o;
}

Outcome c11() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("gk-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (const auto& g : kGroups) {
    gk::RunConfig cfg = config_for(g, gk::Preset::Canonical);
    const std::string a = gk::to_json(gk::run(cfg));
    const std::string b = gk::to_json(gk::run(cfg));
    cfg.cache_path = dir.string();
    const std::string cold = gk::to_json(gk::run(cfg));
    const std::string warm = gk::to_json(gk::run(cfg));
    o.require(a == b, "repeat run differs on " + g);
    o.require(a == cold && a == warm, "cache changes the report on " + g);
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0 means no stated limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "Clifford soundness: d^Cl o d^Cl = 0 on every monomial", 300, c1},
      {2, "quantization module property on A1+U1 and A1+A1", 120, c2},
      {3, "infinitesimal spin identities on all basis pairs", 0, c3},
      {4, "d^Cl on pure spinors, canonical and induced pairs", 600, c4},
      {5, "canonical degree equals -2 kappa(rho, rho); Calabi-Yau flags", 0, c5},
      {6, "Hodge decomposition of Cl into U_{r,s}", 1800, c6},
      {7, "graded differential and bidegree identities", 0, c7},
      {8, "pure spinor annihilators and type parity", 0, c8},
      {9, "spectral sequence pages, total cohomology, Kunneth, Picard", 0, c9},
      {10, "Lagrangian subalgebras and Belavin-Drinfeld enumeration", 0, c10},
      {11, "determinism across repeated runs and cache on/off", 0, c11},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "exceeded time budget");
    if (!o.ok) ++failed;
    std::printf("criterion %2d %s  %s  (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                o.ok ? "" : "  -- ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
