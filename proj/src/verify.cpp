#include "gk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gk/cohomology.hpp"
#include "gk/genkahler.hpp"

namespace gk {

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

std::string list_str(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

void verdict(CheckRecord& rec, bool ok) { rec.status = ok ? Status::Pass : Status::Fail; }

// Records the first failure only; keeps witnesses short.
struct FirstFailure {
  CheckRecord& rec;
  bool ok = true;
  void fail(const std::string& what, const std::string& detail) {
    if (!ok) return;
    ok = false;
    rec.witness["failure"] = what;
    rec.witness["residual"] = detail;
  }
};

std::vector<std::pair<Vec, Vec>> basis_hats(const LieAlgebra& g) {
  std::vector<std::pair<Vec, Vec>> hats;
  const Vec zero = zero_vec(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    hats.emplace_back(g.basis(i), zero);
    hats.emplace_back(zero, g.basis(i));
  }
  return hats;
}

void check_d_squared(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const auto& op = cl.dcl_operator();
  FirstFailure ff{rec};
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    const auto dd = op.apply(op.columns[m]);
    if (!dd.is_zero()) ff.fail("monomial " + std::to_string(m), element_str(cl.g(), dd));
  }
  rec.witness["monomials"] = std::to_string(cl.dim());
  verdict(rec, ff.ok);
}

void check_quantization(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const LieAlgebra& g = cl.g();
  FirstFailure ff{rec};
  const auto hats = basis_hats(g);
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    const auto v = Multivector::blade(static_cast<Mask>(m));
    const auto qv = cl.quantize(v);
    if (cl.dequantize(qv) != v) ff.fail("dequantize monomial " + std::to_string(m), "");
    for (std::size_t h = 0; h < hats.size(); ++h) {
      const auto& [a, a2] = hats[h];
      const auto ks = kappa_star(g, a, a2);
      const auto diff = cl.quantize(cl.vec_covec_action(ks.vec, ks.covec_dual, v)) - cl.spinor_action(a, a2, qv);
      if (!diff.is_zero()) ff.fail("hat " + std::to_string(h) + " monomial " + std::to_string(m), element_str(g, diff));
    }
  }
  rec.witness["pairs"] = std::to_string(hats.size() * cl.dim());
  verdict(rec, ff.ok && cl.quantize(Multivector::scalar(1)) == cl.one());
}

void check_star(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const std::size_t n = cl.n();
  FirstFailure ff{rec};
  if (cl.star(Form::scalar(1)) != cl.mu()) ff.fail("star 1 != mu", "");
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    const auto alpha = Form::blade(static_cast<Mask>(m));
    const auto sa = cl.star(alpha);
    if (cl.star_inv(sa) != alpha) ff.fail("star_inv monomial " + std::to_string(m), "");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec a = unit_vec(n, i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vec xi = unit_vec(n, j);
        const auto lhs = cl.star(cl.contract_form(a, alpha) + cl.wedge_form(xi, alpha));
        const auto rhs = cl.wedge(a, sa) + cl.contract(xi, sa);
        if (lhs != rhs) ff.fail("module property (" + std::to_string(i) + "," + std::to_string(j) + ") monomial " + std::to_string(m), "");
      }
    }
  }
  verdict(rec, ff.ok);
}

void check_spin(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const LieAlgebra& g = cl.g();
  FirstFailure ff{rec};
  const Scalar quarter = Scalar::rational(-1, 4);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vec a = g.basis(i);
    const auto ta = cl.tau_prime(a);
    const auto alt = quarter * cl.graded_commutator(cl.theta(), cl.vec(a));
    if (ta != alt) ff.fail("tau'_a != -1/4 [Theta, a] for basis " + std::to_string(i), element_str(g, ta - alt));
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vec b = g.basis(j);
      const auto tb = cl.tau_prime(b);
      const std::string at = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      const auto r1 = cl.vec(g.bracket(a, b)) - (cl.mul(ta, cl.vec(b)) - cl.mul(cl.vec(b), ta));
      if (!r1.is_zero()) ff.fail("adjoint" + at, element_str(g, r1));
      const auto r2 = cl.tau_prime(g.bracket(a, b)) - (cl.mul(ta, tb) - cl.mul(tb, ta));
      if (!r2.is_zero()) ff.fail("homomorphism" + at, element_str(g, r2));
    }
  }
  rec.witness["basis_pairs"] = std::to_string(g.dim() * g.dim());
  verdict(rec, ff.ok);
}

void check_homotopy(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const LieAlgebra& g = cl.g();
  const auto& op = cl.dcl_operator();
  FirstFailure ff{rec};
  const auto hats = basis_hats(g);
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    const auto u = CliffordElement::blade(static_cast<Mask>(m));
    for (const auto& [a, a2] : hats) {
      const auto lhs = cl.mul(cl.tau_prime(a2), u) - cl.mul(u, cl.tau_prime(a));
      const auto rhs = -cl.spinor_action(a, a2, op.columns[m]) - op.apply(cl.spinor_action(a, a2, u));
      if (lhs != rhs) ff.fail("monomial " + std::to_string(m), element_str(g, lhs - rhs));
    }
  }
  verdict(rec, ff.ok);
}

void check_lagrangian(const RunContext& ctx, CheckRecord& rec) {
  const LieAlgebra& g = *ctx.g;
  const Double& d = *ctx.pair.d;
  const CartanFrame frame(ctx.g);
  FirstFailure ff{rec};
  const auto cand = bd_candidates(frame);
  const auto listed = enumerate_bd(frame);
  for (const auto& t : cand) {
    const bool in = std::find(listed.begin(), listed.end(), t) != listed.end();
    if (in != is_isometry(frame, t)) ff.fail("enumeration disagrees with the isometry predicate", "");
  }
  std::size_t outputs = 0;
  for (const auto& t : listed) {
    for (int sign : {1, -1}) {
      const auto L = evens_lu(d, frame, t, default_F(d, frame, t, sign));
      ++outputs;
      if (L.subspace.dim() != g.dim() || !d.is_isotropic(L.subspace) || !d.is_subalgebra(L.subspace)) {
        ff.fail("evens-lu output is not a Lagrangian subalgebra", "");
      }
    }
  }
  const auto sc = split_classify(d, ctx.pair.L_plus);
  if (!sc.split || !sc.gc_flag || sc.left != ctx.pair.l_minus.l || sc.right != ctx.pair.l_plus.l) {
    ff.fail("split classification does not recover (l_-, l_+)", "");
  }
  if (!d.is_lagrangian_subalgebra(ctx.pair.L_plus) || !d.is_lagrangian_subalgebra(ctx.pair.L_minus)) {
    ff.fail("L_+ or L_- is not a Lagrangian subalgebra", "");
  }
  rec.witness["bd_candidates"] = std::to_string(cand.size());
  rec.witness["bd_triples"] = std::to_string(listed.size());
  rec.witness["evens_lu_outputs"] = std::to_string(outputs);
  rec.witness["induced"] = yes(ctx.pair.induced);
  rec.witness["canonical"] = yes(ctx.pair.canonical);
  verdict(rec, ff.ok);
}

void check_bismut(const RunContext& ctx, CheckRecord& rec) {
  const auto r = bismut_flat_check(*ctx.pair.d);
  rec.witness["mixed_brackets_vanish"] = yes(r.mixed_brackets_vanish);
  rec.witness["left_in_c_minus"] = yes(r.left_in_c_minus);
  rec.witness["right_in_c_plus"] = yes(r.right_in_c_plus);
  verdict(rec, r.ok());
}

void check_pure_spinor(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const GKPair& pair = ctx.pair;
  FirstFailure ff{rec};
  for (auto side : {Side::Plus, Side::Minus}) {
    const std::string tag = side == Side::Plus ? "plus" : "minus";
    const auto u = build_pure_spinor(cl, pair, side);
    const Subspace ann = spinor_annihilator(cl, u.element);
    const Subspace target = pair.d->conj(side == Side::Plus ? pair.L_plus : pair.L_minus);
    if (ann.dim() != cl.n() || ann != target) ff.fail("annihilator of u_" + tag, "dim " + std::to_string(ann.dim()));
    const int type = type_of(cl, u.element);
    const std::size_t par = type_parity_dim(pair, side);
    if (type % 2 != static_cast<int>(par % 2)) ff.fail("type parity of u_" + tag, std::to_string(type));
    rec.witness["type_" + tag] = std::to_string(type);
    rec.witness["intersection_dim_" + tag] = std::to_string(par);
  }
  verdict(rec, ff.ok);
}

void check_dcl_spinor(const RunContext& ctx, CheckRecord& rec) {
  const auto rep = verify_dcl_spinor(*ctx.cl, ctx.pair);
  for (const auto& c : rep.checks) {
    rec.witness[c.name] = c.ok ? "exact" : element_str(*ctx.g, c.residual);
  }
  verdict(rec, rep.ok());
}

void check_degree(const RunContext& ctx, CheckRecord& rec) {
  bool ok = true;
  for (auto side : {MetricSide::Plus, MetricSide::Minus}) {
    const std::string tag = side == MetricSide::Plus ? "plus" : "minus";
    const auto r = degree_canonical(*ctx.cl, ctx.pair, side);
    rec.witness["degree_" + tag] = r.degree.str();
    rec.witness["chain_" + tag] = yes(r.chain_ok);
    rec.witness["kappa_rho_rho"] = r.kappa_rho_rho.str();
    ok = ok && r.ok();
  }
  rec.witness["convention"] = "degree = -2 kappa(rho, rho), with omega^n in the denominator";
  verdict(rec, ok);
}

void check_calabi_yau(const RunContext& ctx, CheckRecord& rec) {
  const Clifford& cl = *ctx.cl;
  const bool closed_plus = cl.dcl(build_pure_spinor(cl, ctx.pair, Side::Plus).element).is_zero();
  const bool closed_minus = cl.dcl(build_pure_spinor(cl, ctx.pair, Side::Minus).element).is_zero();
  const bool zero_degree = degree_canonical(cl, ctx.pair, MetricSide::Plus).degree.is_zero();
  rec.witness["calabi_yau_plus"] = yes(closed_plus);
  rec.witness["calabi_yau_minus"] = yes(closed_minus);
  rec.witness["degree_zero"] = yes(zero_degree);
  rec.witness["abelian"] = yes(ctx.g->is_abelian());
  const bool abelian = ctx.g->is_abelian();
  verdict(rec, closed_plus == abelian && closed_minus == abelian && zero_degree == abelian);
}

void check_hodge(const RunContext& ctx, CheckRecord& rec) {
  const auto grid = hodge_grid(*ctx.cl, ctx.pair);
  const auto r = check_grid(*ctx.cl, grid, true);
  rec.witness["cells"] = std::to_string(grid.cells.size());
  rec.witness["total_rank"] = std::to_string(r.total_rank);
  rec.witness["eigen"] = yes(r.eigen_ok);
  rec.witness["dims"] = yes(r.dims_ok);
  rec.witness["direct_sum"] = yes(r.direct_sum);
  rec.witness["spinor_eigen"] = yes(r.spinor_eigen_ok);
  if (!r.witness.empty()) rec.witness["detail"] = r.witness;
  verdict(rec, r.ok() && r.total_rank == ctx.cl->dim());
}

void check_graded(const RunContext& ctx, CheckRecord& rec) {
  const auto grid = hodge_grid(*ctx.cl, ctx.pair);
  const auto r = graded_dcl(*ctx.cl, grid);
  rec.witness["containment"] = yes(r.containment);
  rec.witness["dbar_plus_squared_zero"] = yes(r.dbar_plus_sq);
  rec.witness["dbar_minus_squared_zero"] = yes(r.dbar_minus_sq);
  rec.witness["dbar_anticommute"] = yes(r.dbar_anticommute);
  rec.witness["nine_components_vanish"] = yes(r.nine_vanish);
  rec.witness["spinor_lands"] = yes(r.spinor_lands);
  rec.witness["vectors"] = std::to_string(r.vectors);
  if (!r.witness.empty()) rec.witness["detail"] = r.witness;
  verdict(rec, r.ok());
}

void check_spectral(const RunContext& ctx, CheckRecord& rec) {
  const GKPair& pair = ctx.pair;
  const LieAlgebra& g = *ctx.g;
  const std::size_t r = g.rank() / 2;
  FirstFailure ff{rec};
  const auto page = e2_page(e1_page(pair));
  if (!page.d1_squared_zero()) ff.fail("d1 does not square to zero", "");
  for (const auto& [pq, dim] : page.e1) {
    if (dim != binomial(page.n, pq.first) * binomial(r, pq.second)) ff.fail("E1 dimension", std::to_string(dim));
  }
  for (const auto& [pq, dim] : page.e2) {
    if (dim != binomial(r, pq.first) * binomial(r, pq.second)) {
      ff.fail("E2 dimension at (" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")", std::to_string(dim));
    }
  }
  const auto total = total_cohomology(pair);
  for (std::size_t k = 0; k < total.size(); ++k) {
    if (total[k] != binomial(2 * r, k)) ff.fail("total cohomology in degree " + std::to_string(k), std::to_string(total[k]));
  }
  const auto hp = ce_cohomology(g, pair.l_plus.lbar);
  const auto hm = ce_cohomology(g, pair.l_minus.lbar);
  if (convolve(hm, hp) != total) ff.fail("Kunneth convolution", list_str(convolve(hm, hp)));
  auto by_deg = page.e2_by_degree();
  by_deg.resize(total.size(), 0);
  if (by_deg != total) ff.fail("E2 by degree differs from the total", list_str(by_deg));
  const auto swapped = e2_page(e1_page(pair, true));
  if (swapped.e2_total() != page.e2_total()) ff.fail("swapped sequence total", std::to_string(swapped.e2_total()));
  const auto pic = picard_report(pair);
  if (!pic.ok()) ff.fail("picard", std::to_string(pic.h1_lbar_plus) + "," + std::to_string(pic.tangent_dim));
  rec.witness["lbar_plus_betti"] = list_str(hp);
  rec.witness["total_betti"] = list_str(total);
  rec.witness["e2_total"] = std::to_string(page.e2_total());
  rec.witness["r"] = std::to_string(pic.r);
  rec.witness["h1_lbar_plus"] = std::to_string(pic.h1_lbar_plus);
  rec.witness["tangent_dim"] = std::to_string(pic.tangent_dim);
  verdict(rec, ff.ok);
}

void check_dcl_cohomology(const RunContext& ctx, CheckRecord& rec) {
  const auto h = dcl_cohomology(*ctx.cl);
  rec.witness["total"] = std::to_string(h.total);
  rec.witness["even"] = std::to_string(h.even);
  rec.witness["odd"] = std::to_string(h.odd);
  const std::size_t expect = ctx.g->is_abelian() ? ctx.cl->dim() : 0;
  rec.witness["consistent_with_vanishing"] = yes(h.total == expect);
  // Informational: the comparison with twisted cohomology is not asserted.
  rec.status = Status::Pass;
}

void check_torus(const RunContext& ctx, CheckRecord& rec) {
  if (!ctx.pair.canonical) {
    rec.status = Status::Skipped;
    rec.witness["reason"] = "pair is not canonical";
    return;
  }
  verdict(rec, torus_restriction_check(ctx.pair));
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> r = {
      {"clifford.d-squared", "d^Cl o d^Cl = 0", check_d_squared},
      {"clifford.quantization", "q(kappa_* a o v) = a o q(v)", check_quantization},
      {"clifford.star", "star(i_a alpha + xi ^ alpha) = a ^ star(alpha) + i_xi star(alpha)", check_star},
      {"clifford.spin", "tau'_[a,b] = [tau'_a, tau'_b]; [a,b] = tau'_a b - b tau'_a", check_spin},
      {"lemma.cartan-homotopy", "tau'_a o u = -a o d^Cl u - d^Cl(a o u)", check_homotopy},
      {"lemma.lagrangian", "Lagrangian subalgebras of the double", check_lagrangian},
      {"prop.bismut-flat", "mixed brackets vanish in the trivialized Courant algebroid", check_bismut},
      {"lemma.pure-spinor", "ann(u_+-) = conj(L_+-); type parity", check_pure_spinor},
      {"prop.dcl-spinor", "d^Cl u_+ = 1/2 (-rho_-, rho_+) o u_+", check_dcl_spinor},
      {"thm.degree", "degree = -2 kappa(rho, rho)", check_degree},
      {"cor.calabi-yau", "d^Cl u_+ = 0 iff g abelian", check_calabi_yau},
      {"prop.hodge-grid", "Cl = sum U_{r,s}", check_hodge},
      {"thm.graded-dcl", "d^Cl = D_+ + D_- + Dbar_+ + Dbar_-", check_graded},
      {"cor.spectral-sequence", "E2 = wedge^p (C^r) (x) wedge^q (C^r)", check_spectral},
      {"info.dcl-cohomology", "H(Cl, d^Cl), informational", check_dcl_cohomology},
      {"prop.torus-restriction", "restriction to the maximal torus", check_torus},
  };
  std::sort(r.begin(), r.end(), [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
  return r;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string vec_str(const Vec& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].str();
  return out + "]";
}

std::string element_str(const LieAlgebra& g, const CliffordElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : u.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (m == 0) continue;
    out += "*";
    bool first = true;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (!(m & (Mask{1} << i))) continue;
      out += (first ? "" : ".") + g.labels()[i];
      first = false;
    }
  }
  return out;
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> reg = build_registry();
  return reg;
}

RunContext make_context(const RunConfig& config) {
  RunContext ctx;
  try {
    ctx.g = std::make_shared<const LieAlgebra>(config.spec);
    PairChoice choice;
    choice.preset = config.preset;
    if (config.t10_plus) choice.t10_plus = parse_cartan_basis(*ctx.g, *config.t10_plus);
    if (config.t10_minus) choice.t10_minus = parse_cartan_basis(*ctx.g, *config.t10_minus);
    ctx.custom_pair = config.t10_plus || config.t10_minus;
    ctx.pair = gk::make_pair(ctx.g, choice);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const FieldError& e) {
    throw ConfigError(e.what());
  }
  ctx.preset = config.preset;
  ctx.cl = std::make_shared<Clifford>(ctx.g);
  return ctx;
}

CheckRecord run_check(const RunContext& ctx, const std::string& name) {
  const auto& reg = check_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckDef& c) { return c.name == name; });
  if (it == reg.end()) throw ConfigError("unknown check '" + name + "'");
  CheckRecord rec;
  rec.name = it->name;
  rec.anchor = it->anchor;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->run(ctx, rec);
  } catch (const std::exception& e) {
    rec.status = Status::Fail;
    rec.witness["error"] = e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

Report run(const RunConfig& config) {
  const RunContext ctx = make_context(config);
  if (config.cache_path) ctx.cl->load_cache(*config.cache_path);
  Report rep = run(config, ctx);
  if (config.cache_path) ctx.cl->save_cache(*config.cache_path);
  return rep;
}

Report run(const RunConfig& config, const RunContext& ctx) {
  Report rep;
  rep.config = config;
  std::vector<std::string> names = config.checks;
  if (names.empty()) {
    for (const auto& c : check_registry()) names.push_back(c.name);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& n : names) {
    rep.records.push_back(run_check(ctx, n));
    switch (rep.records.back().status) {
      case Status::Pass: ++rep.passed; break;
      case Status::Fail: ++rep.failed; break;
      case Status::Skipped: ++rep.skipped; break;
    }
  }
  return rep;
}

std::string to_json(const Report& r) {
  using nlohmann::json;
  const RunConfig& c = r.config;
  json cfg;
  cfg["group"] = c.spec.name();
  cfg["field_d"] = c.spec.field_d;
  json gram = json::array();
  const Matrix eff = c.spec.effective_center_gram();
  for (std::size_t i = 0; i < eff.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < eff.cols(); ++j) row.push_back(eff.at(i, j).str());
    gram.push_back(row);
  }
  cfg["center_gram"] = gram;
  cfg["preset"] = preset_name(c.preset);
  cfg["t10_plus"] = c.t10_plus ? json(*c.t10_plus) : json(nullptr);
  cfg["t10_minus"] = c.t10_minus ? json(*c.t10_minus) : json(nullptr);
  json checks = json::array();
  for (const auto& rec : r.records) {
    json j;
    j["name"] = rec.name;
    j["anchor"] = rec.anchor;
    j["status"] = status_name(rec.status);
    j["witness"] = rec.witness;
    if (c.timing) j["elapsed_ms"] = static_cast<std::int64_t>(rec.elapsed_ms);
    checks.push_back(j);
  }
  json out;
  out["schema"] = kReportSchema;
  out["tool"] = {{"name", "gkverify"}, {"version", kToolVersion}};
  out["config"] = cfg;
  out["checks"] = checks;
  out["summary"] = {{"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}, {"total", r.records.size()}};
  return out.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "gkverify " << kToolVersion << "  group " << r.config.spec.name() << "  preset " << preset_name(r.config.preset)
     << "\n";
  for (const auto& rec : r.records) {
    std::string st = status_name(rec.status);
    for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << st << std::string(8 - st.size(), ' ') << rec.name << "  [" << rec.anchor << "]";
    if (r.config.timing) os << "  " << static_cast<std::int64_t>(rec.elapsed_ms) << " ms";
    os << "\n";
    for (const auto& [k, v] : rec.witness) os << "          " << k << " = " << v << "\n";
  }
  os << "summary: " << r.passed << " pass, " << r.failed << " fail, " << r.skipped << " skipped\n";
  return os.str();
}

}  // namespace gk
