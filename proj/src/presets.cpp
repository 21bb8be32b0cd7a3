#include "gk/presets.hpp"

#include <sstream>

namespace gk {

namespace {

bool is_rational_square(const mpq_class& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

mpq_class rational_sqrt(const mpq_class& q) {
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

// A square root of the rational t inside Q(i)[sqrt d], if there is one.
std::optional<Scalar> field_sqrt(const mpq_class& t, int d) {
  if (is_rational_square(t)) return Scalar(rational_sqrt(t));
  if (is_rational_square(-t)) return Scalar::imag_unit() * Scalar(rational_sqrt(-t));
  if (d > 1) {
    const mpq_class u = t / d;
    if (is_rational_square(u)) return Scalar(rational_sqrt(u)) * Scalar::root(d);
    if (is_rational_square(-u)) return Scalar::imag_unit() * Scalar::root(d) * Scalar(rational_sqrt(-u));
  }
  return std::nullopt;
}

bool is_default_gram(const LieAlgebra& g) {
  const Matrix expect = [&] {
    GroupSpec s = g.spec();
    s.center_gram = Matrix();
    return s.effective_center_gram();
  }();
  return g.spec().effective_center_gram() == expect;
}

}  // namespace

Preset parse_preset(const std::string& name) {
  if (name == "canonical") return Preset::Canonical;
  if (name == "induced-pair-1") return Preset::InducedPair1;
  if (name == "induced-pair-2") return Preset::InducedPair2;
  if (name == "opposite-borel") return Preset::OppositeBorel;
  throw SpecError("unknown preset '" + name + "'");
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::Canonical: return "canonical";
    case Preset::InducedPair1: return "induced-pair-1";
    case Preset::InducedPair2: return "induced-pair-2";
    case Preset::OppositeBorel: return "opposite-borel";
  }
  return "canonical";
}

std::vector<Preset> all_presets() {
  return {Preset::Canonical, Preset::InducedPair1, Preset::InducedPair2, Preset::OppositeBorel};
}

Subspace default_t10(const LieAlgebra& g) {
  const auto& spec = g.spec();
  const auto& c = g.cartan_indices();
  const Scalar i = Scalar::imag_unit();
  const std::size_t n = g.dim();
  auto e = [&](std::size_t k) { return g.basis(c[k]); };
  if (is_default_gram(g)) {
    if (spec.simple_ranks.empty() && spec.abelian_rank == 2) return Subspace::span(n, {e(0) + i * e(1)});
    if (spec.simple_ranks == std::vector<int>{1} && spec.abelian_rank == 1) {
      return Subspace::span(n, {i * e(0) - i * e(1)});
    }
    if (spec.simple_ranks == std::vector<int>{1, 1} && spec.abelian_rank == 0) {
      return Subspace::span(n, {e(0) + i * e(1)});
    }
    if (spec.simple_ranks == std::vector<int>{2} && spec.abelian_rank == 0 && spec.field_d == 3) {
      const Scalar x = Scalar::parse("1/2+1/2*i*r", 3);
      return Subspace::span(n, {x * e(0) + e(1)});
    }
  }
  // Generic: orthogonal Cartan basis, consecutive vectors paired into isotropic lines.
  std::vector<Vec> orth;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Vec v = e(k);
    for (const auto& u : orth) v = v - (g.kappa(v, u) / g.kappa(u, u)) * u;
    orth.push_back(v);
  }
  std::vector<Vec> lines;
  for (std::size_t k = 0; k + 1 < orth.size(); k += 2) {
    const Scalar a = g.kappa(orth[k], orth[k]);
    const Scalar b = g.kappa(orth[k + 1], orth[k + 1]);
    const Scalar t = -(a / b);
    if (!t.is_rational()) throw SpecError("no default t10: non-rational Cartan Gram");
    auto x = field_sqrt(t.coeff(0), g.field_d());
    if (!x) throw SpecError("no default t10 over this field; pass --t10-plus/--t10-minus");
    lines.push_back(orth[k] + *x * orth[k + 1]);
  }
  return Subspace::span(n, lines);
}

Subspace parse_cartan_basis(const LieAlgebra& g, const std::string& text) {
  std::vector<Vec> vs;
  std::stringstream outer(text);
  std::string vec_text;
  while (std::getline(outer, vec_text, ';')) {
    std::stringstream inner(vec_text);
    std::string tok;
    Vec coords;
    while (std::getline(inner, tok, ',')) coords.push_back(Scalar::parse(tok, g.field_d()));
    if (coords.size() != g.rank()) {
      throw SpecError("basis vector '" + vec_text + "' needs " + std::to_string(g.rank()) + " Cartan coordinates");
    }
    vs.push_back(g.from_cartan(coords));
  }
  if (vs.empty()) throw SpecError("empty basis");
  return Subspace::span(g.dim(), vs);
}

GKPair make_pair(std::shared_ptr<const LieAlgebra> g, const PairChoice& choice) {
  const Subspace t10 = default_t10(*g);
  const Subspace t01 = g->conj(t10);
  auto std_frame = std::make_shared<const CartanFrame>(g);
  auto frame_minus = std_frame;
  Subspace tp = t10, tm = t10;
  switch (choice.preset) {
    case Preset::Canonical:
      break;
    case Preset::InducedPair1:
      tm = t01;
      break;
    case Preset::InducedPair2:
      tp = t01;
      break;
    case Preset::OppositeBorel: {
      std::vector<std::vector<int>> rev;
      for (const auto& perm : std_frame->borel()) rev.emplace_back(perm.rbegin(), perm.rend());
      frame_minus = std::make_shared<const CartanFrame>(g, rev);
      break;
    }
  }
  if (choice.t10_plus) tp = *choice.t10_plus;
  if (choice.t10_minus) tm = *choice.t10_minus;
  return gk_pair(samelson(std_frame, tp), samelson(frame_minus, tm));
}

}  // namespace gk
