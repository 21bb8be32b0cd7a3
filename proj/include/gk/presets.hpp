#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gk/lagrangian.hpp"

namespace gk {

/// Named structure choices shipped with the tool.
enum class Preset { Canonical, InducedPair1, InducedPair2, OppositeBorel };

Preset parse_preset(const std::string& name);
std::string preset_name(Preset p);
std::vector<Preset> all_presets();

/// A kappa-isotropic complement of t in h. The four sample groups use fixed
/// lines (z1 + i z2, i h - i z, h_1 + i h_2, and (1/2 + i sqrt3/2) h_1 + h_2); other
/// groups fall back to pairing up an orthogonal Cartan basis, which throws if the
/// required square roots are not in the field.
Subspace default_t10(const LieAlgebra& g);

/// Parses "c,c;c,c" (vectors separated by ';', Cartan coordinates by ',').
Subspace parse_cartan_basis(const LieAlgebra& g, const std::string& text);

struct PairChoice {
  Preset preset = Preset::Canonical;
  std::optional<Subspace> t10_plus;
  std::optional<Subspace> t10_minus;
};

GKPair make_pair(std::shared_ptr<const LieAlgebra> g, const PairChoice& choice);

}  // namespace gk
