#pragma once

#include "cla/cohomology.hpp"

namespace cla {

/// Base algebra plus an s-component cocycle; defines g_ω = g ⊕ K^s.
struct ExtensionSpec {
    CompatibleLieAlgebra base;
    VectorCocycle cocycle;
    std::size_t s() const { return cocycle.s(); }
};

/// Brackets ([x,y], ω̲(x,y)) and ({x,y}, ω̃(x,y)); base basis first, then V.
/// Throws ContractError when a component is not a cocycle.
CompatibleLieAlgebra central_extension(const ExtensionSpec& spec);

/// ann(ω): vectors killed by every component form of both brackets.
Subspace annihilator(const CompatibleLieAlgebra& g, const VectorCocycle& omega);

/// Z(g) ∩ ann(ω) = 0, i.e. the extension has centre exactly V.
bool is_admissible(const CompatibleLieAlgebra& g, const VectorCocycle& omega);

/// Rank of the classes [ω_1..ω_s] in H²(g,K) is below s.
/// Throws ContractError for non-admissible input.
bool has_central_component_cohomological(const CompatibleLieAlgebra& g, const VectorCocycle& omega);
bool has_central_component_cohomological(const CompatibleLieAlgebra& g, const CohomologyData& h,
                                         const VectorCocycle& omega);

/// Writes a nonzero nilpotent g as (g / Z(g))_ω with ω valued in Z(g).
ExtensionSpec decompose(const CompatibleLieAlgebra& g);

/// (g^s)_{ω^s} and (g_ω)^s have entrywise-equal structure constants.
bool switch_extension_law_holds(const CompatibleLieAlgebra& g, const VectorCocycle& omega);

} // namespace cla
