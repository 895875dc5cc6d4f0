#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cla/cohomology.hpp"
#include "cla/kernels.hpp"

namespace cla {

/// Safety valve for exhaustive searches.
struct SearchBounds {
    std::size_t max_dim = 4;
    std::uint32_t max_p = 7;
};

enum class Backend { Serial, Parallel };

/// Subspaces built the same way from any algebra, so an isomorphism g -> h maps
/// each one of g onto the corresponding one of h: centres, derived algebras and
/// central series (for both brackets together and separately), and centralizers
/// of the derived algebra.
std::vector<Subspace> characteristic_subspaces(const CompatibleLieAlgebra& g);

/// Throws UnsupportedFieldError over Q and ResourceError past the bounds.
void check_search_bounds(const CompatibleLieAlgebra& g, const SearchBounds& bounds);

/// Backtracking problem for isomorphisms g -> h. Basis vectors of g lying in a
/// characteristic subspace must map into its counterpart in h. Empty when the
/// characteristic subspaces already differ in dimension.
std::optional<kernels::MorphismSearch> morphism_search(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h);

/// Streams Aut(g) in a fixed order; stops as soon as `visit` returns false.
void for_each_automorphism(const CompatibleLieAlgebra& g, const std::function<bool(const Matrix&)>& visit,
                           const SearchBounds& bounds = {});

std::vector<Matrix> automorphisms(const CompatibleLieAlgebra& g, const SearchBounds& bounds = {});

/// |Aut(g)|, memoized per (structure constants, p).
std::size_t automorphism_count(const CompatibleLieAlgebra& g, const SearchBounds& bounds = {},
                               Backend backend = Backend::Parallel);

/// (ωφ)(x, y) = ω(φx, φy), i.e. M -> φᵗ M φ on both Gram matrices.
ScalarCocycle act_on_cocycle(const ScalarCocycle& omega, const Matrix& phi);
VectorCocycle act_on_cocycle(const VectorCocycle& omega, const Matrix& phi);

/// [ω]φ = [ωφ] in H² coordinates.
Vector act_on_class(const CohomologyData& h, const Vector& cls, const Matrix& phi);

/// Wφ = span([ω_1 φ], ..., [ω_s φ]) for W given in H² coordinates.
Subspace act_on_h2_subspace(const CohomologyData& h, const Subspace& w, const Matrix& phi);

} // namespace cla
