#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cla/algebra.hpp"

namespace cla {

/// Alternating-form coordinates on pairs i < j, ordered Δ_{n-1,n}, ..., Δ_{1,2}
/// (reverse lexicographic). For n = 3 this is Δ23, Δ13, Δ12.
std::size_t pair_count(std::size_t n);
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

/// Scalar 2-cochain (ω̲, ω̃): Gram matrices M[k][l] = ω(e_k, e_l), antisymmetric.
struct ScalarCocycle {
    Matrix under;
    Matrix tilde;

    static ScalarCocycle zero(const Field& f, std::size_t n);
    /// From ambient coordinates: under block then tilde block, each in pair order.
    static ScalarCocycle from_coordinates(const Field& f, std::size_t n, const Vector& coords);
    Vector coordinates() const;
    std::size_t dim() const { return under.rows(); }

    friend ScalarCocycle operator+(const ScalarCocycle& a, const ScalarCocycle& b);
    friend ScalarCocycle operator*(const Scalar& c, const ScalarCocycle& a);
    friend bool operator==(const ScalarCocycle& a, const ScalarCocycle& b) = default;
};

/// Gram matrix of the basic form Δ_ij (0-based i < j).
Matrix delta_form(const Field& f, std::size_t n, std::size_t i, std::size_t j);

/// V-valued cochain seen through its components ω_1..ω_s.
struct VectorCocycle {
    std::vector<ScalarCocycle> components;
    std::size_t s() const { return components.size(); }
};

/// V-valued cochain stored as values: rows are pairs (Δ order), columns are V coordinates.
struct VValuedCocycle {
    std::size_t n = 0;
    std::size_t s = 0;
    Matrix under;
    Matrix tilde;
};

VectorCocycle decompose_vector_cocycle(const VValuedCocycle& omega);
VValuedCocycle assemble(const Field& f, std::size_t n, const VectorCocycle& components);

/// Residuals of the three cocycle identities on all basis triples; all zero iff ω ∈ Z².
struct CocycleResidual {
    bool under_ok = true;
    bool tilde_ok = true;
    bool mixed_ok = true;
    bool ok() const { return under_ok && tilde_ok && mixed_ok; }
};

CocycleResidual cocycle_residual(const CompatibleLieAlgebra& g, const ScalarCocycle& omega);
bool is_cocycle(const CompatibleLieAlgebra& g, const ScalarCocycle& omega);

/// Z²(g, K) and B²(g, K) inside the 2·C(n,2)-dimensional ambient coordinate space.
Subspace cocycle_subspace(const CompatibleLieAlgebra& g);
Subspace coboundary_subspace(const CompatibleLieAlgebra& g);
std::vector<ScalarCocycle> cocycle_space(const CompatibleLieAlgebra& g);
std::vector<ScalarCocycle> coboundary_space(const CompatibleLieAlgebra& g);

/// (φ∘[-,-], φ∘{-,-}) for the linear functional with values `phi` on the basis.
ScalarCocycle coboundary_of(const CompatibleLieAlgebra& g, const Vector& phi);

struct CohomologyData {
    std::size_t n = 0;
    Field field;
    Subspace z2;
    Subspace b2;
    QuotientCoordinates quotient;
    std::vector<ScalarCocycle> z2_basis;
    std::vector<ScalarCocycle> b2_basis;
    std::vector<ScalarCocycle> h2_reps;

    std::size_t h2_dim() const { return h2_reps.size(); }
    /// Z² -> H² coordinates; kills exactly B².
    Vector project(const ScalarCocycle& omega) const;
    /// H² coordinates -> the cocycle built from the chosen representatives.
    ScalarCocycle lift(const Vector& h2_coords) const;
    bool is_coboundary(const ScalarCocycle& omega) const;
};

CohomologyData cohomology(const CompatibleLieAlgebra& g);

/// True iff every component of ω is a coboundary.
bool is_vector_coboundary(const CohomologyData& h, const VectorCocycle& omega);

/// (ω̲, ω̃) -> (ω̃, ω̲)
ScalarCocycle switched(const ScalarCocycle& omega);
VectorCocycle switched(const VectorCocycle& omega);

} // namespace cla
