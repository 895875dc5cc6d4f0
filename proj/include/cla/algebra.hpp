#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cla/matrix.hpp"
#include "cla/subspace.hpp"

namespace cla {

/// Which of the two products: First is [-,-], Second is {-,-}.
enum class Bracket { First = 0, Second = 1 };

inline constexpr std::array<Bracket, 2> both_brackets{Bracket::First, Bracket::Second};

/// Finite-dimensional vector space with two Lie brackets given by structure
/// constants in a fixed basis e_0..e_{n-1} (printed 1-based).
///
/// Only the coefficients for i < j are stored; [e_j, e_i] = -[e_i, e_j] and
/// [e_i, e_i] = 0 are derived by the accessors.
class CompatibleLieAlgebra {
public:
    CompatibleLieAlgebra() = default;
    CompatibleLieAlgebra(const Field& f, std::size_t dim, std::string label = {});

    static CompatibleLieAlgebra abelian(const Field& f, std::size_t dim);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Sets [e_i, e_j] (or {e_i, e_j}) to `value`; i > j stores the negation.
    void set_product(Bracket w, std::size_t i, std::size_t j, const Vector& value);
    void set_coefficient(Bracket w, std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    Scalar coefficient(Bracket w, std::size_t i, std::size_t j, std::size_t k) const;
    Vector product(Bracket w, std::size_t i, std::size_t j) const;

    /// Bilinear extension of the structure constants.
    Vector bracket(Bracket w, const Vector& x, const Vector& y) const;

    /// n x n matrix of ad_x restricted to basis: column j holds [x, e_j].
    Matrix adjoint(Bracket w, const Vector& x) const;

    bool is_abelian() const;

    /// Serialized structure constants; equal for entrywise-equal algebras.
    std::string canonical_key() const;

    friend bool operator==(const CompatibleLieAlgebra& a, const CompatibleLieAlgebra& b);

private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    Field field_;
    std::size_t dim_ = 0;
    std::string label_;
    std::array<std::vector<Scalar>, 2> constants_;
};

struct IdentityFailure {
    std::string identity;  // "jacobi1", "jacobi2" or "mixed"
    std::array<std::size_t, 3> triple{};  // 0-based basis indices
    Vector residual;
};

struct VerificationReport {
    bool jacobi1_ok = true;
    bool jacobi2_ok = true;
    bool mixed_ok = true;
    std::optional<IdentityFailure> first_failure;

    bool ok() const { return jacobi1_ok && jacobi2_ok && mixed_ok; }
};

/// Checks both Jacobi identities and the mixed Jacobi identity on all basis
/// triples i < j < k.
VerificationReport verify(const CompatibleLieAlgebra& g);

/// Jacobiator J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] for one bracket.
Vector jacobiator(const CompatibleLieAlgebra& g, Bracket w, const Vector& x, const Vector& y, const Vector& z);
/// Six-term mixed Jacobi expression.
Vector mixed_jacobiator(const CompatibleLieAlgebra& g, const Vector& x, const Vector& y, const Vector& z);

Subspace center(const CompatibleLieAlgebra& g);
Subspace single_center(const CompatibleLieAlgebra& g, Bracket w);
/// [a, b] + {a, b} as a subspace.
Subspace commutator(const CompatibleLieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace single_commutator(const CompatibleLieAlgebra& g, Bracket w, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const CompatibleLieAlgebra& g);
Subspace single_derived_algebra(const CompatibleLieAlgebra& g, Bracket w);

/// Z_0 = g, Z_i = [[g, Z_{i-1}]], listed until the first repeated term (included once).
std::vector<Subspace> lower_central_series(const CompatibleLieAlgebra& g);
std::vector<Subspace> single_lower_central_series(const CompatibleLieAlgebra& g, Bracket w);
bool is_nilpotent(const CompatibleLieAlgebra& g);

bool is_ideal(const CompatibleLieAlgebra& g, const Subspace& s);

struct QuotientAlgebra {
    CompatibleLieAlgebra algebra;
    Matrix projection;  // dim(quotient) x dim(g)
    std::vector<std::size_t> complement_indices;  // basis vectors of g representing the quotient basis
};

/// g / ideal with basis the standard vectors at the non-pivot indices of the ideal.
QuotientAlgebra quotient(const CompatibleLieAlgebra& g, const Subspace& ideal);

/// g + K^k with the new basis vectors appended and central.
CompatibleLieAlgebra direct_sum_with_abelian(const CompatibleLieAlgebra& g, std::size_t k);

/// Same space with the two brackets exchanged.
CompatibleLieAlgebra switched(const CompatibleLieAlgebra& g);

struct CentralComponent {
    Vector central_vector;
    Subspace complement_ideal;
};

/// A central x outside [[g, g]] together with an ideal complementing Kx, if any.
std::optional<CentralComponent> has_central_component_structural(const CompatibleLieAlgebra& g);

/// phi: g -> h (columns are images of basis vectors) preserves both brackets.
bool is_homomorphism(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const Matrix& phi);
/// phi carries [-,-] of g to {-,-} of h and {-,-} of g to [-,-] of h.
bool is_skew_homomorphism(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const Matrix& phi);

/// All right-nested products [x_1, [x_2, ... , x_k]] of length `length` over
/// basis vectors, with every pattern of brackets; true if all vanish.
bool nested_products_vanish(const CompatibleLieAlgebra& g, std::size_t length);

/// Human-readable nonzero relations, e.g. "[e1,e2]=e3  {e1,e3}=2e4".
std::string relations_string(const CompatibleLieAlgebra& g);

} // namespace cla
