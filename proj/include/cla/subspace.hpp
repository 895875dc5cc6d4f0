#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cla/matrix.hpp"

namespace cla {

/// Linear subspace of F^n stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so equality of subspaces is entrywise equality of
/// the basis matrices and `key()` is a canonical hashable form.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const Field& f, std::size_t ambient);
    static Subspace full(const Field& f, std::size_t ambient);
    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    /// v minus its components along the basis rows, eliminating the pivot entries.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v with respect to the basis rows (v must lie in the subspace).
    Vector coordinates(const Vector& v) const;

    std::string key() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& whole, const Subspace& part);
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Coordinates on whole/part.
///
/// The complement of `part` inside `whole` is spanned by the basis rows of
/// `whole` sitting at the non-pivot positions of `part` (written in `whole`'s
/// coordinates). `projector` maps an ambient vector of `whole` to its
/// complement coordinates and vanishes exactly on `part`.
struct QuotientCoordinates {
    Subspace whole;
    Subspace part;
    Matrix complement;  // rows: complement basis in ambient coordinates
    Matrix projector;   // complement-dim x ambient
    Vector project(const Vector& v) const;
    Vector lift(const Vector& coords) const;
    std::size_t dim() const { return complement.rows(); }
};

QuotientCoordinates quotient_coordinates(const Subspace& whole, const Subspace& part);

} // namespace cla
