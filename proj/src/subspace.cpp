#include "cla/subspace.hpp"

namespace cla {

namespace {

void require_compatible(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("subspaces live in ambient spaces of dimension " + std::to_string(a.ambient_dim()) +
                             " and " + std::to_string(b.ambient_dim()));
    if (!(a.field() == b.field()))
        throw FieldError("subspaces over different fields");
}

} // namespace

Subspace Subspace::zero(const Field& f, std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient)
{
    return row_space(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors)
{
    if (vectors.empty())
        return zero(f, ambient);
    return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
    RrefResult r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = Matrix(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            s.basis_(i, c) = r.reduced(i, c);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("vector length does not match ambient dimension");
    Vector out = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = out[pivots_[i]];
        if (c.is_zero())
            continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (!basis_(i, k).is_zero())
                out[k] -= c * basis_(i, k);
    }
    return out;
}

bool Subspace::contains(const Vector& v) const
{
    return cla::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const
{
    require_compatible(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row_vector(i)))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        throw ContractError("vector is not in the subspace");
    Vector c;
    c.reserve(pivots_.size());
    for (auto p : pivots_)
        c.push_back(v[p]);
    return c;
}

std::string Subspace::key() const
{
    std::string k = std::to_string(ambient_) + ":";
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        for (std::size_t c = 0; c < ambient_; ++c) {
            k += basis_(r, c).to_string();
            k += ',';
        }
        k += ';';
    }
    return k;
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.field() == b.field() && a.basis_ == b.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    const Field& f = a.field();
    std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(f, n);
    // Solve sum_i x_i a_i - sum_j y_j b_j = 0 and map x back into the ambient space.
    Matrix system(f, n, a.dim() + b.dim());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            system(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < b.dim(); ++j)
            system(c, a.dim() + j) = -b.basis()(j, c);
    }
    Subspace sol = kernel(system);
    std::vector<Vector> vecs;
    for (std::size_t r = 0; r < sol.dim(); ++r) {
        Vector v = zero_vector(f, n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            axpy(v, sol.basis()(r, i), a.basis().row_vector(i));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(f, n, vecs);
}

bool subspace_contains(const Subspace& whole, const Subspace& part)
{
    return whole.contains(part);
}

bool subspace_equal(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    return a == b;
}

Vector QuotientCoordinates::project(const Vector& v) const
{
    if (!whole.contains(v))
        throw ContractError("vector outside the quotient's whole space");
    return projector.apply(v);
}

Vector QuotientCoordinates::lift(const Vector& coords) const
{
    if (coords.size() != complement.rows())
        throw DimensionError("quotient coordinate length mismatch");
    Vector v = zero_vector(whole.field(), whole.ambient_dim());
    for (std::size_t i = 0; i < coords.size(); ++i)
        axpy(v, coords[i], complement.row_vector(i));
    return v;
}

QuotientCoordinates quotient_coordinates(const Subspace& whole, const Subspace& part)
{
    require_compatible(whole, part);
    if (!whole.contains(part))
        throw ContractError("quotient_coordinates: part is not contained in whole");
    const Field& f = whole.field();
    std::size_t n = whole.ambient_dim();
    std::size_t w = whole.dim();

    // part written in whole's coordinates (entries at whole's pivot columns)
    std::vector<Vector> part_coords;
    for (std::size_t r = 0; r < part.dim(); ++r)
        part_coords.push_back(whole.coordinates(part.basis().row_vector(r)));
    Subspace part_in_whole = Subspace::span(f, w, part_coords);

    std::vector<bool> is_pivot(w, false);
    for (auto p : part_in_whole.pivots())
        is_pivot[p] = true;
    std::vector<std::size_t> free_positions;
    for (std::size_t i = 0; i < w; ++i)
        if (!is_pivot[i])
            free_positions.push_back(i);

    QuotientCoordinates q{whole, part, Matrix(f, free_positions.size(), n), Matrix(f, free_positions.size(), n)};
    for (std::size_t t = 0; t < free_positions.size(); ++t)
        for (std::size_t c = 0; c < n; ++c)
            q.complement(t, c) = whole.basis()(free_positions[t], c);

    // coord_t(v) = c[free_t] - sum_r c[pivot_r] * part_row_r[free_t], c = whole coordinates of v
    const auto& wp = whole.pivots();
    for (std::size_t t = 0; t < free_positions.size(); ++t) {
        std::size_t ft = free_positions[t];
        q.projector(t, wp[ft]) += Scalar::one(f);
        for (std::size_t r = 0; r < part_in_whole.dim(); ++r) {
            const Scalar& coeff = part_in_whole.basis()(r, ft);
            if (coeff.is_zero())
                continue;
            q.projector(t, wp[part_in_whole.pivots()[r]]) -= coeff;
        }
    }
    return q;
}

} // namespace cla
