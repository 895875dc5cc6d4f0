#include "cla/cohomology.hpp"

namespace cla {

std::size_t pair_count(std::size_t n)
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

namespace {

std::size_t lex_index(std::size_t n, std::size_t i, std::size_t j)
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Adds the coefficients of u -> form(v, e_c) to `row`, where the form's
// coordinates start at `offset` in the unknown vector.
void add_form_terms(Vector& row, std::size_t offset, std::size_t n, const Vector& v, std::size_t c)
{
    for (std::size_t l = 0; l < n; ++l) {
        if (v[l].is_zero() || l == c)
            continue;
        if (l < c)
            row[offset + pair_index(n, l, c)] += v[l];
        else
            row[offset + pair_index(n, c, l)] -= v[l];
    }
}

Scalar evaluate(const Matrix& gram, const Vector& x, const Vector& y)
{
    Scalar s = Scalar::zero(gram.field());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero())
            continue;
        for (std::size_t b = 0; b < y.size(); ++b)
            if (!y[b].is_zero() && !gram(a, b).is_zero())
                s += x[a] * gram(a, b) * y[b];
    }
    return s;
}

// ω(β(x,y),z) + ω(β(z,x),y) + ω(β(y,z),x)
Scalar cyclic(const CompatibleLieAlgebra& g, const Matrix& gram, Bracket w, const Vector& x, const Vector& y,
              const Vector& z)
{
    return evaluate(gram, g.bracket(w, x, y), z) + evaluate(gram, g.bracket(w, z, x), y) +
           evaluate(gram, g.bracket(w, y, z), x);
}

} // namespace

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index)
{
    std::size_t m = pair_count(n);
    if (index >= m)
        throw DimensionError("pair index out of range");
    std::size_t lex = m - 1 - index;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t row = n - 1 - i;
        if (lex < row)
            return {i, i + 1 + lex};
        lex -= row;
    }
    throw DimensionError("pair index out of range");
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j)
{
    if (i >= j || j >= n)
        throw DimensionError("pair_index expects i < j < n");
    return pair_count(n) - 1 - lex_index(n, i, j);
}

Matrix delta_form(const Field& f, std::size_t n, std::size_t i, std::size_t j)
{
    Matrix m(f, n, n);
    m(i, j) = Scalar::one(f);
    m(j, i) = -Scalar::one(f);
    return m;
}

ScalarCocycle ScalarCocycle::zero(const Field& f, std::size_t n)
{
    return {Matrix(f, n, n), Matrix(f, n, n)};
}

ScalarCocycle ScalarCocycle::from_coordinates(const Field& f, std::size_t n, const Vector& coords)
{
    std::size_t m = pair_count(n);
    if (coords.size() != 2 * m)
        throw DimensionError("cocycle coordinate vector has wrong length");
    ScalarCocycle c = zero(f, n);
    for (std::size_t t = 0; t < m; ++t) {
        auto [i, j] = pair_at(n, t);
        c.under(i, j) = coords[t];
        c.under(j, i) = -coords[t];
        c.tilde(i, j) = coords[m + t];
        c.tilde(j, i) = -coords[m + t];
    }
    return c;
}

Vector ScalarCocycle::coordinates() const
{
    std::size_t n = dim();
    std::size_t m = pair_count(n);
    Vector v = zero_vector(under.field(), 2 * m);
    for (std::size_t t = 0; t < m; ++t) {
        auto [i, j] = pair_at(n, t);
        v[t] = under(i, j);
        v[m + t] = tilde(i, j);
    }
    return v;
}

ScalarCocycle operator+(const ScalarCocycle& a, const ScalarCocycle& b)
{
    return {a.under + b.under, a.tilde + b.tilde};
}

ScalarCocycle operator*(const Scalar& c, const ScalarCocycle& a)
{
    return {c * a.under, c * a.tilde};
}

VectorCocycle decompose_vector_cocycle(const VValuedCocycle& omega)
{
    const Field& f = omega.under.field();
    std::size_t m = pair_count(omega.n);
    if (omega.under.rows() != m || omega.tilde.rows() != m || omega.under.cols() != omega.s ||
        omega.tilde.cols() != omega.s)
        throw DimensionError("V-valued cocycle has inconsistent shape");
    VectorCocycle out;
    for (std::size_t c = 0; c < omega.s; ++c) {
        Vector coords = zero_vector(f, 2 * m);
        for (std::size_t t = 0; t < m; ++t) {
            coords[t] = omega.under(t, c);
            coords[m + t] = omega.tilde(t, c);
        }
        out.components.push_back(ScalarCocycle::from_coordinates(f, omega.n, coords));
    }
    return out;
}

VValuedCocycle assemble(const Field& f, std::size_t n, const VectorCocycle& components)
{
    std::size_t m = pair_count(n);
    VValuedCocycle out{n, components.s(), Matrix(f, m, components.s()), Matrix(f, m, components.s())};
    for (std::size_t c = 0; c < components.s(); ++c) {
        if (components.components[c].dim() != n)
            throw DimensionError("cocycle component of the wrong dimension");
        Vector coords = components.components[c].coordinates();
        for (std::size_t t = 0; t < m; ++t) {
            out.under(t, c) = coords[t];
            out.tilde(t, c) = coords[m + t];
        }
    }
    return out;
}

CocycleResidual cocycle_residual(const CompatibleLieAlgebra& g, const ScalarCocycle& omega)
{
    std::size_t n = g.dim();
    if (omega.dim() != n)
        throw DimensionError("cocycle dimension differs from the algebra dimension");
    const Field& f = g.field();
    CocycleResidual r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j), z = unit_vector(f, n, k);
                if (!cyclic(g, omega.under, Bracket::First, x, y, z).is_zero())
                    r.under_ok = false;
                if (!cyclic(g, omega.tilde, Bracket::Second, x, y, z).is_zero())
                    r.tilde_ok = false;
                Scalar mixed = cyclic(g, omega.under, Bracket::Second, x, y, z) +
                               cyclic(g, omega.tilde, Bracket::First, x, y, z);
                if (!mixed.is_zero())
                    r.mixed_ok = false;
            }
    return r;
}

bool is_cocycle(const CompatibleLieAlgebra& g, const ScalarCocycle& omega)
{
    return cocycle_residual(g, omega).ok();
}

Subspace cocycle_subspace(const CompatibleLieAlgebra& g)
{
    std::size_t n = g.dim();
    std::size_t m = pair_count(n);
    const Field& f = g.field();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, k}, {k, i, j}, {j, k, i}}};
                Vector under_eq = zero_vector(f, 2 * m);
                Vector tilde_eq = zero_vector(f, 2 * m);
                Vector mixed_eq = zero_vector(f, 2 * m);
                for (const auto& [a, b, c] : cyc) {
                    Vector sq = g.product(Bracket::First, a, b);
                    Vector cu = g.product(Bracket::Second, a, b);
                    add_form_terms(under_eq, 0, n, sq, c);
                    add_form_terms(tilde_eq, m, n, cu, c);
                    add_form_terms(mixed_eq, 0, n, cu, c);
                    add_form_terms(mixed_eq, m, n, sq, c);
                }
                rows.push_back(std::move(under_eq));
                rows.push_back(std::move(tilde_eq));
                rows.push_back(std::move(mixed_eq));
            }
    if (rows.empty())
        return Subspace::full(f, 2 * m);
    return kernel(Matrix::from_rows(f, 2 * m, rows));
}

ScalarCocycle coboundary_of(const CompatibleLieAlgebra& g, const Vector& phi)
{
    std::size_t n = g.dim();
    if (phi.size() != n)
        throw DimensionError("functional has the wrong length");
    const Field& f = g.field();
    ScalarCocycle c = ScalarCocycle::zero(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar u = Scalar::zero(f), t = Scalar::zero(f);
            for (std::size_t k = 0; k < n; ++k) {
                u += phi[k] * g.coefficient(Bracket::First, i, j, k);
                t += phi[k] * g.coefficient(Bracket::Second, i, j, k);
            }
            c.under(i, j) = u;
            c.under(j, i) = -u;
            c.tilde(i, j) = t;
            c.tilde(j, i) = -t;
        }
    return c;
}

Subspace coboundary_subspace(const CompatibleLieAlgebra& g)
{
    std::size_t n = g.dim();
    const Field& f = g.field();
    std::vector<Vector> vecs;
    for (std::size_t l = 0; l < n; ++l)
        vecs.push_back(coboundary_of(g, unit_vector(f, n, l)).coordinates());
    return Subspace::span(f, 2 * pair_count(n), vecs);
}

namespace {

std::vector<ScalarCocycle> to_cocycles(const CompatibleLieAlgebra& g, const Subspace& s)
{
    std::vector<ScalarCocycle> out;
    for (const auto& v : s.basis_vectors())
        out.push_back(ScalarCocycle::from_coordinates(g.field(), g.dim(), v));
    return out;
}

} // namespace

std::vector<ScalarCocycle> cocycle_space(const CompatibleLieAlgebra& g)
{
    return to_cocycles(g, cocycle_subspace(g));
}

std::vector<ScalarCocycle> coboundary_space(const CompatibleLieAlgebra& g)
{
    return to_cocycles(g, coboundary_subspace(g));
}

Vector CohomologyData::project(const ScalarCocycle& omega) const
{
    return quotient.project(omega.coordinates());
}

ScalarCocycle CohomologyData::lift(const Vector& h2_coords) const
{
    return ScalarCocycle::from_coordinates(field, n, quotient.lift(h2_coords));
}

bool CohomologyData::is_coboundary(const ScalarCocycle& omega) const
{
    return b2.contains(omega.coordinates());
}

CohomologyData cohomology(const CompatibleLieAlgebra& g)
{
    CohomologyData h;
    h.n = g.dim();
    h.field = g.field();
    h.z2 = cocycle_subspace(g);
    h.b2 = coboundary_subspace(g);
    h.quotient = quotient_coordinates(h.z2, h.b2);
    h.z2_basis = to_cocycles(g, h.z2);
    h.b2_basis = to_cocycles(g, h.b2);
    for (const auto& row : h.quotient.complement.row_vectors())
        h.h2_reps.push_back(ScalarCocycle::from_coordinates(g.field(), g.dim(), row));
    return h;
}

bool is_vector_coboundary(const CohomologyData& h, const VectorCocycle& omega)
{
    for (const auto& c : omega.components)
        if (!h.is_coboundary(c))
            return false;
    return true;
}

ScalarCocycle switched(const ScalarCocycle& omega)
{
    return {omega.tilde, omega.under};
}

VectorCocycle switched(const VectorCocycle& omega)
{
    VectorCocycle out;
    for (const auto& c : omega.components)
        out.components.push_back(switched(c));
    return out;
}

} // namespace cla
