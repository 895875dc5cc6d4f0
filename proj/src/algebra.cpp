#include "cla/algebra.hpp"

#include <functional>

namespace cla {

namespace {

std::size_t index_of(Bracket w)
{
    return static_cast<std::size_t>(w);
}

std::string identity_name(int which)
{
    switch (which) {
    case 0:
        return "jacobi1";
    case 1:
        return "jacobi2";
    default:
        return "mixed";
    }
}

} // namespace

CompatibleLieAlgebra::CompatibleLieAlgebra(const Field& f, std::size_t dim, std::string label)
    : field_(f), dim_(dim), label_(std::move(label))
{
    std::size_t pairs = dim * (dim > 0 ? dim - 1 : 0) / 2;
    for (auto& c : constants_)
        c.assign(pairs * dim, Scalar::zero(f));
}

CompatibleLieAlgebra CompatibleLieAlgebra::abelian(const Field& f, std::size_t dim)
{
    return CompatibleLieAlgebra(f, dim);
}

std::size_t CompatibleLieAlgebra::slot(std::size_t i, std::size_t j) const
{
    // i < j; pairs enumerated row by row: (0,1),(0,2),...,(1,2),...
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void CompatibleLieAlgebra::set_product(Bracket w, std::size_t i, std::size_t j, const Vector& value)
{
    if (value.size() != dim_)
        throw DimensionError("product value has wrong length");
    for (std::size_t k = 0; k < dim_; ++k)
        set_coefficient(w, i, j, k, value[k]);
}

void CompatibleLieAlgebra::set_coefficient(Bracket w, std::size_t i, std::size_t j, std::size_t k, const Scalar& c)
{
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionError("basis index out of range");
    if (!(c.field() == field_))
        throw FieldError("structure constant from a different field");
    if (i == j) {
        if (!c.is_zero())
            throw ContractError("a bracket of a vector with itself must vanish");
        return;
    }
    if (i < j)
        constants_[index_of(w)][slot(i, j) * dim_ + k] = c;
    else
        constants_[index_of(w)][slot(j, i) * dim_ + k] = -c;
}

Scalar CompatibleLieAlgebra::coefficient(Bracket w, std::size_t i, std::size_t j, std::size_t k) const
{
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionError("basis index out of range");
    if (i == j)
        return Scalar::zero(field_);
    if (i < j)
        return constants_[index_of(w)][slot(i, j) * dim_ + k];
    return -constants_[index_of(w)][slot(j, i) * dim_ + k];
}

Vector CompatibleLieAlgebra::product(Bracket w, std::size_t i, std::size_t j) const
{
    Vector v = zero_vector(field_, dim_);
    if (i == j)
        return v;
    for (std::size_t k = 0; k < dim_; ++k)
        v[k] = coefficient(w, i, j, k);
    return v;
}

Vector CompatibleLieAlgebra::bracket(Bracket w, const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionError("bracket arguments must have length " + std::to_string(dim_));
    Vector out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                Scalar s = coefficient(w, i, j, k);
                if (!s.is_zero())
                    out[k] += c * s;
            }
        }
    }
    return out;
}

Matrix CompatibleLieAlgebra::adjoint(Bracket w, const Vector& x) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = bracket(w, x, unit_vector(field_, dim_, j));
        for (std::size_t k = 0; k < dim_; ++k)
            m(k, j) = col[k];
    }
    return m;
}

bool CompatibleLieAlgebra::is_abelian() const
{
    for (const auto& c : constants_)
        for (const auto& x : c)
            if (!x.is_zero())
                return false;
    return true;
}

std::string CompatibleLieAlgebra::canonical_key() const
{
    std::string k = field_.to_string() + "/" + std::to_string(dim_);
    for (const auto& c : constants_) {
        k += '|';
        for (const auto& x : c) {
            k += x.to_string();
            k += ',';
        }
    }
    return k;
}

bool operator==(const CompatibleLieAlgebra& a, const CompatibleLieAlgebra& b)
{
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_;
}

Vector jacobiator(const CompatibleLieAlgebra& g, Bracket w, const Vector& x, const Vector& y, const Vector& z)
{
    Vector r = g.bracket(w, g.bracket(w, x, y), z);
    r = r + g.bracket(w, g.bracket(w, y, z), x);
    return r + g.bracket(w, g.bracket(w, z, x), y);
}

Vector mixed_jacobiator(const CompatibleLieAlgebra& g, const Vector& x, const Vector& y, const Vector& z)
{
    const Bracket a = Bracket::First;
    const Bracket b = Bracket::Second;
    Vector r = g.bracket(b, g.bracket(a, x, y), z);
    r = r + g.bracket(b, g.bracket(a, y, z), x);
    r = r + g.bracket(b, g.bracket(a, z, x), y);
    r = r + g.bracket(a, g.bracket(b, x, y), z);
    r = r + g.bracket(a, g.bracket(b, y, z), x);
    return r + g.bracket(a, g.bracket(b, z, x), y);
}

VerificationReport verify(const CompatibleLieAlgebra& g)
{
    VerificationReport report;
    const Field& f = g.field();
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j), z = unit_vector(f, n, k);
                std::array<Vector, 3> residuals{jacobiator(g, Bracket::First, x, y, z),
                                                jacobiator(g, Bracket::Second, x, y, z),
                                                mixed_jacobiator(g, x, y, z)};
                std::array<bool*, 3> flags{&report.jacobi1_ok, &report.jacobi2_ok, &report.mixed_ok};
                for (int which = 0; which < 3; ++which) {
                    if (is_zero(residuals[which]))
                        continue;
                    *flags[which] = false;
                    if (!report.first_failure)
                        report.first_failure = IdentityFailure{identity_name(which), {i, j, k}, residuals[which]};
                }
            }
    return report;
}

Subspace single_center(const CompatibleLieAlgebra& g, Bracket w)
{
    std::size_t n = g.dim();
    const Field& f = g.field();
    // row (j, k): sum_i x_i c[i][j][k] = 0
    Matrix m(f, n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                m(j * n + k, i) = g.coefficient(w, i, j, k);
    return kernel(m);
}

Subspace center(const CompatibleLieAlgebra& g)
{
    std::size_t n = g.dim();
    const Field& f = g.field();
    Matrix m(f, 2 * n * n, n);
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    m(b * n * n + j * n + k, i) = g.coefficient(both_brackets[b], i, j, k);
    return kernel(m);
}

Subspace single_commutator(const CompatibleLieAlgebra& g, Bracket w, const Subspace& a, const Subspace& b)
{
    std::vector<Vector> vals;
    for (const auto& u : a.basis_vectors())
        for (const auto& v : b.basis_vectors())
            vals.push_back(g.bracket(w, u, v));
    return Subspace::span(g.field(), g.dim(), vals);
}

Subspace commutator(const CompatibleLieAlgebra& g, const Subspace& a, const Subspace& b)
{
    return subspace_sum(single_commutator(g, Bracket::First, a, b), single_commutator(g, Bracket::Second, a, b));
}

Subspace derived_algebra(const CompatibleLieAlgebra& g)
{
    Subspace all = Subspace::full(g.field(), g.dim());
    return commutator(g, all, all);
}

Subspace single_derived_algebra(const CompatibleLieAlgebra& g, Bracket w)
{
    Subspace all = Subspace::full(g.field(), g.dim());
    return single_commutator(g, w, all, all);
}

namespace {

std::vector<Subspace> series(const CompatibleLieAlgebra& g, const std::function<Subspace(const Subspace&)>& step)
{
    std::vector<Subspace> out{Subspace::full(g.field(), g.dim())};
    while (true) {
        Subspace next = step(out.back());
        if (next == out.back())
            break;
        out.push_back(std::move(next));
    }
    return out;
}

} // namespace

std::vector<Subspace> lower_central_series(const CompatibleLieAlgebra& g)
{
    Subspace all = Subspace::full(g.field(), g.dim());
    return series(g, [&](const Subspace& prev) { return commutator(g, all, prev); });
}

std::vector<Subspace> single_lower_central_series(const CompatibleLieAlgebra& g, Bracket w)
{
    Subspace all = Subspace::full(g.field(), g.dim());
    return series(g, [&](const Subspace& prev) { return single_commutator(g, w, all, prev); });
}

bool is_nilpotent(const CompatibleLieAlgebra& g)
{
    return lower_central_series(g).back().dim() == 0;
}

bool is_ideal(const CompatibleLieAlgebra& g, const Subspace& s)
{
    if (s.ambient_dim() != g.dim())
        throw DimensionError("subspace ambient dimension differs from the algebra dimension");
    Subspace all = Subspace::full(g.field(), g.dim());
    return s.contains(commutator(g, s, all));
}

QuotientAlgebra quotient(const CompatibleLieAlgebra& g, const Subspace& ideal)
{
    if (!is_ideal(g, ideal))
        throw ContractError("quotient: subspace is not an ideal for both brackets");
    const Field& f = g.field();
    std::size_t n = g.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots())
        is_pivot[p] = true;
    QuotientAlgebra q;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i])
            q.complement_indices.push_back(i);
    std::size_t m = q.complement_indices.size();

    // projection: reduce modulo the ideal, then read the non-pivot entries
    q.projection = Matrix(f, m, n);
    for (std::size_t c = 0; c < n; ++c) {
        Vector r = ideal.reduce(unit_vector(f, n, c));
        for (std::size_t t = 0; t < m; ++t)
            q.projection(t, c) = r[q.complement_indices[t]];
    }

    q.algebra = CompatibleLieAlgebra(f, m);
    for (Bracket w : both_brackets)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                q.algebra.set_product(w, a, b,
                                      q.projection.apply(g.product(w, q.complement_indices[a], q.complement_indices[b])));
    return q;
}

CompatibleLieAlgebra direct_sum_with_abelian(const CompatibleLieAlgebra& g, std::size_t k)
{
    std::size_t n = g.dim();
    CompatibleLieAlgebra out(g.field(), n + k);
    for (Bracket w : both_brackets)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t c = 0; c < n; ++c)
                    out.set_coefficient(w, i, j, c, g.coefficient(w, i, j, c));
    return out;
}

CompatibleLieAlgebra switched(const CompatibleLieAlgebra& g)
{
    std::size_t n = g.dim();
    CompatibleLieAlgebra out(g.field(), n, g.label().empty() ? std::string{} : "(" + g.label() + ")^s");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                out.set_coefficient(Bracket::First, i, j, c, g.coefficient(Bracket::Second, i, j, c));
                out.set_coefficient(Bracket::Second, i, j, c, g.coefficient(Bracket::First, i, j, c));
            }
    return out;
}

std::optional<CentralComponent> has_central_component_structural(const CompatibleLieAlgebra& g)
{
    const Field& f = g.field();
    std::size_t n = g.dim();
    Subspace z = center(g);
    Subspace d = derived_algebra(g);
    for (const auto& x : z.basis_vectors()) {
        if (d.contains(x))
            continue;
        // Extend a basis of D + Kx by standard vectors; the complement ideal is
        // D plus the added standard vectors (any subspace containing D is an ideal).
        std::vector<Vector> chosen = d.basis_vectors();
        Subspace with_x = subspace_sum(d, Subspace::span(f, n, {x}));
        for (std::size_t i = 0; i < n && with_x.dim() < n; ++i) {
            Vector e = unit_vector(f, n, i);
            if (with_x.contains(e))
                continue;
            chosen.push_back(e);
            with_x = subspace_sum(with_x, Subspace::span(f, n, {e}));
        }
        return CentralComponent{x, Subspace::span(f, n, chosen)};
    }
    return std::nullopt;
}

namespace {

bool maps_bracket(const CompatibleLieAlgebra& g, Bracket wg, const CompatibleLieAlgebra& h, Bracket wh,
                  const Matrix& phi)
{
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = phi.apply(g.product(wg, i, j));
            Vector rhs = h.bracket(wh, phi.column(i), phi.column(j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

void require_morphism_shape(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const Matrix& phi)
{
    if (phi.rows() != h.dim() || phi.cols() != g.dim())
        throw DimensionError("morphism matrix has the wrong shape");
    if (!(g.field() == h.field()) || !(phi.field() == g.field()))
        throw FieldError("morphism between algebras over different fields");
}

} // namespace

bool is_homomorphism(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const Matrix& phi)
{
    require_morphism_shape(g, h, phi);
    return maps_bracket(g, Bracket::First, h, Bracket::First, phi) &&
           maps_bracket(g, Bracket::Second, h, Bracket::Second, phi);
}

bool is_skew_homomorphism(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const Matrix& phi)
{
    require_morphism_shape(g, h, phi);
    return maps_bracket(g, Bracket::First, h, Bracket::Second, phi) &&
           maps_bracket(g, Bracket::Second, h, Bracket::First, phi);
}

bool nested_products_vanish(const CompatibleLieAlgebra& g, std::size_t length)
{
    std::size_t n = g.dim();
    if (length < 2 || n == 0)
        return true;
    const Field& f = g.field();
    std::vector<std::size_t> tuple(length, 0);
    std::size_t patterns = std::size_t{1} << (length - 1);
    while (true) {
        for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
            Vector acc = unit_vector(f, n, tuple[length - 1]);
            for (std::size_t pos = length - 1; pos-- > 0;) {
                Bracket w = (pattern >> pos) & 1U ? Bracket::Second : Bracket::First;
                acc = g.bracket(w, unit_vector(f, n, tuple[pos]), acc);
                if (is_zero(acc))
                    break;
            }
            if (!is_zero(acc))
                return false;
        }
        std::size_t pos = 0;
        while (pos < length && ++tuple[pos] == n)
            tuple[pos++] = 0;
        if (pos == length)
            break;
    }
    return true;
}

namespace {

std::string term(const Scalar& c, std::size_t k, bool first)
{
    std::string basis = "e" + std::to_string(k + 1);
    std::string out;
    if (c.field().is_rational()) {
        mpq_class q = c.rational();
        bool negative = q < 0;
        if (negative)
            q = -q;
        out = negative ? "-" : (first ? "" : "+");
        if (q != 1)
            out += q.get_den() == 1 ? q.get_str() : "(" + q.get_str() + ")";
        return out + basis;
    }
    out = first ? "" : "+";
    if (!c.is_one())
        out += c.to_string();
    return out + basis;
}

} // namespace

std::string relations_string(const CompatibleLieAlgebra& g)
{
    std::string out;
    std::size_t n = g.dim();
    for (Bracket w : both_brackets) {
        const char* open = w == Bracket::First ? "[" : "{";
        const char* close = w == Bracket::First ? "]" : "}";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vector v = g.product(w, i, j);
                if (is_zero(v))
                    continue;
                if (!out.empty())
                    out += "  ";
                out += open + ("e" + std::to_string(i + 1)) + ",e" + std::to_string(j + 1) + close + "=";
                bool first = true;
                for (std::size_t k = 0; k < n; ++k) {
                    if (v[k].is_zero())
                        continue;
                    out += term(v[k], k, first);
                    first = false;
                }
            }
    }
    if (out.empty())
        out = n == 0 ? "zero algebra" : "abelian of dimension " + std::to_string(n);
    return out;
}

} // namespace cla
