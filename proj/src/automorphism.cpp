#include "cla/automorphism.hpp"

#include <map>
#include <mutex>

#include "cla/error.hpp"

namespace cla {

namespace {

Subspace centralizer(const CompatibleLieAlgebra& g, const std::vector<Bracket>& which, const Subspace& s)
{
    std::size_t n = g.dim();
    Matrix stacked(g.field(), 0, n);
    for (Bracket w : which)
        for (const auto& v : s.basis_vectors())
            stacked = stacked.stacked(g.adjoint(w, v));
    if (stacked.rows() == 0)
        return Subspace::full(g.field(), n);
    return kernel(stacked);
}

// Z_0 = 0, Z_{i+1} = {x : [x, g] and {x, g} lie in Z_i}, until it stabilizes.
std::vector<Subspace> upper_central_series(const CompatibleLieAlgebra& g)
{
    const Field& f = g.field();
    std::size_t n = g.dim();
    std::vector<Subspace> out{Subspace::zero(f, n)};
    while (true) {
        const Subspace& cur = out.back();
        Matrix reducer(f, n, n);
        for (std::size_t c = 0; c < n; ++c) {
            Vector r = cur.reduce(unit_vector(f, n, c));
            for (std::size_t k = 0; k < n; ++k)
                reducer(k, c) = r[k];
        }
        Matrix stacked(f, 0, n);
        for (Bracket w : both_brackets)
            for (std::size_t j = 0; j < n; ++j)
                stacked = stacked.stacked(reducer * g.adjoint(w, unit_vector(f, n, j)));
        Subspace next = stacked.rows() == 0 ? Subspace::full(f, n) : kernel(stacked);
        if (next == cur)
            break;
        out.push_back(std::move(next));
    }
    return out;
}

std::string cache_key(const CompatibleLieAlgebra& g)
{
    return std::to_string(g.field().characteristic()) + "|" + g.canonical_key();
}

} // namespace

std::vector<Subspace> characteristic_subspaces(const CompatibleLieAlgebra& g)
{
    std::vector<Subspace> out;
    out.push_back(center(g));
    out.push_back(single_center(g, Bracket::First));
    out.push_back(single_center(g, Bracket::Second));
    Subspace derived = derived_algebra(g);
    out.push_back(derived);
    out.push_back(single_derived_algebra(g, Bracket::First));
    out.push_back(single_derived_algebra(g, Bracket::Second));
    for (auto& s : lower_central_series(g))
        out.push_back(std::move(s));
    for (Bracket w : both_brackets)
        for (auto& s : single_lower_central_series(g, w))
            out.push_back(std::move(s));
    for (auto& s : upper_central_series(g))
        out.push_back(std::move(s));
    out.push_back(centralizer(g, {Bracket::First, Bracket::Second}, derived));
    out.push_back(centralizer(g, {Bracket::First}, derived));
    out.push_back(centralizer(g, {Bracket::Second}, derived));
    return out;
}

void check_search_bounds(const CompatibleLieAlgebra& g, const SearchBounds& bounds)
{
    if (g.field().is_rational())
        throw UnsupportedFieldError("exhaustive search needs a finite field; Q is not supported");
    if (g.dim() > bounds.max_dim)
        throw ResourceError("dimension " + std::to_string(g.dim()) + " exceeds the search bound " +
                            std::to_string(bounds.max_dim));
    if (g.field().characteristic() > bounds.max_p)
        throw ResourceError("p = " + std::to_string(g.field().characteristic()) + " exceeds the search bound " +
                            std::to_string(bounds.max_p));
}

std::optional<kernels::MorphismSearch> morphism_search(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h)
{
    if (!(g.field() == h.field()))
        throw FieldError("algebras are over different fields");
    if (g.dim() != h.dim())
        return std::nullopt;
    const Field& f = g.field();
    std::size_t n = g.dim();
    auto sg = characteristic_subspaces(g);
    auto sh = characteristic_subspaces(h);
    if (sg.size() != sh.size())
        return std::nullopt;
    for (std::size_t q = 0; q < sg.size(); ++q)
        if (sg[q].dim() != sh[q].dim())
            return std::nullopt;
    std::vector<kernels::FpMat> allowed;
    for (std::size_t j = 0; j < n; ++j) {
        Subspace target = Subspace::full(f, n);
        Vector e = unit_vector(f, n, j);
        for (std::size_t q = 0; q < sg.size(); ++q)
            if (sg[q].dim() < n && sg[q].contains(e))
                target = subspace_intersect(target, sh[q]);
        kernels::FpMat m = kernels::FpMat::from(target.basis());
        m.cols = n;
        allowed.push_back(std::move(m));
    }
    return kernels::MorphismSearch(kernels::FpAlgebra::from(g), kernels::FpAlgebra::from(h), allowed);
}

void for_each_automorphism(const CompatibleLieAlgebra& g, const std::function<bool(const Matrix&)>& visit,
                           const SearchBounds& bounds)
{
    check_search_bounds(g, bounds);
    auto search = morphism_search(g, g);
    const Field& f = g.field();
    for (std::size_t b = 0; b < search->branch_count(); ++b) {
        bool more = search->run_branch(b, [&](const kernels::ColumnMatrix& phi) {
            return visit(search->to_matrix(phi, f));
        });
        if (!more)
            return;
    }
}

std::vector<Matrix> automorphisms(const CompatibleLieAlgebra& g, const SearchBounds& bounds)
{
    std::vector<Matrix> out;
    for_each_automorphism(
        g,
        [&](const Matrix& m) {
            out.push_back(m);
            return true;
        },
        bounds);
    return out;
}

std::size_t automorphism_count(const CompatibleLieAlgebra& g, const SearchBounds& bounds, Backend backend)
{
    static std::mutex mutex;
    static std::map<std::string, std::size_t> cache;
    check_search_bounds(g, bounds);
    std::string key = cache_key(g);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto search = morphism_search(g, g);
    std::size_t count = backend == Backend::Serial ? kernels::serial::count_morphisms(*search)
                                                   : kernels::parallel::count_morphisms(*search);
    std::lock_guard lock(mutex);
    cache.emplace(key, count);
    return count;
}

ScalarCocycle act_on_cocycle(const ScalarCocycle& omega, const Matrix& phi)
{
    if (phi.rows() != omega.dim() || phi.cols() != omega.dim())
        throw DimensionError("automorphism and cocycle dimensions differ");
    Matrix t = phi.transpose();
    return {t * omega.under * phi, t * omega.tilde * phi};
}

VectorCocycle act_on_cocycle(const VectorCocycle& omega, const Matrix& phi)
{
    VectorCocycle out;
    for (const auto& c : omega.components)
        out.components.push_back(act_on_cocycle(c, phi));
    return out;
}

Vector act_on_class(const CohomologyData& h, const Vector& cls, const Matrix& phi)
{
    return h.project(act_on_cocycle(h.lift(cls), phi));
}

Subspace act_on_h2_subspace(const CohomologyData& h, const Subspace& w, const Matrix& phi)
{
    if (w.ambient_dim() != h.h2_dim())
        throw DimensionError("subspace is not in H² coordinates");
    std::vector<Vector> images;
    for (const auto& v : w.basis_vectors())
        images.push_back(act_on_class(h, v, phi));
    return Subspace::span(h.field, h.h2_dim(), images);
}

} // namespace cla
