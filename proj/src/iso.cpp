#include "cla/iso.hpp"

#include <random>
#include <sstream>

#include "cla/error.hpp"
#include "cla/extension.hpp"

namespace cla {

std::pair<std::size_t, std::size_t> Fingerprint::derived_pair() const
{
    return std::minmax(derived_first, derived_second);
}

std::string Fingerprint::to_string() const
{
    std::ostringstream out;
    out << "dim=" << dim << " Z=" << center << " Z1=" << center_first << " Z2=" << center_second
        << " D=" << derived << " LCS=";
    for (std::size_t i = 0; i < lower_central.size(); ++i)
        out << (i ? "," : "") << lower_central[i];
    out << " Z^2=" << cocycles << " B^2=" << coboundaries << " D1=" << derived_first << " D2=" << derived_second;
    return out.str();
}

Fingerprint fingerprint(const CompatibleLieAlgebra& g)
{
    Fingerprint fp;
    fp.dim = g.dim();
    fp.center = center(g).dim();
    fp.center_first = single_center(g, Bracket::First).dim();
    fp.center_second = single_center(g, Bracket::Second).dim();
    fp.derived = derived_algebra(g).dim();
    for (const auto& s : lower_central_series(g))
        fp.lower_central.push_back(s.dim());
    fp.cocycles = cocycle_subspace(g).dim();
    fp.coboundaries = coboundary_subspace(g).dim();
    fp.derived_first = single_derived_algebra(g, Bracket::First).dim();
    fp.derived_second = single_derived_algebra(g, Bracket::Second).dim();
    return fp;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Isomorphic:
        return "isomorphic";
    case Verdict::NonIsomorphic:
        return "non-isomorphic";
    case Verdict::Unknown:
        return "unknown";
    }
    return "unknown";
}

IsoResult is_isomorphic(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const SearchBounds& bounds,
                        Backend backend)
{
    if (!(g.field() == h.field()))
        throw FieldError("cannot compare algebras over " + g.field().to_string() + " and " + h.field().to_string());
    if (g.dim() != h.dim())
        return {Verdict::NonIsomorphic, std::nullopt, "dimensions differ"};
    if (g == h)
        return {Verdict::Isomorphic, Matrix::identity(g.field(), g.dim()), "identical structure constants"};
    Fingerprint fg = fingerprint(g), fh = fingerprint(h);
    if (!(fg == fh))
        return {Verdict::NonIsomorphic, std::nullopt, "fingerprints differ: " + fg.to_string() + " vs " + fh.to_string()};
    if (g.field().is_rational())
        return {Verdict::Unknown, std::nullopt, "no exhaustive search over Q"};
    check_search_bounds(g, bounds);
    auto search = morphism_search(g, h);
    if (!search)
        return {Verdict::NonIsomorphic, std::nullopt, "characteristic subspaces differ in dimension"};
    auto found = backend == Backend::Serial ? kernels::serial::find_morphism(*search)
                                            : kernels::parallel::find_morphism(*search);
    if (!found)
        return {Verdict::NonIsomorphic, std::nullopt, "exhaustive search found no isomorphism"};
    Matrix phi = search->to_matrix(*found, g.field());
    if (!is_homomorphism(g, h, phi) || !inverse(phi))
        throw ContractError("isomorphism search returned an invalid witness");
    return {Verdict::Isomorphic, phi, "witness found by search"};
}

IsoResult is_skew_isomorphic(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const SearchBounds& bounds,
                             Backend backend)
{
    return is_isomorphic(g, switched(h), bounds, backend);
}

CompatibleLieAlgebra random_nilpotent(std::size_t dim, const Field& f, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto random_scalar = [&]() {
        if (f.is_prime())
            return Scalar(f, static_cast<long>(rng() % f.characteristic()));
        return Scalar(f, static_cast<long>(rng() % 5) - 2);
    };
    CompatibleLieAlgebra g(f, 0);
    while (g.dim() < dim) {
        std::size_t room = dim - g.dim();
        std::size_t s = 1 + static_cast<std::size_t>(rng() % std::min<std::size_t>(room, 2));
        auto basis = cocycle_space(g);
        VectorCocycle omega;
        for (std::size_t c = 0; c < s; ++c) {
            ScalarCocycle w = ScalarCocycle::zero(f, g.dim());
            for (const auto& b : basis)
                w = w + random_scalar() * b;
            omega.components.push_back(std::move(w));
        }
        g = central_extension({g, omega});
    }
    g.set_label("random(" + std::to_string(dim) + "," + f.to_string() + "," + std::to_string(seed) + ")");
    return g;
}

} // namespace cla
