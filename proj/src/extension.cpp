#include "cla/extension.hpp"

namespace cla {

CompatibleLieAlgebra central_extension(const ExtensionSpec& spec)
{
    const CompatibleLieAlgebra& g = spec.base;
    std::size_t n = g.dim();
    std::size_t s = spec.s();
    for (std::size_t c = 0; c < s; ++c) {
        const ScalarCocycle& w = spec.cocycle.components[c];
        if (w.dim() != n)
            throw DimensionError("cocycle component " + std::to_string(c + 1) + " has the wrong dimension");
        if (!is_cocycle(g, w))
            throw ContractError("cocycle component " + std::to_string(c + 1) + " is not a 2-cocycle");
    }
    CompatibleLieAlgebra out = direct_sum_with_abelian(g, s);
    for (std::size_t c = 0; c < s; ++c) {
        const ScalarCocycle& w = spec.cocycle.components[c];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                out.set_coefficient(Bracket::First, i, j, n + c, w.under(i, j));
                out.set_coefficient(Bracket::Second, i, j, n + c, w.tilde(i, j));
            }
    }
    return out;
}

Subspace annihilator(const CompatibleLieAlgebra& g, const VectorCocycle& omega)
{
    const Field& f = g.field();
    std::size_t n = g.dim();
    if (omega.s() == 0)
        return Subspace::full(f, n);
    // x in ann iff M x = 0 for every Gram matrix M (rows: M[l][*] gives ω(e_l, x)).
    Matrix stacked(f, 0, n);
    for (const auto& c : omega.components) {
        if (c.dim() != n)
            throw DimensionError("cocycle component has the wrong dimension");
        stacked = stacked.stacked(c.under).stacked(c.tilde);
    }
    return kernel(stacked);
}

bool is_admissible(const CompatibleLieAlgebra& g, const VectorCocycle& omega)
{
    return subspace_intersect(center(g), annihilator(g, omega)).dim() == 0;
}

bool has_central_component_cohomological(const CompatibleLieAlgebra& g, const CohomologyData& h,
                                         const VectorCocycle& omega)
{
    if (!is_admissible(g, omega))
        throw ContractError("central-component test requires an admissible cocycle");
    std::vector<Vector> classes;
    for (const auto& c : omega.components)
        classes.push_back(h.project(c));
    std::size_t r = Subspace::span(g.field(), h.h2_dim(), classes).dim();
    return r < omega.s();
}

bool has_central_component_cohomological(const CompatibleLieAlgebra& g, const VectorCocycle& omega)
{
    return has_central_component_cohomological(g, cohomology(g), omega);
}

ExtensionSpec decompose(const CompatibleLieAlgebra& g)
{
    if (g.dim() == 0)
        throw ContractError("decompose: the zero algebra is not an extension");
    if (!is_nilpotent(g))
        throw ContractError("decompose: algebra is not nilpotent");
    const Field& f = g.field();
    Subspace z = center(g);
    QuotientAlgebra q = quotient(g, z);
    const auto& section = q.complement_indices;  // j(ē_a) = e_{section[a]}
    std::size_t m = section.size();
    std::size_t s = z.dim();

    ExtensionSpec spec{q.algebra, {}};
    spec.base.set_label(g.label().empty() ? std::string{} : g.label() + "/Z");
    for (std::size_t c = 0; c < s; ++c)
        spec.cocycle.components.push_back(ScalarCocycle::zero(f, m));

    for (Bracket w : both_brackets)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                // [j(x), j(y)] - j([x, y]_h) lies in Z(g)
                Vector value = g.product(w, section[a], section[b]);
                Vector lifted = zero_vector(f, g.dim());
                Vector in_quotient = q.algebra.product(w, a, b);
                for (std::size_t t = 0; t < m; ++t)
                    lifted[section[t]] = in_quotient[t];
                Vector coords = z.coordinates(value - lifted);
                for (std::size_t c = 0; c < s; ++c) {
                    Matrix& gram = w == Bracket::First ? spec.cocycle.components[c].under
                                                       : spec.cocycle.components[c].tilde;
                    gram(a, b) = coords[c];
                    gram(b, a) = -coords[c];
                }
            }
    return spec;
}

bool switch_extension_law_holds(const CompatibleLieAlgebra& g, const VectorCocycle& omega)
{
    CompatibleLieAlgebra lhs = central_extension({switched(g), switched(omega)});
    CompatibleLieAlgebra rhs = switched(central_extension({g, omega}));
    return lhs == rhs;
}

} // namespace cla
