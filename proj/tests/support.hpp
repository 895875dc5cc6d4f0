#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cla/classify.hpp"

namespace testing_support {

using namespace cla;

inline constexpr Bracket L = Bracket::First;
inline constexpr Bracket C = Bracket::Second;

// One structure constant, 1-based like the printed relations.
struct Rel {
    Bracket w;
    std::size_t i, j, k;
    long c;
};

inline CompatibleLieAlgebra make(const Field& f, std::size_t n, const std::vector<Rel>& rels, std::string label = {})
{
    CompatibleLieAlgebra g(f, n, std::move(label));
    for (const auto& r : rels)
        g.set_coefficient(r.w, r.i - 1, r.j - 1, r.k - 1, g.coefficient(r.w, r.i - 1, r.j - 1, r.k - 1) + Scalar(f, r.c));
    return g;
}

inline CompatibleLieAlgebra n32(const Field& f) { return make(f, 3, {{L, 1, 2, 3, 1}}); }
inline CompatibleLieAlgebra n33(const Field& f) { return make(f, 3, {{C, 1, 2, 3, 1}}); }
inline CompatibleLieAlgebra n34(const Field& f, long a) { return make(f, 3, {{L, 1, 2, 3, 1}, {C, 1, 2, 3, a}}); }
inline CompatibleLieAlgebra n49(const Field& f, long b)
{
    return make(f, 4, {{L, 1, 2, 3, 1}, {L, 2, 3, 4, 1}, {C, 1, 3, 4, b}});
}

// x, y, z = e1, e2, e3
inline CompatibleLieAlgebra heisenberg_sl2()
{
    return make(Field::rationals(), 3, {{L, 1, 2, 3, 1}, {C, 1, 2, 3, 1}, {C, 1, 3, 1, 2}, {C, 2, 3, 2, -2}});
}
inline CompatibleLieAlgebra non_example()
{
    return make(Field::rationals(), 3, {{L, 1, 2, 1, 1}, {C, 1, 2, 3, 1}, {C, 1, 3, 1, 2}, {C, 2, 3, 2, -2}});
}

// γ_k of the 3-dimensional coordinates: 1..3 on [,], 4..6 on {,} (Δ23, Δ13, Δ12).
inline Vector gamma(const Field& f, std::size_t n, const std::vector<std::pair<std::size_t, long>>& terms)
{
    Vector v = zero_vector(f, 2 * pair_count(n));
    for (auto [k, c] : terms)
        v[k - 1] += Scalar(f, c);
    return v;
}
inline ScalarCocycle gamma_cocycle(const Field& f, std::size_t n, const std::vector<std::pair<std::size_t, long>>& terms)
{
    return ScalarCocycle::from_coordinates(f, n, gamma(f, n, terms));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_); }
    Scalar scalar(const Field& f) { return Scalar(f, static_cast<long>(below(f.characteristic()))); }
    Scalar unit(const Field& f) { return Scalar(f, static_cast<long>(1 + below(f.characteristic() - 1))); }

    Vector vector(const Field& f, std::size_t n)
    {
        Vector v(n);
        for (auto& x : v)
            x = scalar(f);
        return v;
    }
    Matrix matrix(const Field& f, std::size_t r, std::size_t c)
    {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = scalar(f);
        return m;
    }
    Matrix invertible(const Field& f, std::size_t n)
    {
        for (;;) {
            Matrix m = matrix(f, n, n);
            if (!determinant(m).is_zero())
                return m;
        }
    }
    Subspace subspace(const Field& f, std::size_t ambient)
    {
        std::size_t k = below(ambient + 1);
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < k; ++i)
            vs.push_back(vector(f, ambient));
        return Subspace::span(f, ambient, vs);
    }
    ScalarCocycle cocycle(const CompatibleLieAlgebra& g)
    {
        ScalarCocycle out = ScalarCocycle::zero(g.field(), g.dim());
        for (const auto& z : cocycle_space(g))
            out = out + scalar(g.field()) * z;
        return out;
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// The structure carried over by P: [x, y]_h = P[P⁻¹x, P⁻¹y]_g, so P: g -> h is an isomorphism.
inline CompatibleLieAlgebra transport(const CompatibleLieAlgebra& g, const Matrix& p)
{
    Matrix pinv = *inverse(p);
    CompatibleLieAlgebra h(g.field(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            for (auto w : both_brackets)
                h.set_product(w, i, j, p.apply(g.bracket(w, pinv.column(i), pinv.column(j))));
    return h;
}

// Every n x n matrix over F_p, in odometer order. Only for tiny n and p.
template <class Visit>
void for_each_matrix(const Field& f, std::size_t n, Visit&& visit)
{
    std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> digits(n * n, 0);
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n * n; ++i)
            m(i / n, i % n) = Scalar(f, static_cast<long>(digits[i]));
        visit(m);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p)
            digits[i++] = 0;
        if (i == digits.size())
            return;
    }
}

// Naive automorphism group: filter all of GL(n, p) by the homomorphism check.
inline std::vector<Matrix> brute_force_automorphisms(const CompatibleLieAlgebra& g)
{
    std::vector<Matrix> out;
    for_each_matrix(g.field(), g.dim(), [&](const Matrix& m) {
        if (!determinant(m).is_zero() && is_homomorphism(g, g, m))
            out.push_back(m);
    });
    return out;
}

} // namespace testing_support
