#pragma once

// Dense small-matrix kernels over F_p used by the enumeration-heavy parts of
// the library (automorphism groups, isomorphism search, orbit computation).
//
// Every parallel kernel has a serial twin with identical results; the serial
// versions are the reference the tests compare against.

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cla/algebra.hpp"

namespace cla::kernels {

inline constexpr std::size_t kMaxDim = 6;

/// Arithmetic in Z/p for p < 256.
class Zp {
public:
    explicit Zp(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * p_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint8_t> mul_;
};

/// Row-major dense matrix of residues.
struct FpMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    FpMat() = default;
    FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static FpMat from(const Matrix& m);
    Matrix to_matrix(const Field& f) const;
};

/// In-place RREF; returns the rank. Zero rows end up at the bottom.
std::size_t rref_inplace(const Zp& zp, FpMat& m, std::vector<std::size_t>* pivots = nullptr);

/// Canonical byte key of the first `rank` rows of an RREF matrix.
std::string rref_key(const FpMat& m, std::size_t rank);

/// All nonzero vectors of the row space of `basis`, ordered by coefficient tuple.
std::vector<std::array<std::uint32_t, kMaxDim>> span_vectors(const Zp& zp, const FpMat& basis);

/// Structure constants with full antisymmetric storage.
struct FpAlgebra {
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::array<std::vector<std::uint32_t>, 2> t;  // index (i*n + j)*n + k

    static FpAlgebra from(const CompatibleLieAlgebra& g);
    std::uint32_t c(std::size_t w, std::size_t i, std::size_t j, std::size_t k) const
    {
        return t[w][(i * n + j) * n + k];
    }
};

using Column = std::array<std::uint32_t, kMaxDim>;

/// Ranks of x -> λ[x,-] + μ{x,-} at every point (λ:μ) of the projective line,
/// followed by the rank of x -> ([x,-], {x,-}). Isomorphisms preserve it.
std::vector<std::uint8_t> pencil_profile(const Zp& zp, const FpAlgebra& g, const Column& x);

using ColumnMatrix = std::array<Column, kMaxDim>;  // ColumnMatrix[j] = image of e_j

/// Search for invertible linear maps src -> dst preserving both brackets, with
/// φ(e_j) restricted to an allowed subspace of dst for every j.
///
/// Columns are assigned in a precomputed order. A column is forced when some
/// relation β(e_i, e_j) = Σ c_l e_l has every column but one already fixed;
/// otherwise it ranges over the allowed subspace. Each relation is checked as
/// soon as all columns it mentions are assigned.
class MorphismSearch {
public:
    MorphismSearch(const FpAlgebra& src, const FpAlgebra& dst, const std::vector<FpMat>& allowed);

    std::size_t dim() const { return n_; }
    std::uint32_t p() const { return zp_.p(); }
    const Zp& zp() const { return zp_; }

    /// Independent subtrees; branch b fixes the first processed column to its b-th candidate.
    std::size_t branch_count() const;

    /// Visits every solution in branch b; stops early when `visit` returns false.
    /// Returns false iff stopped early.
    template <class Visit>
    bool run_branch(std::size_t branch, Visit&& visit) const;

    Matrix to_matrix(const ColumnMatrix& phi, const Field& f) const;

private:
    struct Relation {
        std::size_t w, i, j;
        std::size_t nterms = 0;
        std::array<std::pair<std::size_t, std::uint32_t>, kMaxDim> terms{};  // src coefficients
    };
    struct Term {
        std::size_t a, b, k;
        std::uint32_t c;
    };
    struct Step {
        std::size_t column = 0;
        bool forced = false;
        Relation force{};
        std::uint32_t force_inv = 0;
        std::vector<Relation> checks;
    };
    struct State {
        ColumnMatrix phi{};
        std::array<Column, kMaxDim> echelon{};
        std::array<std::size_t, kMaxDim> echelon_pivot{};
        std::size_t rank = 0;
    };

    void dst_bracket(std::size_t w, const Column& u, const Column& v, Column& out) const;
    bool relation_holds(const Relation& r, const State& s) const;
    void force_column(const Step& step, State& s, Column& out) const;
    bool allowed_contains(std::size_t column, const Column& v) const;
    bool push_independent(State& s, const Column& v) const;

    template <class Visit>
    bool descend(std::size_t depth, State& s, Visit& visit) const;

    std::size_t n_;
    Zp zp_;
    FpAlgebra src_;
    std::array<std::vector<Term>, 2> dst_terms_;
    std::vector<FpMat> allowed_;
    std::vector<std::vector<std::size_t>> allowed_pivots_;
    std::vector<std::vector<Column>> candidates_;
    std::vector<Step> steps_;
};

// ---------------------------------------------------------------------------
// serial reference kernels

namespace serial {

std::size_t count_morphisms(const MorphismSearch& search);
std::optional<ColumnMatrix> find_morphism(const MorphismSearch& search);

} // namespace serial

// ---------------------------------------------------------------------------
// OpenMP kernels (branches distributed dynamically over threads)

namespace parallel {

std::size_t count_morphisms(const MorphismSearch& search);
/// Returns the solution from the lowest-numbered branch containing one, so the
/// result matches the serial kernel.
std::optional<ColumnMatrix> find_morphism(const MorphismSearch& search);

} // namespace parallel

/// Induced action on subspaces of H² for orbit computations.
///
/// `reps` (h x 2m) holds the chosen H² representatives in cocycle coordinates,
/// `projector` (h x 2m) maps Z² coordinates to H² coordinates.
class H2Action {
public:
    H2Action(std::size_t n, const Zp& zp, FpMat reps, FpMat projector);

    std::size_t h2_dim() const { return reps_.rows; }
    /// Cocycle coordinates of the rows of an H²-coordinate matrix.
    FpMat lift(const FpMat& w) const;
    /// RREF of the H² image of the lifted rows under φ; returns the canonical key.
    std::string image_key(const FpMat& lifted, const ColumnMatrix& phi) const;
    /// Same, returning the matrix.
    FpMat image(const FpMat& lifted, const ColumnMatrix& phi) const;

private:
    std::size_t n_;
    std::size_t m_;
    Zp zp_;
    FpMat reps_;
    FpMat projector_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

namespace serial {
/// Keys of { W φ : φ in Aut } for a seed given by its lifted rows.
std::vector<std::string> orbit_keys(const MorphismSearch& aut, const H2Action& action, const FpMat& lifted);
} // namespace serial

namespace parallel {
std::vector<std::string> orbit_keys(const MorphismSearch& aut, const H2Action& action, const FpMat& lifted);
} // namespace parallel

// ---------------------------------------------------------------------------

template <class Visit>
bool MorphismSearch::run_branch(std::size_t branch, Visit&& visit) const
{
    State s;
    if (n_ == 0)
        return branch == 0 ? static_cast<bool>(visit(s.phi)) : true;
    const Step& first = steps_[0];
    const Column& v = candidates_[first.column][branch];
    if (!push_independent(s, v))
        return true;
    s.phi[first.column] = v;
    for (const auto& r : first.checks)
        if (!relation_holds(r, s))
            return true;
    return descend(1, s, visit);
}

template <class Visit>
bool MorphismSearch::descend(std::size_t depth, State& s, Visit& visit) const
{
    if (depth == n_)
        return static_cast<bool>(visit(static_cast<const ColumnMatrix&>(s.phi)));
    const Step& step = steps_[depth];
    auto try_column = [&](const Column& v) -> bool {
        State next = s;
        if (!push_independent(next, v))
            return true;
        next.phi[step.column] = v;
        for (const auto& r : step.checks)
            if (!relation_holds(r, next))
                return true;
        return descend(depth + 1, next, visit);
    };
    if (step.forced) {
        Column v{};
        force_column(step, s, v);
        if (!allowed_contains(step.column, v))
            return true;
        return try_column(v);
    }
    for (const auto& v : candidates_[step.column])
        if (!try_column(v))
            return false;
    return true;
}

} // namespace cla::kernels
