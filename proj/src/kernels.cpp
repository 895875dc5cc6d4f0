#include "cla/kernels.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_set>

#include "cla/cohomology.hpp"
#include "cla/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cla::kernels {

Zp::Zp(std::uint32_t p) : p_(p)
{
    if (p < 2 || p > 255 || !is_prime_number(p))
        throw ResourceError("F_p kernels need a prime p below 256, got " + std::to_string(p));
    mul_.resize(static_cast<std::size_t>(p) * p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            mul_[a * p + b] = static_cast<std::uint8_t>(a * b % p);
    inv_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if (a * b % p == 1) {
                inv_[a] = b;
                break;
            }
}

FpMat FpMat::from(const Matrix& m)
{
    if (!m.field().is_prime())
        throw UnsupportedFieldError("F_p kernels need a prime field");
    FpMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).residue();
    return out;
}

Matrix FpMat::to_matrix(const Field& f) const
{
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(f, static_cast<long>((*this)(r, c)));
    return m;
}

std::size_t rref_inplace(const Zp& zp, FpMat& m, std::vector<std::size_t>* pivots)
{
    if (pivots)
        pivots->clear();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pr = rank;
        while (pr < m.rows && m(pr, c) == 0)
            ++pr;
        if (pr == m.rows)
            continue;
        if (pr != rank)
            for (std::size_t k = 0; k < m.cols; ++k)
                std::swap(m(pr, k), m(rank, k));
        std::uint32_t inv = zp.inv(m(rank, c));
        for (std::size_t k = c; k < m.cols; ++k)
            m(rank, k) = zp.mul(m(rank, k), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m(r, c) == 0)
                continue;
            std::uint32_t f = m(r, c);
            for (std::size_t k = c; k < m.cols; ++k)
                m(r, k) = zp.sub(m(r, k), zp.mul(f, m(rank, k)));
        }
        if (pivots)
            pivots->push_back(c);
        ++rank;
    }
    return rank;
}

std::string rref_key(const FpMat& m, std::size_t rank)
{
    std::string key(rank * m.cols, '\0');
    for (std::size_t i = 0; i < rank * m.cols; ++i)
        key[i] = static_cast<char>(m.a[i]);
    return key;
}

std::vector<Column> span_vectors(const Zp& zp, const FpMat& basis)
{
    std::size_t d = basis.rows;
    std::size_t total = 1;
    for (std::size_t r = 0; r < d; ++r)
        total *= zp.p();
    std::vector<Column> out;
    out.reserve(total - 1);
    for (std::size_t code = 1; code < total; ++code) {
        Column v{};
        std::size_t rest = code;
        for (std::size_t r = d; r-- > 0;) {
            std::uint32_t c = static_cast<std::uint32_t>(rest % zp.p());
            rest /= zp.p();
            if (c)
                for (std::size_t k = 0; k < basis.cols; ++k)
                    v[k] = zp.add(v[k], zp.mul(c, basis(r, k)));
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::uint8_t> pencil_profile(const Zp& zp, const FpAlgebra& g, const Column& x)
{
    std::size_t n = g.n;
    // ad[w](k, j) = coefficient of e_k in β_w(x, e_j)
    std::array<FpMat, 2> ad{FpMat(n, n), FpMat(n, n)};
    for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t i = 0; i < n; ++i)
            if (x[i])
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (std::uint32_t c = g.c(w, i, j, k))
                            ad[w](k, j) = zp.add(ad[w](k, j), zp.mul(x[i], c));
    std::vector<std::uint8_t> out;
    for (std::uint32_t pt = 0; pt <= zp.p(); ++pt) {
        // (1 : pt) for pt < p, then (0 : 1)
        std::uint32_t lambda = pt < zp.p() ? 1 : 0;
        std::uint32_t mu = pt < zp.p() ? pt : 1;
        FpMat m(n, n);
        for (std::size_t r = 0; r < n * n; ++r)
            m.a[r] = zp.add(zp.mul(lambda, ad[0].a[r]), zp.mul(mu, ad[1].a[r]));
        out.push_back(static_cast<std::uint8_t>(rref_inplace(zp, m)));
    }
    FpMat both(2 * n, n);
    for (std::size_t r = 0; r < n * n; ++r) {
        both.a[r] = ad[0].a[r];
        both.a[n * n + r] = ad[1].a[r];
    }
    out.push_back(static_cast<std::uint8_t>(rref_inplace(zp, both)));
    return out;
}

FpAlgebra FpAlgebra::from(const CompatibleLieAlgebra& g)
{
    if (!g.field().is_prime())
        throw UnsupportedFieldError("F_p kernels need a prime field");
    if (g.dim() > kMaxDim)
        throw ResourceError("F_p kernels support dimension at most " + std::to_string(kMaxDim));
    FpAlgebra a;
    a.n = g.dim();
    a.p = g.field().characteristic();
    std::size_t n = a.n;
    for (Bracket w : both_brackets) {
        auto& t = a.t[static_cast<std::size_t>(w)];
        t.assign(n * n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    t[(i * n + j) * n + k] = g.coefficient(w, i, j, k).residue();
    }
    return a;
}

MorphismSearch::MorphismSearch(const FpAlgebra& src, const FpAlgebra& dst, const std::vector<FpMat>& allowed)
    : n_(src.n), zp_(src.p), src_(src), allowed_(allowed)
{
    if (dst.n != n_ || dst.p != src.p)
        throw DimensionError("morphism search needs algebras of equal dimension over the same field");
    if (allowed_.size() != n_)
        throw DimensionError("morphism search needs one allowed subspace per basis vector");

    for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = a + 1; b < n_; ++b)
                for (std::size_t k = 0; k < n_; ++k)
                    if (std::uint32_t c = dst.c(w, a, b, k))
                        dst_terms_[w].push_back({a, b, k, c});

    for (auto& m : allowed_) {
        if (m.cols != n_)
            throw DimensionError("allowed subspace has the wrong ambient dimension");
        std::vector<std::size_t> piv;
        std::size_t r = rref_inplace(zp_, m, &piv);
        m.rows = r;
        m.a.resize(r * n_);
        allowed_pivots_.push_back(std::move(piv));
    }
    std::map<Column, std::vector<std::uint8_t>> dst_profiles;
    for (std::size_t j = 0; j < n_; ++j) {
        Column e{};
        e[j] = 1;
        auto want = pencil_profile(zp_, src, e);
        std::vector<Column> keep;
        for (const auto& v : span_vectors(zp_, allowed_[j])) {
            auto it = dst_profiles.find(v);
            if (it == dst_profiles.end())
                it = dst_profiles.emplace(v, pencil_profile(zp_, dst, v)).first;
            if (it->second == want)
                keep.push_back(v);
        }
        candidates_.push_back(std::move(keep));
    }

    // Relations of src, each with its support.
    std::vector<Relation> relations;
    std::vector<bool> in_support(n_, false);
    std::vector<bool> feeds(n_, false);
    for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                Relation r{w, i, j};
                for (std::size_t l = 0; l < n_; ++l)
                    if (std::uint32_t c = src.c(w, i, j, l)) {
                        r.terms[r.nterms++] = {l, c};
                        in_support[l] = true;
                        feeds[i] = feeds[j] = true;
                    }
                relations.push_back(r);
            }

    std::vector<bool> assigned(n_, false);
    std::vector<bool> placed(relations.size(), false);
    auto mentions_only_assigned = [&](const Relation& r) {
        if (!assigned[r.i] || !assigned[r.j])
            return false;
        for (std::size_t t = 0; t < r.nterms; ++t)
            if (!assigned[r.terms[t].first])
                return false;
        return true;
    };
    for (std::size_t depth = 0; depth < n_; ++depth) {
        Step step;
        bool found = false;
        for (const auto& r : relations) {
            if (!assigned[r.i] || !assigned[r.j])
                continue;
            std::size_t open = 0, target = 0;
            std::uint32_t coef = 0;
            for (std::size_t t = 0; t < r.nterms; ++t)
                if (!assigned[r.terms[t].first]) {
                    ++open;
                    target = r.terms[t].first;
                    coef = r.terms[t].second;
                }
            if (open == 1) {
                step.column = target;
                step.forced = true;
                step.force = r;
                step.force_inv = zp_.inv(coef);
                found = true;
                break;
            }
        }
        if (!found) {
            // Generators feeding nonzero products first, then the fewest candidates.
            std::size_t best = n_;
            auto rank = [&](std::size_t c) { return std::make_tuple(in_support[c], !feeds[c], candidates_[c].size()); };
            for (std::size_t c = 0; c < n_; ++c)
                if (!assigned[c] && (best == n_ || rank(c) < rank(best)))
                    best = c;
            step.column = best;
        }
        assigned[step.column] = true;
        for (std::size_t q = 0; q < relations.size(); ++q)
            if (!placed[q] && mentions_only_assigned(relations[q])) {
                placed[q] = true;
                step.checks.push_back(relations[q]);
            }
        steps_.push_back(std::move(step));
    }
}

std::size_t MorphismSearch::branch_count() const
{
    if (n_ == 0)
        return 1;
    return candidates_[steps_[0].column].size();
}

Matrix MorphismSearch::to_matrix(const ColumnMatrix& phi, const Field& f) const
{
    Matrix m(f, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i)
            m(i, j) = Scalar(f, static_cast<long>(phi[j][i]));
    return m;
}

void MorphismSearch::dst_bracket(std::size_t w, const Column& u, const Column& v, Column& out) const
{
    out.fill(0);
    for (const auto& t : dst_terms_[w]) {
        std::uint32_t c = zp_.sub(zp_.mul(u[t.a], v[t.b]), zp_.mul(u[t.b], v[t.a]));
        if (c)
            out[t.k] = zp_.add(out[t.k], zp_.mul(c, t.c));
    }
}

bool MorphismSearch::relation_holds(const Relation& r, const State& s) const
{
    Column rhs;
    dst_bracket(r.w, s.phi[r.i], s.phi[r.j], rhs);
    for (std::size_t t = 0; t < r.nterms; ++t) {
        const auto& [l, c] = r.terms[t];
        for (std::size_t k = 0; k < n_; ++k)
            rhs[k] = zp_.sub(rhs[k], zp_.mul(c, s.phi[l][k]));
    }
    for (std::size_t k = 0; k < n_; ++k)
        if (rhs[k])
            return false;
    return true;
}

void MorphismSearch::force_column(const Step& step, State& s, Column& out) const
{
    const Relation& r = step.force;
    dst_bracket(r.w, s.phi[r.i], s.phi[r.j], out);
    for (std::size_t t = 0; t < r.nterms; ++t) {
        const auto& [l, c] = r.terms[t];
        if (l == step.column)
            continue;
        for (std::size_t k = 0; k < n_; ++k)
            out[k] = zp_.sub(out[k], zp_.mul(c, s.phi[l][k]));
    }
    for (std::size_t k = 0; k < n_; ++k)
        out[k] = zp_.mul(out[k], step.force_inv);
}

bool MorphismSearch::allowed_contains(std::size_t column, const Column& v) const
{
    const FpMat& b = allowed_[column];
    const auto& piv = allowed_pivots_[column];
    Column r = v;
    for (std::size_t row = 0; row < b.rows; ++row) {
        std::uint32_t f = r[piv[row]];
        if (f)
            for (std::size_t k = 0; k < n_; ++k)
                r[k] = zp_.sub(r[k], zp_.mul(f, b(row, k)));
    }
    for (std::size_t k = 0; k < n_; ++k)
        if (r[k])
            return false;
    return true;
}

bool MorphismSearch::push_independent(State& s, const Column& v) const
{
    Column r = v;
    for (std::size_t row = 0; row < s.rank; ++row) {
        std::uint32_t f = r[s.echelon_pivot[row]];
        if (f)
            for (std::size_t k = 0; k < n_; ++k)
                r[k] = zp_.sub(r[k], zp_.mul(f, s.echelon[row][k]));
    }
    std::size_t piv = 0;
    while (piv < n_ && r[piv] == 0)
        ++piv;
    if (piv == n_)
        return false;
    std::uint32_t inv = zp_.inv(r[piv]);
    for (std::size_t k = 0; k < n_; ++k)
        r[k] = zp_.mul(r[k], inv);
    s.echelon[s.rank] = r;
    s.echelon_pivot[s.rank] = piv;
    ++s.rank;
    return true;
}

// ---------------------------------------------------------------------------

namespace serial {

std::size_t count_morphisms(const MorphismSearch& search)
{
    std::size_t total = 0;
    for (std::size_t b = 0; b < search.branch_count(); ++b)
        search.run_branch(b, [&](const ColumnMatrix&) {
            ++total;
            return true;
        });
    return total;
}

std::optional<ColumnMatrix> find_morphism(const MorphismSearch& search)
{
    std::optional<ColumnMatrix> out;
    for (std::size_t b = 0; b < search.branch_count() && !out; ++b)
        search.run_branch(b, [&](const ColumnMatrix& phi) {
            out = phi;
            return false;
        });
    return out;
}

std::vector<std::string> orbit_keys(const MorphismSearch& aut, const H2Action& action, const FpMat& lifted)
{
    std::unordered_set<std::string> seen;
    for (std::size_t b = 0; b < aut.branch_count(); ++b)
        aut.run_branch(b, [&](const ColumnMatrix& phi) {
            seen.insert(action.image_key(lifted, phi));
            return true;
        });
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace serial

namespace parallel {

std::size_t count_morphisms(const MorphismSearch& search)
{
    const long branches = static_cast<long>(search.branch_count());
    std::size_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long b = 0; b < branches; ++b) {
        std::size_t local = 0;
        search.run_branch(static_cast<std::size_t>(b), [&](const ColumnMatrix&) {
            ++local;
            return true;
        });
        total += local;
    }
    return total;
}

std::optional<ColumnMatrix> find_morphism(const MorphismSearch& search)
{
    const long branches = static_cast<long>(search.branch_count());
    std::vector<std::optional<ColumnMatrix>> found(static_cast<std::size_t>(branches));
    std::atomic<long> best{branches};
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < branches; ++b) {
        if (b > best.load(std::memory_order_relaxed))
            continue;
        auto& slot = found[static_cast<std::size_t>(b)];
        search.run_branch(static_cast<std::size_t>(b), [&](const ColumnMatrix& phi) {
            slot = phi;
            return false;
        });
        if (slot) {
            long cur = best.load();
            while (b < cur && !best.compare_exchange_weak(cur, b)) {
            }
        }
    }
    for (auto& f : found)
        if (f)
            return f;
    return std::nullopt;
}

std::vector<std::string> orbit_keys(const MorphismSearch& aut, const H2Action& action, const FpMat& lifted)
{
    const long branches = static_cast<long>(aut.branch_count());
    std::unordered_set<std::string> seen;
#pragma omp parallel
    {
        std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic)
        for (long b = 0; b < branches; ++b)
            aut.run_branch(static_cast<std::size_t>(b), [&](const ColumnMatrix& phi) {
                local.insert(action.image_key(lifted, phi));
                return true;
            });
#pragma omp critical
        seen.merge(local);
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace parallel

// ---------------------------------------------------------------------------

H2Action::H2Action(std::size_t n, const Zp& zp, FpMat reps, FpMat projector)
    : n_(n), m_(pair_count(n)), zp_(zp), reps_(std::move(reps)), projector_(std::move(projector))
{
    if (n > kMaxDim)
        throw ResourceError("H2 action supports dimension at most " + std::to_string(kMaxDim));
    if (reps_.cols != 2 * m_ || projector_.cols != 2 * m_ || projector_.rows != reps_.rows)
        throw DimensionError("H2 action data has inconsistent shape");
    for (std::size_t t = 0; t < m_; ++t)
        pairs_.push_back(pair_at(n, t));
}

FpMat H2Action::lift(const FpMat& w) const
{
    if (w.cols != reps_.rows)
        throw DimensionError("H2 coordinate matrix has the wrong width");
    FpMat out(w.rows, 2 * m_);
    for (std::size_t r = 0; r < w.rows; ++r)
        for (std::size_t q = 0; q < reps_.rows; ++q)
            if (std::uint32_t c = w(r, q))
                for (std::size_t k = 0; k < 2 * m_; ++k)
                    out(r, k) = zp_.add(out(r, k), zp_.mul(c, reps_(q, k)));
    return out;
}

FpMat H2Action::image(const FpMat& lifted, const ColumnMatrix& phi) const
{
    // minor(t, u) = φ_ak φ_bl - φ_bk φ_al for t = (a,b), u = (k,l)
    std::array<std::uint32_t, 15 * 15> minor{};
    for (std::size_t t = 0; t < m_; ++t) {
        auto [a, b] = pairs_[t];
        for (std::size_t u = 0; u < m_; ++u) {
            auto [k, l] = pairs_[u];
            minor[t * m_ + u] = zp_.sub(zp_.mul(phi[k][a], phi[l][b]), zp_.mul(phi[k][b], phi[l][a]));
        }
    }
    std::size_t h = reps_.rows;
    FpMat out(lifted.rows, h);
    std::array<std::uint32_t, 30> moved{};
    for (std::size_t r = 0; r < lifted.rows; ++r) {
        moved.fill(0);
        for (std::size_t block = 0; block < 2; ++block)
            for (std::size_t t = 0; t < m_; ++t)
                if (std::uint32_t c = lifted(r, block * m_ + t))
                    for (std::size_t u = 0; u < m_; ++u)
                        moved[block * m_ + u] = zp_.add(moved[block * m_ + u], zp_.mul(c, minor[t * m_ + u]));
        for (std::size_t q = 0; q < h; ++q) {
            std::uint32_t acc = 0;
            for (std::size_t k = 0; k < 2 * m_; ++k)
                acc = zp_.add(acc, zp_.mul(projector_(q, k), moved[k]));
            out(r, q) = acc;
        }
    }
    rref_inplace(zp_, out);
    return out;
}

std::string H2Action::image_key(const FpMat& lifted, const ColumnMatrix& phi) const
{
    FpMat img = image(lifted, phi);
    return rref_key(img, img.rows);
}

} // namespace cla::kernels
