#include "cla/classify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cla/error.hpp"

namespace cla {

namespace {

using kernels::FpMat;

struct Element {
    std::string key;
    FpMat rows;
};

FpMat fp_matrix(const Matrix& m, std::size_t cols)
{
    FpMat out = FpMat::from(m);
    out.cols = cols;
    return out;
}

// ω(e_a, e_l) read from cocycle coordinates starting at `offset`.
std::uint32_t form_value(const kernels::Zp& zp, const FpMat& lifted, std::size_t row, std::size_t offset, std::size_t n,
                         std::size_t a, std::size_t l)
{
    if (a == l)
        return 0;
    if (a < l)
        return lifted(row, offset + pair_index(n, a, l));
    return zp.neg(lifted(row, offset + pair_index(n, l, a)));
}

bool admissible(const kernels::Zp& zp, const FpMat& lifted, const FpMat& centre, std::size_t n)
{
    std::size_t c = centre.rows;
    if (c == 0)
        return true;
    std::size_t m = pair_count(n);
    // y in K^c with Σ y_t z_t in every ann(ω_r) forces y = 0
    FpMat eq(lifted.rows * 2 * n, c);
    std::size_t r = 0;
    for (std::size_t row = 0; row < lifted.rows; ++row)
        for (std::size_t block = 0; block < 2; ++block)
            for (std::size_t l = 0; l < n; ++l, ++r)
                for (std::size_t t = 0; t < c; ++t) {
                    std::uint32_t acc = 0;
                    for (std::size_t a = 0; a < n; ++a)
                        if (centre(t, a))
                            acc = zp.add(acc, zp.mul(centre(t, a), form_value(zp, lifted, row, block * m, n, a, l)));
                    eq(r, t) = acc;
                }
    return kernels::rref_inplace(zp, eq) == c;
}

void require_finite(const Field& f)
{
    if (!f.is_prime())
        throw UnsupportedFieldError("classification needs a finite prime field, got " + f.to_string());
}

std::vector<Element> t_s_internal(const CompatibleLieAlgebra& g, const CohomologyData& h, std::size_t s)
{
    require_finite(g.field());
    if (s == 0)
        throw ContractError("T_s needs s >= 1");
    std::vector<Element> out;
    std::size_t hd = h.h2_dim();
    if (s > hd)
        return out;
    std::size_t n = g.dim();
    std::size_t m2 = 2 * pair_count(n);
    kernels::Zp zp(g.field().characteristic());
    kernels::H2Action action(n, zp, fp_matrix(h.quotient.complement, m2), fp_matrix(h.quotient.projector, m2));
    FpMat centre = fp_matrix(center(g).basis(), n);

    std::vector<std::size_t> piv(s);
    for (std::size_t i = 0; i < s; ++i)
        piv[i] = i;
    while (true) {
        // free entries: row r, columns after piv[r] that are not pivots
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = piv[r] + 1; c < hd; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free.emplace_back(r, c);
        std::size_t combos = 1;
        for (std::size_t q = 0; q < free.size(); ++q)
            combos *= zp.p();
        for (std::size_t code = 0; code < combos; ++code) {
            FpMat w(s, hd);
            for (std::size_t r = 0; r < s; ++r)
                w(r, piv[r]) = 1;
            std::size_t rest = code;
            for (std::size_t q = free.size(); q-- > 0;) {
                w(free[q].first, free[q].second) = static_cast<std::uint32_t>(rest % zp.p());
                rest /= zp.p();
            }
            if (admissible(zp, action.lift(w), centre, n))
                out.push_back({kernels::rref_key(w, s), w});
        }
        // next pivot combination
        std::size_t i = s;
        while (i > 0 && piv[i - 1] == hd - s + (i - 1))
            --i;
        if (i == 0)
            break;
        ++piv[i - 1];
        for (std::size_t k = i; k < s; ++k)
            piv[k] = piv[k - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) { return a.key < b.key; });
    return out;
}

Subspace to_subspace(const Field& f, const FpMat& w)
{
    return Subspace::row_space(w.to_matrix(f));
}

std::string param_label(const std::string& family, const std::vector<std::pair<std::string, Scalar>>& params)
{
    if (params.empty())
        return family;
    std::string out = family + "^{";
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : "") + params[i].first + "=" + params[i].second.to_string();
    return out + "}";
}

struct Rel {
    Bracket w;
    std::size_t i, j, k;  // 1-based as printed
    Scalar c;
};

ClassificationEntry table_entry(const Field& f, std::size_t n, const std::string& family,
                                std::vector<std::pair<std::string, Scalar>> params, const std::vector<Rel>& rels)
{
    ClassificationEntry e;
    e.family = family;
    e.params = std::move(params);
    e.label = param_label(family, e.params);
    e.algebra = CompatibleLieAlgebra(f, n, e.label);
    for (const auto& r : rels)
        e.algebra.set_coefficient(r.w, r.i - 1, r.j - 1, r.k - 1, r.c);
    e.provenance.kind = ProvenanceKind::Table;
    return e;
}

struct Indexed {
    const std::vector<ClassificationEntry>* entries;
    std::vector<Fingerprint> fingerprints;
};

Indexed index_entries(const std::vector<ClassificationEntry>& entries)
{
    Indexed ix{&entries, {}};
    for (const auto& e : entries)
        ix.fingerprints.push_back(fingerprint(e.algebra));
    return ix;
}

std::vector<std::pair<std::size_t, Matrix>> matches(const CompatibleLieAlgebra& g, const Fingerprint& fg,
                                                    const Indexed& ix, const SearchBounds& bounds, Backend backend)
{
    std::vector<std::pair<std::size_t, Matrix>> out;
    for (std::size_t i = 0; i < ix.entries->size(); ++i) {
        const auto& e = (*ix.entries)[i];
        if (e.algebra.dim() != g.dim() || !(ix.fingerprints[i] == fg))
            continue;
        IsoResult r = is_isomorphic(g, e.algebra, bounds, backend);
        if (r.isomorphic())
            out.emplace_back(i, *r.witness);
    }
    return out;
}

SearchBounds widened(SearchBounds b, std::size_t dim, std::uint32_t p)
{
    b.max_dim = std::max(b.max_dim, dim);
    b.max_p = std::max(b.max_p, p);
    return b;
}

} // namespace

std::vector<std::uint32_t> cube_coset_representatives(std::uint32_t p)
{
    std::set<std::uint32_t> cubes;
    for (std::uint64_t x = 1; x < p; ++x)
        cubes.insert(static_cast<std::uint32_t>(x * x % p * x % p));
    std::vector<std::uint32_t> reps;
    std::set<std::uint32_t> covered;
    for (std::uint64_t b = 1; b < p; ++b) {
        if (covered.count(static_cast<std::uint32_t>(b)))
            continue;
        reps.push_back(static_cast<std::uint32_t>(b));
        for (auto c : cubes)
            covered.insert(static_cast<std::uint32_t>(b * c % p));
    }
    return reps;
}

std::vector<Subspace> t_s_elements(const CompatibleLieAlgebra& g, const CohomologyData& h, std::size_t s,
                                   const ClassifyOptions&)
{
    std::vector<Subspace> out;
    for (const auto& e : t_s_internal(g, h, s))
        out.push_back(to_subspace(g.field(), e.rows));
    return out;
}

std::vector<Subspace> t_s_elements(const CompatibleLieAlgebra& g, std::size_t s, const ClassifyOptions& options)
{
    return t_s_elements(g, cohomology(g), s, options);
}

std::vector<OrbitRepresentative> orbits(const CompatibleLieAlgebra& g, const CohomologyData& h, std::size_t s,
                                        const ClassifyOptions& options)
{
    check_search_bounds(g, options.bounds);
    std::vector<Element> elements = t_s_internal(g, h, s);
    std::vector<OrbitRepresentative> out;
    if (elements.empty())
        return out;
    const Field& f = g.field();
    std::size_t n = g.dim();
    std::size_t m2 = 2 * pair_count(n);
    kernels::Zp zp(f.characteristic());
    kernels::H2Action action(n, zp, fp_matrix(h.quotient.complement, m2), fp_matrix(h.quotient.projector, m2));
    auto aut = morphism_search(g, g);

    std::unordered_set<std::string> members;
    for (const auto& e : elements)
        members.insert(e.key);
    std::unordered_set<std::string> visited;
    std::size_t total = 0;
    for (const auto& e : elements) {
        if (visited.count(e.key))
            continue;
        FpMat lifted = action.lift(e.rows);
        std::vector<std::string> keys = options.backend == Backend::Serial
                                            ? kernels::serial::orbit_keys(*aut, action, lifted)
                                            : kernels::parallel::orbit_keys(*aut, action, lifted);
        for (const auto& k : keys) {
            if (!members.count(k))
                throw ContractError("an automorphism moved an admissible subspace outside T_s");
            visited.insert(k);
        }
        if (keys.empty() || keys.front() != e.key)
            throw ContractError("orbit representative is not the smallest member of its orbit");
        OrbitRepresentative rep;
        rep.base = g.label();
        rep.s = s;
        rep.subspace = to_subspace(f, e.rows);
        for (const auto& row : rep.subspace.basis_vectors())
            rep.representative_cocycle.components.push_back(h.lift(row));
        rep.orbit_size = keys.size();
        total += keys.size();
        out.push_back(std::move(rep));
    }
    if (total != elements.size())
        throw ContractError("orbit sizes do not add up to |T_s|");
    return out;
}

std::vector<OrbitRepresentative> orbits(const CompatibleLieAlgebra& g, std::size_t s, const ClassifyOptions& options)
{
    return orbits(g, cohomology(g), s, options);
}

std::vector<ClassificationEntry> paper_table(const Field& f)
{
    require_finite(f);
    const Bracket L = Bracket::First, C = Bracket::Second;
    auto k = [&](long v) { return Scalar(f, v); };
    Scalar one = k(1);
    std::uint32_t p = f.characteristic();
    std::vector<Scalar> units;
    for (std::uint32_t a = 1; a < p; ++a)
        units.push_back(k(a));
    std::vector<Scalar> cube_reps;
    for (auto b : cube_coset_representatives(p))
        cube_reps.push_back(k(b));

    std::vector<ClassificationEntry> t;
    t.push_back(table_entry(f, 1, "N_{1}", {}, {}));
    t.push_back(table_entry(f, 2, "N_{2}", {}, {}));
    t.push_back(table_entry(f, 3, "N_{3,1}", {}, {}));
    t.push_back(table_entry(f, 3, "N_{3,2}", {}, {{L, 1, 2, 3, one}}));
    t.push_back(table_entry(f, 3, "N_{3,3}", {}, {{C, 1, 2, 3, one}}));
    for (const auto& a : units)
        t.push_back(table_entry(f, 3, "N_{3,4}", {{"α", a}}, {{L, 1, 2, 3, one}, {C, 1, 2, 3, a}}));

    t.push_back(table_entry(f, 4, "N_{4,1}", {}, {}));
    t.push_back(table_entry(f, 4, "N_{4,2}", {}, {{L, 1, 2, 3, one}}));
    t.push_back(table_entry(f, 4, "N_{4,3}", {}, {{C, 1, 2, 3, one}}));
    for (const auto& a : units)
        t.push_back(table_entry(f, 4, "N_{4,4}", {{"α", a}}, {{L, 1, 2, 3, one}, {C, 1, 2, 3, a}}));
    t.push_back(table_entry(f, 4, "N_{4,5}", {}, {{L, 2, 3, 4, one}, {C, 1, 3, 4, one}}));
    t.push_back(table_entry(f, 4, "N_{4,6}", {}, {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}}));
    t.push_back(table_entry(f, 4, "N_{4,7}", {}, {{L, 1, 2, 3, one}, {C, 2, 3, 4, one}}));
    for (const auto& b : units)
        t.push_back(table_entry(f, 4, "N_{4,8}", {{"β", b}}, {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 2, 3, 4, b}}));
    for (const auto& b : cube_reps)
        t.push_back(table_entry(f, 4, "N_{4,9}", {{"β", b}}, {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 1, 3, 4, b}}));
    t.push_back(table_entry(f, 4, "N_{4,10}", {}, {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 1, 2, 4, one}}));
    t.push_back(table_entry(f, 4, "N_{4,11}", {}, {{C, 1, 2, 3, one}, {C, 2, 3, 4, one}}));
    t.push_back(table_entry(f, 4, "N_{4,12}", {}, {{C, 1, 2, 3, one}, {L, 2, 3, 4, one}}));
    for (const auto& b : units)
        t.push_back(table_entry(f, 4, "N_{4,13}", {{"β", b}}, {{C, 1, 2, 3, one}, {C, 2, 3, 4, one}, {L, 2, 3, 4, b}}));
    for (const auto& b : cube_reps)
        t.push_back(table_entry(f, 4, "N_{4,14}", {{"β", b}}, {{C, 1, 2, 3, one}, {C, 2, 3, 4, one}, {L, 1, 3, 4, b}}));
    t.push_back(table_entry(f, 4, "N_{4,15}", {}, {{C, 1, 2, 3, one}, {C, 2, 3, 4, one}, {L, 1, 2, 4, one}}));
    for (const auto& a : units)
        t.push_back(table_entry(f, 4, "N_{4,16}", {{"α", a}}, {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 1, 2, 3, a}}));
    for (const auto& a : units)
        t.push_back(table_entry(f, 4, "N_{4,17}", {{"α", a}}, {{L, 1, 2, 3, one}, {C, 1, 2, 3, a}, {C, 2, 3, 4, one}}));
    for (const auto& a : units)
        for (const auto& b : units)
            t.push_back(table_entry(f, 4, "N_{4,18}", {{"α", a}, {"β", b}},
                                    {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 1, 2, 3, a}, {C, 2, 3, 4, b}}));
    for (const auto& a : units)
        for (const auto& b : cube_reps)
            t.push_back(table_entry(f, 4, "N_{4,19}", {{"α", a}, {"β", b}},
                                    {{L, 1, 2, 3, one}, {L, 2, 3, 4, one}, {C, 1, 2, 3, a}, {C, 1, 3, 4, b}}));
    return t;
}

std::string match(const CompatibleLieAlgebra& g, const std::vector<ClassificationEntry>& table,
                  const SearchBounds& bounds)
{
    Indexed ix = index_entries(table);
    auto found = matches(g, fingerprint(g), ix, bounds, Backend::Parallel);
    if (found.empty())
        throw ContractError("no table entry is isomorphic to the given algebra (" + relations_string(g) + ")");
    if (found.size() > 1)
        throw ContractError("several table entries are isomorphic to the given algebra: " + table[found[0].first].label +
                            ", " + table[found[1].first].label);
    return table[found.front().first].label;
}

std::string match(const CompatibleLieAlgebra& g, const SearchBounds& bounds)
{
    if (g.dim() > 4)
        throw ResourceError("the reference table covers dimensions 1 to 4");
    return match(g, paper_table(g.field()), bounds);
}

std::vector<SkewPair> skew_pairs(const std::vector<ClassificationEntry>& entries, const SearchBounds& bounds)
{
    Indexed ix = index_entries(entries);
    std::vector<SkewPair> out;
    for (const auto& e : entries) {
        CompatibleLieAlgebra sw = switched(e.algebra);
        auto found = matches(sw, fingerprint(sw), ix, bounds, Backend::Parallel);
        SkewPair pair{e.label, {}, false};
        if (!found.empty()) {
            pair.partner = entries[found.front().first].label;
            pair.self_paired = pair.partner == e.label;
        }
        out.push_back(std::move(pair));
    }
    return out;
}

Classification classify_all(std::size_t n, const Field& f, const ClassifyOptions& options)
{
    require_finite(f);
    if (n > options.bounds.max_dim)
        throw ResourceError("dimension " + std::to_string(n) + " exceeds the classification bound " +
                            std::to_string(options.bounds.max_dim));
    if (f.characteristic() > options.bounds.max_p)
        throw ResourceError("p = " + std::to_string(f.characteristic()) + " exceeds the classification bound " +
                            std::to_string(options.bounds.max_p));

    Classification out;
    out.field = f;
    out.dim = n;
    ClassificationEntry zero;
    zero.label = "0";
    zero.algebra = CompatibleLieAlgebra(f, 0, "0");
    out.by_dim.push_back({zero});

    std::vector<ClassificationEntry> table;
    Indexed table_ix{&table, {}};
    if (options.label_with_table) {
        table = paper_table(f);
        table_ix = index_entries(table);
    }
    std::map<std::string, CohomologyData> cohomology_cache;

    for (std::size_t d = 1; d <= n; ++d) {
        std::vector<ClassificationEntry> found;
        for (const auto& parent : out.by_dim[d - 1]) {
            ClassificationEntry e;
            e.algebra = direct_sum_with_abelian(parent.algebra, 1);
            e.provenance = {ProvenanceKind::CentralComponent, parent.label, std::nullopt};
            found.push_back(std::move(e));
        }
        for (std::size_t s = 1; s < d; ++s)
            for (const auto& base : out.by_dim[d - s]) {
                auto it = cohomology_cache.find(base.label);
                if (it == cohomology_cache.end())
                    it = cohomology_cache.emplace(base.label, cohomology(base.algebra)).first;
                CompatibleLieAlgebra named = base.algebra;
                named.set_label(base.label);
                for (auto& rep : orbits(named, it->second, s, options)) {
                    ClassificationEntry e;
                    e.algebra = central_extension({base.algebra, rep.representative_cocycle});
                    e.provenance = {ProvenanceKind::OrbitExtension, base.label, std::move(rep)};
                    found.push_back(std::move(e));
                }
            }

        // Label by table match; unmatched algebras get U_{d,k} in discovery order.
        std::vector<std::size_t> order_key(found.size(), table.size());
        std::size_t unmatched = 0;
        for (std::size_t i = 0; i < found.size(); ++i) {
            auto& e = found[i];
            std::vector<std::pair<std::size_t, Matrix>> m;
            if (options.label_with_table && d <= 4)
                m = matches(e.algebra, fingerprint(e.algebra), table_ix, widened(options.bounds, d, f.characteristic()),
                            options.backend);
            if (!m.empty()) {
                order_key[i] = m.front().first;
                for (std::size_t a = 1; a < m.size(); ++a)
                    e.also_matches.push_back(table[m[a].first].label);
                e.label = table[m.front().first].label;
                e.family = table[m.front().first].family;
                e.params = table[m.front().first].params;
                e.match_witness = m.front().second;
            } else {
                e.label = (d <= 4 ? "U_{" : "L_{") + std::to_string(d) + "," + std::to_string(++unmatched) + "}";
            }
            e.algebra.set_label(e.label);
        }
        std::vector<std::size_t> perm(found.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order_key[a] < order_key[b]; });
        std::vector<ClassificationEntry> sorted;
        for (auto i : perm)
            sorted.push_back(std::move(found[i]));
        out.by_dim.push_back(std::move(sorted));
    }

    // Final oracle pass over the n-dimensional output.
    const auto& entries = out.by_dim[n];
    std::vector<Fingerprint> fps;
    for (const auto& e : entries)
        fps.push_back(fingerprint(e.algebra));
    std::mt19937_64 rng(options.seed);
    SearchBounds wide = widened(options.bounds, n, f.characteristic());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            bool collide = fps[i] == fps[j];
            if (options.sampled_oracle && !collide &&
                rng() % (entries.size() * entries.size()) >= 2 * options.sample_pairs)
                continue;
            OracleCheck check{entries[i].label, entries[j].label, Verdict::NonIsomorphic, "fingerprint"};
            if (collide) {
                IsoResult r = is_isomorphic(entries[i].algebra, entries[j].algebra, wide, options.backend);
                check.verdict = r.verdict;
                check.reason = r.reason;
            }
            if (check.verdict != Verdict::NonIsomorphic)
                out.pairwise_distinct = false;
            out.oracle_checks.push_back(std::move(check));
        }
    return out;
}

std::vector<ClassificationEntry> classify(std::size_t n, const Field& f, const ClassifyOptions& options)
{
    return classify_all(n, f, options).entries();
}

std::string table_text(const std::vector<ClassificationEntry>& entries)
{
    std::vector<std::array<std::string, 3>> rows{{"Algebra", "Relations", "Centre dim"}};
    for (const auto& e : entries)
        rows.push_back({e.label, relations_string(e.algebra), std::to_string(center(e.algebra).dim())});
    // UTF-8 aware width: count code points
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80)
                ++w;
        return w;
    };
    std::array<std::size_t, 3> wmax{};
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 3; ++c)
            wmax[c] = std::max(wmax[c], width(r[c]));
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            out << rows[i][c];
            if (c < 2)
                out << std::string(wmax[c] - width(rows[i][c]) + 2, ' ');
        }
        out << "\n";
        if (i == 0)
            out << std::string(wmax[0] + wmax[1] + wmax[2] + 4, '-') << "\n";
    }
    return out.str();
}

std::string table_csv(const std::vector<ClassificationEntry>& entries)
{
    std::ostringstream out;
    out << "label,dim,centre_dim,relations\n";
    for (const auto& e : entries)
        out << "\"" << e.label << "\"," << e.algebra.dim() << "," << center(e.algebra).dim() << ",\""
            << relations_string(e.algebra) << "\"\n";
    return out.str();
}

} // namespace cla
