// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cla/error.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

constexpr double kDim3Seconds = 10.0;
constexpr double kDim4Seconds = 600.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ClassificationEntry> rows_of_dim(const std::vector<ClassificationEntry>& table, std::size_t n)
{
    std::vector<ClassificationEntry> out;
    for (const auto& e : table)
        if (e.algebra.dim() == n)
            out.push_back(e);
    return out;
}

// Outputs and table rows in oracle-certified bijection: every row isomorphic
// to exactly one output and every output to exactly one row.
bool bijective(const std::vector<ClassificationEntry>& out, const std::vector<ClassificationEntry>& rows,
               std::string& why)
{
    std::vector<int> per_out(out.size(), 0), per_row(rows.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            auto r = is_isomorphic(out[i].algebra, rows[j].algebra);
            if (r.verdict == Verdict::Unknown)
                throw ContractError("oracle undecided on " + out[i].label + " vs " + rows[j].label);
            if (r.isomorphic()) {
                if (!is_homomorphism(out[i].algebra, rows[j].algebra, *r.witness))
                    throw ContractError("bad witness for " + out[i].label);
                ++per_out[i];
                ++per_row[j];
            }
        }
    std::size_t lonely_out = 0, lonely_row = 0, multi = 0;
    for (int c : per_out) {
        lonely_out += c == 0;
        multi += c > 1;
    }
    for (int c : per_row) {
        lonely_row += c == 0;
        multi += c > 1;
    }
    std::ostringstream s;
    s << out.size() << " outputs vs " << rows.size() << " rows; unmatched outputs " << lonely_out
      << ", unmatched rows " << lonely_row << ", multiple matches " << multi;
    why = s.str();
    return lonely_out == 0 && lonely_row == 0 && multi == 0;
}

Outcome criterion1()
{
    Field f5 = Field::prime(5);
    auto t0 = std::chrono::steady_clock::now();
    auto c = classify_all(3, f5);
    double secs = seconds_since(t0);
    auto rows = rows_of_dim(paper_table(f5), 3);
    std::set<std::string> families;
    for (const auto& r : rows)
        families.insert(r.family);
    std::string why;
    bool bij = bijective(c.entries(), rows, why);
    bool ok = c.entries().size() == 7 && c.pairwise_distinct && bij && rows.size() == 7 &&
              families == std::set<std::string>{"N_{3,1}", "N_{3,2}", "N_{3,3}", "N_{3,4}"} && secs < kDim3Seconds;
    std::ostringstream s;
    s << c.entries().size() << " entries (want 7), " << why << ", " << secs << " s";
    return {ok, s.str()};
}

Outcome criterion2()
{
    std::ostringstream s;
    bool ok = true;
    for (auto [p, want] : {std::pair<std::uint32_t, std::size_t>{3, 28}, {5, 52}}) {
        Field f = Field::prime(p);
        auto t0 = std::chrono::steady_clock::now();
        auto c = classify_all(4, f);
        double secs = seconds_since(t0);
        auto rows = rows_of_dim(paper_table(f), 4);
        std::string why;
        bool bij = p == 3 ? bijective(c.entries(), rows, why) : true;
        bool here = c.entries().size() == want && rows.size() == want && bij && c.pairwise_distinct &&
                    secs < kDim4Seconds;
        ok = ok && here;
        s << "F_" << p << ": " << c.entries().size() << " entries (want " << want << "), table rows " << rows.size();
        if (p == 3)
            s << ", " << why;
        s << ", " << secs << " s; ";
    }
    return {ok, s.str()};
}

Outcome criterion3()
{
    std::ostringstream s;
    bool ok = true;
    for (const Field& f : {Field::prime(5), Field::prime(7), Field::rationals()}) {
        auto h31 = cohomology(CompatibleLieAlgebra::abelian(f, 3));
        auto h32 = cohomology(n32(f));
        bool here = h31.h2_dim() == 6 && h32.b2.dim() == 1 && h32.h2_dim() == 5 &&
                    h32.b2 == Subspace::span(f, 6, {gamma(f, 3, {{3, 1}})});
        std::vector<long> alphas = f.is_rational() ? std::vector<long>{1, 2, -3} : std::vector<long>{1, 2, 3, 4};
        for (long a : alphas) {
            auto h = cohomology(n34(f, a));
            here = here && h.b2 == Subspace::span(f, 6, {gamma(f, 3, {{3, 1}, {6, a}})});
        }
        ok = ok && here;
        s << f.to_string() << (here ? " ok" : " MISMATCH") << "; ";
    }
    return {ok, s.str()};
}

// Orbit of span{w} under Aut(g), identified by its smallest key.
struct OrbitLocator {
    CompatibleLieAlgebra g;
    CohomologyData h;
    kernels::H2Action action;
    kernels::MorphismSearch aut;

    explicit OrbitLocator(const CompatibleLieAlgebra& alg)
        : g(alg), h(cohomology(alg)),
          action(alg.dim(), kernels::Zp(alg.field().characteristic()), kernels::FpMat::from(h.quotient.complement),
                 kernels::FpMat::from(h.quotient.projector)),
          aut(*morphism_search(alg, alg))
    {
    }

    std::string orbit_of(const Vector& z2) const
    {
        Vector cls = h.quotient.project(z2);
        Subspace w = Subspace::span(g.field(), h.h2_dim(), {cls});
        auto keys = kernels::parallel::orbit_keys(aut, action, action.lift(kernels::FpMat::from(w.basis())));
        return *std::min_element(keys.begin(), keys.end());
    }
};

Outcome criterion4()
{
    std::ostringstream s;
    // F_3: the five families with β ∈ {1, 2}; the γ5 family is one orbit.
    Field f3 = Field::prime(3);
    OrbitLocator n3(n32(f3));
    auto reps3 = orbits(n32(f3), 1);
    std::vector<std::vector<std::pair<std::size_t, long>>> families = {
        {{1, 1}}, {{4, 1}}, {{1, 1}, {4, 1}}, {{1, 1}, {4, 2}}, {{1, 1}, {5, 1}}, {{1, 1}, {6, 1}}};
    std::set<std::string> hit;
    for (const auto& fam : families)
        hit.insert(n3.orbit_of(gamma(f3, 3, fam)));
    bool gamma5_collapsed = n3.orbit_of(gamma(f3, 3, {{1, 1}, {5, 1}})) == n3.orbit_of(gamma(f3, 3, {{1, 1}, {5, 2}}));
    bool ok3 = reps3.size() == 6 && hit.size() == 6 && gamma5_collapsed;
    s << "F_3: " << reps3.size() << " orbits (want 6), family representatives hit " << hit.size()
      << " distinct orbits; ";

    // F_7: orbits met by span{[γ1 + βγ5]}, β ∈ F_7^×.
    Field f7 = Field::prime(7);
    OrbitLocator n7(n32(f7));
    std::set<std::string> gamma5;
    for (long b = 1; b < 7; ++b)
        gamma5.insert(n7.orbit_of(gamma(f7, 3, {{1, 1}, {5, b}})));
    bool ok7 = gamma5.size() == 2;
    s << "F_7: γ5 family meets " << gamma5.size() << " orbit(s) (want 2), " << orbits(n32(f7), 1).size()
      << " orbits in total";
    return {ok3 && ok7, s.str()};
}

Outcome criterion5()
{
    Field f7 = Field::prime(7);
    std::size_t agree = 0, iso = 0;
    for (long b = 1; b < 7; ++b)
        for (long b2 = 1; b2 < 7; ++b2) {
            bool want = (b2 * Scalar(f7, b).inverse().residue()) % 7 == 1 ||
                        (b2 * Scalar(f7, b).inverse().residue()) % 7 == 6;
            auto r = is_isomorphic(n49(f7, b), n49(f7, b2));
            if (r.verdict == Verdict::Unknown)
                throw ContractError("oracle undecided");
            iso += r.isomorphic();
            agree += r.isomorphic() == want;
        }
    std::ostringstream s;
    s << agree << "/36 pairs agree with the ratio-in-{1,6} rule; oracle reports " << iso << "/36 isomorphic";
    return {agree == 36, s.str()};
}

Outcome criterion6()
{
    Field f3 = Field::prime(3);
    std::size_t ok = 0, total = 0;
    for (const auto& e : classify(4, f3)) {
        ++total;
        auto back = central_extension(decompose(e.algebra));
        auto r = is_isomorphic(back, e.algebra);
        ok += r.isomorphic() && is_homomorphism(back, e.algebra, *r.witness);
    }
    std::ostringstream s;
    s << ok << "/" << total << " round trips isomorphic";
    return {ok == total && total > 0, s.str()};
}

Outcome criterion7()
{
    Field f5 = Field::prime(5);
    auto table = paper_table(f5);
    auto find = [&](const std::string& family, const std::vector<std::pair<std::string, Scalar>>& params) {
        for (const auto& e : table)
            if (e.family == family && e.params == params)
                return e.label;
        return std::string("?");
    };
    const std::map<std::string, std::string> swapped = {
        {"N_{3,2}", "N_{3,3}"},   {"N_{4,2}", "N_{4,3}"},   {"N_{4,6}", "N_{4,11}"}, {"N_{4,7}", "N_{4,12}"},
        {"N_{4,8}", "N_{4,13}"},  {"N_{4,9}", "N_{4,14}"},  {"N_{4,10}", "N_{4,15}"}, {"N_{4,16}", "N_{4,17}"}};
    const std::set<std::string> inverted = {"N_{3,4}", "N_{4,4}", "N_{4,16}", "N_{4,17}", "N_{4,18}", "N_{4,19}"};
    std::map<std::string, std::string> expected;
    for (const auto& e : table) {
        std::string fam = e.family;
        for (const auto& [a, b] : swapped) {
            if (e.family == a)
                fam = b;
            if (e.family == b)
                fam = a;
        }
        auto params = e.params;
        if (inverted.count(e.family))
            for (auto& [name, v] : params)
                if (name == "α" || (e.family == "N_{4,18}" && name == "β"))
                    v = v.inverse();
        expected[e.label] = find(fam, params);
    }
    std::size_t agree = 0, self = 0;
    std::vector<std::string> bad;
    for (const auto& p : skew_pairs(table)) {
        if (expected.at(p.label) == p.partner && p.self_paired == (p.partner == p.label))
            ++agree;
        else
            bad.push_back(p.label);
        self += p.self_paired;
    }
    bool named_self = expected.at("N_{4,1}") == "N_{4,1}" && expected.at("N_{4,5}") == "N_{4,5}" &&
                      expected.at("N_{3,1}") == "N_{3,1}";
    std::ostringstream s;
    s << agree << "/" << table.size() << " partners as listed, " << self << " self-paired";
    for (const auto& b : bad)
        s << "; mismatch " << b;
    return {agree == table.size() && named_self, s.str()};
}

Outcome criterion8()
{
    std::ostringstream s;
    bool ok = true;
    auto note = [&](const std::string& name, bool pass) {
        ok = ok && pass;
        s << name << (pass ? " ok" : " FAIL") << "; ";
    };

    Rng rng(8);
    bool residuals = true;
    for (int t = 0; t < 60; ++t) {
        Field f = Field::prime(t % 3 == 0 ? 7 : (t % 3 == 1 ? 3 : 5));
        auto g = random_nilpotent(1 + rng.below(4), f, rng.below(1u << 30));
        for (const auto& w : cohomology(g).z2_basis)
            residuals = residuals && cocycle_residual(g, w).ok();
    }
    for (const auto& e : paper_table(Field::prime(3)))
        for (const auto& w : cohomology(e.algebra).z2_basis)
            residuals = residuals && cocycle_residual(e.algebra, w).ok();
    note("Z² residuals", residuals);

    bool right = true;
    for (int t = 0; t < 100; ++t) {
        Field f = Field::prime(t % 2 ? 5 : 7);
        std::size_t n = 2 + rng.below(3);
        ScalarCocycle w = ScalarCocycle::from_coordinates(f, n, rng.vector(f, 2 * pair_count(n)));
        Matrix phi = rng.invertible(f, n), psi = rng.invertible(f, n);
        right = right && act_on_cocycle(act_on_cocycle(w, phi), psi) == act_on_cocycle(w, phi * psi);
    }
    note("right action", right);

    Field f3 = Field::prime(3);
    auto aut = automorphisms(n32(f3));
    bool shape = aut.size() == 432;
    for (const auto& a : aut) {
        Scalar d33 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        shape = shape && a(0, 2).is_zero() && a(1, 2).is_zero() && a(2, 2) == d33 && !d33.is_zero();
    }
    note("|Aut(N_{3,2})| = 432 with the block shape", shape);

    bool invariant = true;
    for (int t = 0; t < 200; ++t) {
        auto g = random_nilpotent(1 + rng.below(3), f3, rng.below(1u << 30));
        auto group = automorphisms(g);
        VectorCocycle w;
        for (std::size_t i = 0, s_ = 1 + rng.below(2); i < s_; ++i)
            w.components.push_back(rng.cocycle(g));
        const Matrix& phi = group[rng.below(group.size())];
        invariant = invariant && is_admissible(g, w) == is_admissible(g, act_on_cocycle(w, phi));
    }
    note("admissibility orbit-invariant", invariant);

    std::size_t done = 0;
    bool detectors = true;
    while (done < 200) {
        auto g = random_nilpotent(1 + rng.below(3), f3, rng.below(1u << 30));
        std::size_t s_ = 1 + rng.below(std::min<std::size_t>(2, 4 - g.dim()));
        if (g.dim() + s_ > 4)
            continue;
        VectorCocycle w;
        for (std::size_t i = 0; i < s_; ++i)
            w.components.push_back(rng.cocycle(g));
        if (s_ == 2 && rng.below(3) == 0)
            w.components[1] = rng.unit(f3) * w.components[0] + coboundary_of(g, rng.vector(f3, g.dim()));
        if (!is_admissible(g, w))
            continue;
        ++done;
        detectors = detectors && has_central_component_cohomological(g, w) ==
                                     has_central_component_structural(central_extension({g, w})).has_value();
    }
    note("central-component detectors agree", detectors);

    auto good = verify(heisenberg_sl2());
    auto bad = verify(non_example());
    bool verdicts = good.ok() && !bad.ok() && bad.first_failure &&
                    bad.first_failure->triple == std::array<std::size_t, 3>{0, 1, 2};
    note("verify examples", verdicts);
    return {ok, s.str()};
}

} // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
