#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "cla/error.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

std::size_t table_count(const Field& f, std::size_t dim)
{
    std::size_t n = 0;
    for (const auto& e : paper_table(f))
        n += e.algebra.dim() == dim;
    return n;
}

const ClassificationEntry* find_label(const std::vector<ClassificationEntry>& es, const std::string& label)
{
    for (const auto& e : es)
        if (e.label == label)
            return &e;
    return nullptr;
}

} // namespace

TEST_CASE("T_s examples")
{
    Field f3 = Field::prime(3);
    CHECK(t_s_elements(CompatibleLieAlgebra::abelian(f3, 2), 1).size() == 4);
    CHECK(t_s_elements(CompatibleLieAlgebra::abelian(f3, 1), 1).empty());
    CHECK(t_s_elements(CompatibleLieAlgebra::abelian(f3, 2), 2).size() == 1);

    // All 121 points of P(H²(N_{3,2})) except the one spanned by [γ6].
    auto ts = t_s_elements(n32(f3), 1);
    CHECK(ts.size() == 120);
    auto only_g6 = Subspace::span(f3, 5, {unit_vector(f3, 5, 4)});
    for (const auto& w : ts)
        CHECK_FALSE(w == only_g6);
    CHECK_THROWS_AS(t_s_elements(n32(f3), 0), ContractError);
    CHECK_THROWS_AS(t_s_elements(n32(Field::rationals()), 1), UnsupportedFieldError);
}

TEST_CASE("orbit examples")
{
    Field f3 = Field::prime(3);
    auto ab2 = orbits(CompatibleLieAlgebra::abelian(f3, 2), 1);
    CHECK(ab2.size() == 4);
    for (const auto& o : ab2)
        CHECK(o.orbit_size == 1);

    CHECK(orbits(n32(f3), 1).size() == 6);

    // Admissible classes of abelian(3): both forms nonzero and independent.
    CHECK(orbits(CompatibleLieAlgebra::abelian(f3, 3), 1).size() == 1);
}

TEST_CASE("property: orbit sizes divide |Aut| and add up to |T_s|")
{
    Rng rng(20);
    for (int t = 0; t < 25; ++t) {
        Field f = Field::prime(t % 2 ? 3 : 5);
        auto g = random_nilpotent(1 + rng.below(3), f, rng.below(1u << 30));
        std::size_t aut = automorphism_count(g);
        for (std::size_t s = 1; s <= 2 && g.dim() + s <= 4; ++s) {
            auto ts = t_s_elements(g, s);
            auto os = orbits(g, s);
            std::size_t total = 0;
            std::set<std::string> reps;
            for (const auto& o : os) {
                CHECK(aut % o.orbit_size == 0);
                total += o.orbit_size;
                CHECK(o.subspace.dim() == s);
                CHECK(is_admissible(g, o.representative_cocycle));
                reps.insert(o.subspace.key());
            }
            CHECK(total == ts.size());
            CHECK(reps.size() == os.size());
        }
    }
}

TEST_CASE("small classifications")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Field f = Field::prime(p);
        auto c1 = classify(1, f);
        REQUIRE(c1.size() == 1);
        CHECK(c1[0].label == "N_{1}");
        auto c2 = classify(2, f);
        REQUIRE(c2.size() == 1);
        CHECK(c2[0].label == "N_{2}");
    }
    auto c3 = classify(3, Field::prime(5));
    std::set<std::string> labels;
    for (const auto& e : c3)
        labels.insert(e.label);
    CHECK(labels == std::set<std::string>{"N_{3,1}", "N_{3,2}", "N_{3,3}", "N_{3,4}^{α=1}", "N_{3,4}^{α=2}",
                                          "N_{3,4}^{α=3}", "N_{3,4}^{α=4}"});
    CHECK_THROWS_AS(classify(5, Field::prime(3)), ResourceError);
    CHECK_THROWS_AS(classify(3, Field::rationals()), UnsupportedFieldError);
}

TEST_CASE("dimension 4 over F_3")
{
    Field f3 = Field::prime(3);
    auto c = classify_all(4, f3);
    const auto& es = c.entries();
    CHECK(c.pairwise_distinct);
    CHECK(es.size() == 31);
    CHECK(table_count(f3, 4) == 28);

    // Every table row matches exactly one output; the three extra outputs match none.
    auto table = paper_table(f3);
    std::map<std::string, int> hits;
    for (const auto& t : table) {
        if (t.algebra.dim() != 4)
            continue;
        int n = 0;
        for (const auto& e : es)
            n += is_isomorphic(t.algebra, e.algebra).isomorphic();
        CHECK_MESSAGE(n == 1, t.label);
    }
    std::size_t unmatched = 0;
    for (const auto& e : es) {
        CHECK(verify(e.algebra).ok());
        CHECK(is_nilpotent(e.algebra));
        if (e.label.rfind("U_", 0) == 0) {
            ++unmatched;
            CHECK_THROWS_AS(match(e.algebra), ContractError);
        } else {
            CHECK(match(e.algebra) == e.label);
            REQUIRE(e.match_witness.has_value());
            CHECK(is_homomorphism(e.algebra, find_label(table, e.label)->algebra, *e.match_witness));
        }
        // Provenance agrees with the structural test and with the quotient.
        bool central = e.provenance.kind == ProvenanceKind::CentralComponent;
        CHECK(central == has_central_component_structural(e.algebra).has_value());
        if (e.provenance.kind == ProvenanceKind::OrbitExtension) {
            const auto* base = find_label(c.by_dim[4 - e.provenance.orbit->s], e.provenance.parent);
            REQUIRE(base != nullptr);
            CHECK(is_isomorphic(quotient(e.algebra, center(e.algebra)).algebra, base->algebra).isomorphic());
            CHECK(center(e.algebra).dim() == e.provenance.orbit->s);
        }
    }
    CHECK(unmatched == 3);

    // The extra classes: extensions of N_2 by two classes, and of N_{3,4}^α along the α' = α orbit.
    auto u3 = make(f3, 4, {{L, 1, 2, 3, 1}, {C, 1, 2, 4, 1}});
    int found = 0;
    for (const auto& e : es)
        found += is_isomorphic(u3, e.algebra).isomorphic();
    CHECK(found == 1);
    for (long a = 1; a < 3; ++a) {
        auto u = make(f3, 4, {{L, 1, 2, 3, 1}, {L, 1, 3, 4, 1}, {C, 1, 2, 3, a}, {C, 1, 2, 4, 1}, {C, 1, 3, 4, a}});
        REQUIRE(verify(u).ok());
        int n = 0;
        for (const auto& e : es)
            n += is_isomorphic(u, e.algebra).isomorphic();
        CHECK(n == 1);
        for (const auto& t : table)
            if (t.algebra.dim() == 4)
                CHECK_FALSE(is_isomorphic(u, t.algebra).isomorphic());
    }
}

TEST_CASE("property: random nilpotent algebras match exactly one output")
{
    Field f3 = Field::prime(3);
    auto es = classify(4, f3);
    std::vector<Fingerprint> fps;
    for (const auto& e : es)
        fps.push_back(fingerprint(e.algebra));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_nilpotent(4, f3, seed * 7919 + 1);
        auto fg = fingerprint(g);
        int n = 0;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (fps[i] == fg)
                n += is_isomorphic(g, es[i].algebra).isomorphic();
        CHECK_MESSAGE(n == 1, relations_string(g));
    }
}

TEST_CASE("paper table instantiation")
{
    Field f7 = Field::prime(7);
    auto t = paper_table(f7);
    const auto* n410 = find_label(t, "N_{4,10}");
    REQUIRE(n410 != nullptr);
    CHECK(n410->algebra == make(f7, 4, {{L, 1, 2, 3, 1}, {L, 2, 3, 4, 1}, {C, 1, 2, 4, 1}}));
    std::size_t n419 = 0;
    for (const auto& e : t)
        n419 += e.family == "N_{4,19}";
    // Six values of α times the three cosets of {1, 6} in F_7^×.
    CHECK(n419 == 18);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::string label = n <= 2 ? "N_{" + std::to_string(n) + "}" : "N_{" + std::to_string(n) + ",1}";
        const auto* e = find_label(t, label);
        REQUIRE(e != nullptr);
        CHECK(e->algebra == CompatibleLieAlgebra::abelian(f7, n));
    }
    CHECK(find_label(t, "N_{4,18}^{α=3,β=5}") != nullptr);
    CHECK(find_label(t, "N_{4,9}^{β=2}") != nullptr);
    CHECK(find_label(t, "N_{4,9}^{β=6}") == nullptr);
    CHECK(table_count(Field::prime(3), 4) == 28);
    CHECK(table_count(Field::prime(5), 4) == 52);
    CHECK(table_count(Field::prime(3), 3) == 5);
    for (const auto& e : paper_table(Field::prime(5)))
        CHECK(verify(e.algebra).ok());
}

TEST_CASE("cube cosets")
{
    CHECK(cube_coset_representatives(7) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(cube_coset_representatives(5) == std::vector<std::uint32_t>{1});
    CHECK(cube_coset_representatives(3) == std::vector<std::uint32_t>{1});
    CHECK(cube_coset_representatives(13).size() == 3);
    std::set<long> cubes;
    for (long x = 1; x < 7; ++x)
        cubes.insert(x * x * x % 7);
    CHECK(cubes == std::set<long>{1, 6});
}

TEST_CASE("match examples")
{
    Field f3 = Field::prime(3);
    CHECK(match(CompatibleLieAlgebra::abelian(f3, 4)) == "N_{4,1}");
    CHECK(match(CompatibleLieAlgebra::abelian(f3, 3)) == "N_{3,1}");
    auto ext = central_extension({CompatibleLieAlgebra::abelian(f3, 3), {{gamma_cocycle(f3, 3, {{1, 1}, {5, 1}})}}});
    CHECK(match(ext) == "N_{4,5}");
    CHECK(match(transport(n34(f3, 2), Matrix::from_ints(f3, {{1, 1, 0}, {0, 1, 0}, {2, 0, 1}}))) == "N_{3,4}^{α=2}");
    CHECK_THROWS_AS(match(CompatibleLieAlgebra::abelian(f3, 5)), ResourceError);
    // Over F_7 the table lists N_{4,9}^{β=1} and N_{4,9}^{β=2}, which are isomorphic.
    CHECK_THROWS_AS(match(n49(Field::prime(7), 1)), ContractError);
}

TEST_CASE("skew pairs on the F_5 table")
{
    Field f5 = Field::prime(5);
    auto pairs = skew_pairs(paper_table(f5));
    std::map<std::string, std::string> partner;
    for (const auto& p : pairs) {
        REQUIRE_FALSE(p.partner.empty());
        partner[p.label] = p.partner;
        CHECK(p.self_paired == (p.partner == p.label));
    }
    for (const auto& [a, b] : partner)
        CHECK(partner.at(b) == a);
    CHECK(partner.at("N_{4,5}") == "N_{4,5}");
    CHECK(partner.at("N_{4,1}") == "N_{4,1}");
    CHECK(partner.at("N_{4,6}") == "N_{4,11}");
    CHECK(partner.at("N_{3,2}") == "N_{3,3}");
    CHECK(partner.at("N_{4,18}^{α=2,β=4}") == "N_{4,18}^{α=3,β=4}");
    CHECK(partner.at("N_{4,16}^{α=2}") == "N_{4,17}^{α=3}");
}

TEST_CASE("text and csv output")
{
    auto es = classify(3, Field::prime(3));
    std::string text = table_text(es);
    CHECK(text.find("N_{3,4}^{α=2}") != std::string::npos);
    CHECK(text.find("[e1,e2]=e3") != std::string::npos);
    std::string csv = table_csv(es);
    CHECK(csv.rfind("label,dim,centre_dim,relations\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(es.size() + 1));
}
