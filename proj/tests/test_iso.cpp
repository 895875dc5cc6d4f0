#include <doctest.h>

#include "cla/error.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("isomorphism examples")
{
    Field f5 = Field::prime(5);
    auto g = n34(f5, 2);
    auto same = is_isomorphic(g, g);
    CHECK(same.isomorphic());
    CHECK(*same.witness == Matrix::identity(f5, 3));

    Field q = Field::rationals();
    auto h1 = make(q, 3, {{L, 1, 2, 3, 1}, {C, 1, 2, 3, 1}});
    auto h2 = make(q, 3, {{L, 1, 2, 3, 1}, {C, 1, 3, 2, 1}});
    CHECK(center(h1).dim() == 1);
    CHECK(center(h2).dim() == 0);
    CHECK(is_isomorphic(h1, h2).verdict == Verdict::NonIsomorphic);

    // Over Q anything that fingerprints cannot separate stays open.
    auto h3 = make(q, 3, {{L, 1, 2, 3, 2}, {C, 1, 2, 3, 2}});
    CHECK(is_isomorphic(h1, h3).verdict == Verdict::Unknown);
    CHECK_THROWS_AS(is_isomorphic(n32(f5), n32(Field::prime(7))), FieldError);
    CHECK(is_isomorphic(n32(f5), CompatibleLieAlgebra::abelian(f5, 4)).verdict == Verdict::NonIsomorphic);
}

TEST_CASE("N_{4,9} over F_7: every pair of parameters is isomorphic")
{
    // φ = diag(a, b, ab, ab²) carries N_{4,9}^β onto N_{4,9}^{βb/a}.
    Field f7 = Field::prime(7);
    for (long beta = 1; beta < 7; ++beta)
        for (long target = 1; target < 7; ++target) {
            long a = 1, b = 1;
            while ((beta * b) % 7 != target % 7)
                ++b;
            Matrix phi(f7, 4, 4);
            phi(0, 0) = Scalar(f7, a);
            phi(1, 1) = Scalar(f7, b);
            phi(2, 2) = Scalar(f7, a * b);
            phi(3, 3) = Scalar(f7, a * b * b);
            CHECK(is_homomorphism(n49(f7, beta), n49(f7, target), phi));
            auto r = is_isomorphic(n49(f7, beta), n49(f7, target));
            CHECK(r.isomorphic());
            CHECK(is_homomorphism(n49(f7, beta), n49(f7, target), *r.witness));
        }
}

TEST_CASE("skew-isomorphism examples")
{
    Field f5 = Field::prime(5);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        auto g = random_nilpotent(1 + rng.below(4), f5, rng.below(1u << 30));
        auto r = is_skew_isomorphic(g, switched(g));
        CHECK(r.isomorphic());
        CHECK(is_skew_homomorphism(g, switched(g), Matrix::identity(f5, g.dim())));
    }
    for (long a = 1; a < 5; ++a) {
        long inv = Scalar(f5, a).inverse().residue();
        auto r = is_skew_isomorphic(n34(f5, a), n34(f5, inv));
        CHECK(r.isomorphic());
        CHECK(is_skew_homomorphism(n34(f5, a), n34(f5, inv), *r.witness));
        auto n416 = make(f5, 4, {{L, 1, 2, 3, 1}, {L, 2, 3, 4, 1}, {C, 1, 2, 3, a}});
        auto n417 = make(f5, 4, {{L, 1, 2, 3, 1}, {C, 1, 2, 3, inv}, {C, 2, 3, 4, 1}});
        auto s = is_skew_isomorphic(n416, n417);
        CHECK(s.isomorphic());
        CHECK(is_skew_homomorphism(n416, n417, *s.witness));
    }
}

TEST_CASE("fingerprint examples")
{
    Field f3 = Field::prime(3);
    auto a = fingerprint(CompatibleLieAlgebra::abelian(f3, 3));
    auto b = fingerprint(n32(f3));
    CHECK(a.center == 3);
    CHECK(b.center == 1);
    CHECK_FALSE(a == b);

    // Switch copies share everything except the order of the single-bracket entries.
    auto c = fingerprint(n33(f3));
    CHECK(b.derived_pair() == c.derived_pair());
    CHECK(b.derived_first == 1);
    CHECK(c.derived_first == 0);
    CHECK(b.center == c.center);
    CHECK(b.lower_central == c.lower_central);
    CHECK(b.cocycles == c.cocycles);
    CHECK(b.coboundaries == c.coboundaries);
    CHECK_FALSE(is_isomorphic(n32(f3), n33(f3)).isomorphic());

    auto n45 = fingerprint(make(f3, 4, {{L, 2, 3, 4, 1}, {C, 1, 3, 4, 1}}));
    CHECK(n45.center == 1);
    CHECK(n45.derived == 1);
}

TEST_CASE("random nilpotent algebras")
{
    Field f3 = Field::prime(3);
    CHECK(random_nilpotent(0, f3, 5).dim() == 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(random_nilpotent(1, f3, seed) == CompatibleLieAlgebra::abelian(f3, 1));
    CHECK(random_nilpotent(4, f3, 99) == random_nilpotent(4, f3, 99));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = random_nilpotent(4, Field::prime(5), seed);
        CHECK(g.dim() == 4);
        CHECK(verify(g).ok());
        CHECK(is_nilpotent(g));
    }
}

TEST_CASE("property: oracle is reflexive, symmetric and transitive on random pairs")
{
    Rng rng(18);
    for (int t = 0; t < 60; ++t) {
        Field f = Field::prime(t % 3 == 0 ? 7 : (t % 3 == 1 ? 3 : 5));
        auto g = random_nilpotent(1 + rng.below(4), f, rng.below(1u << 30));
        Matrix p = rng.invertible(f, g.dim()), q = rng.invertible(f, g.dim());
        auto h = transport(g, p);
        auto k = transport(h, q);
        REQUIRE(is_homomorphism(g, h, p));

        CHECK(is_isomorphic(g, g).isomorphic());
        auto gh = is_isomorphic(g, h), hg = is_isomorphic(h, g), hk = is_isomorphic(h, k);
        REQUIRE(gh.isomorphic());
        REQUIRE(hg.isomorphic());
        REQUIRE(hk.isomorphic());
        CHECK(is_homomorphism(g, h, *gh.witness));
        CHECK(is_homomorphism(h, g, *inverse(*gh.witness)));
        CHECK(is_homomorphism(g, k, *hk.witness * *gh.witness));
        CHECK(fingerprint(g) == fingerprint(h));

        auto sk = is_skew_isomorphic(g, switched(h));
        CHECK(sk.isomorphic());
        CHECK(sk.verdict == is_isomorphic(g, switched(switched(h))).verdict);
    }
}

TEST_CASE("property: non-isomorphic random pairs are rejected consistently")
{
    Rng rng(19);
    Field f5 = Field::prime(5);
    std::size_t negatives = 0;
    for (int t = 0; t < 80; ++t) {
        auto g = random_nilpotent(4, f5, rng.below(1u << 30));
        auto h = random_nilpotent(4, f5, rng.below(1u << 30));
        auto gh = is_isomorphic(g, h);
        auto hg = is_isomorphic(h, g);
        CHECK(gh.verdict == hg.verdict);
        CHECK(gh.verdict != Verdict::Unknown);
        if (gh.isomorphic())
            CHECK(is_homomorphism(g, h, *gh.witness));
        else
            ++negatives;
        CHECK(gh.verdict == is_isomorphic(g, h, {}, Backend::Serial).verdict);
        CHECK(is_skew_isomorphic(g, h).verdict == is_isomorphic(g, switched(h)).verdict);
    }
    CHECK(negatives > 0);
}
