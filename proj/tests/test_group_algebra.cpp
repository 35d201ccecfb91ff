#include <doctest.h>

#include "gradord/group_algebra.hpp"

using namespace gradord;

TEST_CASE("bundled groups are sane") {
    for (const char* name : {"C2", "C3", "C5", "C7", "C9", "S3", "D4", "Q8", "A4"}) {
        CharacterTable t = CharacterTable::bundled(name);
        const FiniteGroup& g = t.group();
        CHECK(g.class_count() == t.row_count());
        int sum = 0;
        for (const auto& cls : g.classes()) sum += (int)cls.size();
        CHECK(sum == g.order());
    }
    CHECK(CharacterTable::bundled("S3").group().exponent() == 6);
    CHECK(CharacterTable::bundled("Q8").group().exponent() == 4);
    CHECK(CharacterTable::bundled("A4").group().order() == 12);
    CHECK_THROWS_AS(CharacterTable::bundled("M11"), DomainError);
}

TEST_CASE("decomposition groups") {
    DecompositionGroup d = decomposition_group(7, 3);
    CHECK(d.elements == std::vector<long long>{1, 2, 3, 4, 5, 6});
    CHECK(d.inertia == std::vector<long long>{1});
    CHECK(d.frobenius == 3);

    d = decomposition_group(3, 3);
    CHECK(d.elements == std::vector<long long>{1, 2});
    CHECK(d.inertia == std::vector<long long>{1, 2});  // totally ramified

    d = decomposition_group(8, 3);
    CHECK(d.elements == std::vector<long long>{1, 3});
    CHECK(d.inertia == std::vector<long long>{1});

    d = decomposition_group(9, 3);
    CHECK(d.elements.size() == 6);
    CHECK(d.inertia.size() == 6);

    CHECK_THROWS_AS(decomposition_group(0, 3), DomainError);
    CHECK_THROWS_AS(decomposition_group(7, 4), DomainError);
    CHECK_THROWS_AS(decomposition_group(7, 2), DomainError);
}

TEST_CASE("p-adic orbits") {
    auto orbits = p_adic_orbits(CharacterTable::bundled("C3"), 3);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0] == std::vector<int>{0});
    CHECK(orbits[1] == std::vector<int>{1, 2});

    orbits = p_adic_orbits(CharacterTable::bundled("S3"), 7);
    CHECK(orbits.size() == 3);
    for (const auto& o : orbits) CHECK(o.size() == 1);

    orbits = p_adic_orbits(CharacterTable::bundled("C7"), 3);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() == 1);
    CHECK(orbits[1].size() == 6);
}

TEST_CASE("primitive idempotents") {
    // C2 trivial character: (1 + g)/2.
    CharacterTable c2 = CharacterTable::bundled("C2");
    GroupAlgebraElement e = primitive_idempotent(c2, 0);
    CHECK(e.coefficient(0).rational_value() == Rational(1, 2));
    CHECK(e.coefficient(1).rational_value() == Rational(1, 2));

    // C3 faithful: (1 + zeta^2 g + zeta g^2)/3.
    CharacterTable c3 = CharacterTable::bundled("C3");
    GroupAlgebraElement f = primitive_idempotent(c3, 1);
    CHECK(f.coefficient(0) == Cyclotomic::from_rational(3, Rational(1, 3)));
    CHECK(f.coefficient(1) == Cyclotomic::zeta_power(3, 2) * Rational(1, 3));
    CHECK(f.coefficient(2) == Cyclotomic::zeta_power(3, 1) * Rational(1, 3));

    // S3 sign character: (1/6) sum sgn(h) h.
    CharacterTable s3 = CharacterTable::bundled("S3");
    GroupAlgebraElement s = primitive_idempotent(s3, 1);
    CHECK(s.coefficient(0).rational_value() == Rational(1, 6));
    CHECK(s.coefficient(1).rational_value() == Rational(-1, 6));
    CHECK(s.coefficient(4).rational_value() == Rational(1, 6));
}

TEST_CASE("epsilon idempotents") {
    CharacterTable c3 = CharacterTable::bundled("C3");
    GroupAlgebraElement eps = epsilon_idempotent(c3, {1, 2});
    CHECK(eps.coefficient(0).rational_value() == Rational(2, 3));
    CHECK(eps.coefficient(1).rational_value() == Rational(-1, 3));
    CHECK(eps.coefficient(2).rational_value() == Rational(-1, 3));

    GroupAlgebraElement triv = epsilon_idempotent(c3, {0});
    for (int h = 0; h < 3; ++h) CHECK(triv.coefficient(h).rational_value() == Rational(1, 3));

    CharacterTable c7 = CharacterTable::bundled("C7");
    auto orbits = p_adic_orbits(c7, 3);
    GroupAlgebraElement big = epsilon_idempotent(c7, orbits[1]);
    GroupAlgebraElement one = GroupAlgebraElement::one(c7.group_ptr(), c7.level());
    CHECK(big == one - epsilon_idempotent(c7, orbits[0]));
}

TEST_CASE("idempotent suite over all bundled groups") {
    for (const char* name : {"C2", "C3", "C5", "C7", "C9", "S3", "D4", "Q8", "A4"}) {
        CharacterTable t = CharacterTable::bundled(name);
        for (int r = 0; r < t.row_count(); ++r) {
            GroupAlgebraElement e = primitive_idempotent(t, r);
            CHECK(e.is_idempotent());
            CHECK(e.is_central());
        }
        for (long long p : {3LL, 5LL, 7LL}) {
            auto orbits = p_adic_orbits(t, p);
            GroupAlgebraElement sum(t.group_ptr(), t.level());
            std::vector<GroupAlgebraElement> eps;
            for (const auto& orbit : orbits) eps.push_back(epsilon_idempotent(t, orbit));
            DecompositionGroup dec = decomposition_group(t.level(), p);
            for (const auto& e : eps) {
                CHECK(e.is_idempotent());
                CHECK(e.is_central());
                // Coefficients are fixed by the decomposition group and
                // have denominators dividing #H coordinatewise.
                for (int h = 0; h < t.group().order(); ++h) {
                    for (long long aa : dec.elements)
                        CHECK(e.coefficient(h).galois(aa) == e.coefficient(h));
                    for (const auto& coord : e.coefficient(h).coefficients())
                        CHECK(t.group().order() % coord.den() == 0);
                }
                sum = sum + e;
            }
            CHECK(sum == GroupAlgebraElement::one(t.group_ptr(), t.level()));
            for (size_t i = 0; i < eps.size(); ++i)
                for (size_t j = i + 1; j < eps.size(); ++j) {
                    GroupAlgebraElement prod = eps[i] * eps[j];
                    bool zero = true;
                    for (int h = 0; h < t.group().order(); ++h)
                        zero = zero && prod.coefficient(h).is_zero();
                    CHECK(zero);
                }
        }
    }
}

TEST_CASE("chi invariants for C7 with the squaring automorphism") {
    CharacterTable c7 = CharacterTable::bundled("C7");
    std::vector<int> alpha = c7.group().power_map(2);
    CHECK(c7.group().is_automorphism(alpha));
    CHECK(c7.group().automorphism_order(alpha) == 3);
    ChiInvariants inv = chi_invariants(c7, alpha, 1, 3);
    CHECK(inv.w_chi == 3);
    CHECK(inv.v_chi == 1);
    CHECK(inv.galois_witness == 2);
}

TEST_CASE("chi invariants for identity and C9") {
    CharacterTable c9 = CharacterTable::bundled("C9");
    std::vector<int> id = c9.group().power_map(1);
    ChiInvariants inv = chi_invariants(c9, id, 1, 3);
    CHECK(inv.w_chi == 1);
    CHECK(inv.v_chi == 1);

    std::vector<int> alpha = c9.group().power_map(4);
    CHECK(c9.group().automorphism_order(alpha) == 3);
    ChiInvariants inv9 = chi_invariants(c9, alpha, 1, 3);
    CHECK(inv9.w_chi == 3);
    CHECK(inv9.v_chi == 1);
    CHECK(inv9.w_chi % inv9.v_chi == 0);
}

TEST_CASE("chi invariants validate alpha") {
    CharacterTable c7 = CharacterTable::bundled("C7");
    std::vector<int> not_hom(7, 0);
    CHECK_THROWS_AS(chi_invariants(c7, not_hom, 1, 3), DomainError);
    // x -> x^3 has order 6 = 2 * 3, not a 3-power.
    std::vector<int> alpha6 = c7.group().power_map(3);
    CHECK(c7.group().is_automorphism(alpha6));
    CHECK_THROWS_AS(chi_invariants(c7, alpha6, 1, 3), DomainError);
}

TEST_CASE("v divides w on sampled automorphism actions") {
    struct Case {
        const char* group;
        long long power;
        long long p;
    };
    for (auto c : {Case{"C7", 2, 3}, Case{"C9", 4, 3}, Case{"C9", 7, 3}, Case{"C13", 3, 3}}) {
        CharacterTable t = CharacterTable::bundled(c.group);
        std::vector<int> alpha = t.group().power_map(c.power);
        if (!t.group().is_automorphism(alpha)) continue;
        for (int row = 0; row < t.row_count(); ++row) {
            ChiInvariants inv = chi_invariants(t, alpha, row, c.p);
            CHECK(inv.w_chi % inv.v_chi == 0);
        }
    }
}
