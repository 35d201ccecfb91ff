#include <doctest.h>

#include "test_util.hpp"

using namespace gradord;
using namespace gradord::testutil;

namespace {
FracIdeal ideal(const std::string& s) { return FracIdeal::parse(s); }
}

TEST_CASE("canonical antichains") {
    // Dominated generators drop out; order of input is irrelevant.
    FracIdeal a = FracIdeal::monomial({{2, 0}, {1, 1}, {2, 1}, {1, 1}, {0, 3}});
    FracIdeal b = FracIdeal::monomial({{0, 3}, {1, 1}, {2, 0}});
    CHECK(a == b);
    CHECK(a.str() == "p^0*T^3, p^1*T^1, p^2*T^0");
    CHECK_THROWS_AS(FracIdeal::monomial({}), DomainError);
}

TEST_CASE("products") {
    CHECK(ideal("m^2").product(ideal("m^3")) == ideal("m^5"));
    FracIdeal m = FracIdeal::maximal_ideal(Backend::Monomial2D);
    CHECK(m.product(m) == ideal("p^0*T^2, p^1*T^1, p^2*T^0"));
    // (pT)(p,T) checked against brute-force membership on a box.
    FracIdeal pt = ideal("p^1*T^1");
    FracIdeal prod = pt.product(m);
    CHECK(prod == ideal("p^1*T^2, p^2*T^1"));
    CHECK(staircase_points(prod, 0, 4) == product_points(pt, m, 0, 4));
    CHECK_THROWS_AS(ideal("m^1").product(m), DomainError);
}

TEST_CASE("sum and intersection") {
    CHECK(ideal("m^2").intersect(ideal("m^5")) == ideal("m^5"));
    CHECK(ideal("m^2").sum(ideal("m^5")) == ideal("m^2"));

    FracIdeal a = ideal("p^0*T^4, p^1*T^0");   // (p, T^4)
    FracIdeal b = ideal("p^0*T^1, p^2*T^0");   // (p^2, T)
    FracIdeal meet = a.intersect(b);
    CHECK(meet == ideal("p^0*T^4, p^1*T^1, p^2*T^0"));
    // Membership sampling of the intersection on a box.
    for (int x = -1; x <= 5; ++x)
        for (int y = -1; y <= 5; ++y)
            CHECK(meet.contains_monomial({x, y}) ==
                  (a.contains_monomial({x, y}) && b.contains_monomial({x, y})));

    CHECK(ideal("p^0*T^2, p^1*T^0").sum(ideal("p^0*T^1, p^2*T^0")) ==
          FracIdeal::maximal_ideal(Backend::Monomial2D));
}

TEST_CASE("containment") {
    FracIdeal m = FracIdeal::maximal_ideal(Backend::Monomial2D);
    CHECK(m.contains(ideal("p^0*T^2, p^1*T^0")));
    CHECK_FALSE(ideal("m^1").contains(ideal("m^0")));
    CHECK(m.contains(ideal("p^1*T^1")));
    CHECK_FALSE(ideal("p^1*T^1").contains(m));
}

TEST_CASE("the maximal ideal contains every proper integral ideal") {
    std::mt19937 rng(3);
    const FracIdeal m = FracIdeal::maximal_ideal(Backend::Monomial2D);
    int proper_seen = 0;
    for (int iter = 0; iter < 200; ++iter) {
        FracIdeal i = random_integral_monomial_ideal(rng);
        if (i.is_unit_ideal()) continue;
        ++proper_seen;
        CHECK(m.contains(i));
    }
    CHECK(proper_seen > 100);
    for (int k = 1; k <= 5; ++k) CHECK(FracIdeal::maximal_ideal(Backend::DvrExp).contains(FracIdeal::dvr(k)));
}

TEST_CASE("invertibility") {
    FracIdeal m = FracIdeal::maximal_ideal(Backend::Monomial2D);
    CHECK_FALSE(m.is_invertible());
    CHECK_THROWS_AS(m.inverse(), DomainError);
    FracIdeal pt2 = ideal("p^1*T^2");
    CHECK(pt2.is_invertible());
    CHECK(pt2.inverse() == ideal("p^-1*T^-2"));
    CHECK(ideal("m^3").inverse() == ideal("m^-3"));
    CHECK(pt2.product(pt2.inverse()).is_unit_ideal());

    // inverse(I) * I is the unit ideal for every invertible I.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> exp(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        FracIdeal principal = FracIdeal::principal(Backend::Monomial2D, {exp(rng), exp(rng)});
        CHECK(principal.inverse().product(principal).is_unit_ideal());
        FracIdeal d = FracIdeal::dvr(exp(rng));
        CHECK(d.inverse().product(d).is_unit_ideal());
    }
}

TEST_CASE("colon quotients") {
    FracIdeal m = FracIdeal::maximal_ideal(Backend::Monomial2D);
    CHECK(FracIdeal::unit(Backend::Monomial2D).colon(m).is_unit_ideal());
    CHECK(ideal("m^1").colon(ideal("m^3")) == ideal("m^-2"));
    // (I : J) is the largest K with K*J inside I, on sampled staircases.
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        FracIdeal i = random_monomial_ideal(rng), j = random_monomial_ideal(rng);
        FracIdeal q = i.colon(j);
        CHECK(i.contains(q.product(j)));
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
                bool in_quotient = q.contains_monomial({x, y});
                bool multiplies_in = true;
                for (const auto& g : j.generators())
                    multiplies_in = multiplies_in && i.contains_monomial(g + Monomial{x, y});
                CHECK(in_quotient == multiplies_in);
            }
    }
}

TEST_CASE("lattice laws on random staircases") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        FracIdeal i = random_monomial_ideal(rng);
        FracIdeal j = random_monomial_ideal(rng);
        FracIdeal k = random_monomial_ideal(rng);
        CHECK(i.sum(i.intersect(j)) == i);
        CHECK(i.intersect(i.sum(j)) == i);
        CHECK(i.sum(j) == j.sum(i));
        CHECK(i.intersect(j) == j.intersect(i));
        CHECK(i.sum(j).sum(k) == i.sum(j.sum(k)));
        CHECK(i.intersect(j).intersect(k) == i.intersect(j.intersect(k)));
        // Staircases are pointwise min/max, so the lattice is distributive.
        CHECK(i.intersect(j.sum(k)) == i.intersect(j).sum(i.intersect(k)));
        // Product laws.
        CHECK(i.product(j) == j.product(i));
        CHECK(i.product(j.product(k)) == i.product(j).product(k));
        CHECK(i.product(FracIdeal::unit(Backend::Monomial2D)) == i);
    }
}

TEST_CASE("product-containment compatibility") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        FracIdeal i = random_monomial_ideal(rng);
        FracIdeal p = random_integral_monomial_ideal(rng);
        CHECK(i.contains(i.product(p)));
    }
    for (int iter = 0; iter < 100; ++iter) {
        std::uniform_int_distribution<int> exp(-4, 4);
        FracIdeal i = FracIdeal::dvr(exp(rng));
        FracIdeal p = FracIdeal::dvr(std::abs(exp(rng)));
        CHECK(i.contains(i.product(p)));
    }
}

TEST_CASE("normalization is independent of generator presentation") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        FracIdeal i = random_monomial_ideal(rng);
        // Re-present with shuffled, padded generators.
        std::vector<Monomial> gens = i.generators();
        std::vector<Monomial> padded = gens;
        for (const auto& g : gens) padded.push_back(g + Monomial{1, 2});  // dominated
        std::shuffle(padded.begin(), padded.end(), rng);
        CHECK(FracIdeal::monomial(padded) == i);
        FracIdeal j = random_monomial_ideal(rng);
        std::vector<Monomial> prod_gens;
        for (const auto& g : i.generators())
            for (const auto& h : j.generators()) prod_gens.push_back(g + h);
        std::shuffle(prod_gens.begin(), prod_gens.end(), rng);
        CHECK(FracIdeal::monomial(prod_gens) == i.product(j));
    }
}

TEST_CASE("serialization round-trips bit-exactly") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 100; ++iter) {
        FracIdeal i = random_monomial_ideal(rng);
        CHECK(FracIdeal::parse(i.str()) == i);
        CHECK(FracIdeal::parse(i.str()).str() == i.str());
        std::uniform_int_distribution<int> exp(-9, 9);
        FracIdeal d = FracIdeal::dvr(exp(rng));
        CHECK(FracIdeal::parse(d.str()) == d);
        CHECK(FracIdeal::parse(d.str()).str() == d.str());
    }
    // Shorthand forms parse too.
    CHECK(ideal("p, T") == FracIdeal::maximal_ideal(Backend::Monomial2D));
    CHECK(ideal("p*T^2") == ideal("p^1*T^2"));
    CHECK(ideal("1") == FracIdeal::unit(Backend::Monomial2D));
    CHECK_THROWS_AS(ideal(""), ParseError);
    CHECK_THROWS_AS(ideal("m^"), ParseError);
    CHECK_THROWS_AS(ideal("p^1*q^2"), ParseError);
}
