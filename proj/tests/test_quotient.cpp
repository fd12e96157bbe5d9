#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdga/quotient.hpp"
#include "support.hpp"

using namespace cdga;
using testsupport::brute_dimension;

TEST_CASE("truncated polynomial times exterior algebra") {
    auto p = testsupport::sphere_wedge();
    auto q = QuotientAlgebra::build(p.table, p.relations, 7);

    CHECK(q.dimension(0) == 1);
    REQUIRE(q.dimension(2) == 1);
    CHECK(monomial_to_string(*p.table, q.degree_basis(2)[0]) == "e2");
    REQUIRE(q.dimension(3) == 1);
    CHECK(monomial_to_string(*p.table, q.degree_basis(3)[0]) == "e3");
    CHECK(q.dimension(4) == 0);
    CHECK(q.dimension(5) == 0);
    CHECK(q.dimension(6) == 0);
    CHECK(q.dimension(1) == 0);

    Element e2 = Element::generator(p.table, 0);
    Element e3 = Element::generator(p.table, 1);
    CHECK(q.normal_form(Rational(5) * e2 * e3 + e3) == e3);
    CHECK(q.normal_form(e2 * e2).is_zero());
    CHECK_THROWS_AS(q.normal_form(pow(e2, 4)), DegreeBoundError);
    CHECK_THROWS_AS(q.degree_basis(8), DegreeBoundError);
}

TEST_CASE("free algebra has no relations") {
    auto t = GeneratorTable::make({{"a", 1}, {"b", 1}, {"c", 2}});
    auto q = QuotientAlgebra::build(t, {}, 6);
    CHECK(q.groebner_basis().empty());
    for (int k = 0; k <= 6; ++k)
        CHECK(q.dimension(k) == homogeneous_monomials(*t, k).size());
}

TEST_CASE("odd self-pairs are not skipped") {
    // theta1*theta2 - theta3*theta4 alone forces every degree-3 monomial
    // into the ideal; missing odd multiples would leave dimension 2
    auto t = GeneratorTable::make(
        {{"t1", 1}, {"t2", 1}, {"t3", 1}, {"t4", 1}});
    Element r = Element::generator(t, 0) * Element::generator(t, 1) -
                Element::generator(t, 2) * Element::generator(t, 3);
    auto q = QuotientAlgebra::build(t, {r}, 4);
    CHECK(q.dimension(2) == 5);
    CHECK(q.dimension(3) == brute_dimension(t, {r}, 3));
    CHECK(q.dimension(3) == 0);
    CHECK(q.dimension(4) == brute_dimension(t, {r}, 4));
}

TEST_CASE("dimensions match the brute force oracle") {
    std::mt19937 rng(59);
    auto t = GeneratorTable::make(
        {{"a", 1}, {"b", 1}, {"c", 1}, {"u", 2}, {"v", 2}});
    std::uniform_int_distribution<int> deg(2, 4);
    std::uniform_int_distribution<int> nrel(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Element> rels;
        int wanted = nrel(rng);
        while ((int)rels.size() < wanted) {
            Element r = testsupport::random_homogeneous(t, deg(rng), rng);
            if (!r.is_zero()) rels.push_back(r);
        }
        auto q = QuotientAlgebra::build(t, rels, 5);
        for (int k = 0; k <= 5; ++k) {
            CAPTURE(trial);
            CAPTURE(k);
            CHECK(q.dimension(k) == brute_dimension(t, rels, k));
        }
    }
}

TEST_CASE("normal form kills exactly the ideal") {
    std::mt19937 rng(61);
    auto t = GeneratorTable::make({{"a", 1}, {"b", 1}, {"u", 2}, {"v", 2}});
    Element r1 = Element::generator(t, 2) * Element::generator(t, 2) -
                 Element::generator(t, 2) * Element::generator(t, 3);
    Element r2 = Element::generator(t, 0) * Element::generator(t, 1) +
                 Element::generator(t, 2);
    auto q = QuotientAlgebra::build(t, {r1, r2}, 6);

    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Element rel = pick(rng) ? r1 : r2;
        int room = 6 - *rel.homogeneous_degree();
        std::uniform_int_distribution<int> cdeg(0, room);
        Element cof = testsupport::random_homogeneous(t, cdeg(rng), rng);
        Element member = cof * rel;
        if (member.is_zero()) continue;
        CHECK(q.normal_form(member).is_zero());
    }

    // normal form is a projection: nf(nf(e)) == nf(e), nf(e) - e in ideal
    for (int trial = 0; trial < 50; ++trial) {
        Element e = testsupport::random_homogeneous(t, deg(rng) + 1, rng);
        Element nf = q.normal_form(e);
        CHECK(q.normal_form(nf) == nf);
        CHECK(q.normal_form(e - nf).is_zero());
    }
}

TEST_CASE("relations above the bound are dropped") {
    auto t = GeneratorTable::make({{"u", 2}});
    Element r = pow(Element::generator(t, 0), 3);
    auto q = QuotientAlgebra::build(t, {r}, 4);
    CHECK(q.dimension(2) == 1);
    CHECK(q.dimension(4) == 1);
    CHECK(q.groebner_basis().empty());
    CHECK(q.relations().size() == 1);
}

TEST_CASE("invalid relations are rejected") {
    auto t = GeneratorTable::make({{"a", 1}, {"u", 2}});
    Element inhom = Element::generator(t, 0) + Element::generator(t, 1);
    CHECK_THROWS_AS(QuotientAlgebra::build(t, {inhom}, 4), ValidationError);
    CHECK_THROWS_AS(QuotientAlgebra::build(t, {Element::one(t)}, 4),
                    ValidationError);
    CHECK_THROWS_AS(QuotientAlgebra::build(t, {Element::zero(t)}, 4),
                    ValidationError);
}

TEST_CASE("coordinates in the quotient") {
    auto p = testsupport::sphere_wedge();
    auto q = QuotientAlgebra::build(p.table, p.relations, 6);
    Element e3 = Element::generator(p.table, 1);
    QVector c = q.coordinates(e3 * Rational(7), 3);
    CHECK(c == QVector{7});
    CHECK(q.from_coordinates(3, c) == e3 * Rational(7));
    CHECK(q.coordinates(Element::zero(p.table), 3) == QVector{0});
    Element e2 = Element::generator(p.table, 0);
    CHECK_THROWS_AS(q.coordinates(e2, 3), Error);
}

TEST_CASE("groebner basis is reduced and sorted") {
    auto t = GeneratorTable::make(
        {{"t1", 1}, {"t2", 1}, {"t3", 1}, {"t4", 1}});
    Element r = Element::generator(t, 0) * Element::generator(t, 1) -
                Element::generator(t, 2) * Element::generator(t, 3);
    auto q = QuotientAlgebra::build(t, {r}, 4);
    const auto& gb = q.groebner_basis();
    REQUIRE(!gb.empty());
    for (std::size_t i = 0; i + 1 < gb.size(); ++i) {
        CHECK(!monomial_less(gb[i + 1].leading_monomial(),
                             gb[i].leading_monomial()));
    }
    for (const Element& g : gb) {
        CHECK(g.leading_coefficient() == 1);
        // no term of one member is divisible by another member's lead
        for (const Element& h : gb) {
            if (&g == &h) continue;
            for (const auto& [m, c] : g.terms())
                CHECK(!monomial_divides(h.leading_monomial(), m));
        }
    }
}
