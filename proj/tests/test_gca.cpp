#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdga/gca.hpp"
#include "support.hpp"

using namespace cdga;

namespace {

TablePtr two_odd_one_even() {
    return GeneratorTable::make({{"x", 1}, {"y", 1}, {"t", 2}});
}

}  // namespace

TEST_CASE("generator table validation") {
    CHECK_THROWS_AS(GeneratorTable::make({{"x", 0}}), ValidationError);
    CHECK_THROWS_AS(GeneratorTable::make({{"x", 1}, {"x", 2}}), ValidationError);
    CHECK_THROWS_AS(GeneratorTable::make({{"2x", 1}}), ValidationError);
    CHECK_THROWS_AS(GeneratorTable::make({{"", 1}}), ValidationError);
    auto t = GeneratorTable::make({{"x", 1}, {"t", 2}});
    CHECK(t->size() == 2);
    CHECK(t->odd(0));
    CHECK(!t->odd(1));
    CHECK(t->find("t") == std::size_t{1});
    CHECK(!t->find("z").has_value());
}

TEST_CASE("monomial order is degree first, then early generators") {
    auto t = two_odd_one_even();
    Monomial x = make_monomial(*t, {1, 0, 0});
    Monomial y = make_monomial(*t, {0, 1, 0});
    Monomial xy = make_monomial(*t, {1, 1, 0});
    Monomial tt = make_monomial(*t, {0, 0, 1});
    CHECK(monomial_less(y, x));
    CHECK(monomial_less(x, xy));   // degree wins
    CHECK(monomial_less(tt, xy));  // same degree, x-exponent decides
    CHECK(!monomial_less(x, x));
}

TEST_CASE("homogeneous monomials are enumerated in descending order") {
    auto t = GeneratorTable::make({{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1},
                                   {"e5", 1}, {"e6", 1}, {"e7", 2}});
    auto deg2 = homogeneous_monomials(*t, 2);
    // 15 odd pairs plus e7
    CHECK(deg2.size() == 16);
    CHECK(monomial_to_string(*t, deg2.front()) == "e1*e2");
    CHECK(monomial_to_string(*t, deg2.back()) == "e7");
    for (std::size_t i = 0; i + 1 < deg2.size(); ++i)
        CHECK(monomial_less(deg2[i + 1], deg2[i]));

    auto deg0 = homogeneous_monomials(*t, 0);
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].is_unit());
}

TEST_CASE("odd generators square to zero") {
    auto t = two_odd_one_even();
    Element x = Element::generator(t, 0);
    Element tt = Element::generator(t, 2);
    CHECK((x * x).is_zero());
    CHECK(!(tt * tt).is_zero());
    CHECK(pow(x, 2).is_zero());
    CHECK(pow(tt, 3) == Element::term(t, make_monomial(*t, {0, 0, 3}), 1));
}

TEST_CASE("products pick up the crossing sign") {
    auto t = two_odd_one_even();
    Element x = Element::generator(t, 0);
    Element y = Element::generator(t, 1);
    Element tt = Element::generator(t, 2);
    CHECK(y * x == -(x * y));
    CHECK(tt * x == x * tt);
    CHECK(normal_order(t, {1, 0}, 1) == -(x * y));
    CHECK(normal_order(t, {0, 1}, 1) == x * y);
}

TEST_CASE("graded commutativity on random homogeneous elements") {
    std::mt19937 rng(41);
    auto t = GeneratorTable::make(
        {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 3}, {"e", 2}});
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int da = deg(rng), db = deg(rng);
        Element a = testsupport::random_homogeneous(t, da, rng);
        Element b = testsupport::random_homogeneous(t, db, rng);
        Element ab = a * b;
        Element ba = b * a;
        if (da * db % 2 != 0)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
    }
}

TEST_CASE("multiplication is associative and distributive") {
    std::mt19937 rng(43);
    auto t = GeneratorTable::make({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 3}});
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(1, 3);
        Element a = testsupport::random_homogeneous(t, deg(rng), rng);
        Element b = testsupport::random_homogeneous(t, deg(rng), rng);
        Element c = testsupport::random_homogeneous(t, deg(rng), rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("homogeneous degree detection") {
    auto t = two_odd_one_even();
    Element x = Element::generator(t, 0);
    Element tt = Element::generator(t, 2);
    CHECK(x.homogeneous_degree() == 1);
    CHECK((x * Element::generator(t, 1) + tt).homogeneous_degree() == 2);
    CHECK(!(x + tt).homogeneous_degree().has_value());
    CHECK(!Element::zero(t).homogeneous_degree().has_value());
    CHECK(Element::zero(t).is_homogeneous());
    CHECK(Element::one(t).homogeneous_degree() == 0);
}

TEST_CASE("rendering rules") {
    auto t = GeneratorTable::make({{"e2", 2}, {"e3", 3}});
    Element e2 = Element::generator(t, 0);
    Element e3 = Element::generator(t, 1);
    CHECK((Rational(5) * e2 * e3 + e3).to_string() == "5*e2*e3 + e3");
    CHECK((e2 * e2).to_string() == "e2^2");
    CHECK((-e3).to_string() == "-e3");
    CHECK((e2 - e3 * Rational(2)).to_string() == "-2*e3 + e2");
    CHECK((Rational(1, 2) * e2).to_string() == "1/2*e2");
    CHECK(Element::zero(t).to_string() == "0");
    CHECK(Element::one(t).to_string() == "1");
    CHECK((Element::one(t) * Rational(-3)).to_string() == "-3");
}

TEST_CASE("mixing tables is rejected") {
    auto t1 = GeneratorTable::make({{"x", 1}});
    auto t2 = GeneratorTable::make({{"x", 1}});
    Element a = Element::generator(t1, 0);
    Element b = Element::generator(t2, 0);
    CHECK_THROWS_AS(a + b, TableMismatchError);
    CHECK_THROWS_AS(a * b, TableMismatchError);
}

TEST_CASE("coordinates round trip") {
    auto t = two_odd_one_even();
    auto basis = homogeneous_monomials(*t, 2);
    Element e = Element::term(t, basis[0], Rational(3)) +
                Element::term(t, basis[1], Rational(-1, 2));
    QVector coords = element_coordinates(e, basis);
    CHECK(coords == QVector{3, Rational(-1, 2)});
    CHECK(element_from_coordinates(t, basis, coords) == e);
    Element stray = Element::generator(t, 0);
    CHECK_THROWS_AS(element_coordinates(stray, basis), Error);
}

TEST_CASE("extending to a larger table") {
    auto small = GeneratorTable::make({{"x", 1}, {"y", 1}});
    auto big = GeneratorTable::make({{"x", 1}, {"y", 1}, {"z", 2}});
    Element e = Element::generator(small, 0) * Element::generator(small, 1);
    Element lifted = extend_to_table(e, big);
    CHECK(lifted.table() == big);
    CHECK(lifted.to_string() == "x*y");
    auto wrong = GeneratorTable::make({{"y", 1}, {"x", 1}, {"z", 2}});
    CHECK_THROWS_AS(extend_to_table(e, wrong), TableMismatchError);
}
