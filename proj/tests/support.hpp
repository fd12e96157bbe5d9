#pragma once

#include <random>
#include <string>
#include <vector>

#include "cdga/dga.hpp"
#include "cdga/gca.hpp"
#include "cdga/linalg.hpp"
#include "cdga/presentation.hpp"
#include "cdga/quotient.hpp"

namespace testsupport {

using namespace cdga;

// Solvable Lie algebra cochain complex on six odd generators plus a closed e7.
inline Presentation free7() {
    return parse_presentation(
        "generators: e1:1 e2:1 e3:1 e4:1 e5:1 e6:1 e7:2\n"
        "differential:\n"
        "  e1 = -e1*e6\n"
        "  e2 = -e2*e6\n"
        "  e3 = -e3*e6\n"
        "  e4 = -e5*e6\n");
}

// Model of S^2 v S^3: truncated polynomial times exterior part.
inline Presentation sphere_wedge() {
    return parse_presentation(
        "generators: e2:2 e3:3\n"
        "relations:\n"
        "  e2^2\n"
        "  e2*e3\n");
}

inline Presentation g5_14() {
    return parse_presentation(
        "generators: x1:1 x2:1 x3:1 x4:1 x5:1\n"
        "differential:\n"
        "  x1 = -x2*x5\n"
        "  x3 = -x4*x5\n"
        "  x4 = x3*x5\n");
}

inline Presentation g5_35() {
    return parse_presentation(
        "generators: x1:1 x2:1 x3:1 x4:1 x5:1\n"
        "differential:\n"
        "  x1 = 2*x1*x4\n"
        "  x2 = -x2*x4 - x3*x5\n"
        "  x3 = -x3*x4 + x2*x5\n");
}

// Heisenberg nilmanifold cochain complex; classically non-formal.
inline Presentation heisenberg() {
    return parse_presentation(
        "generators: a:1 b:1 c:1\n"
        "differential:\n"
        "  c = a*b\n");
}

inline DGA build_dga(const Presentation& p, int bound) {
    auto algebra = QuotientAlgebra::build(p.table, p.relations, bound);
    return DGA::build(std::move(algebra), p.differentials);
}

// Dimension of the degree-k component of a quotient by brute force:
// count monomials, subtract the rank of all monomial multiples of the
// relations.  Supercommutativity makes one-sided multiples span the ideal.
inline std::size_t brute_dimension(const TablePtr& table,
                                   const std::vector<Element>& relations,
                                   int k) {
    auto monomials = homogeneous_monomials(*table, k);
    if (monomials.empty()) return 0;
    std::vector<QVector> rows;
    for (const Element& r : relations) {
        auto rd = r.homogeneous_degree();
        if (!rd || *rd > k) continue;
        for (const Monomial& m : homogeneous_monomials(*table, k - *rd)) {
            Element prod = Element::term(table, m, Rational(1)) * r;
            if (prod.is_zero()) continue;
            rows.push_back(element_coordinates(prod, monomials));
        }
    }
    std::size_t rk = rows.empty() ? 0 : rank(QMatrix::from_rows(rows));
    return monomials.size() - rk;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();  // the raw (num, den) constructor does not reduce
    return q;
}

inline Element random_homogeneous(const TablePtr& table, int degree,
                                  std::mt19937& rng) {
    Element out = Element::zero(table);
    for (const Monomial& m : homogeneous_monomials(*table, degree)) {
        Rational c = random_rational(rng);
        if (c != 0) out = out + Element::term(table, m, c);
    }
    return out;
}

// Random DGA on a free algebra whose non-closed generators map into the
// subalgebra generated by the closed ones, so d*d = 0 holds automatically.
struct RandomDGA {
    Presentation presentation;
    int bound;
};

inline RandomDGA random_valid_dga(std::mt19937& rng) {
    std::uniform_int_distribution<int> ngen(2, 5);
    std::uniform_int_distribution<int> gdeg(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    int n = ngen(rng);
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < n; ++i)
        gens.emplace_back("g" + std::to_string(i), gdeg(rng));
    auto table = GeneratorTable::make(gens);
    int bound = 5;

    std::vector<bool> closed(n, false);
    for (int i = 0; i < n; ++i)
        if (coin(rng) || gens[i].second + 1 > bound) closed[i] = true;
    closed[0] = true;

    std::map<std::string, Element> diffs;
    for (int i = 0; i < n; ++i) {
        if (closed[i]) continue;
        Element image = Element::zero(table);
        for (const Monomial& m : homogeneous_monomials(*table, gens[i].second + 1)) {
            bool supported = true;
            for (int g = 0; g < n; ++g)
                if (m.exp[g] > 0 && !closed[g]) supported = false;
            if (!supported) continue;
            Rational c = random_rational(rng);
            if (c != 0) image = image + Element::term(table, m, c);
        }
        if (image.is_zero()) continue;
        diffs[gens[i].first] = image;
    }

    Presentation p;
    p.table = table;
    p.differentials = std::move(diffs);
    return RandomDGA{std::move(p), bound};
}

}  // namespace testsupport
