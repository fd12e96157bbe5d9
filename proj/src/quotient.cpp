#include "cdga/quotient.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace cdga {

namespace {

Rational coefficient_of(const Element& e, const Monomial& m) {
    auto it = e.terms().find(m);
    return it == e.terms().end() ? Rational(0) : it->second;
}

Element make_monic(Element e) {
    if (e.is_zero()) return e;
    const Rational lc = e.leading_coefficient();
    return e * Rational(1 / lc);
}

// full reduction of e modulo basis: repeatedly cancels the largest monomial
// divisible by some leading monomial, walking downward
Element reduce_modulo(Element e, const std::vector<Element>& basis) {
    if (basis.empty()) return e;
    std::optional<Monomial> cap;
    for (;;) {
        const Monomial* target = nullptr;
        const Element* reducer = nullptr;
        for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
            if (cap && !monomial_less(it->first, *cap)) continue;
            for (const Element& g : basis) {
                if (monomial_divides(g.leading_monomial(), it->first)) {
                    target = &it->first;
                    reducer = &g;
                    break;
                }
            }
            if (target) break;
        }
        if (!target) return e;
        const Monomial m = *target;
        const Monomial q =
            monomial_quotient(*e.table(), m, reducer->leading_monomial());
        const Element prod = Element::term(e.table(), q, 1) * *reducer;
        const Rational factor = coefficient_of(e, m) / coefficient_of(prod, m);
        e -= prod * factor;
        cap = m;
    }
}

struct PairKey {
    int degree;
    std::size_t i;  // basis index
    std::size_t j;  // basis index for s-pairs, variable index for self-pairs
    int kind;       // 0 = s-pair, 1 = odd self-pair

    bool operator<(const PairKey& o) const {
        return std::tie(degree, i, j, kind) < std::tie(o.degree, o.i, o.j, o.kind);
    }
};

Element s_polynomial(const GeneratorTable& t, const Element& f, const Element& g) {
    const Monomial lam = monomial_lcm(t, f.leading_monomial(), g.leading_monomial());
    const Monomial qf = monomial_quotient(t, lam, f.leading_monomial());
    const Monomial qg = monomial_quotient(t, lam, g.leading_monomial());
    const Element uf = Element::term(f.table(), qf, 1) * f;
    const Element ug = Element::term(g.table(), qg, 1) * g;
    const Rational cf = coefficient_of(uf, lam);
    const Rational cg = coefficient_of(ug, lam);
    return uf * Rational(1 / cf) - ug * Rational(1 / cg);
}

}  // namespace

QuotientAlgebra QuotientAlgebra::build(TablePtr table, std::vector<Element> relations,
                                       int degree_bound) {
    if (degree_bound < 0) throw DegreeBoundError("negative degree bound");
    QuotientAlgebra q;
    q.table_ = table;
    q.bound_ = degree_bound;

    std::vector<std::string> problems;
    for (const Element& r : relations) {
        if (r.table() != table) throw TableMismatchError("relation over a different table");
        if (r.is_zero()) {
            problems.push_back("zero relation");
            continue;
        }
        auto d = r.homogeneous_degree();
        if (!d) {
            problems.push_back("inhomogeneous relation: " + r.to_string());
            continue;
        }
        if (*d < 1) problems.push_back("relation of degree 0: " + r.to_string());
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    q.relations_ = std::move(relations);

    const GeneratorTable& t = *table;
    std::vector<Element> gb;
    std::set<PairKey> pairs;

    auto enqueue_pairs = [&](std::size_t n) {
        const Element& f = gb[n];
        const Monomial& lmf = f.leading_monomial();
        for (std::size_t i = 0; i < n; ++i) {
            const Monomial lam = monomial_lcm(t, gb[i].leading_monomial(), lmf);
            if (lam.degree <= degree_bound) pairs.insert({lam.degree, i, n, 0});
        }
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (!t.odd(v) || lmf.exp[v] == 0) continue;
            const int d = lmf.degree + t.degrees[v];
            if (d <= degree_bound) pairs.insert({d, n, v, 1});
        }
    };

    auto consider = [&](Element e) {
        e = reduce_modulo(std::move(e), gb);
        if (e.is_zero()) return;
        gb.push_back(make_monic(std::move(e)));
        enqueue_pairs(gb.size() - 1);
    };

    for (const Element& r : q.relations_)
        if (*r.homogeneous_degree() <= degree_bound) consider(r);

    while (!pairs.empty()) {
        const PairKey k = *pairs.begin();
        pairs.erase(pairs.begin());
        if (k.kind == 0) {
            consider(s_polynomial(t, gb[k.i], gb[k.j]));
        } else {
            Element e = Element::generator(table, k.j) * gb[k.i];
            if (!e.is_zero()) consider(std::move(e));
        }
    }

    // inter-reduce
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gb.size(); ++i) {
            std::vector<Element> others;
            others.reserve(gb.size() - 1);
            for (std::size_t j = 0; j < gb.size(); ++j)
                if (j != i) others.push_back(gb[j]);
            Element r = reduce_modulo(gb[i], others);
            if (r == gb[i]) continue;
            changed = true;
            if (r.is_zero()) {
                gb.erase(gb.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                gb[i] = make_monic(std::move(r));
            }
        }
    }
    std::sort(gb.begin(), gb.end(), [](const Element& a, const Element& b) {
        return monomial_less(a.leading_monomial(), b.leading_monomial());
    });
    q.gb_ = std::move(gb);

    q.bases_.resize(static_cast<std::size_t>(degree_bound) + 1);
    for (int k = 0; k <= degree_bound; ++k) {
        for (Monomial& m : homogeneous_monomials(t, k)) {
            bool reducible = false;
            for (const Element& g : q.gb_)
                if (monomial_divides(g.leading_monomial(), m)) {
                    reducible = true;
                    break;
                }
            if (!reducible) q.bases_[static_cast<std::size_t>(k)].push_back(std::move(m));
        }
    }
    return q;
}

Element QuotientAlgebra::normal_form(Element e) const {
    if (e.table() != table_) throw TableMismatchError("element over a different table");
    for (const auto& [m, c] : e.terms())
        if (m.degree > bound_)
            throw DegreeBoundError("normal form requested above the degree bound");
    return reduce_modulo(std::move(e), gb_);
}

const std::vector<Monomial>& QuotientAlgebra::degree_basis(int k) const {
    if (k < 0 || k > bound_)
        throw DegreeBoundError("degree " + std::to_string(k) + " is outside [0, " +
                               std::to_string(bound_) + "]");
    return bases_[static_cast<std::size_t>(k)];
}

QVector QuotientAlgebra::coordinates(const Element& e, int k) const {
    if (e.table() != table_) throw TableMismatchError("element over a different table");
    if (!e.is_zero()) {
        auto d = e.homogeneous_degree();
        if (!d || *d != k) throw Error("coordinates of an inhomogeneous element");
    }
    Element nf = normal_form(e);
    return element_coordinates(nf, degree_basis(k));
}

Element QuotientAlgebra::from_coordinates(int k, const QVector& coords) const {
    return element_from_coordinates(table_, degree_basis(k), coords);
}

}  // namespace cdga
