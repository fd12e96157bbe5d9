#include "cdga/gca.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cdga {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

TablePtr GeneratorTable::make(const std::vector<std::pair<std::string, int>>& gens) {
    auto t = std::make_shared<GeneratorTable>();
    std::vector<std::string> problems;
    for (const auto& [name, deg] : gens) {
        if (!valid_identifier(name)) problems.push_back("bad generator name: " + name);
        if (deg < 1)
            problems.push_back("generator " + name + " has degree " + std::to_string(deg) +
                               ", degrees must be at least 1");
        if (t->index_of.count(name)) problems.push_back("duplicate generator: " + name);
        t->index_of[name] = t->names.size();
        t->names.push_back(name);
        t->degrees.push_back(deg);
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return t;
}

std::optional<std::size_t> GeneratorTable::find(const std::string& name) const {
    auto it = index_of.find(name);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
}

bool Monomial::is_unit() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.exp.begin(), a.exp.end(), b.exp.begin(),
                                        b.exp.end());
}

Monomial make_monomial(const GeneratorTable& t, std::vector<int> exp) {
    if (exp.size() != t.size()) throw std::invalid_argument("exponent length mismatch");
    Monomial m;
    m.exp = std::move(exp);
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] < 0) throw std::invalid_argument("negative exponent");
        m.degree += m.exp[i] * t.degrees[i];
    }
    return m;
}

Monomial unit_monomial(const GeneratorTable& t) {
    Monomial m;
    m.exp.assign(t.size(), 0);
    return m;
}

Monomial generator_monomial(const GeneratorTable& t, std::size_t i) {
    Monomial m = unit_monomial(t);
    m.exp[i] = 1;
    m.degree = t.degrees[i];
    return m;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial monomial_quotient(const GeneratorTable& t, const Monomial& b, const Monomial& a) {
    std::vector<int> e(b.exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = b.exp[i] - a.exp[i];
        if (e[i] < 0) throw std::invalid_argument("monomial quotient is not integral");
    }
    return make_monomial(t, std::move(e));
}

Monomial monomial_lcm(const GeneratorTable& t, const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp[i], b.exp[i]);
    return make_monomial(t, std::move(e));
}

std::string monomial_to_string(const GeneratorTable& t, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += t.names[i];
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

std::optional<SignedMonomial> monomial_product(const GeneratorTable& t,
                                               const Monomial& a, const Monomial& b) {
    const std::size_t n = t.size();
    int parity = 0;
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = a.exp[i] + b.exp[i];
        if (t.odd(i) && e[i] > 1) return std::nullopt;
    }
    // factors of b cross the factors of a that sit to their right
    for (std::size_t i = 0; i < n; ++i) {
        if (!t.odd(i) || b.exp[i] == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.odd(j)) parity += b.exp[i] * a.exp[j];
    }
    SignedMonomial r;
    r.mono = make_monomial(t, std::move(e));
    r.sign = (parity % 2 == 0) ? 1 : -1;
    return r;
}

namespace {

void enumerate_monomials(const GeneratorTable& t, std::size_t i, int remaining,
                         std::vector<int>& exp, std::vector<Monomial>& out) {
    if (remaining == 0) {
        std::vector<int> full = exp;
        full.resize(t.size(), 0);
        out.push_back(make_monomial(t, std::move(full)));
        return;
    }
    if (i == t.size()) return;
    const int d = t.degrees[i];
    const int cap = t.odd(i) ? 1 : remaining / d;
    for (int e = 0; e <= cap && e * d <= remaining; ++e) {
        exp[i] = e;
        enumerate_monomials(t, i + 1, remaining - e * d, exp, out);
    }
    exp[i] = 0;
}

}  // namespace

std::vector<Monomial> homogeneous_monomials(const GeneratorTable& t, int k) {
    if (k < 0) return {};
    if (k == 0) return {unit_monomial(t)};
    std::vector<int> exp(t.size(), 0);
    std::vector<Monomial> out;
    enumerate_monomials(t, 0, k, exp, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return monomial_less(b, a); });
    return out;
}

Element Element::zero(TablePtr t) { return Element(std::move(t)); }

Element Element::one(TablePtr t) {
    Element e(t);
    e.terms_[unit_monomial(*t)] = 1;
    return e;
}

Element Element::generator(TablePtr t, std::size_t i) {
    Element e(t);
    e.terms_[generator_monomial(*t, i)] = 1;
    return e;
}

Element Element::term(TablePtr t, Monomial m, Rational c) {
    Element e(t);
    if (c != 0) e.terms_[std::move(m)] = std::move(c);
    return e;
}

std::optional<int> Element::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != d) return std::nullopt;
    return d;
}

const Monomial& Element::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero");
    return terms_.rbegin()->first;
}

const Rational& Element::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of zero");
    return terms_.rbegin()->second;
}

void Element::check_same_table(const Element& o) const {
    if (table_ != o.table_) throw TableMismatchError("elements over different tables");
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Element Element::operator-() const {
    Element r(table_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    check_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator*(const Element& o) const {
    check_same_table(o);
    Element r(table_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto p = monomial_product(*table_, ma, mb);
            if (!p) continue;
            r.add_term(p->mono, ca * cb * p->sign);
        }
    return r;
}

Element Element::operator*(const Rational& c) const {
    Element r(table_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

bool Element::operator==(const Element& o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        const Rational a = neg ? Rational(-it->second) : it->second;
        const std::string mono = monomial_to_string(*table_, it->first);
        std::string part;
        if (mono.empty())
            part = cdga::to_string(a);
        else if (a == 1)
            part = mono;
        else
            part = cdga::to_string(a) + "*" + mono;
        if (first)
            out = (neg ? "-" : "") + part;
        else
            out += (neg ? " - " : " + ") + part;
        first = false;
    }
    return out;
}

Element pow(const Element& e, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    Element r = Element::one(e.table());
    for (int i = 0; i < n; ++i) r = r * e;
    return r;
}

Element normal_order(TablePtr t, const std::vector<std::size_t>& word,
                     const Rational& coeff) {
    Element r = Element::term(t, unit_monomial(*t), coeff);
    for (std::size_t idx : word) r = r * Element::generator(t, idx);
    return r;
}

QVector element_coordinates(const Element& e, const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t, MonomialLess> where;
    for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    QVector v(basis.size());
    for (const auto& [m, c] : e.terms()) {
        auto it = where.find(m);
        if (it == where.end()) throw Error("element has a term outside the basis");
        v[it->second] = c;
    }
    return v;
}

Element element_from_coordinates(TablePtr t, const std::vector<Monomial>& basis,
                                 const QVector& coords) {
    if (basis.size() != coords.size()) throw std::invalid_argument("coordinate length mismatch");
    Element e = Element::zero(std::move(t));
    for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], coords[i]);
    return e;
}

Element extend_to_table(const Element& e, TablePtr bigger) {
    const GeneratorTable& small = *e.table();
    if (bigger->size() < small.size()) throw TableMismatchError("target table is smaller");
    for (std::size_t i = 0; i < small.size(); ++i)
        if (bigger->names[i] != small.names[i] || bigger->degrees[i] != small.degrees[i])
            throw TableMismatchError("target table does not extend source table");
    Element r = Element::zero(bigger);
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> exp = m.exp;
        exp.resize(bigger->size(), 0);
        r.add_term(make_monomial(*bigger, std::move(exp)), c);
    }
    return r;
}

}  // namespace cdga
