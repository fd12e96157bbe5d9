#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdga/errors.hpp"
#include "cdga/linalg.hpp"
#include "cdga/rational.hpp"

namespace cdga {

struct GeneratorTable;
using TablePtr = std::shared_ptr<const GeneratorTable>;

// immutable list of generators with positive degrees; elements built over the
// same table share it by pointer, and mixing tables is an error
struct GeneratorTable {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::map<std::string, std::size_t> index_of;

    static TablePtr make(const std::vector<std::pair<std::string, int>>& gens);

    std::size_t size() const { return names.size(); }
    bool odd(std::size_t i) const { return degrees[i] % 2 != 0; }
    std::optional<std::size_t> find(const std::string& name) const;
};

struct Monomial {
    std::vector<int> exp;  // one exponent per generator
    int degree = 0;        // cached weighted degree

    bool is_unit() const;
    bool operator==(const Monomial&) const = default;
};

// total degree first; ties broken on exponent sequences compared
// lexicographically, earlier generators more significant
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b);
    }
};

Monomial make_monomial(const GeneratorTable& t, std::vector<int> exp);
Monomial unit_monomial(const GeneratorTable& t);
Monomial generator_monomial(const GeneratorTable& t, std::size_t i);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const GeneratorTable& t, const Monomial& b, const Monomial& a);
Monomial monomial_lcm(const GeneratorTable& t, const Monomial& a, const Monomial& b);
std::string monomial_to_string(const GeneratorTable& t, const Monomial& m);

struct SignedMonomial {
    Monomial mono;
    int sign;  // +1 or -1
};

// product of two normal words; nullopt when an odd generator squares
std::optional<SignedMonomial> monomial_product(const GeneratorTable& t,
                                               const Monomial& a, const Monomial& b);

// all monomials of the given total degree, in descending order
std::vector<Monomial> homogeneous_monomials(const GeneratorTable& t, int k);

class Element {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Element() = default;
    static Element zero(TablePtr t);
    static Element one(TablePtr t);
    static Element generator(TablePtr t, std::size_t i);
    static Element term(TablePtr t, Monomial m, Rational c);

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // nullopt when zero or inhomogeneous
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    const Monomial& leading_monomial() const;  // largest monomial
    const Rational& leading_coefficient() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const Rational& c);
    std::string to_string() const;

  private:
    explicit Element(TablePtr t) : table_(std::move(t)) {}
    void check_same_table(const Element& o) const;
    TablePtr table_;
    TermMap terms_;
};

inline Element operator*(const Rational& c, const Element& e) { return e * c; }
Element pow(const Element& e, int n);

// multiply out a word of generator indices into normal form
Element normal_order(TablePtr t, const std::vector<std::size_t>& word,
                     const Rational& coeff);

// coordinates over an explicit monomial basis; every term must appear
QVector element_coordinates(const Element& e, const std::vector<Monomial>& basis);
Element element_from_coordinates(TablePtr t, const std::vector<Monomial>& basis,
                                 const QVector& coords);

// re-express over a larger table whose leading generators match e's table
Element extend_to_table(const Element& e, TablePtr bigger);

}  // namespace cdga
