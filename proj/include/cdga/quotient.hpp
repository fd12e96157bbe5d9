#pragma once

#include <vector>

#include "cdga/gca.hpp"

namespace cdga {

// quotient of the free graded-commutative algebra on a generator table by a
// two-sided ideal of homogeneous relations, truncated at a degree bound.
// squares of odd generators vanish structurally and are never stored as
// relations.
class QuotientAlgebra {
  public:
    // relations must be nonzero and homogeneous of degree between 1 and bound
    static QuotientAlgebra build(TablePtr table, std::vector<Element> relations,
                                 int degree_bound);

    const TablePtr& table() const { return table_; }
    int degree_bound() const { return bound_; }
    const std::vector<Element>& groebner_basis() const { return gb_; }
    const std::vector<Element>& relations() const { return relations_; }

    // fully reduced representative; every term must have degree <= bound
    Element normal_form(Element e) const;

    // normal monomials of one degree, descending; 0 <= k <= bound
    const std::vector<Monomial>& degree_basis(int k) const;

    // coordinates of the class of e over degree_basis(k); e must be zero or
    // homogeneous of degree k
    QVector coordinates(const Element& e, int k) const;
    Element from_coordinates(int k, const QVector& coords) const;

    std::size_t dimension(int k) const { return degree_basis(k).size(); }

  private:
    TablePtr table_;
    int bound_ = 0;
    std::vector<Element> relations_;
    std::vector<Element> gb_;
    std::vector<std::vector<Monomial>> bases_;
};

}  // namespace cdga
