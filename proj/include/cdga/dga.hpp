#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cdga/quotient.hpp"

namespace cdga {

struct CohomologyBasis {
    int degree = 0;
    std::vector<Element> representatives;  // canonical choice, one per class
    Subspace cocycles;                     // inside the degree component
    Subspace coboundaries;

    std::size_t dimension() const { return representatives.size(); }
};

// differential graded algebra structure on a quotient algebra, truncated at
// the quotient's degree bound
class DGA {
  public:
    // images: generator name -> differential image; omitted names get zero.
    // throws ValidationError when grading, the Leibniz extension, or the ideal
    // is violated within the bound.
    static DGA build(QuotientAlgebra alg, const std::map<std::string, Element>& images);

    const QuotientAlgebra& algebra() const { return alg_; }
    const TablePtr& table() const { return alg_.table(); }
    int degree_bound() const { return alg_.degree_bound(); }
    const Element& generator_differential(std::size_t i) const { return diff_[i]; }
    bool has_zero_differential() const;

    // Leibniz extension in the free algebra, not reduced
    Element free_differential(const Element& e) const;
    // reduced differential; every term of e must have degree < bound
    Element d(const Element& e) const;

    // matrix of d from degree k to degree k+1 over the canonical bases,
    // columns indexed by degree_basis(k); 0 <= k <= bound-1
    const QMatrix& differential_matrix(int k) const;

    // canonical cohomology of one degree; 1 <= k <= bound-1
    const CohomologyBasis& cohomology(int k) const;

    // coefficients of [x] over the canonical representatives; x must be a
    // cocycle of degree k
    QVector class_coordinates(const Element& x, int k) const;

    // some b with d(b) = c, free variables zero; zero input gives zero
    Element coboundary_preimage(const Element& c) const;

  private:
    struct Caches {
        std::mutex mutex;
        std::map<int, QMatrix> matrices;
        std::map<int, CohomologyBasis> cohomology;
    };

    QuotientAlgebra alg_;
    std::vector<Element> diff_;
    std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();
};

}  // namespace cdga
