#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdga/dga.hpp"

namespace cdga {

enum class GeneratorKind { X, Y };

struct ModelGenerator {
    std::string name;
    int degree = 0;
    GeneratorKind kind = GeneratorKind::X;
    Element differential;  // over the model table; zero for x generators
    Element phi;           // image in the target algebra
};

struct MinimalModel {
    std::shared_ptr<const DGA> target;
    std::shared_ptr<const DGA> model;  // free dga on the model generators
    std::vector<ModelGenerator> generators;
    int degree = 0;
    int max_iterations = 3;
    InvariantTable invariants;

    const TablePtr& model_table() const { return model->table(); }
    // multiplicative extension of the generator images
    Element phi(const Element& e) const;
};

// step-by-step construction; degree bound of the target must be at least
// degree+2
class ModelBuilder {
  public:
    ModelBuilder(std::shared_ptr<const DGA> target, int degree, int max_iterations);

    // smallest k0 <= degree with nonzero cohomology, adding closed generators
    // mapped to the canonical representatives; 0 when there is none
    int first_step();
    // kill the kernel of the induced map on degree-k cohomology, at most
    // max_iterations passes; throws IterationLimitError if the kernel persists
    void y_iteration(int k);
    // extend the image of the induced map to all of the degree-k cohomology
    void x_step(int k);
    MinimalModel finish() const;

    const std::vector<ModelGenerator>& generators() const { return generators_; }
    const std::shared_ptr<const DGA>& model() const { return model_; }
    const InvariantTable& invariants() const { return invariants_; }
    Element phi(const Element& e) const;
    // matrix of the induced map H^k(model) -> H^k(target) over the canonical
    // class bases
    QMatrix induced_matrix(int k) const;

  private:
    void rebuild();

    std::shared_ptr<const DGA> target_;
    int degree_;
    int max_iterations_;
    int bound_;
    std::vector<ModelGenerator> generators_;
    std::shared_ptr<const DGA> model_;
    InvariantTable invariants_;
};

MinimalModel minimal_model(std::shared_ptr<const DGA> target, int degree,
                           int max_iterations = 3);

QMatrix induced_cohomology_matrix(const MinimalModel& m, int k);

// empty when phi is an isomorphism on cohomology through degree, injective
// one above, and a chain map on generators
std::vector<std::string> verify_quasi_isomorphism(const MinimalModel& m);

// empty when the model is free, generated in degrees <= degree, with
// decomposable differentials that are closed and non-exact over the earlier
// generators
std::vector<std::string> verify_minimality(const MinimalModel& m);

// invariants recovered from the model alone through the filtration by
// degreewise subalgebras; model_dga must be free with bound > up_to_degree
InvariantTable intrinsic_invariants(const DGA& model_dga, int up_to_degree);

}  // namespace cdga
