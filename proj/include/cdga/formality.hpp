#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdga/minimal_model.hpp"

namespace cdga {

// finite presentation of the cohomology ring through a degree: fresh
// generators x0, x1, ... with homogeneous relations, zero differential
struct CohomologyPresentation {
    TablePtr table;
    std::vector<Element> relations;  // over table
    std::vector<Element> witnesses;  // cocycles in the source algebra, one per generator
    int degree = 0;
};

CohomologyPresentation cohomology_algebra(const DGA& a, int degree);

std::shared_ptr<const DGA> presentation_to_dga(const CohomologyPresentation& p, int bound);

// class of e with its y terms dropped, in the model's own degree-k cohomology
QVector psi_class(const MinimalModel& m, const Element& e, int k);

// y generators whose differential survives psi; empty means the projection
// x -> [x], y -> 0 is a map of differential algebras up to degree+1
std::vector<std::string> psi_failures(const MinimalModel& m);

enum class FormalityVerdict { Formal, NotFormal, Inconclusive };

std::string verdict_text(FormalityVerdict v);

struct FormalityResult {
    FormalityVerdict verdict = FormalityVerdict::Inconclusive;
    InvariantTable model_invariants;
    InvariantTable cohomology_invariants;
    bool cohomology_model_truncated = false;  // model of the cohomology hit the cap
    int truncation_degree = 0;                // target degree of the failed phase
    std::optional<std::pair<int, int>> first_mismatch;
    std::vector<std::string> psi_problems;
};

FormalityResult is_formal(std::shared_ptr<const DGA> a, int degree,
                          int max_iterations = 3);

}  // namespace cdga
