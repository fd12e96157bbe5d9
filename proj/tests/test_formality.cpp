#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "cdga/formality.hpp"
#include "support.hpp"

using namespace cdga;

namespace {

std::shared_ptr<const DGA> shared_dga(const Presentation& p, int bound) {
    return std::make_shared<DGA>(testsupport::build_dga(p, bound));
}

}  // namespace

TEST_CASE("cohomology presentation of the first solvable case") {
    auto dga = testsupport::build_dga(testsupport::g5_14(), 5);
    CohomologyPresentation h = cohomology_algebra(dga, 3);

    REQUIRE(h.table->size() == 5);
    CHECK(h.table->names ==
          std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"});
    CHECK(h.table->degrees == std::vector<int>{1, 1, 2, 2, 2});

    std::vector<std::string> rels;
    for (const Element& r : h.relations) rels.push_back(r.to_string());
    REQUIRE(rels.size() == 4);
    CHECK(rels[0] == "x0*x1");

    // the presented ring has the same dimensions as the cohomology
    auto q = QuotientAlgebra::build(h.table, h.relations, 3);
    CHECK(q.dimension(1) == dga.cohomology(1).dimension());
    CHECK(q.dimension(2) == dga.cohomology(2).dimension());
    CHECK(q.dimension(3) == dga.cohomology(3).dimension());

    // witnesses are cocycles, one per generator
    CHECK(h.witnesses.size() == h.table->size());
    for (const Element& w : h.witnesses) {
        CHECK(dga.d(w).is_zero());
    }
}

TEST_CASE("cohomology presentation respects products") {
    // multiplication of classes in the presented ring matches the target:
    // witness products express over witnesses exactly as the presentation says
    auto dga = testsupport::build_dga(testsupport::free7(), 6);
    CohomologyPresentation h = cohomology_algebra(dga, 3);
    auto q = QuotientAlgebra::build(h.table, h.relations, 4);

    for (std::size_t i = 0; i < h.table->size(); ++i) {
        for (std::size_t j = i; j < h.table->size(); ++j) {
            int dij = h.table->degrees[i] + h.table->degrees[j];
            if (dij > 3) continue;
            Element prod_cls = q.normal_form(Element::generator(h.table, i) *
                                             Element::generator(h.table, j));
            Element prod_wit = h.witnesses[i] * h.witnesses[j];
            // expand the reduced product back through the witnesses
            Element expect = Element::zero(dga.table());
            for (const auto& [mono, coeff] : prod_cls.terms()) {
                Element w = Element::one(dga.table());
                for (std::size_t g = 0; g < mono.exp.size(); ++g)
                    for (int e = 0; e < mono.exp[g]; ++e) w = w * h.witnesses[g];
                expect += w * coeff;
            }
            Element diff = prod_wit - expect;
            if (diff.is_zero()) continue;
            CHECK(dga.class_coordinates(diff, dij) ==
                  QVector(dga.cohomology(dij).dimension(), Rational(0)));
        }
    }
}

TEST_CASE("cohomology presentation of a ring with zero products") {
    auto dga = testsupport::build_dga(testsupport::sphere_wedge(), 7);
    CohomologyPresentation h = cohomology_algebra(dga, 6);
    REQUIRE(h.table->size() == 2);
    CHECK(h.table->degrees == std::vector<int>{2, 3});
    std::vector<std::string> rels;
    for (const Element& r : h.relations) rels.push_back(r.to_string());
    CHECK(rels == std::vector<std::string>{"x0^2", "x0*x1"});
}

TEST_CASE("formality of the sphere wedge") {
    FormalityResult r = is_formal(shared_dga(testsupport::sphere_wedge(), 8), 6);
    CHECK(r.verdict == FormalityVerdict::Formal);
    CHECK(verdict_text(r.verdict) == "True");
    CHECK(!r.cohomology_model_truncated);
    CHECK(!r.first_mismatch.has_value());
    CHECK(r.psi_problems.empty());
    CHECK(r.model_invariants == r.cohomology_invariants);
}

TEST_CASE("the first solvable case is not 2-formal") {
    FormalityResult r = is_formal(shared_dga(testsupport::g5_14(), 5), 2);
    CHECK(r.verdict == FormalityVerdict::NotFormal);
    CHECK(verdict_text(r.verdict) == "False");
    CHECK(r.cohomology_model_truncated);
    CHECK(r.truncation_degree == 2);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(*r.first_mismatch == std::pair<int, int>{1, 2});

    InvariantTable ma;
    ma.add(1, 0, 2);
    ma.add(1, 1, 1);
    ma.add(2, 0, 1);
    CHECK(r.model_invariants == ma);

    // the partial table of the truncated run still disagrees visibly
    CHECK(r.cohomology_invariants.value(1, 2) == 2);
    CHECK(r.cohomology_invariants.value(1, 3) == 3);
}

TEST_CASE("the second solvable case is 6-formal") {
    FormalityResult r = is_formal(shared_dga(testsupport::g5_35(), 8), 6);
    CHECK(r.verdict == FormalityVerdict::Formal);
    CHECK(!r.cohomology_model_truncated);
    CHECK(r.psi_problems.empty());
    CHECK(r.model_invariants == r.cohomology_invariants);
}

TEST_CASE("the heisenberg algebra is not formal") {
    FormalityResult r = is_formal(shared_dga(testsupport::heisenberg(), 4), 2);
    CHECK(r.verdict == FormalityVerdict::NotFormal);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->first == 1);
    CHECK(r.first_mismatch->second >= 2);
    // the model itself satisfies the projection condition; the invariant
    // tables alone detect the failure
    auto target = shared_dga(testsupport::heisenberg(), 4);
    MinimalModel m = minimal_model(target, 2);
    CHECK(psi_failures(m).empty());
}

TEST_CASE("psi failures name the offending generators") {
    auto target = shared_dga(testsupport::g5_14(), 5);
    MinimalModel m = minimal_model(target, 3);
    // every y differential in this model projects to an exact class
    CHECK(psi_failures(m).empty());
}

TEST_CASE("psi holds on formal models") {
    auto target = shared_dga(testsupport::sphere_wedge(), 8);
    MinimalModel m = minimal_model(target, 6);
    CHECK(psi_failures(m).empty());

    // psi_class drops y terms before taking the class
    auto t = m.model_table();
    Element mixed = Element::generator(t, 0) * Element::generator(t, 1) +
                    Element::generator(t, 2) * Element::generator(t, 0);
    QVector cls = psi_class(m, mixed, 5);
    QVector pure = psi_class(m, Element::generator(t, 0) * Element::generator(t, 1), 5);
    CHECK(cls == pure);
}

TEST_CASE("verdict strings") {
    CHECK(verdict_text(FormalityVerdict::Formal) == "True");
    CHECK(verdict_text(FormalityVerdict::NotFormal) == "False");
    CHECK(verdict_text(FormalityVerdict::Inconclusive) ==
          "inconclusive (criteria disagree)");
}

TEST_CASE("presentation round trip through a dga") {
    auto dga = testsupport::build_dga(testsupport::g5_14(), 5);
    CohomologyPresentation h = cohomology_algebra(dga, 3);
    auto hdga = presentation_to_dga(h, 5);
    CHECK(hdga->has_zero_differential());
    CHECK(hdga->algebra().dimension(1) == 2);
    CHECK(hdga->algebra().dimension(2) == 3);
    // cohomology of a zero differential is the algebra itself
    CHECK(hdga->cohomology(2).dimension() == 3);
}
