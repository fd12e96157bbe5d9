#include "cdga/formality.hpp"

#include <algorithm>
#include <set>

namespace cdga {

CohomologyPresentation cohomology_algebra(const DGA& a, int degree) {
    if (degree < 1) throw DegreeBoundError("presentation degree must be at least 1");
    if (a.degree_bound() < degree + 1)
        throw DegreeBoundError("degree bound too small for a cohomology presentation");

    std::vector<std::pair<std::string, int>> gens;
    std::vector<Element> witnesses;
    std::vector<Element> rels;
    TablePtr table = GeneratorTable::make({});
    std::size_t counter = 0;

    for (int k = 1; k <= degree; ++k) {
        const CohomologyBasis& h = a.cohomology(k);
        const std::vector<Monomial> monos = homogeneous_monomials(*table, k);

        QMatrix mu(h.dimension(), monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Element prod = Element::one(a.table());
            for (std::size_t i = 0; i < monos[j].exp.size(); ++i)
                for (int rep = 0; rep < monos[j].exp[i]; ++rep) prod = prod * witnesses[i];
            const QVector col = a.class_coordinates(a.algebra().normal_form(prod), k);
            for (std::size_t i = 0; i < h.dimension(); ++i) mu.at(i, j) = col[i];
        }

        const Subspace classes_kernel = kernel(mu);
        const QuotientAlgebra known = QuotientAlgebra::build(table, rels, k);
        QMatrix nf(known.dimension(k), monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const QVector col = known.coordinates(Element::term(table, monos[j], 1), k);
            for (std::size_t i = 0; i < known.dimension(k); ++i) nf.at(i, j) = col[i];
        }
        const Subspace ideal_part = kernel(nf);
        for (const QVector& v : quotient_basis(classes_kernel, ideal_part))
            rels.push_back(element_from_coordinates(table, monos, v));

        const Subspace image = row_space(transpose(mu));
        const std::vector<QVector> fresh =
            quotient_basis(Subspace::full(h.dimension()), image);
        if (!fresh.empty()) {
            for (const QVector& v : fresh) {
                Element w = Element::zero(a.table());
                for (std::size_t l = 0; l < h.dimension(); ++l)
                    w += h.representatives[l] * v[l];
                witnesses.push_back(std::move(w));
                gens.emplace_back("x" + std::to_string(counter++), k);
            }
            table = GeneratorTable::make(gens);
            for (Element& r : rels) r = extend_to_table(r, table);
        }
    }

    CohomologyPresentation p;
    p.table = table;
    p.relations = std::move(rels);
    p.witnesses = std::move(witnesses);
    p.degree = degree;
    return p;
}

std::shared_ptr<const DGA> presentation_to_dga(const CohomologyPresentation& p, int bound) {
    return std::make_shared<DGA>(
        DGA::build(QuotientAlgebra::build(p.table, p.relations, bound), {}));
}

QVector psi_class(const MinimalModel& m, const Element& e, int k) {
    Element xpart = Element::zero(m.model_table());
    for (const auto& [mono, c] : e.terms()) {
        bool keep = true;
        for (std::size_t i = 0; i < mono.exp.size(); ++i)
            if (mono.exp[i] > 0 && m.generators[i].kind == GeneratorKind::Y) {
                keep = false;
                break;
            }
        if (keep) xpart.add_term(mono, c);
    }
    return m.model->class_coordinates(xpart, k);
}

std::vector<std::string> psi_failures(const MinimalModel& m) {
    std::vector<std::string> problems;
    for (const ModelGenerator& g : m.generators) {
        if (g.kind != GeneratorKind::Y) continue;
        const int zdeg = g.degree + 1;
        const QVector cls = psi_class(m, g.differential, zdeg);
        const bool zero =
            std::all_of(cls.begin(), cls.end(), [](const Rational& q) { return q == 0; });
        if (!zero)
            problems.push_back("projection of d(" + g.name +
                               ") is a nonzero class in degree " + std::to_string(zdeg));
    }
    return problems;
}

std::string verdict_text(FormalityVerdict v) {
    switch (v) {
        case FormalityVerdict::Formal: return "True";
        case FormalityVerdict::NotFormal: return "False";
        default: return "inconclusive (criteria disagree)";
    }
}

namespace {

std::optional<std::pair<int, int>> first_table_difference(
    const InvariantTable& a, const InvariantTable& b,
    std::optional<std::pair<int, int>> limit) {
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, val] : a.v) keys.insert(k);
    for (const auto& [k, val] : b.v) keys.insert(k);
    for (const auto& k : keys) {
        if (limit && k > *limit) break;
        if (a.value(k.first, k.second) != b.value(k.first, k.second)) return k;
    }
    return std::nullopt;
}

}  // namespace

FormalityResult is_formal(std::shared_ptr<const DGA> a, int degree, int max_iterations) {
    MinimalModel ma = minimal_model(std::move(a), degree, max_iterations);
    const CohomologyPresentation pres = cohomology_algebra(*ma.model, degree + 1);
    const std::shared_ptr<const DGA> hdga = presentation_to_dga(pres, degree + 2);

    FormalityResult res;
    res.model_invariants = ma.invariants;
    try {
        res.cohomology_invariants = minimal_model(hdga, degree, max_iterations).invariants;
    } catch (const IterationLimitError& e) {
        res.cohomology_model_truncated = true;
        res.truncation_degree = e.target_degree;
        res.cohomology_invariants = e.partial;
    }

    if (res.cohomology_model_truncated) {
        const std::pair<int, int> edge{res.truncation_degree - 1, max_iterations};
        auto diff = first_table_difference(res.model_invariants,
                                           res.cohomology_invariants, edge);
        // equal through the cap means the cohomology model needs a generator
        // count the model does not have at the next stage
        res.first_mismatch = diff ? diff
                                  : std::make_pair(res.truncation_degree - 1,
                                                   max_iterations + 1);
        res.verdict = FormalityVerdict::NotFormal;
        return res;
    }

    auto diff = first_table_difference(res.model_invariants, res.cohomology_invariants,
                                       std::nullopt);
    if (diff) {
        res.first_mismatch = diff;
        res.verdict = FormalityVerdict::NotFormal;
        return res;
    }
    res.psi_problems = psi_failures(ma);
    res.verdict = res.psi_problems.empty() ? FormalityVerdict::Formal
                                           : FormalityVerdict::Inconclusive;
    return res;
}

}  // namespace cdga
