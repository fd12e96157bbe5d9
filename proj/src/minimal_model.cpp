#include "cdga/minimal_model.hpp"

#include <algorithm>
#include <map>

namespace cdga {

namespace {

Element evaluate_phi(const DGA& target, const TablePtr& model_table,
                     const std::vector<Element>& images, const Element& e) {
    Element out = Element::zero(target.table());
    for (const auto& [m, c] : e.terms()) {
        Element t = Element::term(target.table(), unit_monomial(*target.table()), c);
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            for (int rep = 0; rep < m.exp[i]; ++rep) t = t * images[i];
        out += t;
    }
    return target.algebra().normal_form(out);
}

}  // namespace

Element MinimalModel::phi(const Element& e) const {
    std::vector<Element> images;
    images.reserve(generators.size());
    for (const ModelGenerator& g : generators) images.push_back(g.phi);
    return evaluate_phi(*target, model->table(), images, e);
}

ModelBuilder::ModelBuilder(std::shared_ptr<const DGA> target, int degree,
                           int max_iterations)
    : target_(std::move(target)),
      degree_(degree),
      max_iterations_(max_iterations),
      bound_(degree + 2) {
    if (degree_ < 1) throw DegreeBoundError("model degree must be at least 1");
    if (max_iterations_ < 1) throw DegreeBoundError("max iterations must be at least 1");
    if (target_->degree_bound() < bound_)
        throw DegreeBoundError("target degree bound " +
                               std::to_string(target_->degree_bound()) +
                               " is too small for a degree " + std::to_string(degree_) +
                               " model, need " + std::to_string(bound_));
    rebuild();
}

void ModelBuilder::rebuild() {
    std::vector<std::pair<std::string, int>> gens;
    gens.reserve(generators_.size());
    for (const ModelGenerator& g : generators_) gens.emplace_back(g.name, g.degree);
    TablePtr table = GeneratorTable::make(gens);
    for (ModelGenerator& g : generators_) g.differential = extend_to_table(g.differential, table);
    std::map<std::string, Element> images;
    for (const ModelGenerator& g : generators_)
        if (!g.differential.is_zero()) images[g.name] = g.differential;
    model_ = std::make_shared<DGA>(
        DGA::build(QuotientAlgebra::build(table, {}, bound_), images));
}

Element ModelBuilder::phi(const Element& e) const {
    std::vector<Element> images;
    images.reserve(generators_.size());
    for (const ModelGenerator& g : generators_) images.push_back(g.phi);
    return evaluate_phi(*target_, model_->table(), images, e);
}

QMatrix ModelBuilder::induced_matrix(int k) const {
    const CohomologyBasis& hm = model_->cohomology(k);
    const CohomologyBasis& ha = target_->cohomology(k);
    QMatrix m(ha.dimension(), hm.dimension());
    for (std::size_t j = 0; j < hm.dimension(); ++j) {
        const QVector col = target_->class_coordinates(phi(hm.representatives[j]), k);
        for (std::size_t i = 0; i < ha.dimension(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

int ModelBuilder::first_step() {
    for (int k0 = 1; k0 <= degree_; ++k0) {
        const CohomologyBasis& h = target_->cohomology(k0);
        if (h.dimension() == 0) continue;
        for (std::size_t j = 0; j < h.dimension(); ++j) {
            ModelGenerator g;
            g.name = "x" + std::to_string(k0) + "_" + std::to_string(j);
            g.degree = k0;
            g.kind = GeneratorKind::X;
            g.differential = Element::zero(model_->table());
            g.phi = h.representatives[j];
            generators_.push_back(std::move(g));
        }
        invariants_.add(k0, 0, static_cast<long>(h.dimension()));
        rebuild();
        return k0;
    }
    return 0;
}

void ModelBuilder::y_iteration(int k) {
    for (int iter = 1; iter <= max_iterations_; ++iter) {
        const Subspace ker = kernel(induced_matrix(k));
        if (ker.dim() == 0) return;
        const CohomologyBasis& hm = model_->cohomology(k);
        std::size_t next = 0;
        for (const ModelGenerator& g : generators_)
            if (g.kind == GeneratorKind::Y && g.degree == k - 1) ++next;
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            Element z = Element::zero(model_->table());
            for (std::size_t l = 0; l < hm.dimension(); ++l)
                z += hm.representatives[l] * ker.basis.at(r, l);
            const Element c = phi(z);
            ModelGenerator g;
            g.name = "y" + std::to_string(k - 1) + "_" + std::to_string(next + r);
            g.degree = k - 1;
            g.kind = GeneratorKind::Y;
            g.differential = std::move(z);
            g.phi = target_->coboundary_preimage(c);
            generators_.push_back(std::move(g));
        }
        invariants_.add(k - 1, iter, static_cast<long>(ker.dim()));
        rebuild();
    }
    if (kernel(induced_matrix(k)).dim() != 0)
        throw IterationLimitError(k, invariants_);
}

void ModelBuilder::x_step(int k) {
    const QMatrix m = induced_matrix(k);
    const Subspace image = row_space(transpose(m));
    const CohomologyBasis& ha = target_->cohomology(k);
    const std::vector<QVector> reps =
        quotient_basis(Subspace::full(ha.dimension()), image);
    if (reps.empty()) return;
    std::size_t next = 0;
    for (const ModelGenerator& g : generators_)
        if (g.kind == GeneratorKind::X && g.degree == k) ++next;
    for (std::size_t r = 0; r < reps.size(); ++r) {
        Element w = Element::zero(target_->table());
        for (std::size_t l = 0; l < ha.dimension(); ++l)
            w += ha.representatives[l] * reps[r][l];
        ModelGenerator g;
        g.name = "x" + std::to_string(k) + "_" + std::to_string(next + r);
        g.degree = k;
        g.kind = GeneratorKind::X;
        g.differential = Element::zero(model_->table());
        g.phi = std::move(w);
        generators_.push_back(std::move(g));
    }
    invariants_.add(k, 0, static_cast<long>(reps.size()));
    rebuild();
}

MinimalModel ModelBuilder::finish() const {
    MinimalModel m;
    m.target = target_;
    m.model = model_;
    m.generators = generators_;
    m.degree = degree_;
    m.max_iterations = max_iterations_;
    m.invariants = invariants_;
    return m;
}

MinimalModel minimal_model(std::shared_ptr<const DGA> target, int degree,
                           int max_iterations) {
    ModelBuilder b(std::move(target), degree, max_iterations);
    const int k0 = b.first_step();
    if (k0 == 0) return b.finish();
    for (int k = k0 + 1; k <= degree + 1; ++k) {
        b.y_iteration(k);
        if (k <= degree) b.x_step(k);
    }
    return b.finish();
}

QMatrix induced_cohomology_matrix(const MinimalModel& m, int k) {
    const CohomologyBasis& hm = m.model->cohomology(k);
    const CohomologyBasis& ha = m.target->cohomology(k);
    QMatrix mat(ha.dimension(), hm.dimension());
    for (std::size_t j = 0; j < hm.dimension(); ++j) {
        const QVector col = m.target->class_coordinates(m.phi(hm.representatives[j]), k);
        for (std::size_t i = 0; i < ha.dimension(); ++i) mat.at(i, j) = col[i];
    }
    return mat;
}

std::vector<std::string> verify_quasi_isomorphism(const MinimalModel& m) {
    std::vector<std::string> problems;
    for (const ModelGenerator& g : m.generators) {
        const Element lhs = m.phi(g.differential);
        const Element rhs = m.target->d(g.phi);
        if (lhs != rhs)
            problems.push_back("phi does not commute with d on " + g.name);
    }
    for (int k = 1; k <= m.degree + 1; ++k) {
        const QMatrix mat = induced_cohomology_matrix(m, k);
        const std::size_t r = rank(mat);
        if (r != mat.cols)
            problems.push_back("induced map is not injective on degree " +
                               std::to_string(k) + " cohomology");
        if (k <= m.degree && (mat.rows != mat.cols || r != mat.rows))
            problems.push_back("induced map is not an isomorphism on degree " +
                               std::to_string(k) + " cohomology");
    }
    return problems;
}

std::vector<std::string> verify_minimality(const MinimalModel& m) {
    std::vector<std::string> problems;
    const std::size_t n = m.generators.size();
    for (std::size_t t = 0; t < n; ++t) {
        const ModelGenerator& g = m.generators[t];
        if (g.degree < 1 || g.degree > m.degree)
            problems.push_back(g.name + " has degree outside [1, " +
                               std::to_string(m.degree) + "]");
        if (g.kind == GeneratorKind::X) {
            if (!g.differential.is_zero())
                problems.push_back(g.name + " is closed by construction but d is " +
                                   g.differential.to_string());
            continue;
        }
        const Element& z = g.differential;
        if (z.is_zero()) {
            problems.push_back(g.name + " has zero differential but is not closed kind");
            continue;
        }
        bool earlier_only = true;
        bool decomposable = true;
        for (const auto& [mono, c] : z.terms()) {
            int length = 0;
            for (std::size_t idx = 0; idx < mono.exp.size(); ++idx) {
                length += mono.exp[idx];
                if (mono.exp[idx] > 0 && idx >= t) earlier_only = false;
            }
            if (length < 2) decomposable = false;
        }
        if (!earlier_only) {
            problems.push_back("differential of " + g.name + " uses later generators");
            continue;
        }
        if (!decomposable)
            problems.push_back("differential of " + g.name + " is not decomposable");

        // replay over the model spanned by the earlier generators
        std::vector<std::pair<std::string, int>> prefix_gens;
        for (std::size_t s = 0; s < t; ++s)
            prefix_gens.emplace_back(m.generators[s].name, m.generators[s].degree);
        TablePtr prefix_table = GeneratorTable::make(prefix_gens);
        std::map<std::string, Element> images;
        for (std::size_t s = 0; s < t; ++s) {
            const ModelGenerator& h = m.generators[s];
            if (h.differential.is_zero()) continue;
            Element img = Element::zero(prefix_table);
            for (const auto& [mono, c] : h.differential.terms()) {
                std::vector<int> exp(mono.exp.begin(),
                                     mono.exp.begin() + static_cast<std::ptrdiff_t>(t));
                img.add_term(make_monomial(*prefix_table, std::move(exp)), c);
            }
            images[h.name] = std::move(img);
        }
        const int zdeg = g.degree + 1;
        DGA prefix = DGA::build(
            QuotientAlgebra::build(prefix_table, {}, zdeg + 1), images);
        Element zp = Element::zero(prefix_table);
        for (const auto& [mono, c] : z.terms()) {
            std::vector<int> exp(mono.exp.begin(),
                                 mono.exp.begin() + static_cast<std::ptrdiff_t>(t));
            zp.add_term(make_monomial(*prefix_table, std::move(exp)), c);
        }
        if (!prefix.d(zp).is_zero()) {
            problems.push_back("differential of " + g.name +
                               " is not closed over the earlier generators");
            continue;
        }
        const Subspace exact =
            row_space(transpose(prefix.differential_matrix(zdeg - 1)));
        if (exact.contains(prefix.algebra().coordinates(zp, zdeg)))
            problems.push_back("differential of " + g.name +
                               " is exact over the earlier generators");
    }
    return problems;
}

InvariantTable intrinsic_invariants(const DGA& model_dga, int up_to_degree) {
    if (!model_dga.algebra().relations().empty())
        throw Error("intrinsic invariants need a free model");
    if (up_to_degree < 1) throw DegreeBoundError("invariant degree must be at least 1");
    if (model_dga.degree_bound() < up_to_degree + 1)
        throw DegreeBoundError("model degree bound too small for invariants");

    const QuotientAlgebra& alg = model_dga.algebra();
    InvariantTable out;
    std::map<int, Subspace> stabilized;  // top of the V chain per lower level

    // degree components of the subalgebra generated by the given subspaces
    auto components = [&](const std::map<int, Subspace>& gen_spaces, int maxdeg) {
        std::vector<Subspace> comp;
        comp.reserve(static_cast<std::size_t>(maxdeg) + 1);
        comp.push_back(Subspace::full(1));
        for (int deg = 1; deg <= maxdeg; ++deg) {
            std::vector<QVector> vectors;
            for (const auto& [p, space] : gen_spaces) {
                if (p < 1 || p > deg || space.dim() == 0) continue;
                for (std::size_t u = 0; u < space.dim(); ++u) {
                    const Element ue = alg.from_coordinates(p, space.basis.row(u));
                    const Subspace& rest = comp[static_cast<std::size_t>(deg - p)];
                    for (std::size_t w = 0; w < rest.dim(); ++w) {
                        const Element we =
                            alg.from_coordinates(deg - p, rest.basis.row(w));
                        vectors.push_back(alg.coordinates(ue * we, deg));
                    }
                }
            }
            if (vectors.empty())
                comp.push_back(Subspace::zero(alg.dimension(deg)));
            else
                comp.push_back(row_space(QMatrix::from_rows(vectors)));
        }
        return comp;
    };

    for (int l = 1; l <= up_to_degree; ++l) {
        const QMatrix& dmat = model_dga.differential_matrix(l);
        const Subspace ker = kernel(dmat);
        const std::vector<Subspace> below = components(stabilized, l);
        out.add(l, 0, static_cast<long>(ker.dim()) -
                          static_cast<long>(intersect(ker, below[static_cast<std::size_t>(l)]).dim()));
        Subspace v = ker;
        const long cap = static_cast<long>(alg.dimension(l)) + 2;
        for (long j = 0; j < cap; ++j) {
            std::map<int, Subspace> gen_spaces = stabilized;
            gen_spaces[l] = v;
            const std::vector<Subspace> comp = components(gen_spaces, l + 1);
            const Subspace vnext =
                preimage_subspace(dmat, comp[static_cast<std::size_t>(l) + 1]);
            const Subspace wnext = intersect(vnext, comp[static_cast<std::size_t>(l)]);
            const long val =
                static_cast<long>(vnext.dim()) - static_cast<long>(wnext.dim());
            out.add(l, static_cast<int>(j) + 1, val);
            if (vnext == v) {
                if (val != 0)
                    throw Error("invariant chain does not terminate in degree " +
                                std::to_string(l));
                break;
            }
            v = vnext;
        }
        stabilized[l] = v;
    }
    return out;
}

}  // namespace cdga
