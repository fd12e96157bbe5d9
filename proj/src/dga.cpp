#include "cdga/dga.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cdga {

DGA DGA::build(QuotientAlgebra alg, const std::map<std::string, Element>& images) {
    DGA a;
    a.alg_ = std::move(alg);
    const TablePtr& table = a.alg_.table();
    const int bound = a.alg_.degree_bound();
    a.diff_.assign(table->size(), Element::zero(table));

    std::vector<std::string> problems;
    for (const auto& [name, img] : images) {
        auto idx = table->find(name);
        if (!idx) {
            problems.push_back("differential given for unknown generator " + name);
            continue;
        }
        if (img.table() != table)
            throw TableMismatchError("differential image over a different table");
        if (img.is_zero()) continue;
        const int expected = table->degrees[*idx] + 1;
        auto d = img.homogeneous_degree();
        if (!d || *d != expected) {
            problems.push_back("differential of " + name +
                               " is not homogeneous of degree " +
                               std::to_string(expected) + ": " + img.to_string());
            continue;
        }
        a.diff_[*idx] = expected <= bound ? a.alg_.normal_form(img) : img;
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));

    for (std::size_t i = 0; i < table->size(); ++i) {
        if (table->degrees[i] + 2 > bound) continue;
        Element dd = a.alg_.normal_form(a.free_differential(a.diff_[i]));
        if (!dd.is_zero())
            problems.push_back("d(d(" + table->names[i] + ")) = " + dd.to_string() +
                               ", expected 0");
    }
    for (const Element& r : a.alg_.relations()) {
        const int rd = *r.homogeneous_degree();
        if (rd + 1 > bound) continue;
        Element dr = a.alg_.normal_form(a.free_differential(r));
        if (!dr.is_zero())
            problems.push_back("differential does not preserve the relation " +
                               r.to_string() + ": d gives " + dr.to_string());
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return a;
}

bool DGA::has_zero_differential() const {
    return std::all_of(diff_.begin(), diff_.end(),
                       [](const Element& e) { return e.is_zero(); });
}

Element DGA::free_differential(const Element& e) const {
    const TablePtr& table = alg_.table();
    Element out = Element::zero(table);
    for (const auto& [m, c] : e.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            const int ei = m.exp[i];
            if (ei == 0) continue;
            if (!diff_[i].is_zero()) {
                std::vector<int> left(m.exp.size(), 0);
                std::vector<int> right(m.exp.size(), 0);
                for (std::size_t j = 0; j < i; ++j) left[j] = m.exp[j];
                left[i] = ei - 1;
                for (std::size_t j = i + 1; j < m.exp.size(); ++j) right[j] = m.exp[j];
                Element t = Element::term(table, make_monomial(*table, std::move(left)),
                                          c * ei * (prefix_degree % 2 == 0 ? 1 : -1));
                t = t * diff_[i];
                t = t * Element::term(table, make_monomial(*table, std::move(right)), 1);
                out += t;
            }
            prefix_degree += ei * table->degrees[i];
        }
    }
    return out;
}

Element DGA::d(const Element& e) const {
    for (const auto& [m, c] : e.terms())
        if (m.degree + 1 > alg_.degree_bound())
            throw DegreeBoundError("differential image exceeds the degree bound");
    return alg_.normal_form(free_differential(e));
}

const QMatrix& DGA::differential_matrix(int k) const {
    if (k < 0 || k + 1 > alg_.degree_bound())
        throw DegreeBoundError("differential matrix outside [0, bound-1]");
    std::lock_guard<std::mutex> lock(caches_->mutex);
    auto it = caches_->matrices.find(k);
    if (it != caches_->matrices.end()) return it->second;

    const std::vector<Monomial>& src = alg_.degree_basis(k);
    const std::vector<Monomial>& dst = alg_.degree_basis(k + 1);
    QMatrix m(dst.size(), src.size());
    const long long n = static_cast<long long>(src.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (n >= 32)
#endif
    for (long long j = 0; j < n; ++j) {
        const Element img = alg_.normal_form(
            free_differential(Element::term(alg_.table(), src[static_cast<std::size_t>(j)], 1)));
        const QVector col = element_coordinates(img, dst);
        for (std::size_t i = 0; i < dst.size(); ++i)
            m.at(i, static_cast<std::size_t>(j)) = col[i];
    }
    return caches_->matrices.emplace(k, std::move(m)).first->second;
}

const CohomologyBasis& DGA::cohomology(int k) const {
    if (k < 1 || k + 1 > alg_.degree_bound())
        throw DegreeBoundError("cohomology degree outside [1, bound-1]");
    {
        std::lock_guard<std::mutex> lock(caches_->mutex);
        auto it = caches_->cohomology.find(k);
        if (it != caches_->cohomology.end()) return it->second;
    }
    CohomologyBasis h;
    h.degree = k;
    h.cocycles = kernel(differential_matrix(k));
    h.coboundaries = row_space(transpose(differential_matrix(k - 1)));
    for (const QVector& v : quotient_basis(h.cocycles, h.coboundaries))
        h.representatives.push_back(alg_.from_coordinates(k, v));
    std::lock_guard<std::mutex> lock(caches_->mutex);
    return caches_->cohomology.emplace(k, std::move(h)).first->second;
}

QVector DGA::class_coordinates(const Element& x, int k) const {
    const CohomologyBasis& h = cohomology(k);
    const QVector coords = alg_.coordinates(x, k);
    const std::size_t r = h.representatives.size();
    const std::size_t s = h.coboundaries.dim();
    const std::size_t n = alg_.dimension(k);
    QMatrix b(n, r + s);
    for (std::size_t j = 0; j < r; ++j) {
        const QVector rep = alg_.coordinates(h.representatives[j], k);
        for (std::size_t i = 0; i < n; ++i) b.at(i, j) = rep[i];
    }
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i) b.at(i, r + j) = h.coboundaries.basis.at(j, i);
    auto sol = solve(b, coords);
    if (!sol) throw NotACocycleError("class coordinates of a non-cocycle: " + x.to_string());
    return QVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
}

Element DGA::coboundary_preimage(const Element& c) const {
    if (c.is_zero()) return Element::zero(alg_.table());
    auto deg = c.homogeneous_degree();
    if (!deg) throw Error("coboundary preimage of an inhomogeneous element");
    const int k = *deg;
    if (k < 1 || k > alg_.degree_bound())
        throw DegreeBoundError("coboundary preimage outside the degree bound");
    auto sol = solve(differential_matrix(k - 1), alg_.coordinates(c, k));
    if (!sol)
        throw NotACoboundaryError("element is not a coboundary: " + c.to_string());
    return alg_.from_coordinates(k - 1, *sol);
}

}  // namespace cdga
