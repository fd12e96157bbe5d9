#include "cdga/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cdga {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false))
        throw std::invalid_argument("bad rational literal: " + s);
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols)
            throw std::invalid_argument("ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::row(std::size_t i) const {
    return QVector(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                   data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

QMatrix transpose(const QMatrix& m) {
    QMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
    QMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& f = a.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += f * b.at(k, j);
        }
    return c;
}

QVector matvec(const QMatrix& m, const QVector& x) {
    if (x.size() != m.cols) throw std::invalid_argument("matvec shape mismatch");
    QVector y(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
    return y;
}

QMatrix stack_rows(const QMatrix& top, const QMatrix& bottom) {
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw std::invalid_argument("stack shape mismatch");
    QMatrix m(top.rows + bottom.rows, top.cols);
    std::copy(top.data.begin(), top.data.end(), m.data.begin());
    std::copy(bottom.data.begin(), bottom.data.end(),
              m.data.begin() + static_cast<std::ptrdiff_t>(top.rows * top.cols));
    return m;
}

bool is_zero_matrix(const QMatrix& m) {
    return std::all_of(m.data.begin(), m.data.end(),
                       [](const Rational& q) { return q == 0; });
}

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& q) { return q == 0; });
}

namespace {

RrefResult rref_impl(QMatrix m, bool parallel) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        std::size_t p = pr;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != pr)
            std::swap_ranges(m.data.begin() + static_cast<std::ptrdiff_t>(p * m.cols),
                             m.data.begin() + static_cast<std::ptrdiff_t>((p + 1) * m.cols),
                             m.data.begin() + static_cast<std::ptrdiff_t>(pr * m.cols));
        const Rational lead = m.at(pr, c);
        if (lead != 1)
            for (std::size_t j = c; j < m.cols; ++j) m.at(pr, j) /= lead;

        const long long nrows = static_cast<long long>(m.rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (long long r = 0; r < nrows; ++r) {
            if (static_cast<std::size_t>(r) == pr) continue;
            const Rational f = m.at(static_cast<std::size_t>(r), c);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(static_cast<std::size_t>(r), j) -= f * m.at(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    m.rows = pr;
    m.data.resize(pr * m.cols);
    return {std::move(m), std::move(pivots)};
}

}  // namespace

RrefResult rref_serial(QMatrix m) { return rref_impl(std::move(m), false); }

RrefResult rref(QMatrix m) {
    const bool big = m.rows >= 16 && m.rows * m.cols >= 2048;
    return rref_impl(std::move(m), big);
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = QMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = QMatrix::identity(ambient);
    s.pivots.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
    return s;
}

namespace {

// reduce v against canonical basis rows; returns the remainder
QVector reduce_against(const Subspace& s, QVector v) {
    for (std::size_t i = 0; i < s.basis.rows; ++i) {
        const std::size_t p = s.pivots[i];
        if (v[p] == 0) continue;
        const Rational f = v[p];
        for (std::size_t j = 0; j < s.ambient; ++j)
            if (s.basis.at(i, j) != 0) v[j] -= f * s.basis.at(i, j);
    }
    return v;
}

}  // namespace

bool Subspace::contains(const QVector& v) const {
    if (v.size() != ambient) throw std::invalid_argument("ambient mismatch");
    QVector r = reduce_against(*this, v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient != ambient) throw std::invalid_argument("ambient mismatch");
    for (std::size_t i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

Subspace row_space(const QMatrix& m) {
    RrefResult r = rref(m);
    Subspace s;
    s.ambient = m.cols;
    s.basis = std::move(r.mat);
    s.pivots = std::move(r.pivots);
    return s;
}

Subspace kernel(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<QVector> gens;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        QVector v(m.cols);
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, c);
        gens.push_back(std::move(v));
    }
    if (gens.empty()) return Subspace::zero(m.cols);
    return row_space(QMatrix::from_rows(gens));
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve shape mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    QVector x(m.cols);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols) return std::nullopt;
        x[r.pivots[i]] = r.mat.at(i, m.cols);
    }
    return x;
}

std::vector<QVector> quotient_basis(const Subspace& big, const Subspace& small) {
    if (big.ambient != small.ambient) throw std::invalid_argument("ambient mismatch");
    if (!big.contains(small))
        throw std::invalid_argument("quotient_basis: small is not contained in big");
    std::vector<QVector> reps;
    std::vector<QVector> working;
    for (std::size_t i = 0; i < small.basis.rows; ++i) working.push_back(small.basis.row(i));
    Subspace span = small;
    for (std::size_t i = 0; i < big.basis.rows; ++i) {
        QVector v = big.basis.row(i);
        if (span.contains(v)) continue;
        reps.push_back(v);
        working.push_back(std::move(v));
        span = row_space(QMatrix::from_rows(working));
    }
    return reps;
}

namespace {

// rows annihilating the subspace: v in s  iff  ann(s) . v = 0
QMatrix annihilator(const Subspace& s) {
    return kernel(s.basis).basis;
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    return kernel(stack_rows(annihilator(a), annihilator(b)));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    return row_space(stack_rows(a.basis, b.basis));
}

Subspace preimage_subspace(const QMatrix& m, const Subspace& target) {
    if (target.ambient != m.rows) throw std::invalid_argument("ambient mismatch");
    QMatrix ann = annihilator(target);
    if (ann.rows == 0) return Subspace::full(m.cols);
    return kernel(matmul(ann, m));
}

}  // namespace cdga
