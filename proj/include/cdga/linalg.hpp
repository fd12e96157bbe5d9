#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdga/rational.hpp"

namespace cdga {

using QVector = std::vector<Rational>;

// dense rational matrix, row major
struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);

    Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    QVector row(std::size_t i) const;

    bool operator==(const QMatrix&) const = default;
};

QMatrix transpose(const QMatrix& m);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QVector matvec(const QMatrix& m, const QVector& x);
QMatrix stack_rows(const QMatrix& top, const QMatrix& bottom);
bool is_zero_matrix(const QMatrix& m);
bool is_zero_vector(const QVector& v);

struct RrefResult {
    QMatrix mat;                       // zero rows removed, pivot entries 1
    std::vector<std::size_t> pivots;   // pivot column of each row, ascending
};

// reduced row echelon form; rref() may use parallel elimination but is
// bitwise identical to rref_serial()
RrefResult rref(QMatrix m);
RrefResult rref_serial(QMatrix m);

std::size_t rank(const QMatrix& m);

// subspace of Q^ambient in canonical form: basis rows are the rref of any
// spanning set, so equal subspaces compare equal
struct Subspace {
    std::size_t ambient = 0;
    QMatrix basis;  // basis.cols == ambient, rows are rref
    std::vector<std::size_t> pivots;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t dim() const { return basis.rows; }
    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;
};

// span of the rows of m inside Q^{m.cols}
Subspace row_space(const QMatrix& m);

// {x : m x = 0} as a subspace of Q^{m.cols}; basis built from the free
// columns in ascending order, then canonicalized
Subspace kernel(const QMatrix& m);

// one solution of m x = b with all free variables set to zero,
// or nullopt when inconsistent
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// representatives of big/small: walk big's canonical basis rows in order and
// keep each row independent from small plus the rows already kept.
// small must be contained in big.
std::vector<QVector> quotient_basis(const Subspace& big, const Subspace& small);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// {x : m x in target}, target a subspace of Q^{m.rows}
Subspace preimage_subspace(const QMatrix& m, const Subspace& target);

}  // namespace cdga
