#pragma once

// Exact rational vectors and matrices with the handful of elimination
// routines the verification layer needs (rank, kernel, span tests).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace partact {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

struct SparseTerm {
    std::size_t index;
    Rational coeff;
};
using SparseVector = std::vector<SparseTerm>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
Vector scaled(const Vector& v, const Rational& a);
SparseVector to_sparse(const Vector& v);
std::string to_string(const Rational& q);

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    Vector apply(const Vector& v) const;
    QMatrix operator*(const QMatrix& other) const;
    bool operator==(const QMatrix& other) const = default;

    static QMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Adds v; returns true when v was independent of the current span.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }
    const std::vector<Vector>& rows() const { return rows_; }

private:
    Vector reduce(Vector v) const;

    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<Vector>& vectors, std::size_t dim);
std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}.
std::vector<Vector> kernel(const QMatrix& m);

/// True iff every vector of `a` lies in span(b) and vice versa.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);
bool span_contains(const std::vector<Vector>& span, const std::vector<Vector>& vs, std::size_t dim);

}  // namespace partact
