#include "partact/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace partact {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& q : v)
        if (sgn(q) != 0) return false;
    return true;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: size mismatch");
    if (sgn(a) == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Vector scaled(const Vector& v, const Rational& a) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * a;
    return out;
}

SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.push_back({i, v[i]});
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Vector QMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void QMatrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector QMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vector out = zero_vector(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& m = (*this)(r, c);
            if (sgn(m) != 0) out[r] += m * v[c];
        }
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    QMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                const Rational& b = other(k, c);
                if (sgn(b) != 0) out(r, c) += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector EchelonBasis::reduce(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (sgn(v[p]) == 0) continue;
        const Rational f = v[p];
        const Vector& row = rows_[r];
        for (std::size_t c = p; c < dim_; ++c)
            if (sgn(row[c]) != 0) v[c] -= f * row[c];
    }
    return v;
}

bool EchelonBasis::insert(const Vector& v) {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    if (rows_.size() == dim_) return false;
    Vector w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(w[p]) == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = w[p];
    for (std::size_t c = p; c < dim_; ++c) w[c] /= lead;
    // Keep the basis fully reduced so `reduce` needs one pass.
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        const Rational f = row[p];
        for (std::size_t c = p; c < dim_; ++c)
            if (sgn(w[c]) != 0) row[c] -= f * w[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    return true;
}

bool EchelonBasis::contains(const Vector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    return is_zero(reduce(v));
}

std::size_t rank(const std::vector<Vector>& vectors, std::size_t dim) {
    EchelonBasis basis(dim);
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

std::size_t rank(const QMatrix& m) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        basis.insert(row);
    }
    return basis.rank();
}

std::vector<Vector> kernel(const QMatrix& m) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        basis.insert(row);
    }
    // Rows are in reduced echelon form sorted by pivot.
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<std::size_t> pivot_of_row;
    for (const auto& row : basis.rows()) {
        std::size_t p = 0;
        while (sgn(row[p]) == 0) ++p;
        is_pivot[p] = true;
        pivot_of_row.push_back(p);
    }
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < basis.rows().size(); ++r) v[pivot_of_row[r]] = -basis.rows()[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

bool span_contains(const std::vector<Vector>& span, const std::vector<Vector>& vs, std::size_t dim) {
    EchelonBasis basis(dim);
    for (const auto& v : span) basis.insert(v);
    for (const auto& v : vs)
        if (!basis.contains(v)) return false;
    return true;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
    return span_contains(a, b, dim) && span_contains(b, a, dim);
}

}  // namespace partact
