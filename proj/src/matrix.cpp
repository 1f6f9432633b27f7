#include "nilform/matrix.hpp"

#include "nilform/errors.hpp"

#include <sstream>

namespace nilform {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("Matrix::from_rows: row length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("Matrix::from_columns: column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw DimensionMismatch("Matrix::apply: vector length");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix +: shape");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix -: shape");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix *: inner dimension");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("Vector +: length");
    Vector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("Vector -: length");
    Vector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v);
    for (auto& x : out) x *= s;
    return out;
}

void axpy(Vector& a, const Rational& s, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("axpy: length");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

Rational trace(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("trace: matrix not square");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw DimensionMismatch("power: matrix not square");
    Matrix result = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) result = result * a;
    return result;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace nilform
