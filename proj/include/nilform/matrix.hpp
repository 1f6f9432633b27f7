#pragma once

#include "nilform/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nilform {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Rational.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
    static Matrix diagonal(std::span<const Rational> entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool is_zero() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vector apply(std::span<const Rational> v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Rational& s, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Rational trace(const Matrix& a);
Matrix power(const Matrix& a, unsigned k);
/// A*B - B*A
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace nilform
