#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "silt/field.hpp"

namespace silt {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over F_p.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Integer entries are reduced mod p.
    Matrix(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(std::span<const std::size_t> cols) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar s) const;
    Vec apply(std::span<const Scalar> v) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
    }

  private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix form;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivots are chosen left to right, first nonzero row.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Some X with a*X == b (free variables zero), or nullopt.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Right null space, one unit vector per free column in increasing order.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Rows spanning the annihilator of the column space: q*cols == 0, rank q = rows - rank(cols).
Matrix cokernel_projection(const Matrix& cols);

/// Columns of `sub` extended by unit vectors to a basis; returns only the added unit indices.
std::vector<std::size_t> complement_units(const Matrix& sub, std::size_t dim);

/// Integer determinant by fraction-free elimination.
std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m);

} // namespace silt
