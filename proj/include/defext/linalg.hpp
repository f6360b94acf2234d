#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "defext/scalar.hpp"

namespace defext {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
/// v += s * w
void axpy(Vec& v, const Scalar& s, const Vec& w);

/// Dense matrix over the session field. Linear maps act on column vectors:
/// a map V -> W is stored as dim W rows by dim V columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix& operator+=(const Matrix& o);
    Matrix scaled(const Scalar& s) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    /// Keeps only the listed columns, in order.
    Matrix select_columns(const std::vector<std::size_t>& cols) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are the leftmost nonzero columns.
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<Vec> nullspace(const Matrix& m);

/// Solves m x = b for many right-hand sides. The particular solution sets
/// every free variable to zero, which makes results deterministic.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);

    std::optional<Vec> solve(const Vec& b) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Matrix transform_; // transform_ * m == reduced form
    std::vector<std::size_t> pivots_;
};

/// A subspace of k^n kept as reduced echelon rows.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }

    /// Returns false (and leaves the space unchanged) if v is already in it.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    Vec reduce(Vec v) const;

private:
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Spanning set -> canonical echelon basis.
std::vector<Vec> echelon_basis(const std::vector<Vec>& vectors, std::size_t ambient);

} // namespace defext
