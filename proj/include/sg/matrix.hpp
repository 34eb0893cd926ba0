#pragma once

#include "sg/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace sg {

// Dense matrix over Rat. Zero-sized dimensions are legal and common (modules
// supported on few vertices), so every routine must cope with 0xN and Nx0.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}
    Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;

    bool is_zero() const;

    // Stack o below this (same cols).
    Matrix vstack(const Matrix& o) const;
    // Place o to the right of this (same rows).
    Matrix hstack(const Matrix& o) const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Basis of the right nullspace {x : m x = 0}, one column per basis vector.
Matrix nullspace(const Matrix& m);

// Basis of the column space, one column per basis vector (columns of m that
// land on pivots).
Matrix column_space(const Matrix& m);

// Does the column `v` lie in the column span of `m`?
bool in_column_span(const Matrix& m, const Matrix& v);

// Solve m X = B columnwise for one solution; returns (ok, X).
std::pair<bool, Matrix> solve(const Matrix& m, const Matrix& b);

} // namespace sg
