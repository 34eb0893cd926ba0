#include "sg/matrix.hpp"

#include <cassert>
#include <sstream>

namespace sg {

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        assert(static_cast<int>(r.size()) == cols_);
        for (int x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& o) const {
    assert(cols_ == o.cols_ || rows_ == 0 || o.rows_ == 0);
    int c = rows_ ? cols_ : o.cols_;
    Matrix out(rows_ + o.rows_, c);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
    return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
    assert(rows_ == o.rows_ || cols_ == 0 || o.cols_ == 0);
    int r = cols_ ? rows_ : o.rows_;
    Matrix out(r, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    if (rows_ == 0) os << "[" << rows_ << "x" << cols_ << "]";
    return os.str();
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix out(m.cols(), static_cast<int>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        out.at(free[k], static_cast<int>(k)) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(pivots[i], static_cast<int>(k)) = -r.at(static_cast<int>(i), free[k]);
    }
    return out;
}

Matrix column_space(const Matrix& m) {
    Matrix r = m;
    auto pivots = rref(r);
    Matrix out(m.rows(), static_cast<int>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i)
            out.at(i, static_cast<int>(k)) = m.at(i, pivots[k]);
    return out;
}

bool in_column_span(const Matrix& m, const Matrix& v) {
    assert(v.cols() == 1 && v.rows() == m.rows());
    return rank(m.hstack(v)) == rank(m);
}

std::pair<bool, Matrix> solve(const Matrix& m, const Matrix& b) {
    assert(b.rows() == m.rows());
    Matrix aug = m.hstack(b);
    auto pivots = rref(aug);
    // Inconsistent iff a pivot lands in an appended column.
    if (!pivots.empty() && pivots.back() >= m.cols()) return {false, Matrix()};
    Matrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (int c = 0; c < b.cols(); ++c)
            x.at(pivots[i], c) = aug.at(static_cast<int>(i), m.cols() + c);
    return {true, x};
}

} // namespace sg
