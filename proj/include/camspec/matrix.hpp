#pragma once

#include <string>
#include <vector>

#include "camspec/rational.hpp"

namespace camspec {

// Dense matrix over Q(i).  Row-major storage with 0-based accessors; builders
// that mirror 1-based blackboard formulas convert at the boundary.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, GaussianRational(0)) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<GaussianRational>& d);
    // Diagonal of a square matrix, as a vector.
    static std::vector<GaussianRational> diagonal_entries(const Matrix& m);
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const GaussianRational& at(int r, int c) const {
        check_index(r, c);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }
    GaussianRational& at(int r, int c) {
        check_index(r, c);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Matrix transpose() const;
    GaussianRational trace() const;
    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    // Copies `block` into this matrix with upper-left corner at (r, c).
    void set_block(int r, int c, const Matrix& block);
    Matrix block(int r, int c, int rows, int cols) const;
    std::vector<GaussianRational> row(int r) const;
    std::vector<GaussianRational> col(int c) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& s, const Matrix& a);
    friend std::vector<GaussianRational> operator*(const Matrix& a, const std::vector<GaussianRational>& v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
    }

    int rows_;
    int cols_;
    std::vector<GaussianRational> e_;
};

// Commutator [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace camspec
