#include "camspec/matrix.hpp"

#include <sstream>

namespace camspec {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<GaussianRational>& d) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = d[static_cast<std::size_t>(k)];
    return m;
}

std::vector<GaussianRational> Matrix::diagonal_entries(const Matrix& m) {
    if (!m.is_square()) throw DomainError("diagonal of a non-square matrix");
    std::vector<GaussianRational> d;
    d.reserve(m.rows());
    for (int k = 0; k < m.rows(); ++k) d.push_back(m.at(k, k));
    return d;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DomainError("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

GaussianRational Matrix::trace() const {
    if (!is_square()) throw DomainError("trace of non-square matrix");
    GaussianRational t(0);
    for (int k = 0; k < rows_; ++k) t += at(k, k);
    return t;
}

Matrix Matrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
}

void Matrix::set_block(int r, int c, const Matrix& block) {
    if (r < 0 || c < 0 || r + block.rows() > rows_ || c + block.cols() > cols_)
        throw DomainError("block placement out of range");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) at(r + i, c + j) = block.at(i, j);
}

Matrix Matrix::block(int r, int c, int rows, int cols) const {
    if (r < 0 || c < 0 || rows < 0 || cols < 0 || r + rows > rows_ || c + cols > cols_)
        throw DomainError("block extraction out of range");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(r + i, c + j);
    return m;
}

std::vector<GaussianRational> Matrix::row(int r) const {
    std::vector<GaussianRational> v;
    v.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
    return v;
}

std::vector<GaussianRational> Matrix::col(int c) const {
    std::vector<GaussianRational> v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in matrix addition");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in matrix subtraction");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("shape mismatch in matrix product");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix operator*(const GaussianRational& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.e_) x = s * x;
    return m;
}

std::vector<GaussianRational> operator*(const Matrix& a, const std::vector<GaussianRational>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DomainError("shape mismatch in matrix-vector product");
    std::vector<GaussianRational> r(static_cast<std::size_t>(a.rows_), GaussianRational(0));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r[static_cast<std::size_t>(i)] += a.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

} // namespace camspec
