#pragma once

#include <vector>

#include "camspec/matrix.hpp"
#include "camspec/poly.hpp"

namespace camspec {

// Reduced row echelon form over Q(i) (exact Gauss-Jordan).
struct Rref {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};
Rref rref(const Matrix& m);

// Rank via fraction-free (Bareiss) elimination over Z[i] after clearing row
// denominators; exact divisions are checked.
int rank(const Matrix& m);

// Determinant via the same fraction-free elimination, with row-scaling and
// row-swap bookkeeping.
GaussianRational det(const Matrix& m);

// Basis of the right kernel {v : m v = 0}.  Internally cross-checks the
// Gauss-Jordan rank against the fraction-free rank and rank-nullity.
std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& m);

// Inverse via Gauss-Jordan on [m | I]; DomainError when singular.
Matrix inverse(const Matrix& m);

// g m g^{-1}.
Matrix conjugate(const Matrix& g, const Matrix& m);

// Characteristic polynomial det(x I - m) together with the coefficient
// matrices of the adjugate: adj(x I - m) = sum_k x^(n-1-k) B_k, via the
// Faddeev-LeVerrier recurrence.  The coefficient of x^(n-j) in the
// characteristic polynomial is c_j; its directional derivative along a matrix
// direction E is -tr(B_{j-1} E).
struct CharPolyData {
    Poly poly;                      // monic, degree n
    std::vector<Matrix> adjugate;   // B_0 .. B_{n-1}
};
CharPolyData faddeev_leverrier(const Matrix& m);
Poly char_poly(const Matrix& m);

// tr(Lambda^k m): sum of the k x k principal minors.  Independent of the
// Faddeev-LeVerrier route (direct determinant expansion of each minor).
GaussianRational exterior_trace(const Matrix& m, int k);

// Evaluates p(m) by Horner's rule.
Matrix poly_eval_matrix(const Poly& p, const Matrix& m);

} // namespace camspec
