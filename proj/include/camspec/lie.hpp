#pragma once

#include <vector>

#include "camspec/linalg.hpp"
#include "camspec/matrix.hpp"

namespace camspec {

// Pointwise Higgs-field datum for SU(p+1,p): the two off-diagonal blocks of a
// trace-free (2p+1) x (2p+1) matrix, beta of shape (p+1) x p and gamma of
// shape p x (p+1), with the convention that the first p+1 coordinates span
// the V-block and the last p the W-block.
struct HiggsPoint {
    int p;
    Matrix beta;   // (p+1) x p : W -> V component
    Matrix gamma;  // p x (p+1) : V -> W component
};

// Validates shapes; DomainError on mismatch.
HiggsPoint make_higgs(int p, Matrix beta, Matrix gamma);

// The full (2p+1) x (2p+1) matrix [[0, beta], [gamma, 0]].
Matrix assemble(const HiggsPoint& phi);

// Extracts the blocks of a block-anti-diagonal matrix; DomainError if the
// matrix is not in the -1 eigenspace of the block involution.
HiggsPoint split_higgs(int p, const Matrix& m);

// diag(1_{p+1}, -1_p): the signature matrix defining the block involution.
Matrix signature_matrix(int p);

// The symmetric exchange involution J: entries (i, p+1+i) and (p+1+i, i)
// equal 1 for i = 1..p (1-based), the central entry (p+1, p+1) equal -1.
// Conjugation by J realizes the involution fixing the compact-type Cartan
// realization below; on diagonal matrices it swaps entries i <-> p+1+i.
// For p = 1 this is exactly the anti-diagonal matrix with central entry -1.
Matrix exchange_involution(int p);

// Ad(diag(1_{p+1}, -1_p)): fixes block-diagonal, negates block-anti-diagonal.
Matrix theta_prime(int p, const Matrix& m);
// Ad(J) with J = exchange_involution(p).
Matrix theta(int p, const Matrix& m);

// Membership tests for the +1/-1 eigenspaces of theta_prime inside
// sl(2p+1): block-diagonal trace-free (h) and block-anti-diagonal (m).
bool in_m_space(int p, const Matrix& m);
bool in_h_space(int p, const Matrix& m);

// Maximal anisotropic Cartan element in the (1, p, p) block realization:
// zeros everywhere except entries (1+i, 2p+2-i) = (2p+2-i, 1+i) = x_i
// (1-based), i = 1..p.  Spectrum {0} U {+-x_i}.
Matrix cartan_m_element(const std::vector<GaussianRational>& x);

// Element of the theta-stable Cartan in diagonal form:
// diag(a_1+t_1, ..., a_p+t_p, -2*sum(t), t_1-a_1, ..., t_p-a_p).
// The a-part is the anisotropic coordinate (negated by theta), the t-part the
// toral coordinate (fixed by theta).
Matrix theta_cartan_element(const std::vector<GaussianRational>& a,
                            const std::vector<GaussianRational>& t);

// Basis of the block-anti-diagonal subspace (dimension 2p(p+1)).
std::vector<Matrix> m_basis(int p);
// Basis of the block-diagonal trace-free subspace (dimension (p+1)^2+p^2-1).
std::vector<Matrix> h_basis(int p);
// Basis of sl(n) (dimension n^2-1).
std::vector<Matrix> sl_basis(int n);

// dim of the centralizer of x inside the block-anti-diagonal subspace;
// requires x block-anti-diagonal (DomainError otherwise).
int centralizer_dim_m(int p, const Matrix& x);
// dim of the centralizer of x inside sl(2p+1).
int centralizer_dim_g(int p, const Matrix& x);
// dim of the centralizer of x inside the block-diagonal subspace.
int centralizer_dim_h(int p, const Matrix& x);

// Regularity of x in the block-anti-diagonal subspace: centralizer dimension
// equals p (the minimal possible value).
bool is_regular(int p, const Matrix& x);

// Centralizer of the whole anisotropic Cartan inside the block-diagonal
// subalgebra: expected dimension p with all pairwise brackets zero (the
// quasi-split witness).
struct CentralizerHProfile {
    int dim;
    bool abelian;
};
CentralizerHProfile centralizer_h_profile(int p);

// Conjugation by diag(A, B) with A of size p+1 and B of size p; DomainError
// when either block is singular.  Preserves the block-anti-diagonal subspace.
Matrix conjugate_blockwise(const Matrix& m, const Matrix& a_block, const Matrix& b_block);
HiggsPoint conjugate_blockwise(const HiggsPoint& phi, const Matrix& a_block, const Matrix& b_block);

} // namespace camspec
