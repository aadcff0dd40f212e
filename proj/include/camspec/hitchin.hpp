#pragma once

#include <string>
#include <vector>

#include "camspec/lie.hpp"
#include "camspec/matrix.hpp"
#include "camspec/poly.hpp"
#include "camspec/rational.hpp"

namespace camspec {

// Point of the base of the fibration: the tuple (omega_2, omega_4, ...,
// omega_2p), with omega[i-1] = omega_{2i}.
struct BaseFiberPoint {
    int p = 0;
    std::vector<GaussianRational> omega;
};

// lambda^{2p+1} + sum_i omega_{2i} lambda^{2(p-i)+1}.
Poly base_char_poly(const BaseFiberPoint& b);

// Multiplicity of 0 as a root (index of the lowest nonzero coefficient).
int zero_multiplicity(const Poly& f);

// Characteristic coefficients of the assembled Higgs field.  Asserts that all
// odd-index coefficients vanish and cross-checks every coefficient against
// the exterior-power trace route (PropertyError on mismatch).
BaseFiberPoint char_coefficients(const HiggsPoint& hp);

// One candidate scaling for the even-coefficient trace identity.
struct TraceCandidate {
    std::string label;
    bool holds;
};

// Report comparing the even characteristic coefficients a_{2i} against
// scaled exterior traces of beta*gamma and gamma*beta.  The signed identity
// a_{2i} = (-1)^i tr(wedge^i(gamma*beta)) is asserted; the other scalings are
// reported for observation only.
struct TraceFormulaReport {
    int p = 0;
    std::vector<GaussianRational> even_coefficients;   // a_{2i}, i = 1..p
    std::vector<GaussianRational> traces_beta_gamma;   // tr(wedge^i(beta*gamma))
    std::vector<GaussianRational> traces_gamma_beta;   // tr(wedge^i(gamma*beta))
    std::vector<TraceCandidate> candidates;
    bool signed_identity_holds = false;
};
TraceFormulaReport verify_even_trace_formula(const HiggsPoint& hp);

// Differential of the map hp -> (a_2, a_4, ..., a_2p) along the
// block-anti-diagonal directions: a p x 2p(p+1) matrix whose (i, k) entry is
// the derivative of a_{2i} in the k-th basis direction.
Matrix chevalley_jacobian(const HiggsPoint& hp);
int chevalley_rank(const HiggsPoint& hp);

// A point of the fiber of the spectral cover, with component membership.
struct SpectralPoint {
    GaussianRational lambda;
    int multiplicity = 0;
    bool on_zero_section = false;   // lambda = 0
    bool on_main_component = false; // root of the degree-2p factor
};

struct SpectralFiber {
    int p = 0;
    std::vector<SpectralPoint> points; // distinct values, sorted
    int zero_multiplicity = 0;
    bool components_intersect = false; // zero_multiplicity >= 3
    bool all_simple = false;           // every multiplicity is 1
};

// Verifies that `roots` (listed with multiplicity, 2p+1 entries) reproduce
// the characteristic polynomial of the base point exactly (DomainError if
// not), then classifies them.  Negation closure and odd multiplicity of 0
// are asserted (PropertyError) since the product check forces them.
SpectralFiber spectral_fiber(const BaseFiberPoint& base, const std::vector<GaussianRational>& roots);

// The lambda-eigenline of phi, normalized so its first nonzero coordinate is
// 1.  DomainError unless the eigenspace is exactly one-dimensional.
std::vector<GaussianRational> eigenline(const Matrix& phi, const GaussianRational& lambda);

// Reduction of a Higgs field whose kernel is a line inside the first block:
// quotients out the kernel line, leaving a p x p pair (beta1, gamma1).
struct UppReduction {
    int p = 0;
    std::vector<GaussianRational> kernel_vector; // in the first block, pivot = 1
    int pivot = 0;                               // index of the normalized coordinate
    Matrix beta1;
    Matrix gamma1;
};

// ReductionError unless ker(phi) is one-dimensional and contained in the
// first block.  Asserts char(phi) = lambda * char(reduced) (PropertyError).
UppReduction upp_reduction(const HiggsPoint& hp);

// [[0, beta1], [gamma1, 0]] on the reduced space (2p x 2p).
Matrix assemble_upp(const Matrix& beta1, const Matrix& gamma1);

enum class BranchType { None, Plus, Minus };
const char* branch_type_name(BranchType t);

struct BranchReport {
    BranchType type = BranchType::None;
    GaussianRational det_beta1;
    GaussianRational det_gamma1;
};

// Branch classification of a reduced pair at 0: Plus when gamma1 is singular
// (kernel line in the first reduced block), Minus when beta1 is singular
// (kernel line in the second block), None when both are invertible.
// GenericityError when both are singular.
BranchReport upp_branch_type(const Matrix& beta1, const Matrix& gamma1);

// +1 or -1 depending on which block carries the kernel line of the reduced
// field; DomainError when the kernel is not a line.
int upp_branch_sign(const Matrix& beta1, const Matrix& gamma1);

// Branch classification of a Higgs field via its reduction.
BranchReport branch_type(const HiggsPoint& hp);

// Sign of the block involution on a theta-stable eigenline.
struct ThetaSignReport {
    GaussianRational lambda;
    int eigen_multiplicity = 0;
    bool used_reduction = false;
    bool theta_stable = false;
    int sign = 0; // +1 first block, -1 second block, 0 when the line is moved
    std::vector<GaussianRational> line;
};

// At lambda = 0 with a simple zero, classifies ker(phi); at a branch point
// (zero of multiplicity >= 3), classifies the kernel line of the reduced
// field.  For lambda != 0 the involution moves the line to the (-lambda)-
// eigenline; that relocation is verified and sign = 0 is reported.
ThetaSignReport theta_eigenline_sign(const HiggsPoint& hp, const GaussianRational& lambda);

} // namespace camspec
