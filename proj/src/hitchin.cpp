#include "camspec/hitchin.hpp"

#include <algorithm>
#include <sstream>

#include "camspec/error.hpp"
#include "camspec/linalg.hpp"

namespace camspec {

namespace {

GaussianRational gr_pow(const GaussianRational& base, int e) {
    GaussianRational r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

// tr(a*b) without forming the product.
GaussianRational trace_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw DomainError("trace of a product needs compatible shapes");
    GaussianRational t(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t += a.at(i, j) * b.at(j, i);
    return t;
}

void require_rank(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
}

} // namespace

Poly base_char_poly(const BaseFiberPoint& b) {
    require_rank(b.p);
    if (static_cast<int>(b.omega.size()) != b.p)
        throw DomainError("base point needs exactly p coefficients");
    const int n = 2 * b.p + 1;
    std::vector<GaussianRational> coeffs(n + 1, GaussianRational(0));
    coeffs[n] = GaussianRational(1);
    for (int i = 1; i <= b.p; ++i) coeffs[2 * (b.p - i) + 1] = b.omega[i - 1];
    return Poly(std::move(coeffs));
}

int zero_multiplicity(const Poly& f) {
    if (f.degree() < 0) throw DomainError("zero polynomial has no root multiplicity");
    int m = 0;
    while (f.coeff(m).is_zero()) ++m;
    return m;
}

BaseFiberPoint char_coefficients(const HiggsPoint& hp) {
    const Matrix phi = assemble(hp);
    const int n = phi.rows();
    const Poly chi = faddeev_leverrier(phi).poly;
    // chi = lambda^n + c_1 lambda^{n-1} + ... + c_n; c_k must equal
    // (-1)^k tr(wedge^k phi), and odd-index coefficients must vanish.
    for (int k = 1; k <= n; ++k) {
        const GaussianRational c_k = chi.coeff(n - k);
        const GaussianRational via_minors = gr_pow(GaussianRational(-1), k) * exterior_trace(phi, k);
        if (c_k != via_minors)
            throw PropertyError("characteristic coefficient disagrees with the minor-sum route");
        if (k % 2 == 1 && !c_k.is_zero())
            throw PropertyError("odd characteristic coefficient did not vanish on the anti-diagonal block");
    }
    BaseFiberPoint b;
    b.p = hp.p;
    for (int i = 1; i <= hp.p; ++i) b.omega.push_back(chi.coeff(n - 2 * i));
    return b;
}

TraceFormulaReport verify_even_trace_formula(const HiggsPoint& hp) {
    const BaseFiberPoint base = char_coefficients(hp);
    TraceFormulaReport rep;
    rep.p = hp.p;
    rep.even_coefficients = base.omega;
    const Matrix bg = hp.beta * hp.gamma;
    const Matrix gb = hp.gamma * hp.beta;
    for (int i = 1; i <= hp.p; ++i) {
        rep.traces_beta_gamma.push_back(exterior_trace(bg, i));
        rep.traces_gamma_beta.push_back(exterior_trace(gb, i));
    }

    struct Scaling {
        std::string name;
        GaussianRational base;
    };
    const std::vector<Scaling> scalings = {
        {"(-1)^i", GaussianRational(-1)},
        {"2^i", GaussianRational(2)},
        {"(-2)^i", GaussianRational(-2)},
        {"1", GaussianRational(1)},
    };
    const std::vector<std::pair<std::string, const std::vector<GaussianRational>*>> orders = {
        {"beta*gamma", &rep.traces_beta_gamma},
        {"gamma*beta", &rep.traces_gamma_beta},
    };
    for (const auto& order : orders) {
        for (const auto& s : scalings) {
            bool holds = true;
            for (int i = 1; i <= hp.p; ++i) {
                const GaussianRational candidate = gr_pow(s.base, i) * (*order.second)[i - 1];
                if (candidate != rep.even_coefficients[i - 1]) {
                    holds = false;
                    break;
                }
            }
            rep.candidates.push_back({s.name + " * tr(wedge^i(" + order.first + "))", holds});
        }
    }
    bool signed_bg = rep.candidates[0].holds;
    bool signed_gb = rep.candidates[4].holds;
    rep.signed_identity_holds = signed_bg && signed_gb;
    if (!rep.signed_identity_holds)
        throw PropertyError("signed exterior-trace identity for even coefficients failed");
    return rep;
}

Matrix chevalley_jacobian(const HiggsPoint& hp) {
    const Matrix phi = assemble(hp);
    const CharPolyData fl = faddeev_leverrier(phi);
    const std::vector<Matrix> basis = m_basis(hp.p);
    Matrix jac(hp.p, static_cast<int>(basis.size()));
    for (int i = 1; i <= hp.p; ++i)
        for (int k = 0; k < static_cast<int>(basis.size()); ++k)
            jac.at(i - 1, k) = -trace_product(fl.adjugate[2 * i - 1], basis[k]);
    return jac;
}

int chevalley_rank(const HiggsPoint& hp) { return rank(chevalley_jacobian(hp)); }

SpectralFiber spectral_fiber(const BaseFiberPoint& base, const std::vector<GaussianRational>& roots) {
    require_rank(base.p);
    const int n = 2 * base.p + 1;
    if (static_cast<int>(roots.size()) != n)
        throw DomainError("a spectral fiber needs exactly 2p+1 roots counted with multiplicity");
    const Poly expected = base_char_poly(base);
    if (Poly::from_roots(roots) != expected)
        throw DomainError("the proposed roots do not reproduce the characteristic polynomial");

    // Forced by the product check: the multiset is closed under negation ...
    std::vector<GaussianRational> negated;
    negated.reserve(roots.size());
    for (const auto& r : roots) negated.push_back(-r);
    if (sorted_multiset(roots) != sorted_multiset(negated))
        throw PropertyError("root multiset of an odd polynomial was not closed under negation");

    SpectralFiber fib;
    fib.p = base.p;
    fib.zero_multiplicity = zero_multiplicity(expected);
    // ... and 0 appears with odd multiplicity.
    if (fib.zero_multiplicity % 2 != 1)
        throw PropertyError("zero root of an odd polynomial had even multiplicity");
    fib.components_intersect = fib.zero_multiplicity >= 3;

    // Degree-2p factor q with char = lambda * q.
    std::vector<GaussianRational> q_coeffs;
    for (int k = 1; k <= n; ++k) q_coeffs.push_back(expected.coeff(k));
    const Poly q{std::move(q_coeffs)};

    std::vector<GaussianRational> sorted = sorted_multiset(roots);
    fib.all_simple = true;
    for (std::size_t k = 0; k < sorted.size();) {
        std::size_t j = k;
        while (j < sorted.size() && sorted[j] == sorted[k]) ++j;
        SpectralPoint pt;
        pt.lambda = sorted[k];
        pt.multiplicity = static_cast<int>(j - k);
        pt.on_zero_section = pt.lambda.is_zero();
        pt.on_main_component = q.eval(pt.lambda).is_zero();
        if (pt.multiplicity > 1) fib.all_simple = false;
        fib.points.push_back(std::move(pt));
        k = j;
    }
    return fib;
}

std::vector<GaussianRational> eigenline(const Matrix& phi, const GaussianRational& lambda) {
    if (!phi.is_square()) throw DomainError("eigenline of a non-square matrix");
    Matrix shifted = lambda * Matrix::identity(phi.rows()) - phi;
    const std::vector<std::vector<GaussianRational>> kernel = kernel_basis(shifted);
    if (kernel.size() != 1) throw DomainError("eigenvalue does not have a one-dimensional eigenspace");
    std::vector<GaussianRational> v = kernel[0];
    std::size_t first = 0;
    while (first < v.size() && v[first].is_zero()) ++first;
    if (first == v.size()) throw PropertyError("kernel basis vector was zero");
    const GaussianRational scale = v[first].inverse();
    for (auto& c : v) c *= scale;
    return v;
}

UppReduction upp_reduction(const HiggsPoint& hp) {
    const Matrix phi = assemble(hp);
    const int p = hp.p;
    const std::vector<std::vector<GaussianRational>> kernel = kernel_basis(phi);
    if (kernel.size() != 1)
        throw ReductionError("reduction needs a one-dimensional kernel");
    std::vector<GaussianRational> v = kernel[0];
    for (int k = p + 1; k < 2 * p + 1; ++k)
        if (!v[k].is_zero())
            throw ReductionError("reduction needs the kernel line inside the first block");

    UppReduction red;
    red.p = p;
    int pivot = 0;
    while (pivot <= p && v[pivot].is_zero()) ++pivot;
    if (pivot > p) throw PropertyError("kernel basis vector was zero");
    const GaussianRational scale = v[pivot].inverse();
    for (auto& c : v) c *= scale;
    red.pivot = pivot;
    red.kernel_vector.assign(v.begin(), v.begin() + (p + 1));

    // beta1 = (projection along the kernel line) o beta: drop the pivot row
    // after subtracting v_k times it from row k.
    red.beta1 = Matrix(p, p);
    int out_row = 0;
    for (int r = 0; r <= p; ++r) {
        if (r == pivot) continue;
        for (int c = 0; c < p; ++c)
            red.beta1.at(out_row, c) = hp.beta.at(r, c) - red.kernel_vector[r] * hp.beta.at(pivot, c);
        ++out_row;
    }
    // gamma kills the kernel vector, so it descends: drop the pivot column.
    red.gamma1 = Matrix(p, p);
    int out_col = 0;
    for (int c = 0; c <= p; ++c) {
        if (c == pivot) continue;
        for (int r = 0; r < p; ++r) red.gamma1.at(r, out_col) = hp.gamma.at(r, c);
        ++out_col;
    }

    const Poly full = faddeev_leverrier(phi).poly;
    const Poly reduced = faddeev_leverrier(assemble_upp(red.beta1, red.gamma1)).poly;
    if (full != Poly::x() * reduced)
        throw PropertyError("characteristic polynomial did not factor through the reduction");
    return red;
}

Matrix assemble_upp(const Matrix& beta1, const Matrix& gamma1) {
    const int p = beta1.rows();
    if (beta1.cols() != p || gamma1.rows() != p || gamma1.cols() != p)
        throw DomainError("reduced blocks must be square of equal size");
    Matrix phi(2 * p, 2 * p);
    phi.set_block(0, p, beta1);
    phi.set_block(p, 0, gamma1);
    return phi;
}

const char* branch_type_name(BranchType t) {
    switch (t) {
        case BranchType::None: return "none";
        case BranchType::Plus: return "plus";
        case BranchType::Minus: return "minus";
    }
    throw DomainError("unknown branch type");
}

BranchReport upp_branch_type(const Matrix& beta1, const Matrix& gamma1) {
    BranchReport rep;
    rep.det_beta1 = det(beta1);
    rep.det_gamma1 = det(gamma1);
    const bool beta_singular = rep.det_beta1.is_zero();
    const bool gamma_singular = rep.det_gamma1.is_zero();
    if (beta_singular && gamma_singular)
        throw GenericityError("both reduced blocks are singular; the branch is not generic");
    if (gamma_singular)
        rep.type = BranchType::Plus;
    else if (beta_singular)
        rep.type = BranchType::Minus;
    else
        rep.type = BranchType::None;
    return rep;
}

int upp_branch_sign(const Matrix& beta1, const Matrix& gamma1) {
    const int p = beta1.rows();
    const Matrix phi = assemble_upp(beta1, gamma1);
    const std::vector<GaussianRational> line = eigenline(phi, GaussianRational(0));
    bool in_first = true, in_second = true;
    for (int k = 0; k < p; ++k)
        if (!line[k].is_zero()) in_second = false;
    for (int k = p; k < 2 * p; ++k)
        if (!line[k].is_zero()) in_first = false;
    if (in_first == in_second)
        throw PropertyError("reduced kernel line did not lie in a single block");
    return in_first ? 1 : -1;
}

BranchReport branch_type(const HiggsPoint& hp) {
    const UppReduction red = upp_reduction(hp);
    return upp_branch_type(red.beta1, red.gamma1);
}

ThetaSignReport theta_eigenline_sign(const HiggsPoint& hp, const GaussianRational& lambda) {
    const Matrix phi = assemble(hp);
    const int p = hp.p;
    const Poly chi = faddeev_leverrier(phi).poly;
    ThetaSignReport rep;
    rep.lambda = lambda;
    {
        Poly f = chi;
        int mult = 0;
        // Count multiplicity by repeated synthetic division at lambda.
        while (f.degree() >= 0 && f.eval(lambda).is_zero()) {
            std::vector<GaussianRational> quotient(static_cast<std::size_t>(f.degree()), GaussianRational(0));
            GaussianRational carry(0);
            for (int k = f.degree(); k >= 1; --k) {
                carry = f.coeff(k) + lambda * carry;
                quotient[k - 1] = carry;
            }
            f = Poly(std::move(quotient));
            ++mult;
            if (f.degree() < 0) break;
        }
        rep.eigen_multiplicity = mult;
    }
    if (rep.eigen_multiplicity == 0) throw DomainError("lambda is not an eigenvalue of the Higgs field");

    if (!lambda.is_zero()) {
        rep.line = eigenline(phi, lambda);
        rep.used_reduction = false;
        rep.theta_stable = false;
        rep.sign = 0;
        // The involution sends the lambda-line to the (-lambda)-line.
        std::vector<GaussianRational> flipped = rep.line;
        for (int k = p + 1; k < 2 * p + 1; ++k) flipped[k] = -flipped[k];
        const Matrix shifted = -lambda * Matrix::identity(2 * p + 1) - phi;
        const std::vector<GaussianRational> image = shifted * flipped;
        for (const auto& c : image)
            if (!c.is_zero())
                throw PropertyError("involution image of the eigenline missed the opposite eigenline");
        return rep;
    }

    if (rep.eigen_multiplicity % 2 != 1)
        throw PropertyError("zero eigenvalue had even multiplicity on the anti-diagonal block");

    std::vector<GaussianRational> line;
    int first_block = 0, second_block = 0;
    if (rep.eigen_multiplicity == 1) {
        rep.used_reduction = false;
        line = eigenline(phi, GaussianRational(0));
        first_block = p + 1;
        second_block = p;
    } else {
        rep.used_reduction = true;
        const UppReduction red = upp_reduction(hp);
        const Matrix reduced = assemble_upp(red.beta1, red.gamma1);
        line = eigenline(reduced, GaussianRational(0));
        first_block = p;
        second_block = p;
    }
    bool in_first = true, in_second = true;
    for (int k = 0; k < first_block; ++k)
        if (!line[k].is_zero()) in_second = false;
    for (int k = first_block; k < first_block + second_block; ++k)
        if (!line[k].is_zero()) in_first = false;
    if (in_first == in_second)
        throw PropertyError("kernel line straddled the two blocks");
    rep.line = std::move(line);
    rep.theta_stable = true;
    rep.sign = in_first ? 1 : -1;
    return rep;
}

} // namespace camspec
