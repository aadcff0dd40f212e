#include "camspec/lie.hpp"

#include <string>

#include "camspec/error.hpp"

namespace camspec {

namespace {

void check_p(int p) {
    if (p < 1) throw DomainError("rank parameter p must be at least 1");
}

// Flattens [y, x] for y in `domain_basis` into the column space of gl(n) and
// returns the kernel dimension of ad(x) restricted to the span of the basis.
int ad_kernel_dim(const std::vector<Matrix>& domain_basis, const Matrix& x) {
    int n = x.rows();
    int dim = static_cast<int>(domain_basis.size());
    Matrix system(n * n, dim);
    for (int k = 0; k < dim; ++k) {
        Matrix br = commutator(domain_basis[static_cast<std::size_t>(k)], x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) system.at(i * n + j, k) = br.at(i, j);
    }
    return dim - rank(system);
}

} // namespace

HiggsPoint make_higgs(int p, Matrix beta, Matrix gamma) {
    check_p(p);
    if (beta.rows() != p + 1 || beta.cols() != p)
        throw DomainError("beta block must have shape (p+1) x p");
    if (gamma.rows() != p || gamma.cols() != p + 1)
        throw DomainError("gamma block must have shape p x (p+1)");
    return HiggsPoint{p, std::move(beta), std::move(gamma)};
}

Matrix assemble(const HiggsPoint& phi) {
    int n = 2 * phi.p + 1;
    Matrix m(n, n);
    m.set_block(0, phi.p + 1, phi.beta);
    m.set_block(phi.p + 1, 0, phi.gamma);
    return m;
}

HiggsPoint split_higgs(int p, const Matrix& m) {
    check_p(p);
    if (!in_m_space(p, m)) throw DomainError("matrix is not block-anti-diagonal for this p");
    return HiggsPoint{p, m.block(0, p + 1, p + 1, p), m.block(p + 1, 0, p, p + 1)};
}

Matrix signature_matrix(int p) {
    check_p(p);
    int n = 2 * p + 1;
    Matrix s(n, n);
    for (int k = 0; k < n; ++k) s.at(k, k) = GaussianRational(k <= p ? 1 : -1);
    return s;
}

Matrix exchange_involution(int p) {
    check_p(p);
    int n = 2 * p + 1;
    Matrix j(n, n);
    // 1-based formula: entries (i, p+1+i) = (p+1+i, i) = 1 for i = 1..p,
    // central entry (p+1, p+1) = -1; 0-based below.
    for (int i = 0; i < p; ++i) {
        j.at(i, p + 1 + i) = GaussianRational(1);
        j.at(p + 1 + i, i) = GaussianRational(1);
    }
    j.at(p, p) = GaussianRational(-1);
    return j;
}

Matrix theta_prime(int p, const Matrix& m) {
    Matrix s = signature_matrix(p);
    return s * m * s; // s is its own inverse
}

Matrix theta(int p, const Matrix& m) {
    Matrix j = exchange_involution(p);
    return j * m * j; // j is its own inverse
}

bool in_m_space(int p, const Matrix& m) {
    check_p(p);
    int n = 2 * p + 1;
    if (m.rows() != n || m.cols() != n) return false;
    return theta_prime(p, m) == -m;
}

bool in_h_space(int p, const Matrix& m) {
    check_p(p);
    int n = 2 * p + 1;
    if (m.rows() != n || m.cols() != n) return false;
    if (theta_prime(p, m) != m) return false;
    return m.trace().is_zero();
}

Matrix cartan_m_element(const std::vector<GaussianRational>& x) {
    int p = static_cast<int>(x.size());
    check_p(p);
    int n = 2 * p + 1;
    Matrix m(n, n);
    // 1-based: M[1+i, 2p+2-i] = M[2p+2-i, 1+i] = x_i for i = 1..p.
    for (int i = 1; i <= p; ++i) {
        m.at(i, 2 * p + 1 - i) = x[static_cast<std::size_t>(i - 1)];
        m.at(2 * p + 1 - i, i) = x[static_cast<std::size_t>(i - 1)];
    }
    return m;
}

Matrix theta_cartan_element(const std::vector<GaussianRational>& a,
                            const std::vector<GaussianRational>& t) {
    int p = static_cast<int>(a.size());
    check_p(p);
    if (t.size() != a.size()) throw DomainError("a-part and t-part must have the same length p");
    std::vector<GaussianRational> d(static_cast<std::size_t>(2 * p + 1), GaussianRational(0));
    GaussianRational tsum(0);
    for (int i = 0; i < p; ++i) {
        d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + t[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(p + 1 + i)] = t[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];
        tsum += t[static_cast<std::size_t>(i)];
    }
    d[static_cast<std::size_t>(p)] = GaussianRational(-2) * tsum;
    return Matrix::diagonal(d);
}

std::vector<Matrix> m_basis(int p) {
    check_p(p);
    int n = 2 * p + 1;
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(2 * p * (p + 1)));
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j < p; ++j) {
            Matrix e(n, n);
            e.at(i, p + 1 + j) = GaussianRational(1);
            basis.push_back(e);
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= p; ++j) {
            Matrix e(n, n);
            e.at(p + 1 + i, j) = GaussianRational(1);
            basis.push_back(e);
        }
    return basis;
}

std::vector<Matrix> h_basis(int p) {
    check_p(p);
    int n = 2 * p + 1;
    std::vector<Matrix> basis;
    // Off-diagonal entries inside the V-block and inside the W-block.
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= p; ++j) {
            if (i == j) continue;
            Matrix e(n, n);
            e.at(i, j) = GaussianRational(1);
            basis.push_back(e);
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            Matrix e(n, n);
            e.at(p + 1 + i, p + 1 + j) = GaussianRational(1);
            basis.push_back(e);
        }
    // Trace-free diagonal combinations E_kk - E_nn (k = 0 .. n-2).
    for (int k = 0; k + 1 < n; ++k) {
        Matrix e(n, n);
        e.at(k, k) = GaussianRational(1);
        e.at(n - 1, n - 1) = GaussianRational(-1);
        basis.push_back(e);
    }
    return basis;
}

std::vector<Matrix> sl_basis(int n) {
    if (n < 2) throw DomainError("sl(n) requires n >= 2");
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix e(n, n);
            e.at(i, j) = GaussianRational(1);
            basis.push_back(e);
        }
    for (int k = 0; k + 1 < n; ++k) {
        Matrix e(n, n);
        e.at(k, k) = GaussianRational(1);
        e.at(n - 1, n - 1) = GaussianRational(-1);
        basis.push_back(e);
    }
    return basis;
}

int centralizer_dim_m(int p, const Matrix& x) {
    if (!in_m_space(p, x)) throw DomainError("centralizer_dim_m requires a block-anti-diagonal argument");
    return ad_kernel_dim(m_basis(p), x);
}

int centralizer_dim_g(int p, const Matrix& x) {
    check_p(p);
    int n = 2 * p + 1;
    if (x.rows() != n || x.cols() != n) throw DomainError("matrix size does not match p");
    if (!x.trace().is_zero()) throw DomainError("centralizer_dim_g requires a trace-free matrix");
    return ad_kernel_dim(sl_basis(n), x);
}

int centralizer_dim_h(int p, const Matrix& x) {
    check_p(p);
    int n = 2 * p + 1;
    if (x.rows() != n || x.cols() != n) throw DomainError("matrix size does not match p");
    return ad_kernel_dim(h_basis(p), x);
}

bool is_regular(int p, const Matrix& x) { return centralizer_dim_m(p, x) == p; }

CentralizerHProfile centralizer_h_profile(int p) {
    check_p(p);
    int n = 2 * p + 1;
    std::vector<Matrix> hb = h_basis(p);
    int dim_h = static_cast<int>(hb.size());
    // Stack the conditions [h, M_k] = 0 for the p Cartan generators M_k.
    Matrix system(p * n * n, dim_h);
    for (int k = 1; k <= p; ++k) {
        std::vector<GaussianRational> x(static_cast<std::size_t>(p), GaussianRational(0));
        x[static_cast<std::size_t>(k - 1)] = GaussianRational(1);
        Matrix mk = cartan_m_element(x);
        for (int b = 0; b < dim_h; ++b) {
            Matrix br = commutator(hb[static_cast<std::size_t>(b)], mk);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    system.at((k - 1) * n * n + i * n + j, b) = br.at(i, j);
        }
    }
    auto coords = kernel_basis(system);
    // Realize the kernel vectors as matrices and test pairwise brackets.
    std::vector<Matrix> gens;
    for (const auto& v : coords) {
        Matrix g(n, n);
        for (int b = 0; b < dim_h; ++b) g += v[static_cast<std::size_t>(b)] * hb[static_cast<std::size_t>(b)];
        gens.push_back(g);
    }
    bool abelian = true;
    for (std::size_t a = 0; a < gens.size() && abelian; ++a)
        for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
            if (!commutator(gens[a], gens[b]).is_zero()) abelian = false;
    return CentralizerHProfile{static_cast<int>(gens.size()), abelian};
}

Matrix conjugate_blockwise(const Matrix& m, const Matrix& a_block, const Matrix& b_block) {
    int p = b_block.rows();
    check_p(p);
    if (a_block.rows() != p + 1 || a_block.cols() != p + 1 || b_block.cols() != p)
        throw DomainError("conjugator blocks must have sizes (p+1) x (p+1) and p x p");
    int n = 2 * p + 1;
    if (m.rows() != n || m.cols() != n) throw DomainError("matrix size does not match p");
    Matrix g(n, n);
    g.set_block(0, 0, a_block);
    g.set_block(p + 1, p + 1, b_block);
    return conjugate(g, m); // DomainError from inverse() when singular
}

HiggsPoint conjugate_blockwise(const HiggsPoint& phi, const Matrix& a_block, const Matrix& b_block) {
    Matrix m = conjugate_blockwise(assemble(phi), a_block, b_block);
    return split_higgs(phi.p, m);
}

} // namespace camspec
