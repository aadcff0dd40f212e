#include "camspec/linalg.hpp"

#include <utility>

#include "camspec/error.hpp"

namespace camspec {

namespace {

// Gaussian integer (element of Z[i]) used by the fraction-free elimination.
struct Gint {
    mpz_class re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    Gint operator*(const Gint& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gint operator-(const Gint& o) const { return {re - o.re, im - o.im}; }

    // Exact division in Z[i]; PropertyError if the quotient is not integral
    // (which would indicate a broken elimination invariant).
    Gint div_exact(const Gint& d) const {
        mpz_class n = d.re * d.re + d.im * d.im;
        if (sgn(n) == 0) throw DomainError("division by zero Gaussian integer");
        mpz_class qre_num = re * d.re + im * d.im;
        mpz_class qim_num = im * d.re - re * d.im;
        mpz_class qre, rre, qim, rim;
        mpz_fdiv_qr(qre.get_mpz_t(), rre.get_mpz_t(), qre_num.get_mpz_t(), n.get_mpz_t());
        mpz_fdiv_qr(qim.get_mpz_t(), rim.get_mpz_t(), qim_num.get_mpz_t(), n.get_mpz_t());
        if (sgn(rre) != 0 || sgn(rim) != 0)
            throw PropertyError("fraction-free elimination produced a non-exact division");
        return {qre, qim};
    }
};

// Clears denominators row by row: returns the Z[i] matrix together with the
// rational scale factor of each row (row_int = scale * row_rational).
struct ClearedMatrix {
    std::vector<std::vector<Gint>> a;
    std::vector<mpz_class> row_scale;
    int rows, cols;
};

ClearedMatrix clear_denominators(const Matrix& m) {
    ClearedMatrix out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.a.resize(static_cast<std::size_t>(m.rows()));
    out.row_scale.resize(static_cast<std::size_t>(m.rows()), 1);
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j) {
            const GaussianRational& q = m.at(i, j);
            mpz_class lr;
            mpz_lcm(lr.get_mpz_t(), l.get_mpz_t(), q.re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), lr.get_mpz_t(), q.im().get_den().get_mpz_t());
        }
        out.row_scale[static_cast<std::size_t>(i)] = l;
        auto& row = out.a[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const GaussianRational& q = m.at(i, j);
            mpz_class re = q.re().get_num() * (l / q.re().get_den());
            mpz_class im = q.im().get_num() * (l / q.im().get_den());
            row[static_cast<std::size_t>(j)] = Gint{re, im};
        }
    }
    return out;
}

// Fraction-free (Bareiss) elimination over Z[i].  Scans columns left to
// right; `want_det` demands a square matrix and aborts early on a zero
// column.  Returns the rank; when `want_det` and the matrix is nonsingular,
// *det_out receives the determinant of the cleared integer matrix including
// the row-swap sign.
int bareiss(ClearedMatrix& cm, bool want_det, Gint* det_out, bool* det_is_zero) {
    int rows = cm.rows, cols = cm.cols;
    auto& a = cm.a;
    Gint prev{mpz_class(1), mpz_class(0)};
    int sign = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            if (want_det) {
                *det_is_zero = true;
                return r;
            }
            continue;
        }
        if (pivot != r) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
            sign = -sign;
        }
        const Gint piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Gint t = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * piv -
                         a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                             a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.div_exact(prev);
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = Gint{mpz_class(0), mpz_class(0)};
        }
        prev = piv;
        ++r;
    }
    if (want_det && r == rows) {
        Gint d = prev;
        if (sign < 0) d = Gint{-d.re, -d.im};
        *det_out = d;
        *det_is_zero = false;
    }
    return r;
}

} // namespace

Rref rref(const Matrix& m) {
    Rref out;
    out.reduced = m;
    Matrix& a = out.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
        }
        GaussianRational inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            GaussianRational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ClearedMatrix cm = clear_denominators(m);
    return bareiss(cm, false, nullptr, nullptr);
}

GaussianRational det(const Matrix& m) {
    if (!m.is_square()) throw DomainError("determinant of non-square matrix");
    if (m.rows() == 0) return GaussianRational(1);
    ClearedMatrix cm = clear_denominators(m);
    Gint d;
    bool zero = false;
    int r = bareiss(cm, true, &d, &zero);
    if (zero || r < m.rows()) return GaussianRational(0);
    // det(original) = det(cleared) / prod(row scales).
    GaussianRational value{mpq_class(d.re), mpq_class(d.im)};
    mpz_class denom(1);
    for (const auto& s : cm.row_scale) denom *= s;
    mpq_class q(mpz_class(1), denom);
    q.canonicalize();
    return GaussianRational(q) * value;
}

std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& m) {
    Rref rr = rref(m);
    int bareiss_rank = rank(m);
    if (bareiss_rank != rr.rank)
        throw PropertyError("rank disagreement between fraction-free and Gauss-Jordan elimination");
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<GaussianRational> v(static_cast<std::size_t>(m.cols()), GaussianRational(0));
        v[static_cast<std::size_t>(free_col)] = GaussianRational(1);
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
            int pc = rr.pivot_cols[k];
            v[static_cast<std::size_t>(pc)] = -rr.reduced.at(static_cast<int>(k), free_col);
        }
        basis.push_back(std::move(v));
    }
    if (static_cast<int>(basis.size()) + rr.rank != m.cols())
        throw PropertyError("rank-nullity violation in kernel computation");
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DomainError("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    Rref rr = rref(aug);
    for (int k = 0; k < n; ++k) {
        if (k >= rr.rank || rr.pivot_cols[static_cast<std::size_t>(k)] != k)
            throw DomainError("matrix is singular");
    }
    return rr.reduced.block(0, n, n, n);
}

Matrix conjugate(const Matrix& g, const Matrix& m) { return g * m * inverse(g); }

CharPolyData faddeev_leverrier(const Matrix& m) {
    if (!m.is_square()) throw DomainError("characteristic polynomial of non-square matrix");
    int n = m.rows();
    CharPolyData out;
    std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1, GaussianRational(0));
    c[static_cast<std::size_t>(n)] = GaussianRational(1); // coefficient of x^n
    Matrix b = Matrix::identity(n);
    out.adjugate.push_back(b); // B_0 = I
    for (int k = 1; k <= n; ++k) {
        Matrix mb = m * b;
        GaussianRational ck = -(mb.trace() / GaussianRational(k));
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            b = mb + ck * Matrix::identity(n);
            out.adjugate.push_back(b); // B_k
        } else {
            // Consistency: m * B_{n-1} + c_n I must vanish.
            Matrix terminal = mb + ck * Matrix::identity(n);
            if (!terminal.is_zero()) throw PropertyError("Faddeev-LeVerrier terminal identity failed");
        }
    }
    out.poly = Poly(std::move(c));
    return out;
}

Poly char_poly(const Matrix& m) { return faddeev_leverrier(m).poly; }

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur, const Matrix& m, GaussianRational& acc) {
    if (static_cast<int>(cur.size()) == k) {
        acc += det(m.submatrix(cur, cur));
        return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
        cur.push_back(v);
        subsets_rec(n, k, v + 1, cur, m, acc);
        cur.pop_back();
    }
}

} // namespace

GaussianRational exterior_trace(const Matrix& m, int k) {
    if (!m.is_square()) throw DomainError("exterior trace of non-square matrix");
    if (k < 0) throw DomainError("negative exterior power");
    int n = m.rows();
    if (k > n) return GaussianRational(0);
    if (k == 0) return GaussianRational(1);
    GaussianRational acc(0);
    std::vector<int> cur;
    subsets_rec(n, k, 0, cur, m, acc);
    return acc;
}

Matrix poly_eval_matrix(const Poly& p, const Matrix& m) {
    if (!m.is_square()) throw DomainError("polynomial evaluation at non-square matrix");
    int n = m.rows();
    Matrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        acc += p.coeff(k) * Matrix::identity(n);
    }
    return acc;
}

} // namespace camspec
