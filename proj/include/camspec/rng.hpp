#pragma once

#include <cstdint>
#include <vector>

#include "camspec/error.hpp"
#include "camspec/lie.hpp"
#include "camspec/matrix.hpp"
#include "camspec/rational.hpp"

namespace camspec {

// Deterministic pseudo-random stream (splitmix64).  All randomized suites
// draw from one sequentially-consumed stream so a seed fixes every byte of
// the run.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw DomainError("empty range");
        const std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        if (lo > hi) throw DomainError("empty range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Small exact scalar; numerators in [-max_num, max_num], denominators in
// [1, max_den], with an imaginary part when with_imaginary is set.
inline GaussianRational random_scalar(SplitMix64& rng, long max_num = 4, long max_den = 3,
                                      bool with_imaginary = true) {
    const GaussianRational re(rng.range(-max_num, max_num), rng.range(1, max_den));
    if (!with_imaginary) return re;
    const GaussianRational im(rng.range(-max_num, max_num), rng.range(1, max_den));
    return re + GaussianRational::i() * im;
}

inline Matrix random_matrix(SplitMix64& rng, int rows, int cols, long max_num = 4, long max_den = 3,
                            bool with_imaginary = true) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, max_num, max_den, with_imaginary);
    return m;
}

inline HiggsPoint random_higgs(SplitMix64& rng, int p) {
    return make_higgs(p, random_matrix(rng, p + 1, p), random_matrix(rng, p, p + 1));
}

// Unit upper-triangular with small random strict-upper entries.
inline Matrix random_unit_triangular(SplitMix64& rng, int n) {
    Matrix m = Matrix::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) m.at(r, c) = random_scalar(rng, 2, 2);
    return m;
}

// Distinct positive rationals with pairwise distinct absolute values:
// x_k lies in the open interval (k+1, k+2).
inline std::vector<GaussianRational> random_anisotropic_values(SplitMix64& rng, int p) {
    std::vector<GaussianRational> x;
    for (int k = 0; k < p; ++k) {
        const long den = rng.range(2, 6);
        const long num = rng.range(1, den - 1);
        x.push_back(GaussianRational(k + 1) + GaussianRational(num, den));
    }
    return x;
}

// Regular semisimple element of the anti-diagonal block, optionally moved by
// a blockwise change of basis (which preserves the block structure).
inline HiggsPoint random_regular_semisimple(SplitMix64& rng, int p, bool conjugate = true) {
    Matrix m = cartan_m_element(random_anisotropic_values(rng, p));
    if (conjugate) {
        const Matrix a = random_unit_triangular(rng, p + 1);
        const Matrix b = random_unit_triangular(rng, p);
        m = conjugate_blockwise(m, a, b);
    }
    return split_higgs(p, m);
}

// Semisimple element with a degenerate spectrum: one coordinate zeroed or
// two coordinates equal.
inline HiggsPoint random_degenerate_semisimple(SplitMix64& rng, int p, bool conjugate = true) {
    std::vector<GaussianRational> x = random_anisotropic_values(rng, p);
    if (p == 1 || rng.below(2) == 0)
        x[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(p)))] = GaussianRational(0);
    else
        x[0] = x[1];
    Matrix m = cartan_m_element(x);
    if (conjugate) {
        const Matrix a = random_unit_triangular(rng, p + 1);
        const Matrix b = random_unit_triangular(rng, p);
        m = conjugate_blockwise(m, a, b);
    }
    return split_higgs(p, m);
}

// The standard regular nilpotent: beta the inclusion on the first p
// coordinates, gamma the shift; the assembled field is one Jordan chain.
inline HiggsPoint regular_nilpotent(int p) {
    Matrix beta(p + 1, p);
    for (int k = 0; k < p; ++k) beta.at(k, k) = GaussianRational(1);
    Matrix gamma(p, p + 1);
    for (int k = 0; k < p; ++k) gamma.at(k, k + 1) = GaussianRational(1);
    return make_higgs(p, beta, gamma);
}

// Fisher-Yates shuffle of (1, ..., n) driven by the stream.
inline std::vector<int> random_permutation_images(SplitMix64& rng, int n) {
    std::vector<int> images(n);
    for (int k = 0; k < n; ++k) images[k] = k + 1;
    for (int k = n - 1; k > 0; --k) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1));
        std::swap(images[k], images[j]);
    }
    return images;
}

// Rank p-1 square matrix with a one-dimensional kernel, built as
// L * diag(0, d_2, ..., d_p) * U with unit-triangular L, U.
inline Matrix random_corank_one(SplitMix64& rng, int p) {
    std::vector<GaussianRational> d(p, GaussianRational(0));
    for (int k = 1; k < p; ++k) d[k] = GaussianRational(rng.range(1, 4), rng.range(1, 3));
    const Matrix l = random_unit_triangular(rng, p).transpose();
    const Matrix u = random_unit_triangular(rng, p);
    return l * Matrix::diagonal(d) * u;
}

// Invertible square matrix, built as L * diag(nonzero) * U.
inline Matrix random_invertible(SplitMix64& rng, int p) {
    std::vector<GaussianRational> d(p, GaussianRational(0));
    for (int k = 0; k < p; ++k) d[k] = GaussianRational(rng.range(1, 4), rng.range(1, 3));
    const Matrix l = random_unit_triangular(rng, p).transpose();
    const Matrix u = random_unit_triangular(rng, p);
    return l * Matrix::diagonal(d) * u;
}

} // namespace camspec
