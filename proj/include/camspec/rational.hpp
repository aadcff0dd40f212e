#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "camspec/error.hpp"

namespace camspec {

// Exact scalar in Q(i): re + im*i with arbitrary-precision rational parts.
// mpq_class keeps every value reduced with a positive denominator, so
// component-wise equality is structural equality of values.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}                // NOLINT(google-explicit-constructor)
    GaussianRational(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw DomainError("rational with zero denominator");
        re_.canonicalize();
    }
    explicit GaussianRational(const mpq_class& re, const mpq_class& im = mpq_class(0))
        : re_(re), im_(im) {}

    // Parses four decimal integer strings [re_num, re_den, im_num, im_den].
    static GaussianRational from_strings(const std::string& re_num, const std::string& re_den,
                                         const std::string& im_num, const std::string& im_den);

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // Squared modulus re^2 + im^2, an exact nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        im_ = im;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DomainError("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = re;
        im_ = im;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in Q(i)");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    // Structural total order (lexicographic on (re, im)): used for canonical
    // sorting of tuples and multisets only; it is not a field order.
    static int cmp(const GaussianRational& a, const GaussianRational& b) {
        int c = ::cmp(a.re_, b.re_);
        if (c != 0) return c;
        return ::cmp(a.im_, b.im_);
    }

    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

// Comparator for canonical (structural) ordering.
struct StructuralLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        return GaussianRational::cmp(a, b) < 0;
    }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

// Sorts a copy of the multiset into canonical structural order.
std::vector<GaussianRational> sorted_multiset(std::vector<GaussianRational> values);

} // namespace camspec
