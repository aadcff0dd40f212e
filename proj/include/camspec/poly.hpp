#pragma once

#include <string>
#include <vector>

#include "camspec/rational.hpp"

namespace camspec {

// Dense univariate polynomial over Q(i), coefficients stored lowest-degree
// first.  The zero polynomial is the empty coefficient vector (degree -1);
// otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const GaussianRational& a) { return Poly({a}); }
    // The monomial x.
    static Poly x() { return Poly({GaussianRational(0), GaussianRational(1)}); }
    // prod (x - r) over the root multiset.
    static Poly from_roots(const std::vector<GaussianRational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == GaussianRational(1); }

    // Coefficient of x^k; zero beyond the degree.
    const GaussianRational& coeff(int k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    GaussianRational eval(const GaussianRational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

private:
    void normalize();

    std::vector<GaussianRational> c_;
};

} // namespace camspec
