#include "camspec/poly.hpp"

#include <sstream>

namespace camspec {

namespace {
const GaussianRational kZero(0);
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_roots(const std::vector<GaussianRational>& roots) {
    Poly result = constant(GaussianRational(1));
    for (const auto& r : roots) {
        Poly factor({-r, GaussianRational(1)});
        result = result * factor;
    }
    return result;
}

const GaussianRational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GaussianRational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GaussianRational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& s, const Poly& a) {
    std::vector<GaussianRational> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const GaussianRational& a = coeff(k);
        if (a.is_zero()) continue;
        std::string term;
        bool is_one = (a == GaussianRational(1));
        bool is_minus_one = (a == GaussianRational(-1));
        if (k == 0) {
            term = a.str();
        } else {
            std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
            if (is_one)
                term = power;
            else if (is_minus_one)
                term = "-" + power;
            else if (a.is_real())
                term = a.str() + "*" + power;
            else
                term = "(" + a.str() + ")*" + power;
        }
        if (first) {
            os << term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

} // namespace camspec
