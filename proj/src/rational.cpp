#include "camspec/rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace camspec {

namespace {

mpz_class parse_integer(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer string");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits in integer string '" + text + "'");
    for (std::size_t k = start; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("invalid character in integer string '" + text + "'");
    }
    return mpz_class(text, 10);
}

} // namespace

GaussianRational GaussianRational::from_strings(const std::string& re_num, const std::string& re_den,
                                                const std::string& im_num, const std::string& im_den) {
    mpz_class rn = parse_integer(re_num);
    mpz_class rd = parse_integer(re_den);
    mpz_class in = parse_integer(im_num);
    mpz_class id = parse_integer(im_den);
    if (sgn(rd) == 0 || sgn(id) == 0) throw ParseError("zero denominator in scalar encoding");
    mpq_class re(rn, rd);
    re.canonicalize();
    mpq_class im(in, id);
    im.canonicalize();
    return GaussianRational(re, im);
}

std::string GaussianRational::str() const {
    auto rational_str = [](const mpq_class& q) { return q.get_str(); };
    if (is_zero()) return "0";
    std::ostringstream os;
    if (sgn(re_) != 0) os << rational_str(re_);
    if (sgn(im_) != 0) {
        if (sgn(re_) != 0 && sgn(im_) > 0) os << "+";
        if (im_ == -1)
            os << "-";
        else if (im_ != 1)
            os << rational_str(im_) << "*";
        os << "i";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

std::vector<GaussianRational> sorted_multiset(std::vector<GaussianRational> values) {
    std::sort(values.begin(), values.end(), StructuralLess{});
    return values;
}

} // namespace camspec
