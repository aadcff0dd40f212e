#include "camspec/cameral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "camspec/error.hpp"
#include "camspec/weyl.hpp"

namespace camspec {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

bool in_real_locus(int p, const CameralPoint& v) {
    if (!v[p].is_zero()) return false;
    for (int k = 0; k < p; ++k)
        if (v[p + 1 + k] != -v[k]) return false;
    return true;
}

CameralPoint negated(const CameralPoint& v) {
    CameralPoint out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(-c);
    return out;
}

std::string point_str(const CameralPoint& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) os << ", ";
        os << v[k].str();
    }
    os << ')';
    return os.str();
}

} // namespace

bool point_less(const CameralPoint& a, const CameralPoint& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const int c = GaussianRational::cmp(a[k], b[k]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

CameralFiber cameral_fiber(const BaseFiberPoint& base, const std::vector<GaussianRational>& roots) {
    if (base.p > 3) throw CapacityError("cameral fiber enumeration is limited to rank 3");
    const SpectralFiber spec = spectral_fiber(base, roots); // validates the roots
    const Poly expected = base_char_poly(base);

    CameralFiber fiber;
    fiber.p = base.p;
    fiber.base = base;
    fiber.regular = spec.all_simple;
    CameralPoint v = sorted_multiset(roots);
    do {
        if (Poly::from_roots(v) != expected)
            throw PropertyError("an ordering of the eigenvalues changed the base point");
        fiber.points.push_back(v);
    } while (std::next_permutation(v.begin(), v.end(), StructuralLess{}));
    return fiber;
}

std::vector<CameralPoint> real_subcover(const CameralFiber& fiber) {
    std::vector<CameralPoint> real;
    for (const auto& v : fiber.points)
        if (in_real_locus(fiber.p, v)) real.push_back(v);
    return real;
}

long long real_subcover_size(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    return (1LL << p) * factorial(p);
}

ComponentTranslates component_translates(const CameralFiber& fiber) {
    const int p = fiber.p;
    if (!fiber.regular)
        throw GenericityError("component translates need a regular fiber");
    const std::vector<CameralPoint> real = real_subcover(fiber);
    if (static_cast<long long>(real.size()) != real_subcover_size(p))
        throw PropertyError("real subcover of a regular fiber had unexpected size");

    const RestrictedWeyl rw = restricted_weyl_bruteforce(p);
    ComponentTranslates result;
    result.p = p;
    result.partitions = false;

    std::set<std::vector<int>> seen;
    std::vector<CameralPoint> covered;
    for (const Permutation& w : symmetric_group(2 * p + 1)) {
        if (seen.count(w.images())) continue;
        for (const Permutation& n : rw.normalizer) seen.insert(w.compose(n).images());

        std::vector<CameralPoint> block;
        block.reserve(real.size());
        for (const auto& v : real) block.push_back(w.act(v));
        std::sort(block.begin(), block.end(), point_less);
        for (std::size_t k = 1; k < block.size(); ++k)
            if (!point_less(block[k - 1], block[k]))
                throw PropertyError("a coset translate of the real subcover collapsed");

        result.block_sizes.push_back(static_cast<int>(block.size()));
        result.representatives.push_back(block.front());
        covered.insert(covered.end(), block.begin(), block.end());
        ++result.block_count;
    }

    std::sort(covered.begin(), covered.end(), point_less);
    if (covered.size() != fiber.points.size())
        throw PropertyError("coset translates did not cover the fiber exactly once");
    for (std::size_t k = 0; k < covered.size(); ++k)
        if (covered[k] != fiber.points[k])
            throw PropertyError("coset translates did not reproduce the fiber");
    result.partitions = true;
    return result;
}

std::vector<WeightOrbit> w_delta1_orbits(const CameralFiber& fiber) {
    std::map<GaussianRational, std::vector<CameralPoint>, StructuralLess> grouped;
    for (const auto& v : fiber.points) grouped[v[0]].push_back(v);
    std::vector<WeightOrbit> orbits;
    for (auto& entry : grouped) orbits.push_back({entry.first, std::move(entry.second)});
    return orbits;
}

std::vector<GaussianRational> quotient_to_spectral(const CameralFiber& fiber) {
    std::set<GaussianRational, StructuralLess> values;
    for (const auto& v : fiber.points) values.insert(v[0]);
    return std::vector<GaussianRational>(values.begin(), values.end());
}

DescentReport descent_involution_report(const CameralFiber& fiber) {
    const int p = fiber.p;
    DescentReport rep;
    rep.p = p;

    const auto contains = [&fiber](const CameralPoint& v) {
        return std::binary_search(fiber.points.begin(), fiber.points.end(), v, point_less);
    };
    const std::vector<CameralPoint> real = real_subcover(fiber);
    const auto in_real = [&real](const CameralPoint& v) {
        return std::find(real.begin(), real.end(), v) != real.end();
    };
    const Permutation exchange = w0(p);

    rep.negation_preserves_fiber = true;
    for (const auto& v : fiber.points)
        if (!contains(negated(v))) rep.negation_preserves_fiber = false;
    if (!rep.negation_preserves_fiber)
        throw PropertyError("global negation did not preserve the cameral fiber");

    // Negation descends: it sends the whole orbit over lambda1 onto the
    // whole orbit over -lambda1.
    rep.negation_descends_to_spectral = true;
    {
        std::map<GaussianRational, std::set<std::string>, StructuralLess> orbit_sets;
        for (const auto& v : fiber.points) orbit_sets[v[0]].insert(point_str(v));
        for (const auto& v : fiber.points) {
            const CameralPoint nv = negated(v);
            if (!orbit_sets.count(nv[0]) || !orbit_sets[nv[0]].count(point_str(nv)))
                rep.negation_descends_to_spectral = false;
        }
    }
    if (!rep.negation_descends_to_spectral)
        throw PropertyError("global negation did not descend to the spectral quotient");

    rep.theta_equals_negation_on_real = true;
    rep.minus_theta_fixes_real = true;
    for (const auto& v : real) {
        const CameralPoint moved = exchange.act(v);
        if (moved != negated(v)) rep.theta_equals_negation_on_real = false;
        if (negated(moved) != v) rep.minus_theta_fixes_real = false;
    }
    if (!rep.theta_equals_negation_on_real)
        throw PropertyError("the exchange element did not act as negation on the real subcover");
    if (!rep.minus_theta_fixes_real)
        throw PropertyError("the composite involution moved a real point");

    rep.minus_theta_preserves_fiber = true;
    rep.negate_then_exchange_lands_in_real = true;
    rep.exchange_then_negate_lands_in_real = true;
    for (const auto& v : fiber.points) {
        const CameralPoint image = negated(exchange.act(v));
        if (!contains(image)) rep.minus_theta_preserves_fiber = false;
        if (!in_real(exchange.act(negated(v)))) rep.negate_then_exchange_lands_in_real = false;
        if (!in_real(image)) rep.exchange_then_negate_lands_in_real = false;
    }

    rep.minus_theta_preserves_quotient_orbits = true;
    for (const auto& orbit : w_delta1_orbits(fiber)) {
        bool have_first = false;
        GaussianRational first_image(0);
        for (const auto& v : orbit.points) {
            const CameralPoint image = negated(exchange.act(v));
            if (!have_first) {
                first_image = image[0];
                have_first = true;
            } else if (image[0] != first_image) {
                rep.minus_theta_preserves_quotient_orbits = false;
                if (rep.orbit_split_witness.empty()) {
                    std::ostringstream os;
                    os << "orbit over lambda1=" << orbit.lambda1.str() << " splits: "
                       << point_str(orbit.points.front()) << " -> lambda1=" << first_image.str()
                       << " but " << point_str(v) << " -> lambda1=" << image[0].str();
                    rep.orbit_split_witness = os.str();
                }
            }
        }
    }

    rep.weight_composition_identity = true;
    const Permutation s1 = Permutation::transposition(2 * p + 1, 1, 2);
    for (const auto& v : fiber.points)
        if (s1.act(v)[0] != v[1]) rep.weight_composition_identity = false;

    return rep;
}

Su21Report su21_example(const GaussianRational& l, const GaussianRational& lp) {
    Su21Report rep;
    rep.l = l;
    rep.lp = lp;
    rep.degenerate = l.is_zero() && lp.is_zero();

    const auto family_point = [](const GaussianRational& a, const GaussianRational& b) {
        return std::vector<GaussianRational>{a + b, GaussianRational(-2) * a, a - b};
    };
    const auto e2 = [](const std::vector<GaussianRational>& v) {
        return v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
    };
    const auto e3 = [](const std::vector<GaussianRational>& v) { return v[0] * v[1] * v[2]; };

    rep.point = family_point(l, lp);
    if (!(rep.point[0] + rep.point[1] + rep.point[2]).is_zero())
        throw PropertyError("the diagonal family was not trace-free");
    rep.sigma2 = e2(rep.point);
    rep.sigma3 = e3(rep.point);
    rep.displayed_sigma2 = l * l - lp * lp - GaussianRational(4) * lp * l;
    rep.displayed_sigma3 = lp * (lp * lp - l * l);
    rep.displayed_map_matches =
        rep.sigma2 == rep.displayed_sigma2 && rep.sigma3 == rep.displayed_sigma3;
    if (rep.sigma3 != GaussianRational(-2) * l * (l - lp) * (l + lp))
        throw PropertyError("the product of the diagonal entries did not factor as expected");
    rep.factorization_verified = true;
    {
        const auto at_lp_zero = family_point(l, GaussianRational(0));
        rep.lprime_zero_locus_is_real = e3(at_lp_zero).is_zero();
    }

    struct LocusSpec {
        std::string condition;
        GaussianRational sub_l, sub_lp;
        std::vector<int> involution;
        std::string cycle;
        GaussianRational displayed_omega;
        std::string displayed_equation;
    };
    const std::vector<LocusSpec> specs = {
        {"l = 0", GaussianRational(0), lp, {3, 2, 1}, "(1 3)", l * l,
         "omega = l^2 on the locus displayed as {l' = 0}"},
        {"l' = l", l, l, {2, 1, 3}, "(1 2)", GaussianRational(-4) * l * l, "omega = -4l^2"},
        {"l' = -l", l, -l, {1, 3, 2}, "(2 3)", GaussianRational(4) * l * l, "omega = 4l^2"},
    };
    for (const auto& s : specs) {
        Su21Locus locus;
        locus.condition = s.condition;
        locus.point = family_point(s.sub_l, s.sub_lp);
        locus.sigma2 = e2(locus.point);
        locus.sigma3 = e3(locus.point);
        locus.odd_coefficient_vanishes = locus.sigma3.is_zero();
        if (!locus.odd_coefficient_vanishes)
            throw PropertyError("a locus of the vanishing set had nonzero odd coefficient");
        locus.in_real_subcover = in_real_locus(1, locus.point);
        locus.involution_images = s.involution;
        locus.involution_cycle = s.cycle;
        const Permutation w = Permutation::from_images(s.involution);
        locus.involution_verified = (w.act(locus.point) == negated(locus.point));
        if (!locus.involution_verified)
            throw PropertyError("the cover involution did not negate the locus point");
        locus.displayed_equation = s.displayed_equation;
        locus.displayed_equation_matches = (locus.sigma2 == s.displayed_omega);
        rep.loci.push_back(std::move(locus));
    }
    if (!rep.loci[0].in_real_subcover)
        throw PropertyError("the first locus was not inside the real subcover");
    return rep;
}

} // namespace camspec
