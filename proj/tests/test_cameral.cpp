#include <doctest.h>

#include <algorithm>

#include "camspec/cameral.hpp"
#include "camspec/error.hpp"
#include "camspec/hitchin.hpp"
#include "camspec/poly.hpp"

using camspec::CameralFiber;
using camspec::GaussianRational;
using camspec::Poly;

namespace {
const GaussianRational zero(0), one(1), two(2);

camspec::BaseFiberPoint base_for(int p, const std::vector<GaussianRational>& roots) {
    const Poly chi = Poly::from_roots(roots);
    camspec::BaseFiberPoint base;
    base.p = p;
    for (int i = 1; i <= p; ++i) base.omega.push_back(chi.coeff(2 * (p - i) + 1));
    return base;
}

CameralFiber fiber_for(int p, const std::vector<GaussianRational>& roots) {
    return camspec::cameral_fiber(base_for(p, roots), roots);
}
} // namespace

TEST_CASE("cameral fiber sizes") {
    const CameralFiber regular1 = fiber_for(1, {zero, two, -two});
    CHECK(regular1.regular);
    CHECK(regular1.points.size() == 6);

    const CameralFiber degenerate = fiber_for(1, {zero, zero, zero});
    CHECK(!degenerate.regular);
    CHECK(degenerate.points.size() == 1);

    const CameralFiber regular2 = fiber_for(2, {zero, one, -one, two, -two});
    CHECK(regular2.regular);
    CHECK(regular2.points.size() == 120);
}

TEST_CASE("real subcover of ordered spectra") {
    const CameralFiber fiber = fiber_for(1, {zero, two, -two});
    const auto real_points = camspec::real_subcover(fiber);
    REQUIRE(real_points.size() == 2);
    CHECK(real_points[0] == std::vector<GaussianRational>{-two, zero, two});
    CHECK(real_points[1] == std::vector<GaussianRational>{two, zero, -two});
    CHECK(camspec::real_subcover_size(1) == 2);
    CHECK(camspec::real_subcover_size(2) == 8);
    CHECK(camspec::real_subcover_size(3) == 48);

    const CameralFiber fiber2 = fiber_for(2, {zero, one, -one, two, -two});
    CHECK(camspec::real_subcover(fiber2).size() == 8);
}

TEST_CASE("weight orbits partition the fiber by the first coordinate") {
    const CameralFiber fiber = fiber_for(1, {zero, two, -two});
    const auto orbits = camspec::w_delta1_orbits(fiber);
    REQUIRE(orbits.size() == 3);
    std::size_t total = 0;
    for (const auto& orbit : orbits) {
        CHECK(orbit.points.size() == 2); // (2p)! at p = 1
        total += orbit.points.size();
        for (const auto& pt : orbit.points) CHECK(pt[0] == orbit.lambda1);
    }
    CHECK(total == fiber.points.size());
    CHECK(camspec::quotient_to_spectral(fiber) ==
          std::vector<GaussianRational>{-two, zero, two});
}

TEST_CASE("coset translates of the real subcover partition the fiber") {
    const CameralFiber fiber = fiber_for(1, {zero, two, -two});
    const camspec::ComponentTranslates ct = camspec::component_translates(fiber);
    CHECK(ct.block_count == 3);
    CHECK(ct.partitions);
    for (const auto size : ct.block_sizes) CHECK(size == 2);

    const CameralFiber fiber2 = fiber_for(2, {zero, one, -one, two, -two});
    const camspec::ComponentTranslates ct2 = camspec::component_translates(fiber2);
    CHECK(ct2.block_count == 15);
    CHECK(ct2.partitions);

    CHECK_THROWS_AS(camspec::component_translates(fiber_for(1, {zero, zero, zero})),
                    camspec::GenericityError);
}

TEST_CASE("involution descent report") {
    const camspec::DescentReport report =
        camspec::descent_involution_report(fiber_for(1, {zero, two, -two}));
    CHECK(report.negation_preserves_fiber);
    CHECK(report.negation_descends_to_spectral);
    CHECK(report.theta_equals_negation_on_real);
    CHECK(report.minus_theta_fixes_real);
    CHECK(report.weight_composition_identity);
    // observations: the negated exchange preserves the fiber but not the
    // quotient orbits, and the literal membership claims fail
    CHECK(report.minus_theta_preserves_fiber);
    CHECK(!report.minus_theta_preserves_quotient_orbits);
    CHECK(!report.orbit_split_witness.empty());
    CHECK(!report.negate_then_exchange_lands_in_real);
    CHECK(!report.exchange_then_negate_lands_in_real);
}

TEST_CASE("rank-one diagonal family at (1, 0)") {
    const camspec::Su21Report report = camspec::su21_example(one, zero);
    CHECK(report.point == std::vector<GaussianRational>{one, -two, one});
    CHECK(report.sigma2 == GaussianRational(-3));
    CHECK(report.sigma3 == -two);
    CHECK(report.displayed_sigma2 == one);
    CHECK(report.displayed_sigma3 == zero);
    CHECK(!report.displayed_map_matches);
    CHECK(report.factorization_verified);
    CHECK(!report.degenerate);
    REQUIRE(report.loci.size() == 3);
    for (const auto& locus : report.loci) {
        CHECK(locus.involution_verified);
        CHECK(locus.odd_coefficient_vanishes);
    }
    CHECK(report.loci[0].in_real_subcover);
}

TEST_CASE("rank-one diagonal family at (1, 2): displayed relations") {
    const camspec::Su21Report report = camspec::su21_example(one, two);
    CHECK(report.sigma2 == GaussianRational(-7));
    CHECK(report.sigma3 == GaussianRational(6));
    CHECK(report.displayed_sigma2 == GaussianRational(-11));
    CHECK(report.displayed_sigma3 == GaussianRational(6));
    CHECK(!report.displayed_map_matches);
    // per-locus displayed base relations: only the {l' = l} one matches
    REQUIRE(report.loci.size() == 3);
    CHECK(!report.loci[0].displayed_equation_matches);
    CHECK(report.loci[1].displayed_equation_matches);
    CHECK(!report.loci[2].displayed_equation_matches);
    CHECK(!report.lprime_zero_locus_is_real);
    // degenerate parameters
    CHECK(camspec::su21_example(zero, zero).degenerate);
}
