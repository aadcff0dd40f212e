#include <doctest.h>

#include "camspec/error.hpp"
#include "camspec/hitchin.hpp"
#include "camspec/lie.hpp"
#include "camspec/linalg.hpp"
#include "camspec/rng.hpp"
#include "oracle.hpp"

using camspec::BranchType;
using camspec::DomainError;
using camspec::GaussianRational;
using camspec::HiggsPoint;
using camspec::Matrix;
using camspec::Poly;

namespace {
const GaussianRational zero(0), one(1), two(2);

HiggsPoint cartan_point(const std::vector<GaussianRational>& x) {
    return camspec::split_higgs(static_cast<int>(x.size()),
                                camspec::cartan_m_element(x));
}
} // namespace

TEST_CASE("even coefficients of pinned Cartan points") {
    const auto omega1 = camspec::char_coefficients(cartan_point({two})).omega;
    REQUIRE(omega1.size() == 1);
    CHECK(omega1[0] == GaussianRational(-4)); // x^3 - 4x

    const auto omega2 = camspec::char_coefficients(cartan_point({one, two})).omega;
    REQUIRE(omega2.size() == 2);
    CHECK(omega2[0] == GaussianRational(-5));
    CHECK(omega2[1] == GaussianRational(4));
}

TEST_CASE("odd coefficients vanish and the even ones match the naive expansion") {
    camspec::SplitMix64 rng(2026);
    for (int t = 0; t < 10; ++t) {
        const int p = 1 + static_cast<int>(rng.below(2));
        const HiggsPoint hp = camspec::random_higgs(rng, p);
        const auto omega = camspec::char_coefficients(hp).omega; // throws if an odd one survives
        const Poly chi = oracle::naive_char_poly(camspec::assemble(hp));
        for (int i = 1; i <= p; ++i) CHECK(omega[i - 1] == chi.coeff(2 * (p - i) + 1));
        for (int k = 0; k < 2 * p + 1; k += 2) CHECK(chi.coeff(k) == zero);
    }
}

TEST_CASE("base points reconstruct their characteristic polynomials") {
    camspec::BaseFiberPoint base;
    base.p = 1;
    base.omega = {GaussianRational(-4)};
    CHECK(camspec::base_char_poly(base) ==
          Poly({zero, GaussianRational(-4), zero, one}));
}

TEST_CASE("trace-formula report enumerates the candidate readings") {
    const camspec::TraceFormulaReport report =
        camspec::verify_even_trace_formula(cartan_point({one, two}));
    CHECK(report.p == 2);
    CHECK(report.signed_identity_holds);
    CHECK(report.candidates.size() == 8);
    int holding = 0;
    for (const auto& cand : report.candidates)
        if (cand.holds) ++holding;
    CHECK(holding >= 2); // at least the two signed readings
}

TEST_CASE("chevalley differential ranks") {
    CHECK(camspec::chevalley_rank(cartan_point({two})) == 1);
    CHECK(camspec::chevalley_rank(cartan_point({one, two})) == 2);
    CHECK(camspec::chevalley_rank(camspec::regular_nilpotent(1)) == 1);
    CHECK(camspec::chevalley_rank(camspec::regular_nilpotent(2)) == 2);
    const HiggsPoint zero_field = camspec::make_higgs(1, Matrix(2, 1), Matrix(1, 2));
    CHECK(camspec::chevalley_rank(zero_field) == 0);
    // degenerate semisimple: one anisotropic coordinate vanishing
    CHECK(camspec::chevalley_rank(cartan_point({zero, two})) < 2);
}

TEST_CASE("spectral fibers classify eigenvalue multisets") {
    camspec::BaseFiberPoint base;
    base.p = 1;
    base.omega = {GaussianRational(-4)};
    const camspec::SpectralFiber regular =
        camspec::spectral_fiber(base, {zero, two, -two});
    CHECK(regular.zero_multiplicity == 1);
    CHECK(!regular.components_intersect);
    CHECK(regular.all_simple);
    REQUIRE(regular.points.size() == 3);
    CHECK(regular.points[1].lambda == zero);
    CHECK(regular.points[1].on_zero_section);
    CHECK(!regular.points[1].on_main_component);
    CHECK(regular.points[0].on_main_component);

    camspec::BaseFiberPoint nilbase;
    nilbase.p = 1;
    nilbase.omega = {zero};
    const camspec::SpectralFiber degenerate =
        camspec::spectral_fiber(nilbase, {zero, zero, zero});
    CHECK(degenerate.zero_multiplicity == 3);
    CHECK(degenerate.components_intersect);
    CHECK(!degenerate.all_simple);
    REQUIRE(degenerate.points.size() == 1);
    CHECK(degenerate.points[0].on_zero_section);
    CHECK(degenerate.points[0].on_main_component);

    CHECK_THROWS_AS(camspec::spectral_fiber(base, {zero, one, -one}), DomainError);
}

TEST_CASE("eigenlines are one-dimensional and exact") {
    const Matrix phi = camspec::cartan_m_element({two});
    const auto at_two = camspec::eigenline(phi, two);
    REQUIRE(at_two.size() == 3);
    CHECK(at_two[0] == zero);
    CHECK(at_two[1] == one); // first nonzero coordinate normalized
    CHECK(at_two[2] == one);
    const auto at_zero = camspec::eigenline(phi, zero);
    CHECK(at_zero[0] == one);
    CHECK(at_zero[1] == zero);
    CHECK(at_zero[2] == zero);
    CHECK_THROWS_AS(camspec::eigenline(phi, one), DomainError);          // not an eigenvalue
    CHECK_THROWS_AS(camspec::eigenline(Matrix(3, 3), zero), DomainError); // 3-dim eigenspace
}

TEST_CASE("kernel reduction of a regular semisimple point") {
    const camspec::UppReduction red = camspec::upp_reduction(cartan_point({two}));
    CHECK(red.pivot == 0);
    CHECK(red.kernel_vector[0] == one);
    CHECK(red.kernel_vector[1] == zero);
    REQUIRE(red.beta1.rows() == 1);
    CHECK(red.beta1.at(0, 0) == two);
    CHECK(red.gamma1.at(0, 0) == two);
    const camspec::BranchReport branch = camspec::branch_type(cartan_point({two}));
    CHECK(branch.type == BranchType::None);
    CHECK(branch.det_beta1 == two);
    CHECK(branch.det_gamma1 == two);
}

TEST_CASE("kernel reduction of the regular nilpotent") {
    const HiggsPoint nil = camspec::regular_nilpotent(1);
    const camspec::UppReduction red = camspec::upp_reduction(nil);
    CHECK(red.beta1.at(0, 0) == zero);
    CHECK(red.gamma1.at(0, 0) == one);
    const camspec::BranchReport branch = camspec::branch_type(nil);
    CHECK(branch.type == BranchType::Minus);
    CHECK(camspec::upp_branch_sign(red.beta1, red.gamma1) == -1);
}

TEST_CASE("reduction needs a line kernel inside the first block") {
    const HiggsPoint zero_field = camspec::make_higgs(1, Matrix(2, 1), Matrix(1, 2));
    CHECK_THROWS_AS(camspec::upp_reduction(zero_field), camspec::ReductionError);
}

TEST_CASE("branch classification at the reduced level") {
    camspec::SplitMix64 rng(7);
    const Matrix invertible = camspec::random_invertible(rng, 2);
    const Matrix corank_one = camspec::random_corank_one(rng, 2);
    CHECK(camspec::upp_branch_type(invertible, corank_one).type == BranchType::Plus);
    CHECK(camspec::upp_branch_sign(invertible, corank_one) == 1);
    CHECK(camspec::upp_branch_type(corank_one, invertible).type == BranchType::Minus);
    CHECK(camspec::upp_branch_sign(corank_one, invertible) == -1);
    CHECK_THROWS_AS(camspec::upp_branch_type(corank_one, corank_one),
                    camspec::GenericityError);
}

TEST_CASE("theta sign of eigenlines") {
    const HiggsPoint ss = cartan_point({two});
    const camspec::ThetaSignReport at_zero = camspec::theta_eigenline_sign(ss, zero);
    CHECK(at_zero.theta_stable);
    CHECK(at_zero.sign == 1);
    CHECK(!at_zero.used_reduction);
    CHECK(at_zero.eigen_multiplicity == 1);

    const camspec::ThetaSignReport moved = camspec::theta_eigenline_sign(ss, two);
    CHECK(!moved.theta_stable);
    CHECK(moved.sign == 0);

    const camspec::ThetaSignReport nil =
        camspec::theta_eigenline_sign(camspec::regular_nilpotent(1), zero);
    CHECK(nil.theta_stable);
    CHECK(nil.sign == -1);
    CHECK(nil.used_reduction);
    CHECK(nil.eigen_multiplicity == 3);

    CHECK_THROWS_AS(camspec::theta_eigenline_sign(ss, one), DomainError);
}

TEST_CASE("chevalley jacobian has one row per invariant") {
    const camspec::Matrix jac = camspec::chevalley_jacobian(cartan_point({one, two}));
    CHECK(jac.rows() == 2);
    CHECK(jac.cols() == 12); // dim of the anti-fixed subspace at p = 2
    CHECK(camspec::rank(jac) == 2);
}
