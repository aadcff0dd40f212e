#include <doctest.h>

#include "camspec/error.hpp"
#include "camspec/lie.hpp"
#include "camspec/linalg.hpp"
#include "camspec/matrix.hpp"
#include "camspec/poly.hpp"

using camspec::DomainError;
using camspec::GaussianRational;
using camspec::HiggsPoint;
using camspec::Matrix;
using camspec::Poly;

namespace {
const GaussianRational zero(0), one(1), two(2);
}

TEST_CASE("block involution fixes block-diagonal and negates anti-diagonal matrices") {
    const int p = 1;
    Matrix block_diag(3, 3);
    block_diag.at(0, 1) = two;
    block_diag.at(1, 0) = one;
    block_diag.at(2, 2) = GaussianRational(5);
    CHECK(camspec::theta_prime(p, block_diag) == block_diag);

    Matrix anti(3, 3);
    anti.at(0, 2) = two;
    anti.at(2, 1) = GaussianRational(-3);
    CHECK(camspec::theta_prime(p, anti) == -anti);
    CHECK(camspec::in_m_space(p, anti));
    CHECK(!camspec::in_m_space(p, block_diag));
    CHECK(!camspec::in_h_space(p, block_diag)); // fixed by the involution but not trace-free
    CHECK(camspec::in_h_space(p, block_diag - GaussianRational(5, 3) * Matrix::identity(3)));
}

TEST_CASE("higgs points assemble into the anti-diagonal block form") {
    Matrix beta(2, 1);
    beta.at(1, 0) = two;
    Matrix gamma(1, 2);
    gamma.at(0, 1) = two;
    const HiggsPoint hp = camspec::make_higgs(1, beta, gamma);
    const Matrix phi = camspec::assemble(hp);
    CHECK(camspec::in_m_space(1, phi));
    CHECK(phi.at(1, 2) == two);
    CHECK(phi.at(2, 1) == two);
    const HiggsPoint back = camspec::split_higgs(1, phi);
    CHECK(back.beta == beta);
    CHECK(back.gamma == gamma);
    CHECK_THROWS_AS(camspec::make_higgs(1, gamma, gamma), DomainError);
    CHECK_THROWS_AS(camspec::make_higgs(2, beta, gamma), DomainError);
}

TEST_CASE("anisotropic Cartan elements have the expected spectra") {
    const Matrix m1 = camspec::cartan_m_element({two});
    CHECK(camspec::char_poly(m1) ==
          Poly({zero, GaussianRational(-4), zero, one})); // x^3 - 4x
    const Matrix m2 = camspec::cartan_m_element({one, two});
    CHECK(camspec::char_poly(m2) ==
          Poly({zero, GaussianRational(4), zero, GaussianRational(-5), zero, one}));
    CHECK(camspec::in_m_space(1, m1));
    CHECK(camspec::in_m_space(2, m2));
}

TEST_CASE("the involution on the theta-Cartan negates the anisotropic coordinates") {
    const std::vector<GaussianRational> a = {one, two};
    const std::vector<GaussianRational> t = {GaussianRational(1, 3), GaussianRational(-2)};
    const Matrix d = camspec::theta_cartan_element(a, t);
    CHECK(d.trace() == zero);
    const std::vector<GaussianRational> negated_a = {-one, -two};
    CHECK(camspec::theta(2, d) == camspec::theta_cartan_element(negated_a, t));
}

TEST_CASE("centralizer dimensions detect regularity") {
    const Matrix regular = camspec::cartan_m_element({two});
    CHECK(camspec::centralizer_dim_m(1, regular) == 1);
    CHECK(camspec::is_regular(1, regular));

    const Matrix zero_field(3, 3);
    CHECK(camspec::centralizer_dim_m(1, zero_field) == 4); // all of m
    CHECK(!camspec::is_regular(1, zero_field));

    const Matrix regular2 = camspec::cartan_m_element({one, two});
    CHECK(camspec::centralizer_dim_m(2, regular2) == 2);
    CHECK(camspec::is_regular(2, regular2));

    const Matrix degenerate = camspec::cartan_m_element({one, one});
    CHECK(camspec::centralizer_dim_m(2, degenerate) > 2);
    CHECK(!camspec::is_regular(2, degenerate));
}

TEST_CASE("regularity is invariant under block conjugation") {
    const Matrix m = camspec::cartan_m_element({two});
    Matrix a = Matrix::identity(2);
    a.at(0, 1) = GaussianRational(3);
    Matrix b = Matrix::identity(1);
    const Matrix conjugated = camspec::conjugate_blockwise(m, a, b);
    CHECK(camspec::in_m_space(1, conjugated));
    CHECK(camspec::is_regular(1, conjugated));
    CHECK(camspec::char_poly(conjugated) == camspec::char_poly(m));
}

TEST_CASE("centralizer profile in the fixed subalgebra is abelian of dimension p") {
    for (int p = 1; p <= 3; ++p) {
        const camspec::CentralizerHProfile profile = camspec::centralizer_h_profile(p);
        CHECK(profile.dim == p);
        CHECK(profile.abelian);
    }
}

TEST_CASE("basis dimensions") {
    CHECK(camspec::m_basis(1).size() == 4);  // 2p(p+1) at p=1
    CHECK(camspec::m_basis(2).size() == 12);
    CHECK(camspec::h_basis(1).size() == 4);  // dim s(gl(2) + gl(1)) = 4+1-1
    CHECK(camspec::sl_basis(3).size() == 8); // dim sl(3), the ambient algebra at p = 1
    for (const auto& e : camspec::m_basis(2)) CHECK(camspec::in_m_space(2, e));
    for (const auto& e : camspec::h_basis(2)) CHECK(camspec::in_h_space(2, e));
}
