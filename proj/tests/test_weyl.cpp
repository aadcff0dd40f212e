#include <doctest.h>

#include <algorithm>

#include "camspec/error.hpp"
#include "camspec/weyl.hpp"

using camspec::CapacityError;
using camspec::Permutation;
using camspec::SignedPermutation;

TEST_CASE("permutation basics") {
    const Permutation id(3);
    CHECK(id.is_identity());
    const Permutation s = Permutation::transposition(3, 1, 2);
    CHECK(s(1) == 2);
    CHECK(s(2) == 1);
    CHECK(s(3) == 3);
    CHECK(s.compose(s).is_identity());
    CHECK(s.inverse() == s);

    const Permutation w = Permutation::from_images({3, 1, 2}); // w(1)=3, w(2)=1, w(3)=2
    CHECK(w.compose(w.inverse()).is_identity());
    // action on coordinates: (w . v)_i = v_{w^{-1}(i)}
    using camspec::GaussianRational;
    const std::vector<GaussianRational> v = {GaussianRational(10), GaussianRational(20),
                                             GaussianRational(30)};
    const std::vector<GaussianRational> moved = w.act(v);
    CHECK(moved[2] == GaussianRational(10)); // slot 3 receives v_1
    CHECK(moved[0] == GaussianRational(20));
    CHECK(moved[1] == GaussianRational(30));
}

TEST_CASE("inversion sets") {
    CHECK(camspec::inversion_set(Permutation(3)).empty());
    const auto inv = camspec::inversion_set(Permutation::transposition(3, 1, 2));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].i == 1);
    CHECK(inv[0].j == 2);
    // longest element of S_3 has all 3 inversions
    CHECK(camspec::inversion_set(Permutation::from_images({3, 2, 1})).size() == 3);
}

TEST_CASE("cocycle identity holds on all pairs in degree 3") {
    const auto group = camspec::symmetric_group(3);
    REQUIRE(group.size() == 6);
    int pairs = 0;
    for (const auto& w : group)
        for (const auto& w2 : group) {
            CHECK(camspec::cocycle_check(w, w2));
            ++pairs;
        }
    CHECK(pairs == 36);
    CHECK_THROWS_AS(camspec::symmetric_group(8), CapacityError);
}

TEST_CASE("exchange element") {
    CHECK(camspec::w0(1).images() == std::vector<int>{3, 2, 1});
    CHECK(camspec::w0(2).images() == std::vector<int>{4, 5, 3, 1, 2});
    for (int p = 1; p <= 3; ++p) {
        CHECK(camspec::w0(p).compose(camspec::w0(p)).is_identity());
        CHECK(camspec::w0_acts_as_theta(p));
    }
}

TEST_CASE("signed permutations compose like the hyperoctahedral group") {
    const auto group1 = camspec::hyperoctahedral_group(1);
    CHECK(group1.size() == 2);
    const auto group2 = camspec::hyperoctahedral_group(2);
    CHECK(group2.size() == 8);
    for (const auto& a : group2)
        for (const auto& b : group2) {
            // action is a homomorphism: (ab) . v = a . (b . v)
            const std::vector<camspec::GaussianRational> v = {camspec::GaussianRational(5),
                                                              camspec::GaussianRational(7)};
            CHECK(a.compose(b).act(v) == a.act(b.act(v)));
        }
    CHECK_THROWS_AS(camspec::hyperoctahedral_group(4), CapacityError);
}

TEST_CASE("restricted Weyl group orders by brute force") {
    const long long expected_orders[] = {2, 8, 48};
    const long long expected_cosets[] = {3, 15, 105};
    for (int p = 1; p <= 3; ++p) {
        const camspec::RestrictedWeyl rw = camspec::restricted_weyl_bruteforce(p);
        CHECK(rw.centralizer_order == 1);
        CHECK(rw.normalizer_order == expected_orders[p - 1]);
        CHECK(rw.order == expected_orders[p - 1]);
        CHECK(rw.coset_count == expected_cosets[p - 1]);
        CHECK(rw.matches_hyperoctahedral);
        CHECK(static_cast<long long>(rw.normalizer.size()) == rw.normalizer_order);
    }
}

TEST_CASE("stabilizer of the first weight") {
    for (int p = 1; p <= 3; ++p) CHECK(camspec::weight_stabilizer_check(p));
}
