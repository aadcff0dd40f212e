#include <doctest.h>

#include "camspec/degrees.hpp"
#include "camspec/error.hpp"

using camspec::DomainError;

TEST_CASE("dimension spot values") {
    const auto r12 = camspec::dimension_report(1, 2);
    CHECK(r12.dim_first == 3);
    CHECK(r12.dim_second == 5);
    CHECK(r12.dim_total == 8);
    CHECK(r12.identity_holds);

    const auto r22 = camspec::dimension_report(2, 2);
    CHECK(r22.dim_first == 10);
    CHECK(r22.dim_second == 14);
    CHECK(r22.dim_total == 24);

    const auto r33 = camspec::dimension_report(3, 3);
    CHECK(r33.dim_first == 42);
    CHECK(r33.dim_second == 54);
    CHECK(r33.dim_total == 96);

    for (int p = 1; p <= 8; ++p)
        for (int g = 2; g <= 12; ++g)
            CHECK(camspec::dimension_report(p, g).identity_holds);
}

TEST_CASE("degree dictionary and stable window") {
    CHECK(camspec::milnor_wood_bound(2, 2) == 2);
    CHECK(camspec::deg_w_from_f_minus(2, 2, 4) == 0);
    CHECK(camspec::deg_w_from_f_minus(2, 2, 3) == -1);
    CHECK(camspec::deg_w_from_f_minus(2, 2, 5) == 1);
    CHECK(camspec::deg_w_from_f_plus(2, 2, 5) == 0); // shift (2p^2-2p+1)(g-1) = 5

    const auto range = camspec::stable_range(2, 2);
    CHECK(range.lower == 2);
    CHECK(range.upper == 6);
    CHECK(range.equivalence_verified);
    // integers strictly inside: 3, 4, 5
    int inside = 0;
    for (long long d = range.lower; d <= range.upper; ++d)
        if (range.lower < d && d < range.upper) ++inside;
    CHECK(inside == 3);

    const auto narrow = camspec::stable_range(1, 2);
    CHECK(narrow.lower == -1);
    CHECK(narrow.upper == 1);
    CHECK(narrow.equivalence_verified);
}

TEST_CASE("component counts and torsor ranks") {
    CHECK(camspec::component_count(2, 2) == 3);
    CHECK(camspec::component_count(1, 2) == 1);
    CHECK(camspec::component_count(1, 3) == 3);
    CHECK(camspec::torsor_rank(1, 2) == 4);
    CHECK(camspec::torsor_rank(2, 2) == 8);
    CHECK(camspec::torsor_rank(2, 3) == 16);
    for (int p = 1; p <= 5; ++p)
        for (int g = 2; g <= 10; ++g) {
            CHECK(camspec::component_count(p, g) == 2LL * p * (g - 1) - 1);
            CHECK(camspec::torsor_rank(p, g) == 4LL * p * (g - 1));
        }
}

TEST_CASE("norm and subbundle degrees") {
    const auto nd = camspec::norm_degrees(1, 2, 0);
    CHECK(nd.deg_l0 == -6);
    CHECK(nd.nm_quotient_degree == 0);
    CHECK(camspec::norm_degrees(2, 2, 0).nm_quotient_degree == -4);
    CHECK(camspec::norm_degrees(2, 2, -20).deg_l0 == 0); // -p(2p+1)(2g-2) = -20
    CHECK(camspec::e0_degree(2, 2, 1, 1) == -3);
    CHECK(camspec::e0_degree(1, 2, 0, 2) == -4);
    CHECK(camspec::e0_degree(2, 2, 2, 0) == 0); // extremal deg W = p(g-1)
}

TEST_CASE("degree ledger entries") {
    const auto ledger = camspec::build_degree_ledger(2, 2, 4, 5);
    CHECK(ledger.entries.at("p") == 2);
    CHECK(ledger.entries.at("g") == 2);
    CHECK(ledger.entries.at("milnor_wood_bound") == 2);
    CHECK(ledger.entries.at("component_count") == 3);
    CHECK(ledger.entries.at("torsor_rank") == 8);
    CHECK(ledger.entries.at("dim_total") == 24);
    CHECK(ledger.entries.at("dim_identity_holds") == 1);
    CHECK(ledger.entries.at("deg_f_minus") == 4);
    CHECK(ledger.entries.at("deg_w_from_f_minus") == 0);
    CHECK(ledger.entries.at("in_stable_range") == 1);
    CHECK(ledger.entries.at("within_degree_bound") == 1);
    CHECK(ledger.entries.at("deg_f_plus") == 5);
    CHECK(ledger.entries.at("deg_w_from_f_plus") == 0);
    CHECK(ledger.entries.at("flag_degrees_agree") == 1);
    CHECK(ledger.entries.at("flag_step_gap") == 1);
    CHECK(ledger.entries.at("flag_step_gap_expected") == 1);
    CHECK(ledger.entries.at("flag_step_gap_matches") == 1);

    const auto bare = camspec::build_degree_ledger(1, 2, std::nullopt, std::nullopt);
    CHECK(bare.entries.at("dim_total") == 8);
    CHECK(bare.entries.count("deg_f_minus") == 0);

    CHECK_THROWS_AS(camspec::build_degree_ledger(2, 1, std::nullopt, std::nullopt), DomainError);
    CHECK_THROWS_AS(camspec::dimension_report(0, 2), DomainError);
}
