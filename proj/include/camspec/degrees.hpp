#pragma once

#include <map>
#include <optional>
#include <string>

namespace camspec {

// All functions take the block rank p >= 1 and the curve genus g >= 2 and
// work in exact integer arithmetic (DomainError on invalid input).

// Bound on |deg W|: p(g-1).
long long milnor_wood_bound(int p, int g);

// deg W recovered from the degree of the lower flag step:
// deg W = deg F_minus - 2p(p-1)(g-1).
long long deg_w_from_f_minus(int p, int g, long long deg_f_minus);
// deg W recovered from the upper flag step:
// deg W = deg F_plus - (2p^2-2p+1)(g-1).
long long deg_w_from_f_plus(int p, int g, long long deg_f_plus);

// Open window (lower, upper) for deg F_minus on the positive branch:
// lower = (2p^2-3p)(g-1), upper = (2p^2-p)(g-1).  Membership is verified to
// be equivalent to |deg W| < p(g-1) across the window and its boundary.
struct StableRange {
    long long lower = 0;
    long long upper = 0;
    bool equivalence_verified = false;
};
StableRange stable_range(int p, int g);

// Number of connected components carved out by the degree invariant:
// 2p(g-1) - 1.
long long component_count(int p, int g);

// The two summand dimensions and their total, with the closed form
// 4p(p+1)(g-1) verified.
struct DimensionReport {
    int p = 0;
    int g = 0;
    long long dim_first = 0;   // p(2p+1)(g-1)
    long long dim_second = 0;  // p(2p+3)(g-1)
    long long dim_total = 0;
    long long expected_total = 0; // 4p(p+1)(g-1)
    bool identity_holds = false;
};
DimensionReport dimension_report(int p, int g);

// Rank of the abelian torsor acting on a fiber: 4p(g-1).
long long torsor_rank(int p, int g);

// Degrees attached to the norm construction for a line bundle of degree
// deg_f1 on the main spectral component.
struct NormDegrees {
    long long deg_l0 = 0;              // -deg_f1 - p(2p+1)(2g-2)
    long long nm_quotient_degree = 0;  // -p(p-1)(2g-2)
};
NormDegrees norm_degrees(int p, int g, long long deg_f1);

// deg E0 = 2 deg W - 2p(g-1) - deg B_gamma.
long long e0_degree(int p, int g, long long deg_w, long long deg_b_gamma);

// Flat integer ledger of every derived quantity for one (p, g) and optional
// flag-step degrees.
struct DegreeLedger {
    std::map<std::string, long long> entries;
};
DegreeLedger build_degree_ledger(int p, int g, std::optional<long long> deg_f_minus,
                                 std::optional<long long> deg_f_plus);

} // namespace camspec
