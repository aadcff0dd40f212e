#include "camspec/degrees.hpp"

#include <cstdlib>

#include "camspec/error.hpp"

namespace camspec {

namespace {

void validate(int p, int g) {
    if (p < 1) throw DomainError("rank must be at least 1");
    if (g < 2) throw DomainError("genus must be at least 2");
}

} // namespace

long long milnor_wood_bound(int p, int g) {
    validate(p, g);
    return static_cast<long long>(p) * (g - 1);
}

long long deg_w_from_f_minus(int p, int g, long long deg_f_minus) {
    validate(p, g);
    return deg_f_minus - 2LL * p * (p - 1) * (g - 1);
}

long long deg_w_from_f_plus(int p, int g, long long deg_f_plus) {
    validate(p, g);
    return deg_f_plus - (2LL * p * p - 2 * p + 1) * (g - 1);
}

StableRange stable_range(int p, int g) {
    validate(p, g);
    StableRange range;
    range.lower = (2LL * p * p - 3 * p) * (g - 1);
    range.upper = (2LL * p * p - 1 * p) * (g - 1);
    const long long bound = milnor_wood_bound(p, g);
    for (long long d = range.lower - 2; d <= range.upper + 2; ++d) {
        const bool inside = range.lower < d && d < range.upper;
        const bool small_w = std::llabs(deg_w_from_f_minus(p, g, d)) < bound;
        if (inside != small_w)
            throw PropertyError("stable window disagreed with the degree bound");
    }
    range.equivalence_verified = true;
    return range;
}

long long component_count(int p, int g) {
    validate(p, g);
    return 2LL * p * (g - 1) - 1;
}

DimensionReport dimension_report(int p, int g) {
    validate(p, g);
    DimensionReport rep;
    rep.p = p;
    rep.g = g;
    rep.dim_first = static_cast<long long>(p) * (2 * p + 1) * (g - 1);
    rep.dim_second = static_cast<long long>(p) * (2 * p + 3) * (g - 1);
    rep.dim_total = rep.dim_first + rep.dim_second;
    rep.expected_total = 4LL * p * (p + 1) * (g - 1);
    rep.identity_holds = rep.dim_total == rep.expected_total;
    if (!rep.identity_holds) throw PropertyError("dimension identity failed");
    return rep;
}

long long torsor_rank(int p, int g) {
    validate(p, g);
    return 4LL * p * (g - 1);
}

NormDegrees norm_degrees(int p, int g, long long deg_f1) {
    validate(p, g);
    NormDegrees nd;
    nd.deg_l0 = -deg_f1 - static_cast<long long>(p) * (2 * p + 1) * (2 * g - 2);
    nd.nm_quotient_degree = -static_cast<long long>(p) * (p - 1) * (2 * g - 2);
    return nd;
}

long long e0_degree(int p, int g, long long deg_w, long long deg_b_gamma) {
    validate(p, g);
    return 2 * deg_w - 2LL * p * (g - 1) - deg_b_gamma;
}

DegreeLedger build_degree_ledger(int p, int g, std::optional<long long> deg_f_minus,
                                 std::optional<long long> deg_f_plus) {
    validate(p, g);
    DegreeLedger ledger;
    auto& e = ledger.entries;
    e["p"] = p;
    e["g"] = g;
    e["milnor_wood_bound"] = milnor_wood_bound(p, g);
    e["component_count"] = component_count(p, g);
    const DimensionReport dims = dimension_report(p, g);
    e["dim_first"] = dims.dim_first;
    e["dim_second"] = dims.dim_second;
    e["dim_total"] = dims.dim_total;
    e["dim_identity_holds"] = dims.identity_holds ? 1 : 0;
    e["torsor_rank"] = torsor_rank(p, g);
    const StableRange range = stable_range(p, g);
    e["stable_lower"] = range.lower;
    e["stable_upper"] = range.upper;
    if (deg_f_minus) {
        e["deg_f_minus"] = *deg_f_minus;
        const long long w = deg_w_from_f_minus(p, g, *deg_f_minus);
        e["deg_w_from_f_minus"] = w;
        e["in_stable_range"] = (range.lower < *deg_f_minus && *deg_f_minus < range.upper) ? 1 : 0;
        e["within_degree_bound"] = (std::llabs(w) < milnor_wood_bound(p, g)) ? 1 : 0;
    }
    if (deg_f_plus) {
        e["deg_f_plus"] = *deg_f_plus;
        e["deg_w_from_f_plus"] = deg_w_from_f_plus(p, g, *deg_f_plus);
    }
    if (deg_f_minus && deg_f_plus) {
        e["flag_degrees_agree"] =
            (deg_w_from_f_minus(p, g, *deg_f_minus) == deg_w_from_f_plus(p, g, *deg_f_plus)) ? 1 : 0;
        e["flag_step_gap"] = *deg_f_plus - *deg_f_minus;
        e["flag_step_gap_expected"] = g - 1;
        e["flag_step_gap_matches"] = (*deg_f_plus - *deg_f_minus == g - 1) ? 1 : 0;
    }
    return ledger;
}

} // namespace camspec
