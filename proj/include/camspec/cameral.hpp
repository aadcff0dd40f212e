#pragma once

#include <string>
#include <vector>

#include "camspec/hitchin.hpp"
#include "camspec/rational.hpp"

namespace camspec {

// A point of the full flag (cameral) fiber: an ordering of the eigenvalues.
using CameralPoint = std::vector<GaussianRational>;

// Lexicographic comparison of cameral points by structural scalar order.
bool point_less(const CameralPoint& a, const CameralPoint& b);

struct CameralFiber {
    int p = 0;
    BaseFiberPoint base;
    std::vector<CameralPoint> points; // all distinct orderings, lexicographic
    bool regular = false;             // all eigenvalues distinct
};

// Enumerates every distinct ordering of the root multiset, validating the
// roots against the base point first (DomainError) and checking on every
// ordering that the elementary symmetric values reproduce the base
// (PropertyError).  CapacityError for p > 3.
CameralFiber cameral_fiber(const BaseFiberPoint& base, const std::vector<GaussianRational>& roots);

// Orderings compatible with the real structure:
// v_{p+1} = 0 and v_{p+1+i} = -v_i.
std::vector<CameralPoint> real_subcover(const CameralFiber& fiber);

// 2^p p!, the size of the real subcover over a regular base point.
long long real_subcover_size(int p);

// Decomposition of a regular fiber into translates of the real subcover by
// cosets of the normalizer of the anisotropic Cartan.  The translates are
// asserted to partition the fiber (PropertyError on failure).
struct ComponentTranslates {
    int p = 0;
    int block_count = 0;                  // (2p+1)! / (2^p p!)
    std::vector<int> block_sizes;         // each 2^p p!
    std::vector<CameralPoint> representatives;
    bool partitions = false;
};
ComponentTranslates component_translates(const CameralFiber& fiber);

// Orbit of the subgroup fixing the first coordinate slot.
struct WeightOrbit {
    GaussianRational lambda1;
    std::vector<CameralPoint> points;
};
std::vector<WeightOrbit> w_delta1_orbits(const CameralFiber& fiber);

// Distinct first coordinates across the fiber, sorted: the image of the
// quotient to the spectral fiber.
std::vector<GaussianRational> quotient_to_spectral(const CameralFiber& fiber);

// Behavior of the negation and exchange involutions on the fiber.
// The first four fields are asserted; the rest record observations.
struct DescentReport {
    int p = 0;
    bool negation_preserves_fiber = false;      // asserted
    bool negation_descends_to_spectral = false; // asserted: lambda1 -> -lambda1
    bool theta_equals_negation_on_real = false; // asserted
    bool minus_theta_fixes_real = false;        // asserted
    bool minus_theta_preserves_fiber = false;
    bool minus_theta_preserves_quotient_orbits = false;
    bool negate_then_exchange_lands_in_real = false; // literal claim, one order
    bool exchange_then_negate_lands_in_real = false; // literal claim, other order
    bool weight_composition_identity = false;   // (s1 . v)_1 = v_2 on samples
    std::string orbit_split_witness;            // concrete example when orbits split
};
DescentReport descent_involution_report(const CameralFiber& fiber);

// The rank-one diagonal family diag(l+l', -2l, l-l') and its loci.
struct Su21Locus {
    std::string condition;                 // defining substitution
    std::vector<GaussianRational> point;   // family point on the locus
    GaussianRational sigma2, sigma3;
    bool odd_coefficient_vanishes = false;
    bool in_real_subcover = false;
    std::vector<int> involution_images;    // cover involution in S_3
    std::string involution_cycle;
    bool involution_verified = false;      // asserted: w . point = -point
    std::string displayed_equation;        // the claimed base relation
    bool displayed_equation_matches = false;
};

struct Su21Report {
    GaussianRational l, lp;
    std::vector<GaussianRational> point;   // (l+l', -2l, l-l')
    GaussianRational sigma2, sigma3;       // exact elementary symmetric values
    GaussianRational displayed_sigma2, displayed_sigma3; // the claimed map
    bool displayed_map_matches = false;    // observation, generally false
    bool factorization_verified = false;   // asserted: sigma3 = -2l(l-l')(l+l')
    bool lprime_zero_locus_is_real = false; // observation: sigma3 = 0 on {l' = 0}
    bool degenerate = false;               // l = l' = 0
    std::vector<Su21Locus> loci;           // the three loci of sigma3 = 0
};
Su21Report su21_example(const GaussianRational& l, const GaussianRational& lp);

} // namespace camspec
