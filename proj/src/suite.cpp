#include "camspec/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "camspec/cameral.hpp"
#include "camspec/degrees.hpp"
#include "camspec/error.hpp"
#include "camspec/hitchin.hpp"
#include "camspec/lie.hpp"
#include "camspec/linalg.hpp"
#include "camspec/rng.hpp"
#include "camspec/weyl.hpp"

namespace camspec {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<GaussianRational> roots_from_values(const std::vector<GaussianRational>& x) {
    std::vector<GaussianRational> roots;
    for (const auto& v : x) roots.push_back(v);
    roots.push_back(GaussianRational(0));
    for (const auto& v : x) roots.push_back(-v);
    return roots;
}

BaseFiberPoint base_from_roots(int p, const std::vector<GaussianRational>& roots) {
    const Poly chi = Poly::from_roots(roots);
    BaseFiberPoint b;
    b.p = p;
    for (int i = 1; i <= p; ++i) b.omega.push_back(chi.coeff(2 * (p - i) + 1));
    if (base_char_poly(b) != chi)
        throw PropertyError("the root multiset did not produce an odd characteristic polynomial");
    return b;
}

void require(bool condition, const char* message) {
    if (!condition) throw PropertyError(message);
}

std::string point_text(const std::vector<GaussianRational>& v) {
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

SuiteResult run_property_suite(const SuiteOptions& opts) {
    if (opts.p_max < 1 || opts.p_max > 3) throw DomainError("p_max must be between 1 and 3");
    if (opts.trials < 0) throw DomainError("trials must be nonnegative");

    SuiteResult result;
    std::ostringstream out;
    out << "property suite: seed=" << opts.seed << " trials=" << opts.trials
        << " p_max=" << opts.p_max << "\n";
    if (opts.trials == 0) {
        out << "no trials requested; vacuously passing\n";
        out << "summary: 0 of 0 checks passed\n";
        result.text = out.str();
        return result;
    }

    SplitMix64 rng(opts.seed);
    std::ostringstream appendix;
    const auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        try {
            const std::string detail = body();
            ++result.passed;
            out << "[ok] " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        } catch (const std::exception& e) {
            ++result.failed;
            out << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    };
    const int trials = opts.trials;
    const int p_max = opts.p_max;

    check("scalar field axioms", [&] {
        for (int t = 0; t < trials; ++t) {
            const GaussianRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
            require((a + b) * c == a * c + b * c, "distributivity failed");
            require((a * b) * c == a * (b * c), "associativity failed");
            require(a.conj() * b.conj() == (a * b).conj(), "conjugation is not multiplicative");
            require((a * b).norm() == a.norm() * b.norm(), "norm is not multiplicative");
            if (!a.is_zero()) require(a * a.inverse() == GaussianRational(1), "inverse failed");
        }
        return std::to_string(trials) + " trials";
    });

    check("polynomial roots and products", [&] {
        for (int t = 0; t < trials; ++t) {
            std::vector<GaussianRational> roots;
            const int n = static_cast<int>(rng.below(4)) + 1;
            for (int k = 0; k < n; ++k) roots.push_back(random_scalar(rng, 3, 2));
            const Poly f = Poly::from_roots(roots);
            for (const auto& r : roots) require(f.eval(r).is_zero(), "a root did not evaluate to zero");
            std::vector<GaussianRational> more = roots;
            more.push_back(random_scalar(rng, 3, 2));
            require(Poly::from_roots(more) == f * Poly::from_roots({more.back()}),
                    "root products did not multiply");
        }
        return std::to_string(trials) + " trials";
    });

    check("determinants, characteristic polynomials, Cayley-Hamilton", [&] {
        for (int t = 0; t < trials; ++t) {
            const int n = static_cast<int>(rng.below(3)) + 2;
            const Matrix a = random_matrix(rng, n, n, 3, 2);
            const Matrix b = random_matrix(rng, n, n, 3, 2);
            require(det(a * b) == det(a) * det(b), "determinant is not multiplicative");
            const Poly chi = char_poly(a);
            require(poly_eval_matrix(chi, a).is_zero(), "Cayley-Hamilton failed");
            GaussianRational sign(n % 2 == 0 ? 1 : -1);
            require(chi.coeff(0) == sign * det(a), "constant term disagreed with the determinant");
            const Matrix g = random_unit_triangular(rng, n);
            require(char_poly(conjugate(g, a)) == chi, "characteristic polynomial moved under conjugation");
        }
        return std::to_string(trials) + " trials";
    });

    check("kernel vectors annihilate and ranks agree with transposes", [&] {
        for (int t = 0; t < trials; ++t) {
            const int rows = static_cast<int>(rng.below(3)) + 2;
            const int cols = static_cast<int>(rng.below(3)) + 2;
            Matrix m = random_matrix(rng, rows, cols, 2, 2);
            if (rng.below(2) == 0) {
                // plant a dependency: last column = sum of the others
                for (int r = 0; r < rows; ++r) {
                    GaussianRational s(0);
                    for (int c = 0; c + 1 < cols; ++c) s += m.at(r, c);
                    m.at(r, cols - 1) = s;
                }
            }
            for (const auto& v : kernel_basis(m)) {
                const std::vector<GaussianRational> image = m * v;
                for (const auto& entry : image) require(entry.is_zero(), "kernel vector not annihilated");
            }
            require(rank(m) == rank(m.transpose()), "row and column ranks disagreed");
        }
        return std::to_string(trials) + " trials";
    });

    check("involution splits the trace-free matrices", [&] {
        const GaussianRational half(1, 2);
        for (int t = 0; t < trials; ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            const int n = 2 * p + 1;
            Matrix x = random_matrix(rng, n, n, 2, 2);
            const GaussianRational tr = x.trace();
            for (int k = 0; k < n; ++k) x.at(k, k) -= tr / GaussianRational(n);
            const Matrix h = half * (x + theta_prime(p, x));
            const Matrix m = half * (x - theta_prime(p, x));
            require(h + m == x, "involution split did not recompose");
            require(in_h_space(p, h), "fixed part left the block-diagonal subspace");
            require(in_m_space(p, m), "anti-fixed part left the anti-diagonal subspace");
            const Matrix m2 = assemble(random_higgs(rng, p));
            require(in_h_space(p, commutator(m, m2)), "[m, m] left the fixed subspace");
            require(in_m_space(p, commutator(h, m2)), "[h, m] left the anti-fixed subspace");
        }
        return std::to_string(trials) + " trials";
    });

    check("exchange element realizes the involution on the Cartan", [&] {
        for (int p = 1; p <= p_max; ++p)
            require(w0_acts_as_theta(p), "conjugation and the coordinate action disagreed");
        return "p = 1.." + std::to_string(p_max);
    });

    check("inversion-set cocycle identity on random pairs", [&] {
        const int n = 2 * p_max + 1;
        for (int t = 0; t < trials; ++t) {
            const Permutation w = Permutation::from_images(random_permutation_images(rng, n));
            const Permutation w2 = Permutation::from_images(random_permutation_images(rng, n));
            require(cocycle_check(w, w2), "cocycle identity failed");
        }
        return std::to_string(trials) + " pairs in degree " + std::to_string(n);
    });

    check("restricted Weyl group orders and coset counts", [&] {
        std::ostringstream detail;
        for (int p = 1; p <= p_max; ++p) {
            const RestrictedWeyl rw = restricted_weyl_bruteforce(p);
            const long long expected = (1LL << p) * factorial(p);
            require(rw.centralizer_order == 1, "centralizer of the anisotropic Cartan was not trivial");
            require(rw.order == expected, "restricted Weyl order was wrong");
            require(rw.matches_hyperoctahedral, "induced action was not the full signed-permutation group");
            require(rw.coset_count == factorial(2 * p + 1) / expected, "coset count was wrong");
            if (p > 1) detail << ", ";
            detail << "p=" << p << ": order " << rw.order << ", cosets " << rw.coset_count;
        }
        return detail.str();
    });

    check("stabilizer of the first weight", [&] {
        for (int p = 1; p <= p_max; ++p)
            require(weight_stabilizer_check(p), "weight stabilizer was not {w : w(1) = 1}");
        return "p = 1.." + std::to_string(p_max);
    });

    check("quasi-split centralizer profile", [&] {
        for (int p = 1; p <= p_max; ++p) {
            const CentralizerHProfile profile = centralizer_h_profile(p);
            require(profile.dim == p, "centralizer dimension in the fixed subalgebra was not p");
            require(profile.abelian, "centralizer was not abelian");
        }
        return "p = 1.." + std::to_string(p_max);
    });

    check("odd characteristic coefficients vanish (dual route)", [&] {
        for (int t = 0; t < trials; ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            char_coefficients(random_higgs(rng, p)); // asserts internally
        }
        return std::to_string(trials) + " random fields";
    });

    check("signed exterior-trace identity for even coefficients", [&] {
        for (int t = 0; t < std::min(trials, 40); ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            verify_even_trace_formula(random_higgs(rng, p)); // asserts the signed identity
        }
        return std::to_string(std::min(trials, 40)) + " random fields";
    });

    check("regularity: centralizer dimension vs differential rank", [&] {
        int tested = 0;
        for (int t = 0; t < trials; ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            HiggsPoint hp = random_higgs(rng, p);
            switch (rng.below(5)) {
                case 0: hp = random_regular_semisimple(rng, p); break;
                case 1: hp = random_degenerate_semisimple(rng, p); break;
                case 2: hp = regular_nilpotent(p); break;
                case 3: hp = make_higgs(p, Matrix(p + 1, p), Matrix(p, p + 1)); break;
                default: break;
            }
            const bool by_centralizer = is_regular(p, assemble(hp));
            const bool by_rank = chevalley_rank(hp) == p;
            require(by_centralizer == by_rank, "the two regularity criteria disagreed");
            ++tested;
        }
        return std::to_string(tested) + " mixed elements";
    });

    check("eigenline exactness on regular semisimple points", [&] {
        for (int t = 0; t < std::min(trials, 30); ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            const std::vector<GaussianRational> x = random_anisotropic_values(rng, p);
            Matrix m = cartan_m_element(x);
            m = conjugate_blockwise(m, random_unit_triangular(rng, p + 1), random_unit_triangular(rng, p));
            std::vector<GaussianRational> eigenvalues = {GaussianRational(0)};
            for (const auto& v : x) {
                eigenvalues.push_back(v);
                eigenvalues.push_back(-v);
            }
            for (const auto& lambda : eigenvalues) {
                const std::vector<GaussianRational> v = eigenline(m, lambda);
                const std::vector<GaussianRational> image = m * v;
                for (std::size_t k = 0; k < v.size(); ++k)
                    require(image[k] == lambda * v[k], "eigenline vector was not exact");
            }
        }
        return std::to_string(std::min(trials, 30)) + " points, all eigenvalues";
    });

    check("block sign of kernel lines at constructed degenerations", [&] {
        for (int t = 0; t < std::min(trials, 30); ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            const Matrix invertible = random_invertible(rng, p);
            const Matrix corank_one = random_corank_one(rng, p);
            require(upp_branch_sign(invertible, corank_one) == 1, "singular gamma1 did not give +1");
            require(upp_branch_type(invertible, corank_one).type == BranchType::Plus,
                    "singular gamma1 was not classified as the plus branch");
            require(upp_branch_sign(corank_one, invertible) == -1, "singular beta1 did not give -1");
            require(upp_branch_type(corank_one, invertible).type == BranchType::Minus,
                    "singular beta1 was not classified as the minus branch");

            const ThetaSignReport nil = theta_eigenline_sign(regular_nilpotent(p), GaussianRational(0));
            require(nil.used_reduction && nil.sign == -1,
                    "full nilpotent did not reduce to a minus-branch kernel line");
            const HiggsPoint ss = random_regular_semisimple(rng, p);
            const ThetaSignReport at_zero = theta_eigenline_sign(ss, GaussianRational(0));
            require(!at_zero.used_reduction && at_zero.sign == 1,
                    "regular semisimple kernel line was not in the first block");
        }
        return std::to_string(std::min(trials, 30)) + " constructions";
    });

    check("reduction factors the characteristic polynomial", [&] {
        for (int t = 0; t < std::min(trials, 30); ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max))) + 1;
            const HiggsPoint ss = random_regular_semisimple(rng, p);
            const BranchReport ss_branch = branch_type(ss); // asserts the factorization
            require(ss_branch.type == BranchType::None,
                    "regular semisimple point was classified as a branch");
            const BranchReport nil_branch = branch_type(regular_nilpotent(p));
            require(nil_branch.type == BranchType::Minus, "regular nilpotent was not a minus branch");
        }
        return std::to_string(std::min(trials, 30)) + " reductions";
    });

    check("cameral fiber counts over regular base points", [&] {
        const int cam_trials = std::min(trials, 25);
        for (int t = 0; t < cam_trials; ++t) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(p_max, 2)))) + 1;
            const std::vector<GaussianRational> roots =
                roots_from_values(random_anisotropic_values(rng, p));
            const CameralFiber fiber = cameral_fiber(base_from_roots(p, roots), roots);
            require(fiber.regular, "constructed spectrum was not regular");
            require(static_cast<long long>(fiber.points.size()) == factorial(2 * p + 1),
                    "cameral fiber size was not (2p+1)!");
            require(static_cast<long long>(real_subcover(fiber).size()) == real_subcover_size(p),
                    "real subcover size was not 2^p p!");
            const auto orbits = w_delta1_orbits(fiber);
            require(static_cast<int>(orbits.size()) == 2 * p + 1, "wrong number of weight orbits");
            for (const auto& orbit : orbits)
                require(static_cast<long long>(orbit.points.size()) == factorial(2 * p),
                        "weight orbit size was not (2p)!");
            const auto quotient = quotient_to_spectral(fiber);
            require(quotient == sorted_multiset(roots), "quotient image was not the spectral multiset");
        }
        return std::to_string(cam_trials) + " regular spectra, p <= " + std::to_string(std::min(p_max, 2));
    });

    check("coset translates of the real subcover partition the fiber", [&] {
        std::ostringstream detail;
        for (int p = 1; p <= std::min(p_max, 2); ++p) {
            const std::vector<GaussianRational> roots =
                roots_from_values(random_anisotropic_values(rng, p));
            const CameralFiber fiber = cameral_fiber(base_from_roots(p, roots), roots);
            const ComponentTranslates ct = component_translates(fiber);
            require(ct.partitions, "translates did not partition the fiber");
            require(ct.block_count == factorial(2 * p + 1) / real_subcover_size(p),
                    "translate count was wrong");
            if (p > 1) detail << ", ";
            detail << "p=" << p << ": " << ct.block_count << " blocks";
        }
        return detail.str();
    });

    check("degree and dimension identities", [&] {
        for (int p = 1; p <= 5; ++p) {
            for (int g = 2; g <= 6; ++g) {
                dimension_report(p, g);            // asserts the closed form
                const StableRange range = stable_range(p, g); // asserts the equivalence
                require(component_count(p, g) == 2LL * p * (g - 1) - 1, "component count formula failed");
                require(torsor_rank(p, g) == 4LL * p * (g - 1), "torsor rank formula failed");
                const long long d = rng.range(-5, range.upper + 10);
                const bool inside = range.lower < d && d < range.upper;
                const long long w = deg_w_from_f_minus(p, g, d);
                require(inside == (std::llabs(w) < milnor_wood_bound(p, g)),
                        "window membership disagreed with the degree bound");
                const long long w2 = deg_w_from_f_plus(p, g, d + (g - 1));
                require(w == w2, "the two flag-step dictionaries disagreed at gap g-1");
            }
        }
        return "p <= 5, g <= 6";
    });

    check("rank-one diagonal family structure", [&] {
        su21_example(GaussianRational(1), GaussianRational(0));
        su21_example(GaussianRational(2), GaussianRational(3));
        su21_example(GaussianRational(-1), GaussianRational(5));
        su21_example(GaussianRational(0), GaussianRational(0));
        su21_example(random_scalar(rng, 5, 3, false), random_scalar(rng, 5, 3, false));
        return "5 parameter pairs";
    });

    check("descent of the involutions to the quotients", [&] {
        {
            const std::vector<GaussianRational> roots = {GaussianRational(0), GaussianRational(2),
                                                         GaussianRational(-2)};
            descent_involution_report(cameral_fiber(base_from_roots(1, roots), roots));
        }
        if (p_max >= 2) {
            const std::vector<GaussianRational> roots =
                roots_from_values(random_anisotropic_values(rng, 2));
            descent_involution_report(cameral_fiber(base_from_roots(2, roots), roots));
        }
        return p_max >= 2 ? "p = 1, 2" : "p = 1";
    });

    // ---- observation appendix (report-only outcomes) ----
    appendix << "== observations ==\n";
    try {
        SplitMix64 obs_rng(opts.seed ^ 0x517cc1b727220a95ULL);
        const int p = std::min(p_max, 2);
        const TraceFormulaReport tf = verify_even_trace_formula(random_higgs(obs_rng, p));
        appendix << "even-coefficient trace formula candidates at a random point (p=" << p << "):\n";
        for (const auto& cand : tf.candidates)
            appendix << "  a_{2i} = " << cand.label << ": " << (cand.holds ? "holds" : "fails") << "\n";
    } catch (const std::exception& e) {
        appendix << "  trace formula observation unavailable: " << e.what() << "\n";
    }
    try {
        const Su21Report su = su21_example(GaussianRational(1), GaussianRational(0));
        appendix << "rank-one diagonal family at (l, l') = (1, 0):\n";
        appendix << "  computed (sigma_2, sigma_3) = (" << su.sigma2.str() << ", " << su.sigma3.str()
                 << "); displayed map gives (" << su.displayed_sigma2.str() << ", "
                 << su.displayed_sigma3.str() << "); matches: " << yes_no(su.displayed_map_matches)
                 << "\n";
        for (const auto& locus : su.loci)
            appendix << "  locus {" << locus.condition << "}: involution " << locus.involution_cycle
                     << " verified, in real subcover: " << yes_no(locus.in_real_subcover)
                     << ", displayed relation \"" << locus.displayed_equation
                     << "\" matches: " << yes_no(locus.displayed_equation_matches) << "\n";
        appendix << "  odd coefficient vanishes on {l' = 0}: " << yes_no(su.lprime_zero_locus_is_real)
                 << "\n";
    } catch (const std::exception& e) {
        appendix << "  rank-one family observation unavailable: " << e.what() << "\n";
    }
    try {
        const std::vector<GaussianRational> roots = {GaussianRational(0), GaussianRational(2),
                                                     GaussianRational(-2)};
        const DescentReport dr =
            descent_involution_report(cameral_fiber(base_from_roots(1, roots), roots));
        appendix << "involution descent on the fiber over roots " << point_text(roots) << ":\n";
        appendix << "  negation descends to the spectral quotient: "
                 << yes_no(dr.negation_descends_to_spectral) << " (asserted)\n";
        appendix << "  exchange acts as negation on the real subcover: "
                 << yes_no(dr.theta_equals_negation_on_real) << " (asserted)\n";
        appendix << "  negated exchange preserves the fiber: " << yes_no(dr.minus_theta_preserves_fiber)
                 << "\n";
        appendix << "  negated exchange preserves the weight-quotient orbits: "
                 << yes_no(dr.minus_theta_preserves_quotient_orbits) << "\n";
        if (!dr.orbit_split_witness.empty()) appendix << "    " << dr.orbit_split_witness << "\n";
        appendix << "  image of the whole fiber lies in the real subcover: negate-then-exchange "
                 << yes_no(dr.negate_then_exchange_lands_in_real) << ", exchange-then-negate "
                 << yes_no(dr.exchange_then_negate_lands_in_real) << "\n";
    } catch (const std::exception& e) {
        appendix << "  descent observation unavailable: " << e.what() << "\n";
    }
    appendix << "flag-step note: the two deg W dictionaries agree exactly when "
                "deg F_plus - deg F_minus = g - 1; recorded as a derived relation, not asserted.\n";
    {
        const NormDegrees nd = norm_degrees(2, 2, 0);
        appendix << "norm degrees at (p, g, deg F1) = (2, 2, 0): deg L0 = " << nd.deg_l0
                 << ", quotient degree = " << nd.nm_quotient_degree
                 << " (exponent convention taken literally).\n";
    }

    out << appendix.str();
    out << "summary: " << result.passed << " of " << (result.passed + result.failed)
        << " checks passed\n";
    result.text = out.str();
    return result;
}

} // namespace camspec
