#include "camspec/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "camspec/cameral.hpp"
#include "camspec/degrees.hpp"
#include "camspec/error.hpp"
#include "camspec/hitchin.hpp"
#include "camspec/lie.hpp"
#include "camspec/linalg.hpp"
#include "camspec/rng.hpp"
#include "camspec/suite.hpp"
#include "camspec/weyl.hpp"
#include "camspec/wire.hpp"

namespace camspec {
namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const std::string& format, const json& machine,
          const std::string& human) {
    if (format == "machine")
        out << machine.dump() << "\n";
    else
        out << human;
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

int cmd_analyze_higgs(const std::string& input, const std::string& format, std::ostream& out) {
    const HiggsPoint hp = higgs_from_wire(load_json_file(input));
    const Matrix phi = assemble(hp);
    const std::vector<GaussianRational> omega = char_coefficients(hp).omega;
    const bool regular = is_regular(hp.p, phi);
    const int centralizer_dim = centralizer_dim_m(hp.p, phi);
    const int jacobian_rank = chevalley_rank(hp);

    json reduction;
    std::ostringstream reduction_text;
    try {
        const UppReduction red = upp_reduction(hp);
        const GaussianRational det_b1 = det(red.beta1);
        const GaussianRational det_g1 = det(red.gamma1);
        std::string branch;
        try {
            branch = branch_type_name(upp_branch_type(red.beta1, red.gamma1).type);
        } catch (const GenericityError&) {
            branch = "degenerate";
        }
        reduction = {{"applies", true},
                     {"kernel_vector", vector_to_wire(red.kernel_vector)},
                     {"pivot", red.pivot},
                     {"beta1", matrix_to_wire(red.beta1)},
                     {"gamma1", matrix_to_wire(red.gamma1)},
                     {"det_beta1", scalar_to_wire(det_b1)},
                     {"det_gamma1", scalar_to_wire(det_g1)},
                     {"branch_type", branch}};
        reduction_text << "  kernel reduction: applies (pivot index " << red.pivot
                       << "); det beta1 = " << det_b1.str() << ", det gamma1 = " << det_g1.str()
                       << "; branch type: " << branch << "\n";
    } catch (const ReductionError& e) {
        reduction = {{"applies", false}, {"reason", e.what()}};
        reduction_text << "  kernel reduction: does not apply (" << e.what() << ")\n";
    }

    json omega_wire = json::array();
    std::ostringstream omega_text;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        omega_wire.push_back(scalar_to_wire(omega[i]));
        if (i) omega_text << ", ";
        omega_text << "omega_" << 2 * (i + 1) << " = " << omega[i].str();
    }

    const json machine = {{"schema", "higgs-report/1"},
                          {"p", hp.p},
                          {"char_coefficients", omega_wire},
                          {"odd_vanishing", true},
                          {"is_regular", regular},
                          {"centralizer_dim", centralizer_dim},
                          {"jacobian_rank", jacobian_rank},
                          {"reduction", reduction}};

    std::ostringstream human;
    human << "higgs field analysis (p = " << hp.p << ")\n";
    human << "  even coefficients: " << omega_text.str() << "\n";
    human << "  odd coefficients vanish: yes\n";
    human << "  regular: " << yes_no(regular) << "\n";
    human << "  centralizer dimension: " << centralizer_dim << "\n";
    human << "  chevalley differential rank: " << jacobian_rank << "\n";
    human << reduction_text.str();

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_spectral_fiber(const std::string& input, const std::string& format, std::ostream& out) {
    const FiberDocument doc = fiber_from_wire(load_json_file(input), "spectral-fiber");
    const SpectralFiber fiber = spectral_fiber(doc.base, doc.roots);

    json points = json::array();
    std::ostringstream point_lines;
    for (const auto& pt : fiber.points) {
        points.push_back({{"lambda", scalar_to_wire(pt.lambda)},
                          {"multiplicity", pt.multiplicity},
                          {"on_zero_section", pt.on_zero_section},
                          {"on_main_component", pt.on_main_component}});
        point_lines << "  lambda = " << pt.lambda.str() << "  multiplicity " << pt.multiplicity
                    << "  [";
        if (pt.on_zero_section) point_lines << "zero section";
        if (pt.on_zero_section && pt.on_main_component) point_lines << ", ";
        if (pt.on_main_component) point_lines << "main component";
        point_lines << "]\n";
    }

    const json machine = {{"schema", "spectral-report/1"},
                          {"p", fiber.p},
                          {"points", points},
                          {"zero_multiplicity", fiber.zero_multiplicity},
                          {"components_intersect", fiber.components_intersect},
                          {"all_simple", fiber.all_simple}};

    std::ostringstream human;
    human << "spectral fiber (p = " << fiber.p << ")\n";
    human << point_lines.str();
    human << "  zero-section multiplicity: " << fiber.zero_multiplicity << "\n";
    human << "  components intersect: " << yes_no(fiber.components_intersect) << "\n";
    human << "  all eigenvalues simple: " << yes_no(fiber.all_simple) << "\n";

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_cameral_fiber(const std::string& input, const std::string& format, std::ostream& out) {
    const FiberDocument doc = fiber_from_wire(load_json_file(input), "cameral-fiber");
    const CameralFiber fiber = cameral_fiber(doc.base, doc.roots);
    const std::vector<CameralPoint> real_points = real_subcover(fiber);
    const std::vector<WeightOrbit> orbits = w_delta1_orbits(fiber);
    const std::vector<GaussianRational> quotient = quotient_to_spectral(fiber);

    json machine = {{"schema", "cameral-report/1"},
                    {"p", fiber.p},
                    {"regular", fiber.regular},
                    {"fiber_size", fiber.points.size()},
                    {"real_subcover_size", real_points.size()},
                    {"quotient", vector_to_wire(quotient)}};
    json real_wire = json::array();
    for (const auto& pt : real_points) real_wire.push_back(vector_to_wire(pt));
    machine["real_subcover"] = real_wire;
    json orbit_wire = json::array();
    for (const auto& orbit : orbits)
        orbit_wire.push_back(
            {{"lambda1", scalar_to_wire(orbit.lambda1)}, {"size", orbit.points.size()}});
    machine["orbits"] = orbit_wire;

    std::ostringstream human;
    human << "cameral fiber (p = " << fiber.p << ", base point "
          << (fiber.regular ? "regular" : "not regular") << ")\n";
    human << "  fiber points: " << fiber.points.size() << "\n";
    human << "  real subcover (" << real_points.size() << " points):\n";
    for (const auto& pt : real_points) human << "    " << point_text(pt) << "\n";
    human << "  weight orbits:";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        human << (k ? ", " : " ") << "lambda1 = " << orbits[k].lambda1.str() << " (size "
              << orbits[k].points.size() << ")";
    }
    human << "\n";
    human << "  quotient image: " << point_text(quotient) << "\n";

    if (fiber.regular) {
        const ComponentTranslates ct = component_translates(fiber);
        const DescentReport dr = descent_involution_report(fiber);
        machine["translate_blocks"] = ct.block_count;
        machine["translates_partition"] = ct.partitions;
        machine["descent"] = {
            {"negation_preserves_fiber", dr.negation_preserves_fiber},
            {"negation_descends_to_spectral", dr.negation_descends_to_spectral},
            {"theta_equals_negation_on_real", dr.theta_equals_negation_on_real},
            {"minus_theta_fixes_real", dr.minus_theta_fixes_real},
            {"minus_theta_preserves_fiber", dr.minus_theta_preserves_fiber},
            {"minus_theta_preserves_quotient_orbits", dr.minus_theta_preserves_quotient_orbits},
            {"negate_then_exchange_lands_in_real", dr.negate_then_exchange_lands_in_real},
            {"exchange_then_negate_lands_in_real", dr.exchange_then_negate_lands_in_real},
            {"weight_composition_identity", dr.weight_composition_identity},
            {"orbit_split_witness", dr.orbit_split_witness}};
        human << "  coset translates of the real subcover: " << ct.block_count
              << " blocks; partition: " << yes_no(ct.partitions) << "\n";
        human << "  descent of the involutions:\n";
        human << "    negation preserves the fiber: " << yes_no(dr.negation_preserves_fiber)
              << "\n";
        human << "    negation descends to the spectral quotient: "
              << yes_no(dr.negation_descends_to_spectral) << "\n";
        human << "    exchange acts as negation on the real subcover: "
              << yes_no(dr.theta_equals_negation_on_real) << "\n";
        human << "    negated exchange fixes the real subcover: "
              << yes_no(dr.minus_theta_fixes_real) << "\n";
        human << "    negated exchange preserves the fiber: "
              << yes_no(dr.minus_theta_preserves_fiber) << "\n";
        human << "    negated exchange preserves quotient orbits: "
              << yes_no(dr.minus_theta_preserves_quotient_orbits) << "\n";
        if (!dr.orbit_split_witness.empty())
            human << "      " << dr.orbit_split_witness << "\n";
        human << "    negate-then-exchange lands in the real subcover: "
              << yes_no(dr.negate_then_exchange_lands_in_real) << "\n";
        human << "    exchange-then-negate lands in the real subcover: "
              << yes_no(dr.exchange_then_negate_lands_in_real) << "\n";
        human << "    first-weight composition identity: "
              << yes_no(dr.weight_composition_identity) << "\n";
    } else {
        human << "  base point is not regular; translate and descent reports need a regular "
                 "spectrum\n";
    }

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_degree_audit(int p, int g, std::optional<long long> deg_f_minus,
                     std::optional<long long> deg_f_plus, const std::string& format,
                     std::ostream& out) {
    const DegreeLedger ledger = build_degree_ledger(p, g, deg_f_minus, deg_f_plus);
    const json machine = ledger_to_wire(ledger);

    std::ostringstream human;
    human << "degree audit (p = " << p << ", g = " << g << ")\n";
    std::size_t width = 0;
    for (const auto& [key, value] : ledger.entries) width = std::max(width, key.size());
    for (const auto& [key, value] : ledger.entries) {
        human << "  " << key << std::string(width - key.size(), ' ') << " = " << value << "\n";
    }
    if (!deg_f_minus && !deg_f_plus)
        human << "  (no flag-step degree given: dimension-only report)\n";

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_dimension_report(int p, int g, const std::string& format, std::ostream& out) {
    const DimensionReport report = dimension_report(p, g);
    const json machine = {{"schema", "dimension-report/1"}, {"p", report.p},
                          {"g", report.g},                  {"base_dim", report.dim_first},
                          {"fiber_dim", report.dim_second}, {"moduli_dim", report.dim_total},
                          {"identity_ok", report.identity_holds}};
    std::ostringstream human;
    human << "dimension report (p = " << p << ", g = " << g << ")\n";
    human << "  base dimension:   " << report.dim_first << "\n";
    human << "  fiber dimension:  " << report.dim_second << "\n";
    human << "  moduli dimension: " << report.dim_total << "\n";
    human << "  identity holds:   " << yes_no(report.identity_holds) << "\n";
    emit(out, format, machine, human.str());
    return 0;
}

int cmd_weyl_check(int p, std::uint64_t seed, const std::string& format, std::ostream& out) {
    if (!w0_acts_as_theta(p))
        throw PropertyError("the exchange element did not realize the involution on the Cartan");
    const RestrictedWeyl rw = restricted_weyl_bruteforce(p);
    if (!rw.matches_hyperoctahedral)
        throw PropertyError("the induced action was not the full signed-permutation group");
    if (!weight_stabilizer_check(p))
        throw PropertyError("the stabilizer of the first weight was not {w : w(1) = 1}");

    const int n = 2 * p + 1;
    long long pairs = 0;
    bool exhaustive = false;
    if (p <= 2) {
        const std::vector<Permutation> group = symmetric_group(n);
        for (const auto& w : group) {
            for (const auto& w2 : group) {
                if (!cocycle_check(w, w2)) throw PropertyError("cocycle identity failed");
                ++pairs;
            }
        }
        exhaustive = true;
    } else {
        SplitMix64 rng(seed);
        for (int t = 0; t < 1000; ++t) {
            const Permutation w = Permutation::from_images(random_permutation_images(rng, n));
            const Permutation w2 = Permutation::from_images(random_permutation_images(rng, n));
            if (!cocycle_check(w, w2)) throw PropertyError("cocycle identity failed");
            ++pairs;
        }
    }

    const json machine = {{"schema", "weyl-report/1"},
                          {"p", p},
                          {"exchange_images", w0(p).images()},
                          {"exchange_realizes_involution", true},
                          {"normalizer_order", rw.normalizer_order},
                          {"centralizer_order", rw.centralizer_order},
                          {"restricted_order", rw.order},
                          {"matches_signed_permutations", rw.matches_hyperoctahedral},
                          {"coset_count", rw.coset_count},
                          {"weight_stabilizer_ok", true},
                          {"cocycle_pairs_checked", pairs},
                          {"cocycle_exhaustive", exhaustive}};

    std::ostringstream human;
    human << "weyl combinatorics (p = " << p << ", ambient degree " << n << ")\n";
    human << "  exchange element images: " << w0(p).str() << "\n";
    human << "  exchange realizes the involution on the Cartan: yes\n";
    human << "  normalizer order: " << rw.normalizer_order << ", centralizer order: "
          << rw.centralizer_order << ", restricted order: " << rw.order << "\n";
    human << "  induced action is the full signed-permutation group: "
          << yes_no(rw.matches_hyperoctahedral) << "\n";
    human << "  coset count: " << rw.coset_count << "\n";
    human << "  weight stabilizer check: yes\n";
    human << "  cocycle identity: " << pairs << " pairs checked ("
          << (exhaustive ? "exhaustive" : "sampled") << "), all passed\n";

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_su21_example(const std::string& input, const std::string& format, std::ostream& out) {
    GaussianRational l(1), lp(2);
    if (!input.empty()) {
        const json doc = load_json_file(input);
        if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != "su21-params/1")
            throw ParseError("expected a document with schema su21-params/1");
        if (!doc.contains("l") || !doc.contains("lp"))
            throw ParseError("su21-params document needs fields l and lp");
        l = scalar_from_wire(doc.at("l"), "l");
        lp = scalar_from_wire(doc.at("lp"), "lp");
    }
    const Su21Report report = su21_example(l, lp);

    json loci = json::array();
    for (const auto& locus : report.loci) {
        loci.push_back({{"condition", locus.condition},
                        {"point", vector_to_wire(locus.point)},
                        {"sigma2", scalar_to_wire(locus.sigma2)},
                        {"sigma3", scalar_to_wire(locus.sigma3)},
                        {"odd_coefficient_vanishes", locus.odd_coefficient_vanishes},
                        {"in_real_subcover", locus.in_real_subcover},
                        {"involution", locus.involution_cycle},
                        {"involution_images", locus.involution_images},
                        {"involution_verified", locus.involution_verified},
                        {"displayed_equation", locus.displayed_equation},
                        {"displayed_equation_matches", locus.displayed_equation_matches}});
    }
    const json machine = {{"schema", "su21-report/1"},
                          {"l", scalar_to_wire(report.l)},
                          {"lp", scalar_to_wire(report.lp)},
                          {"point", vector_to_wire(report.point)},
                          {"sigma2", scalar_to_wire(report.sigma2)},
                          {"sigma3", scalar_to_wire(report.sigma3)},
                          {"displayed_sigma2", scalar_to_wire(report.displayed_sigma2)},
                          {"displayed_sigma3", scalar_to_wire(report.displayed_sigma3)},
                          {"displayed_map_matches", report.displayed_map_matches},
                          {"factorization_verified", report.factorization_verified},
                          {"odd_vanishes_on_lprime_zero", report.lprime_zero_locus_is_real},
                          {"degenerate", report.degenerate},
                          {"loci", loci}};

    std::ostringstream human;
    human << "rank-one diagonal family at (l, l') = (" << report.l.str() << ", "
          << report.lp.str() << ")" << (report.degenerate ? " [degenerate]" : "") << "\n";
    human << "  diagonal point: " << point_text(report.point) << "\n";
    human << "  computed (sigma_2, sigma_3) = (" << report.sigma2.str() << ", "
          << report.sigma3.str() << ")\n";
    human << "  displayed map gives (" << report.displayed_sigma2.str() << ", "
          << report.displayed_sigma3.str() << "); matches: "
          << yes_no(report.displayed_map_matches) << "\n";
    human << "  factorization sigma_3 = -2 l (l - l')(l + l'): "
          << yes_no(report.factorization_verified) << "\n";
    for (const auto& locus : report.loci) {
        human << "  locus {" << locus.condition << "}: point " << point_text(locus.point)
              << ", involution " << locus.involution_cycle << " verified: "
              << yes_no(locus.involution_verified) << ", in real subcover: "
              << yes_no(locus.in_real_subcover) << "\n";
        human << "    displayed relation \"" << locus.displayed_equation
              << "\" matches: " << yes_no(locus.displayed_equation_matches) << "\n";
    }
    human << "  odd coefficient vanishes on {l' = 0}: "
          << yes_no(report.lprime_zero_locus_is_real) << "\n";

    emit(out, format, machine, human.str());
    return 0;
}

int cmd_property_suite(std::uint64_t seed, int trials, int p_max, const std::string& format,
                       std::ostream& out) {
    SuiteOptions options;
    options.seed = seed;
    options.trials = trials;
    options.p_max = p_max;
    const SuiteResult result = run_property_suite(options);
    const json machine = {{"schema", "property-suite/1"}, {"seed", seed},
                          {"trials", trials},             {"p_max", p_max},
                          {"passed", result.passed},      {"failed", result.failed},
                          {"report", result.text}};
    emit(out, format, machine, result.text);
    return result.ok() ? 0 : 4;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral and cameral toolkit for odd special-unitary Higgs fields"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "human";
    std::uint64_t seed = 42;
    int trials = 100;
    int p = 2;
    int g = 2;
    long long deg_f_minus = 0;
    long long deg_f_plus = 0;

    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze-higgs", "analyze a Higgs field document (coefficients, regularity, reduction)");
    analyze->add_option("--input", input, "higgs-point/1 document")->required();
    add_format(analyze);

    CLI::App* spectral = app.add_subcommand(
        "spectral-fiber", "spectral fiber of a base point with proposed eigenvalues");
    spectral->add_option("--input", input, "spectral-fiber/1 document")->required();
    add_format(spectral);

    CLI::App* cameral = app.add_subcommand(
        "cameral-fiber", "cameral fiber, real subcover, orbits, and involution descent");
    cameral->add_option("--input", input, "cameral-fiber/1 document")->required();
    add_format(cameral);

    CLI::App* audit = app.add_subcommand(
        "degree-audit", "degree ledger: bounds, stable window, components, torsor rank");
    audit->add_option("--p", p, "block rank")->required();
    audit->add_option("--g", g, "curve genus")->required();
    CLI::Option* opt_fm = audit->add_option("--deg-f-minus", deg_f_minus, "lower flag-step degree");
    CLI::Option* opt_fp = audit->add_option("--deg-f-plus", deg_f_plus, "upper flag-step degree");
    add_format(audit);

    CLI::App* dim = app.add_subcommand("dimension-report", "base/fiber/moduli dimension identity");
    dim->add_option("--p", p, "block rank")->required();
    dim->add_option("--g", g, "curve genus")->required();
    add_format(dim);

    CLI::App* weyl = app.add_subcommand(
        "weyl-check", "restricted Weyl group, weight stabilizer, and cocycle identity");
    weyl->add_option("--p", p, "block rank (ambient degree 2p+1)")->required();
    weyl->add_option("--seed", seed, "sampling seed for large degrees");
    add_format(weyl);

    CLI::App* su21 = app.add_subcommand(
        "su21-example", "rank-one diagonal family and its displayed-formula comparison");
    su21->add_option("--input", input, "optional su21-params/1 document");
    add_format(su21);

    CLI::App* suite = app.add_subcommand("property-suite", "randomized exact property checks");
    suite->add_option("--seed", seed, "pseudo-random seed");
    suite->add_option("--trials", trials, "trials per randomized check");
    suite->add_option("--p", p, "largest block rank exercised (p_max, 1..3)");
    add_format(suite);

    try {
        std::vector<const char*> argv;
        argv.push_back("camspec");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze_higgs(input, format, out);
        if (spectral->parsed()) return cmd_spectral_fiber(input, format, out);
        if (cameral->parsed()) return cmd_cameral_fiber(input, format, out);
        if (audit->parsed()) {
            std::optional<long long> fm, fp;
            if (opt_fm->count()) fm = deg_f_minus;
            if (opt_fp->count()) fp = deg_f_plus;
            return cmd_degree_audit(p, g, fm, fp, format, out);
        }
        if (dim->parsed()) return cmd_dimension_report(p, g, format, out);
        if (weyl->parsed()) return cmd_weyl_check(p, seed, format, out);
        if (su21->parsed()) return cmd_su21_example(input, format, out);
        if (suite->parsed()) return cmd_property_suite(seed, trials, p, format, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PropertyError& e) {
        err << "property failure: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return dispatch(args, std::cout, std::cerr);
}

CliResult run_cli_capture(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.exit_code = dispatch(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace camspec
