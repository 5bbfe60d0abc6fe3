#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "torsec/characters.hpp"
#include "torsec/distribution.hpp"
#include "torsec/json_io.hpp"
#include "torsec/lattice.hpp"
#include "torsec/relations.hpp"
#include "torsec/solver.hpp"

namespace {

using namespace torsec;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size())
            throw InputError(errc::bad_argument, "malformed integer list: " + text);
        values.push_back(v);
    }
    if (values.empty())
        throw InputError(errc::bad_argument, "empty integer list");
    return values;
}

std::string join_long_list(const std::vector<long>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << values[i];
    }
    return os.str();
}

struct SectionChecks {
    std::vector<json> checks;
    bool all_hold = true;

    void add(const RelationReport& rep) {
        checks.push_back(relation_to_json(rep));
        all_hold = all_hold && rep.holds;
    }
    void add(json j, bool holds) {
        checks.push_back(std::move(j));
        all_hold = all_hold && holds;
    }
};

// Every relation the library knows how to test against one section.
SectionChecks run_section_checks(const FiberConfiguration& config,
                                 const ComponentAssignment& a) {
    SectionChecks out;
    const long order = order_of(config, a);

    out.add(check_quadratic(config, a));
    if (order == 2)
        out.add(check_sum_order2(config, a));
    else
        out.add(check_sum_order3plus(config, a));
    out.add(check_square_sum(config, minimal_form(config, a)));
    out.add(check_integrality(config, a));
    if (is_prime(order)) out.add(check_fixed_point_sum(config, a, order));

    MultiplesReport multiples = check_multiples(config, a);
    for (const auto& entry : multiples.entries) {
        json j{{"relation", std::string(relation_name(RelationId::multiples))},
               {"alpha", entry.alpha},
               {"lhs", rat_to_string(entry.per_fiber)},
               {"rhs", rat_to_string(Rat(2 * config.chi()))},
               {"collected", rat_to_string(entry.collected)},
               {"holds", entry.holds}};
        out.add(std::move(j), entry.holds);
    }

    LatticeBasis basis(config);
    SectionClassReport lattice_rep = verify_section_class(basis, a);
    bool lattice_ok = lattice_rep.passed() && lattice_rep.self_intersection_is_minus_chi;
    json lj{{"relation", std::string(relation_name(RelationId::section_class))},
            {"lhs", rat_to_string(lattice_rep.self_intersection)},
            {"rhs", rat_to_string(Rat(-config.chi()))},
            {"holds", lattice_ok}};
    if (!lattice_rep.first_failure.empty()) lj["detail"] = lattice_rep.first_failure;
    out.add(std::move(lj), lattice_ok);

    // index distances by the exact order, whatever order the input claimed
    ComponentAssignment exact(config, a.components(), order);
    DistributionVector dist = distribution_of(config, exact);
    if (is_prime(order)) {
        // theorem values: M_0 = 1/(p+1); M_i = 2p/(p^2-1) (odd p), M_1 = 2/3 (p = 2)
        for (long i = 0; i <= order / 2; ++i) {
            Rat expected = i == 0 ? rat(1, order + 1)
                           : order == 2 ? rat(2, 3)
                                        : rat(2 * order, order * order - 1);
            Rat found = dist.unoriented[static_cast<std::size_t>(i)];
            json j{{"relation", std::string(relation_name(RelationId::distribution))},
                   {"index", i},
                   {"lhs", rat_to_string(found)},
                   {"rhs", rat_to_string(expected)},
                   {"holds", found == expected}};
            out.add(std::move(j), found == expected);
        }
    }
    return out;
}

void print_checks_text(const SectionChecks& checks) {
    for (const auto& j : checks.checks) {
        std::cout << "  " << j.at("relation").get<std::string>();
        if (j.contains("alpha")) std::cout << "[alpha=" << j.at("alpha").get<long>() << "]";
        if (j.contains("index")) std::cout << "[i=" << j.at("index").get<long>() << "]";
        std::cout << ": lhs = " << j.at("lhs").get<std::string>()
                  << ", rhs = " << j.at("rhs").get<std::string>()
                  << (j.at("holds").get<bool>() ? "  [ok]" : "  [FAIL]");
        if (j.contains("detail")) std::cout << "  (" << j.at("detail").get<std::string>() << ")";
        std::cout << "\n";
    }
}

struct CommonArgs {
    std::string fibers;
    long chi = 0;
    std::string input_path;
    bool non_strict = false;
};

FiberConfiguration config_from_args(const CommonArgs& args,
                                    const std::optional<InputDocument>& doc) {
    if (doc) return FiberConfiguration(doc->fibers, doc->chi, !args.non_strict);
    if (args.fibers.empty() || args.chi == 0)
        throw InputError(errc::bad_argument,
                         "--fibers and --chi are required (or use --input)");
    return FiberConfiguration(parse_long_list(args.fibers), args.chi,
                              !args.non_strict);
}

int cmd_check(const CommonArgs& common, const std::string& components,
              long order, bool json_mode) {
    std::optional<InputDocument> doc;
    if (!common.input_path.empty()) {
        std::ifstream in(common.input_path);
        if (!in)
            throw InputError(errc::bad_argument,
                             "cannot open input file: " + common.input_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        doc = parse_input_document(buffer.str());
    }
    FiberConfiguration config = config_from_args(common, doc);

    std::vector<ComponentAssignment> sections;
    if (doc) {
        for (const auto& s : doc->sections)
            sections.emplace_back(config, s.components, s.order);
    }
    if (!components.empty()) {
        if (order < 1)
            throw InputError(errc::bad_argument, "--order is required with --components");
        sections.emplace_back(config, parse_long_list(components), order);
    }
    if (sections.empty())
        throw InputError(errc::bad_argument, "no section given to check");

    bool all_hold = true;
    json out{{"fibers", config.fiber_lengths()},
             {"chi", config.chi()},
             {"sections", json::array()}};
    for (const ComponentAssignment& a : sections) {
        SectionChecks checks = run_section_checks(config, a);
        all_hold = all_hold && checks.all_hold;
        if (json_mode) {
            json sec{{"components", a.components()},
                     {"order", order_of(config, a)},
                     {"checks", checks.checks},
                     {"all_hold", checks.all_hold}};
            out["sections"].push_back(std::move(sec));
        } else {
            std::cout << "section (" << join_long_list(a.components())
                      << "), order " << order_of(config, a) << ":\n";
            print_checks_text(checks);
        }
    }
    if (json_mode) {
        out["all_hold"] = all_hold;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all_hold ? "all checks hold\n" : "some checks FAILED\n");
    }
    return all_hold ? exit_ok : exit_check_failed;
}

int cmd_enumerate(const CommonArgs& common, long order, bool up_to_symmetry,
                  bool equidistribution, bool json_mode) {
    FiberConfiguration config = config_from_args(common, std::nullopt);
    EnumerationQuery query{config, order, up_to_symmetry, equidistribution,
                           std::nullopt};
    SolutionSet sols = enumerate_sections(query);

    if (json_mode) {
        json out{{"fibers", config.fiber_lengths()},
                 {"chi", config.chi()},
                 {"order", order},
                 {"raw_count", sols.raw_count},
                 {"orbit_count", sols.orbit_count},
                 {"solutions", json::array()}};
        for (const auto& a : sols.assignments)
            out["solutions"].push_back(a.components());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "order " << order << " on [" << join_long_list(config.fiber_lengths())
                  << "], chi = " << config.chi() << ": " << sols.raw_count
                  << " solutions, " << sols.orbit_count << " orbits\n";
        for (const auto& a : sols.assignments)
            std::cout << "  (" << join_long_list(a.components()) << ")\n";
    }
    return sols.raw_count > 0 ? exit_ok : exit_check_failed;
}

int cmd_distribution(const CommonArgs& common, long order,
                     const std::string& components, bool json_mode) {
    DistributionMatrix matrix = distribution_matrix(order);
    DistributionSolution sol = solve_distribution(order);

    json out{{"order", order}, {"matrix", json::array()}};
    for (const auto& row : matrix.entries) {
        json jr = json::array();
        for (const Rat& v : row) jr.push_back(rat_to_string(v));
        out["matrix"].push_back(std::move(jr));
    }
    out["consistent"] = sol.consistent;
    out["unique"] = sol.unique;
    if (sol.consistent) {
        json values = json::array();
        for (const Rat& v : sol.values) values.push_back(rat_to_string(v));
        out["values"] = std::move(values);
        out["m0"] = rat_to_string(sol.m0);
        if (!sol.unique) {
            json null_basis = json::array();
            for (const auto& v : sol.nullspace) {
                json jv = json::array();
                for (const Rat& x : v) jv.push_back(rat_to_string(x));
                null_basis.push_back(std::move(jv));
            }
            out["nullspace"] = std::move(null_basis);
        }
    }

    bool section_ok = true;
    if (!components.empty()) {
        FiberConfiguration config = config_from_args(common, std::nullopt);
        ComponentAssignment a(config, parse_long_list(components), order);
        DistributionVector dist = distribution_of(config, a);
        json oriented = json::array(), unoriented = json::array();
        for (const Rat& v : dist.oriented) oriented.push_back(rat_to_string(v));
        for (const Rat& v : dist.unoriented) unoriented.push_back(rat_to_string(v));
        out["section"] = {{"components", a.components()},
                          {"oriented", std::move(oriented)},
                          {"unoriented", std::move(unoriented)}};
        MultiplesReport multiples = check_multiples(config, a);
        section_ok = multiples.all_hold;
        out["section"]["multiples_hold"] = multiples.all_hold;
    }

    if (json_mode) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "coefficient matrix, size " << matrix.entries.size() << ":\n";
        for (const auto& row : matrix.entries) {
            std::cout << "  [";
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? " " : "") << row[i].get_str();
            std::cout << "]\n";
        }
        if (!sol.consistent) {
            std::cout << "system inconsistent\n";
        } else if (sol.unique) {
            for (std::size_t i = 0; i < sol.values.size(); ++i)
                std::cout << "M_" << i + 1 << " = " << sol.values[i].get_str() << "\n";
            std::cout << "M_0 = " << sol.m0.get_str() << "\n";
        } else {
            std::cout << "affine solution family; particular solution:\n";
            for (std::size_t i = 0; i < sol.values.size(); ++i)
                std::cout << "M_" << i + 1 << " = " << sol.values[i].get_str() << "\n";
            std::cout << "M_0 = " << sol.m0.get_str() << " with "
                      << sol.nullspace.size() << " free direction(s)\n";
        }
        if (out.contains("section")) {
            std::cout << "section distribution:";
            for (std::size_t i = 0; i < out["section"]["unoriented"].size(); ++i)
                std::cout << " M_" << i << " = "
                          << out["section"]["unoriented"][i].get<std::string>();
            std::cout << "\nmultiples relation: " << (section_ok ? "holds" : "FAILS")
                      << "\n";
        }
    }
    return sol.consistent && section_ok ? exit_ok : exit_check_failed;
}

int cmd_invertibility(long p, const std::string& method, bool json_mode) {
    bool run_det = method == "determinant" || method == "both";
    bool run_chars = method == "characters" || method == "both";
    if (!run_det && !run_chars)
        throw InputError(errc::bad_argument,
                         "--method must be determinant, characters, or both");

    json out{{"prime", p}};
    bool certified = true;
    if (run_det) {
        Rat det = distribution_matrix_determinant(p);
        out["determinant"] = rat_to_string(det);
        out["determinant_nonzero"] = det != 0;
        certified = certified && det != 0;
    }
    if (run_chars) {
        NonvanishingReport rep = verify_nonvanishing(p);
        json chars = json::array();
        for (const auto& e : rep.even_characters)
            chars.push_back({{"index", e.index},
                             {"nonzero", e.nonzero},
                             {"routes_agree", e.routes_agree}});
        out["even_characters"] = std::move(chars);
        out["all_nonvanishing"] = rep.passed;
        certified = certified && rep.passed;
    }
    out["certified"] = certified;

    if (json_mode) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p = " << p << ":\n";
        if (run_det)
            std::cout << "  determinant = " << out["determinant"].get<std::string>()
                      << (out["determinant_nonzero"].get<bool>() ? "  (nonzero)"
                                                                 : "  (ZERO)")
                      << "\n";
        if (run_chars)
            std::cout << "  even characters with s_chi != 0: "
                      << (out["all_nonvanishing"].get<bool>() ? "all" : "NOT all")
                      << " of " << (p - 1) / 2 << "\n";
        std::cout << (certified ? "invertibility certified\n"
                                : "invertibility NOT certified\n");
    }
    return certified ? exit_ok : exit_check_failed;
}

int cmd_bernoulli(long p, long index, bool json_mode) {
    std::vector<long> indices;
    if (index >= 0) {
        indices.push_back(index);
    } else {
        for (long t = 0; t <= p - 2; t += 2) indices.push_back(t);
    }

    json out{{"prime", p}, {"characters", json::array()}};
    bool all_agree = true;
    for (long t : indices) {
        DirichletCharacter chi(p, t);
        CharacterSumReport sum = character_weight_sum(chi);
        json entry{{"index", t},
                   {"even", chi.is_even()},
                   {"s_chi", cyclo_to_string(sum.direct)},
                   {"s_chi_nonzero", !sum.direct.is_zero()}};
        if (!chi.is_trivial()) {
            entry["b2_chi"] = cyclo_to_string(generalized_bernoulli(chi));
            entry["routes_agree"] = sum.routes_agree;
            all_agree = all_agree && sum.routes_agree;
        }
        out["characters"].push_back(std::move(entry));
    }

    if (json_mode) {
        out["all_routes_agree"] = all_agree;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : out["characters"]) {
            std::cout << "chi_" << e["index"].get<long>() << " (p = " << p << "): s_chi = "
                      << e["s_chi"].get<std::string>();
            if (e.contains("b2_chi"))
                std::cout << ", B_{2,chi} = " << e["b2_chi"].get<std::string>()
                          << (e["routes_agree"].get<bool>() ? "  [routes agree]"
                                                            : "  [ROUTES DISAGREE]");
            std::cout << "\n";
        }
    }
    return all_agree ? exit_ok : exit_check_failed;
}

int cmd_lattice_verify(const CommonArgs& common, const std::string& components,
                       long order, bool json_mode) {
    FiberConfiguration config = config_from_args(common, std::nullopt);
    LatticeBasis basis(config);
    CorrectionLemmaReport lemma = verify_correction_intersections(basis);

    json out{{"fibers", config.fiber_lengths()},
             {"chi", config.chi()},
             {"rank", basis.rank()},
             {"correction_lemma", lemma.passed}};
    if (!lemma.passed) out["first_failure"] = lemma.first_failure;

    bool ok = lemma.passed;
    if (!components.empty()) {
        if (order < 1)
            throw InputError(errc::bad_argument, "--order is required with --components");
        ComponentAssignment a(config, parse_long_list(components), order);
        SectionClassReport rep = verify_section_class(basis, a);
        bool section_ok = rep.passed() && rep.self_intersection_is_minus_chi;
        out["section"] = {{"components", a.components()},
                          {"delta_checks", rep.passed()},
                          {"self_intersection", rat_to_string(rep.self_intersection)},
                          {"self_intersection_is_minus_chi",
                           rep.self_intersection_is_minus_chi}};
        if (!rep.first_failure.empty()) out["section"]["detail"] = rep.first_failure;
        ok = ok && section_ok;
    }

    if (json_mode) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "lattice rank " << basis.rank() << ", correction lemma "
                  << (lemma.passed ? "holds" : ("FAILS: " + lemma.first_failure))
                  << "\n";
        if (out.contains("section"))
            std::cout << "section class: delta checks "
                      << (out["section"]["delta_checks"].get<bool>() ? "pass" : "FAIL")
                      << ", V.V = "
                      << out["section"]["self_intersection"].get<std::string>() << "\n";
    }
    return ok ? exit_ok : exit_check_failed;
}

int cmd_group(const CommonArgs& common, const std::vector<std::string>& generators,
              bool json_mode) {
    FiberConfiguration config = config_from_args(common, std::nullopt);
    std::vector<ComponentAssignment> gens;
    for (const std::string& g : generators) {
        std::vector<long> components = parse_long_list(g);
        if (components.size() != config.fiber_count())
            throw InputError(errc::length_mismatch,
                             "generator does not match fiber count");
        long order = 1;
        for (std::size_t j = 0; j < components.size(); ++j) {
            long m = config.fiber_lengths()[j];
            if (components[j] < 0 || components[j] >= m)
                throw InputError(errc::component_out_of_range,
                                 "generator component out of range");
            order = std::lcm(order, m / std::gcd(components[j], m));
        }
        gens.emplace_back(config, components, order);
    }
    GroupClosureReport rep = verify_group_closure(config, gens);

    if (json_mode) {
        json out{{"fibers", config.fiber_lengths()},
                 {"chi", config.chi()},
                 {"group_order", rep.group_order},
                 {"invariant_factors", rep.invariant_factors},
                 {"all_valid", rep.all_valid},
                 {"elements", json::array()}};
        for (const auto& e : rep.elements)
            out["elements"].push_back({{"components", e.components},
                                       {"order", e.order},
                                       {"quadratic", e.quadratic_ok},
                                       {"sum", e.sum_ok}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "group order " << rep.group_order << ", invariant factors [";
        for (std::size_t i = 0; i < rep.invariant_factors.size(); ++i)
            std::cout << (i ? " " : "") << rep.invariant_factors[i];
        std::cout << "]\n";
        for (const auto& e : rep.elements)
            std::cout << "  (" << join_long_list(e.components) << ") order " << e.order
                      << (e.quadratic_ok && e.sum_ok ? "  [ok]" : "  [FAIL]") << "\n";
        std::cout << (rep.all_valid ? "all elements valid\n" : "some elements FAIL\n");
    }
    return rep.all_valid ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of component-number relations for torsion "
                 "sections of semistable elliptic surfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit structured JSON instead of text");

    CommonArgs common;
    std::string components;
    long order = 0;

    auto add_config_flags = [&common](CLI::App* cmd, bool with_input) {
        cmd->add_option("--fibers", common.fibers, "comma-separated cycle lengths");
        cmd->add_option("--chi", common.chi, "holomorphic Euler characteristic");
        cmd->add_flag("--non-strict", common.non_strict,
                      "do not require sum(m_j) = 12 chi");
        if (with_input)
            cmd->add_option("--input", common.input_path,
                            "JSON input file with fibers/chi/sections");
    };

    CLI::App* check = app.add_subcommand("check", "verify all relations for sections");
    add_config_flags(check, true);
    check->add_option("--components", components, "comma-separated component numbers");
    check->add_option("--order", order, "claimed section order");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list assignments passing all necessary conditions");
    add_config_flags(enumerate, false);
    bool up_to_symmetry = false, equidistribution = false;
    enumerate->add_option("--order", order, "exact order to search for")->required();
    enumerate->add_flag("--up-to-symmetry", up_to_symmetry,
                        "one representative per symmetry orbit");
    enumerate->add_flag("--equidistribution", equidistribution,
                        "also require the prime-order distribution values");

    CLI::App* distribution = app.add_subcommand(
        "distribution", "coefficient matrix and distribution numbers for an order");
    add_config_flags(distribution, false);
    distribution->add_option("--order", order, "section order n >= 2")->required();
    distribution->add_option("--components", components,
                             "optional section to compare against");

    CLI::App* invertibility = app.add_subcommand(
        "invertibility", "certify the coefficient matrix of an odd prime is invertible");
    long prime = 0;
    std::string method = "both";
    invertibility->add_option("--prime", prime, "odd prime p")->required();
    invertibility->add_option("--method", method, "determinant | characters | both");

    CLI::App* bernoulli = app.add_subcommand(
        "bernoulli", "generalized Bernoulli numbers and twisted weight sums");
    long char_index = -1;
    bernoulli->add_option("--prime", prime, "odd prime p")->required();
    bernoulli->add_option("--index", char_index,
                          "character index (default: all even characters)");

    CLI::App* lattice_verify = app.add_subcommand(
        "lattice-verify", "intersection-theoretic checks on the fiber lattice");
    add_config_flags(lattice_verify, false);
    lattice_verify->add_option("--components", components, "optional section to verify");
    lattice_verify->add_option("--order", order, "claimed order of that section");

    CLI::App* group = app.add_subcommand(
        "group", "subgroup generated by sections, with per-element checks");
    add_config_flags(group, false);
    std::vector<std::string> generator_args;
    group->add_option("--generator", generator_args,
                      "component numbers of a generator (repeatable)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*check) return cmd_check(common, components, order, json_mode);
        if (*enumerate)
            return cmd_enumerate(common, order, up_to_symmetry, equidistribution,
                                 json_mode);
        if (*distribution) return cmd_distribution(common, order, components, json_mode);
        if (*invertibility) return cmd_invertibility(prime, method, json_mode);
        if (*bernoulli) return cmd_bernoulli(prime, char_index, json_mode);
        if (*lattice_verify)
            return cmd_lattice_verify(common, components, order, json_mode);
        if (*group) return cmd_group(common, generator_args, json_mode);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
