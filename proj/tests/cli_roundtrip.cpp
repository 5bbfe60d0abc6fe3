// End-to-end check of the structured output contract: run the CLI in JSON
// mode, re-parse every emitted check object, and compare the values against a
// direct library computation.  Exit 0 on success.

#include <cstdio>
#include <iostream>
#include <string>

#include "torsec/json_io.hpp"
#include "torsec/relations.hpp"

using namespace torsec;

namespace {

std::string run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int rc = pclose(pipe);
    if (rc != 0) throw std::runtime_error("cli exited with " + std::to_string(rc));
    return output;
}

int check(bool condition, const std::string& what) {
    if (condition) return 0;
    std::cerr << "FAIL: " << what << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_roundtrip <path-to-cli>\n";
        return 2;
    }
    int bad = 0;
    try {
        const std::string output = run_command(
            std::string(argv[1]) +
            " check --json --fibers 6,3,2,1 --chi 1 --components 3,0,1,0 --order 2");
        nlohmann::json doc = nlohmann::json::parse(output);
        bad += check(doc.at("all_hold").get<bool>(), "all checks hold");
        bad += check(doc.at("sections").size() == 1, "one section reported");

        FiberConfiguration config({6, 3, 2, 1}, 1, true);
        ComponentAssignment a(config, {3, 0, 1, 0}, 2);
        const RelationReport expected_quadratic = check_quadratic(config, a);
        const RelationReport expected_sum = check_sum_order2(config, a);

        bool saw_quadratic = false, saw_sum = false;
        for (const auto& j : doc.at("sections")[0].at("checks")) {
            // every emitted object re-parses, and re-serializing reproduces it
            RelationReport parsed = relation_from_json(j);
            nlohmann::json again = relation_to_json(parsed);
            for (const char* field : {"relation", "lhs", "rhs", "holds"})
                bad += check(again.at(field) == j.at(field),
                             std::string("round trip of field ") + field);

            if (parsed.id == RelationId::quadratic) {
                saw_quadratic = true;
                bad += check(parsed.lhs == expected_quadratic.lhs &&
                                 parsed.rhs == expected_quadratic.rhs &&
                                 parsed.holds == expected_quadratic.holds,
                             "quadratic values match the library");
            }
            if (parsed.id == RelationId::sum_order2) {
                saw_sum = true;
                bad += check(parsed.lhs == expected_sum.lhs &&
                                 parsed.rhs == expected_sum.rhs,
                             "sum values match the library");
            }
        }
        bad += check(saw_quadratic && saw_sum, "expected checks present");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (bad == 0) std::cout << "structured output round trip ok\n";
    return bad == 0 ? 0 : 1;
}
