#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "pinnacle/core.hpp"
#include "pinnacle/text.hpp"

// Drives the installed binary through popen and checks that its answers are
// exactly the library's answers on the parsed inputs.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path() {
    const char* path = std::getenv("PINNACLE_BIN");
    REQUIRE_MESSAGE(path != nullptr, "PINNACLE_BIN must point at the pinnacle executable");
    return path;
}

RunResult run(const std::string& args, bool merge_stderr = true) {
    const std::string command =
        "\"" + binary_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check-set answers and exit codes") {
    CHECK(run("check-set 3,5,7").exit_code == 0);
    CHECK(contains(run("check-set 3,5,7").output, "admissible: true"));

    const RunResult two = run("check-set 2");
    CHECK(two.exit_code == 0);
    CHECK(contains(two.output, "admissible: false"));

    CHECK(run("check-set 2 --strict").exit_code == 1);
    CHECK(run("check-set 5,3").exit_code == 2);
    CHECK(run("check-set 3,x").exit_code == 2);
    CHECK(run("check-set").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
}

TEST_CASE("check-set profile as json matches the library") {
    const RunResult r = run("check-set 3,5,8,9,13,14 --profile --maximal --format json", false);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json envelope = nlohmann::json::parse(r.output);
    REQUIRE(envelope.contains("input"));
    REQUIRE(envelope.contains("result"));
    CHECK(envelope["input"]["set"] == "3,5,8,9,13,14");
    CHECK(envelope["result"]["admissible"] == true);
    CHECK(envelope["result"]["maximally_admissible"] == false);

    const pinnacle::SlackProfile profile =
        pinnacle::k_profile(pinnacle::text::parse_set("3,5,8,9,13,14"));
    const auto& rows = envelope["result"]["profile"];
    REQUIRE(rows.size() == profile.entries.size());
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        CHECK(rows[i]["x"] == profile.entries[i].x);
        CHECK(rows[i]["slack"] == profile.entries[i].slack);
    }
}

TEST_CASE("check-ordering reports, witnesses, and exit codes") {
    const RunResult good = run("check-ordering 10,6,4,11,8 --witness");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "admissible: true"));
    CHECK(contains(good.output, "witness: 9 10 3 6 1 4 2 11 5 8 7"));

    const RunResult bad = run("check-ordering 6,10,4,11,8 --format json", false);
    CHECK(bad.exit_code == 0);
    const nlohmann::json envelope = nlohmann::json::parse(bad.output);
    CHECK(envelope["result"]["admissible"] == false);
    std::vector<int> violated;
    for (const auto& row : envelope["result"]["report"])
        if (row["violated"] == true) violated.push_back(row["x"]);
    CHECK(violated == std::vector<int>{8});

    CHECK(run("check-ordering 6,10,4,11,8 --strict").exit_code == 1);
    CHECK(run("check-ordering 3,7,5").exit_code == 0);
    CHECK(contains(run("check-ordering 3,7,5").output, "admissible: false"));
    CHECK(run("check-ordering 3,7,5 --reduced --strict").exit_code == 1);

    // base set {3,4} is not admissible: usage-level rejection
    const RunResult inadmissible_base = run("check-ordering 4,3");
    CHECK(inadmissible_base.exit_code == 2);
    CHECK(contains(inadmissible_base.output, "not an admissible pinnacle set"));
}

TEST_CASE("orderings stream round-trips through check-ordering") {
    const RunResult listing = run("orderings 3,5,7", false);
    REQUIRE(listing.exit_code == 0);
    const std::vector<std::string> lines = lines_of(listing.output);
    const std::vector<std::string> expected{"3,5,7", "5,3,7", "7,3,5", "7,5,3"};
    CHECK(lines == expected);

    for (const std::string& line : lines)
        CHECK(run("check-ordering " + line + " --strict").exit_code == 0);

    CHECK(run("orderings 4,6,8,10,11 --count-only").output.substr(0, 3) == "108");
    CHECK(run("orderings 3 --count-only").output.substr(0, 1) == "1");
    CHECK(run("orderings 3,4 --count-only").exit_code == 2);
}

TEST_CASE("emitted witnesses reproduce their orderings") {
    using pinnacle::text::parse_ordering;
    using pinnacle::text::parse_permutation;

    const std::vector<std::string> orderings{"3,5,7", "5,3,7", "7,3,5", "7,5,3", "10,6,4,11,8"};
    for (const std::string& text : orderings) {
        const RunResult r = run("check-ordering " + text + " --witness --format json", false);
        REQUIRE(r.exit_code == 0);
        const nlohmann::json envelope = nlohmann::json::parse(r.output);
        const pinnacle::Permutation w =
            parse_permutation(envelope["result"]["witness"].get<std::string>());
        CHECK(pinnacle::pinnacles_of(w) == parse_ordering(text).sequence());
    }
}

TEST_CASE("maximal subcommand") {
    CHECK(contains(run("maximal 3,6,9").output, "maximally_admissible: true"));
    CHECK(contains(run("maximal 3,5,7").output, "maximally_admissible: false"));
    CHECK(run("maximal 3,5,7 --strict").exit_code == 1);
    CHECK(run("maximal 2").exit_code == 2);
}

TEST_CASE("oracle subcommands") {
    const RunResult verify = run("oracle verify --n 6");
    CHECK(verify.exit_code == 0);
    CHECK(contains(verify.output, "0 mismatches"));

    const RunResult scan = run("oracle scan --n 7 --set 3,5,7 --format json", false);
    REQUIRE(scan.exit_code == 0);
    const nlohmann::json envelope = nlohmann::json::parse(scan.output);
    CHECK(envelope["result"]["realized"] == true);
    CHECK(envelope["result"]["orderings"].size() == 4);

    CHECK(contains(run("oracle scan --n 2").output, "no non-empty pinnacle sets"));
    CHECK(run("oracle scan --n 12").exit_code == 2);
    CHECK(run("oracle verify --n 0").exit_code == 2);
    CHECK(run("oracle").exit_code == 2);
}

TEST_CASE("csv dump through the CLI parses back") {
    const RunResult r = run("oracle scan --n 5 --dump - --keep-empty", false);
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = lines_of(r.output);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "set,ordering,count");
    long long total = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t comma = lines[i].rfind(',');
        total += std::stoll(lines[i].substr(comma + 1));
    }
    CHECK(total == 120);
}
