// pinnacle: admissibility of pinnacle sets and orderings, witness
// construction, enumeration, and the exhaustive oracle, from the shell.
//
// The subcommand handlers are thin: parse canonical forms, call the library,
// render. Exit codes: 0 success, 1 for "false" answers under --strict,
// 2 for usage/domain errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "pinnacle/core.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/text.hpp"

using nlohmann::json;
using namespace pinnacle;

namespace {

enum class Format { lines, json, csv };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return Format::lines;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

void emit_envelope(const json& input, const json& result) {
    std::cout << json{{"input", input}, {"result", result}}.dump(2) << '\n';
}

std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

json profile_json(const SlackProfile& profile) {
    json rows = json::array();
    for (const SlackEntry& e : profile.entries)
        rows.push_back({{"x", e.x},
                        {"rank", e.rank},
                        {"small_pinnacles", e.small_pinnacles},
                        {"small_nonpinnacles", e.small_nonpinnacles},
                        {"slack", e.slack}});
    return rows;
}

void print_profile_lines(const SlackProfile& profile) {
    std::cout << "profile:\n";
    std::cout << "  " << std::setw(4) << "x" << std::setw(6) << "i" << std::setw(8) << "|S_x|"
              << std::setw(10) << "|Sbar_x|" << std::setw(6) << "k_x" << '\n';
    for (const SlackEntry& e : profile.entries)
        std::cout << "  " << std::setw(4) << e.x << std::setw(6) << e.rank << std::setw(8)
                  << e.small_pinnacles << std::setw(10) << e.small_nonpinnacles << std::setw(6)
                  << e.slack << '\n';
}

json report_json(const InterruptionReport& report) {
    json rows = json::array();
    for (const InterruptionEntry& e : report.per_x)
        rows.push_back(
            {{"x", e.x}, {"allowed", e.allowed}, {"actual", e.actual}, {"violated", e.violated}});
    return rows;
}

void print_report_lines(const InterruptionReport& report) {
    std::cout << "interruptions:\n";
    std::cout << "  " << std::setw(4) << "x" << std::setw(9) << "allowed" << std::setw(8)
              << "actual" << std::setw(10) << "violated" << '\n';
    for (const InterruptionEntry& e : report.per_x)
        std::cout << "  " << std::setw(4) << e.x << std::setw(9) << e.allowed << std::setw(8)
                  << e.actual << std::setw(10) << yes_no(e.violated) << '\n';
}

int cmd_check_set(const std::string& set_arg, bool show_profile, bool show_maximal, Format format,
                  bool strict) {
    const PinnacleSet s = text::parse_set(set_arg);
    const bool admissible = is_admissible_set(s);
    const SlackProfile profile = k_profile(s);
    std::optional<bool> maximal;
    if (show_maximal && admissible) maximal = is_maximally_admissible(s);

    switch (format) {
        case Format::json: {
            json result{{"admissible", admissible}};
            if (show_profile) result["profile"] = profile_json(profile);
            if (show_maximal) result["maximally_admissible"] = maximal ? json(*maximal) : json();
            emit_envelope({{"command", "check-set"},
                           {"set", text::format_set(s)},
                           {"profile", show_profile},
                           {"maximal", show_maximal}},
                          result);
            break;
        }
        case Format::csv: {
            std::cout << "x,rank,small_pinnacles,small_nonpinnacles,slack\n";
            for (const SlackEntry& e : profile.entries)
                std::cout << e.x << ',' << e.rank << ',' << e.small_pinnacles << ','
                          << e.small_nonpinnacles << ',' << e.slack << '\n';
            break;
        }
        case Format::lines: {
            std::cout << "set: " << text::format_set(s) << '\n';
            std::cout << "admissible: " << true_false(admissible) << '\n';
            if (show_profile) print_profile_lines(profile);
            if (show_maximal) {
                if (maximal)
                    std::cout << "maximally_admissible: " << true_false(*maximal) << '\n';
                else
                    std::cout << "maximally_admissible: n/a (set not admissible)\n";
            }
            break;
        }
    }
    return strict && !admissible ? 1 : 0;
}

int cmd_check_ordering(const std::string& ordering_arg, bool reduced, bool want_witness,
                       Format format, bool strict) {
    const PinnacleOrdering a = text::parse_ordering(ordering_arg);
    const InterruptionReport report = interruption_report(a);  // exits 2 for inadmissible sets
    const bool admissible = reduced ? is_admissible_ordering_reduced(a) : report.admissible;
    std::optional<std::string> witness;
    if (want_witness && admissible)
        witness = text::format_permutation(construct_witness(a));

    switch (format) {
        case Format::json: {
            json result{{"admissible", admissible},
                        {"checker", reduced ? "reduced" : "full"},
                        {"report", report_json(report)}};
            if (want_witness) result["witness"] = witness ? json(*witness) : json();
            emit_envelope({{"command", "check-ordering"},
                           {"ordering", text::format_ordering(a)},
                           {"set", text::format_set(a.base())},
                           {"reduced", reduced},
                           {"witness", want_witness}},
                          result);
            break;
        }
        case Format::csv: {
            std::cout << "x,allowed,actual,violated\n";
            for (const InterruptionEntry& e : report.per_x)
                std::cout << e.x << ',' << e.allowed << ',' << e.actual << ','
                          << true_false(e.violated) << '\n';
            break;
        }
        case Format::lines: {
            std::cout << "ordering: " << text::format_ordering(a) << '\n';
            std::cout << "set: " << text::format_set(a.base()) << '\n';
            std::cout << "admissible: " << true_false(admissible) << '\n';
            std::cout << "checker: " << (reduced ? "reduced" : "full") << '\n';
            print_report_lines(report);
            if (want_witness) {
                if (witness)
                    std::cout << "witness: " << *witness << '\n';
                else
                    std::cout << "witness: n/a (ordering not admissible)\n";
            }
            break;
        }
    }
    return strict && !admissible ? 1 : 0;
}

int cmd_orderings(const std::string& set_arg, bool count_only, Format format) {
    const PinnacleSet s = text::parse_set(set_arg);
    if (count_only) {
        const std::uint64_t count = count_admissible_orderings(s);
        switch (format) {
            case Format::json:
                emit_envelope(
                    {{"command", "orderings"}, {"set", text::format_set(s)}, {"count_only", true}},
                    {{"count", count}});
                break;
            case Format::csv:
                std::cout << "count\n" << count << '\n';
                break;
            case Format::lines:
                std::cout << count << '\n';
                break;
        }
        return 0;
    }

    switch (format) {
        case Format::json: {
            json orderings = json::array();
            for_each_admissible_ordering(s, [&orderings](const PinnacleOrdering& a) {
                orderings.push_back(text::format_ordering(a));
            });
            emit_envelope(
                {{"command", "orderings"}, {"set", text::format_set(s)}, {"count_only", false}},
                {{"orderings", orderings}, {"count", orderings.size()}});
            break;
        }
        case Format::csv:
            std::cout << "ordering\n";
            for_each_admissible_ordering(s, [](const PinnacleOrdering& a) {
                std::cout << csv_quote(text::format_ordering(a)) << '\n';
            });
            break;
        case Format::lines:
            for_each_admissible_ordering(
                s, [](const PinnacleOrdering& a) { std::cout << text::format_ordering(a) << '\n'; });
            break;
    }
    return 0;
}

int cmd_maximal(const std::string& set_arg, Format format, bool strict) {
    const PinnacleSet s = text::parse_set(set_arg);
    const bool maximal = is_maximally_admissible(s);  // exits 2 for inadmissible sets
    switch (format) {
        case Format::json:
            emit_envelope({{"command", "maximal"}, {"set", text::format_set(s)}},
                          {{"maximally_admissible", maximal}});
            break;
        case Format::csv:
            std::cout << "maximally_admissible\n" << true_false(maximal) << '\n';
            break;
        case Format::lines:
            std::cout << "set: " << text::format_set(s) << '\n';
            std::cout << "maximally_admissible: " << true_false(maximal) << '\n';
            break;
    }
    return strict && !maximal ? 1 : 0;
}

int cmd_oracle_verify(int n, Format format, bool strict) {
    const oracle::VerifyReport report = oracle::verify_against_core(n);
    switch (format) {
        case Format::json: {
            json mismatches = json::array();
            for (const oracle::VerifyMismatch& m : report.mismatches)
                mismatches.push_back({{"set", text::format_set(m.set)}, {"detail", m.detail}});
            emit_envelope({{"command", "oracle verify"}, {"n", n}},
                          {{"n", report.n},
                           {"sets_checked", report.sets_checked},
                           {"orderings_checked", report.orderings_checked},
                           {"witnesses_checked", report.witnesses_checked},
                           {"mismatches", mismatches}});
            break;
        }
        case Format::csv:
            std::cout << "set,detail\n";
            for (const oracle::VerifyMismatch& m : report.mismatches)
                std::cout << csv_quote(text::format_set(m.set)) << ',' << csv_quote(m.detail)
                          << '\n';
            break;
        case Format::lines:
            std::cout << "n: " << report.n << '\n';
            std::cout << "sets checked: " << report.sets_checked << '\n';
            std::cout << "orderings checked: " << report.orderings_checked << '\n';
            std::cout << "witnesses checked: " << report.witnesses_checked << '\n';
            std::cout << report.mismatches.size() << " mismatches\n";
            for (const oracle::VerifyMismatch& m : report.mismatches)
                std::cout << "  {" << text::format_set(m.set) << "}: " << m.detail << '\n';
            break;
    }
    return strict && !report.ok() ? 1 : 0;
}

int cmd_oracle_scan(int n, const std::string& set_arg, const std::string& dump_path,
                    bool keep_empty, Format format) {
    oracle::ScanOptions options;
    options.keep_empty_set = keep_empty;
    const oracle::OracleScan sc = oracle::scan(n, options);

    if (!dump_path.empty()) {
        std::uint64_t rows = 0;
        for (const auto& [set, ordmap] : sc.by_set) rows += ordmap.size();
        if (dump_path == "-") {
            oracle::dump_csv(sc, std::cout);
        } else {
            std::ofstream out(dump_path);
            if (!out) throw std::invalid_argument("cannot open dump file: " + dump_path);
            oracle::dump_csv(sc, out);
            if (format == Format::json)
                emit_envelope({{"command", "oracle scan"}, {"n", n}, {"dump", dump_path}},
                              {{"rows", rows}, {"dumped_to", dump_path}});
            else
                std::cout << "wrote " << rows << " rows to " << dump_path << '\n';
        }
        return 0;
    }

    if (!set_arg.empty()) {
        const PinnacleSet s = text::parse_set(set_arg);
        const bool realized = sc.contains(s);
        switch (format) {
            case Format::json: {
                json orderings = json::array();
                if (realized)
                    for (const auto& [ordering, count] : sc.by_set.at(s))
                        orderings.push_back(
                            {{"ordering", text::format_ordering(ordering)}, {"count", count}});
                emit_envelope(
                    {{"command", "oracle scan"}, {"n", n}, {"set", text::format_set(s)}},
                    {{"n", n}, {"set", text::format_set(s)}, {"realized", realized},
                     {"orderings", orderings}});
                break;
            }
            case Format::csv:
                std::cout << "set,ordering,count\n";
                if (realized)
                    for (const auto& [ordering, count] : sc.by_set.at(s))
                        std::cout << csv_quote(text::format_set(s)) << ','
                                  << csv_quote(text::format_ordering(ordering)) << ',' << count
                                  << '\n';
                break;
            case Format::lines:
                std::cout << "n: " << n << '\n';
                std::cout << "set: " << text::format_set(s) << '\n';
                std::cout << "realized: " << true_false(realized) << '\n';
                if (realized) {
                    std::cout << "orderings:\n";
                    for (const auto& [ordering, count] : sc.by_set.at(s))
                        std::cout << "  " << text::format_ordering(ordering) << "  " << count
                                  << '\n';
                }
                break;
        }
        return 0;
    }

    // Summary of the whole level.
    switch (format) {
        case Format::json: {
            json sets = json::array();
            for (const auto& [set, ordmap] : sc.by_set) {
                std::uint64_t perms = 0;
                for (const auto& [ordering, count] : ordmap) perms += count;
                sets.push_back({{"set", text::format_set(set)},
                                {"orderings", ordmap.size()},
                                {"permutations", perms}});
            }
            emit_envelope({{"command", "oracle scan"}, {"n", n}},
                          {{"n", n}, {"total_permutations", sc.total_count}, {"sets", sets}});
            break;
        }
        case Format::csv:
            std::cout << "set,orderings,permutations\n";
            for (const auto& [set, ordmap] : sc.by_set) {
                std::uint64_t perms = 0;
                for (const auto& [ordering, count] : ordmap) perms += count;
                std::cout << csv_quote(text::format_set(set)) << ',' << ordmap.size() << ','
                          << perms << '\n';
            }
            break;
        case Format::lines:
            std::cout << "n: " << n << '\n';
            std::cout << "total permutations: " << sc.total_count << '\n';
            std::cout << "sets: " << sc.by_set.size() << '\n';
            if (sc.by_set.empty()) {
                std::cout << "no non-empty pinnacle sets\n";
            } else {
                for (const auto& [set, ordmap] : sc.by_set) {
                    std::uint64_t perms = 0;
                    for (const auto& [ordering, count] : ordmap) perms += count;
                    const std::string name = set.empty() ? "(empty)" : text::format_set(set);
                    std::cout << "  " << name << "  " << ordmap.size() << " orderings  " << perms
                              << " permutations\n";
                }
            }
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissible pinnacle sets and orderings"};
    app.require_subcommand(1);

    std::string format_name = "lines";
    bool strict = false;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"lines", "json", "csv"}));
    app.add_flag("--strict", strict, "exit 1 on false/rejected answers");

    auto* check_set = app.add_subcommand("check-set", "decide admissibility of a pinnacle set");
    check_set->fallthrough();
    std::string set_arg;
    bool show_profile = false;
    bool show_maximal = false;
    check_set->add_option("set", set_arg, "comma-separated, strictly increasing")->required();
    check_set->add_flag("--profile", show_profile, "print the slack profile");
    check_set->add_flag("--maximal", show_maximal, "also test maximal admissibility");

    auto* check_ordering =
        app.add_subcommand("check-ordering", "decide admissibility of a pinnacle ordering");
    check_ordering->fallthrough();
    std::string ordering_arg;
    bool reduced = false;
    bool want_witness = false;
    check_ordering->add_option("ordering", ordering_arg, "comma-separated arrangement")->required();
    check_ordering->add_flag("--reduced", reduced, "use the redundancy-free check");
    check_ordering->add_flag("--witness", want_witness, "emit a witness permutation if admissible");

    auto* orderings =
        app.add_subcommand("orderings", "enumerate admissible orderings of a pinnacle set");
    orderings->fallthrough();
    std::string orderings_set_arg;
    bool count_only = false;
    orderings->add_option("set", orderings_set_arg, "comma-separated, strictly increasing")
        ->required();
    orderings->add_flag("--count-only", count_only, "print only the count");

    auto* maximal = app.add_subcommand("maximal", "test whether every ordering is admissible");
    maximal->fallthrough();
    std::string maximal_set_arg;
    maximal->add_option("set", maximal_set_arg, "comma-separated, strictly increasing")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth over S_n");
    oracle_cmd->fallthrough();
    oracle_cmd->require_subcommand(1);

    auto* verify = oracle_cmd->add_subcommand("verify", "cross-check the scan against the library");
    verify->fallthrough();
    int verify_n = 0;
    verify->add_option("--n", verify_n, "universe size, 1..11")->required();

    auto* scan = oracle_cmd->add_subcommand("scan", "census of pinnacle sets and orderings");
    scan->fallthrough();
    int scan_n = 0;
    std::string scan_set_arg;
    std::string dump_path;
    bool keep_empty = false;
    scan->add_option("--n", scan_n, "universe size, 1..11")->required();
    scan->add_option("--set", scan_set_arg, "restrict output to one set");
    scan->add_option("--dump", dump_path, "write the full census as CSV (\"-\" for stdout)");
    scan->add_flag("--keep-empty", keep_empty, "retain the empty pinnacle set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (*check_set)
            return cmd_check_set(set_arg, show_profile, show_maximal, format, strict);
        if (*check_ordering)
            return cmd_check_ordering(ordering_arg, reduced, want_witness, format, strict);
        if (*orderings) return cmd_orderings(orderings_set_arg, count_only, format);
        if (*maximal) return cmd_maximal(maximal_set_arg, format, strict);
        if (*verify) return cmd_oracle_verify(verify_n, format, strict);
        if (*scan) return cmd_oracle_scan(scan_n, scan_set_arg, dump_path, keep_empty, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable: require_subcommand guarantees a branch
}
