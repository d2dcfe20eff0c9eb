#include "pinnacle/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "pinnacle/text.hpp"

namespace pinnacle::oracle {

namespace {

constexpr std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// A pinnacle sequence at n <= 11 has at most 5 values, each in [1,11]:
// pack as 4-bit nibbles, low position first. 0 terminates.
std::uint64_t encode_sequence(const int* values, int count) {
    std::uint64_t code = 0;
    for (int i = 0; i < count; ++i)
        code |= static_cast<std::uint64_t>(values[i]) << (4 * i);
    return code;
}

std::vector<int> decode_sequence(std::uint64_t code) {
    std::vector<int> out;
    while (code != 0) {
        out.push_back(static_cast<int>(code & 0xF));
        code >>= 4;
    }
    return out;
}

using CodeCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

// All permutations of [1..n] with a fixed first value.
void scan_block(int n, int first, CodeCounts& counts) {
    std::vector<int> word(static_cast<std::size_t>(n));
    word[0] = first;
    std::size_t at = 1;
    for (int v = 1; v <= n; ++v)
        if (v != first) word[at++] = v;

    int pins[16];
    do {
        int np = 0;
        for (int i = 1; i + 1 < n; ++i)
            if (word[static_cast<std::size_t>(i - 1)] < word[static_cast<std::size_t>(i)] &&
                word[static_cast<std::size_t>(i)] > word[static_cast<std::size_t>(i + 1)])
                pins[np++] = word[static_cast<std::size_t>(i)];
        ++counts[encode_sequence(pins, np)];
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace

std::uint64_t OracleScan::recorded_count() const {
    std::uint64_t sum = 0;
    for (const auto& [set, orderings] : by_set)
        for (const auto& [ordering, count] : orderings) sum += count;
    return sum;
}

OracleScan scan(int n, const ScanOptions& options) {
    if (n < 1 || n > kMaxScanN)
        throw std::domain_error("oracle scan supports 1 <= n <= " + std::to_string(kMaxScanN) +
                                ", got " + std::to_string(n));

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min(threads, static_cast<unsigned>(n));

    std::vector<CodeCounts> partials(threads);
    if (threads == 1) {
        for (int first = 1; first <= n; ++first) scan_block(n, first, partials[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&partials, n, t, threads] {
                for (int first = 1 + static_cast<int>(t); first <= n;
                     first += static_cast<int>(threads))
                    scan_block(n, first, partials[t]);
            });
        }
        for (auto& w : workers) w.join();
    }

    CodeCounts merged;
    std::uint64_t seen = 0;
    for (const CodeCounts& part : partials) {
        for (const auto& [code, count] : part) {
            merged[code] += count;
            seen += count;
        }
    }
    if (seen != factorial(n))
        throw std::logic_error("oracle scan lost permutations");  // unreachable

    OracleScan result;
    result.n = n;
    result.total_count = seen;
    for (const auto& [code, count] : merged) {
        std::vector<int> sequence = decode_sequence(code);
        if (sequence.empty() && !options.keep_empty_set) continue;
        std::vector<int> sorted = sequence;
        std::sort(sorted.begin(), sorted.end());
        PinnacleSet set(std::move(sorted));
        result.by_set[set].emplace(PinnacleOrdering(std::move(sequence), set), count);
    }
    return result;
}

std::vector<PinnacleSet> oracle_admissible_sets(const OracleScan& sc, bool include_empty) {
    std::vector<PinnacleSet> out;
    out.reserve(sc.by_set.size());
    for (const auto& [set, orderings] : sc.by_set) {
        if (set.empty() && !include_empty) continue;
        out.push_back(set);
    }
    return out;
}

std::vector<PinnacleOrdering> oracle_orderings(const OracleScan& sc, const PinnacleSet& s) {
    std::vector<PinnacleOrdering> out;
    const auto it = sc.by_set.find(s);
    if (it == sc.by_set.end()) return out;
    out.reserve(it->second.size());
    for (const auto& [ordering, count] : it->second) out.push_back(ordering);
    return out;
}

VerifyReport verify_against_core(int n, const ScanOptions& options) {
    const OracleScan sc = scan(n, options);
    VerifyReport report;
    report.n = n;

    for (const auto& [set, ordmap] : sc.by_set) {
        if (set.empty() || set.max() != n) continue;
        ++report.sets_checked;

        if (!is_admissible_set(set)) {
            report.mismatches.push_back(
                {set, "realized by the scan but rejected by is_admissible_set"});
            continue;
        }

        // Both sides come out in lexicographic sequence order.
        const std::vector<PinnacleOrdering> expected = enumerate_admissible_orderings(set);
        std::vector<PinnacleOrdering> realized;
        realized.reserve(ordmap.size());
        for (const auto& [ordering, count] : ordmap) realized.push_back(ordering);

        if (realized != expected) {
            for (const auto& a : realized)
                if (!std::binary_search(expected.begin(), expected.end(), a))
                    report.mismatches.push_back(
                        {set, "ordering (" + text::format_ordering(a) +
                                  ") realized by the scan but not enumerated"});
            for (const auto& a : expected)
                if (!std::binary_search(realized.begin(), realized.end(), a))
                    report.mismatches.push_back(
                        {set, "ordering (" + text::format_ordering(a) +
                                  ") enumerated but never realized by the scan"});
        }
        report.orderings_checked += expected.size();

        for (const auto& a : expected) {
            Permutation w = construct_witness(a);
            ++report.witnesses_checked;
            if (w.size() != n || pinnacles_of(w) != a.sequence())
                report.mismatches.push_back(
                    {set, "witness " + text::format_permutation(w) +
                              " does not realize the ordering (" + text::format_ordering(a) + ")"});
        }
    }

    // Completeness: every admissible set topped by n must appear in the scan.
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::vector<int> elems;
        for (int v = 1; v < n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) elems.push_back(v);
        elems.push_back(n);
        PinnacleSet set(std::move(elems));
        if (is_admissible_set(set) && !sc.contains(set))
            report.mismatches.push_back({set, "admissible per core but never realized by the scan"});
    }

    return report;
}

void dump_csv(const OracleScan& sc, std::ostream& out) {
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows;
    for (const auto& [set, ordmap] : sc.by_set)
        for (const auto& [ordering, count] : ordmap)
            rows.emplace_back(text::format_set(set), text::format_ordering(ordering), count);
    std::sort(rows.begin(), rows.end());

    out << "set,ordering,count\n";
    for (const auto& [set, ordering, count] : rows)
        out << '"' << set << "\",\"" << ordering << "\"," << count << '\n';
}

}  // namespace pinnacle::oracle
