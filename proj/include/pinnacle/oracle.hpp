#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pinnacle/core.hpp"

namespace pinnacle::oracle {

/// 11! is just under 4e7 permutations; beyond that the scan stops being a
/// quick ground truth.
inline constexpr int kMaxScanN = 11;

struct ScanOptions {
    bool keep_empty_set = false;  // retain the empty pinnacle set (for count conservation)
    unsigned threads = 0;         // 0 = hardware concurrency
};

/// Exhaustive census of S_n: realization counts per pinnacle set and per
/// pinnacle ordering. Immutable once built; freely shareable.
struct OracleScan {
    int n = 0;
    std::uint64_t total_count = 0;  // permutations scanned, always n!
    std::map<PinnacleSet, std::map<PinnacleOrdering, std::uint64_t>> by_set;

    bool contains(const PinnacleSet& s) const { return by_set.count(s) != 0; }
    std::uint64_t recorded_count() const;  // sum of stored counts
};

/// Scans all n! permutations of [1..n]. The result is deterministic and
/// independent of the worker count; workers take disjoint first-element
/// blocks and their tallies merge commutatively.
/// Throws std::domain_error when n is outside [1, kMaxScanN].
OracleScan scan(int n, const ScanOptions& options = {});

/// Pinnacle sets realized by at least one scanned permutation.
std::vector<PinnacleSet> oracle_admissible_sets(const OracleScan& sc, bool include_empty = false);

/// Orderings of S with positive realization count; empty when S was never
/// realized (use OracleScan::contains to tell the cases apart).
std::vector<PinnacleOrdering> oracle_orderings(const OracleScan& sc, const PinnacleSet& s);

struct VerifyMismatch {
    PinnacleSet set;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    std::uint64_t sets_checked = 0;
    std::uint64_t orderings_checked = 0;
    std::uint64_t witnesses_checked = 0;
    std::vector<VerifyMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Cross-validates the theorem-based operations against the exhaustive scan
/// at level n: every realized set with max = n must be admissible, its
/// realized orderings must equal the pruned enumeration, every enumerated
/// ordering's witness must realize it, and every admissible set with max = n
/// must be realized. An empty mismatch list is the expected outcome.
VerifyReport verify_against_core(int n, const ScanOptions& options = {});

/// CSV rows (set, ordering, count) in canonical textual forms, sorted
/// lexicographically by the (set, ordering) strings. Fields holding
/// comma-separated forms are double-quoted.
void dump_csv(const OracleScan& sc, std::ostream& out);

}  // namespace pinnacle::oracle
