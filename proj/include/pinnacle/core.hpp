#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pinnacle {

/// Strictly increasing set of candidate pinnacle values.
///
/// Admissibility is a computed property (see is_admissible_set), so
/// inadmissible sets are representable on purpose.
class PinnacleSet {
public:
    PinnacleSet() = default;
    explicit PinnacleSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    int max() const;
    bool contains(int x) const;

    auto operator<=>(const PinnacleSet&) const = default;

private:
    std::vector<int> elements_;
};

/// A left-to-right arrangement of the elements of a PinnacleSet.
class PinnacleOrdering {
public:
    PinnacleOrdering() = default;
    explicit PinnacleOrdering(std::vector<int> sequence);
    PinnacleOrdering(std::vector<int> sequence, PinnacleSet base);

    const std::vector<int>& sequence() const { return sequence_; }
    const PinnacleSet& base() const { return base_; }
    int size() const { return static_cast<int>(sequence_.size()); }
    bool empty() const { return sequence_.empty(); }

    auto operator<=>(const PinnacleOrdering&) const = default;

private:
    std::vector<int> sequence_;
    PinnacleSet base_;
};

/// Permutation of [1..n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

struct SlackEntry {
    int x = 0;                   // element of S
    int rank = 0;                // 1-based index of x in sorted S
    int small_pinnacles = 0;     // |S_x|, elements of S that are <= x
    int small_nonpinnacles = 0;  // |Sbar_x|, non-elements of [1,x]
    int slack = 0;               // k_x; negative exactly when x breaks admissibility
};

/// Per-element slack values k_x = |Sbar_x| - |S_x| - 1 = x - 2|S_x| - 1.
struct SlackProfile {
    std::vector<SlackEntry> entries;

    bool all_nonnegative() const;
    std::vector<int> slacks() const;
};

struct InterruptionEntry {
    int x = 0;
    int allowed = 0;  // k_x
    int actual = 0;   // interruptions of S_x in the ordering
    bool violated = false;
};

/// Outcome of checking every S_x against its slack in a given ordering.
struct InterruptionReport {
    std::vector<InterruptionEntry> per_x;
    bool admissible = true;
};

/// Thrown by operations whose precondition requires an admissible base set.
class InadmissibleSetError : public std::domain_error {
public:
    explicit InadmissibleSetError(PinnacleSet set);
    const PinnacleSet& set() const { return set_; }

private:
    PinnacleSet set_;
};

/// Thrown when a witness is requested for an ordering that fails the
/// interruption bounds; carries the offending report.
class InadmissibleOrderingError : public std::domain_error {
public:
    InadmissibleOrderingError(const PinnacleOrdering& ordering, InterruptionReport report);
    const InterruptionReport& report() const { return report_; }

private:
    InterruptionReport report_;
};

/// Values sitting at peaks of w, in left-to-right position order.
std::vector<int> pinnacles_of(const Permutation& w);

/// Values sitting at valleys of w, in left-to-right position order.
std::vector<int> vales_of(const Permutation& w);

SlackProfile k_profile(const PinnacleSet& s);

/// True iff |S_x| < x/2 for every x in S. The empty set is admissible.
bool is_admissible_set(const PinnacleSet& s);

/// Recursive characterization: S is admissible iff S \ {max} is admissible
/// and max > 2|S|. Agrees with is_admissible_set on every input.
bool is_admissible_set_recursive(const PinnacleSet& s);

/// Number of times T is interrupted in A: write A as a0 t1 a1 ... tk ak with
/// t_i maximal runs of T-elements; the answer is k - 1. Empty T counts as 0.
/// Throws std::domain_error if T is not a subset of A's base set.
int interruption_count(const PinnacleSet& t, const PinnacleOrdering& a);

/// Compares the interruptions of every S_x in A against the slack k_x.
/// Throws InadmissibleSetError when A's base set is not admissible.
InterruptionReport interruption_report(const PinnacleOrdering& a);

bool is_admissible_ordering(const PinnacleOrdering& a);

/// Elements x_i of S whose interruption bound actually needs checking:
/// ranks 1 < i < p with x_i < min{p+i+1, 3i} and x_{i-1}+2 >= x_i <= x_{i+1}-2.
std::vector<int> reduced_check_positions(const PinnacleSet& s);

/// Same verdict as is_admissible_ordering, testing only the non-redundant
/// positions from reduced_check_positions.
bool is_admissible_ordering_reduced(const PinnacleOrdering& a);

/// Builds a permutation of [1..max S] whose pinnacles appear exactly in the
/// order A. Vale slots between the pinnacles are filled with the smallest
/// non-pinnacles, tightest slot first (ties left to right); leftover
/// non-pinnacles form a decreasing prefix. Throws InadmissibleOrderingError
/// if A fails the interruption bounds.
Permutation construct_witness(const PinnacleOrdering& a);

/// Streams the admissible orderings of S in lexicographic sequence order.
/// Backtracks over prefixes, abandoning a prefix as soon as some S_x already
/// exceeds k_x interruptions among its fully placed runs.
void for_each_admissible_ordering(const PinnacleSet& s,
                                  const std::function<void(const PinnacleOrdering&)>& visit);

std::vector<PinnacleOrdering> enumerate_admissible_orderings(const PinnacleSet& s);

/// Count by pruned enumeration; practical up to roughly 10 elements.
std::uint64_t count_admissible_orderings(const PinnacleSet& s);

/// True iff every ordering of S is admissible: x_i >= min{p+i+1, 3i} for all
/// ranks 1 < i < p.
bool is_maximally_admissible(const PinnacleSet& s);

}  // namespace pinnacle
