#include "pinnacle/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pinnacle {

namespace {

std::string join_csv(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

PinnacleSet::PinnacleSet(std::vector<int> elements) : elements_(std::move(elements)) {
    int prev = 0;
    for (int x : elements_) {
        if (x < 1)
            throw std::invalid_argument("pinnacle set elements must be positive, got " +
                                        std::to_string(x));
        if (x <= prev)
            throw std::invalid_argument("pinnacle set elements must be strictly increasing, got " +
                                        std::to_string(x) + " after " + std::to_string(prev));
        prev = x;
    }
}

int PinnacleSet::max() const {
    if (elements_.empty()) throw std::logic_error("max of an empty pinnacle set");
    return elements_.back();
}

bool PinnacleSet::contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

PinnacleOrdering::PinnacleOrdering(std::vector<int> sequence) : sequence_(std::move(sequence)) {
    std::vector<int> sorted = sequence_;
    std::sort(sorted.begin(), sorted.end());
    base_ = PinnacleSet(std::move(sorted));  // rejects duplicates and non-positive entries
}

PinnacleOrdering::PinnacleOrdering(std::vector<int> sequence, PinnacleSet base)
    : sequence_(std::move(sequence)), base_(std::move(base)) {
    std::vector<int> sorted = sequence_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != base_.elements())
        throw std::invalid_argument("ordering " + join_csv(sequence_) +
                                    " is not an arrangement of its base set " +
                                    join_csv(base_.elements()));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("word is not a permutation of [1.." + std::to_string(n) +
                                        "]: offending value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

bool SlackProfile::all_nonnegative() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const SlackEntry& e) { return e.slack >= 0; });
}

std::vector<int> SlackProfile::slacks() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const SlackEntry& e : entries) out.push_back(e.slack);
    return out;
}

InadmissibleSetError::InadmissibleSetError(PinnacleSet set)
    : std::domain_error("set {" + join_csv(set.elements()) + "} is not an admissible pinnacle set"),
      set_(std::move(set)) {}

namespace {

std::string describe_violations(const PinnacleOrdering& ordering, const InterruptionReport& report) {
    std::string msg = "ordering (" + join_csv(ordering.sequence()) + ") is not admissible:";
    for (const InterruptionEntry& e : report.per_x) {
        if (!e.violated) continue;
        msg += " S_" + std::to_string(e.x) + " interrupted " + std::to_string(e.actual) +
               " times (allowed " + std::to_string(e.allowed) + ");";
    }
    return msg;
}

}  // namespace

InadmissibleOrderingError::InadmissibleOrderingError(const PinnacleOrdering& ordering,
                                                     InterruptionReport report)
    : std::domain_error(describe_violations(ordering, report)), report_(std::move(report)) {}

std::vector<int> pinnacles_of(const Permutation& w) {
    const auto& word = w.word();
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < word.size(); ++i)
        if (word[i - 1] < word[i] && word[i] > word[i + 1]) out.push_back(word[i]);
    return out;
}

std::vector<int> vales_of(const Permutation& w) {
    const auto& word = w.word();
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < word.size(); ++i)
        if (word[i - 1] > word[i] && word[i] < word[i + 1]) out.push_back(word[i]);
    return out;
}

SlackProfile k_profile(const PinnacleSet& s) {
    SlackProfile profile;
    profile.entries.reserve(static_cast<std::size_t>(s.size()));
    int rank = 0;
    for (int x : s.elements()) {
        ++rank;
        SlackEntry e;
        e.x = x;
        e.rank = rank;
        e.small_pinnacles = rank;         // |S_x| = rank of x within S
        e.small_nonpinnacles = x - rank;  // |S_x| + |Sbar_x| = x
        e.slack = x - 2 * rank - 1;
        profile.entries.push_back(e);
    }
    return profile;
}

bool is_admissible_set(const PinnacleSet& s) {
    int rank = 0;
    for (int x : s.elements()) {
        ++rank;
        if (2 * rank >= x) return false;  // |S_x| < x/2 fails
    }
    return true;
}

bool is_admissible_set_recursive(const PinnacleSet& s) {
    if (s.empty()) return true;
    if (s.max() <= 2 * s.size()) return false;
    std::vector<int> rest(s.elements().begin(), s.elements().end() - 1);
    return is_admissible_set_recursive(PinnacleSet(std::move(rest)));
}

namespace {

// Runs of sequence elements satisfying `member`, minus one; 0 when no run.
template <typename Member>
int interruptions(const std::vector<int>& sequence, Member member) {
    int runs = 0;
    bool in_run = false;
    for (int v : sequence) {
        const bool m = member(v);
        if (m && !in_run) ++runs;
        in_run = m;
    }
    return runs <= 1 ? 0 : runs - 1;
}

}  // namespace

int interruption_count(const PinnacleSet& t, const PinnacleOrdering& a) {
    for (int x : t.elements())
        if (!a.base().contains(x))
            throw std::domain_error("interruption_count: " + std::to_string(x) +
                                    " is not in the ordering's base set");
    if (t.empty()) return 0;
    return interruptions(a.sequence(), [&t](int v) { return t.contains(v); });
}

InterruptionReport interruption_report(const PinnacleOrdering& a) {
    const PinnacleSet& s = a.base();
    if (!is_admissible_set(s)) throw InadmissibleSetError(s);
    InterruptionReport report;
    report.per_x.reserve(static_cast<std::size_t>(s.size()));
    for (const SlackEntry& e : k_profile(s).entries) {
        InterruptionEntry entry;
        entry.x = e.x;
        entry.allowed = e.slack;
        entry.actual = interruptions(a.sequence(), [&e](int v) { return v <= e.x; });
        entry.violated = entry.actual > entry.allowed;
        if (entry.violated) report.admissible = false;
        report.per_x.push_back(entry);
    }
    return report;
}

bool is_admissible_ordering(const PinnacleOrdering& a) {
    return interruption_report(a).admissible;
}

std::vector<int> reduced_check_positions(const PinnacleSet& s) {
    const auto& xs = s.elements();
    const int p = s.size();
    std::vector<int> out;
    for (int i = 2; i < p; ++i) {  // 1-based rank, 1 < i < p
        const int x = xs[static_cast<std::size_t>(i - 1)];
        if (x >= std::min(p + i + 1, 3 * i)) continue;
        if (xs[static_cast<std::size_t>(i - 2)] + 2 < x) continue;
        if (x > xs[static_cast<std::size_t>(i)] - 2) continue;
        out.push_back(x);
    }
    return out;
}

bool is_admissible_ordering_reduced(const PinnacleOrdering& a) {
    const PinnacleSet& s = a.base();
    if (!is_admissible_set(s)) throw InadmissibleSetError(s);
    const auto& xs = s.elements();
    for (int x : reduced_check_positions(s)) {
        const auto it = std::lower_bound(xs.begin(), xs.end(), x);
        const int rank = static_cast<int>(it - xs.begin()) + 1;
        const int allowed = x - 2 * rank - 1;
        const int actual = interruptions(a.sequence(), [x](int v) { return v <= x; });
        if (actual > allowed) return false;
    }
    return true;
}

Permutation construct_witness(const PinnacleOrdering& a) {
    InterruptionReport report = interruption_report(a);
    if (!report.admissible) throw InadmissibleOrderingError(a, std::move(report));
    if (a.empty()) return Permutation(std::vector<int>{});

    const auto& seq = a.sequence();
    const std::size_t p = seq.size();
    const int m = a.base().max();

    // Vale slot j sits left of the j-th pinnacle; slot p is the right end.
    // A slot's value must stay below the smaller of its adjacent pinnacles.
    std::vector<int> bound(p + 1);
    bound[0] = seq.front();
    bound[p] = seq.back();
    for (std::size_t j = 1; j < p; ++j) bound[j] = std::min(seq[j - 1], seq[j]);

    std::vector<std::size_t> order(p + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&bound](std::size_t l, std::size_t r) { return bound[l] < bound[r]; });

    std::vector<int> nonpinnacles;  // Sbar, ascending
    nonpinnacles.reserve(static_cast<std::size_t>(m) - p);
    for (int v = 1; v <= m; ++v)
        if (!a.base().contains(v)) nonpinnacles.push_back(v);

    std::vector<int> vale(p + 1);
    std::size_t next = 0;
    for (std::size_t slot : order) {
        const int v = nonpinnacles[next++];
        // Unreachable for admissible orderings; the interruption bounds
        // guarantee enough small non-pinnacles for every prefix of slots.
        if (v >= bound[slot])
            throw std::logic_error("construct_witness: vale " + std::to_string(v) +
                                   " does not fit below bound " + std::to_string(bound[slot]));
        vale[slot] = v;
    }

    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = nonpinnacles.size(); i > next; --i)  // leftovers, decreasing prefix
        word.push_back(nonpinnacles[i - 1]);
    for (std::size_t j = 0; j < p; ++j) {
        word.push_back(vale[j]);
        word.push_back(seq[j]);
    }
    word.push_back(vale[p]);
    return Permutation(std::move(word));
}

namespace {

void enumerate_orderings_impl(const PinnacleSet& s,
                              const std::function<void(const std::vector<int>&)>& yield) {
    const auto& xs = s.elements();
    const int p = s.size();
    std::vector<int> seq;
    if (p == 0) {
        yield(seq);
        return;
    }
    seq.reserve(static_cast<std::size_t>(p));

    std::vector<int> slack(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        slack[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i)] - 2 * (i + 1) - 1;

    // run_count[i] = maximal runs of S_{x_i}-elements in the current prefix.
    // Appending x_j after x_q starts a new run of S_{x_i} exactly for the
    // ranks j <= i < q (all i >= j when the prefix was empty).
    std::vector<int> run_count(static_cast<std::size_t>(p), 0);
    std::vector<char> used(static_cast<std::size_t>(p), 0);

    auto place = [&](auto&& self, int prev) -> void {
        if (static_cast<int>(seq.size()) == p) {
            yield(seq);
            return;
        }
        for (int j = 0; j < p; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const int hi = prev < 0 ? p : prev;
            bool dead = false;
            for (int i = j; i < hi; ++i) {
                ++run_count[static_cast<std::size_t>(i)];
                if (run_count[static_cast<std::size_t>(i)] - 1 > slack[static_cast<std::size_t>(i)])
                    dead = true;
            }
            if (!dead) {
                used[static_cast<std::size_t>(j)] = 1;
                seq.push_back(xs[static_cast<std::size_t>(j)]);
                self(self, j);
                seq.pop_back();
                used[static_cast<std::size_t>(j)] = 0;
            }
            for (int i = j; i < hi; ++i) --run_count[static_cast<std::size_t>(i)];
        }
    };
    place(place, -1);
}

}  // namespace

void for_each_admissible_ordering(const PinnacleSet& s,
                                  const std::function<void(const PinnacleOrdering&)>& visit) {
    if (!is_admissible_set(s)) throw InadmissibleSetError(s);
    enumerate_orderings_impl(
        s, [&](const std::vector<int>& seq) { visit(PinnacleOrdering(seq, s)); });
}

std::vector<PinnacleOrdering> enumerate_admissible_orderings(const PinnacleSet& s) {
    std::vector<PinnacleOrdering> out;
    for_each_admissible_ordering(s, [&out](const PinnacleOrdering& a) { out.push_back(a); });
    return out;
}

std::uint64_t count_admissible_orderings(const PinnacleSet& s) {
    if (!is_admissible_set(s)) throw InadmissibleSetError(s);
    std::uint64_t count = 0;
    enumerate_orderings_impl(s, [&count](const std::vector<int>&) { ++count; });
    return count;
}

bool is_maximally_admissible(const PinnacleSet& s) {
    if (!is_admissible_set(s)) throw InadmissibleSetError(s);
    const auto& xs = s.elements();
    const int p = s.size();
    for (int i = 2; i < p; ++i)
        if (xs[static_cast<std::size_t>(i - 1)] < std::min(p + i + 1, 3 * i)) return false;
    return true;
}

}  // namespace pinnacle
