#pragma once

// Exhaustive reference answers for small symmetric groups, written straight
// from the definitions and kept independent of the library under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

inline std::vector<int> pinnacle_sequence(const std::vector<int>& word) {
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < word.size(); ++i)
        if (word[i - 1] < word[i] && word[i] > word[i + 1]) out.push_back(word[i]);
    return out;
}

// set -> ordering -> number of permutations of [1..n] realizing it
using Census = std::map<std::vector<int>, std::map<std::vector<int>, long long>>;

inline Census census(int n) {
    Census out;
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        std::vector<int> pins = pinnacle_sequence(word);
        std::vector<int> key = pins;
        std::sort(key.begin(), key.end());
        ++out[key][pins];
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

inline bool set_realizable(int n, const std::vector<int>& sorted_set) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        std::vector<int> pins = pinnacle_sequence(word);
        std::sort(pins.begin(), pins.end());
        if (pins == sorted_set) return true;
    } while (std::next_permutation(word.begin(), word.end()));
    return false;
}

inline std::set<std::vector<int>> realized_orderings(int n, const std::vector<int>& sorted_set) {
    std::set<std::vector<int>> out;
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        std::vector<int> pins = pinnacle_sequence(word);
        std::vector<int> key = pins;
        std::sort(key.begin(), key.end());
        if (key == sorted_set) out.insert(pins);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace brute
