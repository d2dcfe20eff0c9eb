#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pinnacle/core.hpp"

namespace pinnacle::text {

// Canonical textual forms: sets and orderings are comma-separated integers
// without spaces ("3,5,8,9,13,14"); permutations are space-separated
// ("9 10 3 6 1 4 2 11 5 8 7"). The empty set/ordering/word is "".

std::string format_values(const std::vector<int>& values, char separator);
std::string format_set(const PinnacleSet& s);
std::string format_ordering(const PinnacleOrdering& a);
std::string format_permutation(const Permutation& w);

/// Parses "3,5,8"; rejects non-integers and non-increasing input, naming the
/// offending token in the error.
PinnacleSet parse_set(std::string_view text);

/// Parses "10,6,4,11,8"; the base set is the set of the entries.
PinnacleOrdering parse_ordering(std::string_view text);

/// Parses "9 10 3 6 1 4 2 11 5 8 7".
Permutation parse_permutation(std::string_view text);

}  // namespace pinnacle::text
