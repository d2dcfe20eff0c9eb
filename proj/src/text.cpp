#include "pinnacle/text.hpp"

#include <charconv>
#include <stdexcept>

namespace pinnacle::text {

namespace {

int parse_int(std::string_view token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 1)
        throw std::invalid_argument("not a positive integer: \"" + std::string(token) + "\"");
    return value;
}

std::vector<int> split_ints(std::string_view text, char separator) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(separator, start);
        const std::string_view token =
            pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
        out.push_back(parse_int(token));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string format_values(const std::vector<int>& values, char separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += separator;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_set(const PinnacleSet& s) { return format_values(s.elements(), ','); }

std::string format_ordering(const PinnacleOrdering& a) { return format_values(a.sequence(), ','); }

std::string format_permutation(const Permutation& w) { return format_values(w.word(), ' '); }

PinnacleSet parse_set(std::string_view text) {
    return PinnacleSet(split_ints(text, ','));  // enforces strictly increasing
}

PinnacleOrdering parse_ordering(std::string_view text) {
    return PinnacleOrdering(split_ints(text, ','));
}

Permutation parse_permutation(std::string_view text) {
    return Permutation(split_ints(text, ' '));
}

}  // namespace pinnacle::text
