#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace hairpin {

/// Shortest words first, then lexicographic.
struct ShortLex {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

/// Default upper limit on enumeration lengths.
inline constexpr int kDefaultLengthCap = 16;

/**
 * A finite set of words that is exact up to `bound`: it holds every member
 * of the underlying language of length <= bound, and nothing longer.
 * A negative bound means no length is covered (and the set is empty).
 */
struct LangSet {
    std::set<std::string, ShortLex> words;
    int bound = 0;

    LangSet() = default;
    LangSet(int b, std::initializer_list<std::string> ws) : words(ws.begin(), ws.end()), bound(b) {}

    bool contains(std::string_view w) const { return words.contains(w); }
    std::size_t size() const noexcept { return words.size(); }
    bool empty() const noexcept { return words.empty(); }

    /// Drops members longer than `b` (b must not exceed the current bound).
    LangSet restricted(int b) const;

    friend bool operator==(const LangSet&, const LangSet&) = default;
};

/// Union; the result is exact up to the smaller of the two bounds.
LangSet unite(const LangSet& a, const LangSet& b);

/// Equality on the lengths both sides cover exactly.
bool same_up_to_common_bound(const LangSet& a, const LangSet& b);

/// Throws when max_len is negative or above the cap.
void check_length_cap(int max_len, int cap = kDefaultLengthCap);

}  // namespace hairpin
