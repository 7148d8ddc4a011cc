#include "hairpin/lang_set.hpp"

#include <algorithm>

#include "hairpin/expr.hpp"

namespace hairpin {

LangSet LangSet::restricted(int b) const {
    LangSet out;
    out.bound = std::min(b, bound);
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) > out.bound) break;
        out.words.insert(w);
    }
    return out;
}

LangSet unite(const LangSet& a, const LangSet& b) {
    const int bound = std::min(a.bound, b.bound);
    LangSet out = a.restricted(bound);
    for (const auto& w : b.words) {
        if (static_cast<int>(w.size()) > bound) break;
        out.words.insert(w);
    }
    return out;
}

bool same_up_to_common_bound(const LangSet& a, const LangSet& b) {
    const int bound = std::min(a.bound, b.bound);
    return a.restricted(bound).words == b.restricted(bound).words;
}

void check_length_cap(int max_len, int cap) {
    if (max_len < 0) throw Error("length bound must be non-negative");
    if (max_len > cap) {
        throw Error("length bound " + std::to_string(max_len) + " exceeds the cap of " + std::to_string(cap));
    }
}

}  // namespace hairpin
