#include "hairpin/oracle.hpp"

#include <algorithm>
#include <vector>

namespace hairpin::oracle {
namespace {

// Words grouped by length, index 0..bound.
using Levels = std::vector<std::set<std::string>>;

Levels concat(const Levels& a, const Levels& b, std::size_t bound) {
    Levels out(bound + 1);
    for (std::size_t i = 0; i <= bound; ++i) {
        for (std::size_t j = 0; i + j <= bound; ++j) {
            for (const auto& u : a[i]) {
                for (const auto& v : b[j]) out[i + j].insert(u + v);
            }
        }
    }
    return out;
}

Levels levels(const Regex& f, std::size_t bound) {
    Levels out(bound + 1);
    switch (f.kind()) {
        case Regex::Kind::empty:
            return out;
        case Regex::Kind::epsilon:
            out[0].insert("");
            return out;
        case Regex::Kind::symbol:
            if (bound >= 1) out[1].insert(std::string(1, f.sym()));
            return out;
        case Regex::Kind::sum: {
            auto a = levels(f.lhs(), bound);
            auto b = levels(f.rhs(), bound);
            for (std::size_t i = 0; i <= bound; ++i) {
                out[i] = std::move(a[i]);
                out[i].insert(b[i].begin(), b[i].end());
            }
            return out;
        }
        case Regex::Kind::concat:
            return concat(levels(f.lhs(), bound), levels(f.rhs(), bound), bound);
        case Regex::Kind::star: {
            // S_0 = {ε}; S_len = ⋃_{i ≥ 1} F_i · S_{len-i}
            auto inner = levels(f.inner(), bound);
            out[0].insert("");
            for (std::size_t len = 1; len <= bound; ++len) {
                for (std::size_t i = 1; i <= len; ++i) {
                    for (const auto& u : inner[i]) {
                        for (const auto& v : out[len - i]) out[len].insert(u + v);
                    }
                }
            }
            return out;
        }
    }
    return out;
}

void emit(LangSet& out, std::string w) {
    if (static_cast<int>(w.size()) <= out.bound) out.words.insert(std::move(w));
}

bool has_stem(std::string_view v, const AntiMorphism& h, std::size_t k) {
    // v = β·γ·H(β) with |β| = k
    return v.size() >= 2 * k && v.ends_with(h(v.substr(0, k)));
}

}  // namespace

LangSet enum_regex(const Regex& f, int max_len, int cap) {
    check_length_cap(max_len, cap);
    LangSet out;
    out.bound = max_len;
    for (auto& level : levels(f, static_cast<std::size_t>(max_len))) {
        for (const auto& w : level) out.words.insert(w);
    }
    return out;
}

LangSet complete(const LangSet& l, const AntiMorphism& h, std::size_t k, Completion mode) {
    LangSet out;
    out.bound = l.bound;
    for (const auto& u : l.words) {
        const std::string_view view(u);
        switch (mode) {
            case Completion::prime:
                if (k == 0) throw Error("H'_k needs k >= 1");
                if (has_stem(view, h, k)) emit(out, u);
                break;
            case Completion::right:
                // u = α·β·γ·H(β); emit u·H(α)
                for (std::size_t a = 0; a + 2 * k <= u.size(); ++a) {
                    if (has_stem(view.substr(a), h, k)) emit(out, u + h(view.substr(0, a)));
                }
                break;
            case Completion::left:
                // u = β·γ·H(β)·H(α); emit α·u for every α with H(α) the chosen suffix
                for (std::size_t a = 0; a + 2 * k <= u.size(); ++a) {
                    if (!has_stem(view.substr(0, u.size() - a), h, k)) continue;
                    for (auto& alpha : h.preimages(view.substr(u.size() - a))) emit(out, alpha + u);
                }
                break;
        }
    }
    return out;
}

LangSet complete_pair(const LangSet& l1, const LangSet& l2, const AntiMorphism& h, std::size_t k) {
    return unite(complete(l1, h, k, Completion::right), complete(l2, h, k, Completion::left));
}

LangSet residual(const LangSet& l, std::string_view u, std::string_view v) {
    LangSet out;
    const int bound = l.bound - static_cast<int>(u.size() + v.size());
    out.bound = std::max(bound, -1);
    for (const auto& w : l.words) {
        if (w.size() < u.size() + v.size()) continue;
        if (!std::string_view(w).starts_with(u) || !std::string_view(w).ends_with(v)) continue;
        out.words.insert(w.substr(u.size(), w.size() - u.size() - v.size()));
    }
    return out;
}

LangSet hairpin_enum(const Expr& e, int max_len, int cap) {
    check_length_cap(max_len, cap);
    switch (e.kind()) {
        case Expr::Kind::reg:
            return enum_regex(e.regex(), max_len, cap);
        case Expr::Kind::sum:
            return unite(hairpin_enum(e.lhs(), max_len, cap), hairpin_enum(e.rhs(), max_len, cap));
        case Expr::Kind::right:
            return complete(enum_regex(e.regex(), max_len, cap), e.morphism(), e.k(), Completion::right);
        case Expr::Kind::left:
            return complete(enum_regex(e.regex(), max_len, cap), e.morphism(), e.k(), Completion::left);
        case Expr::Kind::prime:
            return complete(enum_regex(e.regex(), max_len, cap), e.morphism(), e.k(), Completion::prime);
    }
    return {};
}

LangSet all_words(const Alphabet& alphabet, int max_len) {
    LangSet out;
    out.bound = max_len;
    std::vector<std::string> level{""};
    for (int len = 0; len <= max_len; ++len) {
        out.words.insert(level.begin(), level.end());
        std::vector<std::string> next;
        for (const auto& w : level) {
            for (Symbol s : alphabet.symbols()) next.push_back(w + s);
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace hairpin::oracle
