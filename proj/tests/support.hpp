#pragma once

// Shared fixtures for the unit tests and the acceptance runner.
//
// The brute-force checker at the bottom decides membership word by word with
// a substring-table matcher and the completion definitions read literally. It shares no code
// with the library's derivative engine, automata or oracle module, so it can
// serve as ground truth for all three.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hairpin/construction.hpp"
#include "hairpin/couple_nfa.hpp"
#include "hairpin/derivation.hpp"
#include "hairpin/expr.hpp"
#include "hairpin/grammar.hpp"
#include "hairpin/lang_set.hpp"
#include "hairpin/oracle.hpp"

namespace support {

using namespace hairpin;

// ---------------------------------------------------------------- fixtures

/// The running example's anti-morphism over {a,b,c}: a↦a, b↦c, c↦b.
inline constexpr const char* kExampleMap = "a:a,b:c,c:b";

struct NamedMap {
    std::string name;
    std::string spec;
};

inline Registry make_registry(const std::vector<NamedMap>& maps) {
    Registry r;
    for (const auto& m : maps) r.add(AntiMorphism::from_inline(m.name, m.spec));
    return r;
}

inline Registry example_registry() { return make_registry({{"H", kExampleMap}}); }

inline Expr example(std::string_view text) { return parse(text, example_registry()); }

inline Alphabet abc() { return Alphabet("abc"); }

inline Couple cpl(char l, char r) {
    auto side = [](char c) -> std::optional<Symbol> {
        if (c == '~') return std::nullopt;
        return c;
    };
    return Couple(side(l), side(r));
}

inline std::set<std::string> printed(const TermSet& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(to_string(t));
    return out;
}

using LabeledEdge = std::tuple<std::string, std::string, std::string>;

/// Transitions as (source label, couple, target label), for comparing
/// automata whose state identifiers differ.
inline std::set<LabeledEdge> labeled_edges(const CoupleNfa& a) {
    std::set<LabeledEdge> out;
    for (const auto& t : a.transitions()) out.emplace(a.label(t.source), t.label.str(), a.label(t.target));
    return out;
}

inline std::set<std::string> labels_where(const CoupleNfa& a, bool (CoupleNfa::*pred)(CoupleNfa::State) const) {
    std::set<std::string> out;
    for (CoupleNfa::State q = 0; q < a.num_states(); ++q) {
        if ((a.*pred)(q)) out.insert(a.label(q));
    }
    return out;
}

inline std::set<std::string> all_labels(const CoupleNfa& a) {
    std::set<std::string> out;
    for (CoupleNfa::State q = 0; q < a.num_states(); ++q) out.insert(a.label(q));
    return out;
}

/// The one-state automaton for {aⁿbⁿ}, drawn by hand.
inline CoupleNfa figure2() {
    CoupleNfa a(Alphabet("ab"));
    auto q = a.add_state("1", "1");
    a.set_initial(q);
    a.set_final(q);
    a.add_transition(q, cpl('a', 'b'), q);
    return a;
}

/// Derived term automaton of Hr[1,H](a*bc), transcribed by hand.
inline CoupleNfa figure3() {
    CoupleNfa a(abc());
    auto e = a.add_state("E", "Hr[1,H](a*bc)");
    auto c = a.add_state("H1c", "Hr[1,H](c)");
    auto eps = a.add_state("eps", "%e");
    auto h1eps = a.add_state("H1eps", "Hr[1,H](%e)");
    a.set_initial(e);
    a.set_final(eps);
    a.add_transition(e, cpl('a', 'a'), e);
    a.add_transition(e, cpl('b', 'c'), c);
    a.add_transition(e, cpl('b', 'c'), eps);
    a.add_transition(c, cpl('c', 'b'), h1eps);
    return a;
}

/// Effective automaton of Hr[0,H](a*bc), transcribed by hand.
inline CoupleNfa figure4() {
    CoupleNfa a(abc());
    auto e = a.add_state("E", "Hr[0,H](a*bc)");
    auto h0c = a.add_state("H0c", "Hr[0,H](c)");
    auto h0eps = a.add_state("H0eps", "Hr[0,H](%e)");
    auto f = a.add_state("F", "a*bc");
    auto c = a.add_state("c", "c");
    auto eps = a.add_state("eps", "%e");
    a.set_initial(e);
    a.set_final(h0eps);
    a.set_final(eps);
    a.add_transition(e, cpl('a', 'a'), e);
    a.add_transition(e, cpl('b', 'c'), h0c);
    a.add_transition(h0c, cpl('c', 'b'), h0eps);
    a.add_transition(e, cpl('a', '~'), f);
    a.add_transition(e, cpl('b', '~'), c);
    a.add_transition(f, cpl('a', '~'), f);
    a.add_transition(f, cpl('b', '~'), c);
    a.add_transition(c, cpl('c', '~'), eps);
    a.add_transition(h0c, cpl('c', '~'), eps);
    return a;
}

// ------------------------------------------------------------------ corpus

struct CorpusEntry {
    std::string text;
    std::vector<NamedMap> maps;

    Registry registry() const { return make_registry(maps); }
    Expr expr() const { return parse(text, registry()); }
    Alphabet alphabet() const { return registry().alphabet(); }
};

/// Fixed hairpin corpus: |Γ| ≤ 3, width ≤ 5, k ∈ {1,2,3}. Maps named I are
/// involutions; N marks non-involutive ones (over {a,b} it is not even
/// injective, which exercises the left completion's preimage search).
inline std::vector<CorpusEntry> hairpin_corpus() {
    const NamedMap h3{"H", kExampleMap};
    const NamedMap g3{"G", "a:b,b:c,c:a"};
    const NamedMap i2{"I", "a:b,b:a"};
    const NamedMap n2{"N", "a:a,b:a"};
    const NamedMap h1{"H", "a:a"};
    return {
        {"Hr[1,H](a*bc)", {h3}},
        {"Hl[1,H](a*bc)", {h3}},
        {"Hp[1,H](a*bc)", {h3}},
        {"Hr[1,H](bca*)", {h3}},
        {"Hl[1,H](ca*b)", {h3}},
        {"Hr[2,H](a*bcb)", {h3}},
        {"Hl[2,H](ab*ca)", {h3}},
        {"Hp[2,H](b(a+c)*c)", {h3}},
        {"Hr[3,H](abc*b*a)", {h3}},
        {"Hl[3,H](a*bcb)", {h3}},
        {"Hr[1,H]((a+b)*c)", {h3}},
        {"Hl[1,H]((b+c)*a)", {h3}},
        {"Hr[2,H]((ab)*c)", {h3}},
        {"Hp[3,H](a*(bc)*a)", {h3}},
        {"Hp[2,H](a*b*c*)", {h3}},
        {"Hr[1,H](a+%e)", {h3}},
        {"Hr[1,H](a*bc) + Hl[1,H](ab)", {h3}},
        {"Hr[1,H](a*b) + (c+a)", {h3}},
        {"Hr[1,G](a*bc)", {g3}},
        {"Hl[1,G](ab*c)", {g3}},
        {"Hp[1,G](a(b+c)*c)", {g3}},
        {"Hr[2,G](ab*ca)", {g3}},
        {"Hl[2,G](c(ab)*)", {g3}},
        {"Hr[1,G](ab) + Hp[1,H](b*c)", {g3, h3}},
        {"Hr[1,I](a*b)", {i2}},
        {"Hl[1,I](ab*)", {i2}},
        {"Hp[1,I](a(a+b)*b)", {i2}},
        {"Hr[2,I](ab*a)", {i2}},
        {"Hr[3,I](ab(a+b)*a)", {i2}},
        {"Hr[1,N](ab*)", {n2}},
        {"Hl[1,N](b*a)", {n2}},
        {"Hp[2,N](aa*ba)", {n2}},
        {"Hl[2,N](ab*aa)", {n2}},
        {"Hl[3,N](a*b*a)", {n2}},
        {"Hr[1,I](a*) + Hl[2,N](ba*b)", {i2, n2}},
        {"Hr[1,H](a*)", {h1}},
        {"Hp[2,H](aa*)", {h1}},
    };
}

// --------------------------------------------------------------- generators

/// Random regex with exactly `width` symbol leaves.
inline Regex random_regex(std::mt19937& rng, const Alphabet& g, int width) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    if (width == 0) return pick(5) == 0 ? Regex::empty() : Regex::epsilon();
    if (width == 1) {
        auto s = Regex::symbol(g.symbols()[static_cast<std::size_t>(pick(static_cast<int>(g.size())))]);
        switch (pick(4)) {
            case 0: return Regex::star(s);
            case 1: return Regex::sum(s, Regex::epsilon());
            default: return s;
        }
    }
    switch (pick(5)) {
        case 0: return Regex::star(random_regex(rng, g, width));
        case 1:
        case 2: {
            int w1 = 1 + pick(width - 1);
            return Regex::sum(random_regex(rng, g, w1), random_regex(rng, g, width - w1));
        }
        default: {
            int w1 = 1 + pick(width - 1);
            return Regex::concat(random_regex(rng, g, w1), random_regex(rng, g, width - w1));
        }
    }
}

inline std::vector<Regex> random_regexes(unsigned seed, std::size_t count, int max_width, const Alphabet& g) {
    std::mt19937 rng(seed);
    std::vector<Regex> out;
    for (std::size_t i = 0; i < count; ++i) {
        int w = std::uniform_int_distribution<int>(1, max_width)(rng);
        out.push_back(random_regex(rng, g, w));
    }
    return out;
}

inline CoupleNfa random_nfa(std::mt19937& rng, const Alphabet& g, int max_states = 5, int max_transitions = 8) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    CoupleNfa a(g);
    const int n = pick(1, max_states);
    for (int i = 0; i < n; ++i) a.add_state("q" + std::to_string(i));
    a.set_initial(static_cast<CoupleNfa::State>(pick(0, n - 1)));
    for (int i = 0; i < n; ++i) {
        if (pick(0, 3) == 0) a.set_initial(static_cast<CoupleNfa::State>(i));
        if (pick(0, 2) == 0) a.set_final(static_cast<CoupleNfa::State>(i));
    }
    const auto all = couples(g);
    const int t = pick(0, max_transitions);
    for (int i = 0; i < t; ++i) {
        a.add_transition(static_cast<CoupleNfa::State>(pick(0, n - 1)),
                         all[static_cast<std::size_t>(pick(0, static_cast<int>(all.size()) - 1))],
                         static_cast<CoupleNfa::State>(pick(0, n - 1)));
    }
    return a;
}

inline LinearGrammar random_grammar(std::mt19937& rng, const Alphabet& g) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    static const std::vector<std::string> names{"S", "A", "B", "C"};
    LinearGrammar gr(g, "S");
    const int n = pick(1, 4);
    for (int i = 1; i < n; ++i) gr.add_nonterminal(names[static_cast<std::size_t>(i)]);
    auto nt = [&] { return names[static_cast<std::size_t>(pick(0, n - 1))]; };
    const auto all = couples(g);
    const int p = pick(1, 8);
    for (int i = 0; i < p; ++i) {
        if (pick(0, 1) == 0) {
            gr.add_epsilon(nt());
        } else {
            const auto& c = all[static_cast<std::size_t>(pick(0, static_cast<int>(all.size()) - 1))];
            gr.add_production(nt(), c.left, nt(), c.right);
        }
    }
    for (int i = 1; i < n; ++i) {
        if (pick(0, 2) == 0) gr.add_axiom_link(names[static_cast<std::size_t>(i)]);
    }
    return gr;
}

// ------------------------------------------------------ definitional oracle

/// Membership by the textbook semantics of regular expressions, decided
/// with a table over (node, start, end) substrings. Kept free of any
/// derivative machinery so it can judge the library independently.
class RegexMatcher {
public:
    explicit RegexMatcher(const Regex& r) { root_ = flatten(r); }

    bool operator()(const std::string& w) const {
        word_ = &w;
        const std::size_t n = w.size() + 1;
        memo_.assign(nodes_.size() * n * n, -1);
        return match(root_, 0, w.size());
    }

private:
    struct Node {
        Regex::Kind kind;
        Symbol sym = 0;
        std::size_t a = 0;
        std::size_t b = 0;
    };

    std::size_t flatten(const Regex& r) {
        Node node{r.kind()};
        switch (r.kind()) {
            case Regex::Kind::symbol: node.sym = r.sym(); break;
            case Regex::Kind::sum:
            case Regex::Kind::concat:
                node.a = flatten(r.lhs());
                node.b = flatten(r.rhs());
                break;
            case Regex::Kind::star: node.a = flatten(r.inner()); break;
            default: break;
        }
        nodes_.push_back(node);
        return nodes_.size() - 1;
    }

    bool match(std::size_t id, std::size_t i, std::size_t j) const {
        const std::size_t n = word_->size() + 1;
        auto& slot = memo_[(id * n + i) * n + j];
        if (slot >= 0) return slot == 1;
        const Node& node = nodes_[id];
        bool ok = false;
        switch (node.kind) {
            case Regex::Kind::empty: break;
            case Regex::Kind::epsilon: ok = i == j; break;
            case Regex::Kind::symbol: ok = j == i + 1 && (*word_)[i] == node.sym; break;
            case Regex::Kind::sum: ok = match(node.a, i, j) || match(node.b, i, j); break;
            case Regex::Kind::concat:
                for (std::size_t m = i; m <= j && !ok; ++m) ok = match(node.a, i, m) && match(node.b, m, j);
                break;
            case Regex::Kind::star:
                // each iteration consumes at least one letter
                ok = i == j;
                for (std::size_t m = i + 1; m <= j && !ok; ++m) ok = match(node.a, i, m) && match(id, m, j);
                break;
        }
        slot = ok ? 1 : 0;
        return ok;
    }

    std::vector<Node> nodes_;
    std::size_t root_ = 0;
    mutable const std::string* word_ = nullptr;
    mutable std::vector<signed char> memo_;
};

inline std::vector<std::string> words_upto(const Alphabet& g, int max_len) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (Symbol s : g.symbols()) out.push_back(out[i] + s);
        }
        begin = end;
    }
    return out;
}

inline std::string apply(const AntiMorphism& h, const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += h(*it);
    return out;
}

/// Does w = α·β·γ·H(β)·H(α) with |α| = a and |β| = k? Returns the split
/// pieces (αβγH(β), βγH(β)H(α)) when it does.
inline std::optional<std::pair<std::string, std::string>> split(const AntiMorphism& h, const std::string& w,
                                                                std::size_t a, std::size_t k) {
    if (w.size() < 2 * a + 2 * k) return std::nullopt;
    const auto alpha = w.substr(0, a);
    if (w.substr(w.size() - a) != apply(h, alpha)) return std::nullopt;
    const auto beta = w.substr(a, k);
    if (w.substr(w.size() - a - k, k) != apply(h, beta)) return std::nullopt;
    return std::make_pair(w.substr(0, w.size() - a), w.substr(a));
}

enum class Op { right, left, prime };

/// Membership of w in the right/left (H,k)-completion or H'_k of `in`.
template <class Member>
bool completion_member(const AntiMorphism& h, std::size_t k, Op op, const std::string& w, const Member& in) {
    if (op == Op::prime) return w.size() >= 2 * k && split(h, w, 0, k) && in(w);
    for (std::size_t a = 0; 2 * a + 2 * k <= w.size(); ++a) {
        auto s = split(h, w, a, k);
        if (s && in(op == Op::right ? s->first : s->second)) return true;
    }
    return false;
}

inline bool brute_member(const Expr& e, const std::string& w) {
    switch (e.kind()) {
        case Expr::Kind::reg: return RegexMatcher(e.regex())(w);
        case Expr::Kind::sum: return brute_member(e.lhs(), w) || brute_member(e.rhs(), w);
        default: break;
    }
    const RegexMatcher in(e.regex());
    const Op op = e.is(Expr::Kind::right) ? Op::right : e.is(Expr::Kind::left) ? Op::left : Op::prime;
    return completion_member(e.morphism(), e.k(), op, w, in);
}

/// Bounded language by filtering every word of Γ^{≤max_len}.
inline LangSet brute_language(const Expr& e, const Alphabet& g, int max_len) {
    LangSet out;
    out.bound = max_len;
    for (const auto& w : words_upto(g, max_len)) {
        if (brute_member(e, w)) out.words.insert(w);
    }
    return out;
}

inline LangSet brute_regex_language(const Regex& r, const Alphabet& g, int max_len) {
    return brute_language(Expr::reg(r), g, max_len);
}

/// Bounded completion of a finite set by filtering Γ^{≤bound}.
inline LangSet brute_complete(const LangSet& l, const Alphabet& g, const AntiMorphism& h, std::size_t k, Op op) {
    LangSet out;
    out.bound = l.bound;
    auto in = [&](const std::string& u) { return l.contains(u); };
    for (const auto& w : words_upto(g, l.bound)) {
        if (completion_member(h, k, op, w, in)) out.words.insert(w);
    }
    return out;
}

}  // namespace support
