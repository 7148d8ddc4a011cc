#include "hairpin/derivation.hpp"

#include <deque>

namespace hairpin {
namespace {

void insert_term(RegexSet& out, const Regex& r, Reduction mode) {
    auto c = canonicalize(r, mode);
    if (!c.is(Regex::Kind::empty)) out.insert(std::move(c));
}

// Raw Antimirov rules; reduction is applied once per emitted member.
void left_raw(const Regex& f, Symbol a, std::vector<Regex>& out) {
    switch (f.kind()) {
        case Regex::Kind::symbol:
            if (f.sym() == a) out.push_back(Regex::epsilon());
            return;
        case Regex::Kind::empty:
        case Regex::Kind::epsilon:
            return;
        case Regex::Kind::sum:
            left_raw(f.lhs(), a, out);
            left_raw(f.rhs(), a, out);
            return;
        case Regex::Kind::star: {
            std::vector<Regex> inner;
            left_raw(f.inner(), a, inner);
            for (auto& d : inner) out.push_back(Regex::concat(std::move(d), f));
            return;
        }
        case Regex::Kind::concat: {
            std::vector<Regex> head;
            left_raw(f.lhs(), a, head);
            for (auto& d : head) out.push_back(Regex::concat(std::move(d), f.rhs()));
            if (nullable(f.lhs())) left_raw(f.rhs(), a, out);
            return;
        }
    }
}

void right_raw(const Regex& f, Symbol a, std::vector<Regex>& out) {
    switch (f.kind()) {
        case Regex::Kind::symbol:
            if (f.sym() == a) out.push_back(Regex::epsilon());
            return;
        case Regex::Kind::empty:
        case Regex::Kind::epsilon:
            return;
        case Regex::Kind::sum:
            right_raw(f.lhs(), a, out);
            right_raw(f.rhs(), a, out);
            return;
        case Regex::Kind::star: {
            std::vector<Regex> inner;
            right_raw(f.inner(), a, inner);
            for (auto& d : inner) out.push_back(Regex::concat(f, std::move(d)));
            return;
        }
        case Regex::Kind::concat: {
            std::vector<Regex> tail;
            right_raw(f.rhs(), a, tail);
            for (auto& d : tail) out.push_back(Regex::concat(f.lhs(), std::move(d)));
            if (nullable(f.rhs())) right_raw(f.lhs(), a, out);
            return;
        }
    }
}

RegexSet regex_two_sided(const Regex& f, const Couple& c, Reduction mode) {
    if (!c.left) return right_pd(f, *c.right, mode);
    if (!c.right) return left_pd(f, *c.left, mode);
    RegexSet out;
    for (const auto& g : left_pd(f, *c.left, mode)) {
        for (const auto& d : right_pd(g, *c.right, mode)) out.insert(d);
    }
    return out;
}

bool stem_matches(const Expr& e, const Couple& c) {
    return c.left && c.right && e.morphism()(*c.left) == *c.right;
}

void add_regex_terms(TermSet& out, const RegexSet& terms) {
    for (const auto& t : terms) out.insert(Expr::reg(t));
}

// H'_{k-1}(S) for k > 1, S itself for k = 1.
void add_stem_terms(TermSet& out, const Expr& e, const RegexSet& terms) {
    if (e.k() == 1) {
        add_regex_terms(out, terms);
        return;
    }
    for (const auto& t : terms) out.insert(Expr::prime(e.k() - 1, e.morphism_ptr(), t));
}

void two_sided_into(const Expr& e, const Couple& c, Reduction mode, TermSet& out) {
    switch (e.kind()) {
        case Expr::Kind::reg:
            add_regex_terms(out, regex_two_sided(e.regex(), c, mode));
            return;
        case Expr::Kind::sum:
            two_sided_into(e.lhs(), c, mode, out);
            two_sided_into(e.rhs(), c, mode, out);
            return;
        default:
            break;
    }
    if (e.k() == 0) {
        throw Error("two-sided derivation is undefined for the k = 0 operator in " + to_string(e) +
                    "; use the effective automaton");
    }
    if (!stem_matches(e, c)) return;
    const auto stem = regex_two_sided(e.regex(), c, mode);
    switch (e.kind()) {
        case Expr::Kind::right:
            for (const auto& d : left_pd(e.regex(), *c.left, mode)) {
                out.insert(Expr::right(e.k(), e.morphism_ptr(), d));
            }
            add_stem_terms(out, e, stem);
            return;
        case Expr::Kind::left:
            for (const auto& d : right_pd(e.regex(), *c.right, mode)) {
                out.insert(Expr::left(e.k(), e.morphism_ptr(), d));
            }
            add_stem_terms(out, e, stem);
            return;
        case Expr::Kind::prime:
            add_stem_terms(out, e, stem);
            return;
        default:
            return;
    }
}

TermSet one_sided(const Expr& e, Symbol a, Side side, Reduction mode) {
    TermSet out;
    add_regex_terms(out, side == Side::left ? left_pd(e.regex(), a, mode) : right_pd(e.regex(), a, mode));
    return out;
}

}  // namespace

RegexSet left_pd(const Regex& f, Symbol a, Reduction mode) {
    std::vector<Regex> raw;
    left_raw(f, a, raw);
    RegexSet out;
    for (const auto& r : raw) insert_term(out, r, mode);
    return out;
}

RegexSet right_pd(const Regex& f, Symbol a, Reduction mode) {
    std::vector<Regex> raw;
    right_raw(f, a, raw);
    RegexSet out;
    for (const auto& r : raw) insert_term(out, r, mode);
    return out;
}

RegexSet word_pd(const Regex& f, std::string_view w, Side side, Reduction mode) {
    if (side == Side::two_sided) throw Error("word_pd takes a one-sided direction");
    RegexSet current{f};
    for (Symbol a : w) {
        RegexSet next;
        for (const auto& g : current) {
            auto d = side == Side::left ? left_pd(g, a, mode) : right_pd(g, a, mode);
            next.insert(d.begin(), d.end());
        }
        current = std::move(next);
    }
    return current;
}

TermSet two_sided_pd(const Expr& e, const Couple& c, Reduction mode) {
    TermSet out;
    two_sided_into(e, c, mode, out);
    return out;
}

DerivedTerms derived_terms(const Expr& e, Side side, const Alphabet& alphabet, Reduction mode) {
    if (side != Side::two_sided && !e.is_regex()) {
        throw Error("one-sided derived terms need a regular expression, got " + to_string(e));
    }
    DerivedTerms result{{}, {}, side, e};
    std::deque<Expr> queue;
    auto step = [&](const Expr& from) {
        auto visit = [&](const TermSet& ds) {
            for (const auto& d : ds) {
                if (result.terms.insert(d).second) {
                    result.order.push_back(d);
                    queue.push_back(d);
                }
            }
        };
        if (side == Side::two_sided) {
            for (const auto& c : couples(alphabet)) visit(two_sided_pd(from, c, mode));
        } else {
            for (Symbol a : alphabet.symbols()) visit(one_sided(from, a, side, mode));
        }
    };
    step(e);
    while (!queue.empty()) {
        auto next = std::move(queue.front());
        queue.pop_front();
        step(next);
    }
    return result;
}

std::int64_t phi(std::int64_t k) {
    if (k <= 0) return 0;
    std::int64_t value = 1;
    for (std::int64_t j = 1; j < k; ++j) value += 2 * j * (j + 1);
    return value;
}

std::int64_t cubic_bound(std::int64_t m) {
    const std::int64_t value = 2 * m * (m + 1) * (m + 2) / 3 - 3;
    return value < 0 ? 0 : value;
}

Bounds bounds(const Expr& e) {
    const auto m = metrics(e);
    Bounds b;
    b.left_bound = static_cast<std::int64_t>(m.width);
    b.right_bound = b.left_bound;
    const auto cubic = cubic_bound(static_cast<std::int64_t>(m.m));
    b.two_sided_bound = m.index == 0 ? cubic
                                     : static_cast<std::int64_t>(m.index) * cubic + static_cast<std::int64_t>(m.width);
    b.state_bound = b.two_sided_bound + 1;
    return b;
}

}  // namespace hairpin
