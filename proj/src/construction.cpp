#include "hairpin/construction.hpp"

#include <map>

namespace hairpin {
namespace {

/// Assigns dense state ids q0, q1, ... to expressions in insertion order.
class StateTable {
public:
    explicit StateTable(CoupleNfa& a) : a_(a) {}

    CoupleNfa::State intern(const Expr& e) {
        if (auto it = index_.find(e); it != index_.end()) return it->second;
        auto q = a_.add_state("q" + std::to_string(index_.size()), to_string(e));
        index_.emplace(e, q);
        exprs_.push_back(e);
        if (nullable(e)) a_.set_final(q);
        return q;
    }

    CoupleNfa::State at(const Expr& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw Error("derived term " + to_string(e) + " is not a state");
        return it->second;
    }

    /// Expressions in state-id order.
    const std::vector<Expr>& exprs() const { return exprs_; }

private:
    CoupleNfa& a_;
    std::map<Expr, CoupleNfa::State> index_;
    std::vector<Expr> exprs_;
};

Alphabet check_alphabet(const Expr& e, const Alphabet& alphabet) {
    alphabet.check_word(alphabet_of(e).str());
    return alphabet;
}

}  // namespace

CoupleNfa regex_dta(const Regex& f, const Alphabet& alphabet, Reduction mode) {
    const auto root = Expr::reg(f);
    CoupleNfa a(check_alphabet(root, alphabet));
    StateTable states(a);
    a.set_initial(states.intern(root));
    const auto terms = derived_terms(root, Side::left, alphabet, mode);
    for (const auto& t : terms.order) states.intern(t);

    for (std::size_t q = 0; q < a.num_states(); ++q) {
        const auto& source = states.exprs()[q];
        for (Symbol s : alphabet.symbols()) {
            for (const auto& d : left_pd(source.regex(), s, mode)) {
                a.add_transition(q, Couple(s, std::nullopt), states.at(Expr::reg(d)));
            }
        }
    }
    return a;
}

CoupleNfa two_sided_dta(const Expr& e, const Alphabet& alphabet, Reduction mode) {
    if (has_zero_completion(e)) {
        throw Error("two-sided derived term automaton needs k >= 1; " + to_string(e) +
                    " has a k = 0 operator (use the effective automaton)");
    }
    CoupleNfa a(check_alphabet(e, alphabet));
    StateTable states(a);
    a.set_initial(states.intern(e));
    for (const auto& t : derived_terms(e, Side::two_sided, alphabet, mode).order) states.intern(t);
    const auto sigma = couples(alphabet);
    for (const auto& source : states.exprs()) {
        const auto q = states.at(source);
        for (const auto& c : sigma) {
            for (const auto& d : two_sided_pd(source, c, mode)) a.add_transition(q, c, states.at(d));
        }
    }
    return a;
}

CoupleNfa effective_automaton(const Expr& e, const Alphabet& alphabet, Reduction mode) {
    const bool is_right = e.is(Expr::Kind::right);
    if (!(is_right || e.is(Expr::Kind::left)) || e.k() != 0) {
        throw Error("effective automaton expects Hr[0,...](F) or Hl[0,...](F), got " + to_string(e));
    }
    const auto h = e.morphism_ptr();
    const auto wrap = [&](const Regex& r) { return is_right ? Expr::right(0, h, r) : Expr::left(0, h, r); };
    // derivative on the completed side: left for →H_0, right for ←H_0
    const auto derive = [&](const Regex& r, Symbol s) {
        return is_right ? left_pd(r, s, mode) : right_pd(r, s, mode);
    };

    CoupleNfa a(check_alphabet(e, alphabet));
    StateTable states(a);
    a.set_initial(states.intern(e));
    const auto one_sided =
        derived_terms(Expr::reg(e.regex()), is_right ? Side::left : Side::right, alphabet, mode).order;
    for (const auto& t : one_sided) states.intern(wrap(t.regex()));
    for (const auto& t : one_sided) states.intern(t);

    const auto& morphism = *h;
    for (const auto& source : states.exprs()) {
        const auto q = states.at(source);
        for (const auto& c : couples(alphabet)) {
            if (source.is_regex()) {
                // bare regex states only read along the completed side
                const auto& s = is_right ? c.left : c.right;
                const auto& other = is_right ? c.right : c.left;
                if (!s || other) continue;
                for (const auto& d : derive(source.regex(), *s)) a.add_transition(q, c, states.at(Expr::reg(d)));
                continue;
            }
            if (c.is_two_sided() && morphism(*c.left) == *c.right) {
                const Symbol s = is_right ? *c.left : *c.right;
                for (const auto& d : derive(source.regex(), s)) a.add_transition(q, c, states.at(wrap(d)));
            } else if (is_right ? (c.left && !c.right) : (c.right && !c.left)) {
                const Symbol s = is_right ? *c.left : *c.right;
                for (const auto& d : derive(source.regex(), s)) a.add_transition(q, c, states.at(Expr::reg(d)));
            }
        }
    }
    return a;
}

}  // namespace hairpin
