#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hairpin/expr.hpp"
#include "hairpin/lang_set.hpp"

namespace hairpin {

/**
 * NFA over the couple alphabet Σ_Γ. A couple-word is read "inside out":
 * Im((x,y)·w) = x·Im(w)·y, and the Γ-language of the automaton is the image
 * of its ordinary language under Im.
 *
 * States are dense indices; each carries a unique textual id and an optional
 * display label (the expression it stands for when built from derivatives).
 */
class CoupleNfa {
public:
    using State = std::size_t;

    struct Transition {
        State source;
        Couple label;
        State target;

        friend bool operator==(const Transition&, const Transition&) = default;
        friend auto operator<=>(const Transition&, const Transition&) = default;
    };

    CoupleNfa() = default;
    explicit CoupleNfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(std::string id, std::string label = {});
    void set_initial(State q);
    void set_final(State q);
    /// Ignores a transition that is already present.
    void add_transition(State source, Couple label, State target);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return ids_.size(); }
    const std::string& id(State q) const;
    const std::string& label(State q) const;
    std::optional<State> find(std::string_view id) const;
    /// Throws on an unknown id.
    State state(std::string_view id) const;

    const std::set<State>& initial() const noexcept { return initial_; }
    const std::set<State>& final_states() const noexcept { return final_; }
    bool is_initial(State q) const { return initial_.contains(q); }
    bool is_final(State q) const { return final_.contains(q); }

    /// In insertion order.
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    /// δ(q, c) in insertion order.
    std::vector<State> targets(State q, const Couple& c) const;

private:
    void check_state(State q) const;

    Alphabet alphabet_;
    std::vector<std::string> ids_;
    std::vector<std::string> labels_;
    std::set<State> initial_;
    std::set<State> final_;
    std::vector<Transition> transitions_;
    std::set<Transition> transition_index_;
};

/// Im(ε) = ε, Im((x,y)·w) = x·Im(w)·y.
Word im(std::span<const Couple> w);

/// Direct recursion over the transitions; exponential in the worst case.
bool is_in_right_language(const CoupleNfa& a, std::string_view w, CoupleNfa::State q);
bool membership_test(const CoupleNfa& a, std::string_view w);

/// Interval dynamic programming, O(|Q|·|w|²·|δ|).
bool membership_dp(const CoupleNfa& a, std::string_view w);

/// Γ-right language of every state, each exact up to max_len.
std::vector<LangSet> right_languages(const CoupleNfa& a, int max_len, int cap = kDefaultLengthCap);

/// { u ∈ L_Γ(a) : |u| <= max_len }
LangSet enumerate_gamma_language(const CoupleNfa& a, int max_len, int cap = kDefaultLengthCap);

/// Line format: "alphabet", "state", "trans" records; '~' is ε.
std::string to_text(const CoupleNfa& a);
CoupleNfa parse_couple_nfa(std::string_view text);

std::string to_dot(const CoupleNfa& a);

}  // namespace hairpin
