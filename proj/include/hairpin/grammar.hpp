#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hairpin/couple_nfa.hpp"
#include "hairpin/lang_set.hpp"

namespace hairpin {

/// A → x B y with (x, y) ≠ (ε, ε), or A → ε when `target` is empty.
struct Production {
    std::string head;
    std::optional<Symbol> left;
    std::optional<std::string> target;
    std::optional<Symbol> right;

    bool is_epsilon() const noexcept { return !target.has_value(); }

    friend bool operator==(const Production&, const Production&) = default;
    friend auto operator<=>(const Production&, const Production&) = default;
};

/**
 * Linear grammar. Unit productions S → B are only allowed from the axiom and
 * live in `axiom_links`, since they fall outside the A → xBy / A → ε forms.
 */
class LinearGrammar {
public:
    LinearGrammar(Alphabet terminals, std::string axiom);

    void add_nonterminal(const std::string& name);
    void add_production(const std::string& head, std::optional<Symbol> left, const std::string& target,
                        std::optional<Symbol> right);
    void add_epsilon(const std::string& head);
    void add_axiom_link(const std::string& target);

    const Alphabet& terminals() const noexcept { return terminals_; }
    const std::string& axiom() const noexcept { return axiom_; }
    const std::set<std::string>& nonterminals() const noexcept { return nonterminals_; }
    const std::set<Production>& productions() const noexcept { return productions_; }
    const std::set<std::string>& axiom_links() const noexcept { return axiom_links_; }

private:
    void require(const std::string& name) const;

    Alphabet terminals_;
    std::string axiom_;
    std::set<std::string> nonterminals_;
    std::set<Production> productions_;
    std::set<std::string> axiom_links_;
};

/// Nonterminals A_<state id> plus the axiom S linked to every initial state.
LinearGrammar nfa_to_grammar(const CoupleNfa& a);

/// States are nonterminals; initial = {axiom} ∪ axiom links.
CoupleNfa grammar_to_nfa(const LinearGrammar& g);

/// Generated words of length <= max_len.
LangSet generate_upto(const LinearGrammar& g, int max_len, int cap = kDefaultLengthCap);

/// "terminals", "axiom", "unit", "prod" records; '~' is ε.
std::string to_text(const LinearGrammar& g);
LinearGrammar parse_grammar(std::string_view text);

}  // namespace hairpin
