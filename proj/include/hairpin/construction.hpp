#pragma once

#include "hairpin/couple_nfa.hpp"
#include "hairpin/derivation.hpp"
#include "hairpin/expr.hpp"

namespace hairpin {

/// Antimirov's derived term automaton embedded as a couple NFA: every
/// transition reads (a, ε), so its Γ-language is the ordinary language.
CoupleNfa regex_dta(const Regex& f, const Alphabet& alphabet, Reduction mode = Reduction::reduced);

/// States {e} ∪ ↔D_e, δ(E', c) = ∂_c(E') over all of Σ_Γ, finals are the
/// nullable states. Every hairpin operator of e must have k >= 1.
CoupleNfa two_sided_dta(const Expr& e, const Alphabet& alphabet, Reduction mode = Reduction::reduced);

/// Recognizer for →H_0(F) / ←H_0(F) built from one-sided derived terms only;
/// at most 2n + 1 states.
CoupleNfa effective_automaton(const Expr& e, const Alphabet& alphabet, Reduction mode = Reduction::reduced);

}  // namespace hairpin
