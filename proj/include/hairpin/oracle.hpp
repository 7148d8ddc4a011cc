#pragma once

#include <string_view>
#include <variant>

#include "hairpin/expr.hpp"
#include "hairpin/lang_set.hpp"

/**
 * Brute-force ground truth. Everything here works on bounded word sets by
 * the set-theoretic definitions and shares no code with the derivative
 * engine or the automata.
 */
namespace hairpin::oracle {

/// Exact bounded language of a regex by structural recursion.
LangSet enum_regex(const Regex& f, int max_len, int cap = kDefaultLengthCap);

enum class Completion { right, left, prime };

/// Right / left (H,k)-completion or the H'_k filter of a bounded set.
/// k = 0 gives the (H,0)-completions; the prime filter needs k >= 1.
LangSet complete(const LangSet& l, const AntiMorphism& h, std::size_t k, Completion mode);

/// H_k(l1, l2) = →H_k(l1) ∪ ←H_k(l2).
LangSet complete_pair(const LangSet& l1, const LangSet& l2, const AntiMorphism& h, std::size_t k);

/// (u, v)^{-1}(l) = { w : u·w·v ∈ l }, exact up to l.bound − |u| − |v|.
LangSet residual(const LangSet& l, std::string_view u, std::string_view v);

/// Bounded language of a hairpin expression.
LangSet hairpin_enum(const Expr& e, int max_len, int cap = kDefaultLengthCap);

/// All words over the alphabet of length <= max_len.
LangSet all_words(const Alphabet& alphabet, int max_len);

}  // namespace hairpin::oracle
