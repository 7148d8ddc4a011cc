#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hairpin/expr.hpp"

namespace hairpin {

/// Derivative result sets, kept in the canonical total order; never hold ∅.
using RegexSet = std::set<Regex>;
using TermSet = std::set<Expr>;

enum class Side { left, right, two_sided };

/// Antimirov left partial derivative ∂_a(f).
RegexSet left_pd(const Regex& f, Symbol a, Reduction mode = Reduction::reduced);
/// Right partial derivative (f)∂_a.
RegexSet right_pd(const Regex& f, Symbol a, Reduction mode = Reduction::reduced);
/// Iterated symbol derivative; the empty word gives {f}.
RegexSet word_pd(const Regex& f, std::string_view w, Side side, Reduction mode = Reduction::reduced);

/// Two-sided partial derivative ∂_(x,y)(e). Throws on a k = 0 operator.
TermSet two_sided_pd(const Expr& e, const Couple& c, Reduction mode = Reduction::reduced);

struct DerivedTerms {
    TermSet terms;
    /// Breadth-first discovery order of the same terms.
    std::vector<Expr> order;
    Side side;
    Expr source;
};

/// Worklist fixpoint of the derivative selected by `side`; `source` itself
/// belongs to the result only when it is reachable in one or more steps.
DerivedTerms derived_terms(const Expr& e, Side side, const Alphabet& alphabet,
                           Reduction mode = Reduction::reduced);

/// φ(0) = 0, φ(1) = 1, φ(k+1) = φ(k) + 2k(k+1).
std::int64_t phi(std::int64_t k);

/// 2m(m+1)(m+2)/3 − 3, clamped at 0.
std::int64_t cubic_bound(std::int64_t m);

struct Bounds {
    std::int64_t left_bound = 0;
    std::int64_t right_bound = 0;
    std::int64_t two_sided_bound = 0;
    std::int64_t state_bound = 0;
};

Bounds bounds(const Expr& e);

}  // namespace hairpin
