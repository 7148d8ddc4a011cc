#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/**
 * Symbols, anti-morphisms and the regular / hairpin expression trees.
 *
 * Expressions are immutable and share their subtrees; copying an Expr or a
 * Regex copies a pointer. Structural equality and the total order defined
 * here are the dedup key used by every derived-term set downstream.
 */
namespace hairpin {

using Symbol = char;
using Word = std::string;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Ordered finite set of distinct symbols.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    bool contains(Symbol s) const noexcept;
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::string str() const { return {symbols_.begin(), symbols_.end()}; }

    /// Throws if some symbol of w lies outside the alphabet.
    void check_word(std::string_view w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// Printable letters and digits are the only admissible symbols.
bool is_symbol_char(char c) noexcept;

/// A couple (x, y) of Σ_Γ; an empty optional stands for ε.
struct Couple {
    std::optional<Symbol> left;
    std::optional<Symbol> right;

    Couple(std::optional<Symbol> l, std::optional<Symbol> r);

    bool is_two_sided() const noexcept { return left && right; }
    /// Number of symbols the couple contributes to Im (1 or 2).
    std::size_t weight() const noexcept { return (left ? 1u : 0u) + (right ? 1u : 0u); }
    /// "(x,y)" with ε written as '~'.
    std::string str() const;

    friend bool operator==(const Couple&, const Couple&) = default;
};

/// Lexicographic on (left, right) with ε ordered after every symbol.
std::strong_ordering operator<=>(const Couple& a, const Couple& b);

/// Σ_Γ in (left, right) lexicographic order, ε last.
std::vector<Couple> couples(const Alphabet& alphabet);

/// Γ × Γ only, same order.
std::vector<Couple> symbol_couples(const Alphabet& alphabet);

/// A symbol map Γ → Γ extended anti-morphically to words.
class AntiMorphism {
public:
    AntiMorphism(std::string name, std::map<Symbol, Symbol> table);

    /// "a:a,b:c,c:b"
    static AntiMorphism from_inline(std::string name, std::string_view spec);
    /// One "x -> y" per line, '#' starts a comment.
    static AntiMorphism from_lines(std::string name, std::string_view text);

    const std::string& name() const noexcept { return name_; }
    const std::map<Symbol, Symbol>& table() const noexcept { return table_; }
    Alphabet domain() const;

    Symbol operator()(Symbol s) const;
    /// g(a·w) = g(w)·g(a)
    Word operator()(std::string_view w) const;

    /// Every α with H(α) = w; several when the symbol map is not injective.
    std::vector<Word> preimages(std::string_view w) const;

    bool is_involution() const;

private:
    std::string name_;
    std::map<Symbol, Symbol> table_;
};

Word h_word(const AntiMorphism& h, std::string_view w);

/// Alphabet Γ plus the named anti-morphisms an expression may refer to.
class Registry {
public:
    Registry() = default;
    explicit Registry(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Adds a map; its domain must equal Γ (or defines Γ when none is set yet).
    void add(AntiMorphism h);

    std::shared_ptr<const AntiMorphism> find(std::string_view name) const;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    void set_alphabet(Alphabet alphabet) { alphabet_ = std::move(alphabet); }
    bool empty() const noexcept { return maps_.empty(); }

private:
    Alphabet alphabet_;
    std::map<std::string, std::shared_ptr<const AntiMorphism>, std::less<>> maps_;
};

// ---------------------------------------------------------------------------
// Regular expressions

class Regex {
public:
    enum class Kind { empty, epsilon, symbol, sum, concat, star };

    static Regex empty();
    static Regex epsilon();
    static Regex symbol(Symbol s);
    static Regex sum(Regex lhs, Regex rhs);
    static Regex concat(Regex lhs, Regex rhs);
    static Regex star(Regex inner);

    Kind kind() const noexcept;
    Symbol sym() const;
    const Regex& lhs() const;
    const Regex& rhs() const;
    const Regex& inner() const;

    bool is(Kind k) const noexcept { return kind() == k; }

    friend std::strong_ordering operator<=>(const Regex& a, const Regex& b);
    friend bool operator==(const Regex& a, const Regex& b);

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Hairpin expressions

class Expr {
public:
    enum class Kind { reg, right, left, prime, sum };

    static Expr reg(Regex r);
    /// →H_k(F); k = 0 is the (H,0)-completion.
    static Expr right(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f);
    /// ←H_k(F)
    static Expr left(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f);
    /// H'_k(F), k ≥ 1.
    static Expr prime(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f);
    static Expr sum(Expr lhs, Expr rhs);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }
    bool is_regex() const noexcept { return kind() == Kind::reg; }
    bool is_operator() const noexcept;

    /// The wrapped regex of a Reg or hairpin-operator node.
    const Regex& regex() const;
    std::size_t k() const;
    const AntiMorphism& morphism() const;
    const std::shared_ptr<const AntiMorphism>& morphism_ptr() const;
    const Expr& lhs() const;
    const Expr& rhs() const;

    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Reduction { raw, reduced };

struct ExprMetrics {
    std::size_t width = 0;        // n
    std::size_t star_number = 0;  // h
    std::size_t m = 0;            // n + h
    std::size_t index = 0;        // max hairpin k
};

bool nullable(const Regex& r);
bool nullable(const Expr& e);

ExprMetrics metrics(const Regex& r);
ExprMetrics metrics(const Expr& e);

/// Reduced mode rewrites ε·E, E·ε, ∅·E, E·∅, ∅+E, E+∅ bottom-up to a fixpoint.
Regex canonicalize(const Regex& r, Reduction mode);
Expr canonicalize(const Expr& e, Reduction mode);

/// True when e contains a →H_0 / ←H_0 operator.
bool has_zero_completion(const Expr& e);

/// Symbols occurring in the expression, sorted.
Alphabet alphabet_of(const Expr& e);

/// Concrete syntax, re-parseable (`%e` ε, `%0` ∅).
std::string to_string(const Regex& r);
std::string to_string(const Expr& e);

/// Constructor-style tree dump, e.g. "HRight(1, H, Concat(Star(a), b))".
std::string to_ast_string(const Regex& r);
std::string to_ast_string(const Expr& e);

/// Parses the expression grammar; every symbol must lie in registry.alphabet().
Expr parse(std::string_view text, const Registry& registry);
/// Parses a pure regex.
Regex parse_regex(std::string_view text, const Registry& registry);

}  // namespace hairpin
