#include <cctype>
#include <variant>

#include "hairpin/expr.hpp"

// Recursive descent over
//
//   expr    := term ('+' term)*
//   term    := hairpin | cat
//   hairpin := ('Hr'|'Hl'|'Hp') '[' integer ',' name ']' '(' expr ')'
//   cat     := factor+
//   factor  := base '*'*
//   base    := symbol | '%e' | '%0' | '(' expr ')'
//
// Whitespace is skipped between tokens.

namespace hairpin {
namespace {

class Parser {
public:
    Parser(std::string_view text, const Registry& registry) : text_(text), registry_(registry) {}

    Expr parse_all() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'" +
                 (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : std::string(", found end of input")));
        }
        ++pos_;
    }

    bool at_hairpin() {
        skip_ws();
        return pos_ + 2 < text_.size() && text_[pos_] == 'H' &&
               (text_[pos_ + 1] == 'r' || text_[pos_ + 1] == 'l' || text_[pos_ + 1] == 'p') &&
               text_[pos_ + 2] == '[';
    }

    static Expr combine(Expr a, Expr b) {
        if (a.is_regex() && b.is_regex()) return Expr::reg(Regex::sum(a.regex(), b.regex()));
        return Expr::sum(std::move(a), std::move(b));
    }

    Expr expr() {
        auto acc = term();
        while (peek() == '+') {
            ++pos_;
            acc = combine(std::move(acc), term());
        }
        return acc;
    }

    Expr term() {
        if (at_hairpin()) return hairpin();
        return cat();
    }

    std::size_t integer() {
        skip_ws();
        std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            ++pos_;
            if (value > 1000000) fail("integer too large");
        }
        if (start == pos_) fail("expected an integer");
        return value;
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected an anti-morphism name");
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr hairpin() {
        const std::size_t start = pos_;
        const char tag = text_[pos_ + 1];
        pos_ += 2;
        expect('[');
        const std::size_t k = integer();
        expect(',');
        const std::size_t name_pos = pos_;
        const auto id = name();
        expect(']');
        auto h = registry_.find(id);
        if (!h) throw ParseError("unknown anti-morphism '" + id + "'", name_pos);
        if (tag == 'p' && k == 0) throw ParseError("HPrime requires k >= 1", start);
        expect('(');
        const std::size_t arg_pos = pos_;
        auto inner = expr();
        expect(')');
        if (!inner.is_regex()) {
            throw ParseError("hairpin operator applied to a non-regular subexpression", arg_pos);
        }
        switch (tag) {
            case 'r': return Expr::right(k, std::move(h), inner.regex());
            case 'l': return Expr::left(k, std::move(h), inner.regex());
            default: return Expr::prime(k, std::move(h), inner.regex());
        }
    }

    Expr cat() {
        std::optional<Regex> acc;
        std::optional<Expr> lone;  // a parenthesised hairpin expression standing alone
        std::size_t factors = 0;
        for (;;) {
            char c = peek();
            if (c == '\0' || c == '+' || c == ')') break;
            const std::size_t here = pos_;
            auto f = factor();
            ++factors;
            if (!f.is_regex()) {
                if (factors > 1) {
                    throw ParseError("a hairpin expression cannot be concatenated", here);
                }
                lone = std::move(f);
                continue;
            }
            if (lone) throw ParseError("a hairpin expression cannot be concatenated", here);
            acc = acc ? Regex::concat(std::move(*acc), f.regex()) : f.regex();
        }
        if (factors == 0) fail(at_end() ? "unexpected end of input" : "expected an expression");
        if (lone) return std::move(*lone);
        return Expr::reg(std::move(*acc));
    }

    Expr factor() {
        auto b = base();
        while (peek() == '*') {
            if (!b.is_regex()) fail("star applied to a hairpin expression");
            ++pos_;
            b = Expr::reg(Regex::star(b.regex()));
        }
        return b;
    }

    Expr base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = expr();
            expect(')');
            return e;
        }
        if (c == '%') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == 'e') {
                ++pos_;
                return Expr::reg(Regex::epsilon());
            }
            if (pos_ < text_.size() && text_[pos_] == '0') {
                ++pos_;
                return Expr::reg(Regex::empty());
            }
            fail("expected '%e' or '%0'");
        }
        if (at_hairpin()) fail("hairpin operator must be a top-level term or parenthesised");
        if (is_symbol_char(c)) {
            const auto& gamma = registry_.alphabet();
            if (!gamma.empty() && !gamma.contains(c)) {
                fail(std::string("symbol '") + c + "' is not in the alphabet {" + gamma.str() + "}");
            }
            ++pos_;
            return Expr::reg(Regex::symbol(c));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const Registry& registry_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const Registry& registry) { return Parser(text, registry).parse_all(); }

Regex parse_regex(std::string_view text, const Registry& registry) {
    auto e = parse(text, registry);
    if (!e.is_regex()) throw ParseError("expected a regular expression", 0);
    return e.regex();
}

}  // namespace hairpin
