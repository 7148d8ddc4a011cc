#include <doctest.h>

#include "support.hpp"

using namespace hairpin;
using support::example;

TEST_SUITE("expr") {

TEST_CASE("parse builds left-associative concatenation under a hairpin") {
    CHECK(to_ast_string(example("Hr[1,H](a*bc)")) == "HRight(1, H, Concat(Concat(Star(a), b), c))");
}

TEST_CASE("a regex sum stays regular") {
    CHECK(to_ast_string(example("a+%e")) == "Reg(Sum(a, Epsilon))");
    CHECK(example("a+%e").is_regex());
}

TEST_CASE("sums involving a hairpin become HSum") {
    const auto e = example("Hr[1,H](a) + Hl[3,H](b)");
    CHECK(e.is(Expr::Kind::sum));
    CHECK(e.lhs().is(Expr::Kind::right));
    CHECK(e.rhs().is(Expr::Kind::left));
    CHECK(e.rhs().k() == 3);
}

TEST_CASE("precedence: star binds tighter than concatenation, which binds tighter than sum") {
    CHECK(to_ast_string(example("ab*+c")) == "Reg(Sum(Concat(a, Star(b)), c))");
    CHECK(to_ast_string(example("(ab)*")) == "Reg(Star(Concat(a, b)))");
    CHECK(to_ast_string(example("a**")) == "Reg(Star(Star(a)))");
    CHECK(to_ast_string(example("%0")) == "Reg(Empty)");
}

TEST_CASE("printing re-parses to the same tree") {
    for (const char* text : {"Hr[1,H](a*bc)", "a+%e", "(a+b)*c", "a(b+c)", "Hp[2,H](b(a+c)*c)", "a*+b*",
                             "Hr[1,H](a*b) + (c+a)", "(a+b)+c", "a+(b+c)", "a(bc)", "Hl[2,H](%e)",
                             "Hr[1,H](a) + (Hl[1,H](b) + Hp[1,H](c))"}) {
        const auto e = example(text);
        CAPTURE(text);
        CHECK(example(to_string(e)) == e);
    }
}

TEST_CASE("parse errors") {
    const auto reg = support::example_registry();
    CHECK_THROWS_WITH_AS(parse("Hp[0,H](a)", reg), doctest::Contains("HPrime requires k >= 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse("Hr[1,X](a)", reg), doctest::Contains("unknown anti-morphism 'X'"), ParseError);
    CHECK_THROWS_WITH_AS(parse("Hr[1,H](Hl[1,H](a))", reg), doctest::Contains("non-regular"), ParseError);
    CHECK_THROWS_AS(parse("Hr[1,H](a)b", reg), ParseError);
    CHECK_THROWS_AS(parse("a+", reg), ParseError);
    CHECK_THROWS_AS(parse("(ab", reg), ParseError);
    CHECK_THROWS_AS(parse("", reg), ParseError);
    CHECK_THROWS_AS(parse("ad", reg), ParseError);  // d is outside Γ = {a,b,c}
    try {
        (void)parse("ab)", reg);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("k = 0 is accepted for right and left completions") {
    CHECK(example("Hr[0,H](a*bc)").k() == 0);
    CHECK(example("Hl[0,H](a)").k() == 0);
    CHECK(has_zero_completion(example("Hr[0,H](a) + Hl[1,H](b)")));
    CHECK_FALSE(has_zero_completion(example("Hr[1,H](a)")));
}

TEST_CASE("nullable") {
    CHECK(nullable(example("a*")));
    CHECK_FALSE(nullable(example("Hr[1,H](a*)")));
    CHECK(nullable(example("Hr[0,H](a*)")));
    CHECK_FALSE(nullable(example("Hr[0,H](a)")));
    CHECK_FALSE(nullable(example("Hp[1,H](%e)")));
    CHECK(nullable(example("Hp[1,H](a) + b*")));
    CHECK_FALSE(nullable(example("%0*b")));
    CHECK(nullable(example("%0*")));
}

TEST_CASE("metrics") {
    auto m = metrics(example("Hr[1,H](a*bc)"));
    CHECK(m.width == 3);
    CHECK(m.star_number == 1);
    CHECK(m.m == 4);
    CHECK(m.index == 1);
    CHECK(metrics(example("a*bc")).index == 0);
    CHECK(metrics(example("Hr[1,H](a) + Hl[3,H](b)")).index == 3);
    CHECK(metrics(example("(a*b*)*")).star_number == 3);
    CHECK(metrics(example("%e + %0")).width == 0);
}

TEST_CASE("anti-morphism on words") {
    const auto h = AntiMorphism::from_inline("H", support::kExampleMap);
    CHECK(h_word(h, "ab") == "ca");
    CHECK(h_word(h, "") == "");
    CHECK(h_word(h, "abc") == "bca");
    CHECK_THROWS_AS(h_word(h, "ad"), Error);
    CHECK(h.is_involution());
    CHECK_FALSE(AntiMorphism::from_inline("G", "a:b,b:c,c:a").is_involution());
}

TEST_CASE("anti-morphism laws hold on all short words") {
    const auto h = AntiMorphism::from_inline("H", support::kExampleMap);
    const auto g = AntiMorphism::from_inline("G", "a:b,b:c,c:a");
    const auto words = support::words_upto(Alphabet("abc"), 4);
    for (const auto& u : words) {
        CHECK(h_word(h, h_word(h, u)) == u);
        CHECK(h_word(h, u).size() == u.size());
        for (const auto& v : support::words_upto(Alphabet("abc"), 2)) {
            CHECK(h_word(h, u + v) == h_word(h, v) + h_word(h, u));
            CHECK(h_word(g, u + v) == h_word(g, v) + h_word(g, u));
        }
    }
}

TEST_CASE("anti-morphism parsing and preimages") {
    const auto f = AntiMorphism::from_lines("F", "# swap\na -> b\n b->a  # back\n\n");
    CHECK(f(Symbol{'a'}) == 'b');
    CHECK(f.domain() == Alphabet("ab"));
    CHECK_THROWS_AS(AntiMorphism::from_inline("X", "a:b"), Error);  // b outside the domain
    CHECK_THROWS_AS(AntiMorphism::from_lines("X", "a => b"), Error);

    const auto n = AntiMorphism::from_inline("N", "a:a,b:a");
    auto pre = n.preimages("aa");
    std::sort(pre.begin(), pre.end());
    CHECK(pre == std::vector<Word>{"aa", "ab", "ba", "bb"});
    CHECK(n.preimages("b").empty());
    CHECK(n.preimages("") == std::vector<Word>{""});
}

TEST_CASE("registry keeps one alphabet") {
    Registry r;
    r.add(AntiMorphism::from_inline("H", "a:a,b:c,c:b"));
    CHECK(r.alphabet() == Alphabet("abc"));
    CHECK_THROWS_AS(r.add(AntiMorphism::from_inline("G", "a:b,b:a")), Error);
    CHECK(r.find("H") != nullptr);
    CHECK(r.find("G") == nullptr);
}

TEST_CASE("couples are ordered left then right with epsilon last") {
    const auto all = couples(Alphabet("ab"));
    std::vector<std::string> s;
    for (const auto& c : all) s.push_back(c.str());
    CHECK(s == std::vector<std::string>{"(a,a)", "(a,b)", "(a,~)", "(b,a)", "(b,b)", "(b,~)", "(~,a)", "(~,b)"});
    CHECK(couples(Alphabet("abc")).size() == 15);
    CHECK(symbol_couples(Alphabet("abc")).size() == 9);
    CHECK_THROWS_AS(Couple(std::nullopt, std::nullopt), Error);
}

TEST_CASE("canonicalize") {
    const auto reg = support::example_registry();
    const auto f = parse_regex("a*bc", reg);
    const auto eps_f = Regex::concat(Regex::epsilon(), f);
    CHECK(canonicalize(eps_f, Reduction::reduced) == f);
    CHECK(canonicalize(Regex::concat(Regex::empty(), Regex::symbol('b')), Reduction::reduced) == Regex::empty());
    CHECK(canonicalize(eps_f, Reduction::raw) == eps_f);
    CHECK(canonicalize(Regex::sum(Regex::empty(), Regex::concat(f, Regex::epsilon())), Reduction::reduced) == f);
    // the rewrite reaches inside stars and hairpin arguments
    CHECK(to_string(canonicalize(Regex::star(Regex::concat(Regex::symbol('a'), Regex::epsilon())), Reduction::reduced)) ==
          "a*");
    const auto h = reg.find("H");
    CHECK(canonicalize(Expr::right(1, h, eps_f), Reduction::reduced) == Expr::right(1, h, f));
}

TEST_CASE("canonicalize is idempotent, preserves languages and never widens") {
    const Alphabet g("abc");
    for (const auto& r : support::random_regexes(11, 120, 5, g)) {
        const auto once = canonicalize(r, Reduction::reduced);
        CAPTURE(to_string(r));
        CHECK(canonicalize(once, Reduction::reduced) == once);
        CHECK(oracle::enum_regex(once, 6) == oracle::enum_regex(r, 6));
        CHECK(metrics(once).width <= metrics(r).width);
        const auto raw = canonicalize(r, Reduction::raw);
        CHECK(metrics(raw).width == metrics(r).width);
        CHECK(metrics(raw).star_number == metrics(r).star_number);
    }
}

TEST_CASE("nullable agrees with the brute-force language on the corpus") {
    for (const auto& entry : support::hairpin_corpus()) {
        const auto e = entry.expr();
        CAPTURE(entry.text);
        CHECK(nullable(e) == support::brute_member(e, ""));
    }
    const Alphabet g("ab");
    for (const auto& r : support::random_regexes(5, 100, 5, g)) {
        CHECK(nullable(r) == support::RegexMatcher(r)(""));
    }
}

}  // TEST_SUITE
