#include "hairpin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hairpin/construction.hpp"
#include "hairpin/derivation.hpp"
#include "hairpin/grammar.hpp"

namespace hairpin::cli {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
    std::string expr;
    std::vector<std::string> maps;
    std::string map_file;
    std::string word;
    int max_len = 8;
    std::string format = "text";
    std::string out_path;
    std::string algo = "dp";
    std::string reduce = "on";
    std::string couple;
    std::string in_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Registry make_registry(const Options& o) {
    Registry registry;
    for (const auto& spec : o.maps) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) {
            registry.add(AntiMorphism::from_inline("H", spec));
        } else {
            registry.add(AntiMorphism::from_inline(spec.substr(0, eq), spec.substr(eq + 1)));
        }
    }
    if (!o.map_file.empty()) registry.add(AntiMorphism::from_lines("H", read_file(o.map_file)));
    return registry;
}

struct Compiled {
    Expr expr;
    Alphabet alphabet;
};

Compiled compile(const Options& o) {
    if (o.expr.empty()) throw Error("--expr is required");
    auto registry = make_registry(o);
    auto e = parse(o.expr, registry);
    auto alphabet = registry.alphabet().empty() ? alphabet_of(e) : registry.alphabet();
    return {std::move(e), std::move(alphabet)};
}

Reduction mode_of(const Options& o) { return o.reduce == "off" ? Reduction::raw : Reduction::reduced; }

CoupleNfa recognizer(const Compiled& c, Reduction mode) {
    if (has_zero_completion(c.expr)) return effective_automaton(c.expr, c.alphabet, mode);
    return two_sided_dta(c.expr, c.alphabet, mode);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path);
    if (!file) throw Error("cannot write '" + o.out_path + "'");
    file << text;
}

std::string render(const CoupleNfa& a, const Options& o) { return o.format == "dot" ? to_dot(a) : to_text(a); }

Couple parse_couple(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.size() != 5 || s[0] != '(' || s[2] != ',' || s[4] != ')') {
        throw Error("--couple expects \"(x,y)\" with '~' for ε, got '" + text + "'");
    }
    auto side = [](char c) -> std::optional<Symbol> {
        if (c == '~') return std::nullopt;
        return c;
    };
    auto l = side(s[1]);
    auto r = side(s[3]);
    if (!l && !r) throw Error("(~,~) is not a couple symbol");
    return Couple(l, r);
}

int cmd_parse(const Options& o, std::ostream& out) {
    auto c = compile(o);
    const auto m = metrics(c.expr);
    out << "expr: " << to_string(c.expr) << '\n'
        << "ast: " << to_ast_string(c.expr) << '\n'
        << "alphabet: " << c.alphabet.str() << '\n'
        << "width: " << m.width << '\n'
        << "star_number: " << m.star_number << '\n'
        << "m: " << m.m << '\n'
        << "index: " << m.index << '\n'
        << "nullable: " << (nullable(c.expr) ? "true" : "false") << '\n';
    return kOk;
}

int cmd_derive(const Options& o, std::ostream& out) {
    auto c = compile(o);
    if (o.couple.empty()) throw Error("--couple is required");
    const auto couple = parse_couple(o.couple);
    for (const auto& side : {couple.left, couple.right}) {
        if (side && !c.alphabet.contains(*side)) {
            throw Error(std::string("symbol '") + *side + "' is not in the alphabet {" + c.alphabet.str() + "}");
        }
    }
    for (const auto& t : two_sided_pd(c.expr, couple, mode_of(o))) out << to_string(t) << '\n';
    return kOk;
}

int cmd_dta(const Options& o, std::ostream& out) {
    auto c = compile(o);
    emit(o, render(two_sided_dta(c.expr, c.alphabet, mode_of(o)), o), out);
    return kOk;
}

int cmd_effective(const Options& o, std::ostream& out) {
    auto c = compile(o);
    emit(o, render(effective_automaton(c.expr, c.alphabet, mode_of(o)), o), out);
    return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
    auto c = compile(o);
    c.alphabet.check_word(o.word);
    const auto a = recognizer(c, mode_of(o));
    const bool accepted = o.algo == "naive" ? membership_test(a, o.word) : membership_dp(a, o.word);
    out << (accepted ? "true" : "false") << '\n';
    return accepted ? kOk : kNegative;
}

int cmd_enum(const Options& o, std::ostream& out) {
    auto c = compile(o);
    check_length_cap(o.max_len);
    for (const auto& w : enumerate_gamma_language(recognizer(c, mode_of(o)), o.max_len).words) out << w << '\n';
    return kOk;
}

int cmd_grammar(const Options& o, std::ostream& out) {
    if (!o.in_path.empty()) {
        const auto text = read_file(o.in_path);
        std::istringstream probe(text);
        std::string first;
        for (std::string line; std::getline(probe, line);) {
            std::istringstream fields(line.substr(0, line.find('#')));
            if (fields >> first) break;
        }
        if (first == "alphabet") {
            emit(o, to_text(nfa_to_grammar(parse_couple_nfa(text))), out);
        } else {
            emit(o, render(grammar_to_nfa(parse_grammar(text)), o), out);
        }
        return kOk;
    }
    auto c = compile(o);
    emit(o, to_text(nfa_to_grammar(recognizer(c, mode_of(o)))), out);
    return kOk;
}

int cmd_verify_bounds(const Options& o, std::ostream& out) {
    auto c = compile(o);
    const auto m = metrics(c.expr);
    bool ok = true;
    auto check = [&](const std::string& what, std::int64_t actual, std::int64_t bound) {
        const bool pass = actual <= bound;
        ok = ok && pass;
        out << what << ": " << actual << " <= " << bound << (pass ? "  ok" : "  VIOLATED") << '\n';
    };
    out << "width: " << m.width << "\nstar_number: " << m.star_number << "\nm: " << m.m << "\nindex: " << m.index
        << '\n';
    const auto raw = Reduction::raw;
    if (has_zero_completion(c.expr)) {
        const auto a = effective_automaton(c.expr, c.alphabet, raw);
        check("effective automaton states", static_cast<std::int64_t>(a.num_states()),
              2 * static_cast<std::int64_t>(m.width) + 1);
    } else {
        const auto b = bounds(c.expr);
        if (c.expr.is_regex()) {
            check("left derived terms",
                  static_cast<std::int64_t>(derived_terms(c.expr, Side::left, c.alphabet, raw).terms.size()),
                  b.left_bound);
            check("right derived terms",
                  static_cast<std::int64_t>(derived_terms(c.expr, Side::right, c.alphabet, raw).terms.size()),
                  b.right_bound);
        }
        check("two-sided derived terms",
              static_cast<std::int64_t>(derived_terms(c.expr, Side::two_sided, c.alphabet, raw).terms.size()),
              b.two_sided_bound);
        check("automaton states", static_cast<std::int64_t>(two_sided_dta(c.expr, c.alphabet, raw).num_states()),
              b.state_bound);
    }
    return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-sided partial derivatives and couple automata for hairpin expressions", "hairpin"};
    app.require_subcommand(1);
    Options o;

    auto expr_opts = [&](CLI::App* sub, bool expr_required = true) {
        auto* e = sub->add_option("--expr", o.expr, "expression text");
        if (expr_required) e->required();
        sub->add_option("--map", o.maps, "anti-morphism, e.g. a:a,b:c,c:b (optionally NAME=...)");
        sub->add_option("--map-file", o.map_file, "anti-morphism file, one 'x -> y' per line");
        sub->add_option("--reduce", o.reduce, "apply the ε/∅ reductions")
            ->check(CLI::IsMember({"on", "off"}))
            ->capture_default_str();
    };
    auto format_opts = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "dot"}))->capture_default_str();
        sub->add_option("--out", o.out_path, "write the result to this file");
    };

    auto* parse_cmd = app.add_subcommand("parse", "print the AST and size metrics");
    expr_opts(parse_cmd);
    auto* derive_cmd = app.add_subcommand("derive", "two-sided partial derivative w.r.t. a couple");
    expr_opts(derive_cmd);
    derive_cmd->add_option("--couple", o.couple, "couple \"(x,y)\", '~' for ε")->required();
    auto* dta_cmd = app.add_subcommand("dta", "two-sided derived term automaton");
    expr_opts(dta_cmd);
    format_opts(dta_cmd);
    auto* eff_cmd = app.add_subcommand("effective", "effective automaton of an (H,0)-completion");
    expr_opts(eff_cmd);
    format_opts(eff_cmd);
    auto* member_cmd = app.add_subcommand("member", "membership test; exit 1 when rejected");
    expr_opts(member_cmd);
    member_cmd->add_option("--word", o.word, "word over the alphabet (\"\" for ε)")->required();
    member_cmd->add_option("--algo", o.algo, "dp or naive recursion")
        ->check(CLI::IsMember({"dp", "naive"}))
        ->capture_default_str();
    auto* enum_cmd = app.add_subcommand("enum", "bounded language, shortest words first");
    expr_opts(enum_cmd);
    enum_cmd->add_option("--max-len", o.max_len, "maximum word length")->capture_default_str();
    auto* grammar_cmd = app.add_subcommand("grammar", "convert between couple automata and linear grammars");
    expr_opts(grammar_cmd, false);
    format_opts(grammar_cmd);
    grammar_cmd->add_option("--in", o.in_path, "automaton or grammar text file to convert");
    auto* bounds_cmd = app.add_subcommand("verify-bounds", "compare derived-term counts with the size bounds");
    expr_opts(bounds_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(o, out);
        if (derive_cmd->parsed()) return cmd_derive(o, out);
        if (dta_cmd->parsed()) return cmd_dta(o, out);
        if (eff_cmd->parsed()) return cmd_effective(o, out);
        if (member_cmd->parsed()) return cmd_member(o, out);
        if (enum_cmd->parsed()) return cmd_enum(o, out);
        if (grammar_cmd->parsed()) return cmd_grammar(o, out);
        if (bounds_cmd->parsed()) return cmd_verify_bounds(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hairpin::cli
