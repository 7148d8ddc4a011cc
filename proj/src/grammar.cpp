#include "hairpin/grammar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hairpin {

LinearGrammar::LinearGrammar(Alphabet terminals, std::string axiom)
    : terminals_(std::move(terminals)), axiom_(std::move(axiom)) {
    add_nonterminal(axiom_);
}

void LinearGrammar::add_nonterminal(const std::string& name) {
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("invalid nonterminal name '" + name + "'");
    }
    nonterminals_.insert(name);
}

void LinearGrammar::require(const std::string& name) const {
    if (!nonterminals_.contains(name)) throw Error("undeclared nonterminal '" + name + "'");
}

void LinearGrammar::add_production(const std::string& head, std::optional<Symbol> left, const std::string& target,
                                   std::optional<Symbol> right) {
    require(head);
    require(target);
    if (!left && !right) throw Error("linear production " + head + " -> " + target + " needs (x,y) != (ε,ε)");
    for (const auto& s : {left, right}) {
        if (s && !terminals_.contains(*s)) {
            throw Error(std::string("terminal '") + *s + "' is not in {" + terminals_.str() + "}");
        }
    }
    productions_.insert(Production{head, left, target, right});
}

void LinearGrammar::add_epsilon(const std::string& head) {
    require(head);
    productions_.insert(Production{head, std::nullopt, std::nullopt, std::nullopt});
}

void LinearGrammar::add_axiom_link(const std::string& target) {
    require(target);
    axiom_links_.insert(target);
}

LinearGrammar nfa_to_grammar(const CoupleNfa& a) {
    LinearGrammar g(a.alphabet(), "S");
    auto name = [&](CoupleNfa::State q) { return "A_" + a.id(q); };
    for (std::size_t q = 0; q < a.num_states(); ++q) g.add_nonterminal(name(q));
    for (auto q : a.initial()) g.add_axiom_link(name(q));
    for (auto q : a.final_states()) g.add_epsilon(name(q));
    for (const auto& t : a.transitions()) {
        g.add_production(name(t.source), t.label.left, name(t.target), t.label.right);
    }
    return g;
}

CoupleNfa grammar_to_nfa(const LinearGrammar& g) {
    CoupleNfa a(g.terminals());
    std::map<std::string, CoupleNfa::State> state;
    for (const auto& n : g.nonterminals()) state.emplace(n, a.add_state(n));
    a.set_initial(state.at(g.axiom()));
    for (const auto& n : g.axiom_links()) a.set_initial(state.at(n));
    for (const auto& p : g.productions()) {
        if (p.is_epsilon()) {
            a.set_final(state.at(p.head));
        } else {
            a.add_transition(state.at(p.head), Couple(p.left, p.right), state.at(*p.target));
        }
    }
    return a;
}

LangSet generate_upto(const LinearGrammar& g, int max_len, int cap) {
    check_length_cap(max_len, cap);
    // words[A][len]: what A derives with exactly len terminals
    std::map<std::string, std::vector<std::set<std::string>>> words;
    for (const auto& n : g.nonterminals()) words[n].resize(static_cast<std::size_t>(max_len) + 1);
    for (const auto& p : g.productions()) {
        if (p.is_epsilon()) words[p.head][0].insert("");
    }
    for (int len = 1; len <= max_len; ++len) {
        for (const auto& p : g.productions()) {
            if (p.is_epsilon()) continue;
            const int grow = (p.left ? 1 : 0) + (p.right ? 1 : 0);
            if (grow > len) continue;
            const auto& inner = words[*p.target][static_cast<std::size_t>(len - grow)];
            auto& out = words[p.head][static_cast<std::size_t>(len)];
            for (const auto& w : inner) {
                std::string s;
                if (p.left) s += *p.left;
                s += w;
                if (p.right) s += *p.right;
                out.insert(std::move(s));
            }
        }
    }
    LangSet out;
    out.bound = max_len;
    auto collect = [&](const std::string& n) {
        for (const auto& level : words[n]) out.words.insert(level.begin(), level.end());
    };
    collect(g.axiom());
    for (const auto& n : g.axiom_links()) collect(n);
    return out;
}

namespace {

std::string component(const std::optional<Symbol>& s) { return s ? std::string(1, *s) : std::string("~"); }

}  // namespace

std::string to_text(const LinearGrammar& g) {
    std::ostringstream out;
    out << "terminals";
    if (!g.terminals().empty()) out << ' ' << g.terminals().str();
    out << "\naxiom " << g.axiom() << '\n';
    for (const auto& n : g.axiom_links()) out << "unit " << g.axiom() << ' ' << n << '\n';
    for (const auto& p : g.productions()) {
        out << "prod " << p.head;
        if (p.is_epsilon()) {
            out << " ~\n";
        } else {
            out << ' ' << component(p.left) << ' ' << *p.target << ' ' << component(p.right) << '\n';
        }
    }
    return out.str();
}

LinearGrammar parse_grammar(std::string_view text) {
    struct Pending {
        std::vector<std::string> tok;
        std::size_t line;
    };
    std::optional<std::string> terminals;
    std::optional<std::string> axiom;
    std::vector<Pending> records;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (tok[0] == "terminals") {
            if (terminals || tok.size() > 2) throw Error(where + "bad terminals record");
            terminals = tok.size() == 2 ? tok[1] : std::string();
        } else if (tok[0] == "axiom") {
            if (axiom || tok.size() != 2) throw Error(where + "bad axiom record");
            axiom = tok[1];
        } else if (tok[0] == "unit" || tok[0] == "prod") {
            records.push_back({std::move(tok), line_no});
        } else {
            throw Error(where + "unknown record '" + tok[0] + "'");
        }
    }
    if (!axiom) throw Error("grammar has no axiom");

    auto symbol = [](const std::string& t, std::size_t ln) -> std::optional<Symbol> {
        if (t == "~") return std::nullopt;
        if (t.size() != 1 || !is_symbol_char(t[0])) {
            throw Error("line " + std::to_string(ln) + ": bad terminal '" + t + "'");
        }
        return t[0];
    };
    if (!terminals) {
        std::set<Symbol> seen;
        for (const auto& r : records) {
            if (r.tok[0] != "prod" || r.tok.size() != 5) continue;
            for (const auto& t : {r.tok[2], r.tok[4]}) {
                if (auto s = symbol(t, r.line)) seen.insert(*s);
            }
        }
        terminals = std::string(seen.begin(), seen.end());
    }

    LinearGrammar g(Alphabet(*terminals), *axiom);
    for (const auto& r : records) {
        if (r.tok[0] == "unit") {
            if (r.tok.size() != 3) throw Error("line " + std::to_string(r.line) + ": expected 'unit S B'");
            if (r.tok[1] != *axiom) {
                throw Error("line " + std::to_string(r.line) + ": unit productions must start at the axiom");
            }
            g.add_nonterminal(r.tok[2]);
        } else if (r.tok.size() == 3 || r.tok.size() == 5) {
            g.add_nonterminal(r.tok[1]);
            if (r.tok.size() == 5) g.add_nonterminal(r.tok[3]);
        } else {
            throw Error("line " + std::to_string(r.line) + ": expected 'prod A x B y' or 'prod A ~'");
        }
    }
    for (const auto& r : records) {
        const auto& t = r.tok;
        if (t[0] == "unit") {
            g.add_axiom_link(t[2]);
        } else if (t.size() == 3) {
            if (t[2] != "~") throw Error("line " + std::to_string(r.line) + ": expected 'prod A ~'");
            g.add_epsilon(t[1]);
        } else {
            g.add_production(t[1], symbol(t[2], r.line), t[3], symbol(t[4], r.line));
        }
    }
    return g;
}

}  // namespace hairpin
