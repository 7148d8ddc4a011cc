#include "hairpin/couple_nfa.hpp"

#include <algorithm>
#include <sstream>

namespace hairpin {

// ---------------------------------------------------------------------------
// Model

CoupleNfa::State CoupleNfa::add_state(std::string id, std::string label) {
    if (id.empty()) throw Error("state id must not be empty");
    if (id.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("state id '" + id + "' contains whitespace");
    }
    if (find(id)) throw Error("duplicate state id '" + id + "'");
    ids_.push_back(std::move(id));
    labels_.push_back(std::move(label));
    return ids_.size() - 1;
}

void CoupleNfa::check_state(State q) const {
    if (q >= ids_.size()) throw Error("unknown state " + std::to_string(q));
}

void CoupleNfa::set_initial(State q) {
    check_state(q);
    initial_.insert(q);
}

void CoupleNfa::set_final(State q) {
    check_state(q);
    final_.insert(q);
}

void CoupleNfa::add_transition(State source, Couple label, State target) {
    check_state(source);
    check_state(target);
    for (const auto& side : {label.left, label.right}) {
        if (side && !alphabet_.contains(*side)) {
            throw Error("transition label " + label.str() + " uses a symbol outside {" + alphabet_.str() + "}");
        }
    }
    Transition t{source, label, target};
    if (transition_index_.insert(t).second) transitions_.push_back(t);
}

const std::string& CoupleNfa::id(State q) const {
    check_state(q);
    return ids_[q];
}

const std::string& CoupleNfa::label(State q) const {
    check_state(q);
    return labels_[q];
}

std::optional<CoupleNfa::State> CoupleNfa::find(std::string_view id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<State>(it - ids_.begin());
}

CoupleNfa::State CoupleNfa::state(std::string_view id) const {
    if (auto q = find(id)) return *q;
    throw Error("unknown state '" + std::string(id) + "'");
}

std::vector<CoupleNfa::State> CoupleNfa::targets(State q, const Couple& c) const {
    check_state(q);
    std::vector<State> out;
    for (const auto& t : transitions_) {
        if (t.source == q && t.label == c) out.push_back(t.target);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Languages

Word im(std::span<const Couple> w) {
    if (w.empty()) return {};
    Word out;
    if (w.front().left) out += *w.front().left;
    out += im(w.subspan(1));
    if (w.front().right) out += *w.front().right;
    return out;
}

namespace {

// w = α·w'·β for the label (α, β); returns w' when the split exists.
std::optional<std::string_view> peel(std::string_view w, const Couple& c) {
    if (w.size() < c.weight()) return std::nullopt;
    if (c.left) {
        if (w.front() != *c.left) return std::nullopt;
        w.remove_prefix(1);
    }
    if (c.right) {
        if (w.back() != *c.right) return std::nullopt;
        w.remove_suffix(1);
    }
    return w;
}

}  // namespace

bool is_in_right_language(const CoupleNfa& a, std::string_view w, CoupleNfa::State q) {
    if (q >= a.num_states()) throw Error("unknown state " + std::to_string(q));
    if (w.empty()) return a.is_final(q);
    bool result = false;
    for (const auto& t : a.transitions()) {
        if (t.source != q) continue;
        if (auto rest = peel(w, t.label)) result = result || is_in_right_language(a, *rest, t.target);
    }
    return result;
}

bool membership_test(const CoupleNfa& a, std::string_view w) {
    bool result = false;
    for (auto i : a.initial()) result = result || is_in_right_language(a, w, i);
    return result;
}

bool membership_dp(const CoupleNfa& a, std::string_view w) {
    const std::size_t n = w.size();
    const std::size_t states = a.num_states();
    // gen[(len * (n + 1) + start) * states + q]: q generates w[start, start + len)
    std::vector<char> gen((n + 1) * (n + 1) * states, 0);
    auto at = [&](std::size_t len, std::size_t start, std::size_t q) -> char& {
        return gen[(len * (n + 1) + start) * states + q];
    };
    for (std::size_t q : a.final_states()) {
        for (std::size_t start = 0; start <= n; ++start) at(0, start, q) = 1;
    }
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t start = 0; start + len <= n; ++start) {
            for (const auto& t : a.transitions()) {
                const std::size_t weight = t.label.weight();
                if (weight > len || at(len, start, t.source)) continue;
                if (t.label.left && w[start] != *t.label.left) continue;
                if (t.label.right && w[start + len - 1] != *t.label.right) continue;
                const std::size_t inner_start = start + (t.label.left ? 1 : 0);
                if (at(len - weight, inner_start, t.target)) at(len, start, t.source) = 1;
            }
        }
    }
    return std::any_of(a.initial().begin(), a.initial().end(), [&](std::size_t i) { return at(n, 0, i) != 0; });
}

std::vector<LangSet> right_languages(const CoupleNfa& a, int max_len, int cap) {
    check_length_cap(max_len, cap);
    const std::size_t states = a.num_states();
    const auto bound = static_cast<std::size_t>(max_len);
    // by_length[q][len]: sorted, duplicate-free words of that length
    std::vector<std::vector<std::vector<std::string>>> by_length(
        states, std::vector<std::vector<std::string>>(bound + 1));
    for (auto q : a.final_states()) by_length[q][0].emplace_back();
    for (std::size_t len = 1; len <= bound; ++len) {
        for (const auto& t : a.transitions()) {
            const std::size_t weight = t.label.weight();
            if (weight > len) continue;
            auto& out = by_length[t.source][len];
            for (const auto& inner : by_length[t.target][len - weight]) {
                std::string w;
                w.reserve(len);
                if (t.label.left) w += *t.label.left;
                w += inner;
                if (t.label.right) w += *t.label.right;
                out.push_back(std::move(w));
            }
        }
        for (std::size_t q = 0; q < states; ++q) {
            auto& v = by_length[q][len];
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    }
    std::vector<LangSet> out(states);
    for (std::size_t q = 0; q < states; ++q) {
        out[q].bound = max_len;
        for (auto& level : by_length[q]) {
            for (auto& w : level) out[q].words.insert(std::move(w));
        }
    }
    return out;
}

LangSet enumerate_gamma_language(const CoupleNfa& a, int max_len, int cap) {
    auto rl = right_languages(a, max_len, cap);
    LangSet out;
    out.bound = max_len;
    for (auto i : a.initial()) out.words.insert(rl[i].words.begin(), rl[i].words.end());
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string escape_label(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case ' ': out += "\\s"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape_label(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\' || i + 1 == s.size()) {
            out += s[i];
            continue;
        }
        switch (s[++i]) {
            case 's': out += ' '; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            default: out += s[i];
        }
    }
    return out;
}

std::string component(const std::optional<Symbol>& s) { return s ? std::string(1, *s) : std::string("~"); }

std::optional<Symbol> parse_component(const std::string& token, std::size_t line) {
    if (token == "~") return std::nullopt;
    if (token.size() != 1 || !is_symbol_char(token[0])) {
        throw Error("line " + std::to_string(line) + ": bad couple component '" + token + "'");
    }
    return token[0];
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_text(const CoupleNfa& a) {
    std::ostringstream out;
    out << "alphabet";
    if (!a.alphabet().empty()) out << ' ' << a.alphabet().str();
    out << '\n';
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        out << "state " << a.id(q);
        if (a.is_initial(q)) out << " initial";
        if (a.is_final(q)) out << " final";
        if (!a.label(q).empty()) out << " label=" << escape_label(a.label(q));
        out << '\n';
    }
    for (const auto& t : a.transitions()) {
        out << "trans " << a.id(t.source) << ' ' << component(t.label.left) << ' ' << component(t.label.right)
            << ' ' << a.id(t.target) << '\n';
    }
    return out.str();
}

CoupleNfa parse_couple_nfa(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<CoupleNfa> a;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (tok[0] == "alphabet") {
            if (a) throw Error(where + "duplicate alphabet header");
            if (tok.size() > 2) throw Error(where + "alphabet takes a single run of symbols");
            a.emplace(Alphabet(tok.size() == 2 ? tok[1] : std::string()));
            continue;
        }
        if (!a) throw Error(where + "expected 'alphabet' header first");
        if (tok[0] == "state") {
            if (tok.size() < 2) throw Error(where + "state needs an id");
            std::string label;
            bool initial = false;
            bool final = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (tok[i] == "initial") {
                    initial = true;
                } else if (tok[i] == "final") {
                    final = true;
                } else if (tok[i].starts_with("label=")) {
                    label = unescape_label(std::string_view(tok[i]).substr(6));
                } else {
                    throw Error(where + "unknown state attribute '" + tok[i] + "'");
                }
            }
            auto q = a->add_state(tok[1], std::move(label));
            if (initial) a->set_initial(q);
            if (final) a->set_final(q);
        } else if (tok[0] == "trans") {
            if (tok.size() != 5) throw Error(where + "expected 'trans <src> <x> <y> <dst>'");
            auto x = parse_component(tok[2], line_no);
            auto y = parse_component(tok[3], line_no);
            if (!x && !y) throw Error(where + "(~,~) is not a couple symbol");
            a->add_transition(a->state(tok[1]), Couple(x, y), a->state(tok[4]));
        } else {
            throw Error(where + "unknown record '" + tok[0] + "'");
        }
    }
    if (!a) throw Error("empty automaton document");
    return std::move(*a);
}

std::string to_dot(const CoupleNfa& a) {
    std::ostringstream out;
    out << "digraph couple_nfa {\n  rankdir=LR;\n";
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        out << "  " << dot_quote(a.id(q)) << " [label=" << dot_quote(a.label(q).empty() ? a.id(q) : a.label(q))
            << ", shape=" << (a.is_final(q) ? "doublecircle" : "circle");
        if (a.is_initial(q)) out << ", style=bold";
        out << "];\n";
    }
    for (const auto& t : a.transitions()) {
        out << "  " << dot_quote(a.id(t.source)) << " -> " << dot_quote(a.id(t.target))
            << " [label=" << dot_quote(t.label.str()) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hairpin
