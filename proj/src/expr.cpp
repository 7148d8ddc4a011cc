#include "hairpin/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hairpin {

// ---------------------------------------------------------------------------
// Alphabet, couples

bool is_symbol_char(char c) noexcept {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

Alphabet::Alphabet(std::string_view symbols) {
    for (char c : symbols) {
        if (!is_symbol_char(c)) {
            throw Error(std::string("invalid symbol '") + c + "' in alphabet");
        }
        if (std::find(symbols_.begin(), symbols_.end(), c) != symbols_.end()) {
            throw Error(std::string("duplicate symbol '") + c + "' in alphabet");
        }
        symbols_.push_back(c);
    }
    std::sort(symbols_.begin(), symbols_.end());
}

bool Alphabet::contains(Symbol s) const noexcept {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

void Alphabet::check_word(std::string_view w) const {
    for (char c : w) {
        if (!contains(c)) {
            throw Error(std::string("symbol '") + c + "' is not in the alphabet {" + str() + "}");
        }
    }
}

Couple::Couple(std::optional<Symbol> l, std::optional<Symbol> r) : left(l), right(r) {
    if (!left && !right) throw Error("(ε,ε) is not a couple symbol");
}

std::string Couple::str() const {
    std::string out = "(";
    out += left ? *left : '~';
    out += ',';
    out += right ? *right : '~';
    out += ')';
    return out;
}

namespace {

std::strong_ordering compare_component(const std::optional<Symbol>& a, const std::optional<Symbol>& b) {
    if (a && b) return *a <=> *b;
    if (a) return std::strong_ordering::less;
    if (b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Couple& a, const Couple& b) {
    if (auto c = compare_component(a.left, b.left); c != 0) return c;
    return compare_component(a.right, b.right);
}

std::vector<Couple> couples(const Alphabet& alphabet) {
    std::vector<std::optional<Symbol>> side(alphabet.symbols().begin(), alphabet.symbols().end());
    side.emplace_back(std::nullopt);
    std::vector<Couple> out;
    for (const auto& x : side) {
        for (const auto& y : side) {
            if (x || y) out.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<Couple> symbol_couples(const Alphabet& alphabet) {
    std::vector<Couple> out;
    for (Symbol x : alphabet.symbols()) {
        for (Symbol y : alphabet.symbols()) out.emplace_back(x, y);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Anti-morphisms

AntiMorphism::AntiMorphism(std::string name, std::map<Symbol, Symbol> table)
    : name_(std::move(name)), table_(std::move(table)) {
    if (name_.empty()) throw Error("anti-morphism name must not be empty");
    for (const auto& [from, to] : table_) {
        if (!is_symbol_char(from) || !is_symbol_char(to)) {
            throw Error("anti-morphism " + name_ + " maps a non-symbol character");
        }
        if (!table_.contains(to)) {
            throw Error("anti-morphism " + name_ + ": image '" + std::string(1, to) +
                        "' is outside its domain");
        }
    }
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

void insert_pair(std::map<Symbol, Symbol>& table, const std::string& lhs, const std::string& rhs,
                 const std::string& name) {
    if (lhs.size() != 1 || rhs.size() != 1) {
        throw Error("anti-morphism " + name + ": malformed entry '" + lhs + "' -> '" + rhs + "'");
    }
    if (!table.emplace(lhs[0], rhs[0]).second) {
        throw Error("anti-morphism " + name + ": symbol '" + lhs + "' mapped twice");
    }
}

}  // namespace

AntiMorphism AntiMorphism::from_inline(std::string name, std::string_view spec) {
    std::map<Symbol, Symbol> table;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        auto item = trim(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (!item.empty()) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw Error("anti-morphism " + name + ": expected 'x:y', got '" + item + "'");
            }
            insert_pair(table, trim(item.substr(0, colon)), trim(item.substr(colon + 1)), name);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (table.empty()) throw Error("anti-morphism " + name + " is empty");
    return AntiMorphism(std::move(name), std::move(table));
}

AntiMorphism AntiMorphism::from_lines(std::string name, std::string_view text) {
    std::map<Symbol, Symbol> table;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw Error("anti-morphism " + name + ": expected 'x -> y', got '" + line + "'");
        }
        insert_pair(table, trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)), name);
    }
    if (table.empty()) throw Error("anti-morphism " + name + " is empty");
    return AntiMorphism(std::move(name), std::move(table));
}

Alphabet AntiMorphism::domain() const {
    std::string s;
    for (const auto& [from, to] : table_) s += from;
    return Alphabet(s);
}

Symbol AntiMorphism::operator()(Symbol s) const {
    auto it = table_.find(s);
    if (it == table_.end()) {
        throw Error(std::string("symbol '") + s + "' is outside the domain of " + name_);
    }
    return it->second;
}

Word AntiMorphism::operator()(std::string_view w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += (*this)(*it);
    return out;
}

std::vector<Word> AntiMorphism::preimages(std::string_view w) const {
    // H(α) = w  ⟺  H(α_{|w|-j+1}) = w_j, so α is w reversed with each symbol pulled back.
    std::vector<Word> partial{Word{}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::vector<Word> next;
        for (const auto& [from, to] : table_) {
            if (to != *it) continue;
            for (const auto& p : partial) next.push_back(p + from);
        }
        partial = std::move(next);
        if (partial.empty()) break;
    }
    return partial;
}

bool AntiMorphism::is_involution() const {
    return std::all_of(table_.begin(), table_.end(),
                       [&](const auto& entry) { return table_.at(entry.second) == entry.first; });
}

Word h_word(const AntiMorphism& h, std::string_view w) { return h(w); }

void Registry::add(AntiMorphism h) {
    auto dom = h.domain();
    if (alphabet_.empty()) {
        alphabet_ = dom;
    } else if (!(dom == alphabet_)) {
        throw Error("anti-morphism " + h.name() + " is defined on {" + dom.str() +
                    "} but the alphabet is {" + alphabet_.str() + "}");
    }
    auto name = h.name();
    if (!maps_.emplace(name, std::make_shared<const AntiMorphism>(std::move(h))).second) {
        throw Error("anti-morphism " + name + " declared twice");
    }
}

std::shared_ptr<const AntiMorphism> Registry::find(std::string_view name) const {
    auto it = maps_.find(name);
    return it == maps_.end() ? nullptr : it->second;
}

// ---------------------------------------------------------------------------
// Regex nodes

struct Regex::Node {
    Kind kind;
    Symbol sym = 0;
    std::optional<Regex> a;
    std::optional<Regex> b;
};

Regex Regex::empty() {
    static const Regex r(std::make_shared<const Node>(Node{Kind::empty}));
    return r;
}

Regex Regex::epsilon() {
    static const Regex r(std::make_shared<const Node>(Node{Kind::epsilon}));
    return r;
}

Regex Regex::symbol(Symbol s) { return Regex(std::make_shared<const Node>(Node{Kind::symbol, s})); }

Regex Regex::sum(Regex lhs, Regex rhs) {
    return Regex(std::make_shared<const Node>(Node{Kind::sum, 0, std::move(lhs), std::move(rhs)}));
}

Regex Regex::concat(Regex lhs, Regex rhs) {
    return Regex(std::make_shared<const Node>(Node{Kind::concat, 0, std::move(lhs), std::move(rhs)}));
}

Regex Regex::star(Regex inner) {
    return Regex(std::make_shared<const Node>(Node{Kind::star, 0, std::move(inner), std::nullopt}));
}

Regex::Kind Regex::kind() const noexcept { return node_->kind; }

Symbol Regex::sym() const {
    if (kind() != Kind::symbol) throw Error("regex node is not a symbol");
    return node_->sym;
}

const Regex& Regex::lhs() const {
    if (kind() != Kind::sum && kind() != Kind::concat) throw Error("regex node is not binary");
    return *node_->a;
}

const Regex& Regex::rhs() const {
    if (kind() != Kind::sum && kind() != Kind::concat) throw Error("regex node is not binary");
    return *node_->b;
}

const Regex& Regex::inner() const {
    if (kind() != Kind::star) throw Error("regex node is not a star");
    return *node_->a;
}

std::strong_ordering operator<=>(const Regex& a, const Regex& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
        case Regex::Kind::empty:
        case Regex::Kind::epsilon:
            return std::strong_ordering::equal;
        case Regex::Kind::symbol:
            return a.node_->sym <=> b.node_->sym;
        case Regex::Kind::star:
            return a.inner() <=> b.inner();
        case Regex::Kind::sum:
        case Regex::Kind::concat:
            if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
            return a.rhs() <=> b.rhs();
    }
    return std::strong_ordering::equal;
}

bool operator==(const Regex& a, const Regex& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Expr nodes

struct Expr::Node {
    Kind kind;
    std::size_t k = 0;
    std::shared_ptr<const AntiMorphism> h;
    std::optional<Regex> f;
    std::optional<Expr> a;
    std::optional<Expr> b;
};

Expr Expr::reg(Regex r) {
    return Expr(std::make_shared<const Node>(Node{Kind::reg, 0, nullptr, std::move(r)}));
}

namespace {

void require_morphism(const std::shared_ptr<const AntiMorphism>& h) {
    if (!h) throw Error("hairpin operator without an anti-morphism");
}

}  // namespace

Expr Expr::right(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f) {
    require_morphism(h);
    return Expr(std::make_shared<const Node>(Node{Kind::right, k, std::move(h), std::move(f)}));
}

Expr Expr::left(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f) {
    require_morphism(h);
    return Expr(std::make_shared<const Node>(Node{Kind::left, k, std::move(h), std::move(f)}));
}

Expr Expr::prime(std::size_t k, std::shared_ptr<const AntiMorphism> h, Regex f) {
    require_morphism(h);
    if (k == 0) throw Error("HPrime requires k >= 1");
    return Expr(std::make_shared<const Node>(Node{Kind::prime, k, std::move(h), std::move(f)}));
}

Expr Expr::sum(Expr lhs, Expr rhs) {
    return Expr(std::make_shared<const Node>(
        Node{Kind::sum, 0, nullptr, std::nullopt, std::move(lhs), std::move(rhs)}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

bool Expr::is_operator() const noexcept {
    return kind() == Kind::right || kind() == Kind::left || kind() == Kind::prime;
}

const Regex& Expr::regex() const {
    if (kind() == Kind::sum) throw Error("sum expression has no single regex argument");
    return *node_->f;
}

std::size_t Expr::k() const {
    if (!is_operator()) throw Error("expression is not a hairpin operator");
    return node_->k;
}

const AntiMorphism& Expr::morphism() const { return *morphism_ptr(); }

const std::shared_ptr<const AntiMorphism>& Expr::morphism_ptr() const {
    if (!is_operator()) throw Error("expression is not a hairpin operator");
    return node_->h;
}

const Expr& Expr::lhs() const {
    if (kind() != Kind::sum) throw Error("expression is not a sum");
    return *node_->a;
}

const Expr& Expr::rhs() const {
    if (kind() != Kind::sum) throw Error("expression is not a sum");
    return *node_->b;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
        case Expr::Kind::reg:
            return a.regex() <=> b.regex();
        case Expr::Kind::sum:
            if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
            return a.rhs() <=> b.rhs();
        default:
            if (auto c = a.k() <=> b.k(); c != 0) return c;
            if (auto c = a.morphism().name().compare(b.morphism().name()); c != 0) {
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return a.regex() <=> b.regex();
    }
}

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Structural queries

bool nullable(const Regex& r) {
    switch (r.kind()) {
        case Regex::Kind::empty:
        case Regex::Kind::symbol:
            return false;
        case Regex::Kind::epsilon:
        case Regex::Kind::star:
            return true;
        case Regex::Kind::sum:
            return nullable(r.lhs()) || nullable(r.rhs());
        case Regex::Kind::concat:
            return nullable(r.lhs()) && nullable(r.rhs());
    }
    return false;
}

bool nullable(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::reg:
            return nullable(e.regex());
        case Expr::Kind::sum:
            return nullable(e.lhs()) || nullable(e.rhs());
        case Expr::Kind::right:
        case Expr::Kind::left:
            // (H,0)-completions contain ε exactly when the argument does
            return e.k() == 0 && nullable(e.regex());
        case Expr::Kind::prime:
            return false;
    }
    return false;
}

namespace {

void accumulate(const Regex& r, ExprMetrics& m) {
    switch (r.kind()) {
        case Regex::Kind::symbol:
            ++m.width;
            break;
        case Regex::Kind::star:
            ++m.star_number;
            accumulate(r.inner(), m);
            break;
        case Regex::Kind::sum:
        case Regex::Kind::concat:
            accumulate(r.lhs(), m);
            accumulate(r.rhs(), m);
            break;
        default:
            break;
    }
}

void accumulate(const Expr& e, ExprMetrics& m) {
    if (e.is(Expr::Kind::sum)) {
        accumulate(e.lhs(), m);
        accumulate(e.rhs(), m);
        return;
    }
    accumulate(e.regex(), m);
    if (e.is_operator()) m.index = std::max(m.index, e.k());
}

}  // namespace

ExprMetrics metrics(const Regex& r) {
    ExprMetrics m;
    accumulate(r, m);
    m.m = m.width + m.star_number;
    return m;
}

ExprMetrics metrics(const Expr& e) {
    ExprMetrics m;
    accumulate(e, m);
    m.m = m.width + m.star_number;
    return m;
}

Regex canonicalize(const Regex& r, Reduction mode) {
    if (mode == Reduction::raw) return r;
    switch (r.kind()) {
        case Regex::Kind::sum: {
            auto a = canonicalize(r.lhs(), mode);
            auto b = canonicalize(r.rhs(), mode);
            if (a.is(Regex::Kind::empty)) return b;
            if (b.is(Regex::Kind::empty)) return a;
            if (a == r.lhs() && b == r.rhs()) return r;
            return Regex::sum(std::move(a), std::move(b));
        }
        case Regex::Kind::concat: {
            auto a = canonicalize(r.lhs(), mode);
            auto b = canonicalize(r.rhs(), mode);
            if (a.is(Regex::Kind::empty) || b.is(Regex::Kind::empty)) return Regex::empty();
            if (a.is(Regex::Kind::epsilon)) return b;
            if (b.is(Regex::Kind::epsilon)) return a;
            if (a == r.lhs() && b == r.rhs()) return r;
            return Regex::concat(std::move(a), std::move(b));
        }
        case Regex::Kind::star: {
            auto a = canonicalize(r.inner(), mode);
            if (a == r.inner()) return r;
            return Regex::star(std::move(a));
        }
        default:
            return r;
    }
}

Expr canonicalize(const Expr& e, Reduction mode) {
    if (mode == Reduction::raw) return e;
    switch (e.kind()) {
        case Expr::Kind::reg:
            return Expr::reg(canonicalize(e.regex(), mode));
        case Expr::Kind::right:
            return Expr::right(e.k(), e.morphism_ptr(), canonicalize(e.regex(), mode));
        case Expr::Kind::left:
            return Expr::left(e.k(), e.morphism_ptr(), canonicalize(e.regex(), mode));
        case Expr::Kind::prime:
            return Expr::prime(e.k(), e.morphism_ptr(), canonicalize(e.regex(), mode));
        case Expr::Kind::sum: {
            auto a = canonicalize(e.lhs(), mode);
            auto b = canonicalize(e.rhs(), mode);
            if (a.is_regex() && a.regex().is(Regex::Kind::empty)) return b;
            if (b.is_regex() && b.regex().is(Regex::Kind::empty)) return a;
            return Expr::sum(std::move(a), std::move(b));
        }
    }
    return e;
}

bool has_zero_completion(const Expr& e) {
    if (e.is(Expr::Kind::sum)) return has_zero_completion(e.lhs()) || has_zero_completion(e.rhs());
    return e.is_operator() && e.k() == 0;
}

namespace {

void collect_symbols(const Regex& r, std::set<Symbol>& out) {
    switch (r.kind()) {
        case Regex::Kind::symbol:
            out.insert(r.sym());
            break;
        case Regex::Kind::star:
            collect_symbols(r.inner(), out);
            break;
        case Regex::Kind::sum:
        case Regex::Kind::concat:
            collect_symbols(r.lhs(), out);
            collect_symbols(r.rhs(), out);
            break;
        default:
            break;
    }
}

void collect_symbols(const Expr& e, std::set<Symbol>& out) {
    if (e.is(Expr::Kind::sum)) {
        collect_symbols(e.lhs(), out);
        collect_symbols(e.rhs(), out);
    } else {
        collect_symbols(e.regex(), out);
    }
}

}  // namespace

Alphabet alphabet_of(const Expr& e) {
    std::set<Symbol> symbols;
    collect_symbols(e, symbols);
    return Alphabet(std::string(symbols.begin(), symbols.end()));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels: 0 sum, 1 concatenation, 2 postfix star / atom.
void print(const Regex& r, int context, std::string& out) {
    switch (r.kind()) {
        case Regex::Kind::empty:
            out += "%0";
            return;
        case Regex::Kind::epsilon:
            out += "%e";
            return;
        case Regex::Kind::symbol:
            out += r.sym();
            return;
        case Regex::Kind::star:
            print(r.inner(), 2, out);
            out += '*';
            return;
        case Regex::Kind::sum:
        case Regex::Kind::concat: {
            const bool is_sum = r.is(Regex::Kind::sum);
            const int level = is_sum ? 0 : 1;
            const bool parens = context > level;
            if (parens) out += '(';
            print(r.lhs(), level, out);
            if (is_sum) out += '+';
            print(r.rhs(), level + 1, out);
            if (parens) out += ')';
            return;
        }
    }
}

const char* operator_tag(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::right: return "Hr";
        case Expr::Kind::left: return "Hl";
        case Expr::Kind::prime: return "Hp";
        default: return "";
    }
}

void print(const Expr& e, bool parenthesize_sum, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::reg:
            print(e.regex(), parenthesize_sum ? 1 : 0, out);
            return;
        case Expr::Kind::sum:
            if (parenthesize_sum) out += '(';
            print(e.lhs(), false, out);
            out += '+';
            print(e.rhs(), true, out);
            if (parenthesize_sum) out += ')';
            return;
        default:
            out += operator_tag(e.kind());
            out += '[' + std::to_string(e.k()) + ',' + e.morphism().name() + "](";
            print(e.regex(), 0, out);
            out += ')';
            return;
    }
}

void ast(const Regex& r, std::string& out) {
    switch (r.kind()) {
        case Regex::Kind::empty: out += "Empty"; return;
        case Regex::Kind::epsilon: out += "Epsilon"; return;
        case Regex::Kind::symbol: out += r.sym(); return;
        case Regex::Kind::star:
            out += "Star(";
            ast(r.inner(), out);
            out += ')';
            return;
        case Regex::Kind::sum:
        case Regex::Kind::concat:
            out += r.is(Regex::Kind::sum) ? "Sum(" : "Concat(";
            ast(r.lhs(), out);
            out += ", ";
            ast(r.rhs(), out);
            out += ')';
            return;
    }
}

void ast(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::reg:
            out += "Reg(";
            ast(e.regex(), out);
            out += ')';
            return;
        case Expr::Kind::sum:
            out += "HSum(";
            ast(e.lhs(), out);
            out += ", ";
            ast(e.rhs(), out);
            out += ')';
            return;
        default:
            out += e.is(Expr::Kind::right) ? "HRight(" : e.is(Expr::Kind::left) ? "HLeft(" : "HPrime(";
            out += std::to_string(e.k()) + ", " + e.morphism().name() + ", ";
            ast(e.regex(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string to_string(const Regex& r) {
    std::string out;
    print(r, 0, out);
    return out;
}

std::string to_string(const Expr& e) {
    std::string out;
    print(e, false, out);
    return out;
}

std::string to_ast_string(const Regex& r) {
    std::string out;
    ast(r, out);
    return out;
}

std::string to_ast_string(const Expr& e) {
    std::string out;
    ast(e, out);
    return out;
}

}  // namespace hairpin
