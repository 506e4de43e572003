#include "propiso/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace propiso {

Formula Formula::top() {
    return Formula(std::make_shared<const Node>(Node{Conn::Top, {}, nullptr, nullptr}));
}

Formula Formula::bot() {
    return Formula(std::make_shared<const Node>(Node{Conn::Bot, {}, nullptr, nullptr}));
}

Formula Formula::letter(std::string name) {
    if (name.empty()) throw Error("letter name must be nonempty");
    return Formula(
        std::make_shared<const Node>(Node{Conn::Letter, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula child) {
    return Formula(
        std::make_shared<const Node>(Node{Conn::Not, {}, std::move(child.node_), nullptr}));
}

Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{Conn::And, {}, std::move(left.node_), std::move(right.node_)}));
}

Formula Formula::disj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{Conn::Or, {}, std::move(left.node_), std::move(right.node_)}));
}

const std::string& Formula::name() const {
    if (conn() != Conn::Letter) throw Error("name() on non-letter");
    return node_->name;
}

Formula Formula::child() const {
    if (conn() != Conn::Not) throw Error("child() on non-negation");
    return Formula(node_->a);
}

Formula Formula::left() const {
    if (conn() != Conn::And && conn() != Conn::Or) throw Error("left() on non-binary node");
    return Formula(node_->a);
}

Formula Formula::right() const {
    if (conn() != Conn::And && conn() != Conn::Or) throw Error("right() on non-binary node");
    return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->conn != other.node_->conn) return false;
    switch (node_->conn) {
        case Conn::Top:
        case Conn::Bot:
            return true;
        case Conn::Letter:
            return node_->name == other.node_->name;
        case Conn::Not:
            return Formula(node_->a) == Formula(other.node_->a);
        case Conn::And:
        case Conn::Or:
            return Formula(node_->a) == Formula(other.node_->a) &&
                   Formula(node_->b) == Formula(other.node_->b);
    }
    return false;
}

Formula subformula_at(const Formula& f, const Path& path) {
    Formula cur = f;
    for (std::size_t d = 0; d < path.size(); ++d) {
        int step = path[d];
        switch (cur.conn()) {
            case Conn::Not:
                if (step != 0) throw Error("invalid path step under negation");
                cur = cur.child();
                break;
            case Conn::And:
            case Conn::Or:
                if (step == 0)
                    cur = cur.left();
                else if (step == 1)
                    cur = cur.right();
                else
                    throw Error("invalid path step under binary node");
                break;
            default:
                throw Error("path descends below a leaf");
        }
    }
    return cur;
}

Formula replace_at(const Formula& f, const Path& path, const Formula& replacement) {
    std::function<Formula(const Formula&, std::size_t)> go = [&](const Formula& cur,
                                                                 std::size_t d) -> Formula {
        if (d == path.size()) return replacement;
        int step = path[d];
        switch (cur.conn()) {
            case Conn::Not:
                if (step != 0) throw Error("invalid path step under negation");
                return Formula::negation(go(cur.child(), d + 1));
            case Conn::And:
                if (step == 0) return Formula::conj(go(cur.left(), d + 1), cur.right());
                if (step == 1) return Formula::conj(cur.left(), go(cur.right(), d + 1));
                throw Error("invalid path step under binary node");
            case Conn::Or:
                if (step == 0) return Formula::disj(go(cur.left(), d + 1), cur.right());
                if (step == 1) return Formula::disj(cur.left(), go(cur.right(), d + 1));
                throw Error("invalid path step under binary node");
            default:
                throw Error("path descends below a leaf");
        }
    };
    return go(f, 0);
}

// ---------------------------------------------------------------------------
// Parsing.  Grammar:
//   formula := disj ; disj := conj ("|" conj)* ; conj := neg ("&" neg)*
//   neg := "~" neg | atom ; atom := letter | "T" | "F" | "(" formula ")"
// Binary operators associate left.  Unicode aliases accepted on input.

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
};

class Parser {
public:
    explicit Parser(const std::string& t) : lex_(t) {}

    Formula run() {
        Formula f = formula();
        if (!lex_.at_end()) throw ParseError("unexpected trailing input", lex_.pos);
        return f;
    }

private:
    Lexer lex_;

    Formula formula() {
        Formula f = conj();
        while (lex_.eat("|") || lex_.eat("∨")) f = Formula::disj(f, conj());
        return f;
    }

    Formula conj() {
        Formula f = neg();
        while (lex_.eat("&") || lex_.eat("∧")) f = Formula::conj(f, neg());
        return f;
    }

    Formula neg() {
        if (lex_.eat("~") || lex_.eat("¬")) return Formula::negation(neg());
        return atom();
    }

    Formula atom() {
        lex_.skip_ws();
        if (lex_.at_end()) throw ParseError("unexpected end of input", lex_.pos);
        if (lex_.eat("(")) {
            Formula f = formula();
            if (!lex_.eat(")")) throw ParseError("expected ')'", lex_.pos);
            return f;
        }
        if (lex_.eat("⊤")) return Formula::top();
        if (lex_.eat("⊥")) return Formula::bot();
        char c = lex_.text[lex_.pos];
        if (c == 'T' || c == 'F') {
            // reserved constant tokens; reject identifier-like continuations
            std::size_t start = lex_.pos;
            ++lex_.pos;
            if (lex_.pos < lex_.text.size() &&
                std::isalnum(static_cast<unsigned char>(lex_.text[lex_.pos])))
                throw ParseError("letter names may not start with reserved 'T'/'F'", start);
            return c == 'T' ? Formula::top() : Formula::bot();
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = lex_.pos;
            while (lex_.pos < lex_.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex_.text[lex_.pos])) ||
                    lex_.text[lex_.pos] == '_'))
                ++lex_.pos;
            return Formula::letter(lex_.text.substr(start, lex_.pos - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", lex_.pos);
    }
};

// precedence: atoms 3, ~ 2 (never needs parens around its argument except
// binary ops), & 1, | 0
int precedence(const Formula& f) {
    switch (f.conn()) {
        case Conn::And:
            return 1;
        case Conn::Or:
            return 0;
        default:
            return 3;
    }
}

void print_into(const Formula& f, std::ostream& out) {
    switch (f.conn()) {
        case Conn::Top:
            out << 'T';
            return;
        case Conn::Bot:
            out << 'F';
            return;
        case Conn::Letter:
            out << f.name();
            return;
        case Conn::Not: {
            Formula c = f.child();
            out << '~';
            if (precedence(c) < 3) {
                out << '(';
                print_into(c, out);
                out << ')';
            } else {
                print_into(c, out);
            }
            return;
        }
        case Conn::And:
        case Conn::Or: {
            int prec = precedence(f);
            const char* op = f.conn() == Conn::And ? " & " : " | ";
            Formula l = f.left(), r = f.right();
            // left-associative: left child may share the precedence level,
            // right child of the same level needs parentheses
            if (precedence(l) < prec) {
                out << '(';
                print_into(l, out);
                out << ')';
            } else {
                print_into(l, out);
            }
            out << op;
            if (precedence(r) <= prec) {
                out << '(';
                print_into(r, out);
                out << ')';
            } else {
                print_into(r, out);
            }
            return;
        }
    }
}

}  // namespace

Formula parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Formula& f) {
    std::ostringstream out;
    print_into(f, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Occurrence bookkeeping.

namespace {

void collect_occurrences(const Formula& f, bool under_neg, bool polarity_defined,
                         std::vector<Occurrence>& out) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
            return;
        case Conn::Letter: {
            Occurrence o;
            o.index = static_cast<int>(out.size());
            o.letter = f.name();
            if (polarity_defined)
                o.polarity = under_neg ? Polarity::Negative : Polarity::Positive;
            out.push_back(std::move(o));
            return;
        }
        case Conn::Not:
            collect_occurrences(f.child(), true, polarity_defined, out);
            return;
        case Conn::And:
        case Conn::Or:
            collect_occurrences(f.left(), under_neg, polarity_defined, out);
            collect_occurrences(f.right(), under_neg, polarity_defined, out);
            return;
    }
}

}  // namespace

std::vector<Occurrence> occurrences(const Formula& f) {
    std::vector<Occurrence> out;
    collect_occurrences(f, false, is_neg_reduced(f), out);
    return out;
}

int occurrence_count(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
            return 0;
        case Conn::Letter:
            return 1;
        case Conn::Not:
            return occurrence_count(f.child());
        case Conn::And:
        case Conn::Or:
            return occurrence_count(f.left()) + occurrence_count(f.right());
    }
    return 0;
}

Formula substitute(const Formula& a, const std::string& p, const Formula& b) {
    switch (a.conn()) {
        case Conn::Top:
        case Conn::Bot:
            return a;
        case Conn::Letter:
            return a.name() == p ? b : a;
        case Conn::Not:
            return Formula::negation(substitute(a.child(), p, b));
        case Conn::And:
            return Formula::conj(substitute(a.left(), p, b), substitute(a.right(), p, b));
        case Conn::Or:
            return Formula::disj(substitute(a.left(), p, b), substitute(a.right(), p, b));
    }
    return a;
}

std::set<std::string> letters(const Formula& f) {
    std::set<std::string> out;
    for (const auto& o : occurrences(f)) out.insert(o.letter);
    return out;
}

bool is_diversified(const Formula& f) {
    std::set<std::string> seen;
    for (const auto& o : occurrences(f))
        if (!seen.insert(o.letter).second) return false;
    return true;
}

bool is_neg_reduced(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
        case Conn::Letter:
            return true;
        case Conn::Not:
            return f.child().conn() == Conn::Letter;
        case Conn::And:
        case Conn::Or:
            return is_neg_reduced(f.left()) && is_neg_reduced(f.right());
    }
    return false;
}

bool in_lang_av(const Formula& f) {
    switch (f.conn()) {
        case Conn::Letter:
            return true;
        case Conn::And:
        case Conn::Or:
            return in_lang_av(f.left()) && in_lang_av(f.right());
        default:
            return false;
    }
}

bool in_lang_nav(const Formula& f) {
    switch (f.conn()) {
        case Conn::Letter:
            return true;
        case Conn::Not:
            return in_lang_nav(f.child());
        case Conn::And:
        case Conn::Or:
            return in_lang_nav(f.left()) && in_lang_nav(f.right());
        default:
            return false;
    }
}

bool in_lang_tbav(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
        case Conn::Letter:
            return true;
        case Conn::And:
        case Conn::Or:
            return in_lang_tbav(f.left()) && in_lang_tbav(f.right());
        default:
            return false;
    }
}

SignedLetterMultiset signed_counts(const Formula& f) {
    if (!is_neg_reduced(f)) throw Error("signed_counts requires a neg-reduced formula");
    SignedLetterMultiset counts;
    for (const auto& o : occurrences(f)) counts[{o.letter, *o.polarity}] += 1;
    return counts;
}

namespace {

bool match_uniform(const Formula& a, const Formula& a1, std::map<std::string, std::string>& sub) {
    if (a.conn() != a1.conn() && !(a.conn() == Conn::Letter && a1.conn() == Conn::Letter))
        return false;
    switch (a1.conn()) {
        case Conn::Top:
        case Conn::Bot:
            return a.conn() == a1.conn();
        case Conn::Letter: {
            if (a.conn() != Conn::Letter) return false;
            auto it = sub.find(a1.name());
            if (it == sub.end()) {
                sub.emplace(a1.name(), a.name());
                return true;
            }
            return it->second == a.name();
        }
        case Conn::Not:
            return a.conn() == Conn::Not && match_uniform(a.child(), a1.child(), sub);
        case Conn::And:
        case Conn::Or:
            return a.conn() == a1.conn() && match_uniform(a.left(), a1.left(), sub) &&
                   match_uniform(a.right(), a1.right(), sub);
    }
    return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> uniform_instance(const Formula& a,
                                                                   const Formula& a1) {
    std::map<std::string, std::string> sub;
    if (match_uniform(a, a1, sub)) return sub;
    return std::nullopt;
}

}  // namespace propiso
