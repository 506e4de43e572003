#include "propiso/canon.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace propiso {

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::AssocAnd:
            return "assoc&";
        case Axiom::AssocOr:
            return "assoc|";
        case Axiom::CommAnd:
            return "comm&";
        case Axiom::CommOr:
            return "comm|";
        case Axiom::DoubleNeg:
            return "dneg";
        case Axiom::DeMorganAnd:
            return "deMorgan&";
        case Axiom::DeMorganOr:
            return "deMorgan|";
        case Axiom::NegTop:
            return "negT";
        case Axiom::NegBot:
            return "negF";
    }
    return "?";
}

std::string step_text(const RewriteStep& s) {
    std::ostringstream out;
    out << axiom_name(s.axiom) << (s.dir == Direction::LR ? ">" : "<") << "@";
    if (s.at.empty()) out << "e";
    for (std::size_t i = 0; i < s.at.size(); ++i) {
        if (i) out << ".";
        out << s.at[i];
    }
    return out.str();
}

namespace {

// The left-to-right reading of each axiom on the redex, or nullopt on mismatch.
std::optional<Formula> rewrite_redex(const Formula& f, Axiom axiom, Direction dir) {
    bool lr = dir == Direction::LR;
    switch (axiom) {
        case Axiom::AssocAnd:
            if (lr) {
                if (f.conn() == Conn::And && f.left().conn() == Conn::And)
                    return Formula::conj(f.left().left(),
                                         Formula::conj(f.left().right(), f.right()));
            } else {
                if (f.conn() == Conn::And && f.right().conn() == Conn::And)
                    return Formula::conj(Formula::conj(f.left(), f.right().left()),
                                         f.right().right());
            }
            return std::nullopt;
        case Axiom::AssocOr:
            if (lr) {
                if (f.conn() == Conn::Or && f.left().conn() == Conn::Or)
                    return Formula::disj(f.left().left(),
                                         Formula::disj(f.left().right(), f.right()));
            } else {
                if (f.conn() == Conn::Or && f.right().conn() == Conn::Or)
                    return Formula::disj(Formula::disj(f.left(), f.right().left()),
                                         f.right().right());
            }
            return std::nullopt;
        case Axiom::CommAnd:
            if (f.conn() == Conn::And) return Formula::conj(f.right(), f.left());
            return std::nullopt;
        case Axiom::CommOr:
            if (f.conn() == Conn::Or) return Formula::disj(f.right(), f.left());
            return std::nullopt;
        case Axiom::DoubleNeg:
            if (lr) {
                if (f.conn() == Conn::Not && f.child().conn() == Conn::Not)
                    return f.child().child();
                return std::nullopt;
            }
            return Formula::negation(Formula::negation(f));
        case Axiom::DeMorganAnd:
            if (lr) {
                if (f.conn() == Conn::Not && f.child().conn() == Conn::And)
                    return Formula::disj(Formula::negation(f.child().left()),
                                         Formula::negation(f.child().right()));
            } else {
                if (f.conn() == Conn::Or && f.left().conn() == Conn::Not &&
                    f.right().conn() == Conn::Not)
                    return Formula::negation(
                        Formula::conj(f.left().child(), f.right().child()));
            }
            return std::nullopt;
        case Axiom::DeMorganOr:
            if (lr) {
                if (f.conn() == Conn::Not && f.child().conn() == Conn::Or)
                    return Formula::conj(Formula::negation(f.child().left()),
                                         Formula::negation(f.child().right()));
            } else {
                if (f.conn() == Conn::And && f.left().conn() == Conn::Not &&
                    f.right().conn() == Conn::Not)
                    return Formula::negation(
                        Formula::disj(f.left().child(), f.right().child()));
            }
            return std::nullopt;
        case Axiom::NegTop:
            if (lr) {
                if (f.conn() == Conn::Not && f.child().conn() == Conn::Top)
                    return Formula::bot();
            } else {
                if (f.conn() == Conn::Bot) return Formula::negation(Formula::top());
            }
            return std::nullopt;
        case Axiom::NegBot:
            if (lr) {
                if (f.conn() == Conn::Not && f.child().conn() == Conn::Bot)
                    return Formula::top();
            } else {
                if (f.conn() == Conn::Top) return Formula::negation(Formula::bot());
            }
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Formula apply_step(const Formula& f, const RewriteStep& step) {
    Formula redex = subformula_at(f, step.at);
    auto result = rewrite_redex(redex, step.axiom, step.dir);
    if (!result) throw Error("redex mismatch for step " + step_text(step));
    return replace_at(f, step.at, *result);
}

Formula replay(const Formula& f, const RewriteTrace& trace) {
    Formula cur = f;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        try {
            cur = apply_step(cur, trace[i]);
        } catch (const Error& e) {
            throw Error("replay failed at step " + std::to_string(i) + ": " + e.what());
        }
    }
    return cur;
}

RewriteTrace reversed(const RewriteTrace& trace) {
    RewriteTrace out;
    out.reserve(trace.size());
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        RewriteStep s = *it;
        s.dir = s.dir == Direction::LR ? Direction::RL : Direction::LR;
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// NNF by repeatedly rewriting the leftmost-outermost negation redex.

namespace {

// path to the first Not node whose child is not a letter, if any
bool find_neg_redex(const Formula& f, Path& path) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
        case Conn::Letter:
            return false;
        case Conn::Not:
            if (f.child().conn() != Conn::Letter) return true;
            return false;
        case Conn::And:
        case Conn::Or:
            path.push_back(0);
            if (find_neg_redex(f.left(), path)) return true;
            path.back() = 1;
            if (find_neg_redex(f.right(), path)) return true;
            path.pop_back();
            return false;
    }
    return false;
}

Axiom neg_axiom_for(const Formula& negated_child) {
    switch (negated_child.conn()) {
        case Conn::Not:
            return Axiom::DoubleNeg;
        case Conn::And:
            return Axiom::DeMorganAnd;
        case Conn::Or:
            return Axiom::DeMorganOr;
        case Conn::Top:
            return Axiom::NegTop;
        case Conn::Bot:
            return Axiom::NegBot;
        default:
            throw Error("no negation redex");
    }
}

}  // namespace

std::pair<Formula, RewriteTrace> nnf(const Formula& f) {
    Formula cur = f;
    RewriteTrace trace;
    for (;;) {
        Path path;
        if (!find_neg_redex(cur, path)) break;
        RewriteStep step{neg_axiom_for(subformula_at(cur, path).child()), path, Direction::LR};
        cur = apply_step(cur, step);
        trace.push_back(std::move(step));
    }
    return {cur, trace};
}

// ---------------------------------------------------------------------------
// Canonical forms.

namespace {

int rank(CanonicalForm::Kind k) { return static_cast<int>(k); }

}  // namespace

int compare(const CanonicalForm& a, const CanonicalForm& b) {
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
    switch (a.kind) {
        case CanonicalForm::Kind::Bot:
        case CanonicalForm::Kind::Top:
            return 0;
        case CanonicalForm::Kind::PosAtom:
        case CanonicalForm::Kind::NegAtom:
            return a.letter.compare(b.letter) < 0 ? -1 : (a.letter == b.letter ? 0 : 1);
        case CanonicalForm::Kind::AndN:
        case CanonicalForm::Kind::OrN: {
            if (a.children.size() != b.children.size())
                return a.children.size() < b.children.size() ? -1 : 1;
            for (std::size_t i = 0; i < a.children.size(); ++i) {
                int c = compare(a.children[i], b.children[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

bool CanonicalForm::operator==(const CanonicalForm& other) const {
    return compare(*this, other) == 0;
}

namespace {

CanonicalForm canon_of_reduced(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
            return {CanonicalForm::Kind::Top, {}, {}};
        case Conn::Bot:
            return {CanonicalForm::Kind::Bot, {}, {}};
        case Conn::Letter:
            return {CanonicalForm::Kind::PosAtom, f.name(), {}};
        case Conn::Not:
            // neg-reduced input: child is a letter
            return {CanonicalForm::Kind::NegAtom, f.child().name(), {}};
        case Conn::And:
        case Conn::Or: {
            auto kind = f.conn() == Conn::And ? CanonicalForm::Kind::AndN
                                              : CanonicalForm::Kind::OrN;
            CanonicalForm out{kind, {}, {}};
            for (const Formula& side : {f.left(), f.right()}) {
                CanonicalForm c = canon_of_reduced(side);
                if (c.kind == kind)
                    for (auto& gc : c.children) out.children.push_back(std::move(gc));
                else
                    out.children.push_back(std::move(c));
            }
            std::stable_sort(out.children.begin(), out.children.end(),
                             [](const CanonicalForm& x, const CanonicalForm& y) {
                                 return compare(x, y) < 0;
                             });
            return out;
        }
    }
    throw Error("unreachable");
}

}  // namespace

CanonicalForm ac_canonical(const Formula& f) { return canon_of_reduced(nnf(f).first); }

std::string render(const CanonicalForm& c) {
    switch (c.kind) {
        case CanonicalForm::Kind::Top:
            return "T";
        case CanonicalForm::Kind::Bot:
            return "F";
        case CanonicalForm::Kind::PosAtom:
            return c.letter;
        case CanonicalForm::Kind::NegAtom:
            return "~" + c.letter;
        case CanonicalForm::Kind::AndN:
        case CanonicalForm::Kind::OrN: {
            std::string out = c.kind == CanonicalForm::Kind::AndN ? "AND[" : "OR[";
            for (std::size_t i = 0; i < c.children.size(); ++i) {
                if (i) out += ", ";
                out += render(c.children[i]);
            }
            return out + "]";
        }
    }
    return "?";
}

Formula binary_rep(const CanonicalForm& c) {
    switch (c.kind) {
        case CanonicalForm::Kind::Top:
            return Formula::top();
        case CanonicalForm::Kind::Bot:
            return Formula::bot();
        case CanonicalForm::Kind::PosAtom:
            return Formula::letter(c.letter);
        case CanonicalForm::Kind::NegAtom:
            return Formula::negation(Formula::letter(c.letter));
        case CanonicalForm::Kind::AndN:
        case CanonicalForm::Kind::OrN: {
            bool conj = c.kind == CanonicalForm::Kind::AndN;
            Formula out = binary_rep(c.children.back());
            for (auto it = c.children.rbegin() + 1; it != c.children.rend(); ++it)
                out = conj ? Formula::conj(binary_rep(*it), out)
                           : Formula::disj(binary_rep(*it), out);
            return out;
        }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Trace-recording canonicalization: NNF, then per node flatten same-op chains
// into a right comb (assoc) and bubble-sort the comb elements (assoc + comm).

namespace {

struct TraceBuilder {
    Formula cur;
    RewriteTrace trace;

    explicit TraceBuilder(Formula f) : cur(std::move(f)) {}

    void emit(Axiom axiom, Path at, Direction dir) {
        RewriteStep step{axiom, std::move(at), dir};
        cur = apply_step(cur, step);
        trace.push_back(std::move(step));
    }

    Formula at(const Path& p) const { return subformula_at(cur, p); }

    void sort_node(const Path& path) {
        Formula node = at(path);
        Conn op = node.conn();
        if (op != Conn::And && op != Conn::Or) return;
        Axiom assoc = op == Conn::And ? Axiom::AssocAnd : Axiom::AssocOr;
        Axiom comm = op == Conn::And ? Axiom::CommAnd : Axiom::CommOr;

        {
            Path l = path;
            l.push_back(0);
            sort_node(l);
        }
        {
            Path r = path;
            r.push_back(1);
            sort_node(r);
        }

        // flatten into a right comb
        int comb_len = 1;
        Path p = path;
        for (;;) {
            while (at(p).left().conn() == op) emit(assoc, p, Direction::LR);
            ++comb_len;
            Path next = p;
            next.push_back(1);
            if (at(next).conn() != op) break;
            p = std::move(next);
        }

        // cache element keys for comparisons; maintained through swaps
        std::vector<CanonicalForm> keys;
        keys.reserve(comb_len);
        Path q = path;
        for (int k = 0; k < comb_len; ++k) {
            Formula n = at(q);
            if (k + 1 < comb_len) {
                keys.push_back(ac_canonical(n.left()));
                q.push_back(1);
            } else {
                keys.push_back(ac_canonical(n));
                // q now addresses the last element itself (parent's right child)
            }
        }

        // bubble sort over comb positions 0..comb_len-1
        for (int pass = 0; pass + 1 < comb_len; ++pass) {
            for (int k = 0; k + 2 + pass <= comb_len; ++k) {
                if (compare(keys[k], keys[k + 1]) <= 0) continue;
                Path qk = path;
                for (int i = 0; i < k; ++i) qk.push_back(1);
                if (k + 2 == comb_len) {
                    emit(comm, qk, Direction::LR);
                } else {
                    emit(assoc, qk, Direction::RL);
                    Path left = qk;
                    left.push_back(0);
                    emit(comm, left, Direction::LR);
                    emit(assoc, qk, Direction::LR);
                }
                std::swap(keys[k], keys[k + 1]);
            }
        }
    }
};

}  // namespace

std::pair<Formula, RewriteTrace> canonicalize_trace(const Formula& f) {
    auto [reduced, neg_trace] = nnf(f);
    TraceBuilder b(reduced);
    b.trace = std::move(neg_trace);
    b.sort_node({});
    return {b.cur, std::move(b.trace)};
}

bool is_theorem_av(const Formula& a, const Formula& b) {
    if (!in_lang_av(a) || !in_lang_av(b))
        throw Error("is_theorem_av: inputs must be in the and/or language");
    return ac_canonical(a) == ac_canonical(b);
}

bool is_theorem_nav(const Formula& a, const Formula& b) {
    if (!in_lang_nav(a) || !in_lang_nav(b))
        throw Error("is_theorem_nav: inputs must be constant-free");
    return ac_canonical(a) == ac_canonical(b);
}

RewriteTrace derive(const Formula& a, const Formula& b) {
    auto [rep_a, trace_a] = canonicalize_trace(a);
    auto [rep_b, trace_b] = canonicalize_trace(b);
    if (rep_a != rep_b) throw Error("derive: not a theorem");
    RewriteTrace out = std::move(trace_a);
    RewriteTrace back = reversed(trace_b);
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

}  // namespace propiso
