#include "propiso/semantics.hpp"

#include <vector>

namespace propiso {

bool eval(const Formula& f, const Valuation& v) {
    switch (f.conn()) {
        case Conn::Top:
            return true;
        case Conn::Bot:
            return false;
        case Conn::Letter: {
            auto it = v.find(f.name());
            if (it == v.end()) throw Error("valuation missing letter '" + f.name() + "'");
            return it->second;
        }
        case Conn::Not:
            return !eval(f.child(), v);
        case Conn::And:
            return eval(f.left(), v) && eval(f.right(), v);
        case Conn::Or:
            return eval(f.left(), v) || eval(f.right(), v);
    }
    return false;
}

namespace {

std::vector<std::string> checked_letters(const std::set<std::string>& ls, int max_letters) {
    if (static_cast<int>(ls.size()) > max_letters)
        throw Error("letter count " + std::to_string(ls.size()) + " exceeds cap " +
                    std::to_string(max_letters));
    return {ls.begin(), ls.end()};
}

template <typename Check>
bool all_valuations(const std::vector<std::string>& names, Check&& check) {
    Valuation v;
    std::uint64_t n = names.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::uint64_t i = 0; i < n; ++i) v[names[i]] = (bits >> i) & 1;
        if (!check(v)) return false;
    }
    return true;
}

}  // namespace

bool is_tautology(const Formula& f, int max_letters) {
    auto names = checked_letters(letters(f), max_letters);
    return all_valuations(names, [&](const Valuation& v) { return eval(f, v); });
}

bool are_equivalent(const Formula& a, const Formula& b, int max_letters) {
    std::set<std::string> ls = letters(a);
    ls.merge(letters(b));
    auto names = checked_letters(ls, max_letters);
    return all_valuations(names, [&](const Valuation& v) { return eval(a, v) == eval(b, v); });
}

bool implies(const Formula& a, const Formula& b, int max_letters) {
    std::set<std::string> ls = letters(a);
    ls.merge(letters(b));
    auto names = checked_letters(ls, max_letters);
    return all_valuations(names, [&](const Valuation& v) { return !eval(a, v) || eval(b, v); });
}

ConstantAssignment lemma1_assignment(const Formula& a, const Path& pos) {
    if (!in_lang_av(a)) throw Error("lemma1_assignment: formula must be in the and/or language");
    if (!is_diversified(a)) throw Error("lemma1_assignment: formula must be diversified");

    ConstantAssignment assignment;
    Formula cur = a;
    for (std::size_t d = 0; d < pos.size(); ++d) {
        if (cur.conn() != Conn::And && cur.conn() != Conn::Or)
            throw Error("lemma1_assignment: invalid subformula position");
        if (pos[d] != 0 && pos[d] != 1) throw Error("lemma1_assignment: invalid path step");
        Formula sibling = pos[d] == 0 ? cur.right() : cur.left();
        Formula constant = cur.conn() == Conn::And ? Formula::top() : Formula::bot();
        for (const auto& q : letters(sibling)) assignment.emplace(q, constant);
        cur = pos[d] == 0 ? cur.left() : cur.right();
    }

    Formula target = cur;  // the addressed subformula B
    if (!are_equivalent(apply_assignment(a, assignment), target))
        throw Error("lemma1_assignment: postcondition failed");
    return assignment;
}

Formula apply_assignment(const Formula& f, const ConstantAssignment& assignment) {
    Formula out = f;
    for (const auto& [name, constant] : assignment) out = substitute(out, name, constant);
    return out;
}

}  // namespace propiso
