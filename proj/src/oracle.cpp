#include "propiso/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "propiso/canon.hpp"
#include "propiso/construct.hpp"
#include "propiso/semantics.hpp"

namespace propiso {

namespace {

constexpr Axiom kAllAxioms[] = {
    Axiom::AssocAnd, Axiom::AssocOr,     Axiom::CommAnd,    Axiom::CommOr, Axiom::DoubleNeg,
    Axiom::DeMorganAnd, Axiom::DeMorganOr, Axiom::NegTop,   Axiom::NegBot,
};

void all_paths(const Formula& f, Path& cur, std::vector<Path>& out) {
    out.push_back(cur);
    switch (f.conn()) {
        case Conn::Not:
            cur.push_back(0);
            all_paths(f.child(), cur, out);
            cur.pop_back();
            return;
        case Conn::And:
        case Conn::Or:
            cur.push_back(0);
            all_paths(f.left(), cur, out);
            cur.back() = 1;
            all_paths(f.right(), cur, out);
            cur.pop_back();
            return;
        default:
            return;
    }
}

std::vector<Formula> successors(const Formula& f) {
    std::vector<Formula> out;
    Path cur;
    std::vector<Path> paths;
    all_paths(f, cur, paths);
    for (const auto& path : paths) {
        for (Axiom axiom : kAllAxioms) {
            for (Direction dir : {Direction::LR, Direction::RL}) {
                // skip unguarded expansions (A -> ~~A, F -> ~T, T -> ~F): they
                // are applicable everywhere and the closure would never settle
                if (dir == Direction::RL &&
                    (axiom == Axiom::DoubleNeg || axiom == Axiom::NegTop ||
                     axiom == Axiom::NegBot))
                    continue;
                try {
                    out.push_back(apply_step(f, RewriteStep{axiom, path, dir}));
                } catch (const Error&) {
                    // redex mismatch; not applicable here
                }
            }
        }
    }
    return out;
}

int leaf_count(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
        case Conn::Letter:
            return 1;
        case Conn::Not:
            return leaf_count(f.child());
        case Conn::And:
        case Conn::Or:
            return leaf_count(f.left()) + leaf_count(f.right());
    }
    return 0;
}

}  // namespace

bool RewriteClosure::contains(const Formula& f) const {
    return std::any_of(reached.begin(), reached.end(),
                       [&](const Formula& g) { return g == f; });
}

RewriteClosure bounded_closure(const Formula& a, int depth) {
    if (leaf_count(a) > kOracleMaxLeaves)
        throw Error("bounded_closure: formula exceeds the leaf guard");
    if (depth > kOracleMaxDepth) throw Error("bounded_closure: depth exceeds the guard");

    RewriteClosure closure{a, depth, {}};
    std::set<std::string> seen;
    std::deque<std::pair<Formula, int>> queue;
    seen.insert(print(a));
    queue.emplace_back(a, 0);
    while (!queue.empty()) {
        auto [f, d] = queue.front();
        queue.pop_front();
        closure.reached.push_back(f);
        if (d == depth) continue;
        for (const Formula& g : successors(f))
            if (seen.insert(print(g)).second) queue.emplace_back(g, d + 1);
    }
    return closure;
}

OracleAnswer oracle_theorem(const Formula& a, const Formula& b, int depth) {
    return bounded_closure(a, depth).contains(b) ? OracleAnswer::Yes : OracleAnswer::Unknown;
}

std::optional<std::vector<int>> oracle_witness_search(const Formula& a, const Formula& b) {
    if (!is_neg_reduced(a) || !is_neg_reduced(b))
        throw Error("oracle_witness_search: formulas must be neg-reduced");
    int na = occurrence_count(a), nb = occurrence_count(b);
    if (na > 8 || nb > 8) throw Error("oracle_witness_search: occurrence guard exceeded");
    if (na != nb) return std::nullopt;

    auto occs_a = occurrences(a);
    auto occs_b = occurrences(b);

    // candidate target indices per source occurrence, by signed letter
    std::vector<std::vector<int>> candidates(na);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            if (occs_a[x].letter == occs_b[y].letter &&
                occs_a[x].polarity == occs_b[y].polarity)
                candidates[x].push_back(y);

    std::vector<int> bij(na, -1);
    std::vector<bool> used(nb, false);
    std::function<std::optional<std::vector<int>>(int)> search =
        [&](int x) -> std::optional<std::vector<int>> {
        if (x == na) {
            try {
                IsoWitness w = lemma7_iso(a, b, bij);
                if (w.gf_is_identity && w.fg_is_identity) return bij;
            } catch (const Error&) {
                // this bijection yields no verified witness
            }
            return std::nullopt;
        }
        for (int y : candidates[x]) {
            if (used[y]) continue;
            used[y] = true;
            bij[x] = y;
            if (auto found = search(x + 1)) return found;
            used[y] = false;
            bij[x] = -1;
        }
        return std::nullopt;
    };
    return search(0);
}

}  // namespace propiso
