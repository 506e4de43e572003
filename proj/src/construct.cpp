#include "propiso/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "propiso/semantics.hpp"

namespace propiso {

namespace {

// Occurrence-labeled tree over neg-reduced formulas; a signed atom (p or ~p)
// is one leaf.  Letter leaves carry the index of the source occurrence they
// copy (-1 for introduced constants), so relations survive the duplication in
// the conjunction case of the extraction recursion.
struct LF {
    Conn conn;  // Top, Bot, Letter, And, Or
    std::string name;
    bool negated = false;
    int label = -1;
    std::vector<LF> kids;
};

LF lf_of(const Formula& f, int& next_label) {
    switch (f.conn()) {
        case Conn::Top:
            return {Conn::Top, {}, false, -1, {}};
        case Conn::Bot:
            return {Conn::Bot, {}, false, -1, {}};
        case Conn::Letter:
            return {Conn::Letter, f.name(), false, next_label++, {}};
        case Conn::Not:
            if (f.child().conn() != Conn::Letter)
                throw Error("formula must be neg-reduced");
            return {Conn::Letter, f.child().name(), true, next_label++, {}};
        case Conn::And:
        case Conn::Or: {
            LF left = lf_of(f.left(), next_label);
            LF right = lf_of(f.right(), next_label);
            return {f.conn(), {}, false, -1, {std::move(left), std::move(right)}};
        }
    }
    throw Error("unreachable");
}

bool lf_contains(const LF& f, int label) {
    if (f.conn == Conn::Letter) return f.label == label;
    for (const auto& k : f.kids)
        if (lf_contains(k, label)) return true;
    return false;
}

Formula lf_formula(const LF& f) {
    switch (f.conn) {
        case Conn::Top:
            return Formula::top();
        case Conn::Bot:
            return Formula::bot();
        case Conn::Letter: {
            Formula atom = Formula::letter(f.name);
            return f.negated ? Formula::negation(atom) : atom;
        }
        case Conn::And:
            return Formula::conj(lf_formula(f.kids[0]), lf_formula(f.kids[1]));
        case Conn::Or:
            return Formula::disj(lf_formula(f.kids[0]), lf_formula(f.kids[1]));
        default:
            throw Error("unreachable");
    }
}

void lf_labels(const LF& f, std::vector<int>& out) {
    if (f.conn == Conn::Letter) {
        out.push_back(f.label);
        return;
    }
    for (const auto& k : f.kids) lf_labels(k, out);
}

// The structural recursion of the extraction lemma: peel the context of the
// designated occurrence, conjoining sibling conjuncts into both branches and
// shunting sibling disjuncts into the second one.
std::pair<LF, LF> lf_extract(const LF& a, int label) {
    if (a.conn == Conn::Letter && a.label == label)
        return {LF{Conn::Top, {}, false, -1, {}}, LF{Conn::Bot, {}, false, -1, {}}};
    if (a.conn != Conn::And && a.conn != Conn::Or)
        throw Error("extraction: designated occurrence not found");
    bool in_left = lf_contains(a.kids[0], label);
    const LF& inner = in_left ? a.kids[0] : a.kids[1];
    const LF& other = in_left ? a.kids[1] : a.kids[0];
    auto [a1, a2] = lf_extract(inner, label);
    if (a.conn == Conn::And)
        return {LF{Conn::And, {}, false, -1, {std::move(a1), other}},
                LF{Conn::And, {}, false, -1, {std::move(a2), other}}};
    return {std::move(a1), LF{Conn::Or, {}, false, -1, {std::move(a2), other}}};
}

// Extraction at a global occurrence index; the written-down leaf is the signed
// atom of that occurrence.  Tautology checks run on the real formulas.
Lemma4Result extract_at(const Formula& a, int x) {
    int next_label = 0;
    LF la = lf_of(a, next_label);
    if (x < 0 || x >= next_label) throw Error("extraction: occurrence index out of range");
    auto occs = occurrences(a);
    auto [a1, a2] = lf_extract(la, x);
    LF atom{Conn::Letter, occs[x].letter, occs[x].polarity == Polarity::Negative, x, {}};
    LF target{Conn::Or,
              {},
              false,
              -1,
              {LF{Conn::And, {}, false, -1, {std::move(atom), a1}}, a2}};

    Formula fa1 = lf_formula(a1), fa2 = lf_formula(a2), ftarget = lf_formula(target);
    Lemma4Result result{fa1, fa2, ftarget, TypedRelArrow{a, ftarget, {}},
                        TypedRelArrow{ftarget, a, {}}};

    std::vector<int> labels;
    lf_labels(target, labels);
    auto target_occs = occurrences(result.target);
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] < 0) continue;
        if (occs[labels[j]].letter != target_occs[j].letter)
            throw Error("extraction: provenance links a foreign letter");
        result.tau.rel.emplace(labels[j], static_cast<int>(j));
    }
    result.sigma = converse(result.tau);

    if (!are_equivalent(a, result.target))
        throw Error("extraction equivalence is not a tautology");
    return result;
}

Path path_to_occurrence(const Formula& b, int occ) {
    Path path;
    int count = 0;
    std::function<bool(const Formula&)> locate = [&](const Formula& f) -> bool {
        switch (f.conn()) {
            case Conn::Letter:
                return count++ == occ;
            case Conn::Not:
                return count++ == occ;  // signed atom is one occurrence
            case Conn::And:
            case Conn::Or:
                path.push_back(0);
                if (locate(f.left())) return true;
                path.back() = 1;
                if (locate(f.right())) return true;
                path.pop_back();
                return false;
            default:
                return false;
        }
    };
    if (!locate(b)) throw Error("occurrence index out of range");
    return path;
}

// b with the signed atom `prefix` conjoined onto the occurrence at index occ;
// eta is the relation of the arrow prefix & b -> b'.
Lemma5Result implant_at(const Formula& b, int occ, const Formula& prefix) {
    if (!is_neg_reduced(b)) throw Error("implant: formula must be neg-reduced");
    Path path = path_to_occurrence(b, occ);

    Formula leaf = subformula_at(b, path);
    Formula b_prime = replace_at(b, path, Formula::conj(prefix, leaf));
    Formula source = Formula::conj(prefix, b);
    Lemma5Result result{b_prime, TypedRelArrow{source, b_prime, {}}};
    result.eta.rel.emplace(0, occ);  // the prefixed atom and its implanted copy
    int nb = occurrence_count(b);
    for (int i = 0; i < nb; ++i)
        result.eta.rel.emplace(1 + i, i < occ ? i : i + 1);

    if (!implies(source, result.b_prime))
        throw Error("implantation implication is not a tautology");
    return result;
}

// Single-link arrow between occurrence x of a and occurrence y of b, both the
// same signed atom; requires a -> b to be a tautology.
TypedRelArrow single_link(const Formula& a, const Formula& b, int x, int y) {
    auto occs_a = occurrences(a);
    auto occs_b = occurrences(b);
    if (x < 0 || x >= static_cast<int>(occs_a.size()) || y < 0 ||
        y >= static_cast<int>(occs_b.size()))
        throw Error("lemma6: occurrence index out of range");
    if (occs_a[x].letter != occs_b[y].letter || occs_a[x].polarity != occs_b[y].polarity)
        throw Error("lemma6: occurrences carry different signed letters");
    if (!implies(a, b)) throw Error("lemma6: implication is not a tautology");

    Lemma4Result l4 = extract_at(a, x);
    Formula atom = occs_a[x].polarity == Polarity::Negative
                       ? Formula::negation(Formula::letter(occs_a[x].letter))
                       : Formula::letter(occs_a[x].letter);

    Formula atom_a1 = Formula::conj(atom, l4.a1);
    Formula atom_b = Formula::conj(atom, b);

    // first projection out of atom & a1, paired with a zero composite into b;
    // the zero composites have empty relations because they end in a zero
    // identity arrow
    TypedRelArrow pair{atom_a1, atom_b, {{0, 0}}};

    Lemma5Result l5 = implant_at(b, y, atom);
    TypedRelArrow theta{l5.b_prime, b, {}};
    int nb = static_cast<int>(occs_b.size());
    for (int i = 0; i < nb; ++i) {
        if (i < y)
            theta.rel.emplace(i, i);
        else if (i == y)
            theta.rel.emplace(y, y);  // first projection keeps the implanted atom
        else
            theta.rel.emplace(i + 1, i);
    }
    TypedRelArrow theta_eta = compose(l5.eta, theta);

    // copairing over (atom & a1) | a2: the second component is another zero
    // composite, so only the first contributes
    TypedRelArrow mu{l4.target, b, compose(pair, theta_eta).rel};
    TypedRelArrow f = compose(l4.tau, mu);

    if (f.rel != std::set<std::pair<int, int>>{{x, y}})
        throw Error("lemma6: relation is not the expected single link");
    return f;
}

}  // namespace

Lemma4Result lemma4_extract(const Formula& a, const std::string& p, int occ) {
    if (!in_lang_tbav(a)) throw Error("lemma4: formula must be negation-free");
    int x = -1, seen = 0;
    for (const auto& o : occurrences(a))
        if (o.letter == p && seen++ == occ) {
            x = o.index;
            break;
        }
    if (x < 0) throw Error("lemma4: no such occurrence of '" + p + "'");
    return extract_at(a, x);
}

Lemma5Result lemma5_implant(const Formula& b, int occ, const std::string& p) {
    if (!in_lang_tbav(b)) throw Error("lemma5: formula must be negation-free");
    return implant_at(b, occ, Formula::letter(p));
}

TypedRelArrow lemma6_arrow(const Formula& a, const Formula& b, int x, int y) {
    if (!in_lang_tbav(a) || !in_lang_tbav(b))
        throw Error("lemma6: formulas must be negation-free");
    return single_link(a, b, x, y);
}

Formula encode_signed_atoms(const Formula& f) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
        case Conn::Letter:
            return f;
        case Conn::Not:
            if (f.child().conn() != Conn::Letter)
                throw Error("encode_signed_atoms: formula must be neg-reduced");
            return Formula::letter(f.child().name() + "'");
        case Conn::And:
            return Formula::conj(encode_signed_atoms(f.left()),
                                 encode_signed_atoms(f.right()));
        case Conn::Or:
            return Formula::disj(encode_signed_atoms(f.left()),
                                 encode_signed_atoms(f.right()));
    }
    return f;
}

IsoWitness lemma7_iso(const Formula& a, const Formula& b, const std::vector<int>& bij) {
    if (!is_neg_reduced(a) || !is_neg_reduced(b))
        throw Error("lemma7: formulas must be neg-reduced");
    if (!are_equivalent(a, b)) throw Error("lemma7: equivalence is not a tautology");
    if (signed_counts(a) != signed_counts(b))
        throw Error("lemma7: formulas are not letter-homogeneous");

    int na = occurrence_count(a), nb = occurrence_count(b);
    if (static_cast<int>(bij.size()) != na || na != nb)
        throw Error("lemma7: bijection has wrong size");
    auto occs_a = occurrences(a);
    auto occs_b = occurrences(b);
    std::vector<bool> hit(nb, false);
    for (int x = 0; x < na; ++x) {
        int y = bij[x];
        if (y < 0 || y >= nb || hit[y]) throw Error("lemma7: not a bijection");
        hit[y] = true;
        if (occs_a[x].letter != occs_b[y].letter ||
            occs_a[x].polarity != occs_b[y].polarity)
            throw Error("lemma7: bijection does not respect signed letters");
    }

    IsoWitness w{zero_arrow(a, b), zero_arrow(b, a), false, false};
    for (int x = 0; x < na; ++x) {
        TypedRelArrow single = single_link(a, b, x, bij[x]);
        w.f.rel.insert(single.rel.begin(), single.rel.end());
        TypedRelArrow back = single_link(b, a, bij[x], x);
        w.g.rel.insert(back.rel.begin(), back.rel.end());
    }

    w.gf_is_identity = compose(w.f, w.g).rel == identity_arrow(a).rel;
    w.fg_is_identity = compose(w.g, w.f).rel == identity_arrow(b).rel;
    return w;
}

IsoVerdict decide_iso_boolean(const Formula& a, const Formula& b, int max_letters) {
    Formula ra = nnf(a).first;
    Formula rb = nnf(b).first;
    if (!are_equivalent(ra, rb, max_letters)) return {false, "not equivalent", std::nullopt};
    if (signed_counts(ra) != signed_counts(rb))
        return {false, "letter-homogeneity fails", std::nullopt};

    // match equal signed letters by left-to-right rank
    auto occs_a = occurrences(ra);
    auto occs_b = occurrences(rb);
    std::map<std::pair<std::string, Polarity>, std::vector<int>> pool;
    for (const auto& o : occs_b) pool[{o.letter, *o.polarity}].push_back(o.index);
    std::map<std::pair<std::string, Polarity>, std::size_t> cursor;
    std::vector<int> bij(occs_a.size());
    for (const auto& o : occs_a) {
        auto key = std::make_pair(o.letter, *o.polarity);
        bij[o.index] = pool[key][cursor[key]++];
    }

    IsoVerdict verdict{true, "equivalent and letter-homogeneous", std::nullopt};
    verdict.witness = lemma7_iso(ra, rb, bij);
    return verdict;
}

std::vector<int> trace_permutation(const Formula& a, const RewriteTrace& trace) {
    int n = occurrence_count(a);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    Formula cur = a;
    for (const auto& step : trace) {
        if (step.axiom == Axiom::CommAnd || step.axiom == Axiom::CommOr) {
            // occurrences of the two operands swap as blocks; everything else
            // (assoc, dneg, De Morgan, constant rules) keeps the order
            int before = 0;
            Formula node = cur;
            for (int d : step.at) {
                if (node.conn() == Conn::Not) {
                    node = node.child();
                } else {
                    if (d == 1) before += occurrence_count(node.left());
                    node = d == 0 ? node.left() : node.right();
                }
            }
            int na = occurrence_count(node.left());
            int nb = occurrence_count(node.right());
            for (int& image : perm) {
                if (image >= before && image < before + na)
                    image += nb;
                else if (image >= before + na && image < before + na + nb)
                    image -= na;
            }
        }
        cur = apply_step(cur, step);
    }
    return perm;
}

GeneralityVerdict decide_iso_generality(const Formula& a, const Formula& b) {
    if (!in_lang_nav(a) || !in_lang_nav(b))
        throw Error("decide_iso_generality: constants are not allowed");
    if (!is_theorem_nav(a, b))
        return {false, "canonical forms differ", std::nullopt, std::nullopt};

    GeneralityVerdict verdict{true, "equational theorem", std::nullopt, std::nullopt};
    verdict.trace = derive(a, b);
    auto perm = trace_permutation(a, *verdict.trace);
    TypedRelArrow arrow{a, b, {}};
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) arrow.rel.emplace(i, perm[i]);
    if (!is_bijective(arrow)) throw Error("decide_iso_generality: trace permutation broken");
    verdict.bijection = std::move(arrow);
    return verdict;
}

}  // namespace propiso
