#pragma once

#include <string>
#include <utility>
#include <vector>

#include "propiso/formula.hpp"

namespace propiso {

enum class Axiom {
    AssocAnd,
    AssocOr,
    CommAnd,
    CommOr,
    DoubleNeg,
    DeMorganAnd,
    DeMorganOr,
    NegTop,
    NegBot,
};

enum class Direction { LR, RL };

/// One axiom application at a position; congruence is encoded by the path.
struct RewriteStep {
    Axiom axiom;
    Path at;
    Direction dir = Direction::LR;
};

using RewriteTrace = std::vector<RewriteStep>;

std::string axiom_name(Axiom a);
std::string step_text(const RewriteStep& s);

/// Applies one step; throws if the redex at the path does not match.
Formula apply_step(const Formula& f, const RewriteStep& step);

/// Replays a trace step by step; errors carry the index of the failing step.
Formula replay(const Formula& f, const RewriteTrace& trace);

/// Negation normal form with a replayable trace of double-negation, De Morgan
/// and ~T/~F steps.
std::pair<Formula, RewriteTrace> nnf(const Formula& f);

/// Flattened n-ary form with sorted children, duplicates preserved.
/// Two constant-free formulas have equal canonical forms exactly when their
/// equivalence is derivable by the assoc/comm/dneg/De Morgan axioms.
struct CanonicalForm {
    enum class Kind { Bot, Top, PosAtom, NegAtom, AndN, OrN };  // sort rank order
    Kind kind = Kind::Top;
    std::string letter;
    std::vector<CanonicalForm> children;

    bool operator==(const CanonicalForm& other) const;
    bool operator!=(const CanonicalForm& other) const { return !(*this == other); }
};

/// Total order: F < T < atoms < negated atoms < AND < OR; atoms
/// lexicographically; composites by (rank, arity, child list).
int compare(const CanonicalForm& a, const CanonicalForm& b);

CanonicalForm ac_canonical(const Formula& f);

/// Deterministic text rendering, e.g. "AND[p, p, q]".
std::string render(const CanonicalForm& c);

/// Right-nested binary formula reading of a canonical form.
Formula binary_rep(const CanonicalForm& c);

/// Rewrites f into binary_rep(ac_canonical(f)), returning the end formula and
/// the full trace.
std::pair<Formula, RewriteTrace> canonicalize_trace(const Formula& f);

/// Theoremhood of a <-> b in the and/or equational system; inputs must be in
/// the and/or language.
bool is_theorem_av(const Formula& a, const Formula& b);

/// Theoremhood in the system with double negation and De Morgan; inputs must
/// be constant-free.
bool is_theorem_nav(const Formula& a, const Formula& b);

/// Trace transforming a into b, built from the canonicalization traces of both
/// sides; throws if the pair is not a theorem.
RewriteTrace derive(const Formula& a, const Formula& b);

/// Reverses a trace (flipping step directions) so it rewrites the end formula
/// back to the start.
RewriteTrace reversed(const RewriteTrace& trace);

}  // namespace propiso
