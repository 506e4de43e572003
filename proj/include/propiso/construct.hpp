#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propiso/canon.hpp"
#include "propiso/formula.hpp"
#include "propiso/linking.hpp"

namespace propiso {

/// Extraction of a designated letter occurrence: a is rewritten (up to
/// equivalence) as (p & a1) | a2, with tau relating every source occurrence to
/// each of its copies in the target and sigma its converse.
struct Lemma4Result {
    Formula a1;
    Formula a2;
    Formula target;  // (p & a1) | a2
    TypedRelArrow tau;
    TypedRelArrow sigma;
};

/// occ is 0-based among the occurrences of p in a; a must be negation-free.
Lemma4Result lemma4_extract(const Formula& a, const std::string& p, int occ);

/// b with the occurrence at global index occ (a letter q) replaced by p & q;
/// eta is the occurrence relation of the arrow p & b -> b'.
struct Lemma5Result {
    Formula b_prime;
    TypedRelArrow eta;
};

Lemma5Result lemma5_implant(const Formula& b, int occ, const std::string& p);

/// An arrow a -> b whose relation is exactly the single link between occurrence
/// x in a and occurrence y in b (same letter; a -> b must be a tautology).
/// Both formulas must be negation-free.
TypedRelArrow lemma6_arrow(const Formula& a, const Formula& b, int x, int y);

struct IsoWitness {
    TypedRelArrow f;  // a -> b
    TypedRelArrow g;  // b -> a
    bool gf_is_identity = false;  // f then g equals the identity relation on a
    bool fg_is_identity = false;  // g then f equals the identity relation on b
};

/// bij[x] = target occurrence matched with source occurrence x; must respect
/// letter and polarity.  Inputs must be neg-reduced, equivalent and
/// letter-homogeneous; the witness is assembled from single-link arrows and
/// verified by composing both ways.
IsoWitness lemma7_iso(const Formula& a, const Formula& b, const std::vector<int>& bij);

struct IsoVerdict {
    bool iso = false;
    std::string reason;
    std::optional<IsoWitness> witness;
};

/// Boolean-category isomorphism: neg-reduce, then tautology of the equivalence
/// plus equal signed letter counts; on success returns a verified witness for
/// the canonical left-to-right matching of equal signed letters.
IsoVerdict decide_iso_boolean(const Formula& a, const Formula& b,
                              int max_letters = 24);

struct GeneralityVerdict {
    bool iso = false;
    std::string reason;
    std::optional<RewriteTrace> trace;
    std::optional<TypedRelArrow> bijection;
};

/// Generality isomorphism: theoremhood of the equivalence in the equational
/// system; on success returns the derivation trace and the occurrence bijection
/// it induces.  Constants are rejected.
GeneralityVerdict decide_iso_generality(const Formula& a, const Formula& b);

/// The occurrence permutation induced by replaying a trace from a.
std::vector<int> trace_permutation(const Formula& a, const RewriteTrace& trace);

/// Neg-reduced formula with each negated atom replaced by an opaque positive
/// letter, so the negation-free lemmas apply occurrence for occurrence.
Formula encode_signed_atoms(const Formula& f);

}  // namespace propiso
