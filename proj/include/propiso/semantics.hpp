#pragma once

#include <map>
#include <string>

#include "propiso/formula.hpp"

namespace propiso {

using Valuation = std::map<std::string, bool>;

/// Letter -> T/F formula, as produced by the constructive subformula lemma.
using ConstantAssignment = std::map<std::string, Formula>;

inline constexpr int kDefaultMaxLetters = 24;

bool eval(const Formula& f, const Valuation& v);

/// Exhaustive truth-table check; errors beyond max_letters distinct letters.
bool is_tautology(const Formula& f, int max_letters = kDefaultMaxLetters);

bool are_equivalent(const Formula& a, const Formula& b, int max_letters = kDefaultMaxLetters);

/// a -> b as a material implication.
bool implies(const Formula& a, const Formula& b, int max_letters = kDefaultMaxLetters);

/// For a diversified formula of the and/or language and a path to a subformula B,
/// returns a T/F assignment for the letters of a outside B such that substituting
/// it into a yields a formula equivalent to B.  On a conjunction sibling of the
/// path the letters get T, on a disjunction sibling F.  The postcondition is
/// checked internally.
ConstantAssignment lemma1_assignment(const Formula& a, const Path& pos);

Formula apply_assignment(const Formula& f, const ConstantAssignment& assignment);

}  // namespace propiso
