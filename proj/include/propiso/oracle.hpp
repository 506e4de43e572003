#pragma once

#include <optional>
#include <vector>

#include "propiso/formula.hpp"

namespace propiso {

/// Formulas reachable from the start by at most `depth` single axiom
/// applications (assoc/comm/dneg/De Morgan/constant rules, both directions,
/// all positions).
struct RewriteClosure {
    Formula start;
    int depth = 0;
    std::vector<Formula> reached;  // deterministic order, contains the start

    bool contains(const Formula& f) const;
};

inline constexpr int kOracleMaxLeaves = 12;
inline constexpr int kOracleMaxDepth = 8;

RewriteClosure bounded_closure(const Formula& a, int depth);

enum class OracleAnswer { Yes, Unknown };

/// Semi-decision by breadth-first derivability search; never answers "no".
OracleAnswer oracle_theorem(const Formula& a, const Formula& b, int depth);

/// Exhaustive search over signed-letter-respecting bijections; returns the
/// first one whose constructed witness verifies.  Guard: at most 8 occurrences
/// per side.
std::optional<std::vector<int>> oracle_witness_search(const Formula& a, const Formula& b);

}  // namespace propiso
