#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "propiso/formula.hpp"

namespace propiso {

/// A relation between letter-occurrence positions of a source and a target
/// formula; the graphical image of a deduction.
struct TypedRelArrow {
    Formula source;
    Formula target;
    std::set<std::pair<int, int>> rel;
};

/// A partition of the disjoint union of the source and target occurrence sets.
/// Source occurrence i is element i, target occurrence j is element n_source + j.
class LinkEquivalence {
public:
    LinkEquivalence(int n_source, int n_target, std::vector<std::vector<int>> blocks);

    static LinkEquivalence discrete(int n_source, int n_target);

    int n_source() const { return n_source_; }
    int n_target() const { return n_target_; }
    int size() const { return n_source_ + n_target_; }
    /// Blocks sorted internally and ordered by smallest element.
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool same_block(int x, int y) const;
    int block_of(int x) const;

    bool operator==(const LinkEquivalence& other) const;
    bool operator!=(const LinkEquivalence& other) const { return !(*this == other); }

private:
    int n_source_;
    int n_target_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // element -> position in blocks_
};

TypedRelArrow identity_arrow(const Formula& a);
TypedRelArrow zero_arrow(const Formula& a, const Formula& b);
TypedRelArrow converse(const TypedRelArrow& f);

/// Relational composition; requires f.target == g.source.
TypedRelArrow compose(const TypedRelArrow& f, const TypedRelArrow& g);

/// Set union of relations with identical endpoints.
TypedRelArrow arrow_union(const TypedRelArrow& f, const TypedRelArrow& g);

/// Reflexive-symmetric-transitive closure of the relation, as a partition.
LinkEquivalence eq_closure(const TypedRelArrow& f);

/// Perfect: two occurrences share a block exactly when they carry the same
/// letter, across both formulas.
bool is_perfect(const LinkEquivalence& links, const Formula& a, const Formula& b);

/// Whether the relation is the graph of a bijection between the occurrence sets.
bool is_bijective(const TypedRelArrow& f);

struct GeneralizeResult {
    Formula a1;
    Formula b1;
    std::map<std::string, std::string> substitution;  // fresh letter -> original
};

/// Relabels each block with a deterministic fresh letter (q1, q2, ... skipping
/// letters of a and b).  Every block must be letter-homogeneous.  The linking is
/// perfect for the relabeled pair, and a, b are uniform instances of a1, b1.
GeneralizeResult generalize(const Formula& a, const Formula& b, const LinkEquivalence& links);

/// Composition of split equivalences: outer elements are linked when connected
/// through alternating blocks across the middle occurrence set.
LinkEquivalence gen_compose(const LinkEquivalence& l1, const LinkEquivalence& l2);

/// "s0 s1 | s2 t0" with s = source index, t = target index.
std::string links_text(const LinkEquivalence& links);
LinkEquivalence parse_links(const std::string& text, int n_source, int n_target);

}  // namespace propiso
