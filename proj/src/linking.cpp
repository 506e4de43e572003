#include "propiso/linking.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace propiso {

namespace {

// small union-find over 0..n-1
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int x, int y) { parent[find(x)] = find(y); }

    std::vector<std::vector<int>> blocks() {
        std::map<int, std::vector<int>> by_root;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) by_root[find(i)].push_back(i);
        std::vector<std::vector<int>> out;
        out.reserve(by_root.size());
        for (auto& [root, members] : by_root) out.push_back(std::move(members));
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        return out;
    }
};

}  // namespace

LinkEquivalence::LinkEquivalence(int n_source, int n_target,
                                 std::vector<std::vector<int>> blocks)
    : n_source_(n_source), n_target_(n_target), blocks_(std::move(blocks)) {
    block_index_.assign(size(), -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw Error("LinkEquivalence: empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            if (x < 0 || x >= size()) throw Error("LinkEquivalence: element out of range");
            if (block_index_[x] != -1) throw Error("LinkEquivalence: blocks overlap");
            block_index_[x] = static_cast<int>(b);
        }
    }
    for (int x = 0; x < size(); ++x)
        if (block_index_[x] == -1) throw Error("LinkEquivalence: blocks do not cover");
}

LinkEquivalence LinkEquivalence::discrete(int n_source, int n_target) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n_source + n_target);
    for (int i = 0; i < n_source + n_target; ++i) blocks.push_back({i});
    return LinkEquivalence(n_source, n_target, std::move(blocks));
}

bool LinkEquivalence::same_block(int x, int y) const {
    return block_of(x) == block_of(y);
}

int LinkEquivalence::block_of(int x) const {
    if (x < 0 || x >= size()) throw Error("LinkEquivalence: element out of range");
    return block_index_[x];
}

bool LinkEquivalence::operator==(const LinkEquivalence& other) const {
    return n_source_ == other.n_source_ && n_target_ == other.n_target_ &&
           blocks_ == other.blocks_;
}

TypedRelArrow identity_arrow(const Formula& a) {
    TypedRelArrow f{a, a, {}};
    int n = occurrence_count(a);
    for (int i = 0; i < n; ++i) f.rel.emplace(i, i);
    return f;
}

TypedRelArrow zero_arrow(const Formula& a, const Formula& b) { return {a, b, {}}; }

TypedRelArrow converse(const TypedRelArrow& f) {
    TypedRelArrow g{f.target, f.source, {}};
    for (const auto& [x, y] : f.rel) g.rel.emplace(y, x);
    return g;
}

TypedRelArrow compose(const TypedRelArrow& f, const TypedRelArrow& g) {
    if (f.target != g.source) throw Error("compose: type mismatch");
    TypedRelArrow h{f.source, g.target, {}};
    for (const auto& [x, y] : f.rel)
        for (const auto& [y2, z] : g.rel)
            if (y == y2) h.rel.emplace(x, z);
    return h;
}

TypedRelArrow arrow_union(const TypedRelArrow& f, const TypedRelArrow& g) {
    if (f.source != g.source || f.target != g.target)
        throw Error("arrow_union: endpoint mismatch");
    TypedRelArrow h = f;
    h.rel.insert(g.rel.begin(), g.rel.end());
    return h;
}

LinkEquivalence eq_closure(const TypedRelArrow& f) {
    int na = occurrence_count(f.source);
    int nb = occurrence_count(f.target);
    UnionFind uf(na + nb);
    for (const auto& [x, y] : f.rel) {
        if (x < 0 || x >= na || y < 0 || y >= nb) throw Error("eq_closure: index out of range");
        uf.unite(x, na + y);
    }
    return LinkEquivalence(na, nb, uf.blocks());
}

namespace {

std::vector<std::string> occurrence_letters(const Formula& a, const Formula& b) {
    std::vector<std::string> out;
    for (const auto& o : occurrences(a)) out.push_back(o.letter);
    for (const auto& o : occurrences(b)) out.push_back(o.letter);
    return out;
}

}  // namespace

bool is_perfect(const LinkEquivalence& links, const Formula& a, const Formula& b) {
    auto ls = occurrence_letters(a, b);
    if (links.n_source() != occurrence_count(a) || links.n_target() != occurrence_count(b))
        throw Error("is_perfect: size mismatch");
    int n = links.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (links.same_block(x, y) != (ls[x] == ls[y])) return false;
    return true;
}

bool is_bijective(const TypedRelArrow& f) {
    int na = occurrence_count(f.source);
    int nb = occurrence_count(f.target);
    if (na != nb || static_cast<int>(f.rel.size()) != na) return false;
    std::set<int> sources, targets;
    for (const auto& [x, y] : f.rel) {
        sources.insert(x);
        targets.insert(y);
    }
    return static_cast<int>(sources.size()) == na && static_cast<int>(targets.size()) == nb;
}

namespace {

Formula relabel(const Formula& f, const std::vector<std::string>& names, int& next) {
    switch (f.conn()) {
        case Conn::Top:
        case Conn::Bot:
            return f;
        case Conn::Letter:
            return Formula::letter(names[next++]);
        case Conn::Not:
            return Formula::negation(relabel(f.child(), names, next));
        case Conn::And:
        case Conn::Or: {
            // sequence the recursion explicitly: argument evaluation order is
            // unspecified and the counter must advance left to right
            Formula left = relabel(f.left(), names, next);
            Formula right = relabel(f.right(), names, next);
            return f.conn() == Conn::And ? Formula::conj(left, right)
                                         : Formula::disj(left, right);
        }
    }
    return f;
}

}  // namespace

GeneralizeResult generalize(const Formula& a, const Formula& b, const LinkEquivalence& links) {
    auto ls = occurrence_letters(a, b);
    if (links.size() != static_cast<int>(ls.size()) ||
        links.n_source() != occurrence_count(a))
        throw Error("generalize: size mismatch");

    std::set<std::string> taken = letters(a);
    taken.merge(letters(b));

    GeneralizeResult result{a, b, {}};
    std::vector<std::string> fresh_of_block;
    int counter = 0;
    for (const auto& block : links.blocks()) {
        const std::string& letter = ls[block.front()];
        for (int x : block)
            if (ls[x] != letter) throw Error("generalize: block mixes distinct letters");
        std::string fresh;
        do {
            fresh = "q" + std::to_string(++counter);
        } while (taken.count(fresh));
        fresh_of_block.push_back(fresh);
        result.substitution.emplace(fresh, letter);
    }

    std::vector<std::string> names(ls.size());
    for (std::size_t x = 0; x < ls.size(); ++x)
        names[x] = fresh_of_block[links.block_of(static_cast<int>(x))];

    int next = 0;
    result.a1 = relabel(a, names, next);
    result.b1 = relabel(b, names, next);
    return result;
}

LinkEquivalence gen_compose(const LinkEquivalence& l1, const LinkEquivalence& l2) {
    if (l1.n_target() != l2.n_source()) throw Error("gen_compose: middle mismatch");
    int na = l1.n_source(), nb = l1.n_target(), nc = l2.n_target();
    UnionFind uf(na + nb + nc);
    for (const auto& block : l1.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    for (const auto& block : l2.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(na + block[0], na + block[i]);

    // restrict to the outer elements and reindex targets
    std::map<int, std::vector<int>> outer;
    for (int i = 0; i < na; ++i) outer[uf.find(i)].push_back(i);
    for (int j = 0; j < nc; ++j) outer[uf.find(na + nb + j)].push_back(na + j);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : outer) blocks.push_back(std::move(members));
    return LinkEquivalence(na, nc, std::move(blocks));
}

std::string links_text(const LinkEquivalence& links) {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& block : links.blocks()) {
        if (!first_block) out << " | ";
        first_block = false;
        bool first = true;
        for (int x : block) {
            if (!first) out << ' ';
            first = false;
            if (x < links.n_source())
                out << 's' << x;
            else
                out << 't' << (x - links.n_source());
        }
    }
    return out.str();
}

LinkEquivalence parse_links(const std::string& text, int n_source, int n_target) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block;
    std::vector<bool> seen(n_source + n_target, false);
    std::istringstream in(text);
    std::string tok;
    auto flush = [&] {
        if (!block.empty()) blocks.push_back(std::move(block));
        block.clear();
    };
    while (in >> tok) {
        if (tok == "|") {
            flush();
            continue;
        }
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 't'))
            throw Error("malformed link element '" + tok + "'");
        int idx;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw Error("malformed link element '" + tok + "'");
        }
        int limit = tok[0] == 's' ? n_source : n_target;
        if (idx < 0 || idx >= limit) throw Error("link element out of range: '" + tok + "'");
        int element = tok[0] == 's' ? idx : n_source + idx;
        if (seen[element]) throw Error("duplicate link element '" + tok + "'");
        seen[element] = true;
        block.push_back(element);
    }
    flush();
    // unmentioned occurrences become singletons
    for (int x = 0; x < n_source + n_target; ++x)
        if (!seen[x]) blocks.push_back({x});
    return LinkEquivalence(n_source, n_target, std::move(blocks));
}

}  // namespace propiso
