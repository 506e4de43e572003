#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace propiso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

enum class Conn { Top, Bot, Letter, Not, And, Or };

/// Immutable propositional formula tree over T, F, letters, ~, &, |.
/// Copies are cheap (shared nodes); all operations on formulas are pure.
class Formula {
public:
    static Formula top();
    static Formula bot();
    static Formula letter(std::string name);
    static Formula negation(Formula child);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);

    Conn conn() const { return node_->conn; }
    const std::string& name() const;  // Letter only
    Formula child() const;            // Not only
    Formula left() const;             // And/Or
    Formula right() const;            // And/Or

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node {
        Conn conn;
        std::string name;
        std::shared_ptr<const Node> a, b;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Child-index path from the root to a subformula (0 = left/only child, 1 = right).
using Path = std::vector<int>;

Formula subformula_at(const Formula& f, const Path& path);
Formula replace_at(const Formula& f, const Path& path, const Formula& replacement);

enum class Polarity { Positive, Negative };
enum class Side { SourceSide, TargetSide };

struct Occurrence {
    int index = 0;  // 0-based, left to right among letter occurrences
    std::string letter;
    std::optional<Polarity> polarity;  // present only for neg-reduced formulas
};

using SignedLetterMultiset = std::map<std::pair<std::string, Polarity>, int>;

Formula parse(const std::string& text);
std::string print(const Formula& f);

std::vector<Occurrence> occurrences(const Formula& f);
int occurrence_count(const Formula& f);

Formula substitute(const Formula& a, const std::string& p, const Formula& b);
std::set<std::string> letters(const Formula& f);
bool is_diversified(const Formula& f);

/// Negation only directly on letters.
bool is_neg_reduced(const Formula& f);
/// Letters, & and | only.
bool in_lang_av(const Formula& f);
/// Letters, ~, & and | (no constants).
bool in_lang_nav(const Formula& f);
/// Letters, T, F, & and | (no negation).
bool in_lang_tbav(const Formula& f);

SignedLetterMultiset signed_counts(const Formula& f);

/// Letter-for-letter substitution sigma with sigma(a1) = a, if a is a uniform
/// instance of a1; absent when shapes differ or a letter would need two images.
std::optional<std::map<std::string, std::string>> uniform_instance(const Formula& a,
                                                                   const Formula& a1);

}  // namespace propiso
