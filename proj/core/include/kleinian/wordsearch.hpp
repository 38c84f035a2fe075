#pragma once

// Bounded breadth-first enumeration of finitely generated matrix groups with
// exact canonical hashing, plus membership/expression search.  NotFound
// always means "not in the searched ball", never "not in the group".

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kleinian/registry.hpp"

namespace kleinian {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct GeneratedGroup {
    std::string name;
    std::vector<std::pair<std::string, ExtendedIsometry>> gens;

    int gen_index(const std::string& gen_name) const;

    static GeneratedGroup delta0();    // <s, t>
    static GeneratedGroup gamma_t0();  // <f, g, h>
    static GeneratedGroup lambda();    // <p1, p2, p3>
    static GeneratedGroup h0();        // <a0, b0, f0>
    static GeneratedGroup h_t0();      // <a0, a1, f0>
    static GeneratedGroup psl2z();     // <f0, a0>
    // <s, t> together with the conjugated copies of the <f, g, h, conjugate
    // block> generators, one copy per level 1..n.
    static GeneratedGroup delta_n(int n);
    // <f0, b0, a0, ..., an>
    static GeneratedGroup h_n(int n);
    // <a1, a2, f0>: receives the conjugated mirror generators.
    static GeneratedGroup a1_a2_f0();
};

struct WordLetter {
    int gen = 0;
    int exp = 1;  // +1 or -1
};

struct Word {
    std::vector<WordLetter> letters;

    void append(int gen, int exp);  // freely reducing
    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    ExtendedIsometry evaluate(const GeneratedGroup& g) const;
    std::string str(const GeneratedGroup& g) const;  // "s*t^-1*s", "1" if empty
};

// "a0*f0^-1*a0^2" over the group's generator names; powers expand to letters.
Word parse_word(const std::string& text, const GeneratedGroup& g);

// Same grammar over registry names, evaluated directly.
ExtendedIsometry evaluate_registry_word(const std::string& text);

class BallIndex {
public:
    int radius() const { return radius_; }
    std::size_t size() const { return nodes_.size(); }
    std::optional<Word> find(const ExtendedIsometry& target) const;
    // Node access for search algorithms layered on top.
    std::optional<int> find_node(const ExtendedIsometry& target) const;
    const ExtendedIsometry& iso_of(int node) const { return nodes_[node].iso; }
    int length_of(int node) const { return nodes_[node].length; }
    Word word_of(int node) const;

    // Re-evaluates every stored word against its key.
    bool audit(const GeneratedGroup& g) const;

private:
    friend BallIndex enumerate_ball(const GeneratedGroup&, int, std::size_t);
    struct Node {
        ExtendedIsometry iso;
        int parent;
        int letter;  // index into the letter order, -1 for the identity
        int length;
    };
    int radius_ = 0;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, int> index_;
};

// Products of at most `radius` generators, shortest-lex word per element.
BallIndex enumerate_ball(const GeneratedGroup& g, int radius, std::size_t budget = 2000000);

// A word of length <= radius evaluating to target (projectively), or empty.
// Shortest length is guaranteed; found by meeting two half-radius balls.
std::optional<Word> express(const ExtendedIsometry& target, const GeneratedGroup& g, int radius,
                            std::size_t budget = 2000000);

// w with w x w^-1 = y and |w| <= radius, or empty.
std::optional<Word> conjugacy_search(const ExtendedIsometry& x, const ExtendedIsometry& y,
                                     const GeneratedGroup& g, int radius,
                                     std::size_t budget = 2000000);

struct IdentityCheck {
    std::string label;
    std::string lhs;  // word over registry names
    std::string rhs;  // word over registry names, or a matrix literal "[[..]]"
};

struct IdentityRow {
    std::string label;
    bool pass;
    std::string lhs_value;
    std::string rhs_value;
};

struct IdentityReport {
    std::vector<IdentityRow> rows;
    bool all_pass() const;
    std::string first_failure() const;
};

IdentityReport verify_identity_set(const std::vector<IdentityCheck>& identities);

}  // namespace kleinian
