#pragma once

// Permutations on small finite sets (1-indexed, matching cycle notation),
// generated-subgroup closure, stabilizers, block actions and exhaustive
// subgroup enumeration for the normalized-subgroup computation.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleinian {

struct ClosureBudgetExceeded : std::runtime_error {
    explicit ClosureBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotBlockInvariant : std::runtime_error {
    NotBlockInvariant(std::string gen, std::string blk)
        : std::runtime_error("generator " + gen + " does not preserve block " + blk),
          generator(std::move(gen)),
          block(std::move(blk)) {}
    std::string generator;
    std::string block;
};

class Permutation {
public:
    explicit Permutation(std::vector<int> images_one_based);
    static Permutation identity(int degree);
    // Cycle notation "(1 5 9)(2 6 10)"; points not mentioned are fixed.
    static Permutation from_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int point) const;  // 1-based
    bool is_identity() const;
    int order() const;

    Permutation inverse() const;
    // Function composition: (x*y)(p) = x(y(p)).
    friend Permutation operator*(const Permutation& x, const Permutation& y);
    Permutation pow(int e) const;

    friend bool operator==(const Permutation& x, const Permutation& y) { return x.img_ == y.img_; }
    friend bool operator!=(const Permutation& x, const Permutation& y) { return !(x == y); }
    friend bool operator<(const Permutation& x, const Permutation& y) { return x.img_ < y.img_; }

    std::string key() const;
    std::string cycles() const;  // "id" for the identity

private:
    std::vector<int> img_;  // 0-based internally
};

class PermGroup {
public:
    static PermGroup closure(std::vector<Permutation> generators, std::size_t budget = 1000000);
    static PermGroup trivial(int degree);

    int degree() const;
    std::size_t order() const { return elements_.size(); }
    bool contains(const Permutation& p) const { return keys_.count(p.key()) != 0; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    PermGroup stabilizer(int point) const;
    std::vector<int> orbit(int point) const;
    bool is_subgroup_of(const PermGroup& other) const;

    // Set equality.
    friend bool operator==(const PermGroup& x, const PermGroup& y);
    friend bool operator!=(const PermGroup& x, const PermGroup& y) { return !(x == y); }

private:
    PermGroup() = default;
    static PermGroup from_elements(std::vector<Permutation> elements);

    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;  // discovery order, identity first
    std::set<std::string> keys_;

    friend std::vector<PermGroup> all_subgroups(const PermGroup&);
    friend PermGroup intersect(const PermGroup&, const PermGroup&);
};

struct Relation {
    std::string label;
    std::vector<std::pair<std::string, int>> word;  // (name, exponent)
};

struct RelationAudit {
    bool ok = true;
    std::string first_failed;  // label of the first relation that is not the identity
};

RelationAudit verify_relations(const std::map<std::string, Permutation>& images,
                               const std::vector<Relation>& relations);

struct BlockSystem {
    std::vector<std::pair<std::string, std::set<int>>> blocks;  // 1-based points

    int degree() const;
    void validate(int expected_degree) const;  // disjoint and covering
    const std::string& name_of(int block_index) const { return blocks[block_index].first; }
};

// The induced permutation of the named blocks; throws NotBlockInvariant.
Permutation block_image(const Permutation& p, const BlockSystem& blocks,
                        const std::string& generator_name = "?");
PermGroup block_action(const PermGroup& g, const BlockSystem& blocks);
// Cycle rendering with block names, e.g. "(D E F)".
std::string block_cycles(const Permutation& on_blocks, const BlockSystem& blocks);

// Exhaustive subgroup enumeration (cyclic subgroups closed under joins);
// guarded by a |H| <= 10^4 cap.
std::vector<PermGroup> all_subgroups(const PermGroup& h);

// Unique maximal subgroup K <= H with x K x^-1 = K.
PermGroup largest_normalized(const PermGroup& h, const Permutation& x);

PermGroup intersect(const PermGroup& h1, const PermGroup& h2);
PermGroup conjugate_group(const Permutation& x, const PermGroup& h);

// Orbits of j -> a*j (mod n) on {0..n-1}; requires gcd(a, n) = 1.
std::vector<std::vector<int>> orbits_of_affine_map(int modulus, int multiplier);

// The permutation representation data: images of a0, a1, f0 on 12 points and
// the derived images of f, g, h, m1 and p1..p4 through the word identities.
const std::map<std::string, Permutation>& phi_images();
// The invariant triples C, D, E, F of <phi(a0), phi(a1)>.
const BlockSystem& standard_blocks();

}  // namespace kleinian
