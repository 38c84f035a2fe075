#pragma once

// Catalog of the named isometries the verifier works with: the face-pairing
// and cusp generators s, t, f, g, h, c, the mutation m1, the boundary
// parabolics p1..p4, the reflection-group generators f0, b0, a0, a1, the
// reflection rT, and the conjugated families pk_j, a2, a3, m1_n.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinian/moebius.hpp"

namespace kleinian {

class Registry {
public:
    const ExtendedIsometry& get(const std::string& name) const;
    // The matrix of a holomorphic entry; throws for rT.
    const ProjectiveMatrix& mat(const std::string& name) const;
    bool has(const std::string& name) const { return entries_.count(name) != 0; }

    // Insertion order; the first 15 are the holomorphic base matrices.
    const std::vector<std::string>& names() const { return order_; }
    std::vector<std::string> base_names() const;  // the 15 named matrices

private:
    friend const Registry& registry();
    Registry();
    void add(const std::string& name, ExtendedIsometry iso);

    std::map<std::string, ExtendedIsometry> entries_;
    std::vector<std::string> order_;
};

// The shared immutable instance, built on first use.
const Registry& registry();

// Conjugation level used for the derived families (pk_j, m1_n, a_k).
constexpr int kMaxConjLevel = 3;

}  // namespace kleinian
