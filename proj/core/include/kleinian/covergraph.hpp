#pragma once

// Combinatorial graph-of-spaces model of the 11-sheeted covers: pieces with
// covering degrees, boundary ports carrying component tags and mutation
// markers, and the J / R_T / mirror gluings, with the audits that certify
// the gluing construction.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "kleinian/wordsearch.hpp"

namespace kleinian {

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

enum class BaseKind { S, T, MirrorS, MirrorT };
enum class CoverTag { SPlain, Na, Nb, Ttilde };
enum class Side { Minus, Plus };
enum class ComponentTag { F0, Gcomp, Ginvcomp };
enum class MapTag { J, RT, Mirror };

const char* side_name(Side s);
const char* component_tag_name(ComponentTag t);
const char* map_tag_name(MapTag t);

// Permutation of the cusp labels {1,2,3,4}: images at indices 0..3.
using CuspPermutation = std::array<int, 4>;
// (1 3)(2 4)
inline constexpr CuspPermutation kMutationMarker{3, 4, 1, 2};
std::string cusp_permutation_str(const CuspPermutation& p);

struct Piece {
    int id = 0;
    BaseKind base = BaseKind::S;
    int t_index = 0;  // which T block (1-based), 0 for S-side pieces
    CoverTag tag = CoverTag::SPlain;
    int degree = 1;
    std::string label;
};

struct BoundaryPort {
    int id = 0;
    int piece = 0;
    Side side = Side::Plus;
    ComponentTag tag = ComponentTag::F0;
    int degree = 1;
    int sphere = 0;  // global index of the base boundary sphere
    std::set<int> cusp_labels{1, 2, 3, 4};
    CuspPermutation marker = kMutationMarker;
};

struct Gluing {
    int port_a = 0;
    int port_b = 0;
    MapTag map = MapTag::J;
};

struct CoverGraph {
    int n = 0;           // T blocks on the primary side
    int m = 0;           // T blocks on the mirror side (closed graphs)
    bool closed = false;
    std::vector<Piece> pieces;
    std::vector<BoundaryPort> ports;
    std::vector<Gluing> gluings;

    std::vector<int> ports_of_piece(int piece_id) const;
    std::vector<int> unglued_ports() const;
    bool is_connected() const;
};

// The 11-sheeted cover of the n-block tangle complement, boundary open.
CoverGraph build_n(int n);
// Closed cover: build_n(n) glued to its mirror image with m blocks.
CoverGraph build_closed(int m, int n);

struct AuditLine {
    std::string subject;
    int total = 0;
    bool ok = false;
};

struct AuditReport {
    std::vector<AuditLine> lines;
    bool all_ok() const;
    std::string summary() const;
};

// Per-base-piece covering degrees and per-sphere-side port degrees (= 11).
AuditReport degree_audit(const CoverGraph& g);
// Each T block's lower boundary carries tags {F0:1, Gcomp:5, Ginvcomp:5}.
AuditReport boundary_census(const CoverGraph& g);

struct PsiReport {
    std::vector<std::string> violations;
    std::vector<std::string> certificates;
    bool pass() const { return violations.empty(); }
    std::string summary() const;
};

// Piece-fixing automorphism data: mutation markers on F0 ports, marker and
// tag agreement across every gluing, and the matrix-level side conditions
// (conjugates of m1 land where the gluing argument needs them).
PsiReport psi_check(const CoverGraph& g);

// Graphviz rendering: pieces as nodes, gluings as labeled edges.
std::string to_dot(const CoverGraph& g);

// The component orbit of j -> 4j (mod 11) attached to each boundary tag
// (F0 ~ {0}, Gcomp ~ orbit of 7, Ginvcomp ~ orbit of 1).
std::vector<int> expected_component_orbit(ComponentTag tag);

// 55 / |largest subgroup of phi(GammaT0) normalized by phi(m1)| = 11.
int minimality_bound();
// The same arithmetic with the normalized subgroup's order substituted.
int minimality_bound_with(std::size_t normalized_order);

}  // namespace kleinian
