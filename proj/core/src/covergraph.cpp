#include "kleinian/covergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kleinian/permgroup.hpp"
#include "kleinian/residue.hpp"

namespace kleinian {

const char* side_name(Side s) { return s == Side::Minus ? "minus" : "plus"; }

const char* component_tag_name(ComponentTag t) {
    switch (t) {
        case ComponentTag::F0: return "F0";
        case ComponentTag::Gcomp: return "Gcomp";
        default: return "Ginvcomp";
    }
}

const char* map_tag_name(MapTag t) {
    switch (t) {
        case MapTag::J: return "J";
        case MapTag::RT: return "RT";
        default: return "mirror";
    }
}

std::string cusp_permutation_str(const CuspPermutation& p) {
    std::vector<int> img(p.begin(), p.end());
    return Permutation(img).cycles();
}

std::vector<int> CoverGraph::ports_of_piece(int piece_id) const {
    std::vector<int> out;
    for (const auto& port : ports)
        if (port.piece == piece_id) out.push_back(port.id);
    return out;
}

std::vector<int> CoverGraph::unglued_ports() const {
    std::set<int> used;
    for (const auto& gl : gluings) {
        used.insert(gl.port_a);
        used.insert(gl.port_b);
    }
    std::vector<int> out;
    for (const auto& port : ports)
        if (!used.count(port.id)) out.push_back(port.id);
    return out;
}

bool CoverGraph::is_connected() const {
    if (pieces.empty()) return false;
    std::set<int> seen{pieces.front().id};
    std::vector<int> stack{pieces.front().id};
    while (!stack.empty()) {
        int current = stack.back();
        stack.pop_back();
        for (const auto& gl : gluings) {
            int pa = ports[gl.port_a].piece, pb = ports[gl.port_b].piece;
            for (auto [from, to] : {std::pair{pa, pb}, std::pair{pb, pa}}) {
                if (from == current && !seen.count(to)) {
                    seen.insert(to);
                    stack.push_back(to);
                }
            }
        }
    }
    return seen.size() == pieces.size();
}

namespace {

constexpr std::array<ComponentTag, 3> kTags{ComponentTag::F0, ComponentTag::Gcomp,
                                            ComponentTag::Ginvcomp};

int tag_degree(ComponentTag t) { return t == ComponentTag::F0 ? 1 : 5; }

struct Builder {
    CoverGraph g;

    int add_piece(BaseKind base, int t_index, CoverTag tag, int degree, std::string label) {
        int id = static_cast<int>(g.pieces.size());
        g.pieces.push_back({id, base, t_index, tag, degree, std::move(label)});
        return id;
    }

    int add_port(int piece, Side side, ComponentTag tag, int sphere) {
        int id = static_cast<int>(g.ports.size());
        g.ports.push_back({id, piece, side, tag, tag_degree(tag), sphere,
                           std::set<int>{1, 2, 3, 4}, kMutationMarker});
        return id;
    }

    int port_of(int piece, Side side, ComponentTag tag) const {
        for (const auto& p : g.ports)
            if (p.piece == piece && p.side == side && p.tag == tag) return p.id;
        throw std::logic_error("missing port during construction");
    }

    void glue(int a, int b, MapTag map) { g.gluings.push_back({a, b, map}); }

    // The three S-side pieces plus their ports on the given sphere.
    std::array<int, 3> add_s_block(BaseKind base, int sphere, const std::string& prefix) {
        int ms = add_piece(base, 0, CoverTag::SPlain, 1, prefix + "MS");
        int na = add_piece(base, 0, CoverTag::Na, 5, prefix + "Na");
        int nb = add_piece(base, 0, CoverTag::Nb, 5, prefix + "Nb");
        add_port(ms, Side::Plus, ComponentTag::F0, sphere);
        add_port(na, Side::Plus, ComponentTag::Gcomp, sphere);
        add_port(nb, Side::Plus, ComponentTag::Ginvcomp, sphere);
        return {ms, na, nb};
    }

    int add_t_block(BaseKind base, int t_index, int lower_sphere, int upper_sphere,
                    const std::string& prefix) {
        int id = add_piece(base, t_index, CoverTag::Ttilde, 11,
                           prefix + "T" + std::to_string(t_index));
        for (ComponentTag tag : kTags) add_port(id, Side::Minus, tag, lower_sphere);
        for (ComponentTag tag : kTags) add_port(id, Side::Plus, tag, upper_sphere);
        return id;
    }
};

}  // namespace

CoverGraph build_n(int n) {
    if (n < 1) throw InvalidParameter("build_n needs n >= 1, got " + std::to_string(n));
    Builder b;
    b.g.n = n;
    auto [ms, na, nb] = b.add_s_block(BaseKind::S, 0, "");
    std::vector<int> t_pieces;
    for (int i = 1; i <= n; ++i)
        t_pieces.push_back(b.add_t_block(BaseKind::T, i, i - 1, i, ""));
    // J: the S-side boundary onto the lower boundary of the first T block.
    b.glue(b.port_of(ms, Side::Plus, ComponentTag::F0),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::F0), MapTag::J);
    b.glue(b.port_of(na, Side::Plus, ComponentTag::Gcomp),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::Gcomp), MapTag::J);
    b.glue(b.port_of(nb, Side::Plus, ComponentTag::Ginvcomp),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::Ginvcomp), MapTag::J);
    // R_T: consecutive T blocks, each tag onto itself (the double mirrors
    // every boundary component to its own copy).
    for (int i = 0; i + 1 < n; ++i) {
        for (ComponentTag tag : kTags) {
            b.glue(b.port_of(t_pieces[i], Side::Plus, tag),
                   b.port_of(t_pieces[i + 1], Side::Minus, tag), MapTag::RT);
        }
    }
    return b.g;
}

CoverGraph build_closed(int m, int n) {
    if (m < 1 || n < 1)
        throw InvalidParameter("build_closed needs m, n >= 1, got m=" + std::to_string(m) +
                               " n=" + std::to_string(n));
    Builder b;
    b.g.n = n;
    b.g.m = m;
    b.g.closed = true;
    auto [ms, na, nb] = b.add_s_block(BaseKind::S, 0, "");
    std::vector<int> t_pieces;
    for (int i = 1; i <= n; ++i)
        t_pieces.push_back(b.add_t_block(BaseKind::T, i, i - 1, i, ""));
    // Mirror side: sphere indices continue across the shared sphere n, so
    // mirror block i spans global spheres n+m-i .. n+m-i+1.
    std::vector<int> mirror_pieces;
    for (int i = 1; i <= m; ++i)
        mirror_pieces.push_back(
            b.add_t_block(BaseKind::MirrorT, i, n + m - i + 1, n + m - i, "mirror-"));
    auto [mms, mna, mnb] = b.add_s_block(BaseKind::MirrorS, n + m, "mirror-");

    b.glue(b.port_of(ms, Side::Plus, ComponentTag::F0),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::F0), MapTag::J);
    b.glue(b.port_of(na, Side::Plus, ComponentTag::Gcomp),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::Gcomp), MapTag::J);
    b.glue(b.port_of(nb, Side::Plus, ComponentTag::Ginvcomp),
           b.port_of(t_pieces[0], Side::Minus, ComponentTag::Ginvcomp), MapTag::J);
    b.glue(b.port_of(mms, Side::Plus, ComponentTag::F0),
           b.port_of(mirror_pieces[0], Side::Minus, ComponentTag::F0), MapTag::J);
    b.glue(b.port_of(mna, Side::Plus, ComponentTag::Gcomp),
           b.port_of(mirror_pieces[0], Side::Minus, ComponentTag::Gcomp), MapTag::J);
    b.glue(b.port_of(mnb, Side::Plus, ComponentTag::Ginvcomp),
           b.port_of(mirror_pieces[0], Side::Minus, ComponentTag::Ginvcomp), MapTag::J);
    for (int i = 0; i + 1 < n; ++i)
        for (ComponentTag tag : kTags)
            b.glue(b.port_of(t_pieces[i], Side::Plus, tag),
                   b.port_of(t_pieces[i + 1], Side::Minus, tag), MapTag::RT);
    for (int i = 0; i + 1 < m; ++i)
        for (ComponentTag tag : kTags)
            b.glue(b.port_of(mirror_pieces[i], Side::Plus, tag),
                   b.port_of(mirror_pieces[i + 1], Side::Minus, tag), MapTag::RT);
    // Mirror map across the shared sphere, tag-equal ports.
    for (ComponentTag tag : kTags)
        b.glue(b.port_of(t_pieces[n - 1], Side::Plus, tag),
               b.port_of(mirror_pieces[m - 1], Side::Plus, tag), MapTag::Mirror);
    return b.g;
}

bool AuditReport::all_ok() const {
    for (const auto& line : lines)
        if (!line.ok) return false;
    return true;
}

std::string AuditReport::summary() const {
    int passed = 0;
    for (const auto& line : lines) passed += line.ok;
    std::ostringstream os;
    os << passed << "/" << lines.size() << " degree sums equal 11";
    for (const auto& line : lines)
        if (!line.ok) os << "; " << line.subject << " = " << line.total;
    return os.str();
}

AuditReport degree_audit(const CoverGraph& g) {
    AuditReport report;
    // Covering degree over each base piece.
    std::map<std::string, int> base_totals;
    for (const auto& piece : g.pieces) {
        std::string base;
        switch (piece.base) {
            case BaseKind::S: base = "base M_S"; break;
            case BaseKind::MirrorS: base = "base mirror-M_S"; break;
            case BaseKind::T: base = "base M_T(" + std::to_string(piece.t_index) + ")"; break;
            case BaseKind::MirrorT:
                base = "base mirror-M_T(" + std::to_string(piece.t_index) + ")";
                break;
        }
        base_totals[base] += piece.degree;
    }
    for (const auto& [subject, total] : base_totals)
        report.lines.push_back({subject, total, total == 11});
    // Port degrees over each base boundary sphere, one sum per adjacent
    // block (the S-side pieces of a sphere count as one block).
    std::map<std::pair<int, std::string>, int> sphere_totals;
    for (const auto& port : g.ports) {
        const Piece& piece = g.pieces[port.piece];
        std::string block = piece.tag == CoverTag::Ttilde
                                ? piece.label + "/" + side_name(port.side)
                                : std::string(piece.base == BaseKind::MirrorS ? "mirror-S-side"
                                                                              : "S-side");
        sphere_totals[{port.sphere, block}] += port.degree;
    }
    for (const auto& [key, total] : sphere_totals) {
        report.lines.push_back({"sphere " + std::to_string(key.first) + " / " + key.second, total,
                                total == 11});
    }
    return report;
}

AuditReport boundary_census(const CoverGraph& g) {
    AuditReport report;
    for (const auto& piece : g.pieces) {
        if (piece.tag != CoverTag::Ttilde) continue;
        std::map<ComponentTag, int> tags;
        for (const auto& port : g.ports)
            if (port.piece == piece.id && port.side == Side::Minus) tags[port.tag] += port.degree;
        bool ok = tags[ComponentTag::F0] == 1 && tags[ComponentTag::Gcomp] == 5 &&
                  tags[ComponentTag::Ginvcomp] == 5 && tags.size() == 3;
        report.lines.push_back({piece.label + " lower boundary tags F0:1 Gcomp:5 Ginvcomp:5",
                                tags[ComponentTag::F0] + tags[ComponentTag::Gcomp] +
                                    tags[ComponentTag::Ginvcomp],
                                ok});
    }
    return report;
}

namespace {

// Matrix-level conditions behind the gluing argument, shared by every graph.
struct SideConditions {
    std::vector<std::string> certificates;
    std::vector<std::string> violations;
};

const SideConditions& side_conditions() {
    static const SideConditions cached = [] {
        SideConditions out;
        auto certify = [&out](bool ok, const std::string& what) {
            (ok ? out.certificates : out.violations).push_back(what);
        };

        // The mutation inverts the four boundary parabolics along (1 3)(2 4).
        IdentityReport mutation = verify_identity_set({
            {"m1*p1*m1^-1 = p3^-1", "m1*p1*m1^-1", "p3^-1"},
            {"m1*p2*m1^-1 = p4^-1", "m1*p2*m1^-1", "p4^-1"},
            {"m1*p3*m1^-1 = p1^-1", "m1*p3*m1^-1", "p1^-1"},
            {"m1*p4*m1^-1 = p2^-1", "m1*p4*m1^-1", "p2^-1"},
        });
        certify(mutation.all_pass(), "m1 conjugates p1..p4 to the (1 3)(2 4)-inverses");

        // g m1 g^-1 is the displayed integer matrix, hence preserves the
        // plane over R; m1 therefore preserves the g^-1-translate.
        IdentityReport gm = verify_identity_set(
            {{"g*m1*g^-1 = [[1,-1],[2,-1]]", "g*m1*g^-1", "[[1, -1], [2, -1]]"}});
        certify(gm.all_pass(), "g*m1*g^-1 = [[1,-1],[2,-1]]");
        ExtendedIsometry gmg = evaluate_registry_word("g*m1*g^-1");
        bool real_entries = gmg.mat.a().is_real() && gmg.mat.b().is_real() &&
                            gmg.mat.c().is_real() && gmg.mat.d().is_real();
        certify(real_entries, "g*m1*g^-1 has real entries (preserves the vertical plane over R)");

        // Both conjugating elements live in the modular group inside H0.
        GeneratedGroup psl2z = GeneratedGroup::psl2z();
        auto m1_word = express(registry().get("m1"), psl2z, 5);
        certify(m1_word.has_value(),
                m1_word ? "m1 = " + m1_word->str(psl2z) + " in <f0,a0>"
                        : "m1 not found in <f0,a0> ball of radius 5");
        auto gmg_word = express(gmg, psl2z, 8);
        certify(gmg_word.has_value(),
                gmg_word ? "g*m1*g^-1 = " + gmg_word->str(psl2z) + " in <f0,a0>"
                         : "g*m1*g^-1 not found in <f0,a0> ball of radius 8");

        // The residue kernel is conjugation-stable inside H0 (sampled on the
        // kernel parabolics p2, p4 against all three generators).
        bool kernel_ok = true;
        for (const char* gen : {"a0", "b0", "f0"}) {
            for (const char* ker : {"p2", "p4"}) {
                ExtendedIsometry conj = evaluate_registry_word(
                    std::string(gen) + "*" + ker + "*" + gen + "^-1");
                kernel_ok = kernel_ok && kernel_contains(conj.mat);
            }
        }
        certify(kernel_ok, "H0 generators conjugate the residue kernel into itself");
        return out;
    }();
    return cached;
}

}  // namespace

PsiReport psi_check(const CoverGraph& g) {
    PsiReport report;
    // Piece-fixing data: every port carries a marker, and the marker on
    // every degree-1 F0 port is the mutation (1 3)(2 4).
    for (const auto& port : g.ports) {
        if (port.tag == ComponentTag::F0 && port.marker != kMutationMarker) {
            report.violations.push_back("port " + std::to_string(port.id) + " on piece " +
                                        g.pieces[port.piece].label + " carries marker " +
                                        cusp_permutation_str(port.marker) + ", expected " +
                                        cusp_permutation_str(kMutationMarker));
        }
    }
    // Gluing compatibility: each map tag pairs ports of equal degree and
    // equal component tag (identity correspondence), with matching markers.
    std::map<int, int> seen_port_use;
    for (size_t idx = 0; idx < g.gluings.size(); ++idx) {
        const Gluing& gl = g.gluings[idx];
        const BoundaryPort& a = g.ports[gl.port_a];
        const BoundaryPort& b = g.ports[gl.port_b];
        std::string where = std::string(map_tag_name(gl.map)) + "-gluing #" + std::to_string(idx) +
                            " (" + g.pieces[a.piece].label + " <-> " + g.pieces[b.piece].label + ")";
        if (++seen_port_use[gl.port_a] > 1 || ++seen_port_use[gl.port_b] > 1)
            report.violations.push_back(where + ": port used twice");
        if (a.tag != b.tag)
            report.violations.push_back(where + ": tag mismatch " +
                                        std::string(component_tag_name(a.tag)) + " vs " +
                                        component_tag_name(b.tag));
        if (a.degree != b.degree)
            report.violations.push_back(where + ": degree mismatch");
        if (a.marker != b.marker)
            report.violations.push_back(where + ": mutation markers disagree");
        if (a.sphere != b.sphere)
            report.violations.push_back(where + ": glued ports sit on different spheres");
        bool sides_ok = gl.map == MapTag::Mirror ? (a.side == Side::Plus && b.side == Side::Plus)
                                                 : (a.side != b.side);
        if (!sides_ok) report.violations.push_back(where + ": wrong side pairing");
    }
    if (!g.is_connected()) report.violations.push_back("cover graph is not connected");
    // Boundedness structure.
    std::vector<int> free_ports = g.unglued_ports();
    if (g.closed) {
        if (!free_ports.empty())
            report.violations.push_back("closed graph has " + std::to_string(free_ports.size()) +
                                        " unglued ports");
    } else {
        int total = 0;
        bool all_last_plus = true;
        for (int pid : free_ports) {
            const BoundaryPort& port = g.ports[pid];
            total += port.degree;
            const Piece& piece = g.pieces[port.piece];
            if (piece.tag != CoverTag::Ttilde || piece.t_index != g.n || port.side != Side::Plus)
                all_last_plus = false;
        }
        if (total != 11 || !all_last_plus)
            report.violations.push_back(
                "bounded graph must leave exactly the last T block's upper ports (total 11) "
                "unglued; found total " +
                std::to_string(total));
    }
    report.certificates.push_back("markers on all F0 ports equal " +
                                  cusp_permutation_str(kMutationMarker));
    const SideConditions& side = side_conditions();
    report.certificates.insert(report.certificates.end(), side.certificates.begin(),
                               side.certificates.end());
    report.violations.insert(report.violations.end(), side.violations.begin(),
                             side.violations.end());
    return report;
}

std::string PsiReport::summary() const {
    if (pass()) return "pass (" + std::to_string(certificates.size()) + " certificates)";
    std::ostringstream os;
    os << violations.size() << " violation(s): ";
    for (size_t k = 0; k < violations.size(); ++k) {
        if (k) os << "; ";
        os << violations[k];
    }
    return os.str();
}

std::string to_dot(const CoverGraph& g) {
    std::ostringstream os;
    os << "graph cover {\n";
    for (const auto& piece : g.pieces) {
        os << "  p" << piece.id << " [label=\"" << piece.label << "\\ndegree " << piece.degree
           << "\"];\n";
    }
    for (const auto& gl : g.gluings) {
        const BoundaryPort& a = g.ports[gl.port_a];
        const BoundaryPort& b = g.ports[gl.port_b];
        os << "  p" << a.piece << " -- p" << b.piece << " [label=\"" << map_tag_name(gl.map) << "/"
           << component_tag_name(a.tag) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::vector<int> expected_component_orbit(ComponentTag tag) {
    int anchor = tag == ComponentTag::F0 ? 0 : (tag == ComponentTag::Gcomp ? 7 : 1);
    for (const auto& orbit : orbits_of_affine_map(11, 4)) {
        if (std::find(orbit.begin(), orbit.end(), anchor) != orbit.end()) return orbit;
    }
    throw std::logic_error("orbit anchor not found");
}

int minimality_bound() {
    const auto& phi = phi_images();
    PermGroup gamma = PermGroup::closure({phi.at("h"), phi.at("f")});
    PermGroup normalized = largest_normalized(gamma, phi.at("m1"));
    return minimality_bound_with(normalized.order());
}

int minimality_bound_with(std::size_t normalized_order) {
    if (normalized_order == 0) throw InvalidParameter("normalized subgroup cannot be empty");
    return static_cast<int>(55 / normalized_order);
}

}  // namespace kleinian
