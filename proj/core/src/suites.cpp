#include "kleinian/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kleinian/covergraph.hpp"
#include "kleinian/hypgeom.hpp"
#include "kleinian/permgroup.hpp"
#include "kleinian/registry.hpp"
#include "kleinian/residue.hpp"
#include "kleinian/wordsearch.hpp"

namespace kleinian {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "assumption";
    }
}

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& r : results) n += r.status == CheckStatus::Fail;
    return n;
}

int SuiteReport::assumptions() const {
    int n = 0;
    for (const auto& r : results) n += r.status == CheckStatus::Assumption;
    return n;
}

namespace {

struct Checker {
    std::vector<CheckResult> results;
    std::string default_ref;

    void check(const std::string& name, const std::string& expected, const std::string& actual,
               bool ok, std::optional<std::string> witness = std::nullopt,
               std::string ref = "") {
        CheckResult r;
        r.name = name;
        r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        r.expected = expected;
        r.actual = actual;
        // Failures must carry a locator even when no explicit witness exists.
        if (!ok && !witness) witness = actual;
        r.witness = std::move(witness);
        r.paper_ref = ref.empty() ? default_ref : std::move(ref);
        results.push_back(std::move(r));
    }

    void assumption(const std::string& name, const std::string& statement, std::string ref = "") {
        CheckResult r;
        r.name = name;
        r.status = CheckStatus::Assumption;
        r.expected = "imported, not machine-checked";
        r.actual = statement;
        r.paper_ref = ref.empty() ? default_ref : std::move(ref);
        results.push_back(std::move(r));
    }
};

std::string word_or(const std::optional<Word>& w, const GeneratedGroup& g,
                    const std::string& radius_note) {
    if (w) return w->str(g);
    return "not found in ball of radius " + radius_note;
}

// ---------------------------------------------------------------------------
// registry-audit

void suite_registry_audit(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "matrix catalog: named generators and boundary parabolics";
    const Registry& reg = registry();

    int base_ok = 0;
    std::vector<std::string> base = reg.base_names();
    for (const auto& name : base) {
        const ProjectiveMatrix& m = reg.mat(name);
        if ((m.a() * m.d() - m.b() * m.c()).is_one()) ++base_ok;
    }
    ck.check("determinants of the 15 named matrices", "15/15 equal to 1",
             std::to_string(base_ok) + "/15 equal to 1", base_ok == 15);

    int derived_total = 0, derived_ok = 0;
    for (const auto& name : reg.names()) {
        if (std::find(base.begin(), base.end(), name) != base.end()) continue;
        const ProjectiveMatrix& m = reg.get(name).mat;
        ++derived_total;
        if ((m.a() * m.d() - m.b() * m.c()).is_one()) ++derived_ok;
    }
    ck.check("determinants of the conjugated families and rT",
             std::to_string(derived_total) + "/" + std::to_string(derived_total),
             std::to_string(derived_ok) + "/" + std::to_string(derived_total),
             derived_ok == derived_total);

    const std::vector<std::pair<std::string, std::string>> p_words_st = {
        {"p1", "s^-1"},
        {"p2", "s*t*s*t^-2"},
        {"p3", "t*s*t*s^-1*t^-1*s^-1*t^-1"},
    };
    for (const auto& [name, word] : p_words_st) {
        ExtendedIsometry value = evaluate_registry_word(word);
        ck.check(name + " from its <s,t> word " + word, reg.mat(name).str(), value.mat.str(),
                 value == reg.get(name));
    }
    const std::vector<std::pair<std::string, std::string>> p_words_fgh = {
        {"p1", "f^-1"},
        {"p2", "f*g^-1*f^-1*h^-1*g"},
        {"p3", "g^-1*f^-1*h*g^-1*h^-1*f*g"},
    };
    for (const auto& [name, word] : p_words_fgh) {
        ExtendedIsometry value = evaluate_registry_word(word);
        ck.check(name + " from its <f,g,h> word " + word, reg.mat(name).str(), value.mat.str(),
                 value == reg.get(name));
    }
    ExtendedIsometry p4 = evaluate_registry_word("p1*p2*p3^-1");
    ck.check("p4 = p1*p2*p3^-1", reg.mat("p4").str(), p4.mat.str(), p4 == reg.get("p4"));

    ExtendedIsometry rT = reg.get("rT");
    ck.check("rT is orientation-reversing and involutive", "identity",
             compose(rT, rT).str(),
             rT.antiholomorphic && compose(rT, rT) == ExtendedIsometry::identity());
    ck.check("entrywise conjugation sends c to c^-1", reg.mat("c").inverse().str(),
             reg.mat("c").entrywise_conj().str(),
             reg.mat("c").entrywise_conj() == reg.mat("c").inverse());
}

// ---------------------------------------------------------------------------
// lemma-h0

void suite_lemma_h0(Checker& ck, const SuiteConfig& cfg) {
    ck.default_ref = "lemma: the one-ball reflection group H0 and its pieces";
    IdentityReport relations = verify_identity_set({
        {"a0^3", "a0^3", "1"},
        {"b0^3", "b0^3", "1"},
        {"(b0^-1*a0)^2", "b0^-1*a0*b0^-1*a0", "1"},
        {"(a0*f0)^2", "a0*f0*a0*f0", "1"},
    });
    for (const auto& row : relations.rows)
        ck.check("relation " + row.label + " = 1", "identity", row.lhs_value, row.pass);

    const Registry& reg = registry();
    std::size_t h0_image = image_order({reg.mat("a0"), reg.mat("b0"), reg.mat("f0")});
    std::size_t delta0_image = image_order({reg.mat("s"), reg.mat("t")});
    ck.check("index consistency: |theta(H0)| / |theta(Delta0)| = 12", "60 / 5 = 12",
             std::to_string(h0_image) + " / " + std::to_string(delta0_image) + " = " +
                 std::to_string(delta0_image ? h0_image / delta0_image : 0),
             h0_image == 60 && delta0_image == 5);
    ck.assumption("index [H0 : Delta0] = 12",
                  "volume comparison with the regular ideal octahedron; "
                  "cross-checked arithmetically above");

    GeneratedGroup psl2z = GeneratedGroup::psl2z();
    auto m1w = express(reg.get("m1"), psl2z, 5, cfg.budget);
    ck.check("m1 lies in <f0,a0>", "a word of length <= 5", word_or(m1w, psl2z, "5"),
             m1w.has_value(), m1w ? std::optional(m1w->str(psl2z)) : std::nullopt);

    GeneratedGroup h0 = GeneratedGroup::h0();
    for (const char* gen : {"s", "t"}) {
        auto w = express(reg.get(gen), h0, cfg.depth, cfg.budget);
        ck.check(std::string(gen) + " lies in <a0,b0,f0>",
                 "a word of length <= " + std::to_string(cfg.depth),
                 word_or(w, h0, std::to_string(cfg.depth)), w.has_value(),
                 w ? std::optional(w->str(h0)) : std::nullopt);
    }
    ck.assumption("PSL2(Z) = Stab_H0(plane over R)",
                  "stabilizer identification; the inclusion <f0,a0> <= H0 is by construction");
}

// ---------------------------------------------------------------------------
// lemma-hn-angles

void suite_lemma_hn_angles(Checker& ck, const SuiteConfig& cfg) {
    ck.default_ref = "lemma: walls, dihedral angles and face pairings of the Q_n family";

    PolyhedronReport main_table = verify_polyhedron(make_doubled_qn_spec(2, TopFaceReading::ImHalf));
    ck.check("Q2 doubled angle table (top face at height 1/2)",
             "all " + std::to_string(main_table.rows.size()) + " incidences match",
             main_table.summary(), main_table.all_pass());

    PolyhedronReport alt_table = verify_polyhedron(make_doubled_qn_spec(2, TopFaceReading::ImSqrt2));
    bool resolved = main_table.all_pass() && !alt_table.all_pass();
    ck.check("dual reading of the top face: only height 1/2 satisfies the claimed table",
             "height 1/2 passes; height r2 does not", alt_table.summary(), resolved,
             alt_table.summary());

    const Registry& reg = registry();
    const Hyperplane iH = vertical_x(FieldElem::zero());
    const Hyperplane iH_half = vertical_x(FieldElem::rational(1, 2));
    const Hyperplane H_ihalf = vertical_y(FieldElem::rational(1, 2));
    const struct {
        const char* name;
        Hyperplane first, second;
    } pairings[] = {
        {"f0", iH, iH_half},
        {"b0", H_ihalf, ball_wall(0)},
        {"a0", iH_half, ball_wall(0)},
        {"a1", iH_half, ball_wall(1)},
    };
    for (const auto& p : pairings) {
        ProjectiveMatrix built = compose_reflections(p.first, p.second);
        ck.check(std::string(p.name) + " reconstructed from its reflection pair",
                 reg.mat(p.name).str(), built.str(), built == reg.mat(p.name));
    }

    // k = 0 compares against the independently displayed a1; k = 1, 2 guard
    // the registry's family entries; the k = 3 rung defines a4, checked to
    // stay unimodular and elliptic of order three like every a_k.
    int ladder_ok = 0;
    ExtendedIsometry cinv = ExtendedIsometry::holomorphic(reg.mat("c").inverse());
    for (int k = 0; k < 3; ++k) {
        if (conjugate(cinv, reg.get("a" + std::to_string(k))) ==
            reg.get("a" + std::to_string(k + 1)))
            ++ladder_ok;
    }
    ExtendedIsometry a4 = conjugate(cinv, reg.get("a3"));
    if (a4.mat.trace_sq().is_one() &&
        (a4.mat.a() * a4.mat.d() - a4.mat.b() * a4.mat.c()).is_one())
        ++ladder_ok;
    ck.check("conjugation ladder c^-1 a_k c = a_{k+1} (k = 0..3)", "4/4",
             std::to_string(ladder_ok) + "/4", ladder_ok == 4);
    ck.check("c commutes with f0", "c*f0 = f0*c",
             evaluate_registry_word("c*f0").str(),
             evaluate_registry_word("c*f0") == evaluate_registry_word("f0*c"));

    int parabolic_ok = 0, parabolic_total = 0;
    for (int k = 1; k <= 4; ++k) {
        for (int j = 0; j <= kMaxConjLevel; ++j) {
            std::string name = "p" + std::to_string(k) + (j ? "_" + std::to_string(j) : "");
            ++parabolic_total;
            if (trace_class(reg.mat(name)) == TraceClass::Parabolic) ++parabolic_ok;
        }
    }
    ck.check("conjugated boundary parabolics p_k^(j) stay parabolic (k <= 4, j <= 3)",
             std::to_string(parabolic_total) + "/" + std::to_string(parabolic_total),
             std::to_string(parabolic_ok) + "/" + std::to_string(parabolic_total),
             parabolic_ok == parabolic_total);

    PolyhedronSpec q2 = make_doubled_qn_spec(2);
    int invol_ok = 0;
    for (const auto& [name, plane] : q2.faces) {
        ExtendedIsometry r = reflect(plane);
        if (compose(r, r) == ExtendedIsometry::identity()) ++invol_ok;
    }
    ck.check("wall reflections are involutions", std::to_string(q2.faces.size()) + "/" +
                                                     std::to_string(q2.faces.size()),
             std::to_string(invol_ok) + "/" + std::to_string(q2.faces.size()),
             invol_ok == static_cast<int>(q2.faces.size()));

    // The mirrored block generators c^-2 conj(x) c^2 land in <a1, a2, f0>,
    // which together with the ladder puts the level-n blocks inside H_2n.
    GeneratedGroup mirror_home = GeneratedGroup::a1_a2_f0();
    ExtendedIsometry c2 =
        ExtendedIsometry::holomorphic(reg.mat("c") * reg.mat("c"));
    int mirror_radius = std::max(cfg.depth, 8);
    for (const char* base : {"f", "g", "h"}) {
        ExtendedIsometry target = conjugate(
            c2.inverse(), ExtendedIsometry::holomorphic(reg.mat(base).entrywise_conj()));
        auto w = express(target, mirror_home, mirror_radius, cfg.budget);
        ck.check("c^-2 conj(" + std::string(base) + ") c^2 lies in <a1,a2,f0>",
                 "a word of length <= " + std::to_string(mirror_radius),
                 word_or(w, mirror_home, std::to_string(mirror_radius)), w.has_value(),
                 w ? std::optional(w->str(mirror_home)) : std::nullopt);
    }
}

// ---------------------------------------------------------------------------
// lemma-algebra

void suite_lemma_algebra(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "lemma: the congruence kernel Omega0 and the parabolic images";
    const Registry& reg = registry();

    ck.check("|PSL2(F5)| = 60 by closure", "60", std::to_string(psl2f5_order()),
             psl2f5_order() == 60);
    std::size_t h0_order = image_order({reg.mat("a0"), reg.mat("b0"), reg.mat("f0")});
    ck.check("theta(H0) has order 60 (the reduction is onto)", "60", std::to_string(h0_order),
             h0_order == 60);

    auto st_closure = image_closure({reg.mat("s"), reg.mat("t")});
    ck.check("theta(Delta0) has order 5", "5", std::to_string(st_closure.size()),
             st_closure.size() == 5);
    bool all_unipotent = std::all_of(st_closure.begin(), st_closure.end(),
                                     [](const PSL2F5& e) { return e.is_lower_unipotent(); });
    ck.check("theta(Delta0) is the lower-unipotent parabolic subgroup", "all elements (1,0;*,1)",
             all_unipotent ? "all elements (1,0;*,1)" : "a non-unipotent element appears",
             all_unipotent);

    std::size_t lambda_order = image_order({reg.mat("p1"), reg.mat("p2"), reg.mat("p3")});
    ck.check("theta(Lambda) has order 5 ([Lambda : Lambda0] = 5)", "5",
             std::to_string(lambda_order), lambda_order == 5);

    ck.check("p2 lies in the kernel", "theta(p2) = identity", reduce_matrix(reg.mat("p2")).str(),
             kernel_contains(reg.mat("p2")));
    ck.check("p4 lies in the kernel", "theta(p4) = identity", reduce_matrix(reg.mat("p4")).str(),
             kernel_contains(reg.mat("p4")));
    ck.check("p1 reduces to a nontrivial class", "theta(p1) != identity",
             reduce_matrix(reg.mat("p1")).str(), !kernel_contains(reg.mat("p1")));
    ck.check("p1 and p3 reduce to the same class (both generate Lambda/Lambda0)",
             reduce_matrix(reg.mat("p1")).str(), reduce_matrix(reg.mat("p3")).str(),
             reduce_matrix(reg.mat("p1")) == reduce_matrix(reg.mat("p3")));

    std::size_t delta0_order = image_order({reg.mat("s"), reg.mat("t")});
    ck.check("index arithmetic: 60 / 5 = 12 (consistency with [H0 : Delta0])", "12",
             std::to_string(delta0_order ? 60 / delta0_order : 0), delta0_order == 5);

    // The conjugate prime (i -> 3) does not send Delta0 into the parabolic
    // subgroup, which pins the choice (1+2i).
    std::size_t other_prime = image_order({reg.mat("s"), reg.mat("t")}, 3);
    ck.check("conjugate-prime probe: i -> 3 sends theta(Delta0) onto all of PSL2(F5)", "60",
             std::to_string(other_prime), other_prime == 60);

    // Multiplicativity on pseudorandom word pairs over the H0 generators.
    std::mt19937 rng(20240521);
    GeneratedGroup h0 = GeneratedGroup::h0();
    auto random_word_matrix = [&] {
        ProjectiveMatrix acc;
        std::uniform_int_distribution<int> len(1, 8), pick(0, 2), sgn(0, 1);
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            ProjectiveMatrix gen = h0.gens[pick(rng)].second.mat;
            acc = acc * (sgn(rng) ? gen : gen.inverse());
        }
        return acc;
    };
    int hom_ok = 0;
    const int hom_trials = 500;
    for (int k = 0; k < hom_trials; ++k) {
        ProjectiveMatrix x = random_word_matrix(), y = random_word_matrix();
        if (reduce_matrix(x * y) == reduce_matrix(x) * reduce_matrix(y)) ++hom_ok;
    }
    ck.check("reduction is multiplicative on 500 random word pairs", "500/500",
             std::to_string(hom_ok) + "/500", hom_ok == hom_trials);
}

// ---------------------------------------------------------------------------
// lemma-orbifold-piece

void suite_lemma_orbifold_piece(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "lemma: the two-ball polyhedron group H_T0";
    IdentityReport relations = verify_identity_set({
        {"a0^3", "a0^3", "1"},
        {"a1^3", "a1^3", "1"},
        {"(a0*a1^-1)^2", "a0*a1^-1*a0*a1^-1", "1"},
        {"(a0*f0)^2", "a0*f0*a0*f0", "1"},
        {"(a1*f0)^2", "a1*f0*a1*f0", "1"},
    });
    for (const auto& row : relations.rows)
        ck.check("relation " + row.label + " = 1", "identity", row.lhs_value, row.pass);

    PolyhedronReport table = verify_polyhedron(make_doubled_pt0_spec());
    ck.check("P_T0 doubled angle table",
             "all " + std::to_string(table.rows.size()) + " incidences match", table.summary(),
             table.all_pass());

    IdentityReport words = verify_identity_set({
        {"f = a0*f0*a0^-1", "a0*f0*a0^-1", "f"},
        {"g = (a0^-1*a1)*f0^-1*(a0^-1*a1)^-1", "a0^-1*a1*f0^-1*a1^-1*a0", "g"},
        {"h = a1*a0*f0^-1*a1", "a1*a0*f0^-1*a1", "h"},
        {"m1 = (f0*a0^-1)^2*f0^-1", "f0*a0^-1*f0*a0^-1*f0^-1", "m1"},
    });
    for (const auto& row : words.rows)
        ck.check("identity " + row.label, row.rhs_value, row.lhs_value, row.pass);

    const auto& phi = phi_images();
    PermGroup ht0 = PermGroup::closure({phi.at("a0"), phi.at("a1"), phi.at("f0")});
    PermGroup gamma = PermGroup::closure({phi.at("h"), phi.at("f")});
    ck.check("index consistency: |phi(H_T0)| / |phi(GammaT0)| = 12", "660 / 55 = 12",
             std::to_string(ht0.order()) + " / " + std::to_string(gamma.order()) + " = " +
                 std::to_string(gamma.order() ? ht0.order() / gamma.order() : 0),
             ht0.order() == 660 && gamma.order() == 55);
    ck.assumption("the convex core of H_T0 has two boundary surfaces",
                  "geometric claim behind the two-component census; used as input");
}

// ---------------------------------------------------------------------------
// lemma-permarep

void suite_lemma_permarep(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "lemma: the permutation representation phi into S12";
    const auto& phi = phi_images();

    RelationAudit audit = verify_relations(
        phi, {
                 {"a0^3", {{"a0", 3}}},
                 {"a1^3", {{"a1", 3}}},
                 {"(a0*a1^-1)^2", {{"a0", 1}, {"a1", -1}, {"a0", 1}, {"a1", -1}}},
                 {"(a0*f0)^2", {{"a0", 1}, {"f0", 1}, {"a0", 1}, {"f0", 1}}},
                 {"(a1*f0)^2", {{"a1", 1}, {"f0", 1}, {"a1", 1}, {"f0", 1}}},
             });
    ck.check("relation audit: the images satisfy the H_T0 presentation", "5/5 relations hold",
             audit.ok ? "5/5 relations hold" : "failed at " + audit.first_failed, audit.ok,
             audit.ok ? std::nullopt : std::optional(audit.first_failed));

    PermGroup ht0 = PermGroup::closure({phi.at("a0"), phi.at("a1"), phi.at("f0")});
    ck.check("|phi(H_T0)| = 660", "660", std::to_string(ht0.order()), ht0.order() == 660);

    PermGroup gamma = PermGroup::closure({phi.at("h"), phi.at("f")});
    bool semidirect = phi.at("f") * phi.at("h") * phi.at("f").inverse() == phi.at("h").pow(4);
    bool g_split = phi.at("g") == phi.at("f") * phi.at("h").inverse();
    ck.check("|phi(GammaT0)| = 55 with f h f^-1 = h^4 and g = f h^-1",
             "order 55; both identities hold",
             "order " + std::to_string(gamma.order()) + "; f h f^-1 = h^4 " +
                 (semidirect ? "holds" : "fails") + "; g = f h^-1 " +
                 (g_split ? "holds" : "fails"),
             gamma.order() == 55 && semidirect && g_split);

    const BlockSystem& blocks = standard_blocks();
    PermGroup a0a1 = PermGroup::closure({phi.at("a0"), phi.at("a1")});
    PermGroup on_blocks = block_action(a0a1, blocks);
    auto is_even = [](const Permutation& p) {
        // Parity = sum of (cycle length - 1) over the cycle decomposition.
        int transpositions = 0;
        std::vector<bool> seen(p.degree(), false);
        for (int i = 1; i <= p.degree(); ++i) {
            if (seen[i - 1]) continue;
            int len = 0, j = i;
            do {
                seen[j - 1] = true;
                j = p.apply(j);
                ++len;
            } while (j != i);
            transpositions += len - 1;
        }
        return transpositions % 2 == 0;
    };
    bool all_even = std::all_of(on_blocks.elements().begin(), on_blocks.elements().end(), is_even);
    std::string psi_a0 = block_cycles(block_image(phi.at("a0"), blocks), blocks);
    std::string psi_a1 = block_cycles(block_image(phi.at("a1"), blocks), blocks);
    ck.check("block action of <phi(a0), phi(a1)> on {C,D,E,F} is A4",
             "order 12, all even, psi(a0) = (D E F), psi(a1) = (C D F)",
             "order " + std::to_string(on_blocks.order()) + ", " +
                 (all_even ? "all even" : "odd element present") + ", psi(a0) = " + psi_a0 +
                 ", psi(a1) = " + psi_a1,
             on_blocks.order() == 12 && a0a1.order() == 12 && all_even &&
                 psi_a0 == "(D E F)" && psi_a1 == "(C D F)");

    const std::map<std::string, std::string> printed = {
        {"f", "(2 7 5 9 3)(4 6 11 10 12)"},
        {"g", "(2 9 12 7 4)(3 11 6 8 5)"},
        {"h", "(2 12 7 8 6 3 4 11 10 9 5)"},
        {"m1", "(1 8)(2 12)(3 4)(5 11)(6 9)(7 10)"},
    };
    int printed_ok = 0;
    std::string mismatch;
    for (const auto& [name, cycles] : printed) {
        if (phi.at(name).cycles() == cycles) {
            ++printed_ok;
        } else if (mismatch.empty()) {
            mismatch = "phi(" + name + ") = " + phi.at(name).cycles() + " != " + cycles;
        }
    }
    ck.check("derived images of f, g, h, m1 match their printed cycle forms", "4/4",
             std::to_string(printed_ok) + "/4", printed_ok == 4,
             mismatch.empty() ? std::nullopt : std::optional(mismatch));

    PermGroup stab = ht0.stabilizer(1);
    std::size_t orbit_size = ht0.orbit(1).size();
    bool lagrange = stab.order() * orbit_size == ht0.order();
    ck.check("Stab(1) in phi(H_T0) equals phi(GammaT0)",
             "order 55, equal as a set; |orbit| * |stab| = 660",
             "order " + std::to_string(stab.order()) + ", " +
                 (stab == gamma ? "equal" : "different") + "; " + std::to_string(orbit_size) +
                 " * " + std::to_string(stab.order()) + " = " +
                 std::to_string(orbit_size * stab.order()),
             stab == gamma && lagrange);

    PermGroup phif = PermGroup::closure({phi.at("f")});
    PermGroup normalized = largest_normalized(gamma, phi.at("m1"));
    ck.check("largest phi(m1)-normalized subgroup of phi(GammaT0) is <phi(f)>",
             "order 5, equal to <phi(f)>",
             "order " + std::to_string(normalized.order()) + ", " +
                 (normalized == phif ? "equal to <phi(f)>" : "different subgroup"),
             normalized == phif && normalized.order() == 5);

    PermGroup conj_gamma = conjugate_group(phi.at("m1"), gamma);
    PermGroup meet = intersect(gamma, conj_gamma);
    ck.check("phi(GammaT0) meets its phi(m1)-conjugate in <phi(f)>", "order 5, equal to <phi(f)>",
             "order " + std::to_string(meet.order()) + ", " +
                 (meet == phif ? "equal to <phi(f)>" : "different subgroup"),
             meet == phif);
}

// ---------------------------------------------------------------------------
// lemma-t0-cover

void suite_lemma_t0_cover(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "lemma: the degree-11 cover of the T0 piece and its boundary";
    const auto& phi = phi_images();

    bool p_images = phi.at("p1") == phi.at("f").inverse() &&
                    phi.at("p3") == phi.at("f").inverse() && phi.at("p2").is_identity();
    ck.check("phi(p1) = phi(p3) = phi(f)^-1 and phi(p2) = id",
             "both equalities and the kernel membership",
             "phi(p1) = " + phi.at("p1").cycles() + ", phi(p2) = " + phi.at("p2").cycles() +
                 ", phi(p3) = " + phi.at("p3").cycles(),
             p_images);

    PermGroup gamma = PermGroup::closure({phi.at("h"), phi.at("f")});
    PermGroup phif = PermGroup::closure({phi.at("f")});
    ck.check("[GammaT0 : Omega_T0] = |phi(GammaT0)| / |phi(Lambda)| = 11", "55 / 5 = 11",
             std::to_string(gamma.order()) + " / " + std::to_string(phif.order()) + " = " +
                 std::to_string(phif.order() ? gamma.order() / phif.order() : 0),
             gamma.order() == 55 && phif.order() == 5);

    auto orbits = orbits_of_affine_map(11, 4);
    std::ostringstream got;
    for (const auto& orbit : orbits) {
        got << "{";
        for (size_t k = 0; k < orbit.size(); ++k) got << (k ? "," : "") << orbit[k];
        got << "}";
    }
    bool orbit_match = orbits.size() == 3 && orbits[0] == std::vector<int>{0} &&
                       std::find(orbits.begin(), orbits.end(),
                                 std::vector<int>{1, 3, 4, 5, 9}) != orbits.end() &&
                       std::find(orbits.begin(), orbits.end(),
                                 std::vector<int>{2, 6, 7, 8, 10}) != orbits.end();
    ck.check("orbits of j -> 4j (mod 11) are {0}, {1,3,4,5,9}, {2,6,7,8,10}",
             "{0}{1,3,4,5,9}{2,6,7,8,10}", got.str(), orbit_match);

    bool g_seven = phi.at("g") == phi.at("h").pow(7) * phi.at("f");
    ck.check("phi(g) = h^7 f (the Gcomp boundary lives over the orbit of 7)",
             "equality in S12 and orbit size 5",
             std::string(g_seven ? "holds" : "fails") + "; orbit of 7 has size " +
                 std::to_string(expected_component_orbit(ComponentTag::Gcomp).size()),
             g_seven && expected_component_orbit(ComponentTag::Gcomp).size() == 5);
    bool ginv = phi.at("g").inverse() == phi.at("h") * phi.at("f").inverse();
    ck.check("phi(g^-1) = h f^-1 (the Ginvcomp boundary lives over the orbit of 1)",
             "equality in S12 and orbit size 5",
             std::string(ginv ? "holds" : "fails") + "; orbit of 1 has size " +
                 std::to_string(expected_component_orbit(ComponentTag::Ginvcomp).size()),
             ginv && expected_component_orbit(ComponentTag::Ginvcomp).size() == 5);

    AuditReport census = boundary_census(build_n(3));
    ck.check("boundary census on build_n(3): lower tags F0:1, Gcomp:5, Ginvcomp:5",
             "every T block passes", census.all_ok() ? "every T block passes" : census.summary(),
             census.all_ok());

    ThetaPhiResult theta_phi = check_theta_equals_phi(4);
    ck.check("theta = phi on all p-words of length <= 4", "no mismatching word",
             theta_phi.equal ? "no mismatching word" : "mismatch at " + theta_phi.witness,
             theta_phi.equal,
             theta_phi.equal ? std::nullopt : std::optional(theta_phi.witness));

    bool degrees = expected_component_orbit(ComponentTag::F0).size() == 1 &&
                   expected_component_orbit(ComponentTag::Gcomp).size() == 5 &&
                   expected_component_orbit(ComponentTag::Ginvcomp).size() == 5;
    ck.check("component orbits have the port degrees 1, 5, 5", "1, 5, 5",
             std::to_string(expected_component_orbit(ComponentTag::F0).size()) + ", " +
                 std::to_string(expected_component_orbit(ComponentTag::Gcomp).size()) + ", " +
                 std::to_string(expected_component_orbit(ComponentTag::Ginvcomp).size()),
             degrees);
    ck.assumption("each degree-5 boundary piece of the S-side cover is a single component",
                  "modeled as one port per base sphere, matching the isometric embeddings used "
                  "by the gluing");
}

// ---------------------------------------------------------------------------
// lemma-mutator

void suite_lemma_mutator(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "lemma: the mutation isometry m1 on the four cusps";
    const Registry& reg = registry();

    ExtendedIsometry m1 = reg.get("m1");
    ck.check("m1^2 = 1 projectively", "identity", compose(m1, m1).str(),
             compose(m1, m1) == ExtendedIsometry::identity());

    const int sigma[5] = {0, 3, 4, 1, 2};  // (1 3)(2 4)
    for (int k = 1; k <= 4; ++k) {
        std::string pk = "p" + std::to_string(k);
        std::string target = "p" + std::to_string(sigma[k]);
        ExtendedIsometry conj = conjugate(m1, reg.get(pk));
        ExtendedIsometry expected = reg.get(target).inverse();
        ck.check("m1 " + pk + " m1^-1 = " + target + "^-1", expected.str(), conj.str(),
                 conj == expected);
    }

    // Fixed-point certification of the cusp cycle.
    BoundaryPoint fixed[5];
    for (int k = 1; k <= 4; ++k) fixed[k] = parabolic_fixed_point(reg.mat("p" + std::to_string(k)));
    bool cycle_ok = true;
    for (int k = 1; k <= 4; ++k)
        cycle_ok = cycle_ok && apply_boundary(m1, fixed[k]) == fixed[sigma[k]];
    ck.check("m1 maps the cusp fixed points along (1 3)(2 4)",
             "0 -> 5/3, inf -> 3/2, 5/3 -> 0, 3/2 -> inf",
             fixed[1].str() + " -> " + apply_boundary(m1, fixed[1]).str() + ", " + fixed[2].str() +
                 " -> " + apply_boundary(m1, fixed[2]).str() + ", " + fixed[3].str() + " -> " +
                 apply_boundary(m1, fixed[3]).str() + ", " + fixed[4].str() + " -> " +
                 apply_boundary(m1, fixed[4]).str(),
             cycle_ok);

    bool fixed_values = !fixed[1].infinite && fixed[1].z == FieldElem::zero() &&
                        fixed[2].infinite && !fixed[3].infinite &&
                        fixed[3].z == FieldElem::rational(5, 3) && !fixed[4].infinite &&
                        fixed[4].z == FieldElem::rational(3, 2);
    ck.check("parabolic fixed points of p1..p4 are 0, inf, 5/3, 3/2", "0, inf, 5/3, 3/2",
             fixed[1].str() + ", " + fixed[2].str() + ", " + fixed[3].str() + ", " +
                 fixed[4].str(),
             fixed_values);

    IdentityReport p4rel = verify_identity_set({{"p4 = p1*p2*p3^-1", "p1*p2*p3^-1", "p4"}});
    ck.check("p4 = p1*p2*p3^-1", p4rel.rows[0].rhs_value, p4rel.rows[0].lhs_value,
             p4rel.all_pass());

    int family_ok = 0, family_total = 0;
    for (int n = 1; n <= kMaxConjLevel; ++n) {
        ExtendedIsometry m1n = reg.get("m1_" + std::to_string(n));
        for (int k = 1; k <= 4; ++k) {
            ++family_total;
            ExtendedIsometry pkn = reg.get("p" + std::to_string(k) + "_" + std::to_string(n));
            ExtendedIsometry target =
                reg.get("p" + std::to_string(sigma[k]) + "_" + std::to_string(n)).inverse();
            if (conjugate(m1n, pkn) == target) ++family_ok;
        }
    }
    ck.check("m1^(n) acts by (1 3)(2 4) on the level-n parabolics (n = 1..3)",
             std::to_string(family_total) + "/" + std::to_string(family_total),
             std::to_string(family_ok) + "/" + std::to_string(family_total),
             family_ok == family_total);
}

// ---------------------------------------------------------------------------
// prop-boundary

void suite_prop_boundary(Checker& ck, const SuiteConfig& cfg) {
    ck.default_ref = "proposition: the boundary parabolics label the cusps";
    const Registry& reg = registry();

    GeneratedGroup lambda = GeneratedGroup::lambda();
    BallIndex ball2 = enumerate_ball(lambda, 2, cfg.budget);
    BallIndex ball3 = enumerate_ball(lambda, 3, cfg.budget);
    bool in2 = ball2.find(reg.get("p4")).has_value();
    auto in3 = ball3.find(reg.get("p4"));
    ck.check("p4 first appears in the radius-3 ball of <p1,p2,p3>",
             "absent at radius 2, present at radius 3",
             std::string(in2 ? "present" : "absent") + " at radius 2, " +
                 (in3 ? "present (" + in3->str(lambda) + ")" : "absent") + " at radius 3",
             !in2 && in3.has_value(), in3 ? std::optional(in3->str(lambda)) : std::nullopt);

    for (int omit = 1; omit <= 4; ++omit) {
        GeneratedGroup triple{"Lambda-triple", {}};
        for (int k = 1; k <= 4; ++k) {
            if (k == omit) continue;
            std::string name = "p" + std::to_string(k);
            triple.gens.emplace_back(name, reg.get(name));
        }
        std::string omitted = "p" + std::to_string(omit);
        auto w = express(reg.get(omitted), triple, 3, cfg.budget);
        ck.check("the triple omitting " + omitted + " generates it", "a word of length <= 3",
                 word_or(w, triple, "3"), w.has_value(),
                 w ? std::optional(w->str(triple)) : std::nullopt);
    }

    const std::vector<std::array<std::string, 2>> double_words = {
        {"s^-1", "f^-1"},
        {"s*t*s*t^-2", "f*g^-1*f^-1*h^-1*g"},
        {"t*s*t*s^-1*t^-1*s^-1*t^-1", "g^-1*f^-1*h*g^-1*h^-1*f*g"},
    };
    int agree = 0;
    for (const auto& [st_word, fgh_word] : double_words)
        if (evaluate_registry_word(st_word) == evaluate_registry_word(fgh_word)) ++agree;
    ck.check("the <s,t> and <f,g,h> word forms of p1, p2, p3 agree", "3/3",
             std::to_string(agree) + "/3", agree == 3);

    BallIndex ball1 = enumerate_ball(lambda, 1, cfg.budget);
    ck.check("radius-1 ball of <p1,p2,p3> has 7 distinct elements", "7",
             std::to_string(ball1.size()), ball1.size() == 7);

    int parabolic = 0;
    for (int k = 1; k <= 4; ++k)
        if (trace_class(reg.mat("p" + std::to_string(k))) == TraceClass::Parabolic) ++parabolic;
    ck.check("p1..p4 are parabolic", "4/4", std::to_string(parabolic) + "/4", parabolic == 4);
}

// ---------------------------------------------------------------------------
// cor-hidden-extension

void suite_cor_hidden_extension(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "corollary: the hidden extension over the doubled T-cover";
    const auto& phi = phi_images();
    const Registry& reg = registry();

    bool normalizes = phi.at("m1") * phi.at("f") * phi.at("m1").inverse() ==
                      phi.at("f").inverse();
    ck.check("phi(m1 f m1^-1) = phi(f)^-1 (phi(m1) normalizes <phi(f)>)",
             "phi(f)^-1 = " + phi.at("f").inverse().cycles(),
             (phi.at("m1") * phi.at("f") * phi.at("m1").inverse()).cycles(), normalizes);

    Permutation conj_h = phi.at("m1") * phi.at("h") * phi.at("m1").inverse();
    ck.check("phi(m1 h m1^-1) moves the point 1 (the conjugate subgroup is different)",
             "1 is moved", "1 -> " + std::to_string(conj_h.apply(1)), conj_h.apply(1) != 1);

    const ProjectiveMatrix& m1 = reg.mat("m1");
    bool m1_real = m1.a().is_real() && m1.b().is_real() && m1.c().is_real() && m1.d().is_real();
    ck.check("m1 has real entries (preserves the plane over R)", "real entries", m1.str(),
             m1_real);

    ExtendedIsometry gmg = evaluate_registry_word("g*m1*g^-1");
    bool gmg_real = gmg.mat.a().is_real() && gmg.mat.b().is_real() && gmg.mat.c().is_real() &&
                    gmg.mat.d().is_real();
    ck.check("g m1 g^-1 has real entries (m1 preserves the g^-1-translate of the plane)",
             "real entries", gmg.mat.str(), gmg_real);

    ck.check("component preservation: two of the three boundary components are fixed directly, "
             "the third by elimination",
             "plane over R and its g^-1-translate fixed",
             std::string(m1_real && gmg_real ? "both fixed" : "a translate moves"),
             m1_real && gmg_real);

    PsiReport rt = psi_check(build_n(2));
    ck.check("the lift commutes with R_T at marker level (build_n(2))", "pass", rt.summary(),
             rt.pass());

    ck.assumption("m1 does not normalize Gamma_T",
                  "imported non-normalization; bounded search cannot certify a negative");
    ck.assumption("the mutant links are non-isometric",
                  "rigidity input behind `hidden', not machine-checked here");
}

// ---------------------------------------------------------------------------
// cor-over-ms

void suite_cor_over_ms(Checker& ck, const SuiteConfig& cfg) {
    ck.default_ref = "corollary: extending the lift across the S-side cover";
    const Registry& reg = registry();

    IdentityReport gm = verify_identity_set(
        {{"g*m1*g^-1 = [[1,-1],[2,-1]]", "g*m1*g^-1", "[[1, -1], [2, -1]]"}});
    ck.check("g*m1*g^-1 = [[1,-1],[2,-1]]", gm.rows[0].rhs_value, gm.rows[0].lhs_value,
             gm.all_pass());

    ExtendedIsometry msm = evaluate_registry_word("m1*s*m1^-1");
    ck.check("m1 s m1^-1 = p3 exactly", reg.mat("p3").str(), msm.mat.str(),
             msm == reg.get("p3"));

    GeneratedGroup delta0 = GeneratedGroup::delta0();
    auto sw = express(msm, delta0, cfg.depth_delta0, cfg.budget);
    ck.check("m1 s m1^-1 lies in <s,t> (radius " + std::to_string(cfg.depth_delta0) + ")",
             "a word of length <= " + std::to_string(cfg.depth_delta0),
             word_or(sw, delta0, std::to_string(cfg.depth_delta0)), sw.has_value(),
             sw ? std::optional(sw->str(delta0)) : std::nullopt);

    int t_radius = std::max(cfg.depth_delta0, 10);
    ExtendedIsometry mtm = evaluate_registry_word("m1*t*m1^-1");
    auto tw = express(mtm, delta0, t_radius, cfg.budget);
    ck.check("m1 t m1^-1 lies in <s,t> (radius " + std::to_string(t_radius) + ")",
             "a word of length <= " + std::to_string(t_radius),
             word_or(tw, delta0, std::to_string(t_radius)), tw.has_value(),
             tw ? std::optional(tw->str(delta0)) : std::nullopt);

    GeneratedGroup psl2z = GeneratedGroup::psl2z();
    ExtendedIsometry gmg = evaluate_registry_word("g*m1*g^-1");
    auto gw = express(gmg, psl2z, cfg.depth, cfg.budget);
    ck.check("g*m1*g^-1 lies in <f0,a0>", "a word of length <= " + std::to_string(cfg.depth),
             word_or(gw, psl2z, std::to_string(cfg.depth)), gw.has_value(),
             gw ? std::optional(gw->str(psl2z)) : std::nullopt);

    bool kernel_ok = true;
    for (const char* gen : {"a0", "b0", "f0"}) {
        for (const char* ker : {"p2", "p4"}) {
            ExtendedIsometry conj =
                evaluate_registry_word(std::string(gen) + "*" + ker + "*" + gen + "^-1");
            kernel_ok = kernel_ok && kernel_contains(conj.mat);
        }
    }
    ck.check("H0 generators conjugate the residue kernel samples p2, p4 into the kernel",
             "6/6 conjugates reduce to the identity",
             kernel_ok ? "6/6 conjugates reduce to the identity" : "a conjugate leaves the kernel",
             kernel_ok);

    CoverGraph n1 = build_n(1);
    bool j_tags = true;
    int j_count = 0;
    for (const auto& gl : n1.gluings) {
        if (gl.map != MapTag::J) continue;
        ++j_count;
        const BoundaryPort& a = n1.ports[gl.port_a];
        const BoundaryPort& b = n1.ports[gl.port_b];
        const Piece& pa = n1.pieces[a.piece];
        ComponentTag want = pa.tag == CoverTag::SPlain
                                ? ComponentTag::F0
                                : (pa.tag == CoverTag::Na ? ComponentTag::Gcomp
                                                          : ComponentTag::Ginvcomp);
        j_tags = j_tags && a.tag == want && b.tag == want;
    }
    ck.check("J pairs S-plain<->F0, Na<->Gcomp, Nb<->Ginvcomp (build_n(1))",
             "3 J-gluings with matching tags",
             std::to_string(j_count) + " J-gluings, tags " + (j_tags ? "match" : "mismatch"),
             j_count == 3 && j_tags);

    int s_side = 0;
    for (const auto& piece : n1.pieces)
        if (piece.base == BaseKind::S) s_side += piece.degree;
    ck.check("the S-side cover has degree 1 + 5 + 5 = 11", "11", std::to_string(s_side),
             s_side == 11);
}

// ---------------------------------------------------------------------------
// thm-glue-covers

void suite_thm_glue_covers(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "theorem: gluing the pieces into 11-sheeted covers";

    bool open_degrees = true, open_psi = true;
    std::string open_fail;
    for (int n = 1; n <= 6; ++n) {
        CoverGraph g = build_n(n);
        AuditReport audit = degree_audit(g);
        PsiReport psi = psi_check(g);
        if (!audit.all_ok()) {
            open_degrees = false;
            if (open_fail.empty()) open_fail = "n=" + std::to_string(n) + ": " + audit.summary();
        }
        if (!psi.pass()) {
            open_psi = false;
            if (open_fail.empty()) open_fail = "n=" + std::to_string(n) + ": " + psi.summary();
        }
    }
    ck.check("degree audit of build_n(1..6)", "all sums equal 11",
             open_degrees ? "all sums equal 11" : open_fail, open_degrees);
    ck.check("automorphism data of build_n(1..6)", "pass for every n",
             open_psi ? "pass for every n" : open_fail, open_psi);

    bool closed_degrees = true, closed_psi = true;
    std::string closed_fail;
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            CoverGraph g = build_closed(m, n);
            if (!degree_audit(g).all_ok()) {
                closed_degrees = false;
                if (closed_fail.empty())
                    closed_fail = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            }
            if (!psi_check(g).pass()) {
                closed_psi = false;
                if (closed_fail.empty())
                    closed_fail = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            }
        }
    }
    ck.check("degree audit of build_closed(m,n), m,n in 1..3", "all sums equal 11",
             closed_degrees ? "all sums equal 11" : "failed at " + closed_fail, closed_degrees);
    ck.check("automorphism data of build_closed(m,n), m,n in 1..3", "pass for every m,n",
             closed_psi ? "pass for every m,n" : "failed at " + closed_fail, closed_psi);

    CoverGraph n1 = build_n(1);
    int open_total = 0;
    for (int pid : n1.unglued_ports()) open_total += n1.ports[pid].degree;
    int j_gluings = 0;
    for (const auto& gl : n1.gluings) j_gluings += gl.map == MapTag::J;
    ck.check("build_n(1) structure: 4 pieces, 3 J-gluings, open boundary of degree 11",
             "4 pieces, 3 J-gluings, open degree 11",
             std::to_string(n1.pieces.size()) + " pieces, " + std::to_string(j_gluings) +
                 " J-gluings, open degree " + std::to_string(open_total),
             n1.pieces.size() == 4 && j_gluings == 3 && open_total == 11);

    // Negative control: transpose the component tags on one R_T gluing.
    CoverGraph bad_rt = build_n(2);
    for (auto& gl : bad_rt.gluings) {
        if (gl.map != MapTag::RT) continue;
        BoundaryPort& a = bad_rt.ports[gl.port_a];
        if (a.tag == ComponentTag::Gcomp) {
            a.tag = ComponentTag::Ginvcomp;
            break;
        }
    }
    PsiReport bad_rt_report = psi_check(bad_rt);
    ck.check("negative control: a transposed R_T tag is flagged", "a located tag mismatch",
             bad_rt_report.pass() ? "not flagged" : bad_rt_report.violations.front(),
             !bad_rt_report.pass(),
             bad_rt_report.pass() ? std::nullopt
                                  : std::optional(bad_rt_report.violations.front()));

    // Negative control: delete the Na piece (and its port and gluing).
    CoverGraph bad_deg = build_n(4);
    {
        int na_piece = -1;
        for (const auto& piece : bad_deg.pieces)
            if (piece.tag == CoverTag::Na) na_piece = piece.id;
        std::erase_if(bad_deg.gluings, [&](const Gluing& gl) {
            return bad_deg.ports[gl.port_a].piece == na_piece ||
                   bad_deg.ports[gl.port_b].piece == na_piece;
        });
        std::erase_if(bad_deg.pieces, [&](const Piece& p) { return p.id == na_piece; });
        // Port ids stay valid for the remaining gluings; drop the orphan port.
        std::erase_if(bad_deg.ports, [&](const BoundaryPort& p) { return p.piece == na_piece; });
        // Reindex pieces by id lookup.
        for (auto& port : bad_deg.ports) {
            // pieces vector may have a hole; normalize ids to positions.
            for (size_t k = 0; k < bad_deg.pieces.size(); ++k)
                if (bad_deg.pieces[k].id == port.piece) port.piece = static_cast<int>(k);
        }
        for (auto& piece : bad_deg.pieces) piece.id = -1;  // reassigned below
        for (size_t k = 0; k < bad_deg.pieces.size(); ++k) bad_deg.pieces[k].id = static_cast<int>(k);
        std::map<int, int> port_remap;
        for (size_t k = 0; k < bad_deg.ports.size(); ++k) {
            port_remap[bad_deg.ports[k].id] = static_cast<int>(k);
            bad_deg.ports[k].id = static_cast<int>(k);
        }
        for (auto& gl : bad_deg.gluings) {
            gl.port_a = port_remap.at(gl.port_a);
            gl.port_b = port_remap.at(gl.port_b);
        }
    }
    AuditReport bad_deg_report = degree_audit(bad_deg);
    bool flagged_six = false;
    for (const auto& line : bad_deg_report.lines)
        if (!line.ok && line.total == 6) flagged_six = true;
    ck.check("negative control: deleting the degree-5 S-side piece drops a sum to 6",
             "a flagged sum of 6", flagged_six ? "a flagged sum of 6" : bad_deg_report.summary(),
             flagged_six);

    // Mirror symmetry for m = n.
    CoverGraph sym = build_closed(2, 2);
    std::map<std::string, int> labels;
    for (const auto& piece : sym.pieces) labels[piece.label] = piece.degree;
    bool mirrored = true;
    for (const auto& [label, degree] : labels) {
        if (label.rfind("mirror-", 0) == 0) continue;
        auto it = labels.find("mirror-" + label);
        mirrored = mirrored && it != labels.end() && it->second == degree;
    }
    int mirror_gluings = 0;
    for (const auto& gl : sym.gluings) mirror_gluings += gl.map == MapTag::Mirror;
    ck.check("build_closed(2,2) is mirror-symmetric with 3 mirror gluings",
             "every piece has a mirror twin; 3 mirror gluings",
             std::string(mirrored ? "twins present" : "twin missing") + "; " +
                 std::to_string(mirror_gluings) + " mirror gluings",
             mirrored && mirror_gluings == 3);

    bool rejected = false;
    try {
        build_n(0);
    } catch (const InvalidParameter&) {
        rejected = true;
    }
    bool rejected_closed = false;
    try {
        build_closed(0, 1);
    } catch (const InvalidParameter&) {
        rejected_closed = true;
    }
    ck.check("build_n(0) and build_closed(0,1) are rejected", "both throw InvalidParameter",
             std::string(rejected ? "build_n(0) rejected" : "build_n(0) accepted") + "; " +
                 (rejected_closed ? "build_closed(0,1) rejected" : "build_closed(0,1) accepted"),
             rejected && rejected_closed);
}

// ---------------------------------------------------------------------------
// remark-minimality

void suite_remark_minimality(Checker& ck, const SuiteConfig&) {
    ck.default_ref = "remark: conditional lower bound on the covering degree";
    const auto& phi = phi_images();

    int bound = minimality_bound();
    ck.check("minimality bound 55 / |largest normalized subgroup| = 11", "11",
             std::to_string(bound), bound == 11);
    ck.check("degenerate control: the whole group gives bound 1", "1",
             std::to_string(minimality_bound_with(55)), minimality_bound_with(55) == 1);
    ck.check("degenerate control: the trivial subgroup gives bound 55", "55",
             std::to_string(minimality_bound_with(1)), minimality_bound_with(1) == 55);

    PermGroup gamma = PermGroup::closure({phi.at("h"), phi.at("f")});
    auto subs = all_subgroups(gamma);
    std::map<std::size_t, int> by_order;
    for (const auto& s : subs) ++by_order[s.order()];
    std::ostringstream os;
    for (const auto& [order, count] : by_order) os << count << " of order " << order << "; ";
    ck.check("the order-55 group has exactly 14 subgroups (1+11+1+1)",
             "14 subgroups: 1 of order 1; 11 of order 5; 1 of order 11; 1 of order 55",
             std::to_string(subs.size()) + " subgroups: " + os.str(),
             subs.size() == 14 && by_order[1] == 1 && by_order[5] == 11 && by_order[11] == 1 &&
                 by_order[55] == 1);
}

// ---------------------------------------------------------------------------

struct SuiteEntry {
    SuiteInfo info;
    std::function<void(Checker&, const SuiteConfig&)> run;
};

const std::vector<SuiteEntry>& suite_table() {
    static const std::vector<SuiteEntry> table = {
        {{"registry-audit", "determinants and displayed values of the named matrices",
          "matrix catalog"},
         suite_registry_audit},
        {{"lemma-h0", "relations and finite-index data of the one-ball reflection group",
          "lemma: the other piece (H0)"},
         suite_lemma_h0},
        {{"lemma-hn-angles", "wall angles, face pairings and conjugation ladder of Q_n",
          "lemma: H_n"},
         suite_lemma_hn_angles},
        {{"lemma-algebra", "congruence reduction mod (1+2i): orders, kernel, prime pinning",
          "lemma: Omega0 and Lambda0"},
         suite_lemma_algebra},
        {{"lemma-orbifold-piece", "presentation, angle table and index of the T0-piece group",
          "lemma: H_T0"},
         suite_lemma_orbifold_piece},
        {{"lemma-permarep", "the 12-point representation: orders, blocks, normalized subgroup",
          "lemma: phi into S12"},
         suite_lemma_permarep},
        {{"lemma-t0-cover", "boundary components of the degree-11 T0 cover",
          "lemma: the T0 cover"},
         suite_lemma_t0_cover},
        {{"lemma-mutator", "the mutation's action on cusps and parabolics",
          "lemma: the mutation m1"},
         suite_lemma_mutator},
        {{"prop-boundary", "boundary parabolics: words, generation, fixed points",
          "proposition: boundary labels"},
         suite_prop_boundary},
        {{"cor-hidden-extension", "the lift over the doubled T-cover and its commutations",
          "corollary: hidden extension"},
         suite_cor_hidden_extension},
        {{"cor-over-ms", "extending across the S-side cover via the J-gluing",
          "corollary: over M_S"},
         suite_cor_over_ms},
        {{"thm-glue-covers", "assembled covers: degree audits, marker checks, controls",
          "theorem: glue covers"},
         suite_thm_glue_covers},
        {{"remark-minimality", "conditional degree-11 minimality bound",
          "remark: degree at least 11"},
         suite_remark_minimality},
    };
    return table;
}

}  // namespace

const std::vector<SuiteInfo>& list_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& entry : suite_table()) out.push_back(entry.info);
        out.push_back({"all", "every suite above, in order", "whole catalog"});
        return out;
    }();
    return infos;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    auto start = std::chrono::steady_clock::now();
    Checker ck;
    bool found = false;
    if (name == "all") {
        for (const auto& entry : suite_table()) entry.run(ck, config);
        found = true;
    } else {
        for (const auto& entry : suite_table()) {
            if (entry.info.name == name) {
                entry.run(ck, config);
                found = true;
                break;
            }
        }
    }
    if (!found) throw UnknownSuite(name);
    SuiteReport report;
    report.suite = name;
    report.config = config;
    report.results = std::move(ck.results);
    report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
    return report;
}

std::string to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["config"] = {{"depth", report.config.depth},
                   {"depth_delta0", report.config.depth_delta0},
                   {"budget", report.config.budget}};
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["status"] = check_status_name(r.status);
        item["expected"] = r.expected;
        item["actual"] = r.actual;
        item["witness"] = r.witness ? nlohmann::ordered_json(*r.witness)
                                    : nlohmann::ordered_json(nullptr);
        item["paper_ref"] = r.paper_ref;
        j["results"].push_back(std::move(item));
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2);
}

std::string to_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " (depth " << report.config.depth << ", depth_delta0 "
       << report.config.depth_delta0 << ", budget " << report.config.budget << ")\n";
    for (const auto& r : report.results) {
        os << "  [" << check_status_name(r.status) << "] " << r.name << "\n";
        os << "      expected: " << r.expected << "\n";
        os << "      actual:   " << r.actual << "\n";
        if (r.witness) os << "      witness:  " << *r.witness << "\n";
        os << "      ref:      " << r.paper_ref << "\n";
    }
    os << report.results.size() << " checks, " << report.failures() << " failures, "
       << report.assumptions() << " assumptions (" << report.elapsed_ms << " ms)\n";
    return os.str();
}

}  // namespace kleinian
