#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kleinian/wordsearch.hpp"

using namespace kleinian;

TEST_CASE("ball sizes at small radius") {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    CHECK(enumerate_ball(delta0, 0).size() == 1);
    CHECK(enumerate_ball(delta0, 1).size() == 5);  // 1, s, s^-1, t, t^-1 all distinct

    GeneratedGroup lambda = GeneratedGroup::lambda();
    CHECK(enumerate_ball(lambda, 1).size() == 7);
}

TEST_CASE("ball words re-evaluate to their keys") {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    BallIndex ball = enumerate_ball(delta0, 5);
    CHECK(ball.audit(delta0));

    GeneratedGroup h0 = GeneratedGroup::h0();
    BallIndex hball = enumerate_ball(h0, 4);
    CHECK(hball.audit(h0));
}

TEST_CASE("ball enumeration respects its budget") {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    CHECK_THROWS_AS(enumerate_ball(delta0, 8, 100), BudgetExceeded);
}

TEST_CASE("p4 enters the ball exactly at radius 3") {
    GeneratedGroup lambda = GeneratedGroup::lambda();
    const Registry& reg = registry();
    CHECK(!enumerate_ball(lambda, 2).find(reg.get("p4")).has_value());
    auto w = enumerate_ball(lambda, 3).find(reg.get("p4"));
    REQUIRE(w.has_value());
    CHECK(w->length() == 3);
    CHECK(w->evaluate(lambda) == reg.get("p4"));
}

TEST_CASE("express finds short certificates") {
    const Registry& reg = registry();

    GeneratedGroup ht0 = GeneratedGroup::h_t0();
    auto fw = express(reg.get("f"), ht0, 3);
    REQUIRE(fw.has_value());
    CHECK(fw->length() <= 3);  // a0*f0*a0^-1 works; the search may beat it
    CHECK(fw->evaluate(ht0) == reg.get("f"));

    GeneratedGroup psl2z = GeneratedGroup::psl2z();
    auto m1w = express(reg.get("m1"), psl2z, 5);
    REQUIRE(m1w.has_value());
    CHECK(m1w->length() <= 5);
    CHECK(m1w->evaluate(psl2z) == reg.get("m1"));

    GeneratedGroup delta0 = GeneratedGroup::delta0();
    ExtendedIsometry msm = evaluate_registry_word("m1*s*m1^-1");
    auto sw = express(msm, delta0, 8);
    REQUIRE(sw.has_value());
    CHECK(sw->evaluate(delta0) == reg.get("p3"));  // m1 s m1^-1 = p3

    ExtendedIsometry mtm = evaluate_registry_word("m1*t*m1^-1");
    auto tw = express(mtm, delta0, 10);
    REQUIRE(tw.has_value());
    CHECK(tw->evaluate(delta0) == mtm);
}

TEST_CASE("express is deterministic and labels absence correctly") {
    GeneratedGroup lambda = GeneratedGroup::lambda();
    const Registry& reg = registry();
    auto w1 = express(reg.get("p4"), lambda, 4);
    auto w2 = express(reg.get("p4"), lambda, 4);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->str(lambda) == w2->str(lambda));
    // t is certainly not a short Lambda-word; the result is only a ball claim.
    CHECK(!express(reg.get("t"), lambda, 3).has_value());
}

TEST_CASE("identity set verification") {
    IdentityReport report = verify_identity_set({
        {"f = a0*f0*a0^-1", "a0*f0*a0^-1", "f"},
        {"g = (a0^-1*a1)*f0^-1*(a0^-1*a1)^-1", "a0^-1*a1*f0^-1*a1^-1*a0", "g"},
        {"h = a1*a0*f0^-1*a1", "a1*a0*f0^-1*a1", "h"},
        {"m1 = (f0*a0^-1)^2*f0^-1", "f0*a0^-1*f0*a0^-1*f0^-1", "m1"},
        {"g*m1*g^-1 matrix", "g*m1*g^-1", "[[1, -1], [2, -1]]"},
        {"reflexive", "s", "s"},
    });
    CHECK(report.all_pass());
    CHECK(report.first_failure().empty());

    IdentityReport bad = verify_identity_set({{"s = t", "s", "t"}});
    CHECK(!bad.all_pass());
    CHECK(bad.first_failure().find("s = t") != std::string::npos);
}

TEST_CASE("conjugacy search") {
    GeneratedGroup lambda = GeneratedGroup::lambda();
    ExtendedIsometry lhs = evaluate_registry_word("m1*p1*m1^-1");
    ExtendedIsometry rhs = evaluate_registry_word("p3^-1");
    auto w0 = conjugacy_search(lhs, rhs, lambda, 0);
    REQUIRE(w0.has_value());
    CHECK(w0->empty());  // already equal

    auto same = conjugacy_search(registry().get("p1"), registry().get("p1"), lambda, 0);
    REQUIRE(same.has_value());
    CHECK(same->empty());

    // Distinct cusps: no conjugator in the radius-4 ball.
    CHECK(!conjugacy_search(registry().get("p1"), registry().get("p2"), lambda, 4).has_value());
}

TEST_CASE("word grammar round-trips") {
    GeneratedGroup ht0 = GeneratedGroup::h_t0();
    Word w = parse_word("a0*f0^-1*a1^2", ht0);
    CHECK(w.length() == 4);
    CHECK(w.str(ht0) == "a0*f0^-1*a1*a1");
    CHECK(parse_word(w.str(ht0), ht0).str(ht0) == w.str(ht0));
    CHECK(parse_word("a0*a0^-1", ht0).empty());  // free reduction
    CHECK(parse_word("1", ht0).empty());
    CHECK(evaluate_registry_word("1") == ExtendedIsometry::identity());
    CHECK_THROWS_AS(parse_word("a0**f0", ht0), ParseError);
    CHECK_THROWS_AS(parse_word("nosuch", ht0), std::out_of_range);
    CHECK_THROWS_AS(parse_word("", ht0), ParseError);
}

TEST_CASE("preloaded generating sets") {
    CHECK(GeneratedGroup::delta0().gens.size() == 2);
    CHECK(GeneratedGroup::gamma_t0().gens.size() == 3);
    CHECK(GeneratedGroup::lambda().gens.size() == 3);
    CHECK(GeneratedGroup::h0().gens.size() == 3);
    CHECK(GeneratedGroup::h_t0().gens.size() == 3);
    CHECK(GeneratedGroup::psl2z().gens.size() == 2);

    GeneratedGroup d2 = GeneratedGroup::delta_n(2);
    CHECK(d2.gens.size() == 2 + 2 * 6);  // s, t plus six conjugated generators per level
    GeneratedGroup h3 = GeneratedGroup::h_n(3);
    CHECK(h3.gens.size() == 6);  // f0, b0, a0, a1, a2, a3
    // Generator names are unique.
    for (const auto& g : {d2, h3}) {
        std::set<std::string> names;
        for (const auto& [name, iso] : g.gens) CHECK(names.insert(name).second);
    }
    // Level-1 block of Delta_n is the plain <f,g,h> block.
    CHECK(d2.gens[2].second == registry().get("f"));
    CHECK_THROWS_AS(GeneratedGroup::delta_n(-1), std::invalid_argument);
}

TEST_CASE("normalization certificates for the mutation") {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    for (const char* gen : {"s", "t"}) {
        ExtendedIsometry target =
            evaluate_registry_word(std::string("m1*") + gen + "*m1^-1");
        auto w = express(target, delta0, 10);
        CAPTURE(gen);
        REQUIRE(w.has_value());
        CHECK(w->evaluate(delta0) == target);
    }
}
