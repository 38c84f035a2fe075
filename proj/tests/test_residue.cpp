#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kleinian/registry.hpp"
#include "kleinian/residue.hpp"

using namespace kleinian;

namespace {

FieldElem fe(long a, long b, long c, long d) {
    return FieldElem(Rational(a), Rational(b), Rational(c), Rational(d));
}

}  // namespace

TEST_CASE("scalar reduction sends i to 2") {
    CHECK(reduce_scalar(fe(1, 0, -1, 0)) == 4);  // 1 - i -> 1 - 2 = -1
    CHECK(reduce_scalar(fe(5, 0, 0, 0)) == 0);
    CHECK(reduce_scalar(fe(0, 0, 1, 0)) == 2);
    CHECK(reduce_scalar(fe(-7, 0, 3, 0)) == 4);  // 3 + 2*3 = 9 = 4
    CHECK_THROWS_AS(reduce_scalar(FieldElem::i_sqrt2()), NotGaussianInteger);
    CHECK_THROWS_AS(reduce_scalar(FieldElem::rational(1, 2)), NotGaussianInteger);
    CHECK_THROWS_AS(reduce_scalar(fe(1, 0, 0, 0), 4), std::invalid_argument);
}

TEST_CASE("PSL2(F5) canonicalization identifies M and -M") {
    CHECK(PSL2F5(4, 0, 2, 4) == PSL2F5(1, 0, 3, 1));
    CHECK(PSL2F5(-1, 0, 0, -1).is_identity());
    CHECK_THROWS_AS(PSL2F5(2, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("matrix reduction of the named matrices") {
    const Registry& reg = registry();
    CHECK(reduce_matrix(reg.mat("t")) == PSL2F5(1, 0, 3, 1));
    CHECK(reduce_matrix(reg.mat("p2")).is_identity());
    CHECK(reduce_matrix(reg.mat("p1")) == PSL2F5(1, 0, 1, 1));
    CHECK(reduce_matrix(reg.mat("p3")) == reduce_matrix(reg.mat("p1")));
    CHECK_THROWS_AS(reduce_matrix(reg.mat("g")), NotGaussianInteger);
}

TEST_CASE("image orders") {
    const Registry& reg = registry();
    CHECK(image_order({reg.mat("f0"), reg.mat("b0"), reg.mat("a0")}) == 60);
    CHECK(image_order({reg.mat("s"), reg.mat("t")}) == 5);
    CHECK(image_order({reg.mat("p1"), reg.mat("p2"), reg.mat("p3")}) == 5);
    CHECK(psl2f5_order() == 60);
}

TEST_CASE("kernel membership") {
    const Registry& reg = registry();
    CHECK(kernel_contains(reg.mat("p2")));
    CHECK(kernel_contains(reg.mat("p4")));
    CHECK(!kernel_contains(reg.mat("p1")));
    CHECK(!kernel_contains(reg.mat("p3")));
    CHECK(kernel_contains(ProjectiveMatrix()));
}

TEST_CASE("reduction is a homomorphism on random words") {
    const Registry& reg = registry();
    const ProjectiveMatrix gens[3] = {reg.mat("a0"), reg.mat("b0"), reg.mat("f0")};
    std::mt19937 rng(2357);
    std::uniform_int_distribution<int> len(1, 10), pick(0, 2), sgn(0, 1);
    auto random_word = [&] {
        ProjectiveMatrix acc;
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            const ProjectiveMatrix& g = gens[pick(rng)];
            acc = acc * (sgn(rng) ? g : g.inverse());
        }
        return acc;
    };
    for (int k = 0; k < 500; ++k) {
        ProjectiveMatrix x = random_word(), y = random_word();
        REQUIRE(reduce_matrix(x * y) == reduce_matrix(x) * reduce_matrix(y));
    }
}

TEST_CASE("theta agrees with phi on short boundary words") {
    CHECK(check_theta_equals_phi(0).equal);
    ThetaPhiResult r4 = check_theta_equals_phi(4);
    CHECK(r4.equal);
    CHECK(r4.witness.empty());
}

TEST_CASE("the conjugate prime is pinned by the parabolic image, not by p-words") {
    // Words over p1, p2, p3 have integer matrices, and integer reduction is
    // identical for both primes of 5; the brute enumeration therefore finds
    // no witness even for i -> 3.
    CHECK(check_theta_equals_phi(4, 3).equal);
    // What does separate the primes: under i -> 3 the generators of the
    // S-side group no longer reduce into the order-5 parabolic subgroup.
    const Registry& reg = registry();
    CHECK(image_order({reg.mat("s"), reg.mat("t")}, 3) == 60);
    CHECK(reduce_matrix(reg.mat("t"), 3) != reduce_matrix(reg.mat("t"), 2));
}
