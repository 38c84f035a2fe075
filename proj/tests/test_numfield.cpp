#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kleinian/numfield.hpp"

using namespace kleinian;

namespace {

FieldElem fe(long a, long b, long c, long d) {
    return FieldElem(Rational(a), Rational(b), Rational(c), Rational(d));
}

FieldElem random_elem(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    while (true) {
        FieldElem x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                    Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (!nonzero || !x.is_zero()) return x;
    }
}

// For rational x the coordinate equations of y^2 = x force y to be rational,
// a rational multiple of r2, of i, or of i*r2; so x is a square in the field
// exactly when x, x/2, -x or -x/2 is a rational square.
bool rational_square_oracle(const Rational& x) {
    return sqrt_rational(x) || sqrt_rational(x / 2) || sqrt_rational(-x) ||
           sqrt_rational(Rational(-x) / 2);
}

}  // namespace

TEST_CASE("addition matches hand-computed coordinates") {
    CHECK(fe(1, 0, 1, 0) + fe(1, 0, -1, 0) == fe(2, 0, 0, 0));  // (1+i) + (1-i)
    FieldElem x = fe(3, -2, 5, 7);
    CHECK(FieldElem::zero() + x == x);
    CHECK(fe(-1, 0, 0, 1) + fe(-2, 0, 0, 4) == fe(-3, 0, 0, 5));
}

TEST_CASE("multiplication expands on the basis") {
    CHECK(FieldElem::i_sqrt2() * FieldElem::i_sqrt2() == fe(-2, 0, 0, 0));
    CHECK(fe(-1, 0, 0, 1) * fe(3, 0, 0, -1) == fe(-1, 0, 0, 4));
    CHECK(fe(0, 0, 0, 2) * fe(0, 0, 0, -3) == fe(12, 0, 0, 0));
    CHECK(FieldElem::sqrt2() * FieldElem::i() == FieldElem::i_sqrt2());
}

TEST_CASE("inversion") {
    FieldElem one_minus_i = fe(1, 0, -1, 0);
    CHECK(one_minus_i.inv() == FieldElem(Rational(1, 2), 0, Rational(1, 2), 0));
    CHECK(FieldElem::sqrt2().inv() == FieldElem(0, Rational(1, 2), 0, 0));
    CHECK_THROWS_AS(FieldElem::zero().inv(), DivisionByZero);
}

TEST_CASE("conjugation negates the imaginary coordinates") {
    CHECK(fe(0, 0, 2, 0).conj() == fe(0, 0, -2, 0));
    CHECK(fe(-1, 0, 0, 1).conj() == fe(-1, 0, 0, -1));
    FieldElem x = fe(3, -1, 4, 2);
    CHECK(x.conj().conj() == x);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (int k = 0; k < 1000; ++k) {
        FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        REQUIRE(x + y == y + x);
    }
}

TEST_CASE("multiplicative inverses on random nonzero elements") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        FieldElem x = random_elem(rng, true);
        REQUIRE(x * x.inv() == FieldElem::one());
    }
}

TEST_CASE("conjugation is a ring involution") {
    std::mt19937 rng(13);
    for (int k = 0; k < 300; ++k) {
        FieldElem x = random_elem(rng), y = random_elem(rng);
        REQUIRE((x * y).conj() == x.conj() * y.conj());
        REQUIRE((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("square roots of the basic constants") {
    CHECK(sqrt_in_field(fe(-1, 0, 0, 0)) == FieldElem::i());
    CHECK(sqrt_in_field(fe(2, 0, 0, 0)) == FieldElem::sqrt2());
    CHECK(sqrt_in_field(fe(-2, 0, 0, 0)) == FieldElem::i_sqrt2());
    CHECK(sqrt_in_field(FieldElem::zero()) == FieldElem::zero());
}

TEST_CASE("3 is not a square, matching the rational-case oracle") {
    CHECK(!rational_square_oracle(Rational(3)));
    CHECK(!sqrt_in_field(fe(3, 0, 0, 0)).has_value());
    // Oracle agreement on a sweep of small rationals.
    for (long num = -12; num <= 12; ++num) {
        for (long den = 1; den <= 4; ++den) {
            Rational q(num, den);
            CAPTURE(num);
            CAPTURE(den);
            REQUIRE(rational_square_oracle(q) == sqrt_in_field(FieldElem::rat(q)).has_value());
        }
    }
}

TEST_CASE("sqrt of a square returns the positive-normal root") {
    std::mt19937 rng(17);
    for (int k = 0; k < 300; ++k) {
        FieldElem y = random_elem(rng, true);
        auto root = sqrt_in_field(y * y);
        REQUIRE(root.has_value());
        REQUIRE((*root == y || *root == -y));
        REQUIRE(root->is_positive_normal());
    }
}

TEST_CASE("exact sign of real-subfield elements") {
    CHECK(fe(1, -1, 0, 0).sign_real() == -1);   // 1 - r2 < 0
    CHECK(fe(3, -2, 0, 0).sign_real() == 1);    // 3 - 2 r2 > 0
    CHECK(fe(-3, 2, 0, 0).sign_real() == -1);
    CHECK(fe(0, 0, 0, 0).sign_real() == 0);
    CHECK(fe(0, 5, 0, 0).sign_real() == 1);
    CHECK_THROWS(fe(0, 0, 1, 0).sign_real());
}

TEST_CASE("embedding accuracy") {
    auto v = embed(FieldElem::i_sqrt2());
    CHECK(v.real() == doctest::Approx(0.0));
    CHECK(v.imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(embed(FieldElem::rational(1, 3)).real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
    // Catastrophic-cancellation case: 665857 - 470832*r2 = 1/(665857 + 470832*r2).
    FieldElem tiny = fe(665857, -470832, 0, 0);
    double product = embed(tiny).real() * (665857.0 + 470832.0 * std::sqrt(2.0));
    CHECK(std::abs(product - 1.0) < 1e-12);
}

TEST_CASE("rendering and parsing round-trip") {
    std::mt19937 rng(19);
    for (int k = 0; k < 200; ++k) {
        FieldElem x = random_elem(rng);
        REQUIRE(parse_field(x.str()) == x);
    }
    CHECK(parse_field("-3 + 5*i*r2") == fe(-3, 0, 0, 5));
    CHECK(parse_field("1/2") == FieldElem::rational(1, 2));
    CHECK(parse_field("i*r2") == FieldElem::i_sqrt2());
    CHECK(parse_field("r2*i") == FieldElem::i_sqrt2());
    CHECK(parse_field("-i") == -FieldElem::i());
    CHECK(parse_field("2*i - 1") == fe(-1, 0, 2, 0));
    CHECK(fe(0, 0, 0, 0).str() == "0");
    CHECK_THROWS_AS(parse_field(""), ParseError);
    CHECK_THROWS_AS(parse_field("1 +"), ParseError);
    CHECK_THROWS_AS(parse_field("q2"), ParseError);
    CHECK_THROWS_AS(parse_field("1/0"), ParseError);
}

TEST_CASE("classification predicates") {
    CHECK(fe(3, 0, 2, 0).is_gaussian_integer());
    CHECK(!fe(3, 1, 2, 0).is_gaussian_integer());
    CHECK(!FieldElem(Rational(1, 2), 0, 0, 0).is_gaussian_integer());
    CHECK(fe(-7, 0, 0, 0).is_rational_integer());
    CHECK(!fe(0, 0, 1, 0).is_rational_integer());
    CHECK(fe(1, 2, 0, 0).is_real());
    CHECK(!fe(1, 2, 0, 1).is_real());
}
