#pragma once

// Exact arithmetic in the degree-4 field Q(i, sqrt(2)), with rational
// coordinates on the ordered basis (1, r2, i, i*r2) where r2 = sqrt(2).
// Equality is exact coordinate equality throughout; no tolerances.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kleinian {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(i,sqrt2)") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// a + b*r2 + c*i + d*i*r2
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static FieldElem integer(long n) { return FieldElem(Rational(n), 0, 0, 0); }
    static FieldElem rational(long num, long den) { return FieldElem(Rational(num, den), 0, 0, 0); }
    static FieldElem rat(Rational r) { return FieldElem(std::move(r), 0, 0, 0); }
    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return integer(1); }
    static FieldElem sqrt2() { return FieldElem(0, 1, 0, 0); }
    static FieldElem i() { return FieldElem(0, 0, 1, 0); }
    static FieldElem i_sqrt2() { return FieldElem(0, 0, 0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    const Rational& coord(int k) const;

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_one() const { return a_ == 1 && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    // b = d = 0 and a, c integers
    bool is_gaussian_integer() const;
    // b = c = d = 0 and a an integer
    bool is_rational_integer() const;
    // c = d = 0, i.e. the element lies in the real subfield Q(sqrt2)
    bool is_real() const { return c_.is_zero() && d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && is_real(); }

    // Real and imaginary part as elements of the real subfield Q(sqrt2).
    FieldElem real_part() const { return FieldElem(a_, b_, 0, 0); }
    FieldElem imag_part() const { return FieldElem(c_, d_, 0, 0); }

    FieldElem conj() const { return FieldElem(a_, b_, -c_, -d_); }
    // Galois twist sqrt2 -> -sqrt2 (fixes i)
    FieldElem twist_sqrt2() const { return FieldElem(a_, -b_, c_, -d_); }
    FieldElem inv() const;

    // True if the first nonzero coordinate in basis order is positive.
    // Used as the canonical representative rule for +-x ambiguities.
    bool is_positive_normal() const;

    // Exact sign of an element of the real subfield; requires is_real().
    int sign_real() const;

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        return FieldElem(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
    }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
        return FieldElem(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
    }
    FieldElem operator-() const { return FieldElem(-a_, -b_, -c_, -d_); }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inv(); }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    // Compact unambiguous form used for hashing ("a|b|c|d", rationals as n/d).
    std::string key() const;
    // Human-readable rendering in the grammar "a + b*r2 + c*i + d*i*r2".
    std::string str() const;

private:
    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

// Square root in the field if one exists, canonicalized to the
// positive-normal representative; NotASquare is the empty optional.
std::optional<FieldElem> sqrt_in_field(const FieldElem& x);

// Floating approximation for display only (relative error < 2^-48).
std::complex<double> embed(const FieldElem& x);

// Parses the same grammar str() produces (signed terms over {1, r2, i, i*r2}
// with rational coefficients "p" or "p/q"). Throws ParseError.
FieldElem parse_field(const std::string& text);

// Exact square test for a rational, independent of sqrt_in_field's casework.
std::optional<Rational> sqrt_rational(const Rational& q);

}  // namespace kleinian
