#include "kleinian/numfield.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace kleinian {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Basis multiplication table for (1, r2, i, i*r2):
// entry [j][k] = (coefficient, basis index) of basis_j * basis_k.
struct BasisProd {
    int coeff;
    int index;
};
constexpr BasisProd kBasisTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {2, 0}, {1, 3}, {2, 2}},
    {{1, 2}, {1, 3}, {-1, 0}, {-1, 1}},
    {{1, 3}, {2, 2}, {-1, 1}, {-2, 0}},
};

bool is_integral(const Rational& r) { return denominator(r) == 1; }

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

}  // namespace

const Rational& FieldElem::coord(int k) const {
    switch (k) {
        case 0: return a_;
        case 1: return b_;
        case 2: return c_;
        default: return d_;
    }
}

bool FieldElem::is_gaussian_integer() const {
    return b_.is_zero() && d_.is_zero() && is_integral(a_) && is_integral(c_);
}

bool FieldElem::is_rational_integer() const {
    return b_.is_zero() && c_.is_zero() && d_.is_zero() && is_integral(a_);
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    std::array<const Rational*, 4> xs{&x.a_, &x.b_, &x.c_, &x.d_};
    std::array<const Rational*, 4> ys{&y.a_, &y.b_, &y.c_, &y.d_};
    std::array<Rational, 4> out{};
    for (int j = 0; j < 4; ++j) {
        if (xs[j]->is_zero()) continue;
        for (int k = 0; k < 4; ++k) {
            if (ys[k]->is_zero()) continue;
            const BasisProd& p = kBasisTable[j][k];
            Rational term = (*xs[j]) * (*ys[k]);
            if (p.coeff != 1) term *= p.coeff;
            out[p.index] += term;
        }
    }
    return FieldElem(std::move(out[0]), std::move(out[1]), std::move(out[2]), std::move(out[3]));
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    // 1/x = conj(x) * twist(x*conj(x)) / Norm, where x*conj(x) lies in
    // Q(sqrt2) and Norm = (x*conj(x)) * twist(x*conj(x)) is a positive rational.
    FieldElem real_norm = (*this) * conj();            // in Q(sqrt2)
    FieldElem full_norm = real_norm * real_norm.twist_sqrt2();  // rational
    const Rational& n = full_norm.a();
    FieldElem num = conj() * real_norm.twist_sqrt2();
    Rational inv_n = Rational(denominator(n), numerator(n));
    return FieldElem(num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.d_ * inv_n);
}

bool FieldElem::is_positive_normal() const {
    for (int k = 0; k < 4; ++k) {
        const Rational& r = coord(k);
        if (!r.is_zero()) return r > 0;
    }
    return false;  // zero is not positive-normal
}

int FieldElem::sign_real() const {
    if (!is_real()) throw std::logic_error("sign_real on a non-real field element");
    if (a_.is_zero() && b_.is_zero()) return 0;
    int sa = a_.is_zero() ? 0 : (a_ > 0 ? 1 : -1);
    int sb = b_.is_zero() ? 0 : (b_ > 0 ? 1 : -1);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    // Mixed signs: a + b*sqrt2 has the sign of a iff a^2 > 2 b^2.
    Rational a2 = a_ * a_;
    Rational b2 = 2 * b_ * b_;
    if (a2 == b2) return 0;
    return (a2 > b2) ? sa : sb;
}

std::string FieldElem::key() const {
    std::ostringstream os;
    os << rational_str(a_) << '|' << rational_str(b_) << '|' << rational_str(c_) << '|'
       << rational_str(d_);
    return os.str();
}

std::string FieldElem::str() const {
    static const char* kUnits[4] = {"", "r2", "i", "i*r2"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const Rational& r = coord(k);
        if (r.is_zero()) continue;
        Rational mag = r < 0 ? Rational(-r) : r;
        if (first) {
            if (r < 0) os << "-";
            first = false;
        } else {
            os << (r < 0 ? " - " : " + ");
        }
        bool unit_only = (k != 0) && mag == 1;
        if (!unit_only) os << rational_str(mag);
        if (k != 0) {
            if (!unit_only) os << "*";
            os << kUnits[k];
        }
    }
    if (first) return "0";
    return os.str();
}

namespace {

// One signed term of the grammar: rational coefficient times 1, r2, i or i*r2.
struct Term {
    Rational coeff;
    bool has_i = false;
    bool has_r2 = false;
};

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    BigInt integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos) + " in '" + s + "'");
        return BigInt(s.substr(start, pos - start));
    }
};

Term parse_term(Lexer& lx) {
    Term t;
    t.coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        BigInt num = lx.integer();
        BigInt den = 1;
        if (lx.eat('/')) den = lx.integer();
        if (den.is_zero()) throw ParseError("zero denominator in '" + lx.s + "'");
        t.coeff = Rational(num, den);
        saw_coeff = true;
    }
    bool expect_unit = !saw_coeff;
    while (true) {
        if (saw_coeff || !expect_unit) {
            if (!lx.eat('*')) break;
        }
        expect_unit = false;
        lx.skip_ws();
        if (lx.s.compare(lx.pos, 2, "r2") == 0) {
            if (t.has_r2) throw ParseError("repeated r2 factor in '" + lx.s + "'");
            t.has_r2 = true;
            lx.pos += 2;
        } else if (lx.pos < lx.s.size() && lx.s[lx.pos] == 'i') {
            if (t.has_i) throw ParseError("repeated i factor in '" + lx.s + "'");
            t.has_i = true;
            lx.pos += 1;
        } else if (saw_coeff) {
            throw ParseError("expected r2 or i at position " + std::to_string(lx.pos) + " in '" + lx.s + "'");
        } else {
            break;
        }
        saw_coeff = true;  // further factors need '*'
    }
    if (!saw_coeff) throw ParseError("empty term at position " + std::to_string(lx.pos) + " in '" + lx.s + "'");
    return t;
}

}  // namespace

FieldElem parse_field(const std::string& text) {
    Lexer lx{text};
    FieldElem acc;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('-')) {
            sign = -1;
        } else if (lx.eat('+')) {
            if (first) throw ParseError("leading '+' in '" + text + "'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos) + " in '" + text + "'");
        }
        Term t = parse_term(lx);
        Rational c = sign < 0 ? Rational(-t.coeff) : t.coeff;
        int idx = (t.has_i ? 2 : 0) + (t.has_r2 ? 1 : 0);
        FieldElem unit = idx == 0   ? FieldElem::one()
                         : idx == 1 ? FieldElem::sqrt2()
                         : idx == 2 ? FieldElem::i()
                                    : FieldElem::i_sqrt2();
        acc = acc + FieldElem::rat(c) * unit;
        first = false;
    }
    if (first) throw ParseError("empty field-element literal");
    return acc;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q.is_zero()) return Rational(0);
    BigInt n = numerator(q), d = denominator(q);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

namespace {

// Real-subfield element a + b*sqrt2 as a coordinate pair.
struct RealQuad {
    Rational a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    RealQuad operator+(const RealQuad& o) const { return {a + o.a, b + o.b}; }
    RealQuad operator-(const RealQuad& o) const { return {a - o.a, b - o.b}; }
    RealQuad operator*(const RealQuad& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    RealQuad neg() const { return {-a, -b}; }
    RealQuad half() const { return {a / 2, b / 2}; }
    RealQuad inv() const {
        Rational n = a * a - 2 * b * b;  // nonzero for nonzero elements
        return {a / n, -b / n};
    }
};

std::optional<RealQuad> sqrt_real_quad(const RealQuad& u) {
    if (u.is_zero()) return RealQuad{0, 0};
    if (u.b.is_zero()) {
        if (auto p = sqrt_rational(u.a)) return RealQuad{*p, 0};       // rational root
        if (auto q = sqrt_rational(u.a / 2)) return RealQuad{0, *q};   // q*sqrt2 root
        return std::nullopt;
    }
    // (p + q*sqrt2)^2 = u with q = b/(2p) forces p^2 = (a +- sqrt(a^2 - 2 b^2))/2.
    Rational disc = u.a * u.a - 2 * u.b * u.b;
    auto m = sqrt_rational(disc);
    if (!m) return std::nullopt;
    for (int sgn : {1, -1}) {
        Rational p2 = (u.a + sgn * *m) / 2;
        if (auto p = sqrt_rational(p2)) {
            if (p->is_zero()) continue;
            Rational q = u.b / (2 * *p);
            RealQuad root{*p, q};
            if ((root * root).a == u.a && (root * root).b == u.b) return root;
        }
    }
    return std::nullopt;
}

FieldElem from_parts(const RealQuad& re, const RealQuad& im) {
    return FieldElem(re.a, re.b, im.a, im.b);
}

}  // namespace

std::optional<FieldElem> sqrt_in_field(const FieldElem& x) {
    if (x.is_zero()) return FieldElem::zero();
    RealQuad u{x.a(), x.b()}, v{x.c(), x.d()};
    std::optional<FieldElem> root;
    if (v.is_zero()) {
        if (auto w = sqrt_real_quad(u)) {
            root = from_parts(*w, RealQuad{0, 0});
        } else if (auto z = sqrt_real_quad(u.neg())) {
            root = from_parts(RealQuad{0, 0}, *z);  // (z*i)^2 = -z^2 = u
        }
    } else {
        // x = u + v i, y = w + z i: w^2 - z^2 = u and 2 w z = v, so
        // (w^2 + z^2)^2 = u^2 + v^2 must be a square in Q(sqrt2).
        auto m = sqrt_real_quad(u * u + v * v);
        if (m) {
            for (int sgn : {1, -1}) {
                RealQuad w2 = (sgn > 0 ? u + *m : u - *m).half();
                if (auto w = sqrt_real_quad(w2)) {
                    if (w->is_zero()) continue;
                    RealQuad z = v * (RealQuad{2, 0} * *w).inv();
                    root = from_parts(*w, z);
                    break;
                }
            }
        }
    }
    if (!root) return std::nullopt;
    if (*root * *root != x) return std::nullopt;  // guards casework slips
    return root->is_positive_normal() ? *root : -*root;
}

std::complex<double> embed(const FieldElem& x) {
    static const HighFloat kSqrt2 = boost::multiprecision::sqrt(HighFloat(2));
    HighFloat re = HighFloat(x.a()) + HighFloat(x.b()) * kSqrt2;
    HighFloat im = HighFloat(x.c()) + HighFloat(x.d()) * kSqrt2;
    return {re.convert_to<double>(), im.convert_to<double>()};
}

}  // namespace kleinian
