#include "liftkit/scalar.hpp"

#include <ostream>

#include "liftkit/errors.hpp"

namespace liftkit {

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw PreconditionError("scalar division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_dyadic() const {
    if (s_ != 0) return false;
    // Canonical denominator is positive; dyadic iff it is a power of two.
    return mpz_popcount(r_.get_den().get_mpz_t()) == 1;
}

Scalar Scalar::inverse() const {
    // 1/(r + s*sqrt2) = (r - s*sqrt2)/(r^2 - 2 s^2); the norm vanishes only at 0
    // since sqrt(2) is irrational.
    if (is_zero()) throw PreconditionError("scalar division by zero");
    mpq_class norm = r_ * r_ - 2 * s_ * s_;
    return Scalar(r_ / norm, -s_ / norm);
}

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    r_ += o.r_;
    s_ += o.s_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (r + s w)(r' + s' w) with w^2 = 2.
    mpq_class nr = r_ * o.r_ + 2 * s_ * o.s_;
    mpq_class ns = r_ * o.s_ + s_ * o.r_;
    r_ = nr;
    s_ = ns;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses a rational starting at pos; advances pos past it.
mpq_class parse_rat(const std::string& t, size_t& pos) {
    bool negative = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        negative = t[pos] == '-';
        ++pos;
    }
    size_t start = pos;  // mpq_class::set_str accepts '-' but not '+'
    size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected rational in scalar '" + t + "'");
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t den_start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == den_start) throw ParseError("expected denominator in scalar '" + t + "'");
    }
    mpq_class q;
    if (q.set_str(t.substr(start, pos - start), 10) != 0)
        throw ParseError("bad rational in scalar '" + t + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in scalar '" + t + "'");
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

}  // namespace

std::string Scalar::str() const {
    if (s_ == 0) return rat_str(r_);
    std::string w2part = rat_str(s_) + "*w2";
    if (r_ == 0) return w2part;
    if (s_ > 0) return rat_str(r_) + "+" + w2part;
    return rat_str(r_) + w2part;  // sign carried by the numerator
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    size_t pos = 0;
    mpq_class r(0), s(0);
    bool have_r = false, have_s = false;
    while (pos < text.size()) {
        mpq_class q = parse_rat(text, pos);
        bool w2 = false;
        if (pos + 2 < text.size() + 1 && text.compare(pos, 3, "*w2") == 0) {
            w2 = true;
            pos += 3;
        }
        if (w2) {
            if (have_s) throw ParseError("duplicate w2 term in scalar '" + text + "'");
            s = q;
            have_s = true;
        } else {
            if (have_r) throw ParseError("duplicate rational term in scalar '" + text + "'");
            r = q;
            have_r = true;
        }
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
            throw ParseError("trailing garbage in scalar '" + text + "'");
    }
    return Scalar(r, s);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace liftkit
