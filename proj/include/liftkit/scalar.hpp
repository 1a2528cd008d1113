#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace liftkit {

/// Element of the field Q(sqrt(2)), stored as r + s*sqrt(2) with
/// arbitrary-precision rational components kept in canonical lowest terms.
/// Equality is structural; all arithmetic is exact.
class Scalar {
public:
    Scalar() : r_(0), s_(0) {}
    Scalar(long n) : r_(n), s_(0) {}  // NOLINT: implicit by design
    Scalar(const mpq_class& r) : r_(r), s_(0) { canon(); }
    Scalar(mpq_class r, mpq_class s) : r_(std::move(r)), s_(std::move(s)) { canon(); }

    static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar fraction(long num, long den);

    const mpq_class& rat() const { return r_; }
    const mpq_class& irr() const { return s_; }

    bool is_zero() const { return r_ == 0 && s_ == 0; }
    bool is_one() const { return r_ == 1 && s_ == 0; }
    bool is_rational() const { return s_ == 0; }
    /// True iff the value lies in the ring D of dyadic rationals k*2^n.
    bool is_dyadic() const;

    Scalar operator-() const { return Scalar(mpq_class(-r_), mpq_class(-s_)); }
    Scalar inverse() const;  // throws PreconditionError on zero
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Whitespace-free textual form: "p", "p/q", or "p/q+r/s*w2" with w2 = sqrt(2).
    std::string str() const;
    static Scalar parse(const std::string& text);  // throws ParseError

private:
    mpq_class r_, s_;
    void canon() {
        r_.canonicalize();
        s_.canonicalize();
    }
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace liftkit
