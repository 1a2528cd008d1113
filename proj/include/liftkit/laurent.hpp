#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftkit/scalar.hpp"

namespace liftkit {

/// Laurent polynomial F(z) = sum_n f(n) z^{-n} with finite support and
/// coefficients in Q(sqrt(2)).  Coefficients are stored for n in
/// [lo, lo+size-1]; the vector never begins or ends with a zero, and the zero
/// polynomial is the empty vector.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero polynomial
    LaurentPoly(const Scalar& c) { *this = monomial(c, 0); }  // NOLINT: implicit constant
    LaurentPoly(int lo, std::vector<Scalar> coeffs);

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(Scalar(1), 0); }
    /// c * z^{-n}
    static LaurentPoly monomial(const Scalar& c, int n);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
    bool is_monomial() const { return c_.size() == 1; }

    /// Tight support interval [a,b] in n-space.  Throws on the zero polynomial.
    std::pair<int, int> support_interval() const;
    int lo() const { return support_interval().first; }
    int hi() const { return support_interval().second; }
    /// b - a.  Throws on the zero polynomial.
    int order() const;

    Scalar coeff(int n) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    int offset() const { return lo_; }  // valid only for nonzero polynomials

    LaurentPoly time_reverse() const;      // z |-> z^{-1}
    LaurentPoly shifted(int k) const;      // multiply by z^{-k}
    Scalar evaluate(const Scalar& z0) const;  // throws on z0 = 0

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& f);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "1/2+1/2*z^-1".
    std::string str() const;

private:
    int lo_ = 0;
    std::vector<Scalar> c_;
    void normalize();
};

enum class SymmetryKind { HSPlus, HSMinus, WA };

/// Exact symmetry predicates: HSPlus S(1/z)=zS(z), HSMinus S(1/z)=S(z)/z,
/// WA S(1/z)=-S(z).  The zero polynomial satisfies all three.
bool has_symmetry(const LaurentPoly& f, SymmetryKind kind);

/// True iff every coefficient is a dyadic rational.
bool is_dyadic(const LaurentPoly& f);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace liftkit
