#include "liftkit/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "liftkit/errors.hpp"

namespace liftkit {

LaurentPoly::LaurentPoly(int lo, std::vector<Scalar> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int n) {
    LaurentPoly f;
    if (!c.is_zero()) {
        f.lo_ = n;
        f.c_ = {c};
    }
    return f;
}

void LaurentPoly::normalize() {
    size_t head = 0;
    while (head < c_.size() && c_[head].is_zero()) ++head;
    size_t tail = c_.size();
    while (tail > head && c_[tail - 1].is_zero()) --tail;
    if (head == tail) {
        c_.clear();
        lo_ = 0;
        return;
    }
    lo_ += static_cast<int>(head);
    c_ = std::vector<Scalar>(c_.begin() + head, c_.begin() + tail);
}

std::pair<int, int> LaurentPoly::support_interval() const {
    if (is_zero()) throw PreconditionError("empty support");
    return {lo_, lo_ + static_cast<int>(c_.size()) - 1};
}

int LaurentPoly::order() const {
    if (is_zero()) throw PreconditionError("order undefined for zero");
    return static_cast<int>(c_.size()) - 1;
}

Scalar LaurentPoly::coeff(int n) const {
    if (n < lo_ || n >= lo_ + static_cast<int>(c_.size())) return Scalar(0);
    return c_[n - lo_];
}

LaurentPoly LaurentPoly::time_reverse() const {
    if (is_zero()) return {};
    std::vector<Scalar> rev(c_.rbegin(), c_.rend());
    int hi = lo_ + static_cast<int>(c_.size()) - 1;
    return LaurentPoly(-hi, std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return {};
    LaurentPoly f = *this;
    f.lo_ += k;
    return f;
}

Scalar LaurentPoly::evaluate(const Scalar& z0) const {
    if (z0.is_zero()) throw PreconditionError("cannot evaluate at z = 0");
    Scalar acc(0);
    for (size_t i = 0; i < c_.size(); ++i)
        acc += c_[i] * z0.pow(-(lo_ + static_cast<long>(i)));
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f = *this;
    for (auto& c : f.c_) c = -c;
    return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this = *this - o;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.lo_ + static_cast<int>(a.c_.size()), b.lo_ + static_cast<int>(b.c_.size()));
    std::vector<Scalar> c(hi - lo, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[a.lo_ - lo + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[b.lo_ - lo + i] += b.c_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& f) {
    return LaurentPoly::monomial(c, 0) * f;
}

bool has_symmetry(const LaurentPoly& f, SymmetryKind kind) {
    LaurentPoly tr = f.time_reverse();
    switch (kind) {
        case SymmetryKind::HSPlus:
            return tr == f.shifted(-1);  // S(1/z) = z S(z)
        case SymmetryKind::HSMinus:
            return tr == f.shifted(1);  // S(1/z) = z^{-1} S(z)
        case SymmetryKind::WA:
            return tr == -f;
    }
    return false;
}

bool is_dyadic(const LaurentPoly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                       [](const Scalar& c) { return c.is_dyadic(); });
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (!first && cs[0] != '-') os << "+";
        first = false;
        int n = lo_ + static_cast<int>(i);
        if (n == 0) {
            os << cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                os << "-";
            else
                os << cs << "*";
            os << "z^" << -n;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

}  // namespace liftkit
