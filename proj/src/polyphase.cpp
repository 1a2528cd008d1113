#include "liftkit/polyphase.hpp"

#include <algorithm>
#include <sstream>

#include "liftkit/errors.hpp"

namespace liftkit {

PolyMatrix PolyMatrix::identity() {
    return {LaurentPoly::one(), {}, {}, LaurentPoly::one()};
}

PolyMatrix PolyMatrix::haar() {
    Scalar half = Scalar::fraction(1, 2);
    return {LaurentPoly(half), LaurentPoly(half), LaurentPoly(Scalar(-1)), LaurentPoly::one()};
}

PolyMatrix PolyMatrix::lazy_causal() {
    return diagonal(LaurentPoly::one(), LaurentPoly::monomial(Scalar(1), 1));
}

PolyMatrix PolyMatrix::diagonal(const LaurentPoly& d0, const LaurentPoly& d1) {
    return {d0, {}, {}, d1};
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& f) { return f.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

LaurentPoly det(const PolyMatrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

bool is_unimodular(const PolyMatrix& m) { return det(m) == LaurentPoly::one(); }

bool is_fir_pr(const PolyMatrix& m) { return det(m).is_monomial(); }

PolyMatrix inverse(const PolyMatrix& m) {
    LaurentPoly d = det(m);
    if (!d.is_monomial()) throw PreconditionError("not invertible over Laurent polynomials");
    // adjugate divided by the monomial determinant
    auto [n, n_] = d.support_interval();
    LaurentPoly dinv = LaurentPoly::monomial(d.coeff(n).inverse(), -n);
    return {dinv * m(1, 1), dinv * -m(0, 1), dinv * -m(1, 0), dinv * m(0, 0)};
}

std::pair<int, int> matrix_support(const PolyMatrix& m) {
    bool any = false;
    int lo = 0, hi = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (m(i, j).is_zero()) continue;
            auto [a, b] = m(i, j).support_interval();
            if (!any) {
                lo = a;
                hi = b;
                any = true;
            } else {
                lo = std::min(lo, a);
                hi = std::max(hi, b);
            }
        }
    if (!any) throw PreconditionError("empty support");
    return {lo, hi};
}

int matrix_order(const PolyMatrix& m) {
    auto [c, d] = matrix_support(m);
    return d - c;
}

PolyMatrix time_reverse(const PolyMatrix& m) {
    return {m(0, 0).time_reverse(), m(0, 1).time_reverse(), m(1, 0).time_reverse(),
            m(1, 1).time_reverse()};
}

bool is_ws(const PolyMatrix& m) {
    // Lambda(z) H(z) Lambda(1/z) = [[h00, z h01],[z^-1 h10, h11]]
    PolyMatrix rhs{m(0, 0), m(0, 1).shifted(-1), m(1, 0).shifted(1), m(1, 1)};
    return time_reverse(m) == rhs;
}

bool is_hs(const PolyMatrix& m) {
    // L H(z) J = [[h01, h00],[-h11, -h10]]
    PolyMatrix rhs{m(0, 1), m(0, 0), -m(1, 1), -m(1, 0)};
    return time_reverse(m) == rhs;
}

namespace {

// Even/odd-with-advance split: f0(m) = f(2m), f1(m) = f(2m-1).
std::pair<LaurentPoly, LaurentPoly> polyphase_split(const LaurentPoly& f) {
    if (f.is_zero()) return {{}, {}};
    auto [a, b] = f.support_interval();
    LaurentPoly f0, f1;
    for (int n = a; n <= b; ++n) {
        Scalar c = f.coeff(n);
        if (c.is_zero()) continue;
        if (n % 2 == 0)
            f0 += LaurentPoly::monomial(c, n / 2);
        else
            f1 += LaurentPoly::monomial(c, (n + 1) / 2);
    }
    return {f0, f1};
}

LaurentPoly polyphase_join(const LaurentPoly& f0, const LaurentPoly& f1) {
    LaurentPoly f;
    if (!f0.is_zero()) {
        auto [a, b] = f0.support_interval();
        for (int m = a; m <= b; ++m) f += LaurentPoly::monomial(f0.coeff(m), 2 * m);
    }
    if (!f1.is_zero()) {
        auto [a, b] = f1.support_interval();
        for (int m = a; m <= b; ++m) f += LaurentPoly::monomial(f1.coeff(m), 2 * m - 1);
    }
    return f;
}

}  // namespace

PolyMatrix from_filters(const FilterPair& fp) {
    auto [h00, h01] = polyphase_split(fp.h0);
    auto [h10, h11] = polyphase_split(fp.h1);
    return {h00, h01, h10, h11};
}

FilterPair to_filters(const PolyMatrix& m) {
    return {polyphase_join(m(0, 0), m(0, 1)), polyphase_join(m(1, 0), m(1, 1))};
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[[" << e_[0] << ", " << e_[1] << "], [" << e_[2] << ", " << e_[3] << "]]";
    return os.str();
}

}  // namespace liftkit
