#pragma once

#include <array>
#include <utility>

#include "liftkit/laurent.hpp"

namespace liftkit {

/// A two-channel scalar filter pair {H0(z), H1(z)}.
struct FilterPair {
    LaurentPoly h0;  // lowpass
    LaurentPoly h1;  // highpass
    friend bool operator==(const FilterPair&, const FilterPair&) = default;
};

/// 2x2 matrix of Laurent polynomials: a polyphase transfer matrix.
class PolyMatrix {
public:
    PolyMatrix() = default;  // zero matrix
    PolyMatrix(LaurentPoly h00, LaurentPoly h01, LaurentPoly h10, LaurentPoly h11)
        : e_{std::move(h00), std::move(h01), std::move(h10), std::move(h11)} {}

    static PolyMatrix identity();
    static PolyMatrix haar();         // [[1/2,1/2],[-1,1]]
    static PolyMatrix lazy_causal();  // diag(1, z^-1)
    static PolyMatrix diagonal(const LaurentPoly& d0, const LaurentPoly& d1);

    const LaurentPoly& at(int i, int j) const { return e_[i * 2 + j]; }
    LaurentPoly& at(int i, int j) { return e_[i * 2 + j]; }
    const LaurentPoly& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    std::string str() const;

private:
    std::array<LaurentPoly, 4> e_;
};

LaurentPoly det(const PolyMatrix& m);
bool is_unimodular(const PolyMatrix& m);   // det == 1
bool is_fir_pr(const PolyMatrix& m);       // det is a nonzero monomial
PolyMatrix inverse(const PolyMatrix& m);   // throws unless is_fir_pr

/// Tight interval covering the supports of all four entries.  Throws on the
/// zero matrix.
std::pair<int, int> matrix_support(const PolyMatrix& m);
int matrix_order(const PolyMatrix& m);

PolyMatrix time_reverse(const PolyMatrix& m);  // entrywise z |-> z^{-1}

/// WS intertwining relation H(1/z) = Lambda(z) H(z) Lambda(1/z), Lambda = diag(1, z^-1).
bool is_ws(const PolyMatrix& m);
/// HS relation H(1/z) = L H(z) J with L = diag(1,-1), J = antidiag(1,1).
bool is_hs(const PolyMatrix& m);

/// Polyphase-with-advance decomposition F(z) = F0(z^2) + z F1(z^2), row i
/// holding the polyphase components of filter i.
PolyMatrix from_filters(const FilterPair& fp);
FilterPair to_filters(const PolyMatrix& m);

}  // namespace liftkit
