#pragma once

#include <string>
#include <vector>

#include "liftkit/lifting.hpp"

namespace liftkit::fixtures {

/// Two-step lifting of the Haar polyphase matrix (gain 1).
Cascade haar_cascade();
/// Gain-scaled three-factor alternative with the same product.
Cascade haar_alt_cascade();

/// Eight-step and six-step liftings of the identity (gain 1, base identity).
Cascade identity_lift8();
Cascade identity_lift6();

/// Fourth-order unimodular matrix with two inequivalent irreducible
/// three-step factorizations, parametrized by rational b, c with b, c != 0
/// and b^2 != c^2.  Throws PreconditionError on excluded parameters.
struct Example1 {
    PolyMatrix h;
    Cascade a;  // lower/upper/lower steps
    Cascade b;  // upper/lower/upper steps
};
Example1 example1(const Scalar& b, const Scalar& c);

/// 7-tap/5-tap spline wavelet lifting identity, stored as the two sides of a
/// synthesis-form matrix equation over Q(sqrt 2).
struct Cdf75 {
    PolyMatrix lhs;   // sqrt(2)/32 times the integer matrix
    Cascade rhs;      // three lifting steps over base diag(2*sqrt2, sqrt2/4)
};
Cdf75 cdf75();

/// 5/3 wavelet: two dyadic lifting steps and the resulting transfer matrix.
Cascade legall_cascade();
PolyMatrix legall_matrix();

/// One HS lifting step over the causal lazy base diag(1, z^-1): irreducible
/// but not order-increasing at index 0.
Cascade example7_cascade();
PolyMatrix example7_partial0();  // the expected E^(0)

/// One-step WS bank: gain 3 paired with the upper lifting filter 1 + z^-1.
Cascade ws_one_step_cascade();

std::vector<std::string> names();

}  // namespace liftkit::fixtures
