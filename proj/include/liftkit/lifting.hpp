#pragma once

#include <vector>

#include "liftkit/polyphase.hpp"

namespace liftkit {

/// One lifting step: update characteristic m (0 = lowpass update, upper
/// triangular; 1 = highpass update, lower triangular) and its lifting filter.
struct LiftingStep {
    int m = 0;
    LaurentPoly s;
    friend bool operator==(const LiftingStep&, const LiftingStep&) = default;
};

/// Unimodular gain scaling diag(1/K, K), K != 0.
class GainScale {
public:
    GainScale() : k_(1) {}
    explicit GainScale(Scalar k);  // throws on k = 0
    const Scalar& k() const { return k_; }
    friend bool operator==(const GainScale&, const GainScale&) = default;

private:
    Scalar k_;
};

/// Partially factored lifting cascade diag(1/K,K) S_{N-1} ... S_0 B(z).
/// steps[0] is the first-applied (rightmost) lifting matrix.
struct Cascade {
    GainScale gain;
    std::vector<LiftingStep> steps;
    PolyMatrix base = PolyMatrix::identity();
};

PolyMatrix step_matrix(const LiftingStep& st);
PolyMatrix gain_matrix(const Scalar& k);  // diag(1/k, k); throws on k = 0

PolyMatrix product(const Cascade& c);

/// E^(-1) = B, E^(n) = S_n E^(n-1); returns the N+1 matrices E^(-1)..E^(N-1).
std::vector<PolyMatrix> partial_products(const Cascade& c);

/// Inner automorphism D_K A D_K^{-1}; entrywise [[a, K^-2 b],[K^2 c, d]].
PolyMatrix gamma(const Scalar& k, const PolyMatrix& m);
LiftingStep gamma_step(const Scalar& k, const LiftingStep& st);

/// Merges adjacent steps with equal update characteristic and drops zero-filter
/// steps until the step list strictly alternates.  Gain and base are untouched.
Cascade reduce_to_irreducible(const Cascade& c);
bool is_irreducible(const Cascade& c);

/// Group inverse for identity-base cascades: product(invert_cascade(c)) * product(c) = I.
Cascade invert_cascade(const Cascade& c);

/// The eight-step lifting factorization of the identity used as the splice in
/// nonuniqueness witnesses, in S_0-first order.
std::vector<LiftingStep> identity_lift8_steps();

/// Produces a second irreducible cascade with the same product and base but a
/// different step list, by splicing a lifting of the identity before the
/// existing steps and reducing.
Cascade nonuniqueness_witness(const Cascade& h);

}  // namespace liftkit
