#pragma once

#include <vector>

#include "liftkit/structures.hpp"

namespace liftkit {

/// One successful order-reduction: step_matrix(step)^{-1} * input = remainder.
struct PeelReport {
    LiftingStep step;
    PolyMatrix remainder;
    int order_before = 0;
    int order_after = 0;
};

/// Expands diag(1/k, k) into exactly four lifting steps (S_0 first); k = 1
/// yields the empty sequence.
std::vector<LiftingStep> factor_gain(const Scalar& k);

/// Peels one lifting step with characteristic m and filter in g off the left
/// of a unimodular matrix of positive polyphase order, choosing the
/// minimal-support admissible filter.  Throws FactorError("peel failed ...")
/// when no admissible filter reduces the order.
PeelReport peel_step(const PolyMatrix& e, int m, const FilterGroupSpec& g);

/// Factors h inside the group lifting structure s: irreducible,
/// order-increasing cascade with cascade_in_structure(c, s) and product == h.
/// Optionally records the peel trace.
Cascade factor_in_structure(const PolyMatrix& h, const GroupLiftingStructure& s,
                            std::vector<PeelReport>* trace = nullptr);

/// Unconstrained lifting factorization of a unimodular matrix via Euclidean
/// peeling: irreducible cascade with base identity and product == h.  The
/// output is deterministic but, as with any unconstrained lifting, not unique.
Cascade factor_generic(const PolyMatrix& h);

/// Attempts a fully dyadic lifting factorization of b.  Returns true when the
/// deterministic generic factorization exhibits dyadic filters and gain; a
/// false result is "not confirmed", not a proof of impossibility.
bool dyadic_lifting_confirmed(const PolyMatrix& b);

}  // namespace liftkit
