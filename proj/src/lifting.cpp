#include "liftkit/lifting.hpp"

#include <algorithm>

#include "liftkit/errors.hpp"

namespace liftkit {

GainScale::GainScale(Scalar k) : k_(std::move(k)) {
    if (k_.is_zero()) throw PreconditionError("gain scaling factor must be nonzero");
}

PolyMatrix step_matrix(const LiftingStep& st) {
    if (st.m == 0) return {LaurentPoly::one(), st.s, {}, LaurentPoly::one()};
    return {LaurentPoly::one(), {}, st.s, LaurentPoly::one()};
}

PolyMatrix gain_matrix(const Scalar& k) {
    if (k.is_zero()) throw PreconditionError("gain scaling factor must be nonzero");
    return PolyMatrix::diagonal(LaurentPoly(k.inverse()), LaurentPoly(k));
}

PolyMatrix product(const Cascade& c) {
    PolyMatrix acc = c.base;
    for (const auto& st : c.steps) acc = step_matrix(st) * acc;
    return gain_matrix(c.gain.k()) * acc;
}

std::vector<PolyMatrix> partial_products(const Cascade& c) {
    std::vector<PolyMatrix> out;
    out.reserve(c.steps.size() + 1);
    PolyMatrix acc = c.base;
    out.push_back(acc);
    for (const auto& st : c.steps) {
        acc = step_matrix(st) * acc;
        out.push_back(acc);
    }
    return out;
}

PolyMatrix gamma(const Scalar& k, const PolyMatrix& m) {
    if (k.is_zero()) throw PreconditionError("gamma requires nonzero scaling factor");
    Scalar k2 = k * k;
    return {m(0, 0), k2.inverse() * m(0, 1), k2 * m(1, 0), m(1, 1)};
}

LiftingStep gamma_step(const Scalar& k, const LiftingStep& st) {
    if (k.is_zero()) throw PreconditionError("gamma requires nonzero scaling factor");
    Scalar k2 = k * k;
    return {st.m, (st.m == 0 ? k2.inverse() : k2) * st.s};
}

Cascade reduce_to_irreducible(const Cascade& c) {
    Cascade out{c.gain, {}, c.base};
    // The accumulated list always alternates with nonzero filters, so each
    // incoming step merges with at most the current top.
    for (const auto& st : c.steps) {
        if (st.s.is_zero()) continue;
        if (!out.steps.empty() && out.steps.back().m == st.m) {
            // upsilon/lambda are homomorphisms: adjacent equal-characteristic
            // steps combine by filter addition
            out.steps.back().s += st.s;
            if (out.steps.back().s.is_zero()) out.steps.pop_back();
        } else {
            out.steps.push_back(st);
        }
    }
    return out;
}

bool is_irreducible(const Cascade& c) {
    for (size_t i = 0; i < c.steps.size(); ++i) {
        if (c.steps[i].s.is_zero()) return false;
        if (i > 0 && c.steps[i].m == c.steps[i - 1].m) return false;
    }
    return true;
}

Cascade invert_cascade(const Cascade& c) {
    if (!(c.base == PolyMatrix::identity()))
        throw PreconditionError("invert_cascade requires identity base");
    Scalar k = c.gain.k();
    Cascade inv{GainScale(k.inverse()), {}, PolyMatrix::identity()};
    // (D_K S_{N-1}...S_0)^{-1} = D_{1/K} gamma_K(S_0^{-1}) ... gamma_K(S_{N-1}^{-1}),
    // so the inverse's S_0-first list visits the original steps in reverse.
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it)
        inv.steps.push_back(gamma_step(k, LiftingStep{it->m, -it->s}));
    return inv;
}

std::vector<LiftingStep> identity_lift8_steps() {
    auto half = Scalar::fraction(1, 2);
    return {
        {0, LaurentPoly(-half)},     {1, LaurentPoly(Scalar(1))},
        {0, LaurentPoly(Scalar(1))}, {1, LaurentPoly(-half)},
        {0, LaurentPoly(Scalar(2))}, {1, LaurentPoly(half)},
        {0, LaurentPoly(Scalar(-1))},{1, LaurentPoly(Scalar(-1))},
    };
}

namespace {

Cascade splice_identity(const Cascade& h, const std::vector<LiftingStep>& id_steps) {
    Cascade spliced{h.gain, id_steps, h.base};
    spliced.steps.insert(spliced.steps.end(), h.steps.begin(), h.steps.end());
    return reduce_to_irreducible(spliced);
}

}  // namespace

Cascade nonuniqueness_witness(const Cascade& h) {
    if (!is_irreducible(h)) throw PreconditionError("witness requires an irreducible cascade");
    Cascade w = splice_identity(h, identity_lift8_steps());
    if (w.steps != h.steps) return w;
    // Retry with the inverse identity factorization (reversed, negated steps).
    std::vector<LiftingStep> alt = identity_lift8_steps();
    std::reverse(alt.begin(), alt.end());
    for (auto& st : alt) st.s = -st.s;
    w = splice_identity(h, alt);
    if (w.steps != h.steps) return w;
    throw FactorError("witness construction collapsed");
}

}  // namespace liftkit
