#include "liftkit/fixtures.hpp"

#include "liftkit/errors.hpp"

namespace liftkit::fixtures {

namespace {

Scalar q(long n, long d) { return Scalar::fraction(n, d); }

LaurentPoly P(int lo, std::vector<Scalar> c) { return LaurentPoly(lo, std::move(c)); }

}  // namespace

Cascade haar_cascade() {
    return {GainScale(Scalar(1)),
            {{1, LaurentPoly(Scalar(-1))}, {0, LaurentPoly(q(1, 2))}},
            PolyMatrix::identity()};
}

Cascade haar_alt_cascade() {
    return {GainScale(Scalar(2)),
            {{0, LaurentPoly(Scalar(1))}, {1, LaurentPoly(q(-1, 2))}},
            PolyMatrix::identity()};
}

Cascade identity_lift8() {
    return {GainScale(Scalar(1)), identity_lift8_steps(), PolyMatrix::identity()};
}

Cascade identity_lift6() {
    return {GainScale(Scalar(1)),
            {
                {1, P(2, {Scalar(5), Scalar(5)})},            // 5z^-2 + 5z^-3
                {0, P(-2, {Scalar(-1), Scalar(1)})},          // -z^2 + z
                {1, P(0, {Scalar(-1), Scalar(-1)})},          // -1 - z^-1
                {0, P(0, {q(5, 4), q(-5, 4)})},               // 5/4 - 5/4 z^-1
                {1, P(0, {Scalar(-4), Scalar(-4)})},          // -4 - 4z^-1
                {0, P(-2, {q(-1, 4), q(1, 4)})},              // -z^2/4 + z/4
            },
            PolyMatrix::identity()};
}

Example1 example1(const Scalar& b, const Scalar& c) {
    if (b.is_zero() || c.is_zero() || b * b == c * c)
        throw PreconditionError("example1 requires b, c nonzero with b^2 != c^2");
    const Scalar b2 = b * b, c2 = c * c;
    const Scalar d = (b2 - c2) / b2;

    PolyMatrix h(P(-2, {b2.inverse()}),                 // b^-2 z^2
                 P(-2, {b2.inverse(), -b.inverse()}),   // b^-2 z^2 (1 - b z^-1)
                 P(0, {d, d * b}),                      // d (1 + b z^-1)
                 P(0, {d, Scalar(0), c2}));             // d + c^2 z^-2

    Cascade ca{GainScale(Scalar(1)),
               {
                   {1, P(0, {Scalar(1), b})},
                   {0, P(-2, {b2.inverse(), -b.inverse()})},
                   {1, P(2, {-c2, -c2 * b})},
               },
               PolyMatrix::identity()};

    const Scalar e = c2 / (c2 - b2);
    const Scalar f = (b2 - c2).inverse();
    Cascade cb{GainScale(Scalar(1)),
               {
                   {0, P(0, {e, -e * b})},
                   {1, P(0, {d, d * b})},
                   {0, P(-2, {f, -f * b})},
               },
               PolyMatrix::identity()};
    return {h, ca, cb};
}

Cdf75 cdf75() {
    const Scalar s(mpq_class(0), mpq_class(1, 32));  // sqrt(2)/32 = 2^(-9/2)
    auto sp = [&](int lo, std::vector<long> ints) {
        std::vector<Scalar> c;
        c.reserve(ints.size());
        for (long v : ints) c.push_back(s * Scalar(v));
        return P(lo, std::move(c));
    };
    PolyMatrix lhs(sp(-1, {-12, 40, -12}), sp(0, {-8, -8}), sp(-2, {3, 5, 5, 3}),
                   sp(-1, {2, 12, 2}));

    Cascade rhs{GainScale(Scalar(1)),
                {
                    {1, P(-1, {q(3, 16), q(3, 16)})},   // 3(z+1)/16
                    {0, P(0, {Scalar(-1), Scalar(-1)})},
                    {1, P(-1, {q(-1, 4), q(-1, 4)})},   // -(z+1)/4
                },
                gain_matrix(Scalar(mpq_class(0), mpq_class(1, 4)))};  // diag(2*sqrt2, sqrt2/4)
    return {lhs, rhs};
}

Cascade legall_cascade() {
    return {GainScale(Scalar(1)),
            {
                {1, P(-1, {q(-1, 2), q(-1, 2)})},  // -(z+1)/2
                {0, P(0, {q(1, 4), q(1, 4)})},     // (1+z^-1)/4
            },
            PolyMatrix::identity()};
}

PolyMatrix legall_matrix() {
    return {P(-1, {q(-1, 8), q(3, 4), q(-1, 8)}), P(0, {q(1, 4), q(1, 4)}),
            P(-1, {q(-1, 2), q(-1, 2)}), LaurentPoly::one()};
}

Cascade example7_cascade() {
    return {GainScale(Scalar(1)),
            {{1, P(0, {Scalar(1), Scalar(1)})}},
            PolyMatrix::lazy_causal()};
}

PolyMatrix example7_partial0() {
    return {LaurentPoly::one(), LaurentPoly::zero(), P(0, {Scalar(1), Scalar(1)}),
            LaurentPoly::monomial(Scalar(1), 1)};
}

Cascade ws_one_step_cascade() {
    return {GainScale(Scalar(3)),
            {{0, P(0, {Scalar(1), Scalar(1)})}},
            PolyMatrix::identity()};
}

std::vector<std::string> names() {
    return {"haar",  "haar-alt", "identity-lift-8", "identity-lift-6", "example1",
            "cdf75", "legall",   "example7",        "ws-one-step"};
}

}  // namespace liftkit::fixtures
