#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "liftkit/errors.hpp"
#include "liftkit/fixtures.hpp"
#include "liftkit/structures.hpp"

using namespace liftkit;

TEST_CASE("presets by name") {
    for (const char* name : {"ws", "ws-reversible", "hs", "hs-reversible", "elasf"}) {
        auto s = preset_by_name(name);
        REQUIRE(s.has_value());
        CHECK(s->name == name);
    }
    CHECK_FALSE(preset_by_name("nope").has_value());
    CHECK(preset_ws().gain_group == GainGroup::Full);
    CHECK(preset_ws_reversible().gain_group == GainGroup::Trivial);
    CHECK(preset_elasf().bases == BaseSetKind::HaarOnly);
}

TEST_CASE("filter group membership") {
    LaurentPoly hsp(0, {Scalar(1), Scalar(1)});          // 1 + z^-1, HS+
    LaurentPoly hsm(-1, {Scalar(1), Scalar(1)});         // z + 1, HS-
    LaurentPoly third(0, {Scalar::fraction(1, 3), Scalar::fraction(1, 3)});

    CHECK(filter_in_group(hsp, preset_ws().upper));
    CHECK_FALSE(filter_in_group(hsp, preset_ws().lower));
    CHECK(filter_in_group(hsm, preset_ws().lower));
    CHECK(filter_in_group(third, preset_ws().upper));           // field ring
    CHECK_FALSE(filter_in_group(third, preset_ws_reversible().upper));  // 1/3 not dyadic
    CHECK(filter_in_group(LaurentPoly(), preset_ws().upper));   // zero is in every group

    testgen::Gen g;
    for (int i = 0; i < 500; ++i) {
        // Additive group closure on random members.
        LaurentPoly a = g.hs_filter(0), b = g.hs_filter(0);
        CHECK(filter_in_group(a + b, preset_ws().upper));
        CHECK(filter_in_group(-a, preset_ws().upper));
        LaurentPoly w = g.wa_filter(true);
        CHECK(filter_in_group(w, preset_hs().upper));
        CHECK(filter_in_group(w, preset_hs_reversible().upper));
    }
}

TEST_CASE("base sets") {
    CHECK(base_in_set(PolyMatrix::identity(), BaseSetKind::IdentityOnly));
    CHECK_FALSE(base_in_set(PolyMatrix::haar(), BaseSetKind::IdentityOnly));
    CHECK(base_in_set(PolyMatrix::haar(), BaseSetKind::HaarOnly));
    CHECK(base_in_set(PolyMatrix::haar(), BaseSetKind::ConcentricEqualLengthHS));
    CHECK(base_in_set(PolyMatrix::haar(), BaseSetKind::ConcentricEqualLengthHSDyadicLiftable));
    CHECK_FALSE(base_in_set(fixtures::legall_matrix(), BaseSetKind::ConcentricEqualLengthHS));
}

TEST_CASE("cascade membership") {
    CHECK(cascade_in_structure(fixtures::legall_cascade(), preset_ws_reversible()));
    CHECK(cascade_in_structure(fixtures::legall_cascade(), preset_ws()));
    CHECK(cascade_in_structure(fixtures::ws_one_step_cascade(), preset_ws()));
    // gain 3 is rejected by the trivial gain group
    CHECK_FALSE(cascade_in_structure(fixtures::ws_one_step_cascade(), preset_ws_reversible()));
    // every six-step identity-lift filter is dyadic yet fails WS symmetry
    Cascade id6 = fixtures::identity_lift6();
    for (const auto& st : id6.steps) {
        CHECK(is_dyadic(st.s));
        CHECK_FALSE(step_in_structure(st, preset_ws()));
    }
    CHECK_FALSE(cascade_in_structure(id6, preset_ws()));
}

TEST_CASE("D-invariance analysis") {
    CHECK(is_d_invariant(preset_ws()));
    CHECK(is_d_invariant(preset_ws_reversible()));
    CHECK(is_d_invariant(preset_hs()));
    CHECK(is_d_invariant(preset_hs_reversible()));
    CHECK(is_d_invariant(preset_elasf()));
    // Full gain group over a dyadic ring is not closed under K^2 scaling.
    GroupLiftingStructure bad = preset_ws_reversible();
    bad.gain_group = GainGroup::Full;
    CHECK_FALSE(is_d_invariant(bad));
}

TEST_CASE("order-increasing") {
    auto oi = is_order_increasing(fixtures::example7_cascade());
    CHECK_FALSE(oi.increasing);
    CHECK(oi.failing_index == 0);
    CHECK(is_order_increasing(fixtures::legall_cascade()).increasing);
    Cascade empty{GainScale(Scalar(1)), {}, PolyMatrix::identity()};
    CHECK(is_order_increasing(empty).increasing);

    Cascade reducible{GainScale(Scalar(1)),
                      {{0, LaurentPoly::one()}, {0, LaurentPoly::one()}},
                      PolyMatrix::identity()};
    CHECK_THROWS_AS(is_order_increasing(reducible), PreconditionError);
}

namespace {

Cascade rescale(const Cascade& c, const Scalar& alpha) {
    Cascade out{GainScale(c.gain.k() / alpha), {}, gain_matrix(alpha) * c.base};
    for (const auto& st : c.steps) out.steps.push_back(gamma_step(alpha, st));
    return out;
}

}  // namespace

TEST_CASE("equivalence modulo rescaling") {
    testgen::Gen g;
    auto ex1 = fixtures::example1(Scalar(2), Scalar(3));
    auto v = equivalent_mod_rescaling(ex1.a, ex1.b);
    CHECK(v.kind == EquivalenceVerdict::Kind::Inequivalent);
    CHECK_FALSE(v.reason.empty());

    for (int i = 0; i < 300; ++i) {
        Cascade c = g.sw_cascade();
        CHECK(equivalent_mod_rescaling(c, c).kind == EquivalenceVerdict::Kind::Identical);

        Scalar alpha = g.scalar(true);
        Cascade c2 = rescale(c, alpha);
        CHECK(product(c2) == product(c));
        auto w = equivalent_mod_rescaling(c, c2);
        if (alpha.is_one()) {
            CHECK(w.kind == EquivalenceVerdict::Kind::Identical);
        } else {
            REQUIRE(w.kind == EquivalenceVerdict::Kind::EquivalentModuloRescaling);
            CHECK(w.alpha == alpha);
            // symmetry: the reverse comparison yields 1/alpha
            auto back = equivalent_mod_rescaling(c2, c);
            REQUIRE(back.kind == EquivalenceVerdict::Kind::EquivalentModuloRescaling);
            CHECK(back.alpha == alpha.inverse());
            // transitivity: compose two rescalings
            Scalar beta = g.scalar(true);
            auto chain = equivalent_mod_rescaling(c, rescale(c2, beta));
            if ((alpha * beta).is_one()) {
                CHECK(chain.kind == EquivalenceVerdict::Kind::Identical);
            } else {
                REQUIRE(chain.kind == EquivalenceVerdict::Kind::EquivalentModuloRescaling);
                CHECK(chain.alpha == alpha * beta);
            }
            // Sharpening of the uniqueness result: bases sharing a nonzero entry at z0 = 1
            // forces alpha = 1; here base = identity, so no entry is shared
            // unless alpha = 1.
            bool shared = false;
            for (int r = 0; r < 2; ++r)
                for (int col = 0; col < 2; ++col) {
                    Scalar e1 = c.base(r, col).is_zero() ? Scalar(0)
                                                         : c.base(r, col).evaluate(Scalar(1));
                    Scalar e2 = c2.base(r, col).is_zero() ? Scalar(0)
                                                          : c2.base(r, col).evaluate(Scalar(1));
                    if (e1 == e2 && !e1.is_zero()) shared = true;
                }
            CHECK_FALSE(shared);
        }
    }

    Cascade reducible{GainScale(Scalar(1)),
                      {{0, LaurentPoly::one()}, {0, LaurentPoly::one()}},
                      PolyMatrix::identity()};
    CHECK_THROWS_AS(equivalent_mod_rescaling(reducible, reducible), PreconditionError);
}

TEST_CASE("dc normalization") {
    CHECK(dc_normalized(PolyMatrix::haar()));
    CHECK(dc_normalized(fixtures::legall_matrix()));
    PolyMatrix hws = product(fixtures::ws_one_step_cascade());
    CHECK(dc_normalized(hws));
    CHECK_FALSE(dc_normalized(hws * hws));
}
