// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <functional>
#include <iostream>
#include <string>

#include "generators.hpp"
#include "liftkit/factorize.hpp"
#include "liftkit/fixtures.hpp"

using namespace liftkit;
namespace fx = liftkit::fixtures;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << note
              << "\n";
    if (!ok) ++failures;
}

bool all_steps_dyadic(const Cascade& c) {
    for (const auto& st : c.steps)
        if (!is_dyadic(st.s)) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "Haar two-step and gain-scaled three-factor products equal the Haar matrix", [] {
        return product(fx::haar_cascade()) == PolyMatrix::haar() &&
               product(fx::haar_alt_cascade()) == PolyMatrix::haar();
    });

    criterion(2, "identity lifts multiply to I; six-step filters dyadic yet outside S_W", [] {
        Cascade id8 = fx::identity_lift8(), id6 = fx::identity_lift6();
        if (!(product(id8) == PolyMatrix::identity())) return false;
        if (!(product(id6) == PolyMatrix::identity())) return false;
        if (!all_steps_dyadic(id6)) return false;
        for (const auto& st : id6.steps)
            if (step_in_structure(st, preset_ws())) return false;
        return true;
    });

    criterion(3, "Example 1 (b=2, c=3): two irreducible inequivalent factorizations of H", [] {
        auto ex = fx::example1(Scalar(2), Scalar(3));
        return is_irreducible(ex.a) && is_irreducible(ex.b) && product(ex.a) == ex.h &&
               product(ex.b) == ex.h && matrix_order(ex.h) == 4 &&
               equivalent_mod_rescaling(ex.a, ex.b).kind ==
                   EquivalenceVerdict::Kind::Inequivalent;
    });

    criterion(4, "CDF 7/5 synthesis-form matrix equation holds exactly in Q(sqrt 2)", [] {
        auto c = fx::cdf75();
        // base carries the diag(2*sqrt2, 1/(2*sqrt2)) factor; lhs carries 2^(-9/2)
        return c.rhs.base == gain_matrix(Scalar(mpq_class(0), mpq_class(1, 4))) &&
               product(c.rhs) == c.lhs;
    });

    criterion(5, "LeGall 5/3 factors in S_Wr into exactly the two dyadic steps", [] {
        Cascade c = factor_in_structure(fx::legall_matrix(), preset_ws_reversible());
        return c.gain.k().is_one() && c.base == PolyMatrix::identity() &&
               c.steps == fx::legall_cascade().steps && dc_normalized(fx::legall_matrix());
    });

    criterion(6, "Example 7 fails order-increasing at index 0 with the expected E^(0)", [] {
        Cascade c = fx::example7_cascade();
        auto oi = is_order_increasing(c);
        return !oi.increasing && oi.failing_index == 0 &&
               partial_products(c)[1] == fx::example7_partial0();
    });

    criterion(7, "uniqueness round trip: 200 random S_W cascades refactor identically", [] {
        testgen::Gen g;
        auto sw = preset_ws();
        for (int i = 0; i < 200; ++i) {
            Cascade c = g.sw_cascade();
            if (!is_order_increasing(c).increasing) return false;
            PolyMatrix h = product(c);
            Cascade r = factor_in_structure(h, sw);
            if (equivalent_mod_rescaling(c, r).kind != EquivalenceVerdict::Kind::Identical)
                return false;
            // deliberate rescaling produces EquivalentModuloRescaling(alpha)
            Scalar alpha = g.scalar(true);
            if (alpha.is_one()) alpha = Scalar(2);
            Cascade c2{GainScale(c.gain.k() / alpha), {}, gain_matrix(alpha) * c.base};
            for (const auto& st : c.steps) c2.steps.push_back(gamma_step(alpha, st));
            auto v = equivalent_mod_rescaling(c, c2);
            if (v.kind != EquivalenceVerdict::Kind::EquivalentModuloRescaling ||
                v.alpha != alpha)
                return false;
        }
        return true;
    });

    criterion(8, "D-invariance per preset; gamma formula, conjugation, and intertwining", [] {
        if (!(is_d_invariant(preset_ws()) && is_d_invariant(preset_ws_reversible()) &&
              is_d_invariant(preset_hs()) && is_d_invariant(preset_hs_reversible()) &&
              is_d_invariant(preset_elasf())))
            return false;
        GroupLiftingStructure full_dyadic = preset_ws_reversible();
        full_dyadic.gain_group = GainGroup::Full;
        if (is_d_invariant(full_dyadic)) return false;
        testgen::Gen g;
        for (int i = 0; i < 500; ++i) {
            PolyMatrix a(g.poly(4), g.poly(4), g.poly(4), g.poly(4));
            Scalar k = g.scalar(true);
            PolyMatrix d = gain_matrix(k);
            if (!(gamma(k, a) == d * a * gain_matrix(k.inverse()))) return false;
            if (!(d * a == gamma(k, a) * d)) return false;
        }
        return true;
    });

    criterion(9, "nonuniqueness witness for the Haar and LeGall cascades", [] {
        for (const Cascade& c : {fx::haar_cascade(), fx::legall_cascade()}) {
            Cascade w = nonuniqueness_witness(c);
            if (!is_irreducible(w) || !(product(w) == product(c)) || w.steps == c.steps)
                return false;
        }
        return true;
    });

    criterion(10, "HS matrices are not closed under products; DC normalization not preserved", [] {
        PolyMatrix haar2 = PolyMatrix::haar() * PolyMatrix::haar();
        if (!is_hs(PolyMatrix::haar()) || is_hs(haar2)) return false;
        PolyMatrix h = product(fx::ws_one_step_cascade());  // D_3 * upsilon(1 + z^-1)
        return dc_normalized(h) && !dc_normalized(h * h);
    });

    criterion(11, "factor_gain matches the printed K=2 schedule and 200 random gains", [] {
        auto steps = factor_gain(Scalar(2));
        if (steps.size() != 4) return false;
        if (!(steps[0] == LiftingStep{0, LaurentPoly(Scalar(2))} &&
              steps[1] == LiftingStep{1, LaurentPoly(Scalar::fraction(1, 2))} &&
              steps[2] == LiftingStep{0, LaurentPoly(Scalar(-1))} &&
              steps[3] == LiftingStep{1, LaurentPoly(Scalar(-1))}))
            return false;
        testgen::Gen g;
        for (int i = 0; i < 200; ++i) {
            Scalar k = g.scalar(true);
            Cascade c{GainScale(Scalar(1)), factor_gain(k), PolyMatrix::identity()};
            if (!(product(c) == gain_matrix(k))) return false;
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
