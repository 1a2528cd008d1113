#include "liftkit/factorize.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "liftkit/errors.hpp"

namespace liftkit {

std::vector<LiftingStep> factor_gain(const Scalar& k) {
    if (k.is_zero()) throw PreconditionError("gain scaling factor must be nonzero");
    if (k.is_one()) return {};
    // diag(1/K,K) = lambda(-1) upsilon(1-K) lambda(1/K) upsilon(K(K-1))
    return {
        {0, LaurentPoly(k * (k - Scalar(1)))},
        {1, LaurentPoly(k.inverse())},
        {0, LaurentPoly(Scalar(1) - k)},
        {1, LaurentPoly(Scalar(-1))},
    };
}

namespace {

// Gaussian elimination over Q(sqrt2).  Returns the particular solution with
// free variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Scalar inv = a[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

LaurentPoly zpow(int n) { return LaurentPoly::monomial(Scalar(1), n); }  // z^{-n}

// Basis polynomials spanning the admissible filters of a given support shape.
// Symmetric filter classes have fixed centers, so their supports form a single
// chain indexed by half-width; unconstrained supports also slide.
std::vector<std::vector<LaurentPoly>> candidate_bases(Symmetry sym, int max_order, int lo_min,
                                                      int lo_max) {
    std::vector<std::vector<LaurentPoly>> out;
    switch (sym) {
        case Symmetry::HSPlus:  // s(n) = s(1-n), support [a, 1-a]
            for (int a = 0; 1 - 2 * a <= max_order; --a) {
                std::vector<LaurentPoly> basis;
                for (int n = a; n <= 0; ++n) basis.push_back(zpow(n) + zpow(1 - n));
                out.push_back(std::move(basis));
            }
            break;
        case Symmetry::HSMinus:  // s(n) = s(-1-n), support [a, -1-a]
            for (int a = -1; -1 - 2 * a <= max_order; --a) {
                std::vector<LaurentPoly> basis;
                for (int n = a; n <= -1; ++n) basis.push_back(zpow(n) + zpow(-1 - n));
                out.push_back(std::move(basis));
            }
            break;
        case Symmetry::WA:  // s(-n) = -s(n), support [a, -a]
            for (int a = -1; -2 * a <= max_order; --a) {
                std::vector<LaurentPoly> basis;
                for (int n = a; n <= -1; ++n) basis.push_back(zpow(n) - zpow(-n));
                out.push_back(std::move(basis));
            }
            break;
        case Symmetry::Unconstrained:
            for (int w = 0; w <= max_order; ++w)
                for (int sa = lo_min - w; sa <= lo_max; ++sa) {
                    std::vector<LaurentPoly> basis;
                    for (int n = sa; n <= sa + w; ++n) basis.push_back(zpow(n));
                    out.push_back(std::move(basis));
                }
            break;
    }
    return out;
}

}  // namespace

// All admissible single-step peels of e, deduplicated by lifting filter and
// sorted by remainder order, then by filter support width and position.
std::vector<PeelReport> peel_candidates(const PolyMatrix& e, int m, const FilterGroupSpec& g) {
    if (!is_unimodular(e)) throw PreconditionError("peel requires a unimodular matrix");
    const int omega = matrix_order(e);
    if (omega < 1) throw PreconditionError("peel requires positive polyphase order");

    const int r = m, o = 1 - m;
    auto [c, d] = matrix_support(e);

    // Support of the untouched row; the shrunken matrix must still contain it.
    int oc = 0, od = 0;
    {
        PolyMatrix other_row({}, {}, {}, {});
        other_row.at(0, 0) = e(o, 0);
        other_row.at(0, 1) = e(o, 1);
        auto s = matrix_support(other_row);
        oc = s.first;
        od = s.second;
    }
    std::vector<PeelReport> out;
    if (od - oc > omega - 1) return out;

    auto bases = candidate_bases(g.symmetry, omega + 2, c - od, d - oc);
    for (const auto& basis : bases) {
        // Precompute basis * other-row products.
        std::vector<std::array<LaurentPoly, 2>> prod(basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
            prod[i] = {basis[i] * e(o, 0), basis[i] * e(o, 1)};

        for (int win_lo = od - (omega - 1); win_lo <= oc; ++win_lo) {
            const int win_hi = win_lo + omega - 1;
            // Zero every coefficient of the updated row outside the window.
            std::vector<std::vector<Scalar>> rows;
            std::vector<Scalar> rhs;
            for (int j = 0; j < 2; ++j) {
                int lo = win_lo, hi = win_hi;
                if (!e(r, j).is_zero()) {
                    lo = std::min(lo, e(r, j).lo());
                    hi = std::max(hi, e(r, j).hi());
                }
                for (size_t i = 0; i < basis.size(); ++i) {
                    if (prod[i][j].is_zero()) continue;
                    lo = std::min(lo, prod[i][j].lo());
                    hi = std::max(hi, prod[i][j].hi());
                }
                for (int n = lo; n <= hi; ++n) {
                    if (n >= win_lo && n <= win_hi) continue;
                    std::vector<Scalar> row(basis.size(), Scalar(0));
                    for (size_t i = 0; i < basis.size(); ++i) row[i] = prod[i][j].coeff(n);
                    rows.push_back(std::move(row));
                    rhs.push_back(e(r, j).coeff(n));
                }
            }
            auto sol = solve_linear(rows, rhs);
            if (!sol) continue;
            LaurentPoly s;
            for (size_t i = 0; i < basis.size(); ++i) s += (*sol)[i] * basis[i];
            if (s.is_zero()) continue;
            if (g.ring == Ring::Dyadic && !is_dyadic(s)) continue;
            if (std::any_of(out.begin(), out.end(),
                            [&](const PeelReport& p) { return p.step.s == s; }))
                continue;
            PolyMatrix remainder = step_matrix({m, -s}) * e;
            if (remainder.is_zero() || matrix_order(remainder) >= omega) continue;
            out.push_back({{m, s}, remainder, omega, matrix_order(remainder)});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PeelReport& a, const PeelReport& b) {
        if (a.order_after != b.order_after) return a.order_after < b.order_after;
        if (a.step.s.order() != b.step.s.order()) return a.step.s.order() < b.step.s.order();
        return a.step.s.lo() > b.step.s.lo();
    });
    return out;
}

PeelReport peel_step(const PolyMatrix& e, int m, const FilterGroupSpec& g) {
    auto cands = peel_candidates(e, m, g);
    if (cands.empty())
        throw FactorError(m == 0 ? "peel failed (m=0)" : "peel failed (m=1)");
    return cands.front();
}

namespace {

// Depth-first peeling with backtracking.  An admissible order-decreasing peel
// is not necessarily the true leftmost factor, but any wrong branch dies
// within the depth bound (a completable wrong branch would contradict
// uniqueness of in-structure factorizations), so exhaustive search over the
// sorted candidate lists is both correct and deterministic.
struct PeelSearch {
    const GroupLiftingStructure& s;
    const std::function<bool(const PolyMatrix&)>& finished;
    size_t bound;
    long budget = 20000;  // node safety valve; ample for desk-scale inputs
    std::vector<PeelReport> path;
    PolyMatrix terminal;

    bool dfs(const PolyMatrix& e, int prev_m) {
        if (finished(e)) {
            terminal = e;
            return true;
        }
        if (path.size() >= bound || matrix_order(e) == 0 || --budget < 0) return false;
        // The leftmost factor's characteristic is free; the rest alternate.
        std::vector<int> ms = prev_m < 0 ? std::vector<int>{1, 0}
                                         : std::vector<int>{1 - prev_m};
        for (int m : ms) {
            for (const PeelReport& rep : peel_candidates(e, m, m == 0 ? s.upper : s.lower)) {
                path.push_back(rep);
                if (dfs(rep.remainder, m)) return true;
                path.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

Cascade factor_in_structure(const PolyMatrix& h, const GroupLiftingStructure& s,
                            std::vector<PeelReport>* trace) {
    if (!is_unimodular(h)) throw PreconditionError("factorization requires a unimodular matrix");
    const bool ws_mode = s.bases == BaseSetKind::IdentityOnly;
    if (ws_mode && !is_ws(h)) throw PreconditionError("structure requires a WS transfer matrix");
    if (!ws_mode && !is_hs(h)) throw PreconditionError("structure requires an HS transfer matrix");

    const std::function<bool(const PolyMatrix&)> finished = [&](const PolyMatrix& r) {
        return ws_mode ? matrix_order(r) == 0 : base_in_set(r, s.bases);
    };
    PeelSearch search{s, finished, static_cast<size_t>(matrix_order(h)) + 2};
    if (!search.dfs(h, -1)) throw FactorError("not factorable in structure");
    if (trace) *trace = search.path;
    const PolyMatrix& e = search.terminal;
    std::vector<LiftingStep> peeled;  // left-to-right: peeled[0] is S_{N-1}-side
    peeled.reserve(search.path.size());
    for (const PeelReport& rep : search.path) peeled.push_back(rep.step);

    Cascade c;
    if (ws_mode) {
        // An order-zero unimodular WS remainder is forced to be constant
        // diagonal diag(1/K, K).
        if (!e(0, 1).is_zero() || !e(1, 0).is_zero() || e(1, 1).is_zero() ||
            !e(1, 1).is_constant())
            throw FactorError("not factorable in structure");
        Scalar k = e(1, 1).coeff(0);
        if (s.gain_group == GainGroup::Trivial && !k.is_one())
            throw FactorError("not factorable in structure");
        c.gain = GainScale(k);
        c.base = PolyMatrix::identity();
        Scalar kinv = k.inverse();
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it)
            c.steps.push_back(gamma_step(kinv, *it));
    } else {
        c.gain = GainScale(Scalar(1));
        c.base = e;
        c.steps.assign(peeled.rbegin(), peeled.rend());
    }

    if (!(product(c) == h) || !is_irreducible(c) || !cascade_in_structure(c, s) ||
        !is_order_increasing(c).increasing)
        throw FactorError("not factorable in structure");
    return c;
}

namespace {

// Laurent division: f = q*g + r with r = 0 or order(r) < order(g), cancelling
// from the high end of the support.
std::pair<LaurentPoly, LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly q, r = f;
    const int gord = g.order();
    const Scalar glead_inv = g.coeff(g.hi()).inverse();
    while (!r.is_zero() && r.order() >= gord) {
        LaurentPoly t = LaurentPoly::monomial(r.coeff(r.hi()) * glead_inv, r.hi() - g.hi());
        q += t;
        r -= t * g;
    }
    return {q, r};
}

}  // namespace

Cascade factor_generic(const PolyMatrix& h) {
    if (!is_unimodular(h)) throw PreconditionError("factorization requires a unimodular matrix");

    PolyMatrix e = h;
    std::vector<LiftingStep> steps;  // S_0 first (peeled off the right end)

    // Euclidean reduction of row 0 by column operations.
    while (!e(0, 0).is_zero() && !e(0, 1).is_zero()) {
        if (e(0, 1).order() >= e(0, 0).order()) {
            auto [q, rem] = laurent_divide(e(0, 1), e(0, 0));
            e = e * step_matrix({0, -q});
            steps.push_back({0, q});
        } else {
            auto [q, rem] = laurent_divide(e(0, 0), e(0, 1));
            e = e * step_matrix({1, -q});
            steps.push_back({1, q});
        }
    }
    if (e(0, 0).is_zero()) {
        // Row 0 is [0, u]; route the monomial into the corner.
        e = e * step_matrix({1, LaurentPoly::one()});
        steps.push_back({1, LaurentPoly(Scalar(-1))});
        e = e * step_matrix({0, LaurentPoly(Scalar(-1))});
        steps.push_back({0, LaurentPoly::one()});
    }

    // e = [[u, 0],[p, 1/u]] with u a monomial (det is 1).
    const LaurentPoly u = e(0, 0);
    const LaurentPoly s_low = u * e(1, 0);
    steps.push_back({1, s_low});

    Scalar gain(1);
    auto [n0, n1] = u.support_interval();
    const Scalar a = u.coeff(n0);
    if (n0 == 0) {
        gain = a.inverse();  // diag(a, 1/a) = D_{1/a}
    } else {
        // diag(u, 1/u) = diag(1/w, w) for the monomial w = 1/u; expand it with
        // the same four-step schedule used for constant gains.
        LaurentPoly w = LaurentPoly::monomial(a.inverse(), -n0);
        LaurentPoly one = LaurentPoly::one();
        steps.push_back({0, w * (w - one)});
        steps.push_back({1, u});  // 1/w
        steps.push_back({0, one - w});
        steps.push_back({1, -one});
    }

    Cascade c = reduce_to_irreducible({GainScale(gain), steps, PolyMatrix::identity()});
    if (!(product(c) == h)) throw FactorError("generic factorization failed to reproduce input");
    return c;
}

bool dyadic_lifting_confirmed(const PolyMatrix& b) {
    if (!is_unimodular(b)) return false;
    Cascade c;
    try {
        c = factor_generic(b);
    } catch (const std::exception&) {
        return false;
    }
    const Scalar& k = c.gain.k();
    if (!k.is_dyadic() || !k.inverse().is_dyadic()) return false;
    return std::all_of(c.steps.begin(), c.steps.end(),
                       [](const LiftingStep& st) { return is_dyadic(st.s); });
}

}  // namespace liftkit
