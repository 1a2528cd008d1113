#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "liftkit/lifting.hpp"

namespace liftkit {

enum class Ring { Field, Dyadic };
enum class Symmetry { HSPlus, HSMinus, WA, Unconstrained };

/// Additive group of admissible lifting filters: a symmetry constraint paired
/// with a coefficient ring constraint.
struct FilterGroupSpec {
    Symmetry symmetry = Symmetry::Unconstrained;
    Ring ring = Ring::Field;
    friend bool operator==(const FilterGroupSpec&, const FilterGroupSpec&) = default;
};

enum class BaseSetKind {
    IdentityOnly,
    HaarOnly,
    ConcentricEqualLengthHS,
    ConcentricEqualLengthHSDyadicLiftable,
};

enum class GainGroup { Full, Trivial };

/// A universe of lifting factorizations: gain group, upper and lower lifting
/// filter groups, and a set of base filter banks.
struct GroupLiftingStructure {
    GainGroup gain_group = GainGroup::Full;
    FilterGroupSpec upper;
    FilterGroupSpec lower;
    BaseSetKind bases = BaseSetKind::IdentityOnly;
    std::string name;
};

GroupLiftingStructure preset_ws();             // "ws"
GroupLiftingStructure preset_ws_reversible();  // "ws-reversible"
GroupLiftingStructure preset_hs();             // "hs"
GroupLiftingStructure preset_hs_reversible();  // "hs-reversible"
GroupLiftingStructure preset_elasf();          // "elasf"
std::optional<GroupLiftingStructure> preset_by_name(std::string_view name);

bool filter_in_group(const LaurentPoly& s, const FilterGroupSpec& g);
bool base_in_set(const PolyMatrix& b, BaseSetKind kind);
bool step_in_structure(const LiftingStep& st, const GroupLiftingStructure& s);
bool cascade_in_structure(const Cascade& c, const GroupLiftingStructure& s);

/// Analytic decision: trivial gain groups are always invariant; a full gain
/// group is invariant over the field but not against dyadic filter rings.
bool is_d_invariant(const GroupLiftingStructure& s);

struct OrderIncreasing {
    bool increasing = true;
    int failing_index = -1;  // first n with no strict order increase
};

/// Walks the partial products of an irreducible cascade.  Throws on reducible
/// input.
OrderIncreasing is_order_increasing(const Cascade& c);

struct EquivalenceVerdict {
    enum class Kind { Identical, EquivalentModuloRescaling, Inequivalent };
    Kind kind = Kind::Identical;
    Scalar alpha = Scalar(1);  // meaningful for the first two kinds
    std::string reason;        // first violated condition for Inequivalent
};

/// Decides whether two irreducible cascades are identical, related by the
/// rescaling B' = D_a B, S'_i = gamma_a S_i with a = K/K', or neither.
EquivalenceVerdict equivalent_mod_rescaling(const Cascade& c1, const Cascade& c2);

/// Lowpass DC gain normalization H0(1) = 1.
bool dc_normalized(const PolyMatrix& m);

}  // namespace liftkit
