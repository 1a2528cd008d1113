#include "liftkit/io.hpp"

#include <fstream>
#include <sstream>

#include "liftkit/errors.hpp"

namespace liftkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

void expect_object(const json& j, const char* what) {
    if (!j.is_object()) bad(std::string(what) + ": expected a JSON object");
}

const json& field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

Scalar scalar_from_json(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + ": scalar must be a string");
    return Scalar::parse(j.get<std::string>());
}

}  // namespace

json poly_to_json(const LaurentPoly& f) {
    json c = json::array();
    for (const Scalar& x : f.coeffs()) c.push_back(x.str());
    return {{"lo", f.is_zero() ? 0 : f.offset()}, {"c", std::move(c)}};
}

LaurentPoly poly_from_json(const json& j) {
    expect_object(j, "polynomial");
    const json& lo = field(j, "lo", "polynomial");
    const json& c = field(j, "c", "polynomial");
    if (!lo.is_number_integer()) bad("polynomial: \"lo\" must be an integer");
    if (!c.is_array()) bad("polynomial: \"c\" must be an array");
    std::vector<Scalar> coeffs;
    coeffs.reserve(c.size());
    for (const json& x : c) coeffs.push_back(scalar_from_json(x, "polynomial coefficient"));
    return LaurentPoly(lo.get<int>(), std::move(coeffs));
}

json matrix_to_json(const PolyMatrix& m) {
    return json::array({json::array({poly_to_json(m(0, 0)), poly_to_json(m(0, 1))}),
                        json::array({poly_to_json(m(1, 0)), poly_to_json(m(1, 1))})});
}

PolyMatrix matrix_from_json(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "identity") return PolyMatrix::identity();
        if (name == "haar") return PolyMatrix::haar();
        if (name == "lazy-causal") return PolyMatrix::lazy_causal();
        bad("matrix: unknown named constant \"" + name + "\"");
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        bad("matrix: expected a 2x2 array of polynomials or a named constant");
    return {poly_from_json(j[0][0]), poly_from_json(j[0][1]), poly_from_json(j[1][0]),
            poly_from_json(j[1][1])};
}

json step_to_json(const LiftingStep& st) {
    return {{"m", st.m}, {"s", poly_to_json(st.s)}};
}

LiftingStep step_from_json(const json& j) {
    expect_object(j, "lifting step");
    const json& m = field(j, "m", "lifting step");
    if (!m.is_number_integer() || (m.get<int>() != 0 && m.get<int>() != 1))
        bad("lifting step: \"m\" must be 0 or 1");
    return {m.get<int>(), poly_from_json(field(j, "s", "lifting step"))};
}

json cascade_to_json(const Cascade& c) {
    json steps = json::array();
    for (const auto& st : c.steps) steps.push_back(step_to_json(st));
    json base = c.base == PolyMatrix::identity() ? json("identity") : matrix_to_json(c.base);
    return {{"version", "1"},
            {"gain", c.gain.k().str()},
            {"steps", std::move(steps)},
            {"base", std::move(base)}};
}

Cascade cascade_from_json(const json& j) {
    expect_object(j, "cascade");
    if (j.contains("version") && j["version"] != json("1"))
        bad("cascade: unsupported document version");
    Cascade c;
    try {
        c.gain = GainScale(scalar_from_json(field(j, "gain", "cascade"), "cascade gain"));
    } catch (const PreconditionError& e) {
        bad(std::string("cascade: ") + e.what());
    }
    const json& steps = field(j, "steps", "cascade");
    if (!steps.is_array()) bad("cascade: \"steps\" must be an array");
    for (const json& st : steps) c.steps.push_back(step_from_json(st));
    c.base = matrix_from_json(field(j, "base", "cascade"));
    return c;
}

namespace {

std::string gain_group_name(GainGroup g) { return g == GainGroup::Full ? "full" : "trivial"; }

std::string symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::HSPlus: return "hs+";
        case Symmetry::HSMinus: return "hs-";
        case Symmetry::WA: return "wa";
        case Symmetry::Unconstrained: return "unconstrained";
    }
    return "unconstrained";
}

std::string ring_name(Ring r) { return r == Ring::Field ? "field" : "dyadic"; }

std::string bases_name(BaseSetKind b) {
    switch (b) {
        case BaseSetKind::IdentityOnly: return "identity-only";
        case BaseSetKind::HaarOnly: return "haar-only";
        case BaseSetKind::ConcentricEqualLengthHS: return "concentric-equal-length-hs";
        case BaseSetKind::ConcentricEqualLengthHSDyadicLiftable:
            return "concentric-equal-length-hs-dyadic-liftable";
    }
    return "identity-only";
}

json group_to_json(const FilterGroupSpec& g) {
    return {{"symmetry", symmetry_name(g.symmetry)}, {"ring", ring_name(g.ring)}};
}

FilterGroupSpec group_from_json(const json& j) {
    expect_object(j, "filter group");
    const json& sym = field(j, "symmetry", "filter group");
    const json& ring = field(j, "ring", "filter group");
    if (!sym.is_string() || !ring.is_string()) bad("filter group: fields must be strings");
    FilterGroupSpec g;
    const std::string s = sym.get<std::string>();
    if (s == "hs+") g.symmetry = Symmetry::HSPlus;
    else if (s == "hs-") g.symmetry = Symmetry::HSMinus;
    else if (s == "wa") g.symmetry = Symmetry::WA;
    else if (s == "unconstrained") g.symmetry = Symmetry::Unconstrained;
    else bad("filter group: unknown symmetry \"" + s + "\"");
    const std::string r = ring.get<std::string>();
    if (r == "field") g.ring = Ring::Field;
    else if (r == "dyadic") g.ring = Ring::Dyadic;
    else bad("filter group: unknown ring \"" + r + "\"");
    return g;
}

}  // namespace

json structure_to_json(const GroupLiftingStructure& s) {
    json j = {{"gain_group", gain_group_name(s.gain_group)},
              {"upper", group_to_json(s.upper)},
              {"lower", group_to_json(s.lower)},
              {"bases", bases_name(s.bases)}};
    if (!s.name.empty()) j["name"] = s.name;
    return j;
}

GroupLiftingStructure structure_from_json(const json& j) {
    if (j.is_string()) {
        auto preset = preset_by_name(j.get<std::string>());
        if (!preset) bad("structure: unknown preset \"" + j.get<std::string>() + "\"");
        return *preset;
    }
    expect_object(j, "structure");
    GroupLiftingStructure s;
    const json& gg = field(j, "gain_group", "structure");
    if (gg == json("full")) s.gain_group = GainGroup::Full;
    else if (gg == json("trivial")) s.gain_group = GainGroup::Trivial;
    else bad("structure: gain_group must be \"full\" or \"trivial\"");
    s.upper = group_from_json(field(j, "upper", "structure"));
    s.lower = group_from_json(field(j, "lower", "structure"));
    const json& b = field(j, "bases", "structure");
    if (!b.is_string()) bad("structure: \"bases\" must be a string");
    const std::string bn = b.get<std::string>();
    if (bn == "identity-only") s.bases = BaseSetKind::IdentityOnly;
    else if (bn == "haar-only") s.bases = BaseSetKind::HaarOnly;
    else if (bn == "concentric-equal-length-hs") s.bases = BaseSetKind::ConcentricEqualLengthHS;
    else if (bn == "concentric-equal-length-hs-dyadic-liftable")
        s.bases = BaseSetKind::ConcentricEqualLengthHSDyadicLiftable;
    else bad("structure: unknown base set \"" + bn + "\"");
    if (j.contains("name") && j["name"].is_string()) s.name = j["name"].get<std::string>();
    return s;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("invalid JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

}  // namespace liftkit::io
