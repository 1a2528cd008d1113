#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "liftkit/errors.hpp"
#include "liftkit/factorize.hpp"
#include "liftkit/fixtures.hpp"
#include "liftkit/io.hpp"

namespace {

using liftkit::Cascade;
using liftkit::FactorError;
using liftkit::ParseError;
using liftkit::PolyMatrix;
using liftkit::PreconditionError;
using liftkit::Scalar;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNotFactorable = 4;
constexpr int kExitInequivalent = 5;

struct Options {
    bool compact = false;  // --json
    bool pretty = false;   // --pretty
    long seed = 0;
    bool seed_set = false;
};

void emit(const json& report, const Options& opt) {
    if (opt.compact && !opt.pretty)
        std::cout << report.dump() << "\n";
    else
        std::cout << report.dump(2) << "\n";
}

json report_header(const std::string& command, const Options& opt) {
    json j = {{"command", command}};
    if (opt.seed_set) j["seed"] = opt.seed;
    return j;
}

json matrix_report(const PolyMatrix& m) {
    json j;
    j["matrix"] = liftkit::io::matrix_to_json(m);
    j["det"] = liftkit::io::poly_to_json(liftkit::det(m));
    j["matrix_order"] = m.is_zero() ? json(nullptr) : json(liftkit::matrix_order(m));
    j["is_ws"] = liftkit::is_ws(m);
    j["is_hs"] = liftkit::is_hs(m);
    j["dc_normalized"] = liftkit::dc_normalized(m);
    j["pretty"] = m.str();
    return j;
}

int cmd_multiply(const std::string& file, const Options& opt) {
    Cascade c = liftkit::io::cascade_from_json(liftkit::io::load_json_file(file));
    PolyMatrix m = liftkit::product(c);
    json j = report_header("multiply", opt);
    j["product"] = matrix_report(m);
    emit(j, opt);
    return kExitOk;
}

int cmd_reduce(const std::string& file, const Options& opt) {
    Cascade c = liftkit::io::cascade_from_json(liftkit::io::load_json_file(file));
    Cascade r = liftkit::reduce_to_irreducible(c);
    if (!(liftkit::product(r) == liftkit::product(c)))
        throw PreconditionError("reduction changed the product");  // unreachable by construction
    json j = report_header("reduce", opt);
    j["cascade"] = liftkit::io::cascade_to_json(r);
    j["is_irreducible"] = liftkit::is_irreducible(r);
    j["steps_before"] = c.steps.size();
    j["steps_after"] = r.steps.size();
    emit(j, opt);
    return kExitOk;
}

int cmd_factor(const std::string& file, const std::optional<std::string>& structure,
               const Options& opt) {
    PolyMatrix h = liftkit::io::matrix_from_json(liftkit::io::load_json_file(file));
    json j = report_header("factor", opt);
    Cascade c;
    if (structure) {
        auto s = liftkit::io::structure_from_json(json(*structure));
        std::vector<liftkit::PeelReport> trace;
        try {
            c = liftkit::factor_in_structure(h, s, &trace);
        } catch (const PreconditionError& e) {
            // A WS/HS symmetry mismatch means h has no factorization in this
            // structure; report it as not-factorable rather than misuse.
            if (std::string(e.what()).find("structure requires") != std::string::npos) {
                j["error"] = e.what();
                j["verdict"] = "not factorable in structure";
                emit(j, opt);
                return kExitNotFactorable;
            }
            throw;
        } catch (const FactorError& e) {
            j["error"] = e.what();
            j["verdict"] = "not factorable in structure";
            emit(j, opt);
            return kExitNotFactorable;
        }
        j["structure"] = liftkit::io::structure_to_json(s);
        json peels = json::array();
        for (const auto& rep : trace)
            peels.push_back({{"step", liftkit::io::step_to_json(rep.step)},
                             {"order_before", rep.order_before},
                             {"order_after", rep.order_after}});
        j["peels"] = std::move(peels);
        j["verification"] = {
            {"in_structure", liftkit::cascade_in_structure(c, s)},
            {"is_irreducible", liftkit::is_irreducible(c)},
            {"is_order_increasing", liftkit::is_order_increasing(c).increasing},
            {"product_matches", liftkit::product(c) == h},
        };
    } else {
        c = liftkit::factor_generic(h);
        j["verification"] = {
            {"is_irreducible", liftkit::is_irreducible(c)},
            {"product_matches", liftkit::product(c) == h},
        };
    }
    j["cascade"] = liftkit::io::cascade_to_json(c);
    emit(j, opt);
    return kExitOk;
}

int cmd_check(const std::string& file, const std::optional<std::string>& structure,
              const Options& opt) {
    Cascade c = liftkit::io::cascade_from_json(liftkit::io::load_json_file(file));
    json j = report_header("check", opt);
    const bool irreducible = liftkit::is_irreducible(c);
    j["is_irreducible"] = irreducible;
    if (irreducible) {
        auto oi = liftkit::is_order_increasing(c);
        j["is_order_increasing"] = oi.increasing;
        if (!oi.increasing) j["order_increasing_failing_index"] = oi.failing_index;
    } else {
        j["is_order_increasing"] = nullptr;  // defined on irreducible cascades only
    }
    if (structure) {
        auto s = liftkit::io::structure_from_json(json(*structure));
        j["structure"] = liftkit::io::structure_to_json(s);
        j["in_structure"] = liftkit::cascade_in_structure(c, s);
        j["structure_is_d_invariant"] = liftkit::is_d_invariant(s);
    }
    emit(j, opt);
    return kExitOk;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, bool reduce,
              const Options& opt) {
    Cascade a = liftkit::io::cascade_from_json(liftkit::io::load_json_file(file_a));
    Cascade b = liftkit::io::cascade_from_json(liftkit::io::load_json_file(file_b));
    if (reduce) {
        a = liftkit::reduce_to_irreducible(a);
        b = liftkit::reduce_to_irreducible(b);
    }
    auto v = liftkit::equivalent_mod_rescaling(a, b);
    json j = report_header("equiv", opt);
    switch (v.kind) {
        case liftkit::EquivalenceVerdict::Kind::Identical:
            j["verdict"] = "identical";
            j["alpha"] = v.alpha.str();
            emit(j, opt);
            return kExitOk;
        case liftkit::EquivalenceVerdict::Kind::EquivalentModuloRescaling:
            j["verdict"] = "equivalent-modulo-rescaling";
            j["alpha"] = v.alpha.str();
            emit(j, opt);
            return kExitOk;
        case liftkit::EquivalenceVerdict::Kind::Inequivalent:
            j["verdict"] = "inequivalent";
            j["reason"] = v.reason;
            emit(j, opt);
            return kExitInequivalent;
    }
    return kExitInequivalent;
}

json cascade_doc(const Cascade& c) { return liftkit::io::cascade_to_json(c); }

json example_doc(const std::string& name, const Scalar& b, const Scalar& c) {
    namespace fx = liftkit::fixtures;
    json j = {{"name", name}};
    if (name == "haar") {
        j["cascade"] = cascade_doc(fx::haar_cascade());
        j["matrix"] = liftkit::io::matrix_to_json(PolyMatrix::haar());
    } else if (name == "haar-alt") {
        j["cascade"] = cascade_doc(fx::haar_alt_cascade());
        j["matrix"] = liftkit::io::matrix_to_json(PolyMatrix::haar());
    } else if (name == "identity-lift-8") {
        j["cascade"] = cascade_doc(fx::identity_lift8());
        j["matrix"] = "identity";
    } else if (name == "identity-lift-6") {
        j["cascade"] = cascade_doc(fx::identity_lift6());
        j["matrix"] = "identity";
    } else if (name == "example1") {
        auto ex = fx::example1(b, c);
        j["b"] = b.str();
        j["c"] = c.str();
        j["matrix"] = liftkit::io::matrix_to_json(ex.h);
        j["cascades"] = {{"A", cascade_doc(ex.a)}, {"B", cascade_doc(ex.b)}};
    } else if (name == "cdf75") {
        auto fx75 = fx::cdf75();
        j["lhs"] = liftkit::io::matrix_to_json(fx75.lhs);
        j["rhs"] = cascade_doc(fx75.rhs);
    } else if (name == "legall") {
        j["cascade"] = cascade_doc(fx::legall_cascade());
        j["matrix"] = liftkit::io::matrix_to_json(fx::legall_matrix());
    } else if (name == "example7") {
        j["cascade"] = cascade_doc(fx::example7_cascade());
        j["partial_product_0"] = liftkit::io::matrix_to_json(fx::example7_partial0());
    } else if (name == "ws-one-step") {
        j["cascade"] = cascade_doc(fx::ws_one_step_cascade());
        j["matrix"] = liftkit::io::matrix_to_json(liftkit::product(fx::ws_one_step_cascade()));
    } else {
        throw ParseError("unknown example \"" + name + "\"");
    }
    return j;
}

int cmd_examples(const std::optional<std::string>& name, const std::string& b_text,
                 const std::string& c_text, const Options& opt) {
    json j = report_header("examples", opt);
    Scalar b = Scalar::parse(b_text), c = Scalar::parse(c_text);
    if (!name) {
        j["examples"] = liftkit::fixtures::names();
    } else {
        j["example"] = example_doc(*name, b, c);
    }
    emit(j, opt);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liftkit: exact lifting-factorization algebra for two-channel filter banks"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand

    Options opt;
    app.add_flag("--json", opt.compact, "compact JSON output");
    app.add_flag("--pretty", opt.pretty, "pretty-printed JSON output (default)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "seed echoed into reports");

    std::string file, file_b, structure, ex_b = "2", ex_c = "3";
    std::optional<std::string> structure_arg, name_arg;
    bool reduce_flag = false;

    auto* multiply = app.add_subcommand("multiply", "multiply out a cascade document");
    multiply->add_option("file", file, "cascade JSON file")->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a cascade to irreducible form");
    reduce->add_option("file", file, "cascade JSON file")->required();

    auto* factor = app.add_subcommand("factor", "factor a matrix into lifting steps");
    factor->add_option("file", file, "matrix JSON file")->required();
    factor->add_option("--structure", structure, "structure preset name or JSON");

    auto* check = app.add_subcommand("check", "check cascade properties");
    check->add_option("file", file, "cascade JSON file")->required();
    check->add_option("--structure", structure, "structure preset name or JSON");

    auto* equiv = app.add_subcommand("equiv", "compare two cascades modulo rescaling");
    equiv->add_option("fileA", file, "first cascade JSON file")->required();
    equiv->add_option("fileB", file_b, "second cascade JSON file")->required();
    equiv->add_flag("--reduce", reduce_flag, "auto-reduce before comparing");

    std::string ex_name;
    auto* examples = app.add_subcommand("examples", "list or emit built-in documents");
    auto* name_opt = examples->add_option("name", ex_name, "example name");
    examples->add_option("--b", ex_b, "example1 parameter b (scalar string)");
    examples->add_option("--c", ex_c, "example1 parameter c (scalar string)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }
    opt.seed_set = seed_opt->count() > 0;
    if (factor->count_all() && factor->get_option("--structure")->count()) structure_arg = structure;
    if (check->count_all() && check->get_option("--structure")->count()) structure_arg = structure;
    if (name_opt->count() > 0) name_arg = ex_name;

    try {
        if (*multiply) return cmd_multiply(file, opt);
        if (*reduce) return cmd_reduce(file, opt);
        if (*factor) return cmd_factor(file, structure_arg, opt);
        if (*check) return cmd_check(file, structure_arg, opt);
        if (*equiv) return cmd_equiv(file, file_b, reduce_flag, opt);
        if (*examples) return cmd_examples(name_arg, ex_b, ex_c, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const FactorError& e) {
        std::cerr << "factorization error: " << e.what() << "\n";
        return kExitNotFactorable;
    }
    return kExitParse;
}
