// hcurve: optimal affine reparametrization of rational curves over number
// fields, witness varieties, hypercircles and quadratic fields of conics.
//
// Exit codes: 0 success, 1 FAIL verdict, 2 input error, 3 budget exceeded,
// 4 internal inconsistency.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "hc/error.hpp"
#include "hc/report.hpp"
#include "hc/text.hpp"
#include "hc/tower.hpp"

using namespace hc;

namespace {

struct Timer {
    using Clock = std::chrono::steady_clock;
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

struct Flags {
    bool json_only = false;
    bool timings = false;
    std::size_t budget = 0;
};

GroebnerOptions groebner_options(const Flags& f, const CurveFile* curve) {
    GroebnerOptions o;
    if (curve && curve->budget) o.pair_budget = *curve->budget;
    if (f.budget) o.pair_budget = f.budget;
    return o;
}

void emit(Json j, const Flags& f, const Timer& timer, const std::string& summary) {
    if (f.timings) j["timings"] = {{"total_seconds", timer.seconds()}};
    std::cout << j.dump(2) << "\n";
    if (!f.json_only) std::cerr << summary;
}

int run_reparam(const std::string& path, const Flags& f) {
    Timer timer;
    CurveFile curve = load_curve_file(path);
    ReparamOptions opts;
    opts.groebner = groebner_options(f, &curve);
    if (curve.primitive_cap) opts.primitive_cap = *curve.primitive_cap;
    if (curve.base) throw input_error("reparam needs an extension of Q (no base key)");
    ReparamReport rep = optimal_affine_reparametrize(curve.phi, curve.field, opts);
    Json j = reparam_json(curve, rep);
    std::string summary;
    if (rep.status == ReparamStatus::Fail) {
        summary = "FAIL: the curve is not defined over Q (witness dimension " + std::to_string(rep.witness_dimension) +
                  ")\n";
    } else {
        summary = "success: r = " + std::to_string(rep.r) + ", shift t -> " + j["shift"].get<std::string>() + "\n";
        for (const auto& c : j["reparametrization"]) summary += "  " + c.get<std::string>() + "\n";
    }
    emit(std::move(j), f, timer, summary);
    return rep.status == ReparamStatus::Success ? 0 : 1;
}

int run_witness(const std::string& path, const Flags& f) {
    Timer timer;
    CurveFile curve = load_curve_file(path);
    GroebnerOptions opts = groebner_options(f, &curve);
    Witness w = witness_ideal(curve.phi, curve.field, opts);
    int dim = dimension(w.ideal, opts);
    Json j = witness_json(curve, w, dim);
    std::string summary = "witness ideal (dimension " + std::to_string(dim) + "):\n";
    for (const auto& g : j["witness_ideal"]) summary += "  " + g.get<std::string>() + "\n";
    emit(std::move(j), f, timer, summary);
    return 0;
}

int run_infinity(const std::string& path, const Flags& f) {
    Timer timer;
    CurveFile curve = load_curve_file(path);
    GroebnerOptions opts = groebner_options(f, &curve);
    Witness w = witness_ideal(curve.phi, curve.field, opts);
    auto points = points_at_infinity(w.ideal, curve.field, opts);
    std::optional<SubfieldEmbedding> field;
    if (!points.empty() && !curve.base)
        field = hypercircle_degree_field(points, curve.field, curve.primitive_cap.value_or(64));
    Json j = infinity_json(curve, w.ideal, points, field);
    std::string summary = std::to_string(points.size()) + " point(s) at infinity\n";
    for (const auto& p : j["infinity_points"]) summary += "  " + p.get<std::string>() + "\n";
    emit(std::move(j), f, timer, summary);
    return 0;
}

int run_hypercircle(const std::string& minpoly, const std::string& unit, const Flags& f) {
    Timer timer;
    UPoly m = parse_upoly(minpoly, "x");
    FieldPtr field = make_extension(nullptr, m.coeffs(), "a");
    Fraction u = parse_expression(unit, {"t"}, {{"a", FieldElement::generator(field)}});
    UPoly num = to_upoly(u.num), den = to_upoly(u.den);
    if (num.degree() > 1 || den.degree() > 1) throw input_error("unit must be (a*t + b)/(c*t + d)");
    LinearFraction lf{num.coeff(1), num.coeff(0), den.coeff(1), den.coeff(0)};
    auto psi = unit_to_hypercircle(lf, field);
    ProjectivePoint p = primitive_infinity_point(field);
    Json j = hypercircle_json(field, lf, psi, p);
    std::string summary = "hypercircle components:\n";
    for (const auto& c : j["components"]) summary += "  " + c.get<std::string>() + "\n";
    summary += "primitive point at infinity " + j["primitive_infinity_point"].get<std::string>() + "\n";
    emit(std::move(j), f, timer, summary);
    return 0;
}

Integer parse_integer(const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw input_error("not an integer: " + s);
    return z;
}

int run_conic(const std::string& as, const std::string& bs, const std::string& cs, const std::string& method,
              std::size_t count, const Flags& f) {
    Timer timer;
    Integer a = parse_integer(as), b = parse_integer(bs), c = parse_integer(cs);
    std::vector<Integer> set = method == "prime" ? prime_set(a, b, count) : crt_set(a, b, count);
    auto fields = parametrization_fields(a, b, c, set);
    bool distinct = verify_pairwise_distinct(a, b, set);
    Json j = conic_json(a, b, c, method, fields, distinct);
    std::string summary;
    for (const auto& d : fields)
        summary += "n = " + to_string(d.n) + ": Q(sqrt(" + to_string(d.radicand) + ")) = Q(sqrt(" +
                   to_string(d.canonical) + "))\n";
    summary += distinct ? "fields pairwise distinct\n" : "fields NOT pairwise distinct\n";
    emit(std::move(j), f, timer, summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine reparametrization of rational curves over number fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Flags flags;
    app.add_flag("--json", flags.json_only, "Only write the JSON report (no summary on stderr)");
    app.add_flag("--timings", flags.timings, "Include wall-clock timings in the report");
    app.add_option("--budget", flags.budget, "Groebner S-pair budget")->check(CLI::PositiveNumber);

    std::string file;
    auto* reparam = app.add_subcommand("reparam", "Optimal affine reparametrization of a curve file");
    reparam->add_option("file", file, "Curve file")->required();
    auto* witness = app.add_subcommand("witness", "Witness ideal of a curve file");
    witness->add_option("file", file, "Curve file")->required();
    auto* infinity = app.add_subcommand("infinity", "Points at infinity of the witness variety");
    infinity->add_option("file", file, "Curve file")->required();

    std::string minpoly, unit;
    auto* hyper = app.add_subcommand("hypercircle", "Hypercircle of a unit (a*t + b)/(c*t + d)");
    hyper->add_option("minpoly", minpoly, "Minimal polynomial in x")->required();
    hyper->add_option("unit", unit, "Unit in t and a")->required();

    std::string ca, cb, cc, method = "prime";
    std::size_t count = 4;
    auto* conic = app.add_subcommand("conic-fields", "Quadratic fields of parametrization of a*x^2 + b*y^2 + c");
    conic->add_option("a", ca)->required();
    conic->add_option("b", cb)->required();
    conic->add_option("c", cc)->required();
    conic->add_option("--method", method, "prime or crt")->check(CLI::IsMember({"prime", "crt"}));
    conic->add_option("--count", count, "Number of fields")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*reparam) return run_reparam(file, flags);
        if (*witness) return run_witness(file, flags);
        if (*infinity) return run_infinity(file, flags);
        if (*hyper) return run_hypercircle(minpoly, unit, flags);
        if (*conic) return run_conic(ca, cb, cc, method, count, flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Input: return 2;
            case ErrorKind::Budget: return 3;
            case ErrorKind::Internal: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
