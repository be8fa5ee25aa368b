#include "hc/report.hpp"

#include "hc/text.hpp"

namespace hc {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(to_string(z));
}

std::string render(const ProjectivePoint& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += " : ";
        s += render(p.coords[i]);
    }
    return s + "]";
}

std::vector<std::string> render_ideal(const Ideal& ideal) {
    std::vector<std::string> out;
    for (const auto& g : ideal.gens) out.push_back(render(g, descent_vars(ideal.arity)));
    return out;
}

namespace {

Json field_json(const CurveFile& curve) {
    Json j;
    if (curve.base) j["base_minpoly"] = render(UPoly(curve.base->minpoly()), "x");
    j["minpoly"] = render(UPoly(curve.field->minpoly()), "x");
    return j;
}

Json components_json(const std::vector<RatFunc>& comps) {
    Json j = Json::array();
    for (const auto& c : comps) j.push_back(render(c, "t"));
    return j;
}

Json points_json(const std::vector<ProjectivePoint>& points) {
    Json j = Json::array();
    for (const auto& p : points) j.push_back(render(p));
    return j;
}

Json elements_json(const std::vector<FieldElement>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(render(x));
    return j;
}

const char* path_name(ReparamPath p) {
    switch (p) {
        case ReparamPath::RationalInput: return "rational-input";
        case ReparamPath::Zero: return "zero-dimensional";
        case ReparamPath::Full: return "full-degree";
        case ReparamPath::Rational: return "rational-line";
        case ReparamPath::Tower: return "tower";
    }
    return "";
}

}  // namespace

Json reparam_json(const CurveFile& curve, const ReparamReport& rep) {
    Json j;
    j["command"] = "reparam";
    j["status"] = rep.status == ReparamStatus::Success ? "success" : "fail";
    j["path"] = path_name(rep.path);
    j["field"] = field_json(curve);
    j["input"] = components_json(curve.components);
    if (rep.path != ReparamPath::RationalInput) {
        j["witness_ideal"] = render_ideal(rep.witness);
        j["witness_dimension"] = rep.witness_dimension;
        j["infinity_points"] = points_json(rep.infinity_points);
    }
    if (rep.status == ReparamStatus::Fail) return j;
    j["r"] = rep.r;
    j["gamma_minpoly"] = render(rep.gamma->gamma_minpoly, "x");
    j["gamma_in_alpha"] = render(rep.gamma->gamma_in_alpha);
    if (rep.relative_minpoly) j["relative_minpoly"] = render(*rep.relative_minpoly, "x");
    if (rep.path == ReparamPath::Tower) j["second_witness_ideal"] = render_ideal(rep.second_witness);
    if (rep.line) {
        Json line;
        std::vector<std::string> forms;
        for (const auto& f : rep.line_forms) forms.push_back(render(f, descent_vars(f.arity())));
        line["linear_part"] = forms;
        line["point"] = elements_json(rep.line->point);
        line["direction"] = elements_json(rep.line->direction);
        j["line"] = line;
    }
    const AffineShift& s = *rep.shift;
    if (rep.tower)
        j["shift"] = render(UPoly{rep.tower->to_tower(s.b), rep.tower->to_tower(s.a)}, "t");
    else
        j["shift"] = render(UPoly{s.b, s.a}, "t");
    j["shift_in_alpha"] = render(UPoly{s.b, s.a}, "t");
    j["reparametrization"] = components_json(rep.reparametrized);
    return j;
}

Json witness_json(const CurveFile& curve, const Witness& w, int dimension) {
    Json j;
    j["command"] = "witness";
    j["field"] = field_json(curve);
    const unsigned n = curve.field->degree();
    j["delta"] = render(w.descent.delta, descent_vars(n));
    Json comps = Json::array();
    for (const auto& row : w.descent.F) {
        Json r = Json::array();
        for (const auto& f : row) r.push_back(render(f, descent_vars(n)));
        comps.push_back(r);
    }
    j["components"] = comps;
    j["witness_ideal"] = render_ideal(w.ideal);
    j["dimension"] = dimension;
    return j;
}

Json infinity_json(const CurveFile& curve, const Ideal& witness, const std::vector<ProjectivePoint>& points,
                   const std::optional<SubfieldEmbedding>& field) {
    Json j;
    j["command"] = "infinity";
    j["field"] = field_json(curve);
    j["witness_ideal"] = render_ideal(witness);
    j["infinity_points"] = points_json(points);
    if (field) {
        j["r"] = field->degree();
        j["gamma_minpoly"] = render(field->gamma_minpoly, "x");
        j["gamma_in_alpha"] = render(field->gamma_in_alpha);
    }
    return j;
}

Json hypercircle_json(const FieldPtr& field, const LinearFraction& unit, const std::vector<RatFunc>& psi,
                      const ProjectivePoint& primitive) {
    Json j;
    j["command"] = "hypercircle";
    j["minpoly"] = render(UPoly(field->minpoly()), "x");
    MPoly t = MPoly::variable(1, 0);
    j["unit"] = render(unit.a * t + MPoly::constant(1, unit.b), unit.c * t + MPoly::constant(1, unit.d), {"t"});
    j["components"] = components_json(psi);
    j["primitive_infinity_point"] = render(primitive);
    return j;
}

Json conic_json(const Integer& a, const Integer& b, const Integer& c, const std::string& method,
                const std::vector<FieldDescriptor>& fields, bool distinct) {
    Json j;
    j["command"] = "conic-fields";
    j["conic"] = {{"a", integer_json(a)}, {"b", integer_json(b)}, {"c", integer_json(c)}};
    j["method"] = method;
    Json set = Json::array(), list = Json::array();
    for (const auto& f : fields) {
        set.push_back(integer_json(f.n));
        list.push_back({{"n", integer_json(f.n)}, {"radicand", to_string(f.radicand)},
                        {"canonical", integer_json(f.canonical)}});
    }
    j["set"] = set;
    j["fields"] = list;
    j["pairwise_distinct"] = distinct;
    return j;
}

}  // namespace hc
