#pragma once

// JSON reports for the command-line tool. Keys keep insertion order so the
// output is byte-stable for identical inputs.

#include <json.hpp>

#include "hc/curve_file.hpp"
#include "hc/hypercircle.hpp"
#include "hc/quadfields.hpp"
#include "hc/reparam.hpp"

namespace hc {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z);
std::string render(const ProjectivePoint& p);
std::vector<std::string> render_ideal(const Ideal& ideal);

Json reparam_json(const CurveFile& curve, const ReparamReport& rep);
Json witness_json(const CurveFile& curve, const Witness& w, int dimension);
Json infinity_json(const CurveFile& curve, const Ideal& witness, const std::vector<ProjectivePoint>& points,
                   const std::optional<SubfieldEmbedding>& field);
Json hypercircle_json(const FieldPtr& field, const LinearFraction& unit, const std::vector<RatFunc>& psi,
                      const ProjectivePoint& primitive);
Json conic_json(const Integer& a, const Integer& b, const Integer& c, const std::string& method,
                const std::vector<FieldDescriptor>& fields, bool distinct);

}  // namespace hc
