#pragma once
#include <string>

#include "birsphere/eta.hpp"
#include "birsphere/involution.hpp"
#include "birsphere/picard.hpp"
#include "json.hpp"

namespace bs {

using Json = nlohmann::json;

Json to_json(const ProjMat& a);
Json to_json(const BaseMobius& m);
Json to_json(const SphereMap& g);
Json to_json(const HyperellipticModel& m);
Json to_json(const RealAlgebraic& x);
Json to_json(const H2Class& c);
Json to_json(const SpherePoint& p);

// {"fiber": [[..],[..]], "base": "id" | "neg" | {"interval_t": t} | {"interval_b": b}
// | {"involution_b": b}} or {"builtin": name}. Throws ParseError.
SphereMap sphere_map_from_json(const Json& j);
HyperellipticModel model_from_json(const Json& j);

// A file holding JSON, inline JSON, "builtin:<name>", a builtin name, or a
// matrix with trivial base action.
SphereMap read_element(const std::string& arg);

// "w,x,y,z" in the scalar grammar.
SpherePoint parse_sphere_point(const std::string& s);

// Family report: "1".."8", "linear-stratum" or "out-of-scope", with moduli,
// certificates and caveats. Accepts "dp4:<name>" and "dp2:geiser" as lattice data.
Json classify_report(const std::string& input, int max_order = 24);
Json classify_report(const SphereMap& g, int max_order = 24);

// Conjugacy of two prime-order elements. "conjugate" is decided with base
// maps allowed; "fiberwise" only by fiber matrices in G. Throws Undecided.
Json conj_report(const SphereMap& a, const SphereMap& b, int max_order = 24);

}  // namespace bs
