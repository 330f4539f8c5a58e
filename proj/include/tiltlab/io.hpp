#pragma once

// JSON boundary. Vertices and arrow keys are 1-based; census positions in
// lists of module classes are 0-based indices into the census array.

#include <string>

#include "json.hpp"
#include "tiltlab/bijectlab.hpp"
#include "tiltlab/census.hpp"

namespace tiltlab {

using Json = nlohmann::ordered_json;

// {"vertices": n, "arrows": [[s, t], ...]}. Throws InputError("bad-json").
Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);
Quiver read_quiver_file(const std::string& path);

// {"dims": [...], "mats": {"1": [[row], ...], ...}}
Json representation_to_json(const Representation& m);
Representation representation_from_json(const Json& j, const Quiver& q, Scalar p);

Json census_to_json(const Census& c);
Json class_to_json(const ModuleClass& mc);
Json check_to_json(const Check& k);
Json report_to_json(const Report& r);

// {"error": code, "witness": [...], "message": ...}
Json diagnostic_json(const std::string& code, const std::string& message, const std::vector<int>& witness);

}  // namespace tiltlab
