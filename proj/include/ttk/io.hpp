#pragma once

// JSON file formats and report encodings.

#include <string>

#include <json.hpp>

#include "ttk/canonical.hpp"
#include "ttk/fan.hpp"
#include "ttk/holomorphic.hpp"
#include "ttk/klyachko.hpp"
#include "ttk/orbits.hpp"

namespace ttk::io {

using nlohmann::json;

// Parsing throws InputError; messages carry the JSON path or byte offset.
json read_json_file(const std::string& path);
TopologicalFan fan_from_json(const json& j);
KlyachkoData data_from_json(const json& j);
TopologicalFan load_fan(const std::string& path);
KlyachkoData load_data(const std::string& path);

json to_json(const RingElem& mu);
json to_json(const RVector& x);
json to_json(const Simplex& s);
json to_json(const GSubspace& s);
json to_json(const QSubspace& s);
json to_json(const QMatrix& m);

json fan_to_json(const TopologicalFan& fan);
json data_to_json(const KlyachkoData& data);

json to_json(const ValidationReport& rep);
json to_json(const std::vector<OrbitDescriptor>& orbits);
json to_json(const Grading& g);
json to_json(const CompatibilityResult& res);
json to_json(const CharacterMatrix& m);
json to_json(const EulerConeReport& rep);
json to_json(const EulerReport& rep);
json to_json(const ClassicalToricData& data);

void write_json_file(const std::string& path, const json& j);

}  // namespace ttk::io
