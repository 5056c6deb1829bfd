#pragma once

#include <json.hpp>

#include <string>

#include "quasiq/algebra.hpp"
#include "quasiq/presets.hpp"

namespace quasiq::io {

using json = nlohmann::json;

// Scalars: canonical object form { "order": N, "coeffs": ["p/q", ...] };
// input also accepts integers and shorthand strings ("1", "-1", "i", "-i",
// rationals, "zN^k").
json scalar_to_json(const Cyclotomic& c);
Cyclotomic scalar_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json cocycle_to_json(const Cochain3& phi);
Cochain3 cocycle_from_json(const json& j);

json cochain2_to_json(const Cochain2& f);
Cochain2 cochain2_from_json(const json& j);

json collection_to_json(const AdmissibleCollection& coll);
AdmissibleCollection collection_from_json(const json& j);

json bimodule_to_json(const MajidBimodule& m);
MajidBimodule bimodule_from_json(const json& j);

json quiver_to_json(const HopfQuiver& q);

// Resolution helpers shared by the CLI: preset name or file path.
FiniteGroup load_group(const std::string& ref);
Cochain3 load_cocycle(const std::string& ref);
Cochain2 load_gauge(const std::string& ref);  // file only
AdmissibleCollection load_collection(const std::string& ref);
MajidBimodule load_bimodule_tables(const std::string& ref);

json read_json_file(const std::string& path);

}  // namespace quasiq::io
