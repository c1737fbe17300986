#pragma once

// JSON shapes shared by the C API and the CLI.

#include "cotop/golomb.hpp"
#include "cotop/oracle.hpp"
#include "cotop/perset.hpp"
#include "cotop/primefam.hpp"
#include "cotop/topology.hpp"

#include <json.hpp>

namespace cotop::json_io {

using nlohmann::ordered_json;

/// {"m":..., "residues":[...], "added":[...], "removed":[...]}
ordered_json to_json(const EPSet& s);
EPSet set_from_json(const ordered_json& j);

ordered_json to_json(const topo::ClassifyReport& r);
/// {"family":..., "rows":[{"n":..., "witness":...|null, "bound":...}]}
ordered_json to_json(const primefam::WitnessTable& t);
ordered_json to_json(const golomb::CoarsenessReport& r);
ordered_json to_json(const oracle::OracleVerdict& v);
ordered_json to_json(const primefam::ChainReport& r);

}  // namespace cotop::json_io
