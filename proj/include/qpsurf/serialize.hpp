#pragma once

// JSON documents: triangulation.v1, quiver.v1, potential.v1.

#include <json.hpp>

#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

using Json = nlohmann::ordered_json;

Json to_json(const IdealTriangulation& t);
/// Throws std::invalid_argument on schema violations.
IdealTriangulation triangulation_from_json(const Json& j);

/// Embedded quivers carry {rank, triangulation}; reading them back rebuilds the embedding
/// and checks that the arrows agree.
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json to_json(const Potential& w);
Potential potential_from_json(const Json& j);

}  // namespace qpsurf
