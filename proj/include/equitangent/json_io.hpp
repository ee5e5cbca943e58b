#ifndef EQUITANGENT_JSON_IO_HPP
#define EQUITANGENT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "equitangent/circle_chain.hpp"
#include "equitangent/chain_distribution.hpp"
#include "equitangent/flow.hpp"
#include "equitangent/framed_polygon.hpp"

namespace equitangent {

using Json = nlohmann::json;

// Polygon / FramedPolygon: {"vertices": [[x, y], ...],
//                           "framing_directions": [alpha, ...] (optional)}
Json to_json(const Polygon& p);
Json to_json(const FramedPolygon& fp);
Polygon polygon_from_json(const Json& j);
FramedPolygon framed_polygon_from_json(const Json& j);

// OrientedChain: {"centers": [[x, y], ...], "signed_radii": [r, ...]}
Json to_json(const OrientedChain& chain);
OrientedChain chain_from_json(const Json& j);

// BicentricConfig: {"n": n, "R": R, "r": r, "d": d}
Json to_json(const BicentricConfig& cfg);
BicentricConfig bicentric_from_json(const Json& j);

// Rank report: {"n": n, "rank": rank, "singular_values": [...], "h": h}
Json to_json(const RankCertificate& cert, std::size_t n);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace equitangent

#endif // EQUITANGENT_JSON_IO_HPP
