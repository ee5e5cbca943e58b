#include "equitangent/json_io.hpp"

#include <fstream>

namespace equitangent {

namespace {

std::vector<Point2> points_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError(std::string("missing or invalid \"") + key + "\" array");
    std::vector<Point2> pts;
    for (const auto& entry : j[key]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw InputError(std::string("\"") + key + "\" entries must be [x, y]");
        pts.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return pts;
}

std::vector<double> reals_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError(std::string("missing or invalid \"") + key + "\" array");
    std::vector<double> out;
    for (const auto& entry : j[key]) {
        if (!entry.is_number())
            throw InputError(std::string("\"") + key + "\" entries must be numbers");
        out.push_back(entry.get<double>());
    }
    return out;
}

Json points_to_json(const std::vector<Point2>& pts) {
    Json arr = Json::array();
    for (const Point2& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

} // namespace

Json to_json(const Polygon& p) {
    return Json{{"vertices", points_to_json(p.vertices)}};
}

Json to_json(const FramedPolygon& fp) {
    Json j = to_json(fp.polygon);
    j["framing_directions"] = fp.framing_angles;
    return j;
}

Polygon polygon_from_json(const Json& j) {
    return Polygon(points_from_json(j, "vertices"));
}

FramedPolygon framed_polygon_from_json(const Json& j) {
    FramedPolygon fp;
    fp.polygon = polygon_from_json(j);
    fp.framing_angles = reals_from_json(j, "framing_directions");
    if (fp.framing_angles.size() != fp.polygon.size())
        throw InputError("framing_directions length must match vertices");
    return fp;
}

Json to_json(const OrientedChain& chain) {
    return Json{{"centers", points_to_json(chain.centers)},
                {"signed_radii", chain.signed_radii}};
}

OrientedChain chain_from_json(const Json& j) {
    return OrientedChain(points_from_json(j, "centers"),
                         reals_from_json(j, "signed_radii"));
}

Json to_json(const BicentricConfig& cfg) {
    return Json{{"n", cfg.n},
                {"R", cfg.outer_radius},
                {"r", cfg.inner_radius},
                {"d", cfg.center_distance}};
}

BicentricConfig bicentric_from_json(const Json& j) {
    BicentricConfig cfg;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("bicentric config needs integer \"n\"");
    cfg.n = j["n"].get<int>();
    for (const auto& [key, field] :
         {std::pair<const char*, double BicentricConfig::*>{"R", &BicentricConfig::outer_radius},
          {"r", &BicentricConfig::inner_radius},
          {"d", &BicentricConfig::center_distance}}) {
        if (!j.contains(key) || !j[key].is_number())
            throw InputError(std::string("bicentric config needs number \"") + key + "\"");
        cfg.*field = j[key].get<double>();
    }
    return cfg;
}

Json to_json(const RankCertificate& cert, std::size_t n) {
    return Json{{"n", n},
                {"rank", cert.rank},
                {"singular_values", cert.singular_values},
                {"h", cert.h}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace equitangent
