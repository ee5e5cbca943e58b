#include <doctest.h>

#include "equitangent/json_io.hpp"
#include "test_helpers.hpp"

using namespace equitangent;
using namespace equitangent::testing;

TEST_CASE("polygon and framed polygon round trip") {
    const Polygon p({{0, 0}, {2, 0}, {1.5, 1.25}});
    const Polygon back = polygon_from_json(to_json(p));
    CHECK(back.vertices == p.vertices);

    const FramedPolygon fp = compute_framing_odd(p);
    const FramedPolygon fback = framed_polygon_from_json(to_json(fp));
    CHECK(fback.framing_angles == fp.framing_angles);
    CHECK(fback.polygon.vertices == fp.polygon.vertices);
}

TEST_CASE("chain round trip") {
    const OrientedChain chain = worked_four_chain();
    const OrientedChain back = chain_from_json(to_json(chain));
    CHECK(back.centers == chain.centers);
    CHECK(back.signed_radii == chain.signed_radii);
}

TEST_CASE("bicentric config round trip") {
    const BicentricConfig cfg{4, 1.0, 0.5, 0.25};
    const BicentricConfig back = bicentric_from_json(to_json(cfg));
    CHECK(back.n == 4);
    CHECK(back.outer_radius == 1.0);
    CHECK(back.inner_radius == 0.5);
    CHECK(back.center_distance == 0.25);
}

TEST_CASE("malformed documents raise input errors") {
    CHECK_THROWS_AS(polygon_from_json(Json{{"vertices", "nope"}}), InputError);
    CHECK_THROWS_AS(polygon_from_json(Json{{"vertices", Json::array({1, 2})}}),
                    InputError);
    CHECK_THROWS_AS(chain_from_json(Json{{"centers", Json::array()}}), InputError);
    CHECK_THROWS_AS(bicentric_from_json(Json{{"n", 3}, {"R", "x"}}), InputError);
    CHECK_THROWS_AS(framed_polygon_from_json(Json{
                        {"vertices", Json::array({{0.0, 0.0}, {1.0, 0.0}})},
                        {"framing_directions", Json::array({0.1})}}),
                    InputError);
}
