#include <doctest.h>

#include <random>

#include "equitangent/flow.hpp"
#include "equitangent/geometry.hpp"
#include "test_helpers.hpp"

using namespace equitangent;

TEST_CASE("angle_between basic rotations") {
    CHECK(angle_between(UnitVector::of({1, 0}), UnitVector::of({0, 1})).value ==
          doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(angle_between(UnitVector::of({0, 1}), UnitVector::of({1, 0})).value ==
          doctest::Approx(3 * kPi / 2).epsilon(1e-15));
    CHECK(angle_between(UnitVector::of({1, 0}), UnitVector::of({1, 0})).value == 0.0);
}

TEST_CASE("angle_between antisymmetry over random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (int i = 0; i < 10000; ++i) {
        const UnitVector a(u(rng)), b(u(rng));
        const double sum = angle_between(a, b).value + angle_between(b, a).value;
        CHECK(std::abs(reduce_angle_signed(sum)) < 1e-12);
    }
}

TEST_CASE("rotate90") {
    CHECK(rotate90({1, 0}).x == 0.0);
    CHECK(rotate90({1, 0}).y == 1.0);
    CHECK(rotate90({0, 1}).x == -1.0);
    CHECK(rotate90({0, 1}).y == 0.0);
    CHECK(rotate90({3, 4}).x == -4.0);
    CHECK(rotate90({3, 4}).y == 3.0);
    const Vec2 v{0.3, -1.7};
    const Vec2 twice = rotate90(rotate90(v));
    CHECK(twice.x == -v.x);
    CHECK(twice.y == -v.y);
}

TEST_CASE("circle through tangent pair: unit circle symmetric cases") {
    const auto a = circle_through_point_pair_tangent_to_directions(
        {1, 0}, UnitVector::of({0, 1}), {-1, 0}, UnitVector::of({0, -1}));
    CHECK(norm(a.circle.center) < 1e-14);
    CHECK(a.circle.radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.rotation_sign == 1);

    const auto b = circle_through_point_pair_tangent_to_directions(
        {1, 0}, UnitVector::of({0, 1}), {0, 1}, UnitVector::of({-1, 0}));
    CHECK(norm(b.circle.center) < 1e-14);
    CHECK(b.circle.radius == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("circle through tangent pair: slanted chord") {
    // Normals at the two points meet at (1, -1); radius sqrt(2).
    const auto oc = circle_through_point_pair_tangent_to_directions(
        {0, 0}, UnitVector(kPi / 4), {2, 0}, UnitVector(-kPi / 4));
    CHECK(oc.circle.center.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(oc.circle.center.y == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(oc.circle.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    const double tangency =
        std::abs(dot(normalized(Point2{2, 0} - oc.circle.center),
                     UnitVector(-kPi / 4).vec()));
    CHECK(tangency < 1e-12);
}

TEST_CASE("circle through tangent pair: random points on random circles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle_u(0.0, kTwoPi);
    std::uniform_real_distribution<double> pos_u(-3.0, 3.0);
    std::uniform_real_distribution<double> rad_u(0.2, 4.0);
    std::uniform_int_distribution<int> coin(0, 1);
    int tested = 0;
    while (tested < 2000) {
        const Point2 c{pos_u(rng), pos_u(rng)};
        const double r = rad_u(rng);
        const double t1 = angle_u(rng), t2 = angle_u(rng);
        if (circular_distance(t1, t2) < 0.05) continue;
        const double sign = coin(rng) ? 1.0 : -1.0;
        const Point2 b1 = c + r * Vec2{std::cos(t1), std::sin(t1)};
        const Point2 b2 = c + r * Vec2{std::cos(t2), std::sin(t2)};
        const UnitVector u1 = UnitVector::of(sign * rotate90(b1 - c));
        const UnitVector u2 = UnitVector::of(sign * rotate90(b2 - c));
        const auto oc =
            circle_through_point_pair_tangent_to_directions(b1, u1, b2, u2);
        CHECK(std::abs(distance(oc.circle.center, b1) -
                       distance(oc.circle.center, b2)) < 1e-10);
        CHECK(std::abs(dot(b1 - oc.circle.center, u1.vec())) < 1e-10 * r);
        CHECK(oc.circle.radius == doctest::Approx(r).epsilon(1e-10));
        CHECK(oc.rotation_sign == (sign > 0 ? 1 : -1));
        ++tested;
    }
}

TEST_CASE("circle through tangent pair: degenerate and violated inputs") {
    // Framing parallel to the chord: the "circle" is a line.
    CHECK_THROWS_AS(circle_through_point_pair_tangent_to_directions(
                        {0, 0}, UnitVector::of({1, 0}), {2, 0},
                        UnitVector::of({1, 0})),
                    DegenerateCircle);
    // Equal-angle condition broken.
    CHECK_THROWS_AS(circle_through_point_pair_tangent_to_directions(
                        {0, 0}, UnitVector(kPi / 4), {2, 0}, UnitVector(kPi / 3)),
                    FramingViolated);
}

TEST_CASE("perpendicular-chord framing gives the diameter circle") {
    const auto oc = circle_through_point_pair_tangent_to_directions(
        {0, 0}, UnitVector::of({0, 1}), {2, 0}, UnitVector::of({0, -1}));
    CHECK(oc.circle.center.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(oc.circle.center.y) < 1e-14);
    CHECK(oc.circle.radius == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("circumcircle and incircle") {
    const Circle c = circumcircle({1, 0}, {0, 1}, {-1, 0});
    CHECK(norm(c.center) < 1e-14);
    CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(circumcircle({0, 0}, {1, 0}, {2, 0}), DegenerateCircle);

    const Circle inc = triangle_incircle({0, 0}, {4, 0}, {0, 3});
    // r = (a + b - c)/2 for a right triangle with legs 4, 3.
    CHECK(inc.radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(inc.center.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(inc.center.y == doctest::Approx(1.0).epsilon(1e-14));
}
