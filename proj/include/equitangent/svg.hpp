#ifndef EQUITANGENT_SVG_HPP
#define EQUITANGENT_SVG_HPP

#include <string>
#include <vector>

#include "equitangent/constructions.hpp"
#include "equitangent/geometry.hpp"

namespace equitangent {

/// Minimal SVG writer for polygon families, circles and arc curves.
/// Geometry is collected in mathematical coordinates (y up) and the emitted
/// document flips the axis.
class SvgWriter {
  public:
    void add_polyline(const std::vector<Point2>& pts, bool closed,
                      const std::string& stroke = "black",
                      double stroke_width = 0.01);
    void add_circle(const Circle& c, const std::string& stroke = "black",
                    double stroke_width = 0.01);
    void add_curve(const PiecewiseCircularCurve& curve,
                   const std::string& stroke = "black",
                   double stroke_width = 0.01);
    void add_point(const Point2& p, double radius = 0.02,
                   const std::string& fill = "black");

    std::string str() const;
    void save(const std::string& path) const;

  private:
    void grow(const Point2& p, double pad);

    std::vector<std::string> elements_;
    double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
    bool touched_ = false;
};

} // namespace equitangent

#endif // EQUITANGENT_SVG_HPP
