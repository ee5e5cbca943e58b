#include "equitangent/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace equitangent {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void SvgWriter::grow(const Point2& p, double pad) {
    if (!touched_) {
        min_x_ = p.x - pad;
        max_x_ = p.x + pad;
        min_y_ = p.y - pad;
        max_y_ = p.y + pad;
        touched_ = true;
        return;
    }
    min_x_ = std::min(min_x_, p.x - pad);
    max_x_ = std::max(max_x_, p.x + pad);
    min_y_ = std::min(min_y_, p.y - pad);
    max_y_ = std::max(max_y_, p.y + pad);
}

void SvgWriter::add_polyline(const std::vector<Point2>& pts, bool closed,
                             const std::string& stroke, double stroke_width) {
    if (pts.empty()) return;
    std::ostringstream el;
    el << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (const Point2& p : pts) {
        el << fmt(p.x) << ',' << fmt(-p.y) << ' ';
        grow(p, stroke_width);
    }
    el << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
       << fmt(stroke_width) << "\"/>";
    elements_.push_back(el.str());
}

void SvgWriter::add_circle(const Circle& c, const std::string& stroke,
                           double stroke_width) {
    std::ostringstream el;
    el << "<circle cx=\"" << fmt(c.center.x) << "\" cy=\"" << fmt(-c.center.y)
       << "\" r=\"" << fmt(c.radius) << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"" << fmt(stroke_width) << "\"/>";
    grow(c.center, c.radius + stroke_width);
    elements_.push_back(el.str());
}

void SvgWriter::add_curve(const PiecewiseCircularCurve& curve,
                          const std::string& stroke, double stroke_width) {
    if (curve.arcs.empty()) return;
    std::ostringstream el;
    const Point2 start = curve.arcs.front().start_point();
    el << "<path d=\"M " << fmt(start.x) << ' ' << fmt(-start.y);
    for (const Arc& a : curve.arcs) {
        const Point2 end = a.end_point();
        const int large = a.extent > kPi ? 1 : 0;
        // Counterclockwise in math coordinates = sweep 0 after the y flip.
        el << " A " << fmt(a.radius) << ' ' << fmt(a.radius) << " 0 " << large
           << " 0 " << fmt(end.x) << ' ' << fmt(-end.y);
        grow(a.center, a.radius + stroke_width);
    }
    el << " Z\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
       << fmt(stroke_width) << "\"/>";
    elements_.push_back(el.str());
}

void SvgWriter::add_point(const Point2& p, double radius, const std::string& fill) {
    std::ostringstream el;
    el << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(-p.y) << "\" r=\""
       << fmt(radius) << "\" fill=\"" << fill << "\"/>";
    grow(p, radius);
    elements_.push_back(el.str());
}

std::string SvgWriter::str() const {
    std::ostringstream out;
    const double w = touched_ ? max_x_ - min_x_ : 1.0;
    const double h = touched_ ? max_y_ - min_y_ : 1.0;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << fmt(min_x_) << ' ' << fmt(-max_y_) << ' ' << fmt(w) << ' ' << fmt(h)
        << "\">\n";
    for (const std::string& el : elements_) out << "  " << el << '\n';
    out << "</svg>\n";
    return out.str();
}

void SvgWriter::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << str();
}

} // namespace equitangent
