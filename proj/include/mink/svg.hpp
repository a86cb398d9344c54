#pragma once

#include <string>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

// Minimal deterministic SVG builder: y-up coordinates, viewBox fitted to the
// payload with a 5% margin, stroke widths scaled to the diagram diameter.
class SvgFigure {
  public:
    void add_polygon(const std::vector<Point2>& pts, const std::string& stroke,
                     const std::string& fill = "none", double width_factor = 1.0,
                     bool dashed = false);
    void add_polyline(const std::vector<Point2>& pts, const std::string& stroke,
                      double width_factor = 1.0, bool dashed = false);
    void add_segment(Point2 a, Point2 b, const std::string& stroke, double width_factor = 1.0,
                     bool dashed = false);
    void add_point(Point2 p, const std::string& fill, double radius_factor = 1.0);
    void set_caption(const std::string& text);

    std::string render() const;

  private:
    struct Path {
        std::vector<Point2> pts;
        bool closed = false;
        std::string stroke;
        std::string fill;
        double width = 1.0;
        bool dashed = false;
    };
    struct Dot {
        Point2 p;
        std::string fill;
        double radius = 1.0;
    };
    std::vector<Path> paths_;
    std::vector<Dot> dots_;
    std::string caption_;
};

} // namespace mink
