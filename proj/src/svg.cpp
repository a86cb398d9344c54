#include "mink/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mink {

void SvgFigure::add_polygon(const std::vector<Point2>& pts, const std::string& stroke,
                            const std::string& fill, double width_factor, bool dashed) {
    paths_.push_back({pts, true, stroke, fill, width_factor, dashed});
}

void SvgFigure::add_polyline(const std::vector<Point2>& pts, const std::string& stroke,
                             double width_factor, bool dashed) {
    paths_.push_back({pts, false, stroke, "none", width_factor, dashed});
}

void SvgFigure::add_segment(Point2 a, Point2 b, const std::string& stroke, double width_factor,
                            bool dashed) {
    paths_.push_back({{a, b}, false, stroke, "none", width_factor, dashed});
}

void SvgFigure::add_point(Point2 p, const std::string& fill, double radius_factor) {
    dots_.push_back({p, fill, radius_factor});
}

void SvgFigure::set_caption(const std::string& text) { caption_ = text; }

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v); // normalize -0
    return buf;
}
} // namespace

std::string SvgFigure::render() const {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool any = false;
    auto grow = [&](Point2 p) {
        if (!any) {
            x0 = x1 = p.x1;
            y0 = y1 = p.x2;
            any = true;
        } else {
            x0 = std::min(x0, p.x1);
            x1 = std::max(x1, p.x1);
            y0 = std::min(y0, p.x2);
            y1 = std::max(y1, p.x2);
        }
    };
    for (const auto& path : paths_)
        for (const auto& p : path.pts) grow(p);
    for (const auto& d : dots_) grow(d.p);
    if (!any) {
        x0 = y0 = -1;
        x1 = y1 = 1;
    }
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    double margin = 0.05 * std::max(w, h);
    x0 -= margin;
    y0 -= margin;
    w += 2 * margin;
    h += 2 * margin;
    double diam = std::max(w, h);
    double stroke_unit = diam / 240.0;

    // y-up: emit with negated y and a shifted viewBox
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << " "
        << num(-(y0 + h)) << " " << num(w) << " " << num(h) << "\">\n";
    for (const auto& path : paths_) {
        svg << "  <path d=\"";
        for (size_t i = 0; i < path.pts.size(); ++i)
            svg << (i == 0 ? "M" : "L") << num(path.pts[i].x1) << " " << num(-path.pts[i].x2);
        if (path.closed) svg << "Z";
        svg << "\" fill=\"" << path.fill << "\" stroke=\"" << path.stroke << "\" stroke-width=\""
            << num(stroke_unit * path.width) << "\"";
        if (path.dashed)
            svg << " stroke-dasharray=\"" << num(4 * stroke_unit) << " " << num(3 * stroke_unit)
                << "\"";
        svg << "/>\n";
    }
    for (const auto& d : dots_) {
        svg << "  <circle cx=\"" << num(d.p.x1) << "\" cy=\"" << num(-d.p.x2) << "\" r=\""
            << num(2.2 * stroke_unit * d.radius) << "\" fill=\"" << d.fill << "\"/>\n";
    }
    if (!caption_.empty()) {
        svg << "  <text x=\"" << num(x0 + 0.02 * w) << "\" y=\"" << num(-(y0 + 0.02 * h))
            << "\" font-size=\"" << num(6 * stroke_unit) << "\" fill=\"#333\">" << caption_
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace mink
