#pragma once

#include <array>
#include <cstdint>

#include "mink/norms.hpp"

namespace mink {

struct Triangle {
    Point2 a1, a2, a3;

    Triangle(Point2 p1, Point2 p2, Point2 p3);

    Point2 vertex(int i) const; // 0-based, modulo 3
    // Side opposite vertex i, as the vector from vertex i+1 to vertex i+2.
    Point2 side(int i) const;
    Line side_line(int i) const;

    double area() const;
    Point2 centroid() const;
    double scale() const;
};

struct TriangleReport {
    std::array<double, 3> side_norm;      // beta_i, side opposite vertex i
    std::array<double, 3> side_antinorm;
    std::array<double, 3> height_norm;    // eta_i
    std::array<double, 3> height_antinorm;
    double area = 0;
    Point2 centroid;
    Point2 incenter;
    double inradius = 0;          // largest inscribed norm ball
    Point2 anti_incenter;
    double anti_inradius = 0;     // rho of the inscribed anticircle
    bool is_anti_equilateral = false;
    double min_width = 0;         // over all parallel supporting-line pairs
    bool is_reduced = false;
};

TriangleReport triangle_report(const NormSpec& n, const Triangle& t);

// Minimum norm distance between parallel supporting lines, minimized over
// direction. Candidates: the side directions and the vertex directions of B
// and I, with golden-section refinement between neighbours.
double min_width(const NormSpec& n, const Triangle& t);

// Direct reduced-ness probe: searches for a proper sub-triangle of the same
// minimum width (shrinking endpoints of width-attaining sides across several
// step sizes). Complements the anti-equilateral criterion.
bool width_preserving_shrink_exists(const NormSpec& n, const Triangle& t);

// Ray through the midpoint of the two unit points on the angle's sides.
// Returned as a direction from the vertex. Throws on opposite rays.
Point2 busemann_bisector(const NormSpec& n, Point2 vertex, Point2 ray1, Point2 ray2);

enum class BisectorMetric { Norm, Antinorm };

// Locus of points equidistant (in the chosen metric) from the two sides of
// the angle, as a direction from the vertex.
Point2 glogovskii_bisector(const NormSpec& n, Point2 vertex, Point2 ray1, Point2 ray2,
                           BisectorMetric metric);

struct FtResult {
    Point2 point;
    double value = 0;
    bool at_vertex = false;
};

// Global minimizer of x -> sum of gauge(x - vertex). Exact linear program on
// polygon backends (lexicographically smallest optimal point); derivative-free
// convex descent elsewhere.
FtResult fermat_torricelli(const NormSpec& n, const Triangle& t);

struct FtCharacterization {
    bool satisfied = false;
    bool trivial = false; // the FT point sits on a vertex
};

// Tangent-line test at the three unit-circle points around the FT point:
// searches the tangent cones for a triple forming an anti-equilateral
// triangle (within 1e-6 relative).
FtCharacterization verify_ft_characterization(const NormSpec& n, const Triangle& t);

// Max minus min over the sample points of the signed sum of norm distances
// to the three side lines (positive inside). Requires an anti-equilateral
// triangle.
double viviani_defect(const NormSpec& n, const Triangle& t, const std::vector<Point2>& points);

} // namespace mink
