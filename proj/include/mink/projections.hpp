#pragma once

#include <cstdint>
#include <optional>

#include "mink/norms.hpp"

namespace mink {

// Strip bounded by the two lines through p and q parallel to `direction`.
struct StripSpec {
    Point2 p, q;
    Point2 direction;
};

// Union representation of a d-segment: the segment a-b plus at most one
// two-dimensional piece (present when the unit vector of b - a lies in the
// relative interior of a facet of B).
struct DSegmentRegion {
    Point2 a, b;
    std::vector<ConvexPolygon> pieces;

    double area() const;
};

enum class ProjectionMap { Radial, Metric };
enum class ScanMetric { Norm, Antinorm };

// Identity inside the unit ball, x / gauge(x) outside.
Point2 radial_projection(const NormSpec& n, Point2 x);

struct ScanResult {
    double max_ratio = 0;
    Point2 witness_v, witness_w;
};

// Worst expansion ratio dist(f(v), f(w)) / dist(v, w) over random pairs,
// plus local refinement around the best candidates (the refinement is what
// finds ratios > 1 on non-Radon norms in the norm metric).
ScanResult nonexpansive_scan(const NormSpec& n, ProjectionMap map, ScanMetric metric,
                             int trials, std::uint64_t seed = 11,
                             const ConvexPolygon* target = nullptr);

// Minimizer of the metric distance from x to the line; flat optimal faces
// resolve to their midpoint.
Point2 nearest_on_line(const NormSpec& n, Point2 x, const Line& line, ScanMetric metric);

struct MetricProjection {
    Point2 point;
    double distance = 0;
    bool face_is_segment = false;
    Point2 face_a, face_b; // endpoints of the optimal face (equal for a point)
};

// Nearest point of the convex polygon S to x in the norm.
MetricProjection metric_projection(const NormSpec& n, const ConvexPolygon& s, Point2 x);

// Bisector points of {x : gauge(x-p) = gauge(x-q)} found by sign-change
// bisection along lines parallel to q - p. Strictly convex backends only.
std::vector<Point2> bisector_sample(const NormSpec& n, Point2 p, Point2 q, int count);

// True when every sample lies strictly inside the strip.
bool strip_test(const std::vector<Point2>& samples, const StripSpec& strip);

// The unique strip of the bisector theorem: lines through p and q tangent to
// the anticircle with diameter pq (direction v with v -| q-p).
StripSpec bisector_strip(const NormSpec& n, Point2 p, Point2 q);
// Radon variant: lines supporting the norm circle with diameter pq.
StripSpec bisector_strip_radon(const NormSpec& n, Point2 p, Point2 q);

// Membership in the d-segment: gauge(a-x) + gauge(x-b) = gauge(a-b) within
// 1e-9 * gauge(b-a).
bool d_member(const NormSpec& n, Point2 a, Point2 b, Point2 x);

// Exact region for polygon backends (union over norming facets of B).
DSegmentRegion d_segment(const NormSpec& n, Point2 a, Point2 b);

// Approximate membership in the intersection of all balls containing A:
// rejected iff some sampled center separates z from A. Monotone in
// resolution (more centers shrink the hull).
bool ball_hull_member(const NormSpec& n, const std::vector<Point2>& a, Point2 z,
                      int resolution = 200);

// d-segments in the norm match sampled ball hulls in the antinorm
// (symmetric-difference area <= 1e-3 relative), per the duality of d- and
// B-convexity.
bool lassak_duality_check(const NormSpec& n, int pairs, std::uint64_t seed = 13);

// d-segments of points inside the anticircle stay inside it.
bool antiball_dconvex_check(const NormSpec& n, int pairs = 1000, std::uint64_t seed = 17);

// Star-shaped polygon with the origin in its kernel; vertices in CCW order.
struct StarPolygon {
    std::vector<Point2> vertices;

    explicit StarPolygon(std::vector<Point2> v);
    // Boundary crossing of the ray from the origin through x.
    Point2 radial_boundary(Point2 x) const;
    bool contains(Point2 x) const;
};

// Radial projection onto S is norm-non-expansive iff S is an antiball at the
// origin; returns true when no expansive pair was found within the budget.
bool antiball_projection_uniqueness_scan(const NormSpec& n, const StarPolygon& s, int trials,
                                         std::uint64_t seed = 19);

} // namespace mink
