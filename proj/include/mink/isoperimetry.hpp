#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mink/norms.hpp"

namespace mink {

struct AnticircleFit {
    Point2 center;
    double radius = 0; // rho for inscribed, sigma for enclosing
};

struct IsoperimetricReport {
    double perimeter = 0;
    double area = 0;
    double iota = 0; // perimeter^2 / area
    double rho = 0;
    double sigma = 0;
    // signed slacks, >= 0 when the inequality holds; never clamped
    std::map<std::string, double> inequality_slacks;
    // magnitude of the terms each slack cancels; the natural scale for its
    // tolerance (thin bodies amplify iota-sized cancellations)
    std::map<std::string, double> inequality_scales;
};

struct ArcMeasure {
    double mu_l = 0; // length-proportional angular measure
    double mu_a = 0; // sector-area-proportional angular measure
};

struct ZenodorusResult {
    ConvexPolygon polygon;
    double area = 0;
    double midpoint_defect = 0; // max |gauge_I(side midpoint) - 1|
    int iterations = 0;
};

struct GirthReport {
    double p_B_of_B = 0; // norm perimeter of the unit circle (self-circumference)
    double p_I_of_I = 0; // antinorm perimeter of the anticircle
    double p_B_of_I = 0; // norm perimeter of the anticircle  (= 2 area(I))
    double p_I_of_B = 0; // antinorm perimeter of the circle  (= 2 area(B))
};

// Sum of edge gauges; exact for polygons.
double perimeter(const NormSpec& n, const ConvexPolygon& c);

// Largest anticircle homothet inside C / smallest containing C (linear
// programs over the edge functionals resp. vertex constraints).
AnticircleFit inscribed_anticircle(const NormSpec& n, const ConvexPolygon& c);
AnticircleFit enclosing_anticircle(const NormSpec& n, const ConvexPolygon& c);

// All eight inequality slacks of the isoperimetric family, reported signed.
IsoperimetricReport inequality_report(const NormSpec& n, const ConvexPolygon& c);

// Minimum-area n-gon circumscribed about the unit anticircle, by the damped
// Dowker midpoint iteration with 8 rotated starts. Throws solver_error when
// no start converges within 10^4 iterations.
ZenodorusResult zenodorus(const NormSpec& n, int ngon);

GirthReport girth_report(const NormSpec& n);

// Angular measures of the boundary arc of B between the rays `from` and `to`
// (counterclockwise). Both normalized to total 2*pi.
ArcMeasure angular_measures(const NormSpec& n, Point2 from, Point2 to);

// Partition the anticircle into k arcs of equal norm length; returns
// max - min sector area (the "equal areas in equal times" deviation).
double kepler_check(const NormSpec& n, int k);

// Random triangles circumscribed about random-radius norm circles:
// max/min of rho * perimeter / area. Equals 1 (up to tolerance) iff Radon.
double circumscribed_ratio_scan(const NormSpec& n, int trials, std::uint64_t seed = 7);

} // namespace mink
