#pragma once

#include <cstdint>

#include "mink/norms.hpp"

namespace mink {

// A curve joining a and b inside the parallelogram o, a, b, a+b, convexly
// positioned on the boundary of conv(arc + {o}), with symp(a, b) = 1.
// Defines a norm on the first quadrant spanned by a and b.
struct QuadrantArc {
    Point2 a;
    Point2 b;
    std::vector<Point2> interior; // strictly between a and b, CCW

    void validate() const; // throws validation_error on any broken invariant
    std::vector<Point2> points() const;
};

struct RadonReport {
    bool is_radon = false;
    double lambda = 1.0;         // best proportionality B ~ lambda * I
    double relative_defect = 0;  // max log-gauge deviation after scaling
    double asymmetry_eps = 0;    // Gruber's epsilon, sampled
};

// Radon's construction: the quadrant arc is completed to a full unit circle
// whose normality relation is symmetric. The second-quadrant piece is the
// unit anticircle of the partially defined norm; the rest follows by central
// symmetry. The result is a normalized Radon curve (|symp(x, y)| = 1 for
// unit normal pairs x -| y).
SymmetricPolygon radon_construct(const QuadrantArc& arc);

// Proportionality test B ~ lambda I, exact over the vertex directions of B
// and I, plus the sampled normality-asymmetry measure.
RadonReport is_radon(const NormSpec& n);

struct RadonizeResult {
    SymmetricPolygon curve;
    Point2 a, b;    // the unit normal pair the quadrants were built from
    double form_scale; // symp(a, b) before normalization
};

// Radon curve grown from B's first-quadrant arc: agrees with B on Q1 and Q3,
// carries the anticircle arc of radius symp(a, b) on Q2/Q4. Fixed point on
// Radon inputs.
RadonizeResult radonize_detailed(const NormSpec& n);
SymmetricPolygon radonize(const NormSpec& n);

// Empirical surrogate for Gruber's stability constant: (mu - 1) / eps where
// mu is the multiplicative gauge distance between B and radonize(B) and eps
// the sampled normality asymmetry. Throws for Radon inputs (eps ~ 0).
double stability_ratio(const NormSpec& n);

// Corollary-3' sign condition: for random independent pairs, every
// lambda with x -| lambda x + y against every mu with y -| mu y + x has
// lambda * mu >= -1e-9. Holds for Radon norms.
bool sign_test_3prime(const NormSpec& n, int trials, std::uint64_t seed = 42);

// Regular k-gon unit ball, k = 4n + 2 (the Radon regular polygons). Other k
// are refused; build them as plain polygon norms instead.
SymmetricPolygon generator_regular_gon(int k);

// Polygonized mixed lp-lq ball with n vertices per quadrant.
SymmetricPolygon generator_mixed(double p, int n);

} // namespace mink
