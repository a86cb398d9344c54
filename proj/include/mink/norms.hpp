#pragma once

#include <memory>
#include <string>

#include "mink/polygon.hpp"

namespace mink {

inline constexpr int kDefaultVertexBudget = 1440;

enum class NormKind { Polygon, Lp, Mixed, Euclidean };

// A norm backend together with its antinorm machinery. Immutable; cheap to
// copy and safe to share across threads.
//
// The antinorm is the dual norm pulled back through the symplectic form:
// antinorm(x) = sup{ symp(x, y) : gauge(y) = 1 }. Its unit ball is the
// isoperimetrix I. For a polygonal unit ball both gauge and antinorm are
// exact vertex maxima; analytic backends (lp, mixed, euclidean) use closed
// forms where available and a polygonal discretization elsewhere.
class NormSpec {
  public:
    static NormSpec polygon(SymmetricPolygon B);
    // lp(p), 1 < p < infinity: gauge = ell_p, antinorm = ell_q closed form.
    static NormSpec lp(double p, int discretization = kDefaultVertexBudget);
    // mixed(p): ell_p where x1*x2 >= 0, ell_q where x1*x2 <= 0. The antinorm
    // is evaluated on a discretization so the Radon property stays a measured
    // fact rather than an assumption.
    static NormSpec mixed(double p, int discretization = kDefaultVertexBudget);
    static NormSpec euclidean(int discretization = kDefaultVertexBudget);

    NormKind kind() const;
    bool is_polygonal() const { return kind() == NormKind::Polygon; }
    double p_exponent() const;
    double q_exponent() const;
    int discretization() const;

    double gauge(Point2 x) const;
    double antinorm(Point2 x) const;
    Point2 unit(Point2 x) const; // x / gauge(x); throws on zero input

    // Unit ball as a polygon: exact for the polygon backend, the inscribed
    // discretization otherwise.
    const SymmetricPolygon& unit_ball() const;
    // Isoperimetrix polygon: polar(B) for polygonal backends (exact), the
    // discretized anticircle otherwise.
    const SymmetricPolygon& isoperimetrix_polygon() const;

    std::string describe() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

inline double gauge(const NormSpec& n, Point2 x) { return n.gauge(x); }
inline double antinorm(const NormSpec& n, Point2 x) { return n.antinorm(x); }

// Unit ball of the antinorm. budget == 0 uses the spec's own discretization;
// ignored for polygon backends, where the result is exact.
SymmetricPolygon isoperimetrix(const NormSpec& n, int budget = 0);

// Euclidean Hausdorff distance between B and the double isoperimetrix;
// contract: <= 1e-9 * diam(B). Polygon backends only.
double antinorm_involution_defect(const NormSpec& n);

// Birkhoff normality x -| y through the multiplicative criterion
// |symp(x, y)| = gauge(x) * antinorm(y) (relative tolerance). Geometrically
// the line through x/gauge(x) with direction y supports the unit ball.
bool is_normal(const NormSpec& n, Point2 x, Point2 y, double tol = kExactTol);

// All directions y (mod sign) with x -| y: a closed angular arc, a single
// direction at smooth boundary points.
struct NormalCone {
    Point2 dir_lo, dir_hi;       // extreme directions, CCW from lo to hi
    double theta_lo, theta_hi;   // angles mod pi; theta_lo <= theta_hi < theta_lo + pi

    double width() const { return theta_hi - theta_lo; }
    bool singleton(double tol = 1e-12) const { return width() <= tol; }
    bool contains(Point2 d, double tol = kExactTol) const;
    Point2 sample(double t) const; // t in [0,1], angular interpolation
};

// contact_tol widens the boundary-contact test (relative); useful when x
// comes out of an optimizer and sits within that tolerance of a vertex ray.
NormalCone normal_cone(const NormSpec& n, Point2 x, double contact_tol = kExactTol);

// All alpha with x -| alpha x + y, as a closed interval (nonempty; James).
struct AlphaInterval {
    double lo, hi;
};
AlphaInterval normal_coefficients(const NormSpec& n, Point2 x, Point2 y);

struct Line {
    Point2 point;
    Point2 direction;
};

// min over the line of gauge(p - .): |symp(p - q, d)| / antinorm(d).
double line_distance(const NormSpec& n, Point2 p, const Line& line);
// Same in the antinorm: |symp(p - q, d)| / gauge(d).
double line_distance_antinorm(const NormSpec& n, Point2 p, const Line& line);
// Signed variant (sign follows the orientation of the direction vector).
double signed_line_distance(const NormSpec& n, Point2 p, const Line& line);

// Distance from a point to a convex polygon in the norm (0 inside).
double distance_to_polygon(const NormSpec& n, Point2 p, const ConvexPolygon& s);

// Symmetric Hausdorff distance in the given norm; 0 iff equal bodies.
double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q, const NormSpec& metric);
double hausdorff_euclidean(const ConvexPolygon& p, const ConvexPolygon& q);

// Boundary point of the unit ball on the ray through `dir`.
Point2 unit_point(const NormSpec& n, Point2 dir);

} // namespace mink
