#pragma once

#include <optional>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

// Cross-product tolerance for collinear-vertex removal is
// kCollinearTol * (coordinate scale)^2.
inline constexpr double kCollinearTol = 1e-12;
// Absolute tolerance for exact constructions (polar, intersections).
inline constexpr double kExactTol = 1e-9;
// Tolerance for optimizer outputs.
inline constexpr double kOptTol = 1e-6;

class ConvexPolygon {
  public:
    // Normalizes the input: enforces CCW order, strips collinear vertices,
    // rotates the list so the lexicographically smallest vertex comes first.
    // Throws validation_error if fewer than 3 strict vertices remain or the
    // sequence is not convex.
    explicit ConvexPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    Point2 vertex(int i) const { return verts_[wrap(i)]; }
    // Edge i runs from vertex i to vertex i+1.
    Point2 edge_vector(int i) const { return vertex(i + 1) - vertex(i); }

    double area() const;
    Point2 centroid() const;
    // Largest coordinate magnitude; the length scale for tolerances.
    double scale() const;
    // Euclidean diameter (max vertex distance).
    double diameter() const;

    bool contains(Point2 p, double tol = kExactTol) const;

    ConvexPolygon translated(Point2 t) const;
    ConvexPolygon scaled(double s) const;

    int wrap(int i) const {
        int n = size();
        i %= n;
        return i < 0 ? i + n : i;
    }

  protected:
    std::vector<Point2> verts_;
};

// Centrally symmetric convex polygon with the origin strictly interior:
// a polygonal unit ball. vertex(i + n) == -vertex(i) exactly.
class SymmetricPolygon : public ConvexPolygon {
  public:
    // Full vertex list; the antipodal pairing is verified (tolerance
    // kExactTol * scale) and then snapped exact.
    explicit SymmetricPolygon(std::vector<Point2> vertices);

    // Mirrors a half list (vertices spanning an open half-plane of angles).
    static SymmetricPolygon from_half(const std::vector<Point2>& half);

    int half_size() const { return size() / 2; }

    SymmetricPolygon scaled(double s) const;
};

struct SupportResult {
    double value = 0.0;
    bool is_edge = false;
    int index = 0; // vertex index, or edge index (vertex i -> i+1) if is_edge
    Point2 argmax; // a maximizing point (edge midpoint when is_edge)
};

// Maximum of phi over P together with the maximizing face.
SupportResult support(const ConvexPolygon& P, const Functional& phi);

// Halfplane {x : symp(x, g) <= offset}.
struct Halfplane {
    Functional phi;
    double offset = 0.0;

    double eval(Point2 x) const { return phi(x) - offset; } // <= 0 inside
};

// Intersection of halfplanes as a convex polygon. Throws validation_error
// ("insufficient directions") when the intersection is unbounded and
// ("empty intersection") when it has no interior.
ConvexPolygon halfplane_intersection(std::vector<Halfplane> planes);

// Symplectic polar body: {g : symp(x, g) <= 1 for all x in B}. Each edge of
// B maps to a vertex of the polar and vice versa; an exact involution up to
// floating-point roundoff. This is the isoperimetrix of the norm with unit
// ball B.
SymmetricPolygon polar(const SymmetricPolygon& B);

// Smallest polygon circumscribed about C whose sides have the given outer
// functionals: the intersection of the supporting halfplanes
// {x : phi_j(x) <= max_C phi_j}. Every side touches C. Throws
// validation_error("insufficient directions") if the directions do not
// positively span the plane.
ConvexPolygon circumscribe(const ConvexPolygon& C, const std::vector<Functional>& directions);

// Edge functionals of P: for each edge, the functional phi with phi == its
// maximum over P exactly on that edge (offset = support value).
std::vector<Halfplane> edge_halfplanes(const ConvexPolygon& P);

// Monotone-chain convex hull, CCW. Collinear points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

// First intersection of the ray {t * dir : t > 0} with the boundary of P
// (P must contain the origin strictly). Returns the boundary point.
Point2 boundary_point(const ConvexPolygon& P, Point2 dir);

// CCW boundary polyline from the boundary point on ray `from` to the one on
// ray `to` (both directions from the origin), endpoints included, passing
// through every vertex in between.
std::vector<Point2> boundary_arc(const ConvexPolygon& P, Point2 from, Point2 to);

// Signed area of the closed polyline (shoelace; CCW positive).
double polyline_area(const std::vector<Point2>& pts);

} // namespace mink
