#include "mink/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mink {

namespace {

double coord_scale(const std::vector<Point2>& v) {
    double s = 0.0;
    for (const auto& p : v) s = std::max({s, std::abs(p.x1), std::abs(p.x2)});
    return s;
}

// CCW order, collinear/duplicate vertices stripped, canonical start vertex.
std::vector<Point2> normalize_convex(std::vector<Point2> v) {
    require(v.size() >= 3, "polygon needs at least 3 vertices");
    for (const auto& p : v) require(p.finite(), "polygon vertex not finite");

    double total = polyline_area(v);
    require(std::abs(total) > 0.0, "polygon has zero area");
    if (total < 0) std::reverse(v.begin(), v.end());

    const double sc = coord_scale(v);
    const double cross_tol = kCollinearTol * sc * sc;
    const double len_tol = kCollinearTol * sc;

    // Drop near-duplicate consecutive vertices first.
    std::vector<Point2> w;
    for (const auto& p : v) {
        if (w.empty() || norm2(p - w.back()) > len_tol) w.push_back(p);
    }
    while (w.size() > 1 && norm2(w.front() - w.back()) <= len_tol) w.pop_back();

    // Then collinear triples, repeating until stable.
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        std::vector<Point2> out;
        int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            Point2 prev = out.empty() ? w[(i + n - 1) % n] : out.back();
            Point2 cur = w[i];
            Point2 next = w[(i + 1) % n];
            double c = symp(cur - prev, next - cur);
            if (c < -cross_tol) throw validation_error("polygon is not convex");
            if (c <= cross_tol) {
                changed = true;
                continue;
            }
            out.push_back(cur);
        }
        w = std::move(out);
    }
    require(w.size() >= 3, "polygon degenerate after normalization");

    // Re-check the wrap-around corners once the interior is clean.
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        double c = symp(w[(i + 1) % n] - w[i], w[(i + 2) % n] - w[(i + 1) % n]);
        require(c > -cross_tol, "polygon is not convex");
    }

    auto lex_less = [](Point2 a, Point2 b) {
        return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
    };
    auto first = std::min_element(w.begin(), w.end(), lex_less);
    std::rotate(w.begin(), first, w.end());
    return w;
}

} // namespace

double polyline_area(const std::vector<Point2>& pts) {
    double twice = 0.0;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) twice += symp(pts[i], pts[(i + 1) % n]);
    return 0.5 * twice;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices)
    : verts_(normalize_convex(std::move(vertices))) {}

double ConvexPolygon::area() const { return polyline_area(verts_); }

Point2 ConvexPolygon::centroid() const {
    // Area-weighted centroid of the polygon.
    double a6 = 0.0;
    Point2 c{0, 0};
    int n = size();
    for (int i = 0; i < n; ++i) {
        Point2 p = verts_[i], q = verts_[(i + 1) % n];
        double w = symp(p, q);
        a6 += w;
        c = c + (p + q) * w;
    }
    return c / (3.0 * a6);
}

double ConvexPolygon::scale() const { return coord_scale(verts_); }

double ConvexPolygon::diameter() const {
    double best = 0.0;
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::max(best, norm2(verts_[i] - verts_[j]));
    return best;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
    int n = size();
    for (int i = 0; i < n; ++i) {
        Point2 e = verts_[(i + 1) % n] - verts_[i];
        if (symp(e, p - verts_[i]) < -tol * norm2(e)) return false;
    }
    return true;
}

ConvexPolygon ConvexPolygon::translated(Point2 t) const {
    std::vector<Point2> v = verts_;
    for (auto& p : v) p = p + t;
    return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
    require(s > 0, "scale factor must be positive");
    std::vector<Point2> v = verts_;
    for (auto& p : v) p = p * s;
    return ConvexPolygon(std::move(v));
}

namespace {

// Pre-normalization that keeps antipodal pairs together: snap the mirror
// half exact, then prune duplicates/collinear vertices on the half viewed as
// part of the symmetric loop. The pruning tolerance sits above the base
// ConvexPolygon threshold so the base pass has nothing left to remove and
// the pairing survives it.
std::vector<Point2> symmetric_prepare(std::vector<Point2> v) {
    require(v.size() >= 4 && v.size() % 2 == 0,
            "symmetric polygon needs an even vertex count");
    int n = static_cast<int>(v.size()) / 2;
    double sc = coord_scale(v);
    const double pair_tol = kExactTol * (sc + 1.0);
    for (int i = 0; i < n; ++i) {
        require(norm2(v[i + n] + v[i]) <= pair_tol, "vertices are not centrally symmetric");
        v[i + n] = -v[i];
    }
    std::vector<Point2> h(v.begin(), v.begin() + n);
    const double cross_tol = 4 * kCollinearTol * sc * sc;
    const double len_tol = 4 * kCollinearTol * sc;
    for (bool changed = true; changed && h.size() > 1;) {
        changed = false;
        for (size_t i = 0; i < h.size(); ++i) {
            Point2 prev = i == 0 ? -h.back() : h[i - 1];
            Point2 next = i + 1 == h.size() ? -h.front() : h[i + 1];
            Point2 cur = h[i];
            if (norm2(cur - prev) <= len_tol ||
                std::abs(symp(cur - prev, next - cur)) <= cross_tol) {
                h.erase(h.begin() + i);
                changed = true;
                break;
            }
        }
    }
    require(h.size() >= 2, "symmetric polygon degenerate after normalization");
    std::vector<Point2> full = h;
    for (const auto& p : h) full.push_back(-p);
    return full;
}

} // namespace

SymmetricPolygon::SymmetricPolygon(std::vector<Point2> vertices)
    : ConvexPolygon(symmetric_prepare(std::move(vertices))) {
    int n2 = size();
    require(n2 % 2 == 0, "symmetric polygon needs an even vertex count");
    int n = n2 / 2;
    for (int i = 0; i < n; ++i) {
        require(verts_[i + n] == -verts_[i], "vertices are not centrally symmetric");
    }
    for (int i = 0; i < n2; ++i)
        require(symp(verts_[i], verts_[(i + 1) % n2]) > 0,
                "origin is not strictly interior");
}

SymmetricPolygon SymmetricPolygon::from_half(const std::vector<Point2>& half) {
    require(!half.empty(), "empty half list");
    std::vector<Point2> full = half;
    for (const auto& p : half) full.push_back(-p);
    return SymmetricPolygon(std::move(full));
}

SymmetricPolygon SymmetricPolygon::scaled(double s) const {
    require(s > 0, "scale factor must be positive");
    std::vector<Point2> v = verts_;
    for (auto& p : v) p = p * s;
    return SymmetricPolygon(std::move(v));
}

SupportResult support(const ConvexPolygon& P, const Functional& phi) {
    require(phi.nonzero(), "support of the zero functional");
    int n = P.size();
    int best = 0;
    double bv = phi(P.vertex(0));
    for (int i = 1; i < n; ++i) {
        double v = phi(P.vertex(i));
        if (v > bv) {
            bv = v;
            best = i;
        }
    }
    const double tol = kExactTol * norm2(phi.g) * (P.scale() + 1.0);
    SupportResult r;
    r.value = bv;
    if (phi(P.vertex(best + 1)) >= bv - tol) {
        r.is_edge = true;
        r.index = best;
        r.argmax = (P.vertex(best) + P.vertex(best + 1)) * 0.5;
    } else if (phi(P.vertex(best - 1)) >= bv - tol) {
        r.is_edge = true;
        r.index = P.wrap(best - 1);
        r.argmax = (P.vertex(best - 1) + P.vertex(best)) * 0.5;
    } else {
        r.is_edge = false;
        r.index = best;
        r.argmax = P.vertex(best);
    }
    return r;
}

namespace {

Point2 plane_intersect(const Halfplane& a, const Halfplane& b) {
    double d = symp(a.phi.g, b.phi.g);
    return {(a.phi.g.x1 * b.offset - b.phi.g.x1 * a.offset) / d,
            (a.phi.g.x2 * b.offset - b.phi.g.x2 * a.offset) / d};
}

} // namespace

ConvexPolygon halfplane_intersection(std::vector<Halfplane> planes) {
    require(planes.size() >= 3, "insufficient directions");
    // Normalize to unit Euclidean |g| so offsets compare as distances.
    for (auto& h : planes) {
        double m = norm2(h.phi.g);
        require(m > 0, "zero direction in halfplane");
        h.phi.g = h.phi.g / m;
        h.offset /= m;
    }
    double off_scale = 1.0;
    for (const auto& h : planes) off_scale = std::max(off_scale, std::abs(h.offset));
    const double eps = 1e-12 * off_scale;
    const double ang_eps = 1e-12;

    // Travelling along +g keeps the interior on the left; sort by that angle.
    auto angle = [](const Halfplane& h) { return std::atan2(h.phi.g.x2, h.phi.g.x1); };
    std::sort(planes.begin(), planes.end(), [&](const Halfplane& a, const Halfplane& b) {
        double da = angle(a), db = angle(b);
        if (std::abs(da - db) > ang_eps) return da < db;
        return a.offset < b.offset; // ties: tighter halfplane first
    });
    std::vector<Halfplane> uniq;
    for (const auto& h : planes) {
        if (!uniq.empty() && std::abs(angle(h) - angle(uniq.back())) <= ang_eps) continue;
        uniq.push_back(h);
    }
    require(uniq.size() >= 3, "insufficient directions");

    // A cyclic direction gap of pi or more leaves the intersection unbounded.
    const double pi = 3.14159265358979323846;
    for (size_t i = 0; i < uniq.size(); ++i) {
        double a0 = angle(uniq[i]);
        double a1 = angle(uniq[(i + 1) % uniq.size()]) + (i + 1 == uniq.size() ? 2 * pi : 0.0);
        require(a1 - a0 < pi - 1e-9, "insufficient directions");
    }

    std::vector<Halfplane> dq;
    auto outside = [&](const Halfplane& a, const Halfplane& b, const Halfplane& h) {
        return h.eval(plane_intersect(a, b)) > eps;
    };
    for (const auto& h : uniq) {
        while (dq.size() >= 2 && outside(dq[dq.size() - 2], dq.back(), h)) dq.pop_back();
        while (dq.size() >= 2 && outside(dq[0], dq[1], h)) dq.erase(dq.begin());
        dq.push_back(h);
    }
    while (dq.size() >= 3 && outside(dq[dq.size() - 2], dq.back(), dq[0])) dq.pop_back();
    while (dq.size() >= 3 && outside(dq[0], dq[1], dq.back())) dq.erase(dq.begin());
    require(dq.size() >= 3, "empty intersection");

    std::vector<Point2> verts;
    for (size_t i = 0; i < dq.size(); ++i)
        verts.push_back(plane_intersect(dq[i], dq[(i + 1) % dq.size()]));

    // The deque construction can silently produce garbage on infeasible
    // input, so check the result against every plane.
    const double check_tol = 1e-7 * (coord_scale(verts) + off_scale);
    for (const auto& p : verts)
        for (const auto& h : uniq)
            require(h.eval(p) <= check_tol, "empty intersection");

    return ConvexPolygon(std::move(verts));
}

SymmetricPolygon polar(const SymmetricPolygon& B) {
    int n = B.size();
    std::vector<Point2> w(n);
    for (int i = 0; i < n; ++i) {
        Point2 u = B.vertex(i), v = B.vertex(i + 1);
        w[i] = (v - u) / symp(u, v);
    }
    return SymmetricPolygon(std::move(w));
}

std::vector<Halfplane> edge_halfplanes(const ConvexPolygon& P) {
    int n = P.size();
    std::vector<Halfplane> hs(n);
    for (int i = 0; i < n; ++i) {
        Point2 u = P.vertex(i), v = P.vertex(i + 1);
        // phi(x) = symp(x, g) is constant along the edge direction v - u.
        Functional phi{v - u};
        hs[i] = Halfplane{phi, phi(u)};
    }
    return hs;
}

ConvexPolygon circumscribe(const ConvexPolygon& C, const std::vector<Functional>& directions) {
    std::vector<Halfplane> planes;
    planes.reserve(directions.size());
    for (const auto& phi : directions) planes.push_back({phi, support(C, phi).value});
    return halfplane_intersection(std::move(planes));
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
    auto lex_less = [](Point2 a, Point2 b) {
        return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
    };
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    int n = static_cast<int>(points.size());
    if (n < 3) return points;
    std::vector<Point2> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) { // lower
        while (k >= 2 && symp(h[k - 1] - h[k - 2], points[i] - h[k - 2]) <= 0) --k;
        h[k++] = points[i];
    }
    for (int i = n - 2, lo = k + 1; i >= 0; --i) { // upper
        while (k >= lo && symp(h[k - 1] - h[k - 2], points[i] - h[k - 2]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    return h;
}

namespace {

struct BoundaryHit {
    Point2 p;
    int edge = 0;
    double s = 0.0; // position within the edge, 0 at vertex(edge)
};

BoundaryHit boundary_hit(const ConvexPolygon& P, Point2 dir) {
    require(norm2(dir) > 0, "zero direction");
    require(P.contains({0, 0}), "polygon must contain the origin");
    int n = P.size();
    BoundaryHit best;
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        Point2 u = P.vertex(i), v = P.vertex(i + 1);
        double den = symp(dir, v - u);
        if (den == 0) continue;
        double t = symp(u, v) / den;                 // ray parameter
        double s = symp(dir, u) / symp(v - u, dir);  // edge parameter
        if (t <= 0) continue;
        double err = std::max(0.0, std::max(-s, s - 1.0));
        if (err < best_err) {
            best_err = err;
            best = {dir * t, i, std::clamp(s, 0.0, 1.0)};
        }
    }
    require(best_err < 1e-9, "no boundary intersection");
    return best;
}

} // namespace

Point2 boundary_point(const ConvexPolygon& P, Point2 dir) { return boundary_hit(P, dir).p; }

std::vector<Point2> boundary_arc(const ConvexPolygon& P, Point2 from, Point2 to) {
    BoundaryHit a = boundary_hit(P, from);
    BoundaryHit b = boundary_hit(P, to);
    std::vector<Point2> arc{a.p};
    int n = P.size();
    if (a.edge == b.edge && a.s <= b.s + 1e-12) {
        if (norm2(b.p - a.p) > 0) arc.push_back(b.p);
        return arc;
    }
    int i = a.edge;
    do {
        i = (i + 1) % n;
        arc.push_back(P.vertex(i));
    } while (i != b.edge);
    if (norm2(b.p - arc.back()) > 1e-15 * (P.scale() + 1.0)) arc.push_back(b.p);
    return arc;
}

} // namespace mink
