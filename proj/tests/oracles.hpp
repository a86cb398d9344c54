// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "mink/norms.hpp"
#include "mink/polygon.hpp"
#include "mink/rng.hpp"

namespace oracle {

using namespace mink;

// Brute-force halfplane intersection: every pairwise line intersection,
// filtered by feasibility, hulled. O(m^3); bounded inputs only.
inline std::optional<std::vector<Point2>> halfplane_brute(const std::vector<Halfplane>& hs) {
    std::vector<Point2> pts;
    double sc = 1.0;
    for (const auto& h : hs) sc = std::max(sc, std::abs(h.offset) / std::max(1e-300, norm2(h.phi.g)));
    for (size_t i = 0; i < hs.size(); ++i) {
        for (size_t j = i + 1; j < hs.size(); ++j) {
            const auto &a = hs[i], &b = hs[j];
            double d = symp(a.phi.g, b.phi.g);
            if (std::abs(d) < 1e-12 * norm2(a.phi.g) * norm2(b.phi.g)) continue;
            Point2 x{(a.phi.g.x1 * b.offset - b.phi.g.x1 * a.offset) / d,
                     (a.phi.g.x2 * b.offset - b.phi.g.x2 * a.offset) / d};
            bool ok = true;
            for (const auto& h : hs)
                if (h.eval(x) > 1e-9 * sc * norm2(h.phi.g)) ok = false;
            if (ok) pts.push_back(x);
        }
    }
    if (pts.size() < 3) return std::nullopt;
    auto hull = convex_hull(pts);
    if (hull.size() < 3) return std::nullopt;
    return hull;
}

// sup |symp(x, y)| over sampled unit vectors y.
inline double antinorm_brute(const NormSpec& n, Point2 x, int samples = 100000) {
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        double a = 2.0 * 3.14159265358979323846 * k / samples;
        Point2 y = n.unit({std::cos(a), std::sin(a)});
        best = std::max(best, std::abs(symp(x, y)));
    }
    return best;
}

// min over lambda in [-10, 10] of gauge(x + lambda y) - gauge(x), by grid
// plus local refinement. Negative values witness non-normality.
inline double normality_residual(const NormSpec& n, Point2 x, Point2 y) {
    auto f = [&](double l) { return n.gauge(x + y * l); };
    double lo = -10, hi = 10, best = f(0), bl = 0;
    for (int pass = 0; pass < 6; ++pass) {
        double bb = best;
        for (int k = 0; k <= 400; ++k) {
            double l = lo + (hi - lo) * k / 400.0;
            double v = f(l);
            if (v < bb) {
                bb = v;
                bl = l;
            }
        }
        best = bb;
        double w = (hi - lo) / 400.0;
        lo = bl - 2 * w;
        hi = bl + 2 * w;
    }
    return best - n.gauge(x);
}

// min over a full line of the metric distance, by grid plus refinement.
template <class F>
double line_min_brute(const F& dist_at, double span = 50.0) {
    double lo = -span, hi = span, best = dist_at(0.0), bt = 0;
    for (int pass = 0; pass < 8; ++pass) {
        double bb = best;
        for (int k = 0; k <= 600; ++k) {
            double t = lo + (hi - lo) * k / 600.0;
            double v = dist_at(t);
            if (v < bb) {
                bb = v;
                bt = t;
            }
        }
        best = bb;
        double w = (hi - lo) / 600.0;
        lo = bt - 2 * w;
        hi = bt + 2 * w;
    }
    return best;
}

inline SymmetricPolygon random_symmetric_polygon(Rng& rng, int half_points) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point2> pts;
        for (int i = 0; i < half_points; ++i) {
            double r = rng.uniform(0.5, 1.5);
            Point2 p = rng.direction() * r;
            pts.push_back(p);
            pts.push_back(-p);
        }
        auto hull = convex_hull(pts);
        if (hull.size() < 6) continue;
        try {
            return SymmetricPolygon(hull);
        } catch (const validation_error&) {
            continue;
        }
    }
    throw std::runtime_error("random_symmetric_polygon failed");
}

inline ConvexPolygon random_convex_polygon(Rng& rng, int points, double scale = 1.0) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point2> pts;
        for (int i = 0; i < points; ++i) pts.push_back(rng.point_in_box(-scale, scale));
        auto hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        try {
            return ConvexPolygon(hull);
        } catch (const validation_error&) {
            continue;
        }
    }
    throw std::runtime_error("random_convex_polygon failed");
}

inline SymmetricPolygon regular_gon(int k, double circumradius = 1.0, double phase = 0.0) {
    std::vector<Point2> v(k);
    for (int i = 0; i < k; ++i) {
        double a = phase + 2.0 * 3.14159265358979323846 * i / k;
        v[i] = Point2{std::cos(a), std::sin(a)} * circumradius;
    }
    return SymmetricPolygon(v);
}

inline SymmetricPolygon square_ball() {
    return SymmetricPolygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
}

inline SymmetricPolygon diamond_ball() {
    return SymmetricPolygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

} // namespace oracle
