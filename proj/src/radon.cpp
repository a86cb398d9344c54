#include "mink/radon.hpp"

#include <algorithm>
#include <cmath>

#include "mink/rng.hpp"

namespace mink {

std::vector<Point2> QuadrantArc::points() const {
    std::vector<Point2> w{a};
    w.insert(w.end(), interior.begin(), interior.end());
    w.push_back(b);
    return w;
}

void QuadrantArc::validate() const {
    const double sc = std::max({1.0, norm2(a), norm2(b)});
    require(std::abs(symp(a, b) - 1.0) <= 1e-9 * sc * sc, "arc endpoints need symp(a,b) = 1");
    auto w = points();
    const double s = symp(a, b);
    for (const auto& x : w) {
        // coordinates in the (a, b) frame
        double alpha = symp(x, b) / s;
        double beta = symp(a, x) / s;
        require(alpha >= -1e-9 && alpha <= 1 + 1e-9 && beta >= -1e-9 && beta <= 1 + 1e-9,
                "arc leaves the parallelogram o,a,b,a+b");
    }
    // convex position of o -> a -> ... -> b -> o, counterclockwise
    std::vector<Point2> loop{{0, 0}};
    loop.insert(loop.end(), w.begin(), w.end());
    int m = static_cast<int>(loop.size());
    for (int i = 0; i < m; ++i) {
        Point2 p = loop[i], q = loop[(i + 1) % m], r = loop[(i + 2) % m];
        require(symp(q - p, r - q) >= -1e-9 * sc * sc, "arc is not in convex position");
    }
    for (size_t i = 0; i + 1 < w.size(); ++i)
        require(symp(w[i], w[i + 1]) > 1e-12 * sc * sc, "arc does not advance around the origin");
}

namespace {

// Shared construction core: the Q2 piece is the anticircle of radius `radius`
// of the partial norm carried by the arc vertices; its vertices are the polar
// images of the arc edges. The joined points are folded into the upper
// half-plane and deduplicated there so the mirrored polygon pairs up exactly
// even when a construction point lands on an endpoint or the negative axis.
SymmetricPolygon complete_radon_curve(const std::vector<Point2>& w, double radius) {
    std::vector<Point2> half = w;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        half.push_back((w[i + 1] - w[i]) * (radius / symp(w[i], w[i + 1])));

    for (auto& p : half)
        if (p.x2 < 0 || (p.x2 == 0 && p.x1 < 0)) p = -p;
    std::sort(half.begin(), half.end(),
              [](Point2 a, Point2 b) { return polar_angle(a) < polar_angle(b); });
    return SymmetricPolygon::from_half(half);
}

std::vector<Point2> prune_collinear_chain(std::vector<Point2> w) {
    for (bool changed = true; changed && w.size() > 2;) {
        changed = false;
        for (size_t i = 1; i + 1 < w.size(); ++i) {
            double sc = norm2(w[i + 1] - w[i - 1]);
            if (std::abs(symp(w[i] - w[i - 1], w[i + 1] - w[i])) <=
                1e-12 * sc * sc + 1e-300) {
                w.erase(w.begin() + i);
                changed = true;
                break;
            }
        }
    }
    return w;
}

} // namespace

SymmetricPolygon radon_construct(const QuadrantArc& arc) {
    arc.validate();
    auto w = prune_collinear_chain(arc.points());
    return complete_radon_curve(w, 1.0);
}

RadonReport is_radon(const NormSpec& n) {
    // Analytic backends are judged through their discretization.
    const SymmetricPolygon& B = n.unit_ball();
    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    NormSpec nb = n.is_polygonal() ? n : NormSpec::polygon(B);
    NormSpec ni = NormSpec::polygon(I);

    // log gauge_B / gauge_I is piecewise monotone between vertex directions
    // of B and I, so its extrema sit at those directions.
    double mx = -1e300, mn = 1e300;
    auto scan = [&](const std::vector<Point2>& dirs) {
        for (const auto& d : dirs) {
            double r = std::log(nb.gauge(d) / ni.gauge(d));
            mx = std::max(mx, r);
            mn = std::min(mn, r);
        }
    };
    scan(B.vertices());
    scan(I.vertices());

    RadonReport rep;
    rep.relative_defect = 0.5 * (mx - mn);
    rep.lambda = std::exp(-0.5 * (mx + mn));
    // Analytic backends carry an inscribed-discretization defect floor, so
    // their detection threshold is the coarser one.
    rep.is_radon = rep.relative_defect <= (n.is_polygonal() ? 1e-6 : 1e-3);

    // Gruber's epsilon: worst distance from x to the nearest unit z with
    // y -| z, over unit normal pairs x -| y. Vertex cones concentrate the
    // asymmetry, so cone endpoints are always included; the inner minimum is
    // refined so exact symmetric pairs report 0 and not grid resolution.
    const int kDirs = 720;
    const double pi = 3.14159265358979323846;
    double eps = 0.0;
    for (int k = 0; k < kDirs; ++k) {
        double a = 2 * pi * k / kDirs;
        Point2 x = nb.unit({std::cos(a), std::sin(a)});
        NormalCone cx = normal_cone(nb, x);
        for (double t : {0.0, 0.5, 1.0}) {
            Point2 y = nb.unit(cx.sample(t));
            NormalCone cy = normal_cone(nb, y);
            auto dist_at = [&](double u) {
                Point2 z = nb.unit(cy.sample(u));
                return std::min(nb.gauge(x - z), nb.gauge(x + z));
            };
            double best = 1e300, bt = 0.0;
            const int grid = 32;
            for (int j = 0; j <= grid; ++j) {
                double v = dist_at(j / double(grid));
                if (v < best) {
                    best = v;
                    bt = j / double(grid);
                }
            }
            double lo = std::max(0.0, bt - 1.0 / grid), hi = std::min(1.0, bt + 1.0 / grid);
            for (int it = 0; it < 80; ++it) {
                double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                if (dist_at(m1) <= dist_at(m2))
                    hi = m2;
                else
                    lo = m1;
            }
            best = std::min(best, dist_at(0.5 * (lo + hi)));
            eps = std::max(eps, best);
        }
    }
    rep.asymmetry_eps = eps;
    return rep;
}

RadonizeResult radonize_detailed(const NormSpec& n) {
    require(n.is_polygonal(), "radonize needs a polygon backend");
    const SymmetricPolygon& B = n.unit_ball();

    // The boundary arc between a and b is a legal construction seed only if
    // it stays in the parallelogram o,a,b,a+b, i.e. both a -| b and b -| a.
    auto try_pair = [&](Point2 a, Point2 b) -> std::unique_ptr<RadonizeResult> {
        double s = symp(a, b);
        if (s <= 0) return nullptr;
        auto w = prune_collinear_chain(boundary_arc(B, a, b));
        for (const auto& x : w)
            if (symp(a, x) > s * (1 + 1e-9) || symp(x, b) > s * (1 + 1e-9)) return nullptr;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (symp(w[i], w[i + 1]) <= 0) return nullptr;
        return std::make_unique<RadonizeResult>(
            RadonizeResult{complete_radon_curve(w, s), a, b, s});
    };

    // First choice: a on the positive x1 ray, b the lowest supporting
    // direction in a's cone, counterclockwise from a.
    Point2 a0 = n.unit({1, 0});
    NormalCone cone = normal_cone(n, a0);
    Point2 bdir = cone.dir_lo;
    if (symp(a0, bdir) < 0) bdir = -bdir;
    if (auto r = try_pair(a0, n.unit(bdir))) return *r;

    // Fallback for norms where that arc bulges out of the parallelogram
    // (symp(a, .) peaks strictly inside the arc): the maximal-area inscribed
    // parallelogram pair, which is mutually normal and always valid.
    double best = -1e300;
    Point2 ba, bb;
    int m = B.size();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double s = symp(B.vertex(i), B.vertex(j));
            bool better = s > best * (1 + 1e-12) + 1e-300;
            bool tie = std::abs(s - best) <= 1e-12 * std::abs(best);
            if (better || (tie && polar_angle(B.vertex(i)) < polar_angle(ba))) {
                best = s;
                ba = B.vertex(i);
                bb = B.vertex(j);
            }
        }
    }
    auto r = try_pair(ba, bb);
    require(r != nullptr, "radonize could not find a valid quadrant pair");
    return *r;
}

SymmetricPolygon radonize(const NormSpec& n) { return radonize_detailed(n).curve; }

double stability_ratio(const NormSpec& n) {
    RadonReport rep = is_radon(n);
    require(rep.asymmetry_eps > 1e-9, "ratio undefined");
    SymmetricPolygon R = radonize(n);
    NormSpec nb = n.is_polygonal() ? n : NormSpec::polygon(n.unit_ball());
    NormSpec nr = NormSpec::polygon(R);
    double mx = -1e300, mn = 1e300;
    auto scan = [&](const std::vector<Point2>& dirs) {
        for (const auto& d : dirs) {
            double r = std::log(nb.gauge(d) / nr.gauge(d));
            mx = std::max(mx, r);
            mn = std::min(mn, r);
        }
    };
    scan(n.unit_ball().vertices());
    scan(R.vertices());
    double mu = std::exp(mx - mn); // multiplicative sandwich factor
    return (mu - 1.0) / rep.asymmetry_eps;
}

bool sign_test_3prime(const NormSpec& n, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        Point2 x = rng.direction() * rng.uniform(0.5, 2.0);
        Point2 y = rng.direction() * rng.uniform(0.5, 2.0);
        if (std::abs(symp(x, y)) < 1e-3 * norm2(x) * norm2(y)) continue;
        AlphaInterval lam = normal_coefficients(n, x, y);
        AlphaInterval mu = normal_coefficients(n, y, x);
        for (double l : {lam.lo, lam.hi})
            for (double m : {mu.lo, mu.hi})
                if (l * m < -1e-9) return false;
    }
    return true;
}

SymmetricPolygon generator_regular_gon(int k) {
    require(k >= 6 && k % 4 == 2, "regular Radon polygons have 4n + 2 vertices");
    const double pi = 3.14159265358979323846;
    std::vector<Point2> v(k);
    for (int i = 0; i < k; ++i) v[i] = {std::cos(2 * pi * i / k), std::sin(2 * pi * i / k)};
    return SymmetricPolygon(v);
}

SymmetricPolygon generator_mixed(double p, int n) {
    require(n >= 2, "need at least 2 vertices per quadrant");
    return NormSpec::mixed(p, 4 * n).unit_ball();
}

} // namespace mink
