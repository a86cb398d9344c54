#include "mink/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mink/linprog.hpp"
#include "mink/rng.hpp"

namespace mink {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Triangle::Triangle(Point2 p1, Point2 p2, Point2 p3) : a1(p1), a2(p2), a3(p3) {
    double sc = scale();
    require(std::abs(symp(a2 - a1, a3 - a1)) > 1e-12 * sc * sc, "degenerate triangle");
}

Point2 Triangle::vertex(int i) const {
    switch (((i % 3) + 3) % 3) {
        case 0: return a1;
        case 1: return a2;
        default: return a3;
    }
}

Point2 Triangle::side(int i) const { return vertex(i + 2) - vertex(i + 1); }

Line Triangle::side_line(int i) const { return {vertex(i + 1), side(i)}; }

double Triangle::area() const { return 0.5 * std::abs(symp(a2 - a1, a3 - a1)); }

Point2 Triangle::centroid() const { return (a1 + a2 + a3) / 3.0; }

double Triangle::scale() const {
    double s = 1e-300;
    for (Point2 p : {a1, a2, a3}) s = std::max({s, std::abs(p.x1), std::abs(p.x2)});
    return s;
}

namespace {

struct InscribedBall {
    Point2 center;
    double radius;
};

// Largest ball {c + r*unitball} inside the triangle: maximize r subject to,
// per side, signed-distance(c, side) >= r. Side functionals are normalized
// to unit dual norm so r is the true radius in the chosen metric.
InscribedBall incenter_lp(const NormSpec& n, const Triangle& t, bool anti) {
    LpProblem lp(3); // c1, c2, r
    double sc = t.scale();
    lp.set_bounds(0, -4 * sc, 4 * sc);
    lp.set_bounds(1, -4 * sc, 4 * sc);
    lp.set_bounds(2, 0, 4 * sc);
    Point2 g = t.centroid();
    for (int i = 0; i < 3; ++i) {
        Line l = t.side_line(i);
        double dual = anti ? n.gauge(l.direction) : n.antinorm(l.direction);
        double sgn = symp(g - l.point, l.direction) > 0 ? 1.0 : -1.0;
        // sgn * symp(c - q, d) / dual >= r
        Point2 d = l.direction;
        lp.add_constraint({sgn * -d.x2 / dual, sgn * d.x1 / dual, 1.0},
                          sgn * -symp(l.point, d) / dual);
    }
    lp.c = {0, 0, 1};
    auto r = solve_lp(lp);
    require(r.feasible, "incenter program infeasible");
    return {{r.x[0], r.x[1]}, r.x[2]};
}

double width_in_direction(const NormSpec& n, const Triangle& t, Point2 d) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            m = std::max(m, std::abs(symp(t.vertex(i) - t.vertex(j), d)));
    return m / n.antinorm(d);
}

} // namespace

double min_width(const NormSpec& n, const Triangle& t) {
    std::vector<double> angles;
    for (int i = 0; i < 3; ++i) angles.push_back(direction_angle(t.side(i)));
    for (const auto& v : n.unit_ball().vertices()) angles.push_back(direction_angle(v));
    for (const auto& v : n.isoperimetrix_polygon().vertices())
        angles.push_back(direction_angle(v));
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    auto width_at = [&](double a) {
        return width_in_direction(n, t, {std::cos(a), std::sin(a)});
    };
    double best = std::numeric_limits<double>::infinity();
    size_t best_idx = 0;
    for (size_t k = 0; k < angles.size(); ++k) {
        double w = width_at(angles[k]);
        if (w < best) {
            best = w;
            best_idx = k;
        }
    }
    // golden-section polish inside the bracketing interval
    size_t m = angles.size();
    double lo = angles[(best_idx + m - 1) % m];
    double hi = angles[(best_idx + 1) % m];
    if (lo > angles[best_idx]) lo -= kPi;
    if (hi < angles[best_idx]) hi += kPi;
    const double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = width_at(x1), f2 = width_at(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = width_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = width_at(x2);
        }
    }
    return std::min({best, f1, f2});
}

bool width_preserving_shrink_exists(const NormSpec& n, const Triangle& t) {
    double w0 = min_width(n, t);
    double sc = t.scale();
    for (int k = 0; k < 3; ++k) {
        // only sides whose own direction attains the minimum can anchor a
        // width-preserving shrink
        if (width_in_direction(n, t, t.side(k)) > w0 * (1 + 1e-9)) continue;
        for (double step : {1e-2, 1e-3, 1e-4, 1e-5}) {
            for (int which : {1, 2}) {
                Point2 from = t.vertex(k + which);
                Point2 to = t.vertex(k + (which == 1 ? 2 : 1));
                Point2 moved = from + (to - from) * step;
                Triangle shrunk(which == 1 ? t.vertex(k) : t.vertex(k),
                                which == 1 ? moved : t.vertex(k + 1),
                                which == 1 ? t.vertex(k + 2) : moved);
                if (std::abs(min_width(n, shrunk) - w0) <= 1e-9 * sc) return true;
            }
        }
    }
    return false;
}

TriangleReport triangle_report(const NormSpec& n, const Triangle& t) {
    TriangleReport rep;
    rep.area = t.area();
    rep.centroid = t.centroid();
    for (int i = 0; i < 3; ++i) {
        rep.side_norm[i] = n.gauge(t.side(i));
        rep.side_antinorm[i] = n.antinorm(t.side(i));
        rep.height_norm[i] = line_distance(n, t.vertex(i), t.side_line(i));
        rep.height_antinorm[i] = line_distance_antinorm(n, t.vertex(i), t.side_line(i));
    }
    auto in = incenter_lp(n, t, false);
    rep.incenter = in.center;
    rep.inradius = in.radius;
    auto anti = incenter_lp(n, t, true);
    rep.anti_incenter = anti.center;
    rep.anti_inradius = anti.radius;
    double smax = std::max({rep.side_antinorm[0], rep.side_antinorm[1], rep.side_antinorm[2]});
    double smin = std::min({rep.side_antinorm[0], rep.side_antinorm[1], rep.side_antinorm[2]});
    rep.is_anti_equilateral = (smax - smin) <= 1e-6 * smax;
    rep.min_width = min_width(n, t);
    rep.is_reduced = rep.is_anti_equilateral; // reduced iff anti-equilateral
    return rep;
}

Point2 busemann_bisector(const NormSpec& n, Point2 /*vertex*/, Point2 ray1, Point2 ray2) {
    require(norm2(ray1) > 0 && norm2(ray2) > 0, "zero ray");
    Point2 u1 = n.unit(ray1), u2 = n.unit(ray2);
    Point2 mid = (u1 + u2) * 0.5;
    require(norm2(mid) > 1e-12, "straight angle has no unique bisector");
    return mid;
}

Point2 glogovskii_bisector(const NormSpec& n, Point2 /*vertex*/, Point2 ray1, Point2 ray2,
                           BisectorMetric metric) {
    require(norm2(ray1) > 0 && norm2(ray2) > 0, "zero ray");
    double s = std::abs(symp(ray1, ray2));
    require(s > 1e-12 * norm2(ray1) * norm2(ray2), "rays must be independent");
    // For p = v + alpha d1 + beta d2 the two side distances are
    // beta |symp(d2,d1)| / m(d1) and alpha |symp(d1,d2)| / m(d2), with m the
    // dual length (antinorm for the norm metric, gauge for the antinorm
    // metric). Equality fixes (alpha, beta) ~ (m(d2), m(d1)).
    double w1, w2;
    if (metric == BisectorMetric::Norm) {
        w1 = n.antinorm(ray2);
        w2 = n.antinorm(ray1);
    } else {
        w1 = n.gauge(ray2);
        w2 = n.gauge(ray1);
    }
    return ray1 * w1 + ray2 * w2;
}

FtResult fermat_torricelli(const NormSpec& n, const Triangle& t) {
    double sc = t.scale();
    FtResult res;
    if (n.is_polygonal()) {
        const auto& I = n.isoperimetrix_polygon();
        auto build = [&](const std::vector<double>& obj,
                         const std::vector<std::pair<std::vector<double>, double>>& extra) {
            LpProblem lp(5); // x1, x2, s1, s2, s3
            lp.set_bounds(0, -4 * sc, 4 * sc);
            lp.set_bounds(1, -4 * sc, 4 * sc);
            for (int k = 0; k < 3; ++k) lp.set_bounds(2 + k, 0, 16 * sc);
            for (int k = 0; k < 3; ++k) {
                Point2 a = t.vertex(k);
                for (const auto& w : I.vertices()) {
                    // symp(x - a, w) <= s_k
                    std::vector<double> row{w.x2, -w.x1, 0, 0, 0};
                    row[2 + k] = -1;
                    lp.add_constraint(row, symp(a, w));
                }
            }
            for (const auto& [row, rhs] : extra) lp.add_constraint(row, rhs);
            lp.c = obj;
            return solve_lp(lp);
        };
        auto first = build({0, 0, -1, -1, -1}, {});
        require(first.feasible, "fermat-torricelli program infeasible");
        double vstar = -first.value;
        double slack = 1e-9 * (1 + vstar);
        // lexicographically smallest optimal point
        auto second =
            build({-1, 0, 0, 0, 0}, {{{0, 0, 1, 1, 1}, vstar + slack}});
        require(second.feasible, "fermat-torricelli tie-break infeasible");
        auto third = build({0, -1, 0, 0, 0}, {{{0, 0, 1, 1, 1}, vstar + slack},
                                              {{1, 0, 0, 0, 0}, second.x[0] + slack}});
        require(third.feasible, "fermat-torricelli tie-break infeasible");
        res.point = {third.x[0], third.x[1]};
    } else {
        // compass search on the convex objective
        auto f = [&](Point2 x) {
            return n.gauge(x - t.a1) + n.gauge(x - t.a2) + n.gauge(x - t.a3);
        };
        Point2 x = t.centroid();
        double fx = f(x);
        double step = sc;
        while (step > 1e-10 * sc) {
            bool improved = false;
            for (int k = 0; k < 8; ++k) {
                double a = 2 * kPi * k / 8;
                Point2 y = x + Point2{std::cos(a), std::sin(a)} * step;
                double fy = f(y);
                if (fy < fx - 1e-15 * fx) {
                    x = y;
                    fx = fy;
                    improved = true;
                    break;
                }
            }
            if (!improved) step *= 0.5;
        }
        res.point = x;
    }
    res.value = n.gauge(res.point - t.a1) + n.gauge(res.point - t.a2) +
                n.gauge(res.point - t.a3);
    // snap onto a vertex when the optimum sits there up to solver slack
    for (int k = 0; k < 3; ++k) {
        Point2 v = t.vertex(k);
        if (norm2(res.point - v) > 1e-6 * sc) continue;
        double fv = n.gauge(v - t.a1) + n.gauge(v - t.a2) + n.gauge(v - t.a3);
        if (fv <= res.value + 1e-9 * (1 + res.value)) {
            res.point = v;
            res.value = fv;
        }
        res.at_vertex = true;
    }
    return res;
}

FtCharacterization verify_ft_characterization(const NormSpec& n, const Triangle& t) {
    FtResult ft = fermat_torricelli(n, t);
    if (ft.at_vertex) return {true, true};

    Point2 p = ft.point;
    double sc = t.scale();
    std::array<Point2, 3> contact;
    std::array<NormalCone, 3> cones;
    for (int k = 0; k < 3; ++k) {
        Point2 r = t.vertex(k) - p;
        contact[k] = p + n.unit(r);
        // the FT point carries optimizer slack; widen the contact test so a
        // vertex ray missed by that slack still opens its tangent fan
        double tol = 1e-6 + 1e-8 * sc / norm2(r);
        cones[k] = normal_cone(n, r, tol);
    }

    auto defect_at = [&](double t0, double t1, double t2) {
        std::array<double, 3> ts{t0, t1, t2};
        std::array<Point2, 3> dirs;
        for (int k = 0; k < 3; ++k) dirs[k] = cones[k].sample(ts[k]);
        std::array<Point2, 3> v;
        for (int k = 0; k < 3; ++k) {
            Point2 d1 = dirs[k], d2 = dirs[(k + 1) % 3];
            double den = symp(d1, d2);
            if (std::abs(den) < 1e-12) return 1e300;
            // intersection of the tangent lines at contact k and k+1
            Point2 q1 = contact[k], q2 = contact[(k + 1) % 3];
            double s = symp(q2 - q1, d2) / den;
            v[k] = q1 + d1 * s;
        }
        std::array<double, 3> len;
        for (int k = 0; k < 3; ++k) len[k] = n.antinorm(v[(k + 1) % 3] - v[k]);
        double mx = std::max({len[0], len[1], len[2]});
        double mn = std::min({len[0], len[1], len[2]});
        if (!(mx > 0) || !std::isfinite(mx)) return 1e300;
        return (mx - mn) / mx;
    };

    const int grid = 32;
    std::array<double, 3> best{0, 0, 0};
    double bestv = 1e300;
    bool smooth = cones[0].singleton() && cones[1].singleton() && cones[2].singleton();
    if (smooth) {
        bestv = defect_at(0, 0, 0);
    } else {
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j)
                for (int k = 0; k <= grid; ++k) {
                    double v = defect_at(i / double(grid), j / double(grid), k / double(grid));
                    if (v < bestv) {
                        bestv = v;
                        best = {i / double(grid), j / double(grid), k / double(grid)};
                    }
                }
        // coordinate-descent refinement
        double step = 1.0 / grid;
        for (int round = 0; round < 60 && bestv > 1e-9; ++round) {
            bool improved = false;
            for (int c = 0; c < 3; ++c) {
                for (double dir : {-1.0, 1.0}) {
                    auto cand = best;
                    cand[c] = std::clamp(cand[c] + dir * step, 0.0, 1.0);
                    double v = defect_at(cand[0], cand[1], cand[2]);
                    if (v < bestv) {
                        bestv = v;
                        best = cand;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
    }
    return {bestv <= 1e-6, false};
}

double viviani_defect(const NormSpec& n, const Triangle& t, const std::vector<Point2>& points) {
    std::array<double, 3> anti;
    for (int i = 0; i < 3; ++i) anti[i] = n.antinorm(t.side(i));
    double smax = std::max({anti[0], anti[1], anti[2]});
    double smin = std::min({anti[0], anti[1], anti[2]});
    require((smax - smin) <= 1e-6 * smax, "triangle is not anti-equilateral");

    Point2 g = t.centroid();
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& p : points) {
        double sum = 0;
        for (int i = 0; i < 3; ++i) {
            Line l = t.side_line(i);
            double sgn = symp(g - l.point, l.direction) > 0 ? 1.0 : -1.0;
            sum += sgn * symp(p - l.point, l.direction) / n.antinorm(l.direction);
        }
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
    }
    return points.empty() ? 0.0 : hi - lo;
}

} // namespace mink
