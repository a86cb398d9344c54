#include "mink/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mink/linprog.hpp"
#include "mink/rng.hpp"

namespace mink {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double perimeter(const NormSpec& n, const ConvexPolygon& c) {
    double p = 0;
    for (int i = 0; i < c.size(); ++i) p += n.gauge(c.edge_vector(i));
    return p;
}

AnticircleFit inscribed_anticircle(const NormSpec& n, const ConvexPolygon& c) {
    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    double sc = c.scale();
    LpProblem lp(3); // c1, c2, rho
    lp.set_bounds(0, -2 * sc, 2 * sc);
    lp.set_bounds(1, -2 * sc, 2 * sc);
    lp.set_bounds(2, 0, 4 * sc);
    std::vector<double> reaches;
    auto planes = edge_halfplanes(c);
    for (const auto& h : planes) {
        double reach = support(I, h.phi).value; // max of phi over I
        reaches.push_back(reach);
        // phi(center) + rho * reach <= offset
        lp.add_constraint({h.phi.g.x2, -h.phi.g.x1, reach}, h.offset);
    }
    lp.c = {0, 0, 1};
    auto r = solve_lp(lp);
    require(r.feasible, "inscribed anticircle program infeasible");
    // polish: the exact radius at the returned center (feasible and at most
    // the LP's tolerance slack away from the optimum)
    Point2 center{r.x[0], r.x[1]};
    double rho = 1e300;
    for (size_t j = 0; j < planes.size(); ++j)
        rho = std::min(rho, (planes[j].offset - planes[j].phi(center)) / reaches[j]);
    return {center, std::max(rho, 0.0)};
}

AnticircleFit enclosing_anticircle(const NormSpec& n, const ConvexPolygon& c) {
    const SymmetricPolygon& B = n.unit_ball();
    double sc = c.scale();
    LpProblem lp(3); // c1, c2, sigma
    lp.set_bounds(0, -2 * sc, 2 * sc);
    lp.set_bounds(1, -2 * sc, 2 * sc);
    lp.set_bounds(2, 0, 64 * sc * (1.0 + B.scale()));
    for (const auto& w : c.vertices()) {
        for (const auto& u : B.vertices()) {
            // symp(w - center, u) <= sigma
            lp.add_constraint({-u.x2, u.x1, -1.0}, -symp(w, u));
        }
    }
    lp.c = {0, 0, -1};
    auto r = solve_lp(lp);
    require(r.feasible, "enclosing anticircle program infeasible");
    return {{r.x[0], r.x[1]}, r.x[2]};
}

IsoperimetricReport inequality_report(const NormSpec& n, const ConvexPolygon& c) {
    IsoperimetricReport rep;
    rep.perimeter = perimeter(n, c);
    rep.area = c.area();
    rep.iota = rep.perimeter * rep.perimeter / rep.area;
    AnticircleFit in = inscribed_anticircle(n, c);
    AnticircleFit out = enclosing_anticircle(n, c);
    rep.rho = in.radius;
    rep.sigma = out.radius;

    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    double areaI = I.area();
    double p = rep.perimeter, a = rep.area, rho = rep.rho, sigma = rep.sigma;

    // the circumscribed companion polygon: sides parallel to those of C,
    // touching the inscribed anticircle
    ConvexPolygon inner = ConvexPolygon(I.scaled(rho).vertices()).translated(in.center);
    std::vector<Functional> dirs;
    for (const auto& h : edge_halfplanes(c)) dirs.push_back(h.phi);
    ConvexPolygon q = circumscribe(inner, dirs);
    double pq = perimeter(n, q), aq = q.area();

    auto& s = rep.inequality_slacks;
    auto& m = rep.inequality_scales;
    s["circump"] = 2 * a - rho * p;
    m["circump"] = 2 * a + rho * p;
    s["chakerian_star"] = rho * p - a - aq;
    m["chakerian_star"] = rho * p + a + aq;
    s["lhuilier"] = p * p * rho * rho - 4 * a * aq;
    m["lhuilier"] = p * p * rho * rho + 4 * a * aq;
    s["ratio_diff"] = rep.iota - pq * pq / aq - (p - pq) * (p - pq) / a;
    m["ratio_diff"] = rep.iota + pq * pq / aq + (p - pq) * (p - pq) / a;
    s["bonnesen_plus"] = rho * p - a - rho * rho * areaI;
    m["bonnesen_plus"] = rho * p + a + rho * rho * areaI;
    s["bonnesen_plusplus"] = sigma * p - a - sigma * sigma * areaI;
    m["bonnesen_plusplus"] = sigma * p + a + sigma * sigma * areaI;
    double bl = std::numeric_limits<double>::infinity();
    auto blaschke = [&](double alpha) { return alpha * p - a - alpha * alpha * areaI; };
    for (int k = 0; k <= 100; ++k) bl = std::min(bl, blaschke(rho + (sigma - rho) * k / 100.0));
    double vertex_alpha = p / (2 * areaI); // stationary point of the parabola
    if (vertex_alpha >= rho && vertex_alpha <= sigma) bl = std::min(bl, blaschke(vertex_alpha));
    s["blaschke_family_min"] = bl;
    m["blaschke_family_min"] = sigma * p + a + sigma * sigma * areaI;
    s["petty_deficit"] = p * p - 4 * areaI * a - areaI * areaI * (sigma - rho) * (sigma - rho);
    m["petty_deficit"] = p * p + 4 * areaI * a + areaI * areaI * (sigma - rho) * (sigma - rho);
    return rep;
}

namespace {

struct SupportLine {
    Point2 u;   // outward Euclidean unit normal
    double h;   // support value: line is dot(x, u) = h
};

Point2 line_pair_vertex(const SupportLine& a, const SupportLine& b) {
    double det = a.u.x1 * b.u.x2 - a.u.x2 * b.u.x1;
    return {(a.h * b.u.x2 - a.u.x2 * b.h) / det, (a.u.x1 * b.h - a.h * b.u.x1) / det};
}

double euclid_support(const SymmetricPolygon& I, Point2 u) {
    double m = -1e300;
    for (const auto& v : I.vertices()) m = std::max(m, dot(v, u));
    return m;
}

} // namespace

ZenodorusResult zenodorus(const NormSpec& n, int ngon) {
    require(ngon >= 3, "need at least a triangle");
    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    NormSpec norm_of_I = NormSpec::polygon(I);
    const double diam = I.diameter();
    const int max_iter = 10000;
    const int m = I.size();

    auto lines_of = [&](const std::vector<double>& theta, std::vector<SupportLine>& lines) {
        for (int i = 0; i < ngon; ++i) {
            Point2 u{std::cos(theta[i]), std::sin(theta[i])};
            lines[i] = {u, euclid_support(I, u)};
        }
    };
    auto verts_of = [&](const std::vector<SupportLine>& lines, std::vector<Point2>& verts) {
        for (int i = 0; i < ngon; ++i) {
            const auto& l1 = lines[i];
            const auto& l2 = lines[(i + 1) % ngon];
            double det = l1.u.x1 * l2.u.x2 - l1.u.x2 * l2.u.x1;
            if (det < 1e-12) return false; // parallel or wrongly ordered normals
            verts[i] = line_pair_vertex(l1, l2);
        }
        return true;
    };
    // side i lies on line i between verts[i-1] and verts[i]
    auto max_dev = [&](const std::vector<Point2>& verts) {
        double dev = 0;
        for (int i = 0; i < ngon; ++i) {
            Point2 mid = (verts[(i + ngon - 1) % ngon] + verts[i]) * 0.5;
            dev = std::max(dev, std::abs(norm_of_I.gauge(mid) - 1.0));
        }
        return dev;
    };
    auto finish = [&](const std::vector<Point2>& verts, double dev,
                      int it) -> std::unique_ptr<ZenodorusResult> {
        try {
            std::vector<Point2> vcopy = verts;
            ZenodorusResult res{ConvexPolygon(vcopy), 0.0, dev, it};
            res.area = res.polygon.area();
            return std::make_unique<ZenodorusResult>(res);
        } catch (const validation_error&) {
            return nullptr;
        }
    };

    // Target support angle for one side: the edge normal under the radial
    // projection of the side midpoint; when that projection sits on a vertex
    // of I, any angle of the vertex fan supports, so the current angle is
    // clamped into the fan instead of being snapped to an edge.
    auto target_angle = [&](Point2 mid, double current) {
        Point2 bp = boundary_point(I, mid);
        int best_edge = 0;
        double bestd = 1e300;
        for (int e = 0; e < m; ++e) {
            Point2 a = I.vertex(e), b2 = I.vertex(e + 1);
            double d = std::abs(symp(b2 - a, bp - a)) / norm2(b2 - a);
            if (d < bestd) {
                bestd = d;
                best_edge = e;
            }
        }
        const double vtol = 1e-7 * diam;
        int vertex_at = -1;
        if (norm2(bp - I.vertex(best_edge)) <= vtol)
            vertex_at = best_edge;
        else if (norm2(bp - I.vertex(best_edge + 1)) <= vtol)
            vertex_at = I.wrap(best_edge + 1);
        auto edge_normal = [&](int e) {
            Point2 ev = I.edge_vector(e);
            return std::atan2(-ev.x1, ev.x2);
        };
        if (vertex_at < 0) return edge_normal(best_edge);
        double lo = edge_normal(I.wrap(vertex_at - 1));
        double hi = edge_normal(vertex_at);
        while (hi < lo) hi += 2 * kPi;
        double cur = current;
        while (cur < lo) cur += 2 * kPi;
        while (cur > lo + 2 * kPi) cur -= 2 * kPi;
        if (cur <= hi) return cur; // already supporting at the vertex
        return (cur - hi < lo + 2 * kPi - cur) ? hi : lo;
    };

    auto run_midpoint = [&](double phase) -> std::unique_ptr<ZenodorusResult> {
        std::vector<double> theta(ngon);
        for (int i = 0; i < ngon; ++i) theta[i] = 2 * kPi * i / ngon + phase;
        std::vector<SupportLine> lines(ngon);
        std::vector<Point2> verts(ngon);
        for (int it = 0; it < max_iter; ++it) {
            lines_of(theta, lines);
            if (!verts_of(lines, verts)) return nullptr;
            double dev = max_dev(verts);
            if (dev <= 1e-6) return finish(verts, dev, it);
            double moved = 0;
            for (int i = 0; i < ngon; ++i) {
                Point2 mid = (verts[(i + ngon - 1) % ngon] + verts[i]) * 0.5;
                double d = target_angle(mid, theta[i]) - theta[i];
                while (d > kPi) d -= 2 * kPi;
                while (d < -kPi) d += 2 * kPi;
                theta[i] += 0.5 * d; // damping guards oscillation at corners
                moved = std::max(moved, std::abs(d));
            }
            if (moved < 1e-14) return nullptr; // stalled off-tolerance
        }
        return nullptr;
    };

    // Fallback: cyclic coordinate descent on the circumscribed area; Dowker's
    // midpoint property is then verified on the result.
    auto run_descent = [&](double phase) -> std::unique_ptr<ZenodorusResult> {
        std::vector<double> theta(ngon);
        for (int i = 0; i < ngon; ++i) theta[i] = 2 * kPi * i / ngon + phase;
        std::vector<SupportLine> lines(ngon);
        std::vector<Point2> verts(ngon);
        auto area_of = [&](const std::vector<double>& th) {
            lines_of(th, lines);
            if (!verts_of(lines, verts)) return 1e300;
            return polyline_area(verts);
        };
        double cur = area_of(theta);
        if (cur >= 1e300) return nullptr;
        for (int round = 0; round < 200; ++round) {
            double before = cur;
            for (int i = 0; i < ngon; ++i) {
                double span = 0.45 * 2 * kPi / ngon;
                double lo = theta[i] - span, hi = theta[i] + span;
                const double inv_phi = 0.6180339887498949;
                double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
                auto eval = [&](double a) {
                    auto th = theta;
                    th[i] = a;
                    return area_of(th);
                };
                double f1 = eval(x1), f2 = eval(x2);
                for (int g = 0; g < 60; ++g) {
                    if (f1 <= f2) {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - inv_phi * (hi - lo);
                        f1 = eval(x1);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + inv_phi * (hi - lo);
                        f2 = eval(x2);
                    }
                }
                double mid = 0.5 * (lo + hi), fm = eval(mid);
                if (fm < cur) {
                    theta[i] = mid;
                    cur = fm;
                }
            }
            if (before - cur < 1e-13 * (1 + cur)) break;
        }
        lines_of(theta, lines);
        if (!verts_of(lines, verts)) return nullptr;
        double dev = max_dev(verts);
        if (dev > 1e-6) return nullptr;
        return finish(verts, dev, max_iter);
    };

    std::unique_ptr<ZenodorusResult> best;
    for (int k = 0; k < 8; ++k) {
        auto r = run_midpoint(k * 2 * kPi / (8.0 * ngon));
        if (r && (!best || r->area < best->area)) best = std::move(r);
    }
    for (int k = 0; k < 8; ++k) {
        auto r = run_descent(k * 2 * kPi / (8.0 * ngon));
        if (r && (!best || r->area < best->area)) best = std::move(r);
    }
    if (!best) throw solver_error("zenodorus iteration did not converge");
    return *best;
}

GirthReport girth_report(const NormSpec& n) {
    const SymmetricPolygon& B = n.unit_ball();
    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    GirthReport g;
    for (int i = 0; i < B.size(); ++i) {
        g.p_B_of_B += n.gauge(B.edge_vector(i));
        g.p_I_of_B += n.antinorm(B.edge_vector(i));
    }
    for (int i = 0; i < I.size(); ++i) {
        g.p_B_of_I += n.gauge(I.edge_vector(i));
        g.p_I_of_I += n.antinorm(I.edge_vector(i));
    }
    return g;
}

ArcMeasure angular_measures(const NormSpec& n, Point2 from, Point2 to) {
    const SymmetricPolygon& B = n.unit_ball();
    auto arc = boundary_arc(B, from, to);
    double len = 0;
    for (size_t i = 0; i + 1 < arc.size(); ++i) len += n.gauge(arc[i + 1] - arc[i]);
    std::vector<Point2> sector{{0, 0}};
    sector.insert(sector.end(), arc.begin(), arc.end());
    double sect = polyline_area(sector);
    ArcMeasure m;
    m.mu_l = 2 * kPi * len / perimeter(n, B);
    m.mu_a = 2 * kPi * sect / B.area();
    return m;
}

double kepler_check(const NormSpec& n, int k) {
    require(k >= 2, "need at least two arcs");
    const SymmetricPolygon& I = n.isoperimetrix_polygon();
    int m = I.size();
    double total = 0;
    for (int i = 0; i < m; ++i) total += n.gauge(I.edge_vector(i));

    // walk the boundary, cutting at every multiple of total/k
    double step = total / k;
    std::vector<double> sector_area(k, 0.0);
    double walked = 0;
    int cut = 0;
    Point2 cursor = I.vertex(0);
    for (int i = 0; i < m; ++i) {
        Point2 a = I.vertex(i), b = I.vertex(i + 1);
        double elen = n.gauge(b - a);
        double epos = 0; // consumed length within this edge
        while (cut + 1 <= k) {
            double next_cut = (cut + 1) * step;
            if (next_cut > walked + elen - epos + 1e-15 * total) break;
            double need = next_cut - walked;
            Point2 pt = a + (b - a) * ((epos + need) / elen);
            sector_area[cut] += 0.5 * symp(cursor, pt);
            cursor = pt;
            walked = next_cut;
            epos += need;
            ++cut;
        }
        double rest = elen - epos;
        if (rest > 0 && cut < k) {
            sector_area[cut] += 0.5 * symp(cursor, b);
            cursor = b;
            walked += rest;
        }
    }
    double mx = -1e300, mn = 1e300;
    for (double s : sector_area) {
        mx = std::max(mx, s);
        mn = std::min(mn, s);
    }
    return mx - mn;
}

double circumscribed_ratio_scan(const NormSpec& n, int trials, std::uint64_t seed) {
    const SymmetricPolygon& B = n.unit_ball();
    double mx = -1e300, mn = 1e300;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        double rho = rng.uniform(0.5, 2.0);
        ConvexPolygon ball(B.scaled(rho).vertices());
        // three supporting directions with positive span
        std::vector<double> ang;
        for (int tries = 0; tries < 200; ++tries) {
            ang = {rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
            std::sort(ang.begin(), ang.end());
            double g1 = ang[1] - ang[0], g2 = ang[2] - ang[1], g3 = 2 * kPi - ang[2] + ang[0];
            if (std::max({g1, g2, g3}) < kPi - 0.15) break;
            ang.clear();
        }
        if (ang.empty()) continue;
        std::vector<Functional> dirs;
        for (double a : ang) dirs.push_back(Functional{rot90({std::cos(a), std::sin(a)})});
        ConvexPolygon tri = circumscribe(ball, dirs);
        double ratio = rho * perimeter(n, tri) / tri.area();
        mx = std::max(mx, ratio);
        mn = std::min(mn, ratio);
    }
    require(mn > 0 && mx > -1e300, "scan produced no triangles");
    return mx / mn;
}

} // namespace mink
