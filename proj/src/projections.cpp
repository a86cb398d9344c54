#include "mink/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "mink/linprog.hpp"
#include "mink/parallel.hpp"
#include "mink/rng.hpp"

namespace mink {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double DSegmentRegion::area() const {
    double a2 = 0;
    for (const auto& p : pieces) a2 += p.area();
    return a2;
}

Point2 radial_projection(const NormSpec& n, Point2 x) {
    double g = n.gauge(x);
    return g <= 1.0 ? x : x / g;
}

namespace {

// Generic expansion-ratio maximization: random pairs (parallel over trials,
// order-independent through per-trial seeds), then coordinate-wise local
// ascent from the best candidates.
template <class RatioFn, class PairFn>
ScanResult scan_expansion(const RatioFn& ratio_of, const PairFn& sample_pair, int trials,
                          std::uint64_t seed, double step0) {
    struct Cand {
        double ratio;
        Point2 v, w;
    };
    std::vector<Cand> trial_results(trials);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng(derive_seed(seed, t));
        auto [v, w] = sample_pair(rng);
        trial_results[t] = {ratio_of(v, w), v, w};
    });
    std::vector<Cand> best;
    for (const auto& cand : trial_results) {
        if (cand.ratio < 0) continue;
        if (best.size() < 10 || cand.ratio > best.back().ratio) {
            if (best.size() >= 10) best.pop_back();
            best.push_back(cand);
            std::sort(best.begin(), best.end(),
                      [](const Cand& a, const Cand& b) { return a.ratio > b.ratio; });
        }
    }
    ScanResult out;
    for (const auto& c : best) {
        Point2 v = c.v, w = c.w;
        double r = c.ratio, step = step0;
        for (int it = 0; it < 50; ++it) {
            bool improved = false;
            for (int coord = 0; coord < 4; ++coord) {
                for (double sgn : {1.0, -1.0}) {
                    Point2 v2 = v, w2 = w;
                    double* slot = coord == 0   ? &v2.x1
                                   : coord == 1 ? &v2.x2
                                   : coord == 2 ? &w2.x1
                                                : &w2.x2;
                    *slot += sgn * step;
                    double r2 = ratio_of(v2, w2);
                    if (r2 > r) {
                        r = r2;
                        v = v2;
                        w = w2;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.7;
        }
        if (r > out.max_ratio) {
            out.max_ratio = r;
            out.witness_v = v;
            out.witness_w = w;
        }
    }
    return out;
}

// Infimum of `dist` between two segments (jointly convex; nested golden).
template <class DistFn>
double segment_inf_distance(Point2 a1, Point2 b1, Point2 a2, Point2 b2, const DistFn& dist) {
    const double inv_phi = 0.6180339887498949;
    auto inner = [&](double s) {
        Point2 p = a1 + (b1 - a1) * s;
        auto f = [&](double t) { return dist(p - (a2 + (b2 - a2) * t)); };
        double lo = 0, hi = 1, x1 = hi - inv_phi, x2 = inv_phi;
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 <= f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - inv_phi * (hi - lo); f1 = f(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + inv_phi * (hi - lo); f2 = f(x2);
            }
        }
        return f(0.5 * (lo + hi));
    };
    double lo = 0, hi = 1, x1 = hi - inv_phi, x2 = inv_phi;
    double f1 = inner(x1), f2 = inner(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 <= f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo); f1 = inner(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo); f2 = inner(x2);
        }
    }
    return inner(0.5 * (lo + hi));
}

} // namespace

ScanResult nonexpansive_scan(const NormSpec& n, ProjectionMap map, ScanMetric metric,
                             int trials, std::uint64_t seed, const ConvexPolygon* target) {
    auto dist = [&](Point2 v) {
        return metric == ScanMetric::Norm ? n.gauge(v) : n.antinorm(v);
    };
    if (map == ProjectionMap::Radial) {
        auto ratio_of = [&](Point2 v, Point2 w) {
            double den = dist(v - w);
            if (den < 1e-12) return -1.0;
            return dist(radial_projection(n, v) - radial_projection(n, w)) / den;
        };
        auto sample = [&](Rng& rng) {
            Point2 v = rng.direction() * rng.uniform(0.0, 2.5);
            Point2 w = rng.direction() * rng.uniform(0.0, 2.5);
            return std::pair<Point2, Point2>{v, w};
        };
        ScanResult far = scan_expansion(ratio_of, sample, trials, seed, 0.1);
        // close pairs near the unit circle probe the local expansion rate,
        // which is where witnesses on non-Radon norms concentrate
        for (double spread : {1e-2, 1e-4}) {
            auto near_sample = [&, spread](Rng& rng) {
                Point2 anchor = n.unit(rng.direction()) * rng.uniform(0.95, 1.3);
                Point2 other = anchor + rng.direction() * (spread * rng.uniform(0.1, 1.0));
                return std::pair<Point2, Point2>{anchor, other};
            };
            ScanResult local = scan_expansion(ratio_of, near_sample, trials, seed + 101, spread);
            if (local.max_ratio > far.max_ratio) far = local;
        }
        return far;
    }
    require(target != nullptr, "metric projection scan needs a target body");
    double sc = target->scale() + 1.0;
    // The projection is set-valued at flat spots of polyhedral norms; the
    // non-expansive statement concerns the faces, so the scan measures the
    // infimum distance between the two optimal faces (attained by the
    // smoothing-limit selection).
    auto ratio_of = [&](Point2 v, Point2 w) {
        double den = dist(v - w);
        // pairs below the projection's floating-point resolution only
        // amplify epsilon noise in the ratio
        if (den < 1e-3 * sc) return -1.0;
        auto pv = metric_projection(n, *target, v);
        auto pw = metric_projection(n, *target, w);
        if (!pv.face_is_segment && !pw.face_is_segment)
            return dist(pv.point - pw.point) / den;
        return segment_inf_distance(pv.face_a, pv.face_b, pw.face_a, pw.face_b, dist) / den;
    };
    auto sample = [&, sc](Rng& rng) {
        return std::pair<Point2, Point2>{rng.point_in_box(-2.5 * sc, 2.5 * sc),
                                         rng.point_in_box(-2.5 * sc, 2.5 * sc)};
    };
    return scan_expansion(ratio_of, sample, trials, seed, 0.1 * sc);
}

namespace {

// Functionals whose max realizes the metric, when the metric is polyhedral.
const std::vector<Point2>* metric_functionals(const NormSpec& n, ScanMetric metric) {
    if (metric == ScanMetric::Norm && n.is_polygonal())
        return &n.isoperimetrix_polygon().vertices();
    if (metric == ScanMetric::Antinorm &&
        (n.is_polygonal() || n.kind() == NormKind::Mixed))
        return &n.unit_ball().vertices();
    return nullptr;
}

} // namespace

Point2 nearest_on_line(const NormSpec& n, Point2 x, const Line& line, ScanMetric metric) {
    require(norm2(line.direction) > 0, "line needs a direction");
    Point2 q = line.point, d = line.direction;
    if (const auto* funcs = metric_functionals(n, metric)) {
        // distance along the line is max_j (A_j - B_j t); the optimal value
        // is |symp(x-q, d)| over the dual length of d, computed against the
        // same polyhedral metric the functionals define (this matters for
        // the mixed backend, whose antinorm is the discretized one)
        const auto& dual_ball = metric == ScanMetric::Norm
                                    ? n.unit_ball().vertices()
                                    : n.isoperimetrix_polygon().vertices();
        double nu = 0;
        for (const auto& v : dual_ball) nu = std::max(nu, symp(d, v));
        double vstar = std::abs(symp(x - q, d)) / nu;
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        double eps = 1e-12 * (1 + std::abs(vstar)) * (1 + norm2(x - q));
        for (const auto& w : *funcs) {
            double A = symp(x - q, w), B = symp(d, w);
            if (std::abs(B) < 1e-14 * norm2(d) * norm2(w)) continue;
            double bound = (A - vstar - eps) / B;
            if (B > 0)
                lo = std::max(lo, bound);
            else
                hi = std::min(hi, bound);
        }
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
            double t = 0.5 * (std::max(lo, -1e300) + std::min(hi, 1e300));
            if (!std::isfinite(t)) t = 0;
            return q + d * t;
        }
        return q + d * (0.5 * (lo + hi));
    }
    // smooth metric: golden section over an expanding bracket
    auto g = [&](double t) {
        Point2 v = x - (q + d * t);
        return metric == ScanMetric::Norm ? n.gauge(v) : n.antinorm(v);
    };
    double span = 4.0 * (1.0 + norm2(x - q)) / norm2(d);
    double lo = -span, hi = span;
    const double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 200; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        }
    }
    return q + d * (0.5 * (lo + hi));
}

MetricProjection metric_projection(const NormSpec& n, const ConvexPolygon& s, Point2 x) {
    MetricProjection out;
    if (s.contains(x, 1e-12 * (s.scale() + 1))) {
        out.point = out.face_a = out.face_b = x;
        return out;
    }
    if (n.is_polygonal()) {
        // Exact per-edge minimization: along each edge the distance is a max
        // of linear functions of the edge parameter, whose minimum value and
        // argmin interval are closed-form. (A joint LP carries tolerance
        // slack that the non-expansiveness scans would amplify.)
        const auto& W = n.isoperimetrix_polygon().vertices(); // gauge functionals
        const auto& ball = n.unit_ball().vertices();          // dual lengths
        double sc = s.scale() + norm2(x) + 1;
        double best = std::numeric_limits<double>::infinity();
        struct FacePiece {
            Point2 a, b;
            double value;
        };
        std::vector<FacePiece> pieces;
        for (int i = 0; i < s.size(); ++i) {
            Point2 u = s.vertex(i), e = s.edge_vector(i);
            double nu = 0; // dual length of the edge direction
            for (const auto& v : ball) nu = std::max(nu, symp(e, v));
            double vline = std::abs(symp(x - u, e)) / nu;
            // unconstrained argmin interval of max_w (A_w - t B_w)
            double lo = -std::numeric_limits<double>::infinity();
            double hi = std::numeric_limits<double>::infinity();
            double eps = 1e-13 * (1 + vline) * (1 + norm2(x - u));
            for (const auto& w : W) {
                double A = symp(x - u, w), B = symp(e, w);
                if (std::abs(B) < 1e-14 * norm2(e) * norm2(w)) continue;
                double bound = (A - vline - eps) / B;
                if (B > 0)
                    lo = std::max(lo, bound);
                else
                    hi = std::min(hi, bound);
            }
            double t0, t1, value;
            if (hi >= 0.0 && lo <= 1.0 && lo <= hi) {
                t0 = std::clamp(lo, 0.0, 1.0);
                t1 = std::clamp(hi, 0.0, 1.0);
                value = vline;
            } else {
                double t = lo > 1.0 ? 1.0 : 0.0;
                t0 = t1 = t;
                value = n.gauge(x - (u + e * t));
            }
            pieces.push_back({u + e * t0, u + e * t1, value});
            best = std::min(best, value);
        }
        // assemble the optimal face from the achieving edge intervals
        std::vector<Point2> ends;
        for (const auto& p : pieces) {
            if (p.value > best + 1e-12 * (1 + best)) continue;
            ends.push_back(p.a);
            ends.push_back(p.b);
        }
        auto lex = [](Point2 a, Point2 b) {
            return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
        };
        Point2 e1 = *std::min_element(ends.begin(), ends.end(), lex);
        Point2 e2 = *std::max_element(ends.begin(), ends.end(), lex);
        out.face_a = e1;
        out.face_b = e2;
        out.face_is_segment = norm2(e2 - e1) > 1e-9 * sc;
        out.point = (e1 + e2) * 0.5;
        out.distance = n.gauge(x - out.point);
        return out;
    }
    // strictly convex backends: minimize along each edge, unique optimum
    double bestv = std::numeric_limits<double>::infinity();
    Point2 bestp;
    const double inv_phi = 0.6180339887498949;
    for (int i = 0; i < s.size(); ++i) {
        Point2 u = s.vertex(i), e = s.edge_vector(i);
        double lo = 0, hi = 1;
        auto g = [&](double t) { return n.gauge(x - (u + e * t)); };
        double x1 = hi - inv_phi, x2 = inv_phi;
        double f1 = g(x1), f2 = g(x2);
        for (int it = 0; it < 100; ++it) {
            if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = g(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = g(x2);
            }
        }
        double t = 0.5 * (lo + hi), v = g(t);
        if (v < bestv) {
            bestv = v;
            bestp = u + e * t;
        }
    }
    out.point = out.face_a = out.face_b = bestp;
    out.distance = bestv;
    return out;
}

std::vector<Point2> bisector_sample(const NormSpec& n, Point2 p, Point2 q, int count) {
    require(n.kind() != NormKind::Polygon, "strict convexity required");
    require(norm2(q - p) > 0, "bisector of equal points");
    Point2 d = q - p;
    double len = n.gauge(d);
    Point2 u = rot90(d) / norm2(d); // transversal offset direction
    Point2 mid = (p + q) * 0.5;
    std::vector<Point2> samples;
    auto g = [&](Point2 x) { return n.gauge(x - p) - n.gauge(x - q); };
    for (int k = 0; k < count; ++k) {
        double off = count == 1 ? 0.0 : -5.0 * len + 10.0 * len * k / (count - 1);
        Point2 base = mid + u * off;
        // expand a bracket along the segment direction until the sign flips
        double t = len;
        const double t_cap = 1e6 * len;
        while (t < t_cap && g(base - d * t) * g(base + d * t) > 0) t *= 2;
        if (t >= t_cap) continue; // bisector-free offset line
        double lo = -t, hi = t;
        if (g(base + d * lo) > 0) std::swap(lo, hi);
        for (int it = 0; it < 200; ++it) {
            double m = 0.5 * (lo + hi);
            if (g(base + d * m) <= 0)
                lo = m;
            else
                hi = m;
            if (std::abs(g(base + d * (0.5 * (lo + hi)))) <= 1e-10 * std::max(1.0, len) &&
                it > 40)
                break;
        }
        Point2 x = base + d * (0.5 * (lo + hi));
        if (std::abs(g(x)) <= 1e-10 * std::max(1.0, len)) samples.push_back(x);
    }
    return samples;
}

bool strip_test(const std::vector<Point2>& samples, const StripSpec& strip) {
    Point2 v = strip.direction;
    double width = std::abs(symp(strip.q - strip.p, v));
    double margin = 1e-9 * width;
    double s = symp(strip.q - strip.p, v) > 0 ? 1.0 : -1.0;
    for (const auto& x : samples) {
        double a = s * symp(x - strip.p, v);
        double b = s * symp(x - strip.q, v);
        if (!(a > margin && b < -margin)) return false;
    }
    return true;
}

StripSpec bisector_strip(const NormSpec& n, Point2 p, Point2 q) {
    Point2 w = q - p;
    require(norm2(w) > 0, "strip of equal points");
    // v maximizes |symp(., w)| over the unit circle, i.e. v -| w
    double best = -1e300;
    Point2 bestv{1, 0};
    int coarse = 720;
    double besta = 0;
    for (int k = 0; k < coarse; ++k) {
        double a = kPi * k / coarse;
        Point2 v = n.unit({std::cos(a), std::sin(a)});
        double val = std::abs(symp(v, w));
        if (val > best) {
            best = val;
            bestv = v;
            besta = a;
        }
    }
    double lo = besta - kPi / coarse, hi = besta + kPi / coarse;
    for (int it = 0; it < 80; ++it) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        auto val = [&](double a) {
            return std::abs(symp(n.unit({std::cos(a), std::sin(a)}), w));
        };
        if (val(m1) >= val(m2))
            hi = m2;
        else
            lo = m1;
    }
    double a = 0.5 * (lo + hi);
    Point2 v = n.unit({std::cos(a), std::sin(a)});
    if (std::abs(symp(v, w)) > best) bestv = v;
    return {p, q, bestv};
}

StripSpec bisector_strip_radon(const NormSpec& n, Point2 p, Point2 q) {
    Point2 w = q - p;
    require(norm2(w) > 0, "strip of equal points");
    return {p, q, normal_cone(n, w).sample(0.5)};
}

bool d_member(const NormSpec& n, Point2 a, Point2 b, Point2 x) {
    double whole = n.gauge(b - a);
    require(whole > 0, "d-segment of equal points");
    return n.gauge(x - a) + n.gauge(b - x) <= whole + 1e-9 * whole;
}

DSegmentRegion d_segment(const NormSpec& n, Point2 a, Point2 b) {
    DSegmentRegion region{a, b, {}};
    require(norm2(b - a) > 0, "d-segment of equal points");
    if (!n.is_polygonal()) return region; // strictly convex: the segment itself
    const SymmetricPolygon& B = n.unit_ball();
    double g = n.gauge(b - a);
    for (int j = 0; j < B.size(); ++j) {
        Point2 v1 = B.vertex(j), v2 = B.vertex(j + 1);
        // facet functional phi with phi == 1 on the facet
        Point2 fg = (v2 - v1) / symp(v1, v2);
        if (symp(b - a, fg) < g * (1 - 1e-12)) continue; // facet does not norm b-a
        // piece = (a + cone(v1,v2)) /\ (b - cone(v1,v2))
        std::vector<Halfplane> hs;
        hs.push_back({Functional{v1}, symp(a, v1)});    // symp(v1, x - a) >= 0
        hs.push_back({Functional{-v2}, -symp(a, v2)});  // symp(v2, x - a) <= 0
        hs.push_back({Functional{-v1}, -symp(b, v1)});  // symp(v1, b - x) >= 0
        hs.push_back({Functional{v2}, symp(b, v2)});    // symp(v2, b - x) <= 0
        try {
            region.pieces.push_back(halfplane_intersection(hs));
        } catch (const validation_error&) {
            // degenerate piece: contributes only the segment itself
        }
    }
    return region;
}

bool ball_hull_member(const NormSpec& n, const std::vector<Point2>& a, Point2 z,
                      int resolution) {
    require(a.size() >= 2, "ball hull needs at least two points");
    Point2 centroid{0, 0};
    for (const auto& p : a) centroid = centroid + p;
    centroid = centroid / static_cast<double>(a.size());
    double diam = 0;
    for (const auto& p : a)
        for (const auto& q : a) diam = std::max(diam, norm2(p - q));
    if (diam == 0) diam = 1.0;

    auto separated = [&](Point2 c) {
        double r = 0;
        for (const auto& p : a) r = std::max(r, n.gauge(p - c));
        return n.gauge(z - c) > r + 1e-9 * (1 + r);
    };
    // nested grids: each level's centers are reused by all finer levels, so
    // raising the resolution can only shrink the hull
    double R = 10 * diam;
    for (int level = 8; level <= resolution; level *= 2) {
        for (int i = 0; i < level; ++i)
            for (int j = 0; j < level; ++j) {
                Point2 c = centroid + Point2{-R + 2 * R * i / (level - 1.0),
                                             -R + 2 * R * j / (level - 1.0)};
                if (separated(c)) return false;
            }
    }
    for (int k = 0; k < 720; ++k) {
        double ang = 2 * kPi * k / 720;
        Point2 c = centroid + Point2{std::cos(ang), std::sin(ang)} * (1e3 * diam);
        if (separated(c)) return false;
    }
    return true;
}

namespace {

// Radial extent of the exact d-segment region from an interior anchor.
double region_radius(const DSegmentRegion& region, Point2 anchor, Point2 dir,
                     const NormSpec& n) {
    // membership is exact; bisect along the ray (the region is convex)
    auto member = [&](double t) { return d_member(n, region.a, region.b, anchor + dir * t); };
    double hi = 1e-9;
    double cap = 4 * (norm2(region.b - region.a) + 1);
    while (hi < cap && member(hi)) hi *= 2;
    if (hi <= 1e-9) return 0.0;
    double lo = hi / 2 > 1e-9 ? hi / 2 : 0.0;
    for (int it = 0; it < 60; ++it) {
        double m = 0.5 * (lo + hi);
        if (member(m))
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

} // namespace

bool lassak_duality_check(const NormSpec& n, int pairs, std::uint64_t seed) {
    require(n.is_polygonal(), "lassak check needs a polygon backend");
    NormSpec anti = NormSpec::polygon(n.isoperimetrix_polygon());
    for (int t = 0; t < pairs; ++t) {
        Rng rng(derive_seed(seed, t));
        Point2 a = rng.point_in_box(-1.5, 1.5);
        Point2 b = a + rng.direction() * rng.uniform(0.8, 2.0);
        DSegmentRegion region = d_segment(n, a, b);
        Point2 anchor = (a + b) * 0.5;

        // precompute hull separators once per pair
        double diam = norm2(b - a);
        std::vector<std::pair<Point2, double>> balls;
        const int res = 48;
        double R = 10 * diam;
        Point2 centroid = anchor;
        auto add_center = [&](Point2 c) {
            balls.push_back({c, std::max(anti.gauge(a - c), anti.gauge(b - c))});
        };
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j)
                add_center(centroid + Point2{-R + 2 * R * i / (res - 1.0),
                                             -R + 2 * R * j / (res - 1.0)});
        for (int k = 0; k < 360; ++k) {
            double ang = 2 * kPi * k / 360;
            add_center(centroid + Point2{std::cos(ang), std::sin(ang)} * (1e3 * diam));
        }
        auto hull_member = [&](Point2 z) {
            for (const auto& [c, r] : balls)
                if (anti.gauge(z - c) > r + 1e-9 * (1 + r)) return false;
            return true;
        };
        auto hull_radius = [&](Point2 dir) {
            double hi = 1e-9, cap = 4 * (diam + 1);
            while (hi < cap && hull_member(anchor + dir * hi)) hi *= 2;
            if (hi <= 1e-9) return 0.0;
            double lo = hi / 2;
            for (int it = 0; it < 50; ++it) {
                double m = 0.5 * (lo + hi);
                if (hull_member(anchor + dir * m))
                    lo = m;
                else
                    hi = m;
            }
            return 0.5 * (lo + hi);
        };

        // symmetric difference via the radial formula for convex regions
        const int dirs = 96;
        double sym_diff = 0, region_area = 0;
        for (int k = 0; k < dirs; ++k) {
            double ang = 2 * kPi * k / dirs;
            Point2 dir{std::cos(ang), std::sin(ang)};
            double rd = region_radius(region, anchor, dir, n);
            double rh = hull_radius(dir);
            sym_diff += 0.5 * std::abs(rd * rd - rh * rh) * (2 * kPi / dirs);
            region_area += 0.5 * rd * rd * (2 * kPi / dirs);
        }
        double floor_area = 1e-4 * diam * diam;
        if (sym_diff > 1e-3 * std::max(region_area, floor_area)) return false;
    }
    return true;
}

bool antiball_dconvex_check(const NormSpec& n, int pairs, std::uint64_t seed) {
    require(n.is_polygonal(), "antiball check needs a polygon backend");
    for (int t = 0; t < pairs; ++t) {
        Rng rng(derive_seed(seed, t));
        // random pair inside the anticircle
        Point2 a = rng.direction() * rng.uniform(0, 1);
        Point2 b = rng.direction() * rng.uniform(0, 1);
        auto inside = [&](Point2 x) { return n.antinorm(x); };
        if (inside(a) > 1 || inside(b) > 1 || norm2(b - a) < 1e-6) continue;
        DSegmentRegion region = d_segment(n, a, b);
        for (const auto& piece : region.pieces)
            for (const auto& v : piece.vertices())
                if (n.antinorm(v) > 1 + 1e-9) return false;
    }
    return true;
}

StarPolygon::StarPolygon(std::vector<Point2> v) : vertices(std::move(v)) {
    require(vertices.size() >= 3, "star polygon needs 3 vertices");
    int m = static_cast<int>(vertices.size());
    double total = 0;
    for (int i = 0; i < m; ++i) {
        double s = symp(vertices[i], vertices[(i + 1) % m]);
        require(s > 0, "origin is not in the kernel");
        total += s;
    }
    require(total > 0, "degenerate star polygon");
}

Point2 StarPolygon::radial_boundary(Point2 x) const {
    require(norm2(x) > 0, "radial boundary of the origin");
    int m = static_cast<int>(vertices.size());
    for (int i = 0; i < m; ++i) {
        Point2 u = vertices[i], v = vertices[(i + 1) % m];
        // ray t*x against segment u-v
        if (symp(u, x) < 0 || symp(x, v) < 0) continue; // x not in this wedge
        double den = symp(x, v - u);
        if (den == 0) continue;
        double t = symp(u, v) / den;
        if (t > 0) return x * t;
    }
    // numerical wedge miss: fall back to the nearest crossing
    double bestt = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        Point2 u = vertices[i], v = vertices[(i + 1) % m];
        double den = symp(x, v - u);
        if (den == 0) continue;
        double t = symp(u, v) / den;
        double s = symp(x, u) / symp(v - u, x);
        if (t > 0 && s >= -1e-9 && s <= 1 + 1e-9) bestt = std::min(bestt, t);
    }
    require(std::isfinite(bestt), "ray does not cross the boundary");
    return x * bestt;
}

bool StarPolygon::contains(Point2 x) const {
    if (norm2(x) == 0) return true;
    Point2 bp = radial_boundary(x);
    return norm2(x) <= norm2(bp) * (1 + 1e-12);
}

bool antiball_projection_uniqueness_scan(const NormSpec& n, const StarPolygon& s, int trials,
                                         std::uint64_t seed) {
    double sc = 0;
    for (const auto& v : s.vertices) sc = std::max(sc, norm2(v));
    auto f = [&](Point2 x) { return s.contains(x) ? x : s.radial_boundary(x); };
    auto ratio_of = [&](Point2 v, Point2 w) {
        double den = n.gauge(v - w);
        if (den < 1e-9) return -1.0;
        return n.gauge(f(v) - f(w)) / den;
    };
    auto sample = [&, sc](Rng& rng) {
        return std::pair<Point2, Point2>{rng.direction() * rng.uniform(0.0, 2.5 * sc),
                                         rng.direction() * rng.uniform(0.0, 2.5 * sc)};
    };
    ScanResult r = scan_expansion(ratio_of, sample, trials, seed, 0.1 * sc);
    return r.max_ratio <= 1 + 1e-6;
}

} // namespace mink
