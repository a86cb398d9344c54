// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "mink/isoperimetry.hpp"
#include "mink/projections.hpp"
#include "mink/propsuite.hpp"
#include "mink/radon.hpp"
#include "mink/rng.hpp"
#include "mink/triangle.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kSeed = 20260810;

Triangle random_triangle(Rng& rng, double sc = 2.0) {
    for (;;) {
        Point2 a = rng.point_in_box(-sc, sc), b = rng.point_in_box(-sc, sc),
               c = rng.point_in_box(-sc, sc);
        if (std::abs(symp(b - a, c - a)) > 0.3) return Triangle(a, b, c);
    }
}

ConvexPolygon random_body(Rng& rng, int points, double sc = 2.0) {
    for (;;) {
        std::vector<Point2> pts;
        for (int i = 0; i < points; ++i) pts.push_back(rng.point_in_box(-sc, sc));
        auto hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        try {
            return ConvexPolygon(hull);
        } catch (const validation_error&) {
        }
    }
}

std::vector<NormSpec> random_polygon_norms(int count, int max_half, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NormSpec> norms;
    for (int i = 0; i < count; ++i)
        norms.push_back(NormSpec::polygon(oracle::random_symmetric_polygon(rng, 3 + rng.uniform_int(max_half - 2))));
    return norms;
}

// ---------------------------------------------------------------- criteria

bool c1_antinorm_exactness(std::ostream& log) {
    auto n = NormSpec::polygon(oracle::square_ball());
    Rng rng(derive_seed(kSeed, 1));
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        Point2 x = rng.point_in_box(-5, 5);
        double l1 = std::abs(x.x1) + std::abs(x.x2);
        if (l1 == 0) continue;
        worst = std::max(worst, std::abs(n.antinorm(x) - l1) / l1);
    }
    log << "antinorm vs l1 rel err " << worst;
    if (worst > 1e-12) return false;
    auto I = isoperimetrix(n);
    auto diamond = oracle::diamond_ball();
    if (I.size() != 4) return false;
    double vworst = 0;
    for (int i = 0; i < 4; ++i) vworst = std::max(vworst, norm2(I.vertex(i) - diamond.vertex(i)));
    log << ", isoperimetrix vertex err " << vworst;
    return vworst <= 1e-12;
}

bool c2_involution(std::ostream& log) {
    Rng rng(derive_seed(kSeed, 2));
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        auto B = oracle::random_symmetric_polygon(rng, 3 + rng.uniform_int(30));
        worst = std::max(worst,
                         antinorm_involution_defect(NormSpec::polygon(B)) / B.diameter());
    }
    log << "worst defect/diam " << worst;
    return worst <= 1e-9;
}

bool c3_reversal_and_cauchy_schwarz(std::ostream& log) {
    auto norms = random_polygon_norms(20, 16, derive_seed(kSeed, 3));
    Rng rng(derive_seed(kSeed, 33));
    int violations = 0;
    double worst = -1e300;
    for (const auto& n : norms) {
        NormSpec anti = NormSpec::polygon(n.isoperimetrix_polygon());
        for (int i = 0; i < 500; ++i) {
            Point2 x = rng.point_in_box(-3, 3), y = rng.point_in_box(-3, 3);
            double bound = n.gauge(x) * n.antinorm(y);
            double rel = (std::abs(symp(x, y)) - bound) / (bound + 1e-300);
            worst = std::max(worst, rel);
            if (rel > 1e-9) ++violations;
        }
        for (int i = 0; i < 500; ++i) {
            Point2 x = n.unit(rng.direction());
            Point2 y = normal_cone(n, x).sample(rng.uniform());
            if (!is_normal(n, x, y, 1e-9) || !is_normal(anti, y, x, 1e-9)) ++violations;
        }
    }
    log << violations << " violations, worst CS excess " << worst;
    return violations == 0;
}

bool c4_radon_detection(std::ostream& log) {
    for (int k = 1; k <= 5; ++k) {
        auto rep = is_radon(NormSpec::polygon(generator_regular_gon(4 * k + 2)));
        if (!rep.is_radon || rep.relative_defect > 1e-9) {
            log << (4 * k + 2) << "-gon not detected as Radon";
            return false;
        }
    }
    for (int k : {4, 8, 12}) {
        auto rep = is_radon(NormSpec::polygon(oracle::regular_gon(k)));
        if (rep.is_radon || rep.relative_defect < 0.01) {
            log << k << "-gon not detected as non-Radon";
            return false;
        }
    }
    auto mixed = is_radon(NormSpec::mixed(4, 1440));
    log << "mixed(4)@1440 defect " << mixed.relative_defect;
    return mixed.is_radon && mixed.relative_defect <= 1e-3;
}

bool c5_radon_construction(std::ostream& log) {
    auto ball = radon_construct(QuadrantArc{{1, 0}, {0, 1}, {}});
    SymmetricPolygon expect({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    double err = hausdorff_euclidean(ball, expect);
    log << "mixed l1-linf vertex err " << err;
    if (ball.size() != 6 || err > 1e-9) return false;

    std::vector<SymmetricPolygon> curves{ball};
    for (double p : {1.5, 4.0}) {
        QuadrantArc arc{{1, 0}, {0, 1}, {}};
        for (int k = 1; k < 96; ++k) {
            double a = 0.5 * kPi * k / 96;
            Point2 d{std::cos(a), std::sin(a)};
            arc.interior.push_back(d / std::pow(std::pow(d.x1, p) + std::pow(d.x2, p), 1.0 / p));
        }
        curves.push_back(radon_construct(arc));
    }
    Rng rng(derive_seed(kSeed, 5));
    for (const auto& curve : curves) {
        auto n = NormSpec::polygon(curve);
        for (int i = 0; i < 1000 / static_cast<int>(curves.size()) + 1; ++i) {
            Point2 x = n.unit(rng.direction());
            Point2 y = n.unit(normal_cone(n, x).sample(rng.uniform()));
            if (!is_normal(n, x, y, 1e-9) || !is_normal(n, y, x, 1e-9)) {
                log << "; normality symmetry failed";
                return false;
            }
        }
    }
    return true;
}

bool c6_triangle_area_identity(std::ostream& log) {
    auto norms = random_polygon_norms(8, 12, derive_seed(kSeed, 6));
    Rng rng(derive_seed(kSeed, 66));
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& n = norms[rng.uniform_int(static_cast<int>(norms.size()))];
        Triangle t = random_triangle(rng);
        auto rep = triangle_report(n, t);
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(rep.area - 0.5 * rep.side_norm[k] *
                                                            rep.height_antinorm[k]) /
                                        rep.area);
    }
    log << "worst area identity err " << worst;
    if (worst > 1e-9) return false;

    // Golab-Busemann-Tamassy on the hexagon (constant) and square (witness)
    auto hex = NormSpec::polygon(oracle::regular_gon(6));
    for (int i = 0; i < 100; ++i) {
        Triangle t = random_triangle(rng);
        auto rep = triangle_report(hex, t);
        double v0 = rep.side_norm[0] * rep.height_norm[0];
        for (int k = 1; k < 3; ++k)
            if (std::abs(rep.side_norm[k] * rep.height_norm[k] - v0) > 1e-6 * v0) {
                log << "; hexagon value not constant";
                return false;
            }
    }
    auto sq = NormSpec::polygon(oracle::square_ball());
    for (int i = 0; i < 300; ++i) {
        Triangle t = random_triangle(rng);
        auto rep = triangle_report(sq, t);
        double mx = 0, mn = 1e300;
        for (int k = 0; k < 3; ++k) {
            mx = std::max(mx, rep.side_norm[k] * rep.height_norm[k]);
            mn = std::min(mn, rep.side_norm[k] * rep.height_norm[k]);
        }
        if (mx - mn > 0.01 * mx) {
            log << "; square witness spread " << (mx - mn) / mx;
            return true;
        }
    }
    log << "; no square witness";
    return false;
}

bool c7_bisectors(std::ostream& log) {
    auto lib = standard_norm_library(derive_seed(kSeed, 7));
    Rng rng(derive_seed(kSeed, 77));
    double worst_angle = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& nn = lib[rng.uniform_int(static_cast<int>(lib.size()))];
        Point2 r1 = rng.direction() * rng.uniform(0.5, 2.0);
        Point2 r2 = rng.direction() * rng.uniform(0.5, 2.0);
        if (std::abs(symp(r1, r2)) < 1e-2) continue;
        if (norm2(nn.norm.unit(r1) + nn.norm.unit(r2)) < 1e-3) continue;
        Point2 bu = busemann_bisector(nn.norm, {0, 0}, r1, r2);
        Point2 gl = glogovskii_bisector(nn.norm, {0, 0}, r1, r2, BisectorMetric::Antinorm);
        worst_angle = std::max(worst_angle, std::abs(std::atan2(symp(bu, gl), dot(bu, gl))));
    }
    log << "busemann/glog-antinorm angle " << worst_angle;
    if (worst_angle > 1e-8) return false;

    std::vector<NormSpec> some{lib[0].norm, lib[2].norm, lib[5].norm};
    double worst_spread = 0, worst_center = 0;
    for (const auto& n : some) {
        for (int i = 0; i < 17; ++i) {
            Triangle t = random_triangle(rng);
            auto rep = triangle_report(n, t);
            std::vector<Point2> meets;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    Point2 da = busemann_bisector(n, t.vertex(a), t.vertex(a + 1) - t.vertex(a),
                                                  t.vertex(a + 2) - t.vertex(a));
                    Point2 db = busemann_bisector(n, t.vertex(b), t.vertex(b + 1) - t.vertex(b),
                                                  t.vertex(b + 2) - t.vertex(b));
                    meets.push_back(t.vertex(a) +
                                    da * (symp(t.vertex(b) - t.vertex(a), db) / symp(da, db)));
                }
            double spread = std::max({norm2(meets[0] - meets[1]), norm2(meets[0] - meets[2]),
                                      norm2(meets[1] - meets[2])});
            worst_spread = std::max(worst_spread, spread / t.scale());
            worst_center =
                std::max(worst_center, norm2(meets[0] - rep.anti_incenter) / t.scale());
        }
    }
    log << ", concurrency spread " << worst_spread << ", anti-incenter gap " << worst_center;
    if (worst_spread > 1e-8 || worst_center > 1e-6) return false;

    // coincidence with the norm Glogovskii bisector exactly on Radon members
    for (const auto& nn : lib) {
        if (nn.norm.kind() == NormKind::Mixed) continue; // antinorm discretized by design
        double worst = 0;
        for (int i = 0; i < 300; ++i) {
            Point2 r1 = rng.direction(), r2 = rng.direction();
            if (std::abs(symp(r1, r2)) < 1e-2) continue;
            if (norm2(nn.norm.unit(r1) + nn.norm.unit(r2)) < 1e-3) continue;
            Point2 bu = busemann_bisector(nn.norm, {0, 0}, r1, r2);
            Point2 gl = glogovskii_bisector(nn.norm, {0, 0}, r1, r2, BisectorMetric::Norm);
            worst = std::max(worst, std::abs(std::atan2(symp(bu, gl), dot(bu, gl))));
        }
        bool coincide = worst <= (nn.norm.is_polygonal() ? 1e-8 : 1e-4);
        if (coincide != nn.radon) {
            log << "; coincidence mismatch on " << nn.name;
            return false;
        }
    }
    return true;
}

bool c8_isoperimetric_suite(std::ostream& log) {
    // square-norm worked numbers first
    auto sq = NormSpec::polygon(oracle::square_ball());
    auto g = girth_report(sq);
    if (std::abs(g.p_B_of_I - 4) > 1e-12 || std::abs(g.p_I_of_B - 8) > 1e-12 ||
        std::abs(g.p_B_of_B - 8) > 1e-12 || std::abs(g.p_I_of_I - 8) > 1e-12) {
        log << "square girth numbers wrong";
        return false;
    }
    ConvexPolygon Isq(sq.isoperimetrix_polygon().vertices());
    double iotaI = perimeter(sq, Isq) * perimeter(sq, Isq) / Isq.area();
    if (std::abs(iotaI - 8) > 1e-12) {
        log << "iota(I) != 8";
        return false;
    }

    Rng rng(derive_seed(kSeed, 8));
    std::vector<NormSpec> norms{sq, NormSpec::polygon(oracle::diamond_ball()),
                                NormSpec::polygon(oracle::regular_gon(6)),
                                NormSpec::polygon(oracle::random_symmetric_polygon(rng, 6))};
    double worst_slack = 0;
    for (const auto& n : norms) {
        double areaI = n.isoperimetrix_polygon().area();
        for (int i = 0; i < 1000; ++i) {
            ConvexPolygon c = random_body(rng, 3 + rng.uniform_int(9));
            auto rep = inequality_report(n, c);
            if (rep.iota < 4 * areaI - 1e-9) {
                log << "iota bound violated";
                return false;
            }
            if (rep.iota <= 4 * areaI * (1 + 1e-6)) {
                auto fit = inscribed_anticircle(n, c);
                ConvexPolygon hom =
                    ConvexPolygon(n.isoperimetrix_polygon().scaled(fit.radius).vertices())
                        .translated(fit.center);
                if (hausdorff_euclidean(c, hom) > 1e-6 * c.diameter()) {
                    log << "equality case not an anticircle homothet";
                    return false;
                }
            }
            for (const auto& [name, slack] : rep.inequality_slacks) {
                double mag = std::max(1.0, rep.inequality_scales.at(name));
                worst_slack = std::min(worst_slack, slack / mag);
                if (slack < -1e-9 * mag) {
                    log << "slack " << name << " negative: " << slack << " (scale " << mag
                        << ")";
                    return false;
                }
            }
        }
    }
    log << "worst scaled slack " << worst_slack;
    return true;
}

// grid oracle for the minimum-area circumscribed triangle about I
double zenodorus3_oracle(const NormSpec& n) {
    const auto& I = n.isoperimetrix_polygon();
    auto support_at = [&](double a) {
        Point2 u{std::cos(a), std::sin(a)};
        double h = -1e300;
        for (const auto& v : I.vertices()) h = std::max(h, dot(v, u));
        return std::pair<Point2, double>{u, h};
    };
    auto area_of = [&](double a1, double a2, double a3) {
        // the three outward normals must positively span the plane, else the
        // supporting lines do not bound a triangle containing I
        double g1 = a2 - a1, g2 = a3 - a2, g3 = 2 * kPi - (a3 - a1);
        if (a1 >= a2 || a2 >= a3) return 1e300;
        if (std::max({g1, g2, g3}) >= kPi - 1e-9) return 1e300;
        auto [u1, h1] = support_at(a1);
        auto [u2, h2] = support_at(a2);
        auto [u3, h3] = support_at(a3);
        auto meet = [&](Point2 ua, double ha, Point2 ub, double hb) {
            double det = ua.x1 * ub.x2 - ua.x2 * ub.x1;
            if (std::abs(det) < 1e-9) return Point2{1e9, 1e9};
            return Point2{(ha * ub.x2 - ua.x2 * hb) / det, (ua.x1 * hb - ha * ub.x1) / det};
        };
        Point2 v1 = meet(u1, h1, u2, h2), v2 = meet(u2, h2, u3, h3), v3 = meet(u3, h3, u1, h1);
        double two = symp(v1, v2) + symp(v2, v3) + symp(v3, v1);
        return two <= 0 ? 1e300 : 0.5 * two;
    };
    double best = 1e300, b1 = 0, b2 = 2, b3 = 4;
    const int grid = 48;
    for (int i = 0; i < grid; ++i)
        for (int j = i + 1; j < grid; ++j)
            for (int k = j + 1; k < grid; ++k) {
                double v = area_of(2 * kPi * i / grid, 2 * kPi * j / grid, 2 * kPi * k / grid);
                if (v < best) {
                    best = v;
                    b1 = 2 * kPi * i / grid;
                    b2 = 2 * kPi * j / grid;
                    b3 = 2 * kPi * k / grid;
                }
            }
    double step = 2 * kPi / grid;
    for (int round = 0; round < 40; ++round) {
        bool improved = false;
        for (double* a : {&b1, &b2, &b3}) {
            for (double sgn : {-1.0, 1.0}) {
                double save = *a;
                *a += sgn * step;
                double v = area_of(b1, b2, b3);
                if (v < best) {
                    best = v;
                    improved = true;
                } else {
                    *a = save;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

bool c9_zenodorus(std::ostream& log) {
    auto n = NormSpec::polygon(oracle::square_ball());
    auto z4 = zenodorus(n, 4);
    log << "n=4 area " << z4.area;
    if (std::abs(z4.area - 2.0) > 1e-6) return false;
    auto z3 = zenodorus(n, 3);
    log << ", n=3 area " << z3.area;
    if (std::abs(z3.area - 4.0) > 1e-4) return false;
    double oracle_area = zenodorus3_oracle(n);
    log << ", oracle " << oracle_area;
    if (std::abs(z3.area - oracle_area) > 1e-4) return false;

    std::vector<double> areas;
    for (int k = 3; k <= 9; ++k) {
        auto z = zenodorus(n, k);
        if (z.midpoint_defect > 1e-6) {
            log << "; midpoint defect at n=" << k;
            return false;
        }
        areas.push_back(z.area);
    }
    for (size_t i = 1; i + 1 < areas.size(); ++i)
        if (areas[i - 1] + areas[i + 1] < 2 * areas[i] - 1e-6) {
            log << "; area sequence not convex at n=" << (i + 3);
            return false;
        }
    return true;
}

bool c10_projections(std::ostream& log) {
    auto norms = random_polygon_norms(20, 10, derive_seed(kSeed, 10));
    double worst = 0;
    for (size_t i = 0; i < norms.size(); ++i) {
        auto scan = nonexpansive_scan(norms[i], ProjectionMap::Radial, ScanMetric::Antinorm,
                                      5000, derive_seed(kSeed, 100 + i));
        worst = std::max(worst, scan.max_ratio);
    }
    log << "radial antinorm worst " << worst;
    if (worst > 1 + 1e-9) return false;

    Rng rng(derive_seed(kSeed, 101));
    auto sq = NormSpec::polygon(oracle::square_ball());
    auto hex = NormSpec::polygon(oracle::regular_gon(6));
    double worst_metric = 0;
    for (int i = 0; i < 10; ++i) {
        ConvexPolygon s = random_body(rng, 7, 1.5);
        const auto& n = i % 2 == 0 ? sq : hex;
        auto scan = nonexpansive_scan(n, ProjectionMap::Metric, ScanMetric::Antinorm, 10000,
                                      derive_seed(kSeed, 200 + i), &s);
        worst_metric = std::max(worst_metric, scan.max_ratio);
    }
    log << ", metric antinorm worst " << worst_metric;
    if (worst_metric > 1 + 1e-9) return false;

    for (const auto& bad : {sq, NormSpec::polygon(oracle::regular_gon(8))}) {
        auto scan = nonexpansive_scan(bad, ProjectionMap::Radial, ScanMetric::Norm, 10000,
                                      derive_seed(kSeed, 102));
        if (scan.max_ratio <= 1 + 1e-6) {
            log << "; norm-metric witness missing";
            return false;
        }
    }

    double lemma_worst = 0;
    for (int t = 0; t < 1000; ++t) {
        Rng r2(derive_seed(kSeed, 3000 + t));
        const auto& n = norms[t % norms.size()];
        Point2 x = n.unit(r2.direction()), y = n.unit(r2.direction());
        if (std::abs(symp(x, y)) < 1e-3) continue;
        Point2 p = nearest_on_line(n, x, Line{{0, 0}, y}, ScanMetric::Antinorm);
        lemma_worst = std::max(lemma_worst, n.gauge(p) - 1.0);
    }
    log << ", lemma excess " << lemma_worst;
    return lemma_worst <= 1e-9;
}

// hierarchical grid with ~1e6 evaluations in total
double ft_oracle(const NormSpec& n, const Triangle& t) {
    auto f = [&](Point2 p) {
        return n.gauge(p - t.a1) + n.gauge(p - t.a2) + n.gauge(p - t.a3);
    };
    double sc = t.scale();
    double x0 = -2 * sc, x1 = 2 * sc, y0 = -2 * sc, y1 = 2 * sc, best = 1e300;
    Point2 bp;
    const int side = 316;
    for (int level = 0; level < 10; ++level) {
        for (int i = 0; i <= side; ++i)
            for (int j = 0; j <= side; ++j) {
                Point2 p{x0 + (x1 - x0) * i / side, y0 + (y1 - y0) * j / side};
                double v = f(p);
                if (v < best) {
                    best = v;
                    bp = p;
                }
            }
        double wx = (x1 - x0) / side, wy = (y1 - y0) / side;
        x0 = bp.x1 - 2 * wx;
        x1 = bp.x1 + 2 * wx;
        y0 = bp.x2 - 2 * wy;
        y1 = bp.x2 + 2 * wy;
        if (wx < 1e-12 * sc) break;
    }
    return best;
}

bool c11_fermat_torricelli(std::ostream& log) {
    auto l1 = NormSpec::polygon(oracle::diamond_ball());
    auto ft = fermat_torricelli(l1, Triangle({0, 0}, {1, 0}, {0, 1}));
    if (norm2(ft.point) > 1e-9 || std::abs(ft.value - 2.0) > 1e-9) {
        log << "taxicab median wrong: (" << ft.point.x1 << "," << ft.point.x2 << ") value "
            << ft.value;
        return false;
    }
    Rng rng(derive_seed(kSeed, 11));
    std::vector<NormSpec> norms{l1, NormSpec::polygon(oracle::square_ball()),
                                NormSpec::polygon(oracle::regular_gon(6)),
                                NormSpec::polygon(oracle::random_symmetric_polygon(rng, 4)),
                                NormSpec::polygon(oracle::random_symmetric_polygon(rng, 6))};
    double worst = 0;
    int characterized = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& n = norms[i % norms.size()];
        Triangle t = random_triangle(rng, 1.5);
        auto r = fermat_torricelli(n, t);
        double brute = ft_oracle(n, t);
        worst = std::max(worst, std::abs(r.value - brute) / (1 + brute));
        if (worst > 1e-6) {
            log << "grid oracle mismatch " << worst;
            return false;
        }
        if (!r.at_vertex) {
            auto ch = verify_ft_characterization(n, t);
            if (!ch.satisfied) {
                log << "characterization failed on instance " << i;
                return false;
            }
            ++characterized;
        }
    }
    log << "worst LP-vs-grid " << worst << ", " << characterized << " interior instances";
    return characterized > 10;
}

bool c12_convexity_duality(std::ostream& log) {
    auto sq = NormSpec::polygon(oracle::square_ball());
    auto hex = NormSpec::polygon(oracle::regular_gon(6));
    if (!lassak_duality_check(sq, 20, derive_seed(kSeed, 12))) {
        log << "lassak failed on square";
        return false;
    }
    if (!lassak_duality_check(hex, 20, derive_seed(kSeed, 13))) {
        log << "lassak failed on hexagon";
        return false;
    }
    for (const auto& nn : standard_norm_library(derive_seed(kSeed, 14))) {
        if (!nn.norm.is_polygonal()) continue;
        if (!antiball_dconvex_check(nn.norm, 1000, derive_seed(kSeed, 15))) {
            log << "antiball d-convexity failed on " << nn.name;
            return false;
        }
    }
    log << "lassak 2x20 pairs, antiball scans clean";
    return true;
}

bool c13_angular_measures(std::ostream& log) {
    auto sq = NormSpec::polygon(oracle::square_ball());
    auto m = angular_measures(sq, {1, -1}, {1, 1});
    if (std::abs(m.mu_l - kPi / 2) > 1e-12 || std::abs(m.mu_a - kPi / 2) > 1e-12) {
        log << "square right edge measures wrong";
        return false;
    }
    Rng rng(derive_seed(kSeed, 16));
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        auto B = oracle::random_symmetric_polygon(rng, 4 + rng.uniform_int(10));
        auto n = NormSpec::polygon(B);
        auto g = girth_report(n);
        for (int k = 0; k < 50; ++k) {
            Point2 from = rng.direction(), to = rng.direction();
            auto arc = boundary_arc(B, from, to);
            double alen = 0;
            for (size_t j = 0; j + 1 < arc.size(); ++j) alen += n.antinorm(arc[j + 1] - arc[j]);
            auto mm = angular_measures(n, from, to);
            worst = std::max(worst, std::abs(mm.mu_a - 2 * kPi * alen / g.p_I_of_B) / (2 * kPi));
        }
        double kep = kepler_check(n, 12);
        if (kep > 1e-6 * n.isoperimetrix_polygon().area() / 12) {
            log << "kepler deviation too large";
            return false;
        }
    }
    log << "worst mu_a mismatch " << worst;
    return worst <= 1e-9;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "antinorm-exactness", c1_antinorm_exactness},
        {2, "involution", c2_involution},
        {3, "normality-reversal-and-cauchy-schwarz", c3_reversal_and_cauchy_schwarz},
        {4, "radon-detection", c4_radon_detection},
        {5, "radon-construction", c5_radon_construction},
        {6, "triangle-area-identity", c6_triangle_area_identity},
        {7, "bisector-theorems", c7_bisectors},
        {8, "isoperimetric-suite", c8_isoperimetric_suite},
        {9, "zenodorus", c9_zenodorus},
        {10, "projections", c10_projections},
        {11, "fermat-torricelli", c11_fermat_torricelli},
        {12, "convexity-duality", c12_convexity_duality},
        {13, "angular-measures", c13_angular_measures},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d %-42s (%.1fs)  %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    secs, log.str().c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
