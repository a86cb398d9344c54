#include "mink/propsuite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mink/isoperimetry.hpp"
#include "mink/projections.hpp"
#include "mink/radon.hpp"
#include "mink/rng.hpp"
#include "mink/triangle.hpp"

namespace mink {

namespace {

constexpr double kPi = 3.14159265358979323846;

SymmetricPolygon regular(int k, double r = 1.0) {
    std::vector<Point2> v(k);
    for (int i = 0; i < k; ++i)
        v[i] = Point2{std::cos(2 * kPi * i / k), std::sin(2 * kPi * i / k)} * r;
    return SymmetricPolygon(v);
}

SymmetricPolygon random_ball(Rng& rng, int half_points) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point2> pts;
        for (int i = 0; i < half_points; ++i) {
            Point2 p = rng.direction() * rng.uniform(0.5, 1.5);
            pts.push_back(p);
            pts.push_back(-p);
        }
        auto hull = convex_hull(pts);
        if (hull.size() < 6) continue;
        try {
            return SymmetricPolygon(hull);
        } catch (const validation_error&) {
        }
    }
    return regular(6);
}

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

// Anti-equilateral triangle with all three sides of unit antinorm length:
// two anticircle chords plus a closing side tuned by bisection.
Triangle make_anti_equilateral(const NormSpec& n, Rng& rng) {
    NormSpec anti = NormSpec::polygon(n.isoperimetrix_polygon());
    for (int attempt = 0; attempt < 40; ++attempt) {
        double a1 = rng.uniform(0, 2 * kPi);
        Point2 s1 = anti.unit({std::cos(a1), std::sin(a1)});
        // sweep the second side direction until the closing side has unit
        // antinorm length as well
        double lo = a1 + 0.15, hi = a1 + kPi - 0.15;
        auto closing = [&](double a2) {
            Point2 s2 = anti.unit({std::cos(a2), std::sin(a2)});
            return n.antinorm(s1 + s2) - 1.0;
        };
        if (closing(lo) * closing(hi) > 0) continue;
        for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (lo + hi);
            if (closing(lo) * closing(mid) <= 0)
                hi = mid;
            else
                lo = mid;
        }
        Point2 s2 = anti.unit({std::cos(0.5 * (lo + hi)), std::sin(0.5 * (lo + hi))});
        Point2 p0 = rng.point_in_box(-1, 1);
        try {
            return Triangle(p0, p0 + s1, p0 + s1 + s2);
        } catch (const validation_error&) {
        }
    }
    // fallback: flat taxicab-style triangle works for the square ball only,
    // callers only reach this if sweeping failed repeatedly
    return Triangle({0, 0}, {1, 0}, {0.5, 0.5});
}

struct Harness {
    std::vector<PropResult> results;

    template <class F>
    void check(const std::string& name, const F& body) {
        PropResult r;
        r.name = name;
        try {
            std::ostringstream details;
            r.pass = body(details);
            r.details = details.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.details = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }
};

} // namespace

std::vector<NamedNorm> standard_norm_library(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NamedNorm> lib;
    lib.push_back({"square", NormSpec::polygon(SymmetricPolygon(
                                 {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}})),
                   false});
    lib.push_back({"diamond", NormSpec::polygon(regular(4)), false});
    lib.push_back({"hexagon", NormSpec::polygon(regular(6)), true});
    lib.push_back({"octagon", NormSpec::polygon(regular(8)), false});
    lib.push_back({"decagon", NormSpec::polygon(regular(10)), true});
    lib.push_back({"random-12gon", NormSpec::polygon(random_ball(rng, 6)), false});
    lib.push_back({"euclidean", NormSpec::euclidean(360), true});
    lib.push_back({"lp4", NormSpec::lp(4, 720), false});
    lib.push_back({"mixed4", NormSpec::mixed(4, 720), true});
    return lib;
}

namespace {

void suite_plane_core(Harness& h, std::uint64_t seed) {
    h.check("plane-core.symp-antisymmetric-bilinear", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 1));
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            Point2 x = rng.point_in_box(-3, 3), y = rng.point_in_box(-3, 3),
                   z = rng.point_in_box(-3, 3);
            double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
            double sc = std::max({1.0, std::abs(symp(x, y))});
            worst = std::max(worst, std::abs(symp(x, y) + symp(y, x)) / sc);
            double lin = symp(x * a + y * b, z) - a * symp(x, z) - b * symp(y, z);
            worst = std::max(worst, std::abs(lin) / std::max(1.0, std::abs(symp(x, z)) +
                                                                      std::abs(symp(y, z))));
        }
        out << "worst residual " << worst;
        return worst <= 1e-12 * 8;
    });
    h.check("plane-core.polar-involution", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 2));
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            auto B = random_ball(rng, 4 + rng.uniform_int(29));
            worst = std::max(worst,
                             hausdorff_euclidean(B, polar(polar(B))) / B.diameter());
        }
        out << "worst defect/diam " << worst;
        return worst <= 1e-9;
    });
    h.check("plane-core.circumscribe-contains-touches", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 3));
        int built = 0;
        for (int i = 0; i < 200; ++i) {
            ConvexPolygon c = random_body(rng, 7);
            std::vector<Functional> dirs;
            int m = 3 + rng.uniform_int(6);
            for (int k = 0; k < m; ++k) dirs.push_back(Functional{rng.direction()});
            try {
                ConvexPolygon p = circumscribe(c, dirs);
                ++built;
                for (const auto& v : c.vertices())
                    if (!p.contains(v, 1e-9)) return false;
                for (const auto& hp : edge_halfplanes(p))
                    if (support(c, hp.phi).value < hp.offset - 1e-7 * (c.scale() + 1.0))
                        return false;
            } catch (const validation_error&) {
                // directions happened not to span positively
            }
        }
        out << built << " bounded instances";
        return built > 100;
    });
    h.check("plane-core.area-translation-scaling", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 4));
        double worst = 0;
        for (int i = 0; i < 500; ++i) {
            ConvexPolygon p = random_body(rng, 10);
            double a = p.area();
            double s = rng.uniform(0.1, 4);
            worst = std::max(worst,
                             std::abs(p.translated(rng.point_in_box(-9, 9)).area() - a) / a);
            worst = std::max(worst, std::abs(p.scaled(s).area() - s * s * a) / (s * s * a));
        }
        out << "worst relative drift " << worst;
        return worst <= 1e-12;
    });
}

void suite_norms(Harness& h, std::uint64_t seed) {
    auto lib = standard_norm_library(seed);
    h.check("norms.cauchy-schwarz", [&](std::ostream& out) {
        double worst = -1e300;
        for (const auto& nn : lib) {
            double tol = nn.norm.kind() == NormKind::Mixed ? 1e-4 : 1e-9;
            Rng rng(derive_seed(seed, 11));
            for (int i = 0; i < 10000; ++i) {
                Point2 x = rng.point_in_box(-3, 3), y = rng.point_in_box(-3, 3);
                double bound = nn.norm.gauge(x) * nn.norm.antinorm(y);
                double excess = (std::abs(symp(x, y)) - bound) / (bound + 1e-12) - tol;
                worst = std::max(worst, excess);
                if (excess > 0) {
                    out << "violated on " << nn.name;
                    return false;
                }
            }
        }
        out << "worst margin " << worst;
        return true;
    });
    h.check("norms.normality-reversal", [&](std::ostream& out) {
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            NormSpec anti = NormSpec::polygon(nn.norm.isoperimetrix_polygon());
            Rng rng(derive_seed(seed, 12));
            for (int i = 0; i < 1000; ++i) {
                Point2 x = nn.norm.unit(rng.direction());
                Point2 y = normal_cone(nn.norm, x).sample(rng.uniform());
                if (!is_normal(nn.norm, x, y, 1e-7)) return false;
                if (!is_normal(anti, y, x, 1e-7)) {
                    out << "reversal failed on " << nn.name;
                    return false;
                }
            }
        }
        return true;
    });
    h.check("norms.antinorm-involution", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 13));
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            auto B = random_ball(rng, 4 + rng.uniform_int(28));
            auto n = NormSpec::polygon(B);
            worst = std::max(worst, antinorm_involution_defect(n) / B.diameter());
            NormSpec anti = NormSpec::polygon(n.isoperimetrix_polygon());
            for (int k = 0; k < 20; ++k) {
                Point2 x = rng.point_in_box(-2, 2);
                double g = n.gauge(x);
                if (g < 1e-9) continue;
                worst = std::max(worst, std::abs(anti.antinorm(x) - g) / g);
            }
        }
        out << "worst defect " << worst;
        return worst <= 1e-9;
    });
    h.check("norms.antinorm-range-on-unit-circle", [&](std::ostream& out) {
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            // antinorm/gauge is monotone between vertex directions of B and
            // I, so the exact range comes from those directions
            double r = 1e300, R = -1e300;
            auto scan_dirs = [&](const std::vector<Point2>& dirs) {
                for (const auto& d : dirs) {
                    double v = nn.norm.antinorm(nn.norm.unit(d));
                    r = std::min(r, v);
                    R = std::max(R, v);
                }
            };
            scan_dirs(nn.norm.unit_ball().vertices());
            scan_dirs(nn.norm.isoperimetrix_polygon().vertices());
            Rng rng(derive_seed(seed, 14));
            for (int k = 0; k < 500; ++k) {
                double v = nn.norm.antinorm(nn.norm.unit(rng.direction()));
                if (v < r * (1 - 1e-9) || v > R * (1 + 1e-9)) {
                    out << nn.name << " out of [r,R]";
                    return false;
                }
            }
        }
        return true;
    });
    h.check("norms.theorem3-range", [&](std::ostream& out) {
        double worst = -1e300;
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            Rng rng(derive_seed(seed, 15));
            for (int i = 0; i < 400; ++i) {
                Point2 x = rng.direction() * rng.uniform(0.5, 2.0);
                Point2 y = rng.direction() * rng.uniform(0.5, 2.0);
                if (std::abs(symp(x, y)) < 1e-2) continue;
                AlphaInterval lam = normal_coefficients(nn.norm, x, y);
                // mu with (mu y + x) -| y: gauge(x + mu y) minimized there
                auto g = [&](double m) { return nn.norm.gauge(x + y * m); };
                double lo = -10, hi = 10, bm = 0, bv = g(0);
                for (int pass = 0; pass < 5; ++pass) {
                    double bb = bv;
                    for (int k = 0; k <= 200; ++k) {
                        double m = lo + (hi - lo) * k / 200.0;
                        double v = g(m);
                        if (v < bb) {
                            bb = v;
                            bm = m;
                        }
                    }
                    bv = bb;
                    double w = (hi - lo) / 200.0;
                    lo = bm - 2 * w;
                    hi = bm + 2 * w;
                }
                for (double l : {lam.lo, lam.hi}) {
                    double prod = l * bm;
                    worst = std::max(worst, std::max(-prod, prod - 2.0));
                    if (prod < -1e-6 || prod > 2 + 1e-4) {
                        out << "violated on " << nn.name << " lambda*mu=" << prod;
                        return false;
                    }
                }
            }
        }
        out << "worst excess " << worst;
        return true;
    });
    h.check("norms.minkowski-content-is-antinorm-length", [&](std::ostream& out) {
        // area(segment + eps B) = 2 eps antinorm(b - a) + eps^2 area(B),
        // exactly, for polygonal balls
        Rng rng(derive_seed(seed, 17));
        double worst = 0;
        for (int i = 0; i < 200; ++i) {
            auto B = random_ball(rng, 4 + rng.uniform_int(8));
            auto n = NormSpec::polygon(B);
            Point2 a = rng.point_in_box(-2, 2);
            Point2 b = rng.point_in_box(-2, 2);
            if (norm2(b - a) < 0.1) continue;
            double eps = rng.uniform(0.05, 0.5);
            std::vector<Point2> cloud;
            for (const auto& v : B.vertices()) {
                cloud.push_back(a + v * eps);
                cloud.push_back(b + v * eps);
            }
            double swept = polyline_area(convex_hull(cloud));
            double content = (swept - eps * eps * B.area()) / (2 * eps);
            worst = std::max(worst,
                             std::abs(content - n.antinorm(b - a)) / n.antinorm(b - a));
        }
        out << "worst relative error " << worst;
        return worst <= 1e-9;
    });
    h.check("norms.gauge-subadditive-homogeneous", [&](std::ostream& out) {
        double worst = 0;
        for (const auto& nn : lib) {
            Rng rng(derive_seed(seed, 16));
            for (int i = 0; i < 3000; ++i) {
                Point2 x = rng.point_in_box(-2, 2), y = rng.point_in_box(-2, 2);
                double s = rng.uniform(-3, 3);
                double gx = nn.norm.gauge(x), gy = nn.norm.gauge(y);
                worst = std::max(worst, (nn.norm.gauge(x + y) - gx - gy) / (gx + gy + 1e-12));
                worst = std::max(
                    worst, std::abs(nn.norm.gauge(x * s) - std::abs(s) * gx) / (gx + 1e-12));
            }
        }
        out << "worst residual " << worst;
        return worst <= 1e-12 * 4;
    });
}

void suite_radon(Harness& h, std::uint64_t seed) {
    h.check("radon.construct-symmetric-normalized", [&](std::ostream& out) {
        std::vector<QuadrantArc> arcs;
        arcs.push_back({{1, 0}, {0, 1}, {}});
        for (double p : {1.5, 3.0}) {
            QuadrantArc arc{{1, 0}, {0, 1}, {}};
            for (int k = 1; k < 64; ++k) {
                double a = 0.5 * kPi * k / 64;
                Point2 d{std::cos(a), std::sin(a)};
                arc.interior.push_back(
                    d / std::pow(std::pow(d.x1, p) + std::pow(d.x2, p), 1.0 / p));
            }
            arcs.push_back(arc);
        }
        for (const auto& arc : arcs) {
            auto n = NormSpec::polygon(radon_construct(arc));
            Rng rng(derive_seed(seed, 21));
            for (int i = 0; i < 1000; ++i) {
                Point2 x = n.unit(rng.direction());
                Point2 y = n.unit(normal_cone(n, x).sample(rng.uniform()));
                if (!is_normal(n, y, x, 1e-7)) {
                    out << "asymmetric pair found";
                    return false;
                }
                if (std::abs(std::abs(symp(x, y)) - 1.0) > 1e-6) {
                    out << "pair not normalized: " << symp(x, y);
                    return false;
                }
            }
        }
        return true;
    });
    h.check("radon.radonize-idempotent", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 22));
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            auto n = NormSpec::polygon(random_ball(rng, 8));
            auto r = radonize(n);
            auto again = radonize(NormSpec::polygon(r));
            worst = std::max(worst, hausdorff_euclidean(r, again) / r.diameter());
        }
        out << "worst fixpoint defect " << worst;
        return worst <= 1e-9;
    });
    h.check("radon.detection-families", [&](std::ostream& out) {
        for (int nn = 1; nn <= 5; ++nn) {
            auto rep = is_radon(NormSpec::polygon(generator_regular_gon(4 * nn + 2)));
            if (!rep.is_radon || rep.relative_defect > 1e-9) {
                out << "(4n+2)-gon not detected, n=" << nn;
                return false;
            }
        }
        for (int k : {4, 8, 12}) {
            auto rep = is_radon(NormSpec::polygon(regular(k)));
            if (rep.is_radon || rep.relative_defect < 0.01) {
                out << k << "-gon not rejected";
                return false;
            }
        }
        auto mixed = is_radon(NormSpec::mixed(4));
        out << "mixed(4) defect " << mixed.relative_defect;
        return mixed.is_radon && mixed.relative_defect <= 1e-3;
    });
    h.check("radon.sign-test", [&](std::ostream& out) {
        if (!sign_test_3prime(NormSpec::polygon(regular(6)), 1000, derive_seed(seed, 23)))
            return false;
        if (!sign_test_3prime(NormSpec::euclidean(256), 500, derive_seed(seed, 24)))
            return false;
        bool square_witness = !sign_test_3prime(
            NormSpec::polygon(SymmetricPolygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}})), 4000,
            derive_seed(seed, 25));
        out << (square_witness ? "square witness found" : "no square witness");
        return square_witness;
    });
}

void suite_triangle(Harness& h, std::uint64_t seed) {
    auto lib = standard_norm_library(seed);
    h.check("triangle.area-identity", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 31));
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto& nn = lib[rng.uniform_int((int)lib.size())];
            if (!nn.norm.is_polygonal()) continue;
            Triangle t = random_triangle(rng);
            auto rep = triangle_report(nn.norm, t);
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(rep.area - 0.5 * rep.side_norm[k] *
                                                                rep.height_antinorm[k]) /
                                            rep.area);
        }
        out << "worst relative error " << worst;
        return worst <= 1e-9;
    });
    h.check("triangle.golab-busemann-tamassy", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 32));
        auto hexn = NormSpec::polygon(regular(6));
        for (int i = 0; i < 50; ++i) {
            Triangle t = random_triangle(rng);
            auto rep = triangle_report(hexn, t);
            double v0 = rep.side_norm[0] * rep.height_norm[0];
            for (int k = 1; k < 3; ++k) {
                double vk = rep.side_norm[k] * rep.height_norm[k];
                if (std::abs(vk - v0) > 1e-6 * v0) {
                    out << "hexagon spread too large";
                    return false;
                }
            }
        }
        auto sq = NormSpec::polygon(SymmetricPolygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}));
        for (int i = 0; i < 200; ++i) {
            Triangle t = random_triangle(rng);
            auto rep = triangle_report(sq, t);
            double mx = 0, mn = 1e300;
            for (int k = 0; k < 3; ++k) {
                mx = std::max(mx, rep.side_norm[k] * rep.height_norm[k]);
                mn = std::min(mn, rep.side_norm[k] * rep.height_norm[k]);
            }
            if (mx - mn > 0.01 * mx) {
                out << "square witness spread " << (mx - mn) / mx;
                return true;
            }
        }
        out << "no square witness";
        return false;
    });
    h.check("triangle.busemann-is-antinorm-glogovskii", [&](std::ostream& out) {
        double worst = 0;
        for (const auto& nn : lib) {
            Rng rng(derive_seed(seed, 33));
            for (int i = 0; i < 1000 / (int)lib.size() + 1; ++i) {
                Point2 r1 = rng.direction() * rng.uniform(0.5, 2.0);
                Point2 r2 = rng.direction() * rng.uniform(0.5, 2.0);
                if (std::abs(symp(r1, r2)) < 1e-2) continue;
                if (norm2(nn.norm.unit(r1) + nn.norm.unit(r2)) < 1e-3) continue;
                Point2 bu = busemann_bisector(nn.norm, {0, 0}, r1, r2);
                Point2 gl =
                    glogovskii_bisector(nn.norm, {0, 0}, r1, r2, BisectorMetric::Antinorm);
                worst = std::max(worst, std::abs(std::atan2(symp(bu, gl), dot(bu, gl))));
            }
        }
        out << "worst angle " << worst;
        return worst <= 1e-8;
    });
    h.check("triangle.bisector-concurrency", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 34));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm, lib[6].norm};
        double worst = 0;
        for (const auto& n : norms) {
            for (int i = 0; i < 20; ++i) {
                Triangle t = random_triangle(rng);
                auto rep = triangle_report(n, t);
                std::vector<Point2> bus, glo;
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        auto dir = [&](int i2, BisectorMetric m, bool busemann) {
                            Point2 u = t.vertex(i2 + 1) - t.vertex(i2);
                            Point2 v = t.vertex(i2 + 2) - t.vertex(i2);
                            return busemann ? busemann_bisector(n, t.vertex(i2), u, v)
                                            : glogovskii_bisector(n, t.vertex(i2), u, v, m);
                        };
                        auto meet = [&](Point2 va, Point2 da, Point2 vb, Point2 db) {
                            return va + da * (symp(vb - va, db) / symp(da, db));
                        };
                        bus.push_back(meet(t.vertex(a), dir(a, BisectorMetric::Norm, true),
                                           t.vertex(b), dir(b, BisectorMetric::Norm, true)));
                        glo.push_back(meet(t.vertex(a), dir(a, BisectorMetric::Norm, false),
                                           t.vertex(b), dir(b, BisectorMetric::Norm, false)));
                    }
                double spread = 0;
                for (int k = 1; k < 3; ++k) spread = std::max(spread, norm2(bus[k] - bus[0]));
                worst = std::max(worst, spread / t.scale());
                if (norm2(bus[0] - rep.anti_incenter) > 1e-5 * t.scale()) {
                    out << "busemann meet differs from anti-incenter";
                    return false;
                }
                spread = 0;
                for (int k = 1; k < 3; ++k) spread = std::max(spread, norm2(glo[k] - glo[0]));
                worst = std::max(worst, spread / t.scale());
                if (norm2(glo[0] - rep.incenter) > 1e-5 * t.scale()) {
                    out << "glogovskii meet differs from incenter";
                    return false;
                }
            }
        }
        out << "worst concurrency spread " << worst;
        return worst <= 1e-8;
    });
    h.check("triangle.duvelmeyer-iff-radon", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 35));
        for (const auto& nn : lib) {
            if (nn.norm.kind() == NormKind::Mixed) continue; // discretized antinorm
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
                out << nn.name << " coincide=" << coincide << " radon=" << nn.radon
                    << " worst=" << worst;
                return false;
            }
        }
        return true;
    });
    h.check("triangle.reduced-iff-antiequilateral", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 36));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm};
        for (const auto& n : norms) {
            int generic = 0;
            for (int i = 0; i < 25; ++i) {
                Triangle t = random_triangle(rng);
                auto rep = triangle_report(n, t);
                double spread = 0;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        spread = std::max(spread, rep.side_antinorm[a] - rep.side_antinorm[b]);
                if (spread < 1e-3 * rep.side_antinorm[0]) continue;
                ++generic;
                if (rep.is_reduced || !width_preserving_shrink_exists(n, t)) {
                    out << "non-anti-equilateral triangle misclassified";
                    return false;
                }
            }
            for (int i = 0; i < 25; ++i) {
                Triangle t = make_anti_equilateral(n, rng);
                auto rep = triangle_report(n, t);
                if (!rep.is_anti_equilateral) continue; // sweep failed; skip
                if (!rep.is_reduced || width_preserving_shrink_exists(n, t)) {
                    out << "anti-equilateral triangle misclassified";
                    return false;
                }
                // its incenter coincides with the centroid
                if (norm2(rep.incenter - rep.centroid) > 1e-6 * t.scale()) {
                    out << "incenter != centroid on anti-equilateral";
                    return false;
                }
            }
            if (generic < 10) return false;
        }
        return true;
    });
    h.check("triangle.viviani", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 37));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm, lib[4].norm};
        double worst = 0;
        for (const auto& n : norms) {
            for (int i = 0; i < 10; ++i) {
                Triangle t = make_anti_equilateral(n, rng);
                if (!triangle_report(n, t).is_anti_equilateral) continue;
                std::vector<Point2> pts;
                for (int k = 0; k < 60; ++k) pts.push_back(rng.point_in_box(-2, 2));
                worst = std::max(worst, viviani_defect(n, t, pts) / t.scale());
            }
        }
        out << "worst defect " << worst;
        return worst <= 1e-8;
    });
}

void suite_isoperimetry(Harness& h, std::uint64_t seed) {
    auto lib = standard_norm_library(seed);
    h.check("isoperimetry.circump-bound", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 41));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm, lib[5].norm};
        for (const auto& n : norms) {
            const auto& I = n.isoperimetrix_polygon();
            for (int i = 0; i < 170; ++i) {
                double rho = rng.uniform(0.4, 1.5);
                std::vector<Functional> dirs;
                int m = 3 + rng.uniform_int(7);
                for (int k = 0; k < m; ++k) dirs.push_back(Functional{rng.direction()});
                ConvexPolygon p = [&] {
                    try {
                        return circumscribe(ConvexPolygon(I.scaled(rho).vertices()), dirs);
                    } catch (const validation_error&) {
                        return ConvexPolygon(I.scaled(rho * 2).vertices());
                    }
                }();
                double slack = 2 * p.area() - rho * perimeter(n, p);
                if (slack < -1e-9) {
                    out << "bound violated, slack " << slack;
                    return false;
                }
            }
        }
        return true;
    });
    h.check("isoperimetry.busemann-iota", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 42));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm, lib[5].norm};
        for (const auto& n : norms) {
            double areaI = n.isoperimetrix_polygon().area();
            for (int i = 0; i < 330; ++i) {
                ConvexPolygon c = random_body(rng, 3 + rng.uniform_int(9));
                double iota = perimeter(n, c) * perimeter(n, c) / c.area();
                if (iota < 4 * areaI - 1e-9) {
                    out << "iota below 4 area(I)";
                    return false;
                }
                if (iota <= 4 * areaI * (1 + 1e-6)) {
                    // equality case must be an anticircle homothet
                    auto fit = inscribed_anticircle(n, c);
                    ConvexPolygon hom =
                        ConvexPolygon(n.isoperimetrix_polygon().scaled(fit.radius).vertices())
                            .translated(fit.center);
                    if (hausdorff_euclidean(c, hom) > 1e-6 * c.diameter()) {
                        out << "equality case is not an anticircle";
                        return false;
                    }
                }
            }
        }
        return true;
    });
    h.check("isoperimetry.radon-iff-circles-solve", [&](std::ostream& out) {
        for (const auto& nn : lib) {
            ConvexPolygon ball(nn.norm.unit_ball().vertices());
            double iota = perimeter(nn.norm, ball) * perimeter(nn.norm, ball) / ball.area();
            double target = 4 * nn.norm.isoperimetrix_polygon().area();
            double tol = nn.norm.is_polygonal() ? 1e-6 : 5e-3;
            bool equal = std::abs(iota - target) <= tol * target;
            if (equal != nn.radon) {
                out << nn.name << " iota=" << iota << " 4areaI=" << target;
                return false;
            }
        }
        return true;
    });
    h.check("isoperimetry.slacks-nonnegative", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 43));
        std::vector<NormSpec> norms{lib[0].norm, lib[2].norm, lib[5].norm};
        double worst = 0;
        for (const auto& n : norms) {
            for (int i = 0; i < 330; ++i) {
                ConvexPolygon c = random_body(rng, 3 + rng.uniform_int(8));
                auto rep = inequality_report(n, c);
                for (const auto& [name, slack] : rep.inequality_slacks)
                    worst = std::min(worst,
                                     slack / std::max(1.0, rep.inequality_scales.at(name)));
            }
        }
        out << "worst scaled slack " << worst;
        return worst >= -1e-9;
    });
    h.check("isoperimetry.dowker-sequence", [&](std::ostream& out) {
        auto n = lib[0].norm; // square norm
        std::vector<double> areas;
        for (int k = 3; k <= 9; ++k) {
            auto z = zenodorus(n, k);
            if (z.midpoint_defect > 1e-6) {
                out << "midpoint condition failed at n=" << k;
                return false;
            }
            areas.push_back(z.area);
        }
        for (size_t i = 1; i + 1 < areas.size(); ++i)
            if (areas[i - 1] + areas[i + 1] < 2 * areas[i] - 1e-6) {
                out << "convexity failed at n=" << (i + 4);
                return false;
            }
        return true;
    });
    h.check("isoperimetry.girth-identities", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 44));
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            auto B = random_ball(rng, 4 + rng.uniform_int(8));
            auto n = NormSpec::polygon(B);
            auto g = girth_report(n);
            double areaI = n.isoperimetrix_polygon().area();
            worst = std::max(worst, std::abs(g.p_B_of_I - 2 * areaI) / (2 * areaI));
            worst = std::max(worst, std::abs(g.p_I_of_B - 2 * B.area()) / (2 * B.area()));
            worst = std::max(worst, std::abs(g.p_B_of_B - g.p_I_of_I) / g.p_B_of_B);
            if (g.p_B_of_B < 6 - 1e-9 || g.p_B_of_B > 8 + 1e-9) {
                out << "self-circumference out of [6, 8]: " << g.p_B_of_B;
                return false;
            }
        }
        out << "worst identity error " << worst;
        return worst <= 1e-9;
    });
    h.check("isoperimetry.angular-measure-antinorm", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 45));
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            auto B = random_ball(rng, 4 + rng.uniform_int(8));
            auto n = NormSpec::polygon(B);
            auto g = girth_report(n);
            for (int k = 0; k < 50; ++k) {
                Point2 from = rng.direction(), to = rng.direction();
                auto arc = boundary_arc(B, from, to);
                double alen = 0;
                for (size_t j = 0; j + 1 < arc.size(); ++j)
                    alen += n.antinorm(arc[j + 1] - arc[j]);
                auto m = angular_measures(n, from, to);
                worst = std::max(worst, std::abs(m.mu_a - 2 * kPi * alen / g.p_I_of_B));
            }
        }
        out << "worst |mu_a - antinorm measure| " << worst;
        return worst <= 1e-9 * 2 * kPi;
    });
    h.check("isoperimetry.kepler", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 46));
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            auto B = random_ball(rng, 8);
            auto n = NormSpec::polygon(B);
            double areaI = n.isoperimetrix_polygon().area();
            worst = std::max(worst, kepler_check(n, 12) / (areaI / 12));
        }
        out << "worst relative deviation " << worst;
        return worst <= 1e-6;
    });
    h.check("isoperimetry.circumscribed-ratio-iff-radon", [&](std::ostream& out) {
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            double spread = circumscribed_ratio_scan(nn.norm, 200, derive_seed(seed, 47));
            bool constant = spread <= 1 + 1e-6;
            if (constant != nn.radon) {
                out << nn.name << " spread " << spread;
                return false;
            }
        }
        return true;
    });
}

void suite_projections(Harness& h, std::uint64_t seed) {
    auto lib = standard_norm_library(seed);
    h.check("projections.radial-antinorm-nonexpansive", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 51));
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            auto n = NormSpec::polygon(random_ball(rng, 4 + rng.uniform_int(8)));
            auto scan =
                nonexpansive_scan(n, ProjectionMap::Radial, ScanMetric::Antinorm, 5000, seed + i);
            worst = std::max(worst, scan.max_ratio);
        }
        out << "worst ratio " << worst;
        return worst <= 1 + 1e-9;
    });
    h.check("projections.metric-antinorm-nonexpansive", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 52));
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            const auto& nn = lib[i % 3 == 0 ? 0 : (i % 3 == 1 ? 2 : 5)];
            ConvexPolygon s = random_body(rng, 7, 1.5);
            auto scan = nonexpansive_scan(nn.norm, ProjectionMap::Metric, ScanMetric::Antinorm,
                                          1000, seed + i, &s);
            worst = std::max(worst, scan.max_ratio);
        }
        out << "worst ratio " << worst;
        return worst <= 1 + 1e-9;
    });
    h.check("projections.nearest-lemma", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 53));
        double worst = 0;
        for (const auto& nn : lib) {
            if (nn.norm.kind() == NormKind::Mixed) continue;
            for (int k = 0; k < 1000 / (int)lib.size() + 1; ++k) {
                Point2 x = nn.norm.unit(rng.direction());
                Point2 y = nn.norm.unit(rng.direction());
                if (std::abs(symp(x, y)) < 1e-3) continue;
                Point2 p = nearest_on_line(nn.norm, x, Line{{0, 0}, y}, ScanMetric::Antinorm);
                worst = std::max(worst, nn.norm.gauge(p) - 1.0);
            }
        }
        out << "worst gauge excess " << worst;
        return worst <= 1e-9;
    });
    h.check("projections.de-figueiredo-karlovitz", [&](std::ostream& out) {
        // norm-metric scans pass on Radon members and find witnesses on
        // square and octagon
        for (const char* radon_name : {"hexagon", "mixed4"}) {
            for (const auto& nn : lib)
                if (nn.name == radon_name) {
                    auto scan = nonexpansive_scan(nn.norm, ProjectionMap::Radial,
                                                  ScanMetric::Norm, 5000, seed + 7);
                    double tol = nn.norm.is_polygonal() ? 1e-9 : 1e-3;
                    if (scan.max_ratio > 1 + tol) {
                        out << radon_name << " ratio " << scan.max_ratio;
                        return false;
                    }
                }
        }
        for (const char* bad_name : {"square", "octagon"}) {
            for (const auto& nn : lib)
                if (nn.name == bad_name) {
                    auto scan = nonexpansive_scan(nn.norm, ProjectionMap::Radial,
                                                  ScanMetric::Norm, 10000, seed + 8);
                    if (scan.max_ratio <= 1 + 1e-6) {
                        out << bad_name << " witness not found";
                        return false;
                    }
                }
        }
        return true;
    });
    h.check("projections.dsegment-contains-segment", [&](std::ostream& out) {
        Rng rng(derive_seed(seed, 54));
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            for (int i = 0; i < 100; ++i) {
                Point2 a = rng.point_in_box(-1, 1);
                Point2 b = a + rng.direction() * rng.uniform(0.3, 2.0);
                for (int k = 0; k <= 10; ++k)
                    if (!d_member(nn.norm, a, b, a + (b - a) * (k / 10.0))) {
                        out << "segment point rejected";
                        return false;
                    }
            }
        }
        return true;
    });
    h.check("projections.lassak-duality", [&](std::ostream& out) {
        if (!lassak_duality_check(lib[0].norm, 6, derive_seed(seed, 55))) {
            out << "square failed";
            return false;
        }
        if (!lassak_duality_check(lib[2].norm, 6, derive_seed(seed, 56))) {
            out << "hexagon failed";
            return false;
        }
        return true;
    });
    h.check("projections.antiball-dconvex", [&](std::ostream& out) {
        for (const auto& nn : lib) {
            if (!nn.norm.is_polygonal()) continue;
            if (!antiball_dconvex_check(nn.norm, 1000, derive_seed(seed, 57))) {
                out << nn.name << " failed";
                return false;
            }
        }
        return true;
    });
    h.check("projections.antiball-uniqueness", [&](std::ostream& out) {
        const auto& n = lib[0].norm; // square
        StarPolygon anti(n.isoperimetrix_polygon().vertices());
        if (!antiball_projection_uniqueness_scan(n, anti, 3000, derive_seed(seed, 58))) {
            out << "anticircle produced an expansive pair";
            return false;
        }
        StarPolygon ball(n.unit_ball().vertices());
        if (antiball_projection_uniqueness_scan(n, ball, 3000, derive_seed(seed, 59))) {
            out << "non-antiball passed";
            return false;
        }
        return true;
    });
}

} // namespace

std::vector<PropResult> run_property_suite(const std::string& suite, std::uint64_t seed) {
    Harness h;
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "plane-core") suite_plane_core(h, seed), known = true;
    if (all || suite == "norms") suite_norms(h, seed), known = true;
    if (all || suite == "radon") suite_radon(h, seed), known = true;
    if (all || suite == "triangle") suite_triangle(h, seed), known = true;
    if (all || suite == "isoperimetry") suite_isoperimetry(h, seed), known = true;
    if (all || suite == "projections") suite_projections(h, seed), known = true;
    require(known, "unknown property suite: " + suite);
    return h.results;
}

} // namespace mink
