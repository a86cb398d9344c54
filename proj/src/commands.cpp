#include "mink/commands.hpp"

#include <algorithm>
#include <cmath>

#include "mink/isoperimetry.hpp"
#include "mink/projections.hpp"
#include "mink/propsuite.hpp"
#include "mink/radon.hpp"
#include "mink/rng.hpp"
#include "mink/svg.hpp"
#include "mink/triangle.hpp"

namespace mink {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;

ordered_json jpt(Point2 p) { return ordered_json::array({p.x1, p.x2}); }

ordered_json jpoly(const std::vector<Point2>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(jpt(p));
    return arr;
}

ordered_json jcheck(const std::string& name, double value, double threshold, bool pass) {
    ordered_json c;
    c["name"] = name;
    c["value"] = value;
    c["threshold"] = threshold;
    c["pass"] = pass;
    return c;
}

struct Ctx {
    const Scene* scene = nullptr;
    CliOverrides flags;
    std::uint64_t seed = 0;
    int trials = 1000;
    double tol_exact = kExactTol;
    double tol_opt = kOptTol;
    ordered_json report;
    ordered_json outputs;
    ordered_json checks = ordered_json::array();
    SvgFigure fig;
    bool has_fig = false;
    bool failed_checks_exit4 = false;

    const NormSpec& norm() const { return scene->norm; }

    void add_ball_figure() {
        has_fig = true;
        fig.add_polygon(norm().unit_ball().vertices(), "#1f4e9c");
        fig.add_polygon(norm().isoperimetrix_polygon().vertices(), "#c03a2b", "none", 1.0, true);
        fig.add_point({0, 0}, "#333", 0.8);
    }
};

const Triangle& pick_triangle(const Ctx& c) {
    return c.flags.body.empty() ? c.scene->first_triangle() : c.scene->triangle(c.flags.body);
}

const ConvexPolygon& pick_polygon(const Ctx& c) {
    return c.flags.body.empty() ? c.scene->first_polygon() : c.scene->polygon(c.flags.body);
}

void cmd_antinorm(Ctx& c) {
    std::vector<Point2> pts;
    if (c.scene->point_sets.count("points")) {
        pts = c.scene->points("points");
    } else {
        for (int k = 0; k < 8; ++k) {
            double a = 2 * kPi * k / 8;
            pts.push_back({std::cos(a), std::sin(a)});
        }
    }
    ordered_json rows = ordered_json::array();
    for (const auto& p : pts) {
        ordered_json row;
        row["point"] = jpt(p);
        row["gauge"] = c.norm().gauge(p);
        row["antinorm"] = c.norm().antinorm(p);
        rows.push_back(row);
    }
    c.outputs["values"] = rows;
    c.add_ball_figure();
    for (const auto& p : pts) {
        c.fig.add_point(p, "#2c7a3f", 0.7);
        if (norm2(p) == 0) continue;
        // normality tangent: the supporting line at p/gauge(p), parallel to
        // every direction p is normal to
        Point2 u = c.norm().unit(p);
        Point2 d = normal_cone(c.norm(), p).sample(0.5);
        d = d / norm2(d);
        c.fig.add_segment(u - d * 0.6, u + d * 0.6, "#e0a030", 0.8);
        c.fig.add_point(u, "#e0a030", 0.6);
    }
    c.fig.set_caption("unit circle (solid), isoperimetrix (dashed), supporting lines");
}

void cmd_isoperimetrix(Ctx& c) {
    const auto& I = c.norm().isoperimetrix_polygon();
    c.outputs["isoperimetrix"] = jpoly(I.vertices());
    c.outputs["area_ball"] = c.norm().unit_ball().area();
    c.outputs["area_isoperimetrix"] = I.area();
    if (c.norm().is_polygonal()) {
        double defect = antinorm_involution_defect(c.norm());
        double thr = c.tol_exact * c.norm().unit_ball().diameter();
        c.outputs["involution_defect"] = defect;
        c.checks.push_back(jcheck("involution_defect", defect, thr, defect <= thr));
    }
    c.add_ball_figure();
    c.fig.set_caption("unit circle (solid) and isoperimetrix (dashed)");
}

void cmd_radon_check(Ctx& c) {
    RadonReport rep = is_radon(c.norm());
    c.outputs["is_radon"] = rep.is_radon;
    c.outputs["lambda"] = rep.lambda;
    c.outputs["relative_defect"] = rep.relative_defect;
    c.outputs["asymmetry_eps"] = rep.asymmetry_eps;
    double thr = c.norm().is_polygonal() ? c.tol_opt : 1e-3;
    c.checks.push_back(
        jcheck("relative_defect_vs_threshold", rep.relative_defect, thr, true));
    c.add_ball_figure();
    c.fig.set_caption(rep.is_radon ? "Radon norm" : "not a Radon norm");
}

void symmetry_scan(Ctx& c, const NormSpec& n, const char* check_name) {
    int trials = std::min(c.trials, 2000);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(c.seed, t));
        Point2 x = n.unit(rng.direction());
        Point2 y = n.unit(normal_cone(n, x).sample(rng.uniform()));
        double prod = n.gauge(y) * n.antinorm(x);
        worst = std::max(worst, (prod - std::abs(symp(y, x))) / prod);
        worst = std::max(worst, std::abs(std::abs(symp(x, y)) - 1.0));
    }
    c.checks.push_back(jcheck(check_name, worst, c.tol_opt, worst <= c.tol_opt));
}

void cmd_radon_construct(Ctx& c) {
    const auto& pts = c.scene->points("arc");
    require(pts.size() >= 2, "arc needs at least the two endpoints");
    QuadrantArc arc{pts.front(), pts.back(),
                    std::vector<Point2>(pts.begin() + 1, pts.end() - 1)};
    SymmetricPolygon curve = radon_construct(arc);
    c.outputs["curve"] = jpoly(curve.vertices());
    NormSpec n = NormSpec::polygon(curve);
    symmetry_scan(c, n, "normality_symmetry_defect");
    c.has_fig = true;
    // quadrant-colored: the seed arc, its polar completion, and the mirror
    c.fig.add_polygon(curve.vertices(), "#bbb");
    c.fig.add_polyline(boundary_arc(curve, arc.a, arc.b), "#1f4e9c", 1.6);
    c.fig.add_polyline(boundary_arc(curve, arc.b, -arc.a), "#c03a2b", 1.6);
    c.fig.add_polyline(boundary_arc(curve, -arc.a, -arc.b), "#1f4e9c", 0.9, true);
    c.fig.add_polyline(boundary_arc(curve, -arc.b, arc.a), "#c03a2b", 0.9, true);
    c.fig.add_point(arc.a, "#333", 1.0);
    c.fig.add_point(arc.b, "#333", 1.0);
    c.fig.set_caption("Radon curve from the seed arc (blue) and its anticircle piece (red)");
}

void cmd_radonize(Ctx& c) {
    RadonizeResult res = radonize_detailed(c.norm());
    c.outputs["curve"] = jpoly(res.curve.vertices());
    c.outputs["a"] = jpt(res.a);
    c.outputs["b"] = jpt(res.b);
    c.outputs["form_scale"] = res.form_scale;
    NormSpec out_norm = NormSpec::polygon(res.curve);
    double defect = is_radon(out_norm).relative_defect;
    c.outputs["output_radon_defect"] = defect;
    c.checks.push_back(jcheck("output_is_radon", defect, c.tol_opt, defect <= c.tol_opt));
    symmetry_scan(c, out_norm, "normality_symmetry_defect");
    c.has_fig = true;
    c.fig.add_polygon(c.norm().unit_ball().vertices(), "#999", "none", 1.0, true);
    c.fig.add_polygon(res.curve.vertices(), "#1f4e9c");
    c.fig.add_point(res.a, "#333", 1.0);
    c.fig.add_point(res.b, "#333", 1.0);
    c.fig.set_caption("radonized curve (solid) over the input ball (dashed)");
}

void cmd_triangle(Ctx& c) {
    const Triangle& t = pick_triangle(c);
    TriangleReport rep = triangle_report(c.norm(), t);
    c.outputs["vertices"] = jpoly({t.a1, t.a2, t.a3});
    c.outputs["side_norm"] = ordered_json::array({rep.side_norm[0], rep.side_norm[1], rep.side_norm[2]});
    c.outputs["side_antinorm"] =
        ordered_json::array({rep.side_antinorm[0], rep.side_antinorm[1], rep.side_antinorm[2]});
    c.outputs["height_norm"] =
        ordered_json::array({rep.height_norm[0], rep.height_norm[1], rep.height_norm[2]});
    c.outputs["height_antinorm"] = ordered_json::array(
        {rep.height_antinorm[0], rep.height_antinorm[1], rep.height_antinorm[2]});
    c.outputs["area"] = rep.area;
    c.outputs["centroid"] = jpt(rep.centroid);
    c.outputs["incenter"] = jpt(rep.incenter);
    c.outputs["inradius"] = rep.inradius;
    c.outputs["anti_incenter"] = jpt(rep.anti_incenter);
    c.outputs["anti_inradius"] = rep.anti_inradius;
    c.outputs["is_anti_equilateral"] = rep.is_anti_equilateral;
    c.outputs["min_width"] = rep.min_width;
    c.outputs["is_reduced"] = rep.is_reduced;
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        worst = std::max(worst,
                         std::abs(rep.area - 0.5 * rep.side_norm[i] * rep.height_antinorm[i]));
    c.checks.push_back(jcheck("area_identity", worst, c.tol_exact * rep.area,
                              worst <= c.tol_exact * rep.area));
    c.has_fig = true;
    c.fig.add_polygon({t.a1, t.a2, t.a3}, "#1f4e9c");
    c.fig.add_point(rep.incenter, "#2c7a3f", 1.0);
    c.fig.add_point(rep.anti_incenter, "#c03a2b", 1.0);
    c.fig.add_point(rep.centroid, "#999", 0.8);
    c.fig.set_caption("incenter (green), anti-incenter (red), centroid (grey)");
}

void cmd_bisectors(Ctx& c) {
    const Triangle& t = pick_triangle(c);
    TriangleReport rep = triangle_report(c.norm(), t);
    ordered_json rows = ordered_json::array();
    double worst_angle = 0;
    for (int i = 0; i < 3; ++i) {
        Point2 u = t.vertex(i + 1) - t.vertex(i);
        Point2 v = t.vertex(i + 2) - t.vertex(i);
        Point2 bus = busemann_bisector(c.norm(), t.vertex(i), u, v);
        Point2 glog_n = glogovskii_bisector(c.norm(), t.vertex(i), u, v, BisectorMetric::Norm);
        Point2 glog_a = glogovskii_bisector(c.norm(), t.vertex(i), u, v, BisectorMetric::Antinorm);
        worst_angle = std::max(worst_angle,
                               std::abs(std::atan2(symp(bus, glog_a), dot(bus, glog_a))));
        ordered_json row;
        row["vertex"] = jpt(t.vertex(i));
        row["busemann"] = jpt(bus);
        row["glogovskii_norm"] = jpt(glog_n);
        row["glogovskii_antinorm"] = jpt(glog_a);
        rows.push_back(row);
    }
    c.outputs["bisectors"] = rows;
    c.outputs["incenter"] = jpt(rep.incenter);
    c.outputs["anti_incenter"] = jpt(rep.anti_incenter);
    c.checks.push_back(jcheck("busemann_equals_antinorm_glogovskii", worst_angle, 1e-8,
                              worst_angle <= 1e-8));
    c.has_fig = true;
    c.fig.add_polygon({t.a1, t.a2, t.a3}, "#1f4e9c");
    for (int i = 0; i < 3; ++i) {
        c.fig.add_segment(t.vertex(i), rep.anti_incenter, "#c03a2b", 0.9);
        c.fig.add_segment(t.vertex(i), rep.incenter, "#2c7a3f", 0.8, true);
    }
    c.fig.add_point(rep.incenter, "#2c7a3f", 1.0);
    c.fig.add_point(rep.anti_incenter, "#c03a2b", 1.0);
    c.fig.set_caption("Busemann bisectors meet at the anti-incenter (red)");
}

void cmd_fermat(Ctx& c) {
    const Triangle& t = pick_triangle(c);
    FtResult ft = fermat_torricelli(c.norm(), t);
    auto ch = verify_ft_characterization(c.norm(), t);
    c.outputs["point"] = jpt(ft.point);
    c.outputs["value"] = ft.value;
    c.outputs["at_vertex"] = ft.at_vertex;
    c.outputs["characterization_satisfied"] = ch.satisfied;
    c.outputs["characterization_trivial"] = ch.trivial;
    c.checks.push_back(jcheck("tangent_characterization", ch.satisfied ? 0.0 : 1.0, 0.5,
                              ch.satisfied));
    c.has_fig = true;
    c.fig.add_polygon({t.a1, t.a2, t.a3}, "#1f4e9c");
    for (int i = 0; i < 3; ++i) c.fig.add_segment(ft.point, t.vertex(i), "#999", 0.7, true);
    c.fig.add_point(ft.point, "#c03a2b", 1.2);
    c.fig.set_caption("Fermat-Torricelli point");
}

void cmd_iso_report(Ctx& c) {
    const ConvexPolygon& body = pick_polygon(c);
    IsoperimetricReport rep = inequality_report(c.norm(), body);
    c.outputs["perimeter"] = rep.perimeter;
    c.outputs["area"] = rep.area;
    c.outputs["iota"] = rep.iota;
    c.outputs["rho"] = rep.rho;
    c.outputs["sigma"] = rep.sigma;
    ordered_json slacks;
    for (const auto& [name, slack] : rep.inequality_slacks) {
        slacks[name] = slack;
        double thr = -c.tol_exact * std::max(1.0, rep.inequality_scales.at(name));
        c.checks.push_back(jcheck("slack." + name, slack, thr, slack >= thr));
    }
    c.outputs["inequality_slacks"] = slacks;
    auto fit_in = inscribed_anticircle(c.norm(), body);
    auto fit_out = enclosing_anticircle(c.norm(), body);
    c.outputs["inscribed_anticircle"] = ordered_json{{"center", jpt(fit_in.center)},
                                                     {"radius", fit_in.radius}};
    c.outputs["enclosing_anticircle"] = ordered_json{{"center", jpt(fit_out.center)},
                                                     {"radius", fit_out.radius}};
    c.has_fig = true;
    c.fig.add_polygon(body.vertices(), "#1f4e9c");
    auto draw_hom = [&](const AnticircleFit& f, const char* color) {
        std::vector<Point2> v = c.norm().isoperimetrix_polygon().scaled(f.radius).vertices();
        for (auto& p : v) p = p + f.center;
        c.fig.add_polygon(v, color, "none", 0.9, true);
    };
    draw_hom(fit_in, "#2c7a3f");
    draw_hom(fit_out, "#c03a2b");
    c.fig.set_caption("inscribed (green) and enclosing (red) anticircles");
}

void cmd_zenodorus(Ctx& c) {
    int n = c.flags.ngon.value_or(c.scene->options.ngon);
    ZenodorusResult z = zenodorus(c.norm(), n);
    c.outputs["ngon"] = n;
    c.outputs["polygon"] = jpoly(z.polygon.vertices());
    c.outputs["area"] = z.area;
    c.outputs["midpoint_defect"] = z.midpoint_defect;
    c.outputs["iterations"] = z.iterations;
    c.checks.push_back(jcheck("midpoint_tangency", z.midpoint_defect, c.tol_opt,
                              z.midpoint_defect <= c.tol_opt));
    c.has_fig = true;
    c.fig.add_polygon(c.norm().isoperimetrix_polygon().vertices(), "#c03a2b", "none", 1.0, true);
    c.fig.add_polygon(z.polygon.vertices(), "#1f4e9c");
    c.fig.set_caption("minimum-area circumscribed polygon about the anticircle");
}

void cmd_girth(Ctx& c) {
    GirthReport g = girth_report(c.norm());
    c.outputs["p_B_of_B"] = g.p_B_of_B;
    c.outputs["p_I_of_I"] = g.p_I_of_I;
    c.outputs["p_B_of_I"] = g.p_B_of_I;
    c.outputs["p_I_of_B"] = g.p_I_of_B;
    double areaI = c.norm().isoperimetrix_polygon().area();
    double areaB = c.norm().unit_ball().area();
    c.checks.push_back(jcheck("p_B_of_I_equals_2_area_I", std::abs(g.p_B_of_I - 2 * areaI),
                              c.tol_exact * areaI,
                              std::abs(g.p_B_of_I - 2 * areaI) <= c.tol_exact * areaI));
    c.checks.push_back(jcheck("p_I_of_B_equals_2_area_B", std::abs(g.p_I_of_B - 2 * areaB),
                              c.tol_exact * areaB,
                              std::abs(g.p_I_of_B - 2 * areaB) <= c.tol_exact * areaB));
    c.checks.push_back(jcheck("self_circumference_duality", std::abs(g.p_B_of_B - g.p_I_of_I),
                              c.tol_exact * g.p_B_of_B,
                              std::abs(g.p_B_of_B - g.p_I_of_I) <= c.tol_exact * g.p_B_of_B));
    c.checks.push_back(jcheck("girth_lower", g.p_B_of_B, 6.0, g.p_B_of_B >= 6 - 1e-9));
    c.checks.push_back(jcheck("girth_upper", g.p_B_of_B, 8.0, g.p_B_of_B <= 8 + 1e-9));
}

void cmd_angles(Ctx& c) {
    Point2 from{1, -1}, to{1, 1};
    if (c.scene->point_sets.count("arc")) {
        const auto& pts = c.scene->points("arc");
        require(pts.size() == 2, "angles: point set \"arc\" needs exactly two directions");
        from = pts[0];
        to = pts[1];
    }
    ArcMeasure m = angular_measures(c.norm(), from, to);
    c.outputs["mu_l"] = m.mu_l;
    c.outputs["mu_a"] = m.mu_a;
    // the antinorm arc measure coincides with mu_a
    const auto& B = c.norm().unit_ball();
    auto arc = boundary_arc(B, from, to);
    double alen = 0;
    for (size_t i = 0; i + 1 < arc.size(); ++i) alen += c.norm().antinorm(arc[i + 1] - arc[i]);
    GirthReport g = girth_report(c.norm());
    double anti_measure = 2 * kPi * alen / g.p_I_of_B;
    c.outputs["mu_a_antinorm_form"] = anti_measure;
    c.checks.push_back(jcheck("mu_a_equals_antinorm_measure", std::abs(m.mu_a - anti_measure),
                              c.tol_exact * 2 * kPi,
                              std::abs(m.mu_a - anti_measure) <= c.tol_exact * 2 * kPi));
    int k = c.scene->options.partitions;
    double kep = kepler_check(c.norm(), k);
    double thr = c.tol_opt * c.norm().isoperimetrix_polygon().area() / k;
    c.outputs["kepler_deviation"] = kep;
    c.checks.push_back(jcheck("kepler_equal_areas", kep, thr, kep <= thr));
    // equiframed coincidence datum: worst |mu_l - mu_a| over random arcs
    double worst = 0;
    for (int t = 0; t < std::min(c.trials, 500); ++t) {
        Rng rng(derive_seed(c.seed, t));
        auto mm = angular_measures(c.norm(), rng.direction(), rng.direction());
        worst = std::max(worst, std::abs(mm.mu_l - mm.mu_a));
    }
    c.outputs["measure_coincidence_defect"] = worst;
    c.outputs["measures_coincide"] = worst <= 1e-6;
    c.has_fig = true;
    c.fig.add_polygon(B.vertices(), "#1f4e9c");
    c.fig.add_polyline(arc, "#c03a2b", 1.6);
    c.fig.add_segment({0, 0}, arc.front(), "#999", 0.7, true);
    c.fig.add_segment({0, 0}, arc.back(), "#999", 0.7, true);
    c.fig.set_caption("boundary arc and its sector");
}

void cmd_projections(Ctx& c) {
    int trials = c.trials;
    auto anti = nonexpansive_scan(c.norm(), ProjectionMap::Radial, ScanMetric::Antinorm, trials,
                                  c.seed);
    c.outputs["radial_antinorm_max_ratio"] = anti.max_ratio;
    c.outputs["radial_antinorm_witness"] =
        ordered_json::array({jpt(anti.witness_v), jpt(anti.witness_w)});
    c.checks.push_back(jcheck("radial_antinorm_nonexpansive", anti.max_ratio, 1 + c.tol_exact,
                              anti.max_ratio <= 1 + c.tol_exact));
    auto norm_scan =
        nonexpansive_scan(c.norm(), ProjectionMap::Radial, ScanMetric::Norm, trials, c.seed + 1);
    c.outputs["radial_norm_max_ratio"] = norm_scan.max_ratio;
    c.outputs["radial_norm_witness"] =
        ordered_json::array({jpt(norm_scan.witness_v), jpt(norm_scan.witness_w)});
    if (!c.scene->polygons.empty()) {
        const ConvexPolygon& s = c.scene->first_polygon();
        auto metric = nonexpansive_scan(c.norm(), ProjectionMap::Metric, ScanMetric::Antinorm,
                                        std::min(trials, 3000), c.seed + 2, &s);
        c.outputs["metric_antinorm_max_ratio"] = metric.max_ratio;
        c.checks.push_back(jcheck("metric_antinorm_nonexpansive", metric.max_ratio,
                                  1 + c.tol_exact, metric.max_ratio <= 1 + c.tol_exact));
    }
    // nearest-point lemma sweep
    double worst = 0;
    for (int t = 0; t < std::min(trials, 1000); ++t) {
        Rng rng(derive_seed(c.seed + 3, t));
        Point2 x = c.norm().unit(rng.direction());
        Point2 y = c.norm().unit(rng.direction());
        if (std::abs(symp(x, y)) < 1e-3) continue;
        Point2 p = nearest_on_line(c.norm(), x, Line{{0, 0}, y}, ScanMetric::Antinorm);
        worst = std::max(worst, c.norm().gauge(p) - 1.0);
    }
    double lemma_tol = c.norm().kind() == NormKind::Mixed ? 1e-4 : c.tol_exact;
    c.outputs["nearest_lemma_worst_excess"] = worst;
    c.checks.push_back(jcheck("nearest_point_lemma", worst, lemma_tol, worst <= lemma_tol));

    // point-pair bisector and its strip (strictly convex backends)
    if (!c.norm().is_polygonal()) {
        Point2 p{-1, 0}, q{1, 0};
        if (c.scene->point_sets.count("pair")) {
            const auto& pts = c.scene->points("pair");
            require(pts.size() == 2, "projections: point set \"pair\" needs two points");
            p = pts[0];
            q = pts[1];
        }
        auto samples = bisector_sample(c.norm(), p, q, 61);
        StripSpec strip = bisector_strip(c.norm(), p, q);
        bool inside = strip_test(samples, strip);
        c.outputs["bisector_samples"] = static_cast<int>(samples.size());
        c.outputs["strip_direction"] = jpt(strip.direction);
        c.checks.push_back(jcheck("bisector_in_strip", inside ? 0.0 : 1.0, 0.5, inside));
        c.has_fig = true;
        c.fig.add_polygon(c.norm().unit_ball().vertices(), "#ccc", "none", 0.7, true);
        for (const auto& s : samples) c.fig.add_point(s, "#1f4e9c", 0.6);
        Point2 dir = strip.direction / norm2(strip.direction);
        double ext = 4 * norm2(q - p);
        c.fig.add_segment(p - dir * ext, p + dir * ext, "#c03a2b", 0.9, true);
        c.fig.add_segment(q - dir * ext, q + dir * ext, "#c03a2b", 0.9, true);
        c.fig.add_point(p, "#333", 1.0);
        c.fig.add_point(q, "#333", 1.0);
        c.fig.set_caption("bisector samples inside the anticircle tangent strip");
    }
}

void cmd_convexity(Ctx& c) {
    Point2 a{0, 0}, b{2, 0};
    if (c.scene->point_sets.count("pair")) {
        const auto& pts = c.scene->points("pair");
        require(pts.size() == 2, "convexity: point set \"pair\" needs exactly two points");
        a = pts[0];
        b = pts[1];
    }
    DSegmentRegion region = d_segment(c.norm(), a, b);
    ordered_json pieces = ordered_json::array();
    for (const auto& piece : region.pieces) pieces.push_back(jpoly(piece.vertices()));
    c.outputs["d_segment_pieces"] = pieces;
    c.outputs["d_segment_area"] = region.area();
    if (c.norm().is_polygonal()) {
        bool lassak = lassak_duality_check(c.norm(), std::min(c.trials / 100 + 1, 10), c.seed);
        c.outputs["lassak_duality"] = lassak;
        c.checks.push_back(jcheck("lassak_duality", lassak ? 0.0 : 1.0, 0.5, lassak));
        bool dconv = antiball_dconvex_check(c.norm(), std::min(c.trials, 1000), c.seed + 1);
        c.outputs["antiball_dconvex"] = dconv;
        c.checks.push_back(jcheck("antiball_dconvex", dconv ? 0.0 : 1.0, 0.5, dconv));
    }
    if (c.scene->point_sets.count("points")) {
        const auto& pts = c.scene->points("points");
        ordered_json rows = ordered_json::array();
        for (const auto& z : pts) {
            ordered_json row;
            row["point"] = jpt(z);
            row["d_member"] = d_member(c.norm(), a, b, z);
            row["ball_hull_member"] = ball_hull_member(c.norm(), {a, b}, z, 60);
            rows.push_back(row);
        }
        c.outputs["memberships"] = rows;
    }
    c.has_fig = true;
    for (const auto& piece : region.pieces)
        c.fig.add_polygon(piece.vertices(), "#2c7a3f", "#e8f3ea");
    c.fig.add_segment(a, b, "#1f4e9c", 1.4);
    c.fig.add_point(a, "#333", 1.0);
    c.fig.add_point(b, "#333", 1.0);
    c.fig.set_caption("d-segment region");
}

void cmd_proptest(Ctx& c) {
    auto results = run_property_suite(c.flags.suite, c.seed);
    ordered_json rows = ordered_json::array();
    int fails = 0;
    for (const auto& r : results) {
        ordered_json row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["details"] = r.details;
        rows.push_back(row);
        if (!r.pass) ++fails;
    }
    c.outputs["suite"] = c.flags.suite;
    c.outputs["results"] = rows;
    c.outputs["failures"] = fails;
    c.failed_checks_exit4 = fails > 0;
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{
        "antinorm",  "isoperimetrix", "radon-check", "radon-construct", "radonize",
        "triangle",  "bisectors",     "fermat",      "iso-report",      "zenodorus",
        "girth",     "angles",        "projections", "convexity",       "proptest"};
    return names;
}

CommandOutcome run_command(const std::string& command, const Scene* scene,
                           const CliOverrides& flags) {
    const auto& names = command_names();
    require(std::find(names.begin(), names.end(), command) != names.end(),
            "unknown command: " + command);
    require(scene != nullptr || command == "proptest", "command needs a scene file");

    Ctx c;
    c.scene = scene;
    c.flags = flags;
    c.seed = flags.seed.value_or(scene ? scene->options.seed : 42);
    c.trials = flags.trials.value_or(scene ? scene->options.trials : 1000);
    if (scene) {
        c.tol_exact = flags.tol_exact.value_or(scene->options.tol_exact);
        c.tol_opt = flags.tol_opt.value_or(scene->options.tol_opt);
    }

    if (command == "antinorm") cmd_antinorm(c);
    else if (command == "isoperimetrix") cmd_isoperimetrix(c);
    else if (command == "radon-check") cmd_radon_check(c);
    else if (command == "radon-construct") cmd_radon_construct(c);
    else if (command == "radonize") cmd_radonize(c);
    else if (command == "triangle") cmd_triangle(c);
    else if (command == "bisectors") cmd_bisectors(c);
    else if (command == "fermat") cmd_fermat(c);
    else if (command == "iso-report") cmd_iso_report(c);
    else if (command == "zenodorus") cmd_zenodorus(c);
    else if (command == "girth") cmd_girth(c);
    else if (command == "angles") cmd_angles(c);
    else if (command == "projections") cmd_projections(c);
    else if (command == "convexity") cmd_convexity(c);
    else if (command == "proptest") cmd_proptest(c);

    CommandOutcome out;
    out.report["tool"] = "minkplane";
    out.report["version"] = kToolVersion;
    out.report["command"] = command;
    out.report["seed"] = c.seed;
    out.report["seed_derivation"] = "per-trial splitmix64 counter from the master seed";
    ordered_json inputs;
    if (scene) {
        inputs["norm"] = nlohmann::ordered_json::parse(scene->norm_descriptor);
        ordered_json bodies = ordered_json::array();
        for (const auto& [name, _] : scene->polygons) bodies.push_back(name + ":polygon");
        for (const auto& [name, _] : scene->triangles) bodies.push_back(name + ":triangle");
        for (const auto& [name, _] : scene->point_sets) bodies.push_back(name + ":points");
        inputs["bodies"] = bodies;
        ordered_json o;
        o["seed"] = scene->options.seed;
        o["trials"] = c.trials;
        o["discretization"] = scene->options.discretization;
        o["area_unit"] = scene->options.area_unit;
        o["tolerances"] = ordered_json{{"exact", c.tol_exact}, {"opt", c.tol_opt}};
        inputs["options"] = o;
    }
    out.report["inputs"] = inputs;
    out.report["outputs"] = c.outputs;
    out.report["checks"] = c.checks;
    if (c.has_fig) out.svg = c.fig.render();

    out.exit_code = 0;
    if (c.failed_checks_exit4) out.exit_code = 4;
    return out;
}

} // namespace mink
