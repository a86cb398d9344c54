#include "mink/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace mink {

namespace {

constexpr double kPi = 3.14159265358979323846;

double lp_norm(Point2 x, double p) {
    double a = std::abs(x.x1), b = std::abs(x.x2);
    if (a == 0 && b == 0) return 0.0;
    double m = std::max(a, b);
    return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

double mixed_norm(Point2 x, double p, double q) {
    return x.x1 * x.x2 >= 0 ? lp_norm(x, p) : lp_norm(x, q);
}

} // namespace

struct NormSpec::Impl {
    NormKind kind;
    double p = 2.0, q = 2.0;
    int disc = kDefaultVertexBudget;
    std::unique_ptr<SymmetricPolygon> ball;
    std::unique_ptr<SymmetricPolygon> iso;

    double gauge(Point2 x) const {
        switch (kind) {
            case NormKind::Polygon: {
                // Exact polytope duality: the polar's vertices carry the
                // edge functionals of B.
                double m = 0.0;
                for (const auto& w : iso->vertices()) m = std::max(m, symp(x, w));
                return m;
            }
            case NormKind::Lp:
                return lp_norm(x, p);
            case NormKind::Mixed:
                return mixed_norm(x, p, q);
            case NormKind::Euclidean:
                return norm2(x);
        }
        return 0.0;
    }

    double antinorm(Point2 x) const {
        switch (kind) {
            case NormKind::Polygon:
            case NormKind::Mixed: {
                double m = 0.0;
                for (const auto& v : ball->vertices()) m = std::max(m, symp(x, v));
                return m;
            }
            case NormKind::Lp:
                return lp_norm(x, q);
            case NormKind::Euclidean:
                return norm2(x);
        }
        return 0.0;
    }
};

namespace {

// Inscribed discretization of an analytic unit circle, antipodally exact.
SymmetricPolygon discretize(const std::function<double(Point2)>& gauge_fn, int n) {
    require(n >= 8 && n % 2 == 0, "discretization must be even and >= 8");
    std::vector<Point2> half(n / 2);
    for (int k = 0; k < n / 2; ++k) {
        double a = 2.0 * kPi * k / n;
        Point2 d{std::cos(a), std::sin(a)};
        half[k] = d / gauge_fn(d);
    }
    return SymmetricPolygon::from_half(half);
}

} // namespace

NormSpec NormSpec::polygon(SymmetricPolygon B) {
    auto impl = std::make_shared<Impl>();
    impl->kind = NormKind::Polygon;
    impl->iso = std::make_unique<SymmetricPolygon>(polar(B));
    impl->ball = std::make_unique<SymmetricPolygon>(std::move(B));
    NormSpec s;
    s.impl_ = std::move(impl);
    return s;
}

NormSpec NormSpec::lp(double p, int discretization) {
    require(p > 1.0 && std::isfinite(p), "lp exponent must lie in (1, inf)");
    auto impl = std::make_shared<Impl>();
    impl->kind = NormKind::Lp;
    impl->p = p;
    impl->q = p / (p - 1.0);
    impl->disc = discretization;
    impl->ball = std::make_unique<SymmetricPolygon>(
        discretize([p](Point2 d) { return lp_norm(d, p); }, discretization));
    impl->iso = std::make_unique<SymmetricPolygon>(
        discretize([q = impl->q](Point2 d) { return lp_norm(d, q); }, discretization));
    NormSpec s;
    s.impl_ = std::move(impl);
    return s;
}

NormSpec NormSpec::mixed(double p, int discretization) {
    require(p > 1.0 && std::isfinite(p), "mixed exponent must lie in (1, inf)");
    auto impl = std::make_shared<Impl>();
    impl->kind = NormKind::Mixed;
    impl->p = p;
    impl->q = p / (p - 1.0);
    impl->disc = discretization;
    impl->ball = std::make_unique<SymmetricPolygon>(discretize(
        [p, q = impl->q](Point2 d) { return mixed_norm(d, p, q); }, discretization));
    impl->iso = std::make_unique<SymmetricPolygon>(polar(*impl->ball));
    NormSpec s;
    s.impl_ = std::move(impl);
    return s;
}

NormSpec NormSpec::euclidean(int discretization) {
    auto impl = std::make_shared<Impl>();
    impl->kind = NormKind::Euclidean;
    impl->disc = discretization;
    impl->ball = std::make_unique<SymmetricPolygon>(
        discretize([](Point2 d) { return norm2(d); }, discretization));
    impl->iso = std::make_unique<SymmetricPolygon>(*impl->ball);
    NormSpec s;
    s.impl_ = std::move(impl);
    return s;
}

NormKind NormSpec::kind() const { return impl_->kind; }
double NormSpec::p_exponent() const { return impl_->p; }
double NormSpec::q_exponent() const { return impl_->q; }
int NormSpec::discretization() const { return impl_->disc; }
double NormSpec::gauge(Point2 x) const { return impl_->gauge(x); }
double NormSpec::antinorm(Point2 x) const { return impl_->antinorm(x); }
const SymmetricPolygon& NormSpec::unit_ball() const { return *impl_->ball; }
const SymmetricPolygon& NormSpec::isoperimetrix_polygon() const { return *impl_->iso; }

Point2 NormSpec::unit(Point2 x) const {
    double g = gauge(x);
    require(g > 0, "unit of the zero vector");
    return x / g;
}

std::string NormSpec::describe() const {
    switch (kind()) {
        case NormKind::Polygon:
            return "polygon(" + std::to_string(unit_ball().size()) + " vertices)";
        case NormKind::Lp:
            return "lp(" + std::to_string(p_exponent()) + ")";
        case NormKind::Mixed:
            return "mixed(" + std::to_string(p_exponent()) + ")";
        case NormKind::Euclidean:
            return "euclidean";
    }
    return "?";
}

SymmetricPolygon isoperimetrix(const NormSpec& n, int budget) {
    if (n.is_polygonal() || budget == 0 || budget == n.discretization())
        return n.isoperimetrix_polygon();
    switch (n.kind()) {
        case NormKind::Lp:
            return NormSpec::lp(n.p_exponent(), budget).isoperimetrix_polygon();
        case NormKind::Mixed:
            return NormSpec::mixed(n.p_exponent(), budget).isoperimetrix_polygon();
        default:
            return NormSpec::euclidean(budget).isoperimetrix_polygon();
    }
}

double antinorm_involution_defect(const NormSpec& n) {
    require(n.is_polygonal(), "involution defect needs a polygon backend");
    const SymmetricPolygon& B = n.unit_ball();
    SymmetricPolygon twice = polar(polar(B));
    return hausdorff_euclidean(B, twice);
}

bool is_normal(const NormSpec& n, Point2 x, Point2 y, double tol) {
    require(norm2(x) > 0 && norm2(y) > 0, "normality of a zero vector");
    double prod = n.gauge(x) * n.antinorm(y);
    return std::abs(symp(x, y)) >= prod * (1.0 - tol) - tol;
}

bool NormalCone::contains(Point2 d, double tol) const {
    double a = direction_angle(d);
    for (double shift : {-kPi, 0.0, kPi})
        if (a + shift >= theta_lo - tol && a + shift <= theta_hi + tol) return true;
    return false;
}

Point2 NormalCone::sample(double t) const {
    double a = theta_lo + t * (theta_hi - theta_lo);
    return {std::cos(a), std::sin(a)};
}

namespace {

NormalCone singleton_cone(Point2 d) {
    double a = direction_angle(d);
    return {d, d, a, a};
}

Point2 smooth_tangent(const NormSpec& n, Point2 x) {
    double p = n.p_exponent();
    Point2 grad;
    switch (n.kind()) {
        case NormKind::Euclidean:
            grad = x;
            break;
        case NormKind::Lp:
            grad = {std::copysign(std::pow(std::abs(x.x1), p - 1), x.x1),
                    std::copysign(std::pow(std::abs(x.x2), p - 1), x.x2)};
            break;
        case NormKind::Mixed: {
            double e = x.x1 * x.x2 >= 0 ? p : n.q_exponent();
            grad = {std::copysign(std::pow(std::abs(x.x1), e - 1), x.x1),
                    std::copysign(std::pow(std::abs(x.x2), e - 1), x.x2)};
            break;
        }
        default:
            break;
    }
    return rot90(grad);
}

} // namespace

NormalCone normal_cone(const NormSpec& n, Point2 x, double contact_tol) {
    require(norm2(x) > 0, "normal cone of the zero vector");
    if (!n.is_polygonal()) return singleton_cone(smooth_tangent(n, x));

    const SymmetricPolygon& B = n.unit_ball();
    int m = B.size();
    Point2 u = n.unit(x);
    // Edges of B whose line passes through u; one edge at edge-interior
    // contact, two consecutive edges at a vertex of B.
    auto touches = [&](int j) {
        Point2 e = B.edge_vector(j);
        return std::abs(symp(e, u - B.vertex(j))) <= contact_tol * norm2(e);
    };
    int first = -1, count = 0;
    for (int j = 0; j < m; ++j) {
        if (touches(j)) {
            if (count == 0) first = j;
            ++count;
        }
    }
    require(count >= 1, "boundary location failed");
    if (count >= 2 && first == 0 && touches(m - 1)) first = m - 1 - (count - 2);
    Point2 e_lo = B.edge_vector(first);
    if (count == 1) return singleton_cone(e_lo);
    Point2 e_hi = B.edge_vector(first + count - 1);
    double a_lo = direction_angle(e_lo);
    double delta = std::atan2(symp(e_lo, e_hi), dot(e_lo, e_hi)); // in (0, pi)
    return {e_lo, e_hi, a_lo, a_lo + delta};
}

AlphaInterval normal_coefficients(const NormSpec& n, Point2 x, Point2 y) {
    require(std::abs(symp(x, y)) > 1e-12 * norm2(x) * norm2(y),
            "normal_coefficients needs independent vectors");
    NormalCone cone = normal_cone(n, x);
    auto alpha_for = [&](Point2 d) { return -symp(y, d) / symp(x, d); };
    double a0 = alpha_for(cone.dir_lo), a1 = alpha_for(cone.dir_hi);
    return {std::min(a0, a1), std::max(a0, a1)};
}

double line_distance(const NormSpec& n, Point2 p, const Line& line) {
    require(norm2(line.direction) > 0, "line needs a direction");
    return std::abs(symp(p - line.point, line.direction)) / n.antinorm(line.direction);
}

double line_distance_antinorm(const NormSpec& n, Point2 p, const Line& line) {
    require(norm2(line.direction) > 0, "line needs a direction");
    return std::abs(symp(p - line.point, line.direction)) / n.gauge(line.direction);
}

double signed_line_distance(const NormSpec& n, Point2 p, const Line& line) {
    require(norm2(line.direction) > 0, "line needs a direction");
    return symp(p - line.point, line.direction) / n.antinorm(line.direction);
}

namespace {

// Golden-section minimum of a convex function on [0, 1].
template <class F>
double golden_min(const F& f, int iters = 120) {
    const double inv_phi = 0.6180339887498949;
    double a = 0.0, b = 1.0;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min({f(a), f1, f2, f(b)});
}

template <class Metric>
double point_to_polygon(Point2 p, const ConvexPolygon& s, const Metric& dist) {
    if (s.contains(p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    int m = s.size();
    for (int i = 0; i < m; ++i) {
        Point2 u = s.vertex(i), e = s.edge_vector(i);
        best = std::min(best, golden_min([&](double t) { return dist(p - (u + e * t)); }));
    }
    return best;
}

template <class Metric>
double hausdorff_with(const ConvexPolygon& p, const ConvexPolygon& q, const Metric& dist) {
    double h = 0.0;
    for (const auto& v : p.vertices()) h = std::max(h, point_to_polygon(v, q, dist));
    for (const auto& v : q.vertices()) h = std::max(h, point_to_polygon(v, p, dist));
    return h;
}

} // namespace

double distance_to_polygon(const NormSpec& n, Point2 p, const ConvexPolygon& s) {
    return point_to_polygon(p, s, [&](Point2 v) { return n.gauge(v); });
}

double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q, const NormSpec& metric) {
    return hausdorff_with(p, q, [&](Point2 v) { return metric.gauge(v); });
}

double hausdorff_euclidean(const ConvexPolygon& p, const ConvexPolygon& q) {
    return hausdorff_with(p, q, [](Point2 v) { return norm2(v); });
}

Point2 unit_point(const NormSpec& n, Point2 dir) { return n.unit(dir); }

} // namespace mink
