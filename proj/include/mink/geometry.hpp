#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mink {

// Validation failures on user-supplied data (bad polygons, zero vectors, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative solver failed to converge within its budget.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;

    constexpr Point2() = default;
    constexpr Point2(double a, double b) : x1(a), x2(b) {}

    constexpr Point2 operator+(Point2 o) const { return {x1 + o.x1, x2 + o.x2}; }
    constexpr Point2 operator-(Point2 o) const { return {x1 - o.x1, x2 - o.x2}; }
    constexpr Point2 operator-() const { return {-x1, -x2}; }
    constexpr Point2 operator*(double s) const { return {x1 * s, x2 * s}; }
    constexpr Point2 operator/(double s) const { return {x1 / s, x2 / s}; }
    constexpr bool operator==(const Point2&) const = default;

    bool finite() const { return std::isfinite(x1) && std::isfinite(x2); }
};

inline constexpr Point2 operator*(double s, Point2 p) { return p * s; }

// The fixed symplectic form: coordinate determinant. Unit square has area 1,
// counterclockwise orientation is positive.
inline constexpr double symp(Point2 x, Point2 y) { return x.x1 * y.x2 - x.x2 * y.x1; }

inline constexpr double dot(Point2 x, Point2 y) { return x.x1 * y.x1 + x.x2 * y.x2; }

inline double norm2(Point2 x) { return std::hypot(x.x1, x.x2); }

// Euclidean 90-degree CCW rotation. Only for presentation/oracle use; the
// library's duality goes through symp, not through rotation.
inline constexpr Point2 rot90(Point2 x) { return {-x.x2, x.x1}; }

inline double polar_angle(Point2 x) { return std::atan2(x.x2, x.x1); }

// Angle of a direction modulo pi, in [0, pi).
inline double direction_angle(Point2 d) {
    double a = std::atan2(d.x2, d.x1);
    const double pi = 3.14159265358979323846;
    while (a < 0) a += pi;
    while (a >= pi) a -= pi;
    return a;
}

// A linear functional represented through the symplectic form:
// phi(x) = symp(x, g).
struct Functional {
    Point2 g;

    constexpr Functional() = default;
    explicit constexpr Functional(Point2 gg) : g(gg) {}

    constexpr double operator()(Point2 x) const { return symp(x, g); }
    constexpr Functional operator-() const { return Functional{-g}; }

    bool nonzero(double tol = 0.0) const { return norm2(g) > tol; }
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

} // namespace mink
