#include <doctest.h>

#include <cmath>

#include "mink/linprog.hpp"
#include "mink/rng.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

// Vertex-enumeration oracle for 2-D LPs: intersect every constraint pair
// (and box edges), keep feasible points, take the best objective.
double lp2_brute(const LpProblem& p) {
    std::vector<std::vector<double>> rows = p.A;
    std::vector<double> rhs = p.b;
    rows.push_back({1, 0});
    rhs.push_back(p.hi[0]);
    rows.push_back({-1, 0});
    rhs.push_back(-p.lo[0]);
    rows.push_back({0, 1});
    rhs.push_back(p.hi[1]);
    rows.push_back({0, -1});
    rhs.push_back(-p.lo[1]);
    double best = -1e300;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (std::abs(det) < 1e-12) continue;
            double x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
            double y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
            bool ok = true;
            for (size_t k = 0; k < rows.size(); ++k)
                if (rows[k][0] * x + rows[k][1] * y > rhs[k] + 1e-8) ok = false;
            if (ok) best = std::max(best, p.c[0] * x + p.c[1] * y);
        }
    }
    return best;
}

} // namespace

TEST_CASE("one-dimensional interval program") {
    LpProblem p(1);
    p.set_bounds(0, -10, 10);
    p.add_constraint({2.0}, 6.0);  // x <= 3
    p.add_constraint({-1.0}, 1.0); // x >= -1
    p.c = {1.0};
    auto r = solve_lp(p);
    REQUIRE(r.feasible);
    CHECK(r.x[0] == doctest::Approx(3.0));
    p.c = {-1.0};
    r = solve_lp(p);
    CHECK(r.x[0] == doctest::Approx(-1.0));
}

TEST_CASE("largest ball in the unit simplex (Chebyshev-style)") {
    // maximize r s.t. -x + r <= 0, -y + r <= 0, (x + y)/sqrt(2) + r <= 1/sqrt(2)
    LpProblem p(3);
    p.set_bounds(0, -10, 10);
    p.set_bounds(1, -10, 10);
    p.set_bounds(2, 0, 10);
    double s = 1.0 / std::sqrt(2.0);
    p.add_constraint({-1, 0, 1}, 0.0);
    p.add_constraint({0, -1, 1}, 0.0);
    p.add_constraint({s, s, 1}, s);
    p.c = {0, 0, 1};
    auto r = solve_lp(p);
    REQUIRE(r.feasible);
    double expect = 1.0 / (2.0 + std::sqrt(2.0));
    CHECK(r.x[2] == doctest::Approx(expect).epsilon(1e-9));
    CHECK(r.x[0] == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("infeasible programs are reported") {
    LpProblem p(2);
    p.set_bounds(0, -5, 5);
    p.set_bounds(1, -5, 5);
    p.add_constraint({1, 0}, -1.0);
    p.add_constraint({-1, 0}, -1.0); // x <= -1 and x >= 1
    p.c = {1, 0};
    CHECK_FALSE(solve_lp(p).feasible);
}

TEST_CASE("random 2-D programs match the vertex-enumeration oracle") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        LpProblem p(2);
        p.set_bounds(0, -4, 4);
        p.set_bounds(1, -4, 4);
        int m = 3 + rng.uniform_int(8);
        for (int i = 0; i < m; ++i) {
            Point2 n = rng.direction();
            p.add_constraint({n.x1, n.x2}, rng.uniform(0.2, 2.0));
        }
        Point2 c = rng.direction();
        p.c = {c.x1, c.x2};
        auto r = solve_lp(p, 1000 + t);
        REQUIRE(r.feasible); // origin is always feasible here
        double brute = lp2_brute(p);
        CHECK(r.value == doctest::Approx(brute).epsilon(1e-7));
        for (int i = 0; i < m; ++i)
            CHECK(p.A[i][0] * r.x[0] + p.A[i][1] * r.x[1] <= p.b[i] + 1e-8);
    }
}

TEST_CASE("five-variable epigraph program") {
    // minimize s1 + s2 with x free: s_k >= |x - a_k| in the max norm, a = 0, 4.
    // Optimal: any x in [0,4] with s1 + s2 = 4.
    LpProblem p(4); // x, y, s1, s2
    for (int j = 0; j < 4; ++j) p.set_bounds(j, -20, 20);
    p.add_constraint({1, 0, -1, 0}, 0.0);
    p.add_constraint({-1, 0, -1, 0}, 0.0);
    p.add_constraint({0, 1, -1, 0}, 0.0);
    p.add_constraint({0, -1, -1, 0}, 0.0);
    p.add_constraint({1, 0, 0, -1}, 4.0);
    p.add_constraint({-1, 0, 0, -1}, -4.0);
    p.add_constraint({0, 1, 0, -1}, 0.0);
    p.add_constraint({0, -1, 0, -1}, 0.0);
    p.c = {0, 0, -1, -1};
    auto r = solve_lp(p);
    REQUIRE(r.feasible);
    CHECK(-r.value == doctest::Approx(4.0).epsilon(1e-9));
}
