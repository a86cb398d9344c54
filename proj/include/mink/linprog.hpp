#pragma once

#include <cstdint>
#include <vector>

namespace mink {

// Small dense linear program
//
//     maximize c.x  subject to  A x <= b,  lo <= x <= hi,
//
// solved by Seidel's randomized incremental algorithm. Intended for the
// geometric programs in this library: a handful of variables (<= 6), up to a
// few thousand constraints. The box bounds are mandatory, which keeps every
// subproblem bounded; pick them generously from the geometry at hand.
struct LpProblem {
    int dim = 0;
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<double> lo, hi;

    explicit LpProblem(int d)
        : dim(d), c(d, 0.0), lo(d, -1e18), hi(d, 1e18) {}

    void add_constraint(std::vector<double> row, double rhs) {
        A.push_back(std::move(row));
        b.push_back(rhs);
    }
    void set_bounds(int j, double l, double h) {
        lo[j] = l;
        hi[j] = h;
    }
};

struct LpResult {
    bool feasible = false;
    std::vector<double> x;
    double value = 0.0; // c.x at the optimum
};

LpResult solve_lp(const LpProblem& p, std::uint64_t seed = 0x5eed);

} // namespace mink
