#include "mink/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mink/geometry.hpp"
#include "mink/rng.hpp"

namespace mink {

namespace {

struct Row {
    std::vector<double> a;
    double b;
};

constexpr double kZero = 1e-13;

// Feasibility slack scale for a row at point x.
double row_tol(const Row& r, const std::vector<double>& x) {
    double s = std::abs(r.b);
    for (size_t j = 0; j < r.a.size(); ++j) s = std::max(s, std::abs(r.a[j] * x[j]));
    return 1e-11 * (1.0 + s);
}

// Recursive Seidel step: maximize c.x over rows + box, dimension d.
bool seidel(int d, std::vector<Row>& rows, const std::vector<double>& c,
            const std::vector<double>& lo, const std::vector<double>& hi, Rng& rng,
            std::vector<double>& out) {
    if (d == 1) {
        double l = lo[0], h = hi[0];
        for (const Row& r : rows) {
            double a = r.a[0];
            if (std::abs(a) <= kZero) {
                if (r.b < -row_tol(r, {0.0})) return false;
                continue;
            }
            if (a > 0)
                h = std::min(h, r.b / a);
            else
                l = std::max(l, r.b / a);
        }
        if (l > h + 1e-9 * (1.0 + std::abs(l) + std::abs(h))) return false;
        if (l > h) l = h = 0.5 * (l + h);
        out.assign(1, c[0] >= 0 ? h : l);
        return true;
    }

    // Start from the box optimum, insert constraints in random order.
    std::vector<double> x(d);
    for (int j = 0; j < d; ++j) x[j] = c[j] >= 0 ? hi[j] : lo[j];

    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(i + 1)]);

    for (size_t oi = 0; oi < order.size(); ++oi) {
        const Row& r = rows[order[oi]];
        double lhs = 0.0;
        for (int j = 0; j < d; ++j) lhs += r.a[j] * x[j];
        if (lhs <= r.b + row_tol(r, x)) continue;

        // Optimum lies on this hyperplane; eliminate the best-conditioned
        // variable and recurse on the previously inserted rows.
        int k = 0;
        for (int j = 1; j < d; ++j)
            if (std::abs(r.a[j]) > std::abs(r.a[k])) k = j;
        if (std::abs(r.a[k]) <= kZero) return false; // inconsistent degenerate row

        const double ak = r.a[k];
        auto project_row = [&](const std::vector<double>& a, double b) {
            Row pr;
            pr.a.reserve(d - 1);
            double f = a[k] / ak;
            for (int j = 0; j < d; ++j)
                if (j != k) pr.a.push_back(a[j] - f * r.a[j]);
            pr.b = b - f * r.b;
            return pr;
        };

        std::vector<Row> sub;
        sub.reserve(oi + 2);
        for (size_t t = 0; t < oi; ++t) sub.push_back(project_row(rows[order[t]].a, rows[order[t]].b));
        {
            // Box bounds of the eliminated variable become general rows:
            // x_k = (b - sum_{j != k} a_j x_j) / a_k, so x_k <= hi[k] reads
            // -sum a_j x_j <= a_k hi[k] - b when a_k > 0, and flips otherwise.
            Row up, down; // from x_k <= hi[k] and x_k >= lo[k]
            up.a.assign(d - 1, 0.0);
            down.a.assign(d - 1, 0.0);
            int t = 0;
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                up.a[t] = ak > 0 ? -r.a[j] : r.a[j];
                down.a[t] = ak > 0 ? r.a[j] : -r.a[j];
                ++t;
            }
            up.b = ak > 0 ? ak * hi[k] - r.b : r.b - ak * hi[k];
            down.b = ak > 0 ? r.b - ak * lo[k] : ak * lo[k] - r.b;
            sub.push_back(up);
            sub.push_back(down);
        }

        std::vector<double> subc, sublo, subhi;
        double fk = c[k] / ak;
        for (int j = 0; j < d; ++j) {
            if (j == k) continue;
            subc.push_back(c[j] - fk * r.a[j]);
            sublo.push_back(lo[j]);
            subhi.push_back(hi[j]);
        }

        std::vector<double> suby;
        if (!seidel(d - 1, sub, subc, sublo, subhi, rng, suby)) return false;

        double xk = r.b;
        int t = 0;
        for (int j = 0; j < d; ++j) {
            if (j == k) continue;
            xk -= r.a[j] * suby[t];
            x[j] = suby[t];
            ++t;
        }
        x[k] = xk / ak;
    }
    out = x;
    return true;
}

} // namespace

LpResult solve_lp(const LpProblem& p, std::uint64_t seed) {
    require(p.dim >= 1, "lp dimension must be positive");
    for (const auto& row : p.A)
        require(static_cast<int>(row.size()) == p.dim, "lp row has wrong arity");
    std::vector<Row> rows(p.A.size());
    for (size_t i = 0; i < p.A.size(); ++i) {
        rows[i].a = p.A[i];
        rows[i].b = p.b[i];
        // Normalize to unit max coefficient; keeps tolerances meaningful.
        double m = 0.0;
        for (double v : rows[i].a) m = std::max(m, std::abs(v));
        if (m > kZero) {
            for (double& v : rows[i].a) v /= m;
            rows[i].b /= m;
        }
    }
    Rng rng(seed);
    LpResult res;
    res.feasible = seidel(p.dim, rows, p.c, p.lo, p.hi, rng, res.x);
    if (res.feasible) {
        res.value = 0.0;
        for (int j = 0; j < p.dim; ++j) res.value += p.c[j] * res.x[j];
    }
    return res;
}

} // namespace mink
