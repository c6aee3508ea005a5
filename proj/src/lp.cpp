#include "gauge_radii/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gauge_radii/error.hpp"

namespace gauge_radii::lp {

namespace {

// Coefficients below this (relative to unit-normalized rows) are treated as 0.
constexpr double kTiny = 1e-13;
constexpr std::uint64_t kShuffleSeed = 0x5eed'1a7e'0c0f'fee5ULL;

struct Row {
    Vector a{};
    double b = 0.0;
};

double dot(const Vector& a, const Vector& b, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
}

// Scales a row to unit Euclidean norm. Returns false for a vanishing row.
bool normalize(Row& r, int d) {
    double n = 0.0;
    for (int i = 0; i < d; ++i) n += r.a[i] * r.a[i];
    n = std::sqrt(n);
    if (n < kTiny) return false;
    for (int i = 0; i < d; ++i) r.a[i] /= n;
    r.b /= n;
    return true;
}

// Lexicographic direction of coordinate i: +1 means "push down" (minimize).
int lex_sign(const std::vector<Vector>& objectives, int i) {
    for (const auto& o : objectives) {
        if (o[i] > kTiny) return 1;
        if (o[i] < -kTiny) return -1;
    }
    return 1;
}

class Solver {
public:
    Solver(double box, double eps) : box_(box), eps_(eps) {}

    // Rows must be unit-normalized. Returns false when infeasible.
    bool run(int d, const std::vector<Row>& rows, const std::vector<Vector>& objectives, Vector& z) {
        for (int i = 0; i < d; ++i) z[i] = lex_sign(objectives, i) > 0 ? -box_ : box_;
        if (d == 1) return solve_line(rows, objectives, z);

        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Row& h = rows[k];
            if (dot(h.a, z, d) <= h.b + violation_tol(h.b)) continue;

            int j = 0;
            for (int i = 1; i < d; ++i)
                if (std::abs(h.a[i]) > std::abs(h.a[j])) j = i;
            const double pivot = h.a[j];
            // z_j = beta - gamma . z'
            const double beta = h.b / pivot;
            Vector gamma{};
            for (int i = 0, t = 0; i < d; ++i)
                if (i != j) gamma[t++] = h.a[i] / pivot;
            const int sub_d = d - 1;

            std::vector<Row> sub;
            sub.reserve(k + 2);
            Row upper;
            Row lower;
            for (int t = 0; t < sub_d; ++t) {
                upper.a[t] = -gamma[t];
                lower.a[t] = gamma[t];
            }
            upper.b = box_ - beta;
            lower.b = box_ + beta;
            for (Row* r : {&upper, &lower}) {
                if (normalize(*r, sub_d)) sub.push_back(*r);
                else if (r->b < -violation_tol(r->b)) return false;
            }
            for (std::size_t q = 0; q < k; ++q) {
                const Row& src = rows[q];
                Row r;
                for (int i = 0, t = 0; i < d; ++i)
                    if (i != j) {
                        r.a[t] = src.a[i] - src.a[j] * gamma[t];
                        ++t;
                    }
                r.b = src.b - src.a[j] * beta;
                if (normalize(r, sub_d)) sub.push_back(r);
                else if (r.b < -violation_tol(r.b)) return false;
            }

            std::vector<Vector> sub_obj;
            sub_obj.reserve(objectives.size());
            for (const auto& o : objectives) {
                Vector p{};
                for (int i = 0, t = 0; i < d; ++i)
                    if (i != j) {
                        p[t] = o[i] - o[j] * gamma[t];
                        ++t;
                    }
                sub_obj.push_back(p);
            }

            Vector sub_z{};
            if (!run(sub_d, sub, sub_obj, sub_z)) return false;
            double zj = beta;
            for (int t = 0; t < sub_d; ++t) zj -= gamma[t] * sub_z[t];
            for (int i = 0, t = 0; i < d; ++i) z[i] = i == j ? zj : sub_z[t++];
        }
        return true;
    }

private:
    double violation_tol(double b) const { return 1e-12 * (1.0 + std::abs(b)); }

    bool solve_line(const std::vector<Row>& rows, const std::vector<Vector>& objectives, Vector& z) {
        double lo = -box_;
        double hi = box_;
        for (const auto& r : rows) {
            const double a = r.a[0];
            if (a > kTiny) hi = std::min(hi, r.b / a);
            else if (a < -kTiny) lo = std::max(lo, r.b / a);
            else if (r.b < -violation_tol(r.b)) return false;
        }
        if (lo > hi) {
            if (lo - hi > eps_ * (1.0 + std::max(std::abs(lo), std::abs(hi)))) return false;
            lo = hi = 0.5 * (lo + hi);
        }
        z[0] = lex_sign(objectives, 0) > 0 ? lo : hi;
        return true;
    }

    double box_;
    double eps_;
};

struct Attempt {
    bool feasible = false;
    Vector z{};
};

Attempt attempt(const Problem& p, const std::vector<Row>& rows, const Vector& primary, double box,
                double eps) {
    std::vector<Vector> objectives;
    objectives.push_back(primary);
    for (int i = 0; i < p.dimension; ++i) {
        Vector e{};
        e[i] = 1.0;
        objectives.push_back(e);
    }
    Attempt a;
    Solver solver(box, eps);
    a.feasible = solver.run(p.dimension, rows, objectives, a.z);
    return a;
}

}  // namespace

const char* to_string(Status status) {
    switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Unbounded: return "unbounded";
    case Status::Infeasible: return "infeasible";
    }
    return "unknown";
}

Solution solve(const Problem& problem, double eps) {
    const int d = problem.dimension;
    if (d < 1 || d > kMaxDimension)
        throw Error(ErrorCode::InvalidArgument, "LP dimension must be in [1, 4]");
    if (problem.constraints.empty())
        throw Error(ErrorCode::InvalidArgument, "LP needs at least one constraint");

    Solution sol;
    std::vector<Row> rows;
    rows.reserve(problem.constraints.size());
    double scale = 1.0;
    for (const auto& c : problem.constraints) {
        Row r;
        for (int i = 0; i < d; ++i) {
            if (!std::isfinite(c.row[i]))
                throw Error(ErrorCode::InvalidArgument, "non-finite LP coefficient");
            r.a[i] = c.row[i];
        }
        if (!std::isfinite(c.bound)) throw Error(ErrorCode::InvalidArgument, "non-finite LP bound");
        r.b = c.bound;
        if (!normalize(r, d)) {
            if (c.bound < 0) {
                sol.status = Status::Infeasible;
                sol.value = std::numeric_limits<double>::infinity();
                return sol;
            }
            continue;
        }
        scale = std::max(scale, std::abs(r.b));
        rows.push_back(r);
    }

    Vector primary{};
    double cmax = 0.0;
    for (int i = 0; i < d; ++i) {
        if (!std::isfinite(problem.objective[i]))
            throw Error(ErrorCode::InvalidArgument, "non-finite LP objective");
        cmax = std::max(cmax, std::abs(problem.objective[i]));
    }
    for (int i = 0; i < d; ++i) primary[i] = cmax > 0 ? problem.objective[i] / cmax : 0.0;

    std::mt19937_64 rng(kShuffleSeed);
    std::shuffle(rows.begin(), rows.end(), rng);

    const double box = 1e6 * scale;
    const Attempt first = attempt(problem, rows, primary, box, eps);
    if (!first.feasible) {
        sol.status = Status::Infeasible;
        sol.value = std::numeric_limits<double>::infinity();
        return sol;
    }

    const auto objective_at = [&](const Vector& z) { return dot(problem.objective, z, d); };
    bool on_box = false;
    for (int i = 0; i < d; ++i) on_box = on_box || std::abs(first.z[i]) >= box * (1 - 1e-9);
    if (on_box && cmax > 0) {
        const Attempt wider = attempt(problem, rows, primary, 10 * box, eps);
        const double v1 = objective_at(first.z);
        const double v2 = objective_at(wider.z);
        if (wider.feasible && v2 < v1 - 1e-6 * (1.0 + std::abs(v1))) {
            sol.status = Status::Unbounded;
            sol.z = wider.z;
            sol.value = -std::numeric_limits<double>::infinity();
            return sol;
        }
    }

    sol.status = Status::Optimal;
    sol.z = first.z;
    sol.value = objective_at(first.z);
    double znorm = 0.0;
    for (int i = 0; i < d; ++i) znorm = std::max(znorm, std::abs(sol.z[i]));
    for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
        const auto& c = problem.constraints[k];
        double anorm = 0.0;
        for (int i = 0; i < d; ++i) anorm = std::max(anorm, std::abs(c.row[i]));
        const double lhs = dot(c.row, sol.z, d);
        const double tol = eps * std::max({1.0, std::abs(c.bound), anorm * znorm});
        if (anorm > 0 && lhs >= c.bound - tol) sol.tight.push_back(k);
    }
    return sol;
}

}  // namespace gauge_radii::lp
