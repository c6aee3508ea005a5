#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace gauge_radii::lp {

inline constexpr int kMaxDimension = 4;

using Vector = std::array<double, kMaxDimension>;

/// a . z <= bound
struct Constraint {
    Vector row{};
    double bound = 0.0;
};

/// minimize objective . z subject to every constraint, z in R^dimension.
struct Problem {
    int dimension = 0;
    Vector objective{};
    std::vector<Constraint> constraints;
};

enum class Status { Optimal, Unbounded, Infeasible };

struct Solution {
    Status status = Status::Infeasible;
    Vector z{};
    double value = 0.0;
    /// Indices of constraints with a . z >= b - eps (scaled), ascending.
    std::vector<std::size_t> tight;
};

/// Randomized incremental (Seidel) solver for tiny dimensions.
///
/// Among optimal points the lexicographically smallest z is returned, so the
/// result is a deterministic function of the input. Rows are normalized
/// internally, which makes the solution invariant under positive row
/// scaling. Infeasible and unbounded programs are reported in the status.
Solution solve(const Problem& problem, double eps = 1e-9);

const char* to_string(Status status);

}  // namespace gauge_radii::lp
