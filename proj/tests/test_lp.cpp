#include <doctest.h>

#include <random>

#include "gauge_radii/lp.hpp"
#include "oracle.hpp"

using namespace gauge_radii::lp;

namespace {

Problem random_problem(std::mt19937_64& g, int rows) {
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Problem p;
    p.dimension = 3;
    p.objective = {n(g), n(g), n(g), 0};
    const Vector z0{n(g), n(g), n(g), 0};
    for (int i = 0; i < rows; ++i) {
        Vector a{n(g), n(g), n(g), 0};
        p.constraints.push_back({a, a[0] * z0[0] + a[1] * z0[1] + a[2] * z0[2] + u(g)});
    }
    for (int i = 0; i < 3; ++i) {
        Vector e{};
        e[i] = 1;
        p.constraints.push_back({e, 10});
        e[i] = -1;
        p.constraints.push_back({e, 10});
    }
    return p;
}

double brute_force(const Problem& p) {
    std::vector<oracle::Row> rows;
    for (const auto& c : p.constraints) rows.push_back({{c.row[0], c.row[1], c.row[2]}, c.bound});
    return oracle::brute_force_min({p.objective[0], p.objective[1], p.objective[2]}, rows);
}

bool feasible(const Problem& p, const Vector& z, double eps) {
    for (const auto& c : p.constraints) {
        double lhs = 0;
        for (int i = 0; i < p.dimension; ++i) lhs += c.row[i] * z[i];
        if (lhs > c.bound + eps) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("single bound") {
    Problem p;
    p.dimension = 1;
    p.objective = {1};
    p.constraints = {{{-1}, -3}};
    const auto s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.z[0] == doctest::Approx(3));
    CHECK(s.tight == std::vector<std::size_t>{0});
}

TEST_CASE("nonnegative quadrant") {
    Problem p;
    p.dimension = 2;
    p.objective = {1, 1};
    p.constraints = {{{-1, 0}, 0}, {{0, -1}, 0}};
    const auto s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == doctest::Approx(0));
    CHECK(std::abs(s.z[0]) < 1e-12);
    CHECK(std::abs(s.z[1]) < 1e-12);
    CHECK(s.tight.size() == 2);
}

TEST_CASE("infeasible and unbounded are reported in the status") {
    Problem p;
    p.dimension = 2;
    p.objective = {1, 0};
    p.constraints = {{{1, 0}, -1}, {{-1, 0}, -1}};
    CHECK(solve(p).status == Status::Infeasible);
    p.constraints = {{{0, 1}, 1}};
    CHECK(solve(p).status == Status::Unbounded);
}

TEST_CASE("ties resolve to the lexicographically smallest optimum") {
    Problem p;
    p.dimension = 2;
    p.objective = {0, 1};  // minimize y over the square [0,1]^2: whole bottom edge optimal
    p.constraints = {{{-1, 0}, 0}, {{1, 0}, 1}, {{0, -1}, 0}, {{0, 1}, 1}};
    const auto s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(std::abs(s.z[0]) < 1e-12);
}

TEST_CASE("random LPs agree with basic-solution enumeration") {
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_problem(g, 4 + trial % 20);
        const auto s = solve(p);
        REQUIRE(s.status == Status::Optimal);
        CHECK(s.value == doctest::Approx(brute_force(p)).epsilon(1e-8));
        CHECK(feasible(p, s.z, 1e-9));
        CHECK_FALSE(s.tight.empty());
    }
}

TEST_CASE("no random feasible perturbation improves the optimum") {
    std::mt19937_64 g(77);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = random_problem(g, 15);
        const auto s = solve(p);
        REQUIRE(s.status == Status::Optimal);
        int checked = 0;
        for (int i = 0; i < 2000; ++i) {
            const double r = std::pow(10.0, -6 + 6 * (i % 7) / 6.0);
            Vector z = s.z;
            for (int k = 0; k < 3; ++k) z[k] += r * n(g);
            if (!feasible(p, z, 0)) continue;
            ++checked;
            const double v = p.objective[0] * z[0] + p.objective[1] * z[1] + p.objective[2] * z[2];
            CHECK(v >= s.value - 1e-9);
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("determinism and row scaling") {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_problem(g, 30);
        const auto a = solve(p);
        const auto b = solve(p);
        CHECK(a.z == b.z);
        CHECK(a.tight == b.tight);
        for (auto& c : p.constraints) {
            for (auto& x : c.row) x *= 1e3;
            c.bound *= 1e3;
        }
        const auto scaled = solve(p);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(scaled.z[k] - a.z[k]) <= 1e-7);
    }
}
