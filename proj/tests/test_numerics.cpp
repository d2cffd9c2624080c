#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "stefanlab/numerics.hpp"

using namespace stefanlab;
using std::numbers::pi;

TEST_CASE("tridiagonal solve reproduces a known solution") {
    // A = [[2,-1,0],[-1,2,-1],[0,-1,2]], x = [1,2,3] -> b = [0,0,4]
    std::vector<double> lower = {0.0, -1.0, -1.0};
    std::vector<double> diag = {2.0, 2.0, 2.0};
    std::vector<double> upper = {-1.0, -1.0, 0.0};
    std::vector<double> rhs = {0.0, 0.0, 4.0};
    num::solve_tridiagonal(lower, diag, upper, rhs);
    CHECK(rhs[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rhs[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rhs[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature on smooth integrands") {
    const double a = num::integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(std::abs(a - 1.0 / 3.0) < 1e-12);
    const double b = num::integrate([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(std::abs(b - 2.0) < 1e-10);
    const double c =
        num::integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(std::abs(c - std::sqrt(pi)) < 1e-9);
}

TEST_CASE("bisection finds a bracketed root") {
    const double r =
        num::bisect([](double x) { return std::cos(x); }, 0.0, 2.0, 1e-13);
    CHECK(std::abs(r - pi / 2.0) < 1e-12);
}

TEST_CASE("trapezoid is exact on linear data") {
    std::vector<double> v = {0.0, 0.5, 1.0, 1.5, 2.0};
    CHECK(num::trapezoid(v, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("slope fit recovers an exact line") {
    std::vector<double> x = {0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> y;
    for (double xi : x) y.push_back(3.5 * xi - 2.0);
    CHECK(num::slope_fit(x, y) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("embedded step integrates the harmonic oscillator around a period") {
    auto f = [](const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -y[0]};
    };
    std::array<double, 2> y = {1.0, 0.0};
    double z = 0.0, dz = 0.1;
    while (z < 2.0 * pi) {
        dz = std::min(dz, 2.0 * pi - z);
        if (dz < 1e-15) break;
        num::rk45_step(f, y, z, dz);
    }
    CHECK(std::abs(y[0] - 1.0) < 1e-9);
    CHECK(std::abs(y[1]) < 1e-9);
}
