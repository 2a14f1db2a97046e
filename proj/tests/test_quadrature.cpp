#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "eddy/closed_form.hpp"
#include "eddy/errors.hpp"
#include "eddy/quadrature.hpp"
#include "support/oracles.hpp"

using namespace eddy;
using oracle::rel_err;

namespace {
constexpr double kR1 = 0.03, kR2 = 0.04;
}

TEST_CASE("norms with analytic antiderivatives") {
    RadialFunction one = [](double) { return Complex(1.0, 0.0); };
    CHECK(rel_err(l21_norm(one, kR1, kR2), std::sqrt((kR2 * kR2 - kR1 * kR1) / 2.0)) < 1e-12);
    CHECK(rel_err(l21_norm(one, kR1, kR2), 0.018708286933869708) < 1e-12);

    RadialFunction inv = [](double r) { return Complex(1.0 / r, 0.0); };
    CHECK(rel_err(l21_norm(inv, kR1, kR2), std::sqrt(std::log(kR2 / kR1))) < 1e-12);
    CHECK(rel_err(l21_norm(inv, kR1, kR2), 0.5363600213026516) < 1e-12);

    RadialFunction lin = [](double r) { return Complex(r, 0.0); };
    const double want = std::sqrt((std::pow(kR2, 4) - std::pow(kR1, 4)) / 4.0);
    CHECK(rel_err(l21_norm(lin, kR1, kR2), want) < 1e-12);
}

TEST_CASE("polynomial exactness up to degree 2n-1") {
    for (int m = 0; m <= 15; ++m) {
        auto mono = [m](double r) { return std::pow(r, m); };
        const double exact =
            (std::pow(kR2, m + 1) - std::pow(kR1, m + 1)) / (m + 1);
        CHECK(rel_err(integrate(mono, kR1, kR2), exact) < 1e-13);
    }
    // a 2-point rule on one panel must fail beyond degree 3
    auto quartic = [](double r) { return r * r * r * r; };
    const double coarse = integrate(quartic, 0.0, 1.0, {2, 1});
    CHECK(std::abs(coarse - 0.2) > 1e-3);
}

TEST_CASE("norm axioms on random trigonometric samples") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double a = coef(rng), b = coef(rng), c = coef(rng), e = coef(rng);
        RadialFunction f = [=](double r) {
            return Complex(a * std::sin(200.0 * r) + b, c * std::cos(150.0 * r));
        };
        RadialFunction g = [=](double r) {
            return Complex(c * r + e, a * std::sin(90.0 * r));
        };
        RadialFunction sum = [&](double r) { return f(r) + g(r); };
        RadialFunction scaled = [&](double r) { return 2.5 * f(r); };

        const double nf = l21_norm(f, kR1, kR2);
        const double ng = l21_norm(g, kR1, kR2);
        CHECK(l21_norm(sum, kR1, kR2) <= nf + ng + 1e-12);
        CHECK(rel_err(l21_norm(scaled, kR1, kR2), 2.5 * nf) < 1e-12);
    }
}

TEST_CASE("panel refinement changes converged norms below 1e-10") {
    const PhysicalParams params{};
    const CylinderGeometry geom{};
    const auto d = derive_quantities(params);
    const auto c = solve_global(params, geom);
    RadialFunction ref = [&](double r) { return eval_global(c, d, geom, r); };

    const double n64 = l21_norm(ref, kR1, kR2, {8, 64});
    const double n128 = l21_norm(ref, kR1, kR2, {8, 128});
    CHECK(rel_err(n64, n128) < 1e-10);
}

TEST_CASE("serial and OpenMP paths agree bit for bit") {
    RadialFunction f = [](double r) {
        return Complex(std::sin(300.0 * r) / r, std::cos(40.0 * r));
    };
    for (int panels : {7, 64, 501}) {
        const QuadratureRule rule{8, panels};
        CHECK(l21_norm(f, kR1, kR2, rule, Execution::Serial) ==
              l21_norm(f, kR1, kR2, rule, Execution::Parallel));
    }
}

TEST_CASE("relative error identities") {
    RadialFunction ref = [](double r) { return Complex(1.0 / r, r); };
    RadialFunction twice = [&](double r) { return 2.0 * ref(r); };
    CHECK(relative_l21_error(ref, ref, kR1, kR2) == 0.0);
    CHECK(relative_l21_error(ref, twice, kR1, kR2) == 1.0);
}

TEST_CASE("order-1 model error at the default parameters") {
    const PhysicalParams params{};
    const CylinderGeometry geom{};
    const auto d = derive_quantities(params);
    const auto c = solve_global(params, geom);
    RadialFunction ref = [&](double r) { return eval_global(c, d, geom, r); };
    RadialFunction order1 = [&](double r) { return Complex(geom.k / r, 0.0); };
    CHECK(rel_err(relative_l21_error(ref, order1, kR1, kR2), 1.4545718217329856e-3) < 1e-10);
}

TEST_CASE("error paths") {
    RadialFunction ref = [](double r) { return Complex(r, 0.0); };
    RadialFunction zero = [](double) { return Complex(0.0, 0.0); };
    CHECK_THROWS_AS(relative_l21_error(zero, ref, kR1, kR2), DomainError);

    RadialFunction bad = [](double r) {
        return r > 0.035 ? Complex(std::nan(""), 0.0) : Complex(1.0, 0.0);
    };
    CHECK_THROWS_AS(l21_norm(bad, kR1, kR2), NumericalError);
    CHECK_THROWS_AS(l21_norm(bad, kR1, kR2, {}, Execution::Serial), NumericalError);

    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {3, 10}), DomainError);
}
