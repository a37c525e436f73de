// SPDX-License-Identifier: Apache-2.0
//
// rsma-uplink: outage and fairness evaluation for two-user uplink RSMA
// Copyright (C) 2026 rsma-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "rsma/numerics.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace rsma;
using Catch::Approx;

TEST_CASE("chebyshev nodes and weights")
{
    const auto t = chebyshev_nodes(10);
    REQUIRE(t.order == 10);
    REQUIRE(t.nodes.size() == 10);
    CHECK(t.nodes[0] == Approx(std::cos(std::numbers::pi / 20)).epsilon(1e-15));
    CHECK(t.nodes[9] == Approx(-std::cos(std::numbers::pi / 20)).epsilon(1e-15));
    for (std::size_t l = 0; l < 10; ++l)
    {
        CHECK(t.nodes[l] == Approx(-t.nodes[9 - l]).margin(1e-15));
        CHECK(t.weights[l] == Approx(std::numbers::pi / 10 * std::sqrt(1 - t.nodes[l] * t.nodes[l])).epsilon(1e-14));
    }
    CHECK_THROWS_AS(chebyshev_nodes(0), std::invalid_argument);
}

TEST_CASE("gauss-chebyshev rule on a constant equals its closed form")
{
    // sum (pi/n) sin((2l-1)pi/(2n)) = (pi/n) / sin(pi/(2n))
    for (std::size_t n : {5u, 10u, 20u, 40u})
    {
        const double expected = std::numbers::pi / (2.0 * n * std::sin(std::numbers::pi / (2.0 * n)));
        CHECK(gc_integrate([](double) { return 1.0; }, 0.0, 1.0, n) == Approx(expected).epsilon(1e-13));
        CHECK(gc_integrate([](double) { return 1.0; }, 0.0, 2.0, n) == Approx(2 * expected).epsilon(1e-13));
    }
}

TEST_CASE("gauss-chebyshev error decays as n^-2")
{
    const auto f = [](double x) { return std::exp(-x); };
    const double exact = 1.0 - std::exp(-1.0);
    double prev = 0.0;
    for (std::size_t n : {10u, 20u, 40u, 80u})
    {
        const double err = std::abs(gc_integrate(f, 0.0, 1.0, n) - exact);
        CHECK(err <= 1.0 / double(n * n));
        if (prev > 0.0)
            CHECK(prev / err == Approx(4.0).epsilon(0.05));
        prev = err;
    }
}

TEST_CASE("gauss-chebyshev interval handling")
{
    CHECK(gc_integrate([](double x) { return x; }, 1.0, 1.0, 10) == 0.0);
    CHECK_THROWS_AS(gc_integrate([](double x) { return x; }, 1.0, 0.0, 10), std::logic_error);
    // odd integrand on a symmetric interval
    CHECK(gc_integrate([](double x) { return x * x * x; }, -2.0, 2.0, 10) == Approx(0.0).margin(1e-14));
}

TEST_CASE("nu is the integral of exp(delta x)")
{
    CHECK(nu(1.0, 0.0, 1.0) == Approx(std::numbers::e - 1.0).epsilon(1e-15));
    CHECK(nu(0.0, 2.0, 5.0) == 3.0);
    CHECK(nu(-2.0, 0.0, 1.0) == Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-15));
    // continuous through delta = 0
    CHECK(nu(1e-13, 2.0, 5.0) == Approx(3.0).epsilon(1e-11));
    CHECK(nu(1e-9, 2.0, 5.0) == Approx(3.0).epsilon(1e-8));
    CHECK(nu(-1e-9, 2.0, 5.0) == Approx(3.0).epsilon(1e-8));
}

namespace
{
ExponentialSeries random_series(std::mt19937_64 &g, std::size_t n)
{
    std::uniform_real_distribution<double> c(-1.0, 1.0), e(0.0, 3.0);
    std::vector<double> cs, es;
    for (std::size_t k = 0; k < n; ++k)
    {
        cs.push_back(c(g));
        es.push_back(e(g));
    }
    return {cs, es};
}

double direct(const ExponentialSeries &s, double x)
{
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k)
        acc -= s.coefficients()[k] * std::exp(-s.exponents()[k] * x);
    return acc;
}
} // namespace

TEST_CASE("exponential series algebra")
{
    std::mt19937_64 g(7);
    const auto a = random_series(g, 4), b = random_series(g, 3);
    for (double x : {0.0, 0.3, 1.7})
    {
        CHECK(a.evaluate(x) == Approx(direct(a, x)).epsilon(1e-14));
        CHECK((a * b).evaluate(x) == Approx(a.evaluate(x) * b.evaluate(x)).epsilon(1e-12));
        CHECK((a + b).evaluate(x) == Approx(a.evaluate(x) + b.evaluate(x)).epsilon(1e-12));
        CHECK((a - b).evaluate(x) == Approx(a.evaluate(x) - b.evaluate(x)).epsilon(1e-12));
        CHECK(a.affine(-0.5, 2.0).evaluate(x) == Approx(a.evaluate(-0.5 * x + 2.0)).epsilon(1e-12));
        CHECK(a.scaled(3.0).evaluate(x) == Approx(3.0 * a.evaluate(x)).epsilon(1e-14));
        CHECK(a.merged().evaluate(x) == Approx(a.evaluate(x)).epsilon(1e-14));
        const double h = 1e-6;
        CHECK(a.derivative().evaluate(x) ==
              Approx((a.evaluate(x + h) - a.evaluate(x - h)) / (2 * h)).epsilon(1e-6));
    }
    CHECK(ExponentialSeries::constant(2.5).evaluate(4.0) == 2.5);
    CHECK(a.integrate(0.2, 1.1) ==
          Approx(gc_integrate([&](double x) { return a.evaluate(x); }, 0.2, 1.1, 2000)).epsilon(1e-6));
}

TEST_CASE("merged combines equal exponents")
{
    const ExponentialSeries s({1.0, 2.0, -3.0}, {0.5, 0.5, 0.5});
    const auto m = s.merged();
    CHECK(m.size() == 0);
    const ExponentialSeries t({1.0, 2.0}, {0.5, 0.5});
    REQUIRE(t.merged().size() == 1);
    CHECK(t.merged().coefficients()[0] == 3.0);
}

TEST_CASE("multinomial power equals repeated products")
{
    std::mt19937_64 g(11);
    const auto a = random_series(g, 4);
    ExponentialSeries rep = ExponentialSeries::constant(1.0);
    for (unsigned M = 0; M <= 4; ++M)
    {
        const auto p = multinomial_power(a, M);
        for (double x : {0.0, 0.4, 2.0})
            CHECK(p.evaluate(x) == Approx(rep.evaluate(x)).epsilon(1e-11).margin(1e-13));
        rep = rep * a;
    }
}
