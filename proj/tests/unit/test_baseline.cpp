#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "inar/cls_baseline.hpp"
#include "inar/objective.hpp"

using namespace inar;
using doctest::Approx;

TEST_CASE("known-mean slope by hand") {
    CHECK(cls_alpha(Series{1, 2, 1, 3}, 1.0) == Approx(0.5));
    for (double mu : {0.0, 1.0, 2.5}) CHECK(cls_alpha(Series(20, 4), mu) == Approx((4 - mu) / 4));
    CHECK_THROWS_AS(cls_alpha(Series{0, 0, 0, 5}, 1.0), Error);
}

TEST_CASE("joint estimates by hand") {
    const auto j = cls_joint(Series{0, 1, 0, 1, 0});
    CHECK(j.alpha == Approx(-1.0));
    CHECK(j.mu == Approx(1.0));
    CHECK_THROWS_AS(cls_joint(Series(10, 3)), Error);
}

TEST_CASE("joint residuals are orthogonal to the regressors") {
    SimConfig cfg;
    cfg.model = testing::poisson_model(0.4, 1.7);
    cfg.n = 3000;
    cfg.seed = 9;
    const Series x = simulate_inar1(cfg);
    const auto j = cls_joint(x);
    double s = 0, sx = 0;
    for (size_t k = 1; k < x.size(); ++k) {
        const double r = x[k] - j.alpha * x[k - 1] - j.mu;
        s += r;
        sx += r * x[k - 1];
    }
    CHECK(std::abs(s) < 1e-9);
    CHECK(std::abs(sx) < 1e-9 * x.size());
}

TEST_CASE("known-mean slope is the one-dimensional least squares minimizer") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> u(0, 9);
    for (int rep = 0; rep < 20; ++rep) {
        Series x(12);
        for (auto& v : x) v = u(rng);
        if (x[0] + x[1] == 0) x[1] = 1;
        const double mu = 1.5;
        auto f = [&](double a) {
            double s = 0;
            for (size_t k = 1; k < x.size(); ++k) s += std::pow(x[k] - a * x[k - 1] - mu, 2);
            return s;
        };
        double best = -3, fb = f(-3);
        for (double a = -3; a <= 3; a += 1e-3)
            if (f(a) < fb) fb = f(a), best = a;
        double lo = best - 1e-3, hi = best + 1e-3;
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            (f(m1) < f(m2) ? hi : lo) = f(m1) < f(m2) ? m2 : m1;
        }
        CHECK(std::abs(cls_alpha(x, mu) - 0.5 * (lo + hi)) < 1e-8);
    }
}

TEST_CASE("known-mean slope is consistent") {
    SimConfig cfg;
    cfg.model = testing::poisson_model();
    cfg.n = 50000;
    int close = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        close += std::abs(cls_alpha(simulate_inar1(cfg), 1.0) - 0.5) < 0.02;
    }
    CHECK(close >= 48);
}

TEST_CASE("joint estimates are consistent") {
    SimConfig cfg;
    cfg.model = testing::poisson_model(0.3, 2.0);
    cfg.n = 5000;
    int close = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        cfg.seed = 1000 + seed;
        const auto j = cls_joint(simulate_inar1(cfg));
        close += std::abs(j.alpha - 0.3) < 0.03 && std::abs(j.mu - 2.0) < 0.1;
    }
    CHECK(close >= 90);
}

TEST_CASE("clean report has zero gradient and a positive certificate") {
    SimConfig cfg;
    cfg.model = testing::poisson_model();
    cfg.n = 400;
    cfg.seed = 3;
    const Series x = simulate_inar1(cfg);
    for (auto mu : {std::optional<double>(1.0), std::optional<double>()}) {
        const auto r = estimate_clean(x, mu);
        CHECK(r.gradient_norm() < 1e-8);
        CHECK(r.certificate_positive());
        CHECK(r.mu_hat.has_value() == !mu.has_value());
    }
}
