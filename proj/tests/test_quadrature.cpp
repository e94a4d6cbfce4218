#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyptrans/quadrature.hpp"
#include "hyptrans/solutions.hpp"
#include "hyptrans/special.hpp"
#include "oracle_values.inc"

using namespace hyptrans;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// y^alpha (1-y)^beta on (0,1), using the exact endpoint distances.
SingularIntegrand beta_integrand(double alpha, double b) {
    SingularIntegrand f;
    f.core = [alpha, b](double, double dl, double dr) {
        return Scaled::pow_abs(dl, alpha) * Scaled::pow_abs(dr, b);
    };
    f.left_exponent = alpha;
    f.right_exponent = b;
    return f;
}

}  // namespace

TEST_CASE("finite examples") {
    // Gamma(b)/Gamma(b+mu) at b = mu = 0.5 is sqrt(pi)
    SingularIntegrand f;
    f.core = [](double, double dl, double dr) {
        return Scaled::pow_abs(dl, -0.5) * Scaled::pow_abs(dr, -0.5) * (1.0 / gamma_fn(0.5));
    };
    f.left_exponent = f.right_exponent = -0.5;
    auto r = integrate_finite(f, 0, 1, 1e-12);
    CHECK(r.converged);
    CHECK(rel(r.value, std::sqrt(std::numbers::pi)) < 1e-11);

    auto one = integrate_finite(SingularIntegrand::plain([](double) { return 1.0; }), 0, 1, 1e-12);
    CHECK(rel(one.value, 1.0) < 1e-11);

    auto b = integrate_finite(beta_integrand(-0.7, -0.4), 0, 1, 1e-12);
    CHECK(rel(b.value, kBeta_03_06) < 1e-11);
}

TEST_CASE("semi-infinite examples") {
    SingularIntegrand cube = SingularIntegrand::plain([](double y) { return std::pow(y, -3.0); });
    cube.decay_exponent = -3;
    auto r = integrate_semi_infinite(cube, 1.0, Direction::PlusInfinity, 1e-12);
    CHECK(rel(r.value, 0.5) < 1e-11);

    SingularIntegrand g;
    g.core = [](double y, double dl, double) {
        return Scaled::pow_abs(dl, 0.5) * Scaled::pow_abs(1 + y, -3.0);
    };
    g.left_exponent = 0.5;
    g.decay_exponent = -2.5;
    auto b = integrate_semi_infinite(g, 0.0, Direction::PlusInfinity, 1e-12);
    CHECK(rel(b.value, kBeta_15_15) < 1e-11);

    // Euler-type representation of w5 over (-inf, 0)
    double a = 1.4, bb = 0.6, c = 1.1, x = 0.5;
    SingularIntegrand e;
    e.core = [=](double y, double, double dr) {
        return Scaled::pow_abs(dr, bb - 1) * Scaled::pow_abs(1 - y, -a) * Scaled::pow_abs(x - y, c - bb - 1);
    };
    e.right_exponent = bb - 1;
    e.decay_exponent = bb - 1 - a + c - bb - 1;
    auto ev = integrate_semi_infinite(e, 0.0, Direction::MinusInfinity, 1e-12);
    CHECK(rel(ev.value, kEuler27Example) < 1e-11);
    double closed = gamma_ratio({{a - c + 1, bb}, {a + bb - c + 1}}) * std::pow(x, c - 1) *
                    eval_w(SolutionKind::W5, x, {a, bb, c});
    CHECK(rel(closed, kEuler27Example) < 1e-12);
}

TEST_CASE("integrability checks") {
    CHECK_THROWS_AS(integrate_finite(beta_integrand(-1.0, 0.0), 0, 1, 1e-10), NonIntegrableError);
    CHECK_THROWS_AS(integrate_finite(beta_integrand(0.0, -1.2), 0, 1, 1e-10), NonIntegrableError);
    SingularIntegrand slow = SingularIntegrand::plain([](double y) { return 1 / y; });
    slow.decay_exponent = -1;
    CHECK_THROWS_AS(integrate_semi_infinite(slow, 1, Direction::PlusInfinity, 1e-10),
                    NonIntegrableError);
}

TEST_CASE("beta family and error-estimate honesty") {
    int honest = 0;
    double worst = 0;
    for (const auto& [al, be, want] : kBetaSuite) {
        auto r = integrate_finite(beta_integrand(al, be), 0, 1, 1e-12);
        double err = std::fabs(r.value - want);
        worst = std::fmax(worst, err / want);
        if (r.err_est >= err) ++honest;
    }
    CHECK(kBetaSuite.size() == 200);
    CHECK(worst <= 1e-10);
    CHECK(honest >= 0.99 * kBetaSuite.size());
}

TEST_CASE("translation and scaling covariance") {
    auto smooth = [](double y) { return std::cos(y) * std::exp(-0.3 * y) + y * y; };
    for (auto [m, M] : {std::pair{-2.0, 3.5}, std::pair{0.25, 0.75}, std::pair{10.0, 40.0}}) {
        auto direct = integrate_finite(SingularIntegrand::plain(smooth), m, M, 1e-13);
        auto mapped = integrate_finite(
            SingularIntegrand::plain([&](double t) { return smooth(m + (M - m) * t); }), 0, 1, 1e-13);
        CHECK(rel(direct.value, (M - m) * mapped.value) < 1e-12);
    }
}

TEST_CASE("level differences shrink on smooth integrands") {
    // Estimates at successive levels approach the limit geometrically.
    for (int i = 1; i <= 20; ++i) {
        double k = 0.3 * i;
        auto f = SingularIntegrand::plain([k](double y) { return std::exp(k * y) / (1 + y * y); });
        auto r = integrate_finite(f, -1, 1, 1e-14);
        CHECK(r.converged);
        CHECK(r.level <= 9);
        CHECK(r.err_est < 1e-12 * r.l1);
    }
}

TEST_CASE("environment override of the default tolerance") {
    CHECK(default_quad_tol() > 0);
}

TEST_CASE("non-convergence is flagged") {
    auto wild = SingularIntegrand::plain([](double y) { return std::sin(1.0 / (y * y * y)); });
    auto r = integrate_finite(wild, 1e-3, 1, 1e-14);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(require_converged(r), NoConvergenceError);
}
