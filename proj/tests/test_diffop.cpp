#include <doctest.h>

#include <cmath>
#include <random>

#include "hyptrans/diffop.hpp"
#include "oracle_values.inc"

using namespace hyptrans;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

bool generic(double a, double b, double c) {
    for (double q : {c, a - b, c - a - b, a, b, c - a, c - b})
        if (distance_to_integer(q) < 0.05) return false;
    return true;
}

HypParams random_params(std::mt19937_64& rng, double lo = -3, double hi = 3) {
    std::uniform_real_distribution<double> par(lo, hi);
    for (;;) {
        double a = par(rng), b = par(rng), c = par(rng);
        if (generic(a, b, c)) return {a, b, c};
    }
}

// Richardson-extrapolated central differences for the first two derivatives.
std::pair<double, double> richardson(const SmoothFn& f, double x, double h) {
    auto d1 = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
    auto d2 = [&](double s) { return (f(x + s) - 2 * f(x) + f(x - s)) / (s * s); };
    return {(4 * d1(h / 2) - d1(h)) / 3, (4 * d2(h / 2) - d2(h)) / 3};
}

// (x, y) in J x I for a transmutation row, 0.05 away from every singular point.
std::pair<double, double> random_xy(const TransmutationCase& tc, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, tc.J.size() - 1);
    std::uniform_real_distribution<double> u(0, 1);
    for (;;) {
        OpenInterval J = tc.J[pick(rng)];
        double lo = std::isinf(J.lo) ? -5.0 : J.lo + 0.05;
        double hi = J.hi - 0.05;
        double x = lo + (hi - lo) * u(rng);
        OpenInterval I = case_interval(tc, x);
        double ilo = std::isinf(I.lo) ? I.hi - 5.0 : I.lo + 0.05;
        double ihi = I.hi - 0.05;
        if (ihi <= ilo) continue;
        double y = ilo + (ihi - ilo) * u(rng);
        if (std::fabs(y) < 0.05 || std::fabs(1 - y) < 0.05 || std::fabs(x) < 0.05) continue;
        return {x, y};
    }
}

}  // namespace

TEST_CASE("L on simple functions") {
    HypParams p{0.3, -1.2, 0.7};
    CHECK(apply_L(p, constant_fn(1.0), 0.4) == doctest::Approx(-p.a * p.b).epsilon(1e-15));
    CHECK(std::fabs(apply_L(p, solution_fn(SolutionKind::W1, p), -2.3)) < 1e-10);
    // (1-y)^{-a} is annihilated by L_{a,b,b}
    double a = 0.8, b = 1.7;
    auto f = power_fn({{1.0, -a}});
    for (double x : {-4.0, -0.3, 0.2, 0.9})
        CHECK(std::fabs(apply_L({a, b, b}, f, x)) < 1e-10 * (1 + std::fabs(f(x))));
    // the same through finite differences only
    auto fv = SmoothFn::from_values([a](double x) { return std::pow(1 - x, -a); }, {1.0});
    CHECK(std::fabs(apply_L({a, b, b}, fv, 0.2)) < 1e-6);
    CHECK_THROWS_AS(apply_L(p, fv, 1.0 - 1e-4), DomainError);
}

TEST_CASE("D on simple functions") {
    CHECK(apply_D(0.37, constant_fn(1.0), 2.0) == doctest::Approx(0.37));
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> xx(-3, 0.95);
    for (int i = 0; i < 20; ++i) {
        HypParams p = random_params(rng);
        double x = xx(rng);
        double want = (p.c - 1) * eval_w(SolutionKind::W1, x, {p.a, p.b, p.c - 1});
        CHECK(std::fabs(apply_D(p.c - 1, solution_fn(SolutionKind::W1, p), x) - want) <=
              1e-10 * (1 + std::fabs(want)));
    }
    // |x|^{1-c} convention: the shift rule holds on (0,1)
    std::uniform_real_distribution<double> pos(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        HypParams p = random_params(rng);
        double x = pos(rng);
        double k = (p.a - p.c + 1) * (p.b - p.c + 1) / (2 - p.c);
        double want = k * eval_w(SolutionKind::W2, x, {p.a, p.b, p.c - 1});
        CHECK(std::fabs(apply_D(p.c - 1, solution_fn(SolutionKind::W2, p), x) - want) <=
              1e-10 * (1 + std::fabs(want)));
    }
}

TEST_CASE("derivative rule for 2F1") {
    CHECK(d2f1({0.3, 0.4, 1.6}, 0.0) == doctest::Approx(0.3 * 0.4 / 1.6).epsilon(1e-15));
    CHECK(d2f1({0.0, 0.4, 1.6}, 0.5) == 0.0);
    HypParams p{0.5, 0.5, 1.5};
    double h = 1e-5, z = 0.25;
    double fd = (hyp2f1(p, z + h) - hyp2f1(p, z - h)) / (2 * h);
    CHECK(std::fabs(d2f1(p, z) - fd) < 1e-8);
    CHECK(rel(d2f1(p, z), kD2f1Example) < 1e-13);
    CHECK_THROWS_AS(d2f1({0.5, 0.5, 0.0}, 0.2), PoleError);
}

TEST_CASE("adjoint identity") {
    HypParams p{0.3, 0.45, 1.3};
    CHECK(std::fabs(adjoint_residual(p, constant_fn(1), constant_fn(1), 0.4)) < 1e-9);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> co(-2, 2), xx(-3, 3);
    for (int i = 0; i < 20; ++i) {
        HypParams q = random_params(rng);
        auto f = polynomial_fn({co(rng), co(rng), co(rng)});
        auto g = polynomial_fn({co(rng), co(rng), co(rng)});
        CHECK(std::fabs(adjoint_residual(q, f, g, xx(rng))) < 1e-10);
    }
    std::uniform_real_distribution<double> x01(-2, 0.8);
    for (int i = 0; i < 20; ++i) {
        HypParams q = random_params(rng, -1.5, 1.5);
        double x = x01(rng);
        auto bump = gaussian_fn(x + 0.1, 0.5);
        auto w = solution_fn(SolutionKind::W1, q);
        CHECK(std::fabs(adjoint_residual(q, w, bump, x)) <= 1e-6);
        // values only: every derivative by differences
        auto wv = SmoothFn::from_values(w.value_at, {1.0});
        auto bv = SmoothFn::from_values(bump.value_at);
        CHECK(std::fabs(adjoint_residual(q, wv, bv, x)) <= 1e-6 * (1 + std::fabs(w(x))));
    }
}

TEST_CASE("L and D commute up to the parameter shift") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> xx(-3, 0.9), co(-2, 2);
    for (int i = 0; i < 50; ++i) {
        HypParams p = random_params(rng);
        HypParams down{p.a, p.b, p.c - 1};
        double x = xx(rng);
        for (const SmoothFn& f : {solution_fn(SolutionKind::W1, p),
                                  polynomial_fn({co(rng), co(rng), co(rng), co(rng)})}) {
            double lhs = apply_L(down, D_fn(p.c - 1, f), x);
            double rhs = apply_D(p.c - 1, L_fn(p, f), x);
            CHECK(std::fabs(lhs - rhs) <= 1e-8 * (1 + std::fabs(derivative(f, x, 2))));
        }
    }
}

TEST_CASE("kernel rows: worked examples") {
    const auto& cp = find_case("c+");
    HypParams p{0.4, 0.6, 1.2};
    CHECK(std::fabs(kernel_residual(cp, p, 2.5, 0.7, 0.3)) <= 1e-9);
    // the c+ row is the y^{c-1} / x^{c+mu-1} kernel identity
    auto t = kernel_terms(cp, p, 2.5, 0.7, 0.3);
    double x = 0.7, y = 0.3, mu = 2.5;
    auto k = power_fn({{y, mu - 1}, {0.0, 1 - p.c - mu}});
    double direct = std::pow(y, p.c - 1) * apply_L({p.a, p.b, p.c + mu}, k, x);
    CHECK(rel(t.lhs, direct) < 1e-12);

    const auto& abc = find_case("a-,b-,c-");
    for (double m : {1.5, 0.4}) {
        double r = kernel_residual(abc, p, m, 0.2, -1.3);
        auto kk = power_fn({{-1.3, m - 1}});
        double l = apply_L({p.a - m, p.b - m, p.c - m}, kk, 0.2);
        CHECK(std::fabs(r) <= 1e-9 * (1 + std::fabs(l)));
    }
    std::mt19937_64 rng(47);
    for (const auto& tc : transmutation_cases()) {
        auto [xx, yy] = random_xy(tc, rng);
        HypParams q = random_params(rng, -2, 2);
        auto terms = kernel_terms(tc, q, 1.0, xx, yy);
        INFO(tc.name);
        CHECK(std::fabs(terms.lhs - terms.rhs) <= 1e-9 * (1 + std::fabs(terms.lhs)));
    }
    CHECK_THROWS_AS(find_case("b+"), UnknownCaseError);
    CHECK_THROWS_AS(kernel_residual(cp, p, 2.5, 0.3, 0.7), DomainError);
}

TEST_CASE("all eight kernel rows vanish") {
    REQUIRE(transmutation_cases().size() == 8);
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> mm(0.05, 3.0);
    for (const auto& tc : transmutation_cases()) {
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            HypParams p = random_params(rng);
            double mu = mm(rng);
            auto [x, y] = random_xy(tc, rng);
            auto t = kernel_terms(tc, p, mu, x, y);
            worst = std::fmax(worst, std::fabs(t.lhs - t.rhs) / (1 + std::fabs(t.lhs)));
        }
        INFO(tc.name);
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("exact derivatives agree with finite differences") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(0, 1);
    int checked = 0;
    while (checked < 50) {
        HypParams p = random_params(rng, -2, 2);
        SolutionKind kind = kAllKinds[checked % 6];
        auto dom = domain_of(kind)[0];
        double lo = std::isinf(dom.lo) ? -4.0 : dom.lo + 0.1;
        double hi = std::isinf(dom.hi) ? 4.0 : dom.hi - 0.1;
        double x = lo + (hi - lo) * u(rng);
        SmoothFn fns[] = {solution_fn(kind, p), power_fn({{0.0, p.a}, {1.0, p.b}}),
                          product_fn(solution_fn(kind, p), gaussian_fn(x, 0.7))};
        for (const auto& f : fns) {
            if (std::fabs(x) < 0.1 || std::fabs(1 - x) < 0.1) continue;
            double h = 1e-3 * std::fmax(1.0, std::fabs(x));
            auto [r1, r2] = richardson(f, x, h);
            Jet j = f.jet(x);
            double s = std::fabs(j[0]) + std::fabs(j[1]) + std::fabs(j[2]);
            CHECK(std::fabs(j[1] - r1) <= 1e-6 * s);
            CHECK(std::fabs(j[2] - r2) <= 1e-6 * s);
        }
        ++checked;
    }
}
