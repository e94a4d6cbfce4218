#include <doctest.h>

#include <cmath>
#include <random>

#include "hyptrans/diffop.hpp"
#include "hyptrans/solutions.hpp"
#include "oracle_values.inc"

using namespace hyptrans;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

bool generic(double a, double b, double c) {
    for (double q : {c, a - b, c - a - b, a, b, c - a, c - b})
        if (distance_to_integer(q) < 0.05) return false;
    return true;
}

// A random point of the kind's domain, kept 0.05 away from 0 and 1.
double random_x(SolutionKind kind, std::mt19937_64& rng) {
    auto doms = domain_of(kind);
    std::uniform_int_distribution<std::size_t> pick(0, doms.size() - 1);
    OpenInterval iv = doms[pick(rng)];
    double lo = std::isinf(iv.lo) ? -10.0 : iv.lo + 0.05;
    double hi = std::isinf(iv.hi) ? 10.0 : iv.hi - 0.05;
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("solutions against the high-precision table") {
    for (const auto& r : kSolutions) {
        auto kind = static_cast<SolutionKind>(static_cast<int>(r[0]) - 1);
        INFO(to_string(kind) << " x=" << r[4]);
        CHECK(rel(eval_w(kind, r[4], {r[1], r[2], r[3]}), r[5]) < 1e-12);
    }
}

TEST_CASE("simple values") {
    CHECK(eval_w(SolutionKind::W1, 0.0, {0.3, 0.4, 1.7}) == 1.0);
    CHECK(rel(eval_w(SolutionKind::W3, 3.0, {0.4, 0.2, 1.1}), kW3Example) < 1e-12);
    // leading behaviour of w2 at 0+
    double x = 1e-6, c = 0.4;
    CHECK(rel(eval_w(SolutionKind::W2, x, {0.3, 0.8, c}), std::pow(x, 1 - c)) < 1e-5);
}

TEST_CASE("domains") {
    auto w1 = domain_of(SolutionKind::W1);
    REQUIRE(w1.size() == 1);
    CHECK(std::isinf(w1[0].lo));
    CHECK(w1[0].hi == 1.0);
    auto w5 = domain_of(SolutionKind::W5);
    REQUIRE(w5.size() == 1);
    CHECK(w5[0].lo == 0.0);
    CHECK(std::isinf(w5[0].hi));
    auto w6 = domain_of(SolutionKind::W6);
    REQUIRE(w6.size() == 2);
    CHECK(w6[0].lo == 0.0);
    CHECK(w6[0].hi == 1.0);
    CHECK(w6[1].lo == 1.0);
    CHECK(in_domain(SolutionKind::W2, -3.0));
    CHECK_FALSE(in_domain(SolutionKind::W2, 0.0));
    CHECK_FALSE(in_domain(SolutionKind::W3, 0.5));
    CHECK(in_domain(SolutionKind::W4, 2.0));
    CHECK(parse_kind("W4") == SolutionKind::W4);
    CHECK_FALSE(parse_kind("W7").has_value());
}

TEST_CASE("domain and guard errors") {
    HypParams p{0.3, 0.4, 1.7};
    CHECK_THROWS_AS(eval_w(SolutionKind::W1, 1.5, p), DomainError);
    CHECK_THROWS_AS(eval_w(SolutionKind::W5, -0.5, p), DomainError);
    CHECK_THROWS_AS(eval_w(SolutionKind::W6, 1.0 + 1e-9, p), DomainError);
    CHECK_THROWS_AS(eval_w(SolutionKind::W2, 1e-10, p), DomainError);
}

TEST_CASE("w3 and w4 are swapped by a <-> b") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> par(-3, 3);
    for (int i = 0; i < 100; ++i) {
        double a = par(rng), b = par(rng), c = par(rng);
        if (!generic(a, b, c)) continue;
        double x = random_x(SolutionKind::W3, rng);
        CHECK(eval_w(SolutionKind::W4, x, {a, b, c}) == eval_w(SolutionKind::W3, x, {b, a, c}));
    }
}

TEST_CASE("w2 is the scaled series on (0,1)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> par(-3, 3), xx(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
        double a = par(rng), b = par(rng), c = par(rng), x = xx(rng);
        if (!generic(a, b, c)) continue;
        double want = std::pow(x, 1 - c) * hyp2f1({a - c + 1, b - c + 1, 2 - c}, x);
        CHECK(rel(eval_w(SolutionKind::W2, x, {a, b, c}), want) < 1e-13);
    }
}

TEST_CASE("every solution is annihilated by L") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> par(-3, 3);
    double worst = 0;
    for (SolutionKind kind : kAllKinds) {
        int done = 0;
        while (done < 100) {
            double a = par(rng), b = par(rng), c = par(rng);
            if (!generic(a, b, c)) continue;
            double x = random_x(kind, rng);
            HypParams p{a, b, c};
            double r = std::fabs(apply_L(p, solution_fn(kind, p), x)) /
                       (1 + std::fabs(eval_w_jet(kind, x, p)[2]));
            worst = std::fmax(worst, r);
            CHECK(r <= 1e-7);
            ++done;
        }
    }
    MESSAGE("worst normalized ODE residual " << worst);
}

TEST_CASE("jets match finite differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> par(-2, 2);
    for (SolutionKind kind : kAllKinds) {
        for (int i = 0; i < 10; ++i) {
            double a = par(rng), b = par(rng), c = par(rng);
            if (!generic(a, b, c)) {
                --i;
                continue;
            }
            HypParams p{a, b, c};
            double x = random_x(kind, rng);
            double h = 1e-4 * std::fmax(1.0, std::fabs(x));
            auto f = [&](double t) { return eval_w(kind, t, p); };
            Jet j = eval_w_jet(kind, x, p);
            double fd1 = (f(x + h) - f(x - h)) / (2 * h);
            double fd1h = (f(x + h / 2) - f(x - h / 2)) / h;
            double rich = (4 * fd1h - fd1) / 3;
            CHECK(std::fabs(j[1] - rich) <= 1e-6 * (std::fabs(j[1]) + std::fabs(j[0])));
        }
    }
}
