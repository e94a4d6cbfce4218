#pragma once

#include <array>
#include <cmath>

namespace hyptrans {

// Value and first three derivatives of a function at a point.
struct Jet {
    std::array<double, 4> d{};

    Jet() = default;
    Jet(double v0, double v1 = 0.0, double v2 = 0.0, double v3 = 0.0) : d{v0, v1, v2, v3} {}

    static Jet constant(double c) { return {c}; }
    static Jet variable(double x) { return {x, 1.0}; }

    // |x - p|^e as a function of x
    static Jet pow_abs(double x, double p, double e) { return pow_signed(x - p, e); }

    // |t|^e where t = x - p is supplied directly (exact near p).
    static Jet pow_signed(double t, double e) {
        if (e == 0.0) return {1.0};
        double v = std::pow(std::fabs(t), e);
        double r = 1.0 / t;
        return {v, e * v * r, e * (e - 1) * v * r * r, e * (e - 1) * (e - 2) * v * r * r * r};
    }

    double operator[](int i) const { return d[i]; }

    friend Jet operator+(const Jet& f, const Jet& g) {
        return {f[0] + g[0], f[1] + g[1], f[2] + g[2], f[3] + g[3]};
    }
    friend Jet operator-(const Jet& f, const Jet& g) {
        return {f[0] - g[0], f[1] - g[1], f[2] - g[2], f[3] - g[3]};
    }
    friend Jet operator*(double k, const Jet& f) { return {k * f[0], k * f[1], k * f[2], k * f[3]}; }
    friend Jet operator*(const Jet& f, const Jet& g) {
        return {f[0] * g[0], f[1] * g[0] + f[0] * g[1],
                f[2] * g[0] + 2 * f[1] * g[1] + f[0] * g[2],
                f[3] * g[0] + 3 * f[2] * g[1] + 3 * f[1] * g[2] + f[0] * g[3]};
    }

    // h(g(x)) from the derivatives h_k of h at g(x) (Faa di Bruno to third order).
    static Jet compose(const std::array<double, 4>& h, const Jet& g) {
        double g1 = g[1], g2 = g[2], g3 = g[3];
        return {h[0], h[1] * g1, h[2] * g1 * g1 + h[1] * g2,
                h[3] * g1 * g1 * g1 + 3 * h[2] * g1 * g2 + h[1] * g3};
    }
};

}  // namespace hyptrans
