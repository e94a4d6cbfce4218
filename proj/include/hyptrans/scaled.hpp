#pragma once

#include <cmath>

namespace hyptrans {

// A real number stored as mant * exp(scale). Products of large and small
// power factors stay representable until the final conversion.
struct Scaled {
    double mant = 0.0;
    double scale = 0.0;

    Scaled() = default;
    Scaled(double m) : mant(m), scale(0.0) {}
    Scaled(double m, double s) : mant(m), scale(s) {}

    static Scaled from_log(double log_abs, double sign = 1.0) { return {sign, log_abs}; }

    // |x|^e; exponent 0 gives exactly 1, even at x = 0.
    static Scaled pow_abs(double x, double e) {
        if (e == 0.0) return {1.0, 0.0};
        return {1.0, e * std::log(std::fabs(x))};
    }

    double value() const {
        if (mant == 0.0) return 0.0;
        return mant * std::exp(scale);
    }
    double log_abs() const { return std::log(std::fabs(mant)) + scale; }
    bool is_zero() const { return mant == 0.0; }

    Scaled& operator*=(const Scaled& o) {
        mant *= o.mant;
        scale += o.scale;
        return *this;
    }
    Scaled& operator*=(double d) {
        mant *= d;
        return *this;
    }
    friend Scaled operator*(Scaled a, const Scaled& b) { return a *= b; }
    friend Scaled operator*(Scaled a, double d) { return a *= d; }
    friend Scaled operator*(double d, Scaled a) { return a *= d; }

    friend Scaled operator+(const Scaled& a, const Scaled& b) {
        if (a.mant == 0.0) return b;
        if (b.mant == 0.0) return a;
        if (a.scale >= b.scale) return {a.mant + b.mant * std::exp(b.scale - a.scale), a.scale};
        return {b.mant + a.mant * std::exp(a.scale - b.scale), b.scale};
    }
    friend Scaled operator-(const Scaled& a) { return {-a.mant, a.scale}; }
    friend Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }
};

}  // namespace hyptrans
