#include <cmath>
#include <sstream>
#include <utility>

#include "hyptrans/special.hpp"

namespace hyptrans {

namespace {

constexpr double kSeriesTol = 1e-17;
constexpr double kDegenerateTol = 1e-9;

// Plain power series; caller guarantees |z| <= kZSeriesMax.
double series_2f1(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    int small = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::fabs(term) < kSeriesTol * std::fabs(sum)) {
            if (++small == 3) return sum;
        } else {
            small = 0;
        }
    }
    std::ostringstream os;
    os << "2F1 series did not converge: a=" << a << " b=" << b << " c=" << c << " z=" << z;
    throw ConvergenceError(os.str());
}

// Expansion around z = 1 through the two solutions at 1.
Scaled connection_2f1(double a, double b, double c, double z, double omz) {
    (void)z;
    double s = c - a - b;
    if (distance_to_integer(s) < kDegenerateTol) {
        std::ostringstream os;
        os << "2F1 near z=1 with integer c-a-b (logarithmic case): c-a-b=" << s;
        throw ConvergenceError(os.str());
    }
    Scaled A = gamma_ratio_scaled({{c, s}, {c - a, c - b}});
    Scaled B = gamma_ratio_scaled({{c, -s}, {a, b}});
    Scaled t1 = A * series_2f1(a, b, 1.0 - s, omz);
    Scaled t2 = B * Scaled::pow_abs(omz, s) * series_2f1(c - a, c - b, 1.0 + s, omz);
    return t1 + t2;
}

}  // namespace

Scaled hyp2f1_scaled(double a, double b, double c, double z, double omz) {
    // 1 - z is the authoritative distance: z may round to 1 while omz > 0.
    if (!(omz > 0.0) || !std::isfinite(z)) {
        std::ostringstream os;
        os << "hyp2f1 requires z < 1, got z=" << z << " (1-z=" << omz << ")";
        throw DomainError(os.str());
    }
    if (near_nonpositive_integer(c)) {
        std::ostringstream os;
        os << "hyp2f1: c=" << c << " is a non-positive integer";
        throw PoleError(os.str());
    }
    if (a > b) std::swap(a, b);
    if (a == 0.0 || b == 0.0 || z == 0.0) return Scaled(1.0);
    if (z >= kZSeriesMin && z <= kZSeriesMax) return Scaled(series_2f1(a, b, c, z));
    if (z > kZSeriesMax) return connection_2f1(a, b, c, z, omz);

    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z/(z-1)), with 1 - z/(z-1) = 1/(1-z).
    double w = -z / omz;
    double omw = 1.0 / omz;
    Scaled inner = (w <= kZSeriesMax) ? Scaled(series_2f1(a, c - b, c, w))
                                      : connection_2f1(a, c - b, c, w, omw);
    return inner * Scaled::pow_abs(omz, -a);
}

double hyp2f1(const HypParams& p, double z) {
    return hyp2f1_scaled(p.a, p.b, p.c, z, 1.0 - z).value();
}

std::array<Scaled, 4> hyp2f1_jet(double a, double b, double c, double z, double omz,
                                 int order) {
    std::array<Scaled, 4> out{};
    double coef = 1.0;
    for (int n = 0; n <= order && n < 4; ++n) {
        if (n > 0) coef *= (a + n - 1) * (b + n - 1) / (c + n - 1);
        out[n] = coef == 0.0 ? Scaled(0.0) : coef * hyp2f1_scaled(a + n, b + n, c + n, z, omz);
    }
    return out;
}

double hyp3f2(double a, double b, double c, double d, double e, double z) {
    if (!(std::fabs(z) < 1.0)) throw ConvergenceError("hyp3f2 series requires |z| < 1");
    if (near_nonpositive_integer(d) || near_nonpositive_integer(e))
        throw PoleError("hyp3f2: lower parameter is a non-positive integer");
    double term = 1.0;
    double sum = 1.0;
    int small = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) * (c + k) / ((d + k) * (e + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::fabs(term) < kSeriesTol * std::fabs(sum)) {
            if (++small == 3) return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp3f2 series did not converge within max_terms");
}

}  // namespace hyptrans
