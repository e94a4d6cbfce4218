#pragma once

#include <array>
#include <vector>

#include "hyptrans/errors.hpp"
#include "hyptrans/scaled.hpp"

namespace hyptrans {

struct HypParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
};

struct LogGamma {
    double log_abs;
    int sign;
};

struct GammaRatioSpec {
    std::vector<double> numerator_args;
    std::vector<double> denominator_args;
};

inline constexpr double kZSeriesMin = -0.5;
inline constexpr double kZSeriesMax = 0.8;
inline constexpr int kMaxTerms = 20000;

// True when x is within tol (relative to max(1,|x|)) of 0, -1, -2, ...
bool near_nonpositive_integer(double x, double tol = 1e-14);
double distance_to_integer(double x);
double sin_pi(double x);

LogGamma ln_abs_gamma(double x);
double gamma_fn(double x);
// 1/Gamma(x); exactly 0 at the poles.
double rgamma(double x);

Scaled gamma_ratio_scaled(const GammaRatioSpec& spec);
double gamma_ratio(const GammaRatioSpec& spec);

double pochhammer(double a, int k);

// Gauss 2F1 on z < 1. one_minus_z must equal 1 - z; passing it separately
// keeps relative accuracy when z is close to 1.
Scaled hyp2f1_scaled(double a, double b, double c, double z, double one_minus_z);
double hyp2f1(const HypParams& p, double z);

// Value and first three z-derivatives, via F' = ab/c F(a+1,b+1;c+1;z).
std::array<Scaled, 4> hyp2f1_jet(double a, double b, double c, double z, double one_minus_z,
                                 int order = 3);

double hyp3f2(double a, double b, double c, double d, double e, double z);

double gauss_sum(const HypParams& p);

}  // namespace hyptrans
