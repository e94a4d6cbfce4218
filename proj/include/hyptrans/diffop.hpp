#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyptrans/affine.hpp"
#include "hyptrans/jet.hpp"
#include "hyptrans/solutions.hpp"
#include "hyptrans/special.hpp"

namespace hyptrans {

// A real function with optional exact derivatives. derivative_order = 0
// means only values are known and derivatives fall back to differences.
struct SmoothFn {
    std::function<double(double)> value_at;
    std::function<Jet(double)> jet;
    int derivative_order = 0;
    // Points a finite-difference stencil must not straddle.
    std::vector<double> breakpoints;

    double operator()(double x) const { return value_at(x); }

    static SmoothFn from_jet(std::function<Jet(double)> j, int order,
                             std::vector<double> breakpoints = {});
    static SmoothFn from_values(std::function<double(double)> f,
                                std::vector<double> breakpoints = {});
};

SmoothFn solution_fn(SolutionKind kind, const HypParams& p);
SmoothFn hyp2f1_fn(const HypParams& p);
SmoothFn constant_fn(double c);
// c0 + c1 x + c2 x^2 + ...
SmoothFn polynomial_fn(std::vector<double> coeffs);
// prod |x - p_i|^{e_i}
SmoothFn power_fn(std::vector<std::pair<double, double>> factors);
SmoothFn gaussian_fn(double center, double sigma);
SmoothFn product_fn(const SmoothFn& f, const SmoothFn& g);

// k-th derivative: exact when available, else a 5-point central difference
// with h = max(1e-5, 1e-5|x|) for k = 1 and max(1e-3, 1e-3|x|) for k = 2.
double derivative(const SmoothFn& f, double x, int k);

double apply_L(const HypParams& p, const SmoothFn& f, double x);
double apply_D(double alpha, const SmoothFn& f, double x);

// L f and D f as functions, keeping exact derivatives (two resp. one order fewer).
SmoothFn L_fn(const HypParams& p, const SmoothFn& f);
SmoothFn D_fn(double alpha, const SmoothFn& f);

// L applied to a known jet.
double L_of_jet(const HypParams& p, double x, const Jet& j);

double d2f1(const HypParams& p, double z);

// (L f) g - f (L* g) - d/dx[x(1-x)(f'g - f g') + (c-1+(1-a-b)x) f g], with
// L* = L_{1-a,1-b,2-c}. The outer derivative is exact when f and g carry second
// derivatives, else a Richardson-extrapolated 5-point central difference.
double adjoint_residual(const HypParams& p, const SmoothFn& f, const SmoothFn& g, double x);

// One row of the transmutation table: the kernel w(y)/v(x) |x-y|^{mu-1}
// intertwines L_{a',b',c';x} with L_{1-a,1-b,2-c;y}.
struct TransmutationCase {
    std::string name;
    Affine a_shift, b_shift, c_shift;  // a', b', c'
    double x0;                         // 0, 1 or -inf
    Affine w_exp0, w_exp1;             // w(y) = |y|^{w_exp0} |1-y|^{w_exp1}
    Affine v_exp0, v_exp1;             // v(x) = |x|^{v_exp0} |1-x|^{v_exp1}
    int w2_exp0, w2_exp1;              // w2(y) = |y|^{..} |1-y|^{..}
    int v2_exp0, v2_exp1;
    std::vector<OpenInterval> J;
};

const std::vector<TransmutationCase>& transmutation_cases();
const TransmutationCase& find_case(const std::string& name);

// Integration interval I(x) of a case: between x0 and x.
OpenInterval case_interval(const TransmutationCase& tc, double x);

struct KernelTerms {
    double lhs;  // L_{a',b',c';x} of w(y)/v(x) |x-y|^{mu-1}
    double rhs;  // L_{1-a,1-b,2-c;y} of w(y)w2(y)/(v(x)v2(x)) |x-y|^{mu-1}
};

KernelTerms kernel_terms(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                         double y);
// Same, with 1-x, 1-y and x-y supplied exactly (for quadrature nodes next to a singular point).
KernelTerms kernel_terms(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                         double y, double one_minus_x, double one_minus_y, double x_minus_y);
double kernel_residual(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                       double y);
// w(y)/v(x) |x-y|^{mu-1} and w(y)w2(y)/(v(x)v2(x)) |x-y|^{mu-1}
double kernel_weight(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                     double y);
double kernel_weight2(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                      double y);

}  // namespace hyptrans
