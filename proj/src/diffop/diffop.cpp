#include "hyptrans/diffop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyptrans {

SmoothFn SmoothFn::from_jet(std::function<Jet(double)> j, int order,
                            std::vector<double> breakpoints) {
    SmoothFn f;
    f.value_at = [j](double x) { return j(x)[0]; };
    f.jet = std::move(j);
    f.derivative_order = order;
    f.breakpoints = std::move(breakpoints);
    return f;
}

SmoothFn SmoothFn::from_values(std::function<double(double)> fn, std::vector<double> breakpoints) {
    SmoothFn f;
    f.value_at = std::move(fn);
    f.derivative_order = 0;
    f.breakpoints = std::move(breakpoints);
    return f;
}

SmoothFn solution_fn(SolutionKind kind, const HypParams& p) {
    return SmoothFn::from_jet([kind, p](double x) { return eval_w_jet(kind, x, p); }, 3,
                              {0.0, 1.0});
}

SmoothFn hyp2f1_fn(const HypParams& p) { return solution_fn(SolutionKind::W1, p); }

SmoothFn constant_fn(double c) {
    return SmoothFn::from_jet([c](double) { return Jet::constant(c); }, 3);
}

SmoothFn polynomial_fn(std::vector<double> coeffs) {
    return SmoothFn::from_jet(
        [coeffs](double x) {
            // Horner on jets
            Jet acc;
            Jet var = Jet::variable(x);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                acc = acc * var + Jet::constant(*it);
            return acc;
        },
        3);
}

SmoothFn power_fn(std::vector<std::pair<double, double>> factors) {
    std::vector<double> bps;
    for (auto [p, e] : factors) bps.push_back(p);
    return SmoothFn::from_jet(
        [factors](double x) {
            Jet acc = Jet::constant(1.0);
            for (auto [p, e] : factors) acc = acc * Jet::pow_abs(x, p, e);
            return acc;
        },
        3, bps);
}

SmoothFn gaussian_fn(double center, double sigma) {
    return SmoothFn::from_jet(
        [center, sigma](double x) {
            double s2 = sigma * sigma;
            double t = x - center;
            double e = std::exp(-t * t / s2);
            return Jet::compose({e, e, e, e}, Jet(-t * t / s2, -2 * t / s2, -2 / s2, 0.0));
        },
        3);
}

SmoothFn product_fn(const SmoothFn& f, const SmoothFn& g) {
    std::vector<double> bps = f.breakpoints;
    bps.insert(bps.end(), g.breakpoints.begin(), g.breakpoints.end());
    int order = std::min(f.derivative_order, g.derivative_order);
    if (order == 0)
        return SmoothFn::from_values([f, g](double x) { return f(x) * g(x); }, bps);
    return SmoothFn::from_jet([f, g](double x) { return f.jet(x) * g.jet(x); }, order, bps);
}

namespace {

void check_stencil(const SmoothFn& f, double x, double half_width) {
    for (double bp : f.breakpoints) {
        if (std::fabs(bp - x) <= half_width) {
            std::ostringstream os;
            os << "finite-difference stencil at x=" << x << " crosses singular point " << bp;
            throw DomainError(os.str());
        }
    }
}

}  // namespace

double derivative(const SmoothFn& f, double x, int k) {
    if (k == 0) return f(x);
    if (f.derivative_order >= k) return f.jet(x)[k];
    double h = k == 1 ? std::max(1e-5, 1e-5 * std::fabs(x))
             : k == 2 ? std::max(1e-3, 1e-3 * std::fabs(x))
                      : std::max(1e-2, 1e-2 * std::fabs(x));
    check_stencil(f, x, 2 * h);
    double fp2 = f(x + 2 * h), fp1 = f(x + h), fm1 = f(x - h), fm2 = f(x - 2 * h);
    switch (k) {
        case 1: return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
        case 2: return (-fp2 + 16 * fp1 - 30 * f(x) + 16 * fm1 - fm2) / (12 * h * h);
        case 3: return (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
        default: throw DomainError("derivative order above 3 is not supported");
    }
}

double L_of_jet(const HypParams& p, double x, const Jet& j) {
    return x * (1 - x) * j[2] + (p.c - (p.a + p.b + 1) * x) * j[1] - p.a * p.b * j[0];
}

double apply_L(const HypParams& p, const SmoothFn& f, double x) {
    if (f.derivative_order >= 2) return L_of_jet(p, x, f.jet(x));
    return L_of_jet(p, x, Jet(f(x), derivative(f, x, 1), derivative(f, x, 2)));
}

double apply_D(double alpha, const SmoothFn& f, double x) {
    return x * derivative(f, x, 1) + alpha * f(x);
}

SmoothFn L_fn(const HypParams& p, const SmoothFn& f) {
    if (f.derivative_order < 2)
        return SmoothFn::from_values([p, f](double x) { return apply_L(p, f, x); }, f.breakpoints);
    int order = f.derivative_order - 2;
    return SmoothFn::from_jet(
        [p, f](double x) {
            Jet j = f.jet(x);
            double s = p.a + p.b + 1;
            double v = L_of_jet(p, x, j);
            double d1 = x * (1 - x) * j[3] + (1 - 2 * x) * j[2] + (p.c - s * x) * j[2] - s * j[1] -
                        p.a * p.b * j[1];
            return Jet(v, d1);
        },
        order, f.breakpoints);
}

SmoothFn D_fn(double alpha, const SmoothFn& f) {
    if (f.derivative_order < 1)
        return SmoothFn::from_values([alpha, f](double x) { return apply_D(alpha, f, x); },
                                     f.breakpoints);
    int order = f.derivative_order - 1;
    return SmoothFn::from_jet(
        [alpha, f](double x) {
            Jet j = f.jet(x);
            return Jet(x * j[1] + alpha * j[0], (1 + alpha) * j[1] + x * j[2],
                       (2 + alpha) * j[2] + x * j[3]);
        },
        order, f.breakpoints);
}

double d2f1(const HypParams& p, double z) {
    if (near_nonpositive_integer(p.c)) throw PoleError("d2f1: c is a non-positive integer");
    if (p.a == 0.0 || p.b == 0.0) return 0.0;
    return p.a * p.b / p.c * hyp2f1({p.a + 1, p.b + 1, p.c + 1}, z);
}

double adjoint_residual(const HypParams& p, const SmoothFn& f, const SmoothFn& g, double x) {
    HypParams adj{1 - p.a, 1 - p.b, 2 - p.c};
    auto concomitant = [&](double t) {
        double f0 = f(t), g0 = g(t);
        double f1 = derivative(f, t, 1), g1 = derivative(g, t, 1);
        return t * (1 - t) * (f1 * g0 - f0 * g1) + (p.c - 1 + (1 - p.a - p.b) * t) * f0 * g0;
    };
    double main_terms = apply_L(p, f, x) * g(x) - f(x) * apply_L(adj, g, x);
    if (f.derivative_order >= 2 && g.derivative_order >= 2) {
        Jet fj = f.jet(x), gj = g.jet(x);
        double s = 1 - p.a - p.b;
        double dc = (1 - 2 * x) * (fj[1] * gj[0] - fj[0] * gj[1]) +
                    x * (1 - x) * (fj[2] * gj[0] - fj[0] * gj[2]) + s * fj[0] * gj[0] +
                    (p.c - 1 + s * x) * (fj[1] * gj[0] + fj[0] * gj[1]);
        return main_terms - dc;
    }
    double h = std::max(1e-3, 1e-3 * std::fabs(x));
    check_stencil(f, x, 2 * h);
    check_stencil(g, x, 2 * h);
    auto d5 = [&](double s) {
        return (-concomitant(x + 2 * s) + 8 * concomitant(x + s) - 8 * concomitant(x - s) +
                concomitant(x - 2 * s)) /
               (12 * s);
    };
    // one Richardson step removes the h^4 term
    double dc = (16 * d5(h / 2) - d5(h)) / 15;
    return main_terms - dc;
}

// ---- transmutation table ----

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<TransmutationCase> build_cases() {
    const std::vector<OpenInterval> N{{kNegInf, 0.0}, {0.0, 1.0}};
    const std::vector<OpenInterval> L1{{kNegInf, 1.0}};
    return {
        {"c+", "a", "b", "c+mu", 0.0, "c-1", 0, "c+mu-1", 0, 0, 0, 0, 0, N},
        {"a+,c+", "a+mu", "b", "c+mu", 0.0, "c-1", "b-c-mu", "c+mu-1", "b-c", 0, 1, 0, 1, N},
        {"a+,b+,c+", "a+mu", "b+mu", "c+mu", 0.0, "c-1", "a+b-c", "c+mu-1", "a+b-c+mu", 0, 0, 0,
         0, N},
        {"a-", "a-mu", "b", "c", 0.0, "a-mu-1", 0, "a-1", 0, 1, 0, 1, 0, N},
        {"a+", "a+mu", "b", "c", 0.0, "c-a-mu-1", "a+b-c", "c-a-1", "a+b-c+mu", 1, 0, 1, 0, N},
        {"a-,b-,c-", "a-mu", "b-mu", "c-mu", kNegInf, 0, 0, 0, 0, 0, 0, 0, 0, L1},
        {"a-,c-", "a-mu", "b", "c-mu", 1.0, 0, "a-mu-1", 0, "a-1", 0, 1, 0, 1, L1},
        {"c-", "a", "b", "c-mu", kNegInf, 0, "a+b-c", 0, "a+b-c+mu", 0, 0, 0, 0, L1},
    };
}

SymValues sym_values(const HypParams& p, double mu) { return {p.a, p.b, p.c, mu, 0, 0, 0}; }

void check_region(const TransmutationCase& tc, double x, double y) {
    bool in_j = std::any_of(tc.J.begin(), tc.J.end(), [x](const auto& iv) { return iv.contains(x); });
    OpenInterval I = case_interval(tc, x);
    if (!in_j || !I.contains(y)) {
        std::ostringstream os;
        os << "case " << tc.name << ": (x, y) = (" << x << ", " << y << ") outside J x I";
        throw DomainError(os.str());
    }
}

}  // namespace

const std::vector<TransmutationCase>& transmutation_cases() {
    static const std::vector<TransmutationCase> cases = build_cases();
    return cases;
}

const TransmutationCase& find_case(const std::string& name) {
    for (const auto& tc : transmutation_cases())
        if (tc.name == name) return tc;
    throw UnknownCaseError("unknown transmutation case: " + name);
}

OpenInterval case_interval(const TransmutationCase& tc, double x) {
    return tc.x0 < x ? OpenInterval{tc.x0, x} : OpenInterval{x, tc.x0};
}

KernelTerms kernel_terms(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                         double y) {
    check_region(tc, x, y);
    return kernel_terms(tc, p, mu, x, y, 1 - x, 1 - y, x - y);
}

KernelTerms kernel_terms(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                         double y, double one_minus_x, double one_minus_y, double x_minus_y) {
    SymValues s = sym_values(p, mu);
    double w0 = tc.w_exp0.eval(s), w1 = tc.w_exp1.eval(s);
    double v0 = tc.v_exp0.eval(s), v1 = tc.v_exp1.eval(s);
    HypParams shifted{tc.a_shift.eval(s), tc.b_shift.eval(s), tc.c_shift.eval(s)};
    HypParams adjoint{1 - p.a, 1 - p.b, 2 - p.c};

    Scaled wy = Scaled::pow_abs(y, w0) * Scaled::pow_abs(one_minus_y, w1);
    Jet kx = Jet::pow_signed(x, -v0) * Jet::pow_signed(-one_minus_x, -v1) *
             Jet::pow_signed(x_minus_y, mu - 1);
    double lhs = (wy * L_of_jet(shifted, x, kx)).value();

    Scaled vx = Scaled::pow_abs(x, v0 + tc.v2_exp0) * Scaled::pow_abs(one_minus_x, v1 + tc.v2_exp1);
    Jet ky = Jet::pow_signed(y, w0 + tc.w2_exp0) * Jet::pow_signed(-one_minus_y, w1 + tc.w2_exp1) *
             Jet::pow_signed(-x_minus_y, mu - 1);
    double rhs = L_of_jet(adjoint, y, ky) / vx.value();
    return {lhs, rhs};
}

double kernel_residual(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                       double y) {
    KernelTerms t = kernel_terms(tc, p, mu, x, y);
    return t.lhs - t.rhs;
}

double kernel_weight(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                     double y) {
    SymValues s = sym_values(p, mu);
    return std::pow(std::fabs(y), tc.w_exp0.eval(s)) * std::pow(std::fabs(1 - y), tc.w_exp1.eval(s)) /
           (std::pow(std::fabs(x), tc.v_exp0.eval(s)) * std::pow(std::fabs(1 - x), tc.v_exp1.eval(s))) *
           std::pow(std::fabs(x - y), mu - 1);
}

double kernel_weight2(const TransmutationCase& tc, const HypParams& p, double mu, double x,
                      double y) {
    double w2 = std::pow(std::fabs(y), tc.w2_exp0) * std::pow(std::fabs(1 - y), tc.w2_exp1);
    double v2 = std::pow(std::fabs(x), tc.v2_exp0) * std::pow(std::fabs(1 - x), tc.v2_exp1);
    return kernel_weight(tc, p, mu, x, y) * w2 / v2;
}

}  // namespace hyptrans
