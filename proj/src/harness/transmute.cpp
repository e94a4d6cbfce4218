#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "hyptrans/harness.hpp"

namespace hyptrans {

namespace {

constexpr double kGaussianWidths = 12.0;  // sigma = effective length / 12
constexpr double kInfiniteSpan = 2.0;     // effective interval [x - 2, x] when x0 = -inf
constexpr double kSideTol = 1e-12;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

struct Exponents {
    double w0, w1, v0, v1;
    HypParams shifted;
};

Exponents exponents(const TransmutationCase& tc, const HypParams& p, double mu) {
    SymValues s{p.a, p.b, p.c, mu, 0, 0, 0};
    return {tc.w_exp0.eval(s), tc.w_exp1.eval(s), tc.v_exp0.eval(s), tc.v_exp1.eval(s),
            {tc.a_shift.eval(s), tc.b_shift.eval(s), tc.c_shift.eval(s)}};
}

// y, 1-y and x-y at a node of (lo, hi), exact next to whichever end is 0, 1 or x.
struct Coords {
    double y, omy, xmy;
};

struct Range {
    double lo, hi;
    bool x_at_hi;

    Coords at(double y, double dl, double dr) const {
        Coords c{y, 1.0 - y, x_at_hi ? dr : -dl};
        if (lo == 0.0) c.y = dl;
        if (hi == 0.0) c.y = -dr;
        if (hi == 1.0) c.omy = dr;
        if (lo == 1.0) c.omy = -dl;
        return c;
    }
};

// Integration range for the kernel at x. For x0 = -inf the lower end is fixed
// at lo_inf so that it does not move with x.
Range range_at(const TransmutationCase& tc, double x, double lo_inf) {
    if (std::isinf(tc.x0)) return {lo_inf, x, true};
    OpenInterval I = case_interval(tc, x);
    return {I.lo, I.hi, I.hi == x};
}

double exponent_at_x0(const TransmutationCase& tc, const Exponents& e, bool with_w2) {
    if (tc.x0 == 0.0) return e.w0 + (with_w2 ? tc.w2_exp0 : 0);
    if (tc.x0 == 1.0) return e.w1 + (with_w2 ? tc.w2_exp1 : 0);
    return 0.0;
}

QuadResult integrate_range(const Range& r, double exp_x0, double exp_x,
                           std::function<double(const Coords&)> g, double tol) {
    SingularIntegrand f;
    f.core = [r, g = std::move(g)](double y, double dl, double dr) {
        return Scaled(g(r.at(y, dl, dr)));
    };
    f.left_exponent = r.x_at_hi ? exp_x0 : exp_x;
    f.right_exponent = r.x_at_hi ? exp_x : exp_x0;
    return integrate(f, r.lo, r.hi, tol);
}

}  // namespace

IntegralPointResult integral_form(const TransmutationCase& tc, const HypParams& p, double mu,
                                  double x) {
    IntegralPointResult out;
    out.p = p;
    out.mu = mu;
    out.x = x;
    Exponents e = exponents(tc, p, mu);
    double lo_inf = x - kInfiniteSpan;
    Range base = range_at(tc, x, lo_inf);
    out.y0 = 0.5 * (base.lo + base.hi);
    out.sigma = (base.hi - base.lo) / kGaussianWidths;
    SmoothFn f = gaussian_fn(out.y0, out.sigma);
    double omx = 1.0 - x;

    // RHS: integral of (L_{a,b,c} f)(y) w(y)w2(y)/(v(x)v2(x)) |x-y|^{mu-1}
    double vx2 = std::pow(std::fabs(x), e.v0 + tc.v2_exp0) * std::pow(std::fabs(omx), e.v1 + tc.v2_exp1);
    double wy0 = e.w0 + tc.w2_exp0, wy1 = e.w1 + tc.w2_exp1;
    QuadResult rq = integrate_range(
        base, exponent_at_x0(tc, e, true), mu - 1,
        [&](const Coords& c) {
            double k = std::pow(std::fabs(c.y), wy0) * std::pow(std::fabs(c.omy), wy1) *
                       std::pow(std::fabs(c.xmy), mu - 1) / vx2;
            return L_of_jet(p, c.y, f.jet(c.y)) * k;
        },
        kSideTol);
    require_converged(rq);
    out.rhs = rq.value;
    out.err_est = rq.err_est;

    if (mu > 2.0) {
        // K(x, y) vanishes to order mu - 1 > 1 at y = x, so L_x passes under the integral.
        out.method = "direct";
        QuadResult lq = integrate_range(
            base, exponent_at_x0(tc, e, false), mu - 3,
            [&](const Coords& c) {
                return f(c.y) * kernel_terms(tc, p, mu, x, c.y, omx, c.omy, c.xmy).lhs;
            },
            kSideTol);
        require_converged(lq);
        out.lhs = lq.value;
        out.err_est += lq.err_est;
    } else {
        // Write y = x0 + (x - x0) u (or y = x - s when x0 = -inf) so that the range
        // no longer moves with x; then L_x acts on a smooth integrand for any mu > 0.
        out.method = "rescaled";
        Jet vinv = Jet::pow_signed(x, -e.v0) * Jet::pow_signed(-omx, -e.v1);
        // |y - pt|^ex as a jet in x when dy/dx = slope
        auto factor = [](double y_minus_pt, double ex, double slope) {
            return Jet::compose(Jet::pow_signed(y_minus_pt, ex).d, Jet(y_minus_pt, slope));
        };
        QuadResult lq;
        if (std::isinf(tc.x0)) {
            SingularIntegrand g;
            g.core = [&](double s, double, double) {
                double y = x - s;
                Jet j = Jet(f.jet(y)) * factor(y, e.w0, 1.0) * factor(-(omx + s), e.w1, 1.0) * vinv;
                return Scaled(L_of_jet(e.shifted, x, j) * std::pow(s, mu - 1));
            };
            g.left_exponent = mu - 1;
            lq = integrate(g, 0.0, x - lo_inf, kSideTol);
        } else {
            double d = x - tc.x0;
            double w = exponent_at_x0(tc, e, false);
            // the power of |y - x0| becomes |x - x0|^{mu + w} u^w (1-u)^{mu-1}
            Jet scale = Jet::pow_signed(d, mu + w);
            SingularIntegrand g;
            g.core = [&](double u, double, double one_minus_u) {
                double y = tc.x0 + d * u;
                Jet j = Jet::compose(f.jet(y).d, Jet(y, u)) * scale * vinv;
                if (tc.x0 == 0.0) j = j * factor(y - 1.0, e.w1, u);
                else j = j * factor(y, e.w0, u);
                return Scaled(L_of_jet(e.shifted, x, j) * std::pow(u, w) *
                              std::pow(one_minus_u, mu - 1));
            };
            g.left_exponent = w;
            g.right_exponent = mu - 1;
            lq = integrate(g, 0.0, 1.0, kSideTol);
        }
        require_converged(lq);
        out.lhs = lq.value;
        out.err_est += lq.err_est;
    }
    out.rel_diff = std::fabs(out.lhs - out.rhs) / std::fabs(out.rhs);
    return out;
}

TransmutationReport verify_transmutation(const std::string& case_name, const TransmuteOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    const TransmutationCase& tc = find_case(case_name);
    TransmutationReport rep;
    rep.case_name = tc.name;
    rep.tol = opt.tol;
    double itol = opt.integral_tol.value_or(10 * opt.tol);
    rep.integral_tol = itol;
    std::mt19937_64 rng(stream_seed(opt.seed, "transmute:" + tc.name));

    auto draw_x = [&](double min_from_x0) {
        for (;;) {
            const OpenInterval& J = tc.J[std::min<std::size_t>(
                static_cast<std::size_t>(uniform(rng, 0, 1) * tc.J.size()), tc.J.size() - 1)];
            double lo = std::isinf(J.lo) ? -5.0 : J.lo + 0.05;
            double x = uniform(rng, lo, J.hi - 0.05);
            if (std::fabs(x) < 0.05 || std::fabs(1 - x) < 0.05) continue;
            if (!std::isinf(tc.x0) && std::fabs(x - tc.x0) < min_from_x0) continue;
            return x;
        }
    };

    for (int i = 0; i < opt.n_points; ++i) {
        KernelPointResult k;
        k.p = {uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
        k.mu = opt.mu.value_or(uniform(rng, 0.05, 3.0));
        for (;;) {
            k.x = draw_x(0.1);
            OpenInterval I = case_interval(tc, k.x);
            double ilo = std::isinf(I.lo) ? I.hi - 5.0 : I.lo + 0.05;
            double ihi = I.hi - 0.05;
            k.y = uniform(rng, ilo, ihi);
            if (std::fabs(k.y) >= 0.05 && std::fabs(1 - k.y) >= 0.05) break;
        }
        try {
            KernelTerms t = kernel_terms(tc, k.p, k.mu, k.x, k.y);
            k.lhs = t.lhs;
            k.rhs = t.rhs;
            k.residual = std::fabs(t.lhs - t.rhs) / (1 + std::fabs(t.lhs));
            k.pass = k.residual <= opt.tol;
        } catch (const Error& e) {
            k.error_class = e.kind();
            k.residual = std::numeric_limits<double>::infinity();
        }
        if (k.pass) ++rep.kernel_pass;
        rep.worst_kernel = std::fmax(rep.worst_kernel, k.residual);
        rep.kernel.push_back(k);
    }

    double mu = opt.mu.value_or(kDefaultIntegralMu);
    for (int i = 0; i < opt.n_points; ++i) {
        // Rows with x0 = 0 or 1 need e.g. a > mu at the lower end, hence the wide range.
        HypParams p;
        long tries = 0;
        for (;; ++tries) {
            if (tries == kMaxRejections)
                throw SamplerExhaustedError("no integrable parameters for case " + tc.name);
            p = {uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
            Exponents e = exponents(tc, p, mu);
            if (std::isinf(tc.x0) ||
                (exponent_at_x0(tc, e, false) > -0.95 && exponent_at_x0(tc, e, true) > 0.05))
                break;
        }
        double x = draw_x(0.1);
        IntegralPointResult r;
        try {
            r = integral_form(tc, p, mu, x);
            r.pass = r.rel_diff <= itol && r.err_est <= 0.1 * itol * std::fabs(r.rhs);
        } catch (const Error& e) {
            r.p = p;
            r.mu = mu;
            r.x = x;
            r.error_class = e.kind();
            r.error_message = e.what();
            r.rel_diff = std::numeric_limits<double>::infinity();
        }
        if (r.pass) ++rep.integral_pass;
        rep.worst_integral = std::fmax(rep.worst_integral, r.rel_diff);
        rep.integral.push_back(r);
    }
    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

TransmutationReport verify_transmutation(const std::string& case_name, std::uint64_t seed,
                                         int n_points, double tol) {
    TransmuteOptions opt;
    opt.seed = seed;
    opt.n_points = n_points;
    opt.tol = tol;
    return verify_transmutation(case_name, opt);
}

}  // namespace hyptrans
