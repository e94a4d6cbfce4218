#include "hyptrans/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

namespace hyptrans {

namespace {

constexpr double kPiHalf = std::numbers::pi / 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
// Abscissae closer than this to a finite end are dropped.
constexpr double kTinyDistance = 1e-300;
// exp-sinh keeps e^u within (kTinyDistance, e^kMaxLogDistance).
constexpr double kMaxLogDistance = 690.0;
constexpr double kStep0 = 8.0;
constexpr double kRescaleLog = 300.0;

struct Node {
    double y, dl, dr, log_w;
};

double log_cosh(double u) {
    double a = std::fabs(u);
    return a + std::log1p(std::exp(-2 * a)) - std::numbers::ln2;
}

// Returns false once t lies past the representable end of the transform.
using NodeFn = bool (*)(double t, double m, double M, Node& out);

bool tanh_sinh_node(double t, double m, double M, Node& n) {
    double L = M - m;
    double u = kPiHalf * std::sinh(t);
    double e = std::exp(-2 * std::fabs(u));
    double near = L * e / (1 + e);
    double far = L / (1 + e);
    if (!(near > kTinyDistance)) return false;
    n.dl = u >= 0 ? far : near;
    n.dr = u >= 0 ? near : far;
    n.y = n.dl <= n.dr ? m + n.dl : M - n.dr;
    n.log_w = std::log(L / 2 * kPiHalf * std::cosh(t)) - 2 * log_cosh(u);
    return true;
}

bool exp_sinh_plus_node(double t, double m, double, Node& n) {
    double u = kPiHalf * std::sinh(t);
    if (u > kMaxLogDistance || std::exp(u) < kTinyDistance) return false;
    n.dl = std::exp(u);
    n.dr = kInf;
    n.y = m + n.dl;
    n.log_w = u + std::log(kPiHalf * std::cosh(t));
    return true;
}

bool exp_sinh_minus_node(double t, double, double M, Node& n) {
    double u = kPiHalf * std::sinh(t);
    if (u > kMaxLogDistance || std::exp(u) < kTinyDistance) return false;
    n.dr = std::exp(u);
    n.dl = kInf;
    n.y = M - n.dr;
    n.log_w = u + std::log(kPiHalf * std::cosh(t));
    return true;
}

struct Side {
    double t_out = 0.0, outer = 0.0, inner = 0.0;
    int count = 0;
    void rescale(double k) {
        outer *= k;
        inner *= k;
    }
    void push(double t, double mag) {
        inner = outer;
        outer = mag;
        t_out = t;
        ++count;
    }
    // Rough integral of the dropped tail beyond the last node.
    double tail(double spacing) const {
        if (outer == 0.0 || count < 2) return 0.0;
        if (inner > 0.0) {
            double slope = (std::log(inner) - std::log(outer)) / spacing;
            if (slope > 0.5) return outer / slope;
        }
        return outer * (1.0 + std::fabs(t_out));
    }
};

QuadResult run_de(const SingularIntegrand& f, double m, double M, NodeFn node_fn,
                  double rel_tol) {
    QuadResult res;
    double raw = 0.0, raw_abs = 0.0, raw_err = 0.0, prev = 0.0;
    double ref = f.log_ref;
    for (int level = 0; level <= kMaxLevel; ++level) {
        double h = kStep0 * std::ldexp(1.0, -level);
        int stride = level == 0 ? 1 : 2;
        int first = level == 0 ? 0 : 1;
        Side sides[2];
        for (int dir = 0; dir < 2; ++dir) {
            double sgn = dir == 0 ? 1.0 : -1.0;
            for (long k = first;; k += stride) {
                if (k == 0 && dir == 1) continue;
                double t = sgn * k * h;
                Node n;
                if (!node_fn(t, m, M, n)) break;
                Scaled v = f.core(n.y, n.dl, n.dr);
                ++res.evaluations;
                double term = 0.0;
                if (!v.is_zero()) {
                    double lt = std::log(std::fabs(v.mant)) + v.scale + n.log_w - ref;
                    if (lt > kRescaleLog) {
                        // move the unit up so the running sums stay in range
                        double k = std::exp(-lt);
                        raw *= k, raw_abs *= k, raw_err *= k, prev *= k;
                        sides[0].rescale(k), sides[1].rescale(k);
                        ref += lt;
                    }
                    term = v.mant * std::exp(v.scale + n.log_w - ref);
                }
                if (!std::isfinite(term)) {
                    std::ostringstream os;
                    os << "non-finite integrand value at y=" << n.y;
                    throw DomainError(os.str());
                }
                raw += term;
                raw_abs += std::fabs(term);
                if (f.last_error) {
                    Scaled e = f.last_error();
                    if (!e.is_zero()) raw_err += std::fabs(e.mant) * std::exp(e.scale + n.log_w - ref);
                }
                if (k != 0) sides[dir].push(t, std::fabs(term));
            }
        }
        double s = h * raw;
        double l1 = h * raw_abs;
        double trunc = sides[0].tail(stride * h) + sides[1].tail(stride * h);
        double err = (level == 0 ? std::fabs(s) : std::fabs(s - prev)) + trunc;
        res.value = s;
        res.log_ref = ref;
        res.l1 = l1;
        res.level = level;
        res.err_est = err + 16 * kEps * l1 + h * raw_err;
        prev = s;
        double target = std::fmax(rel_tol * std::fabs(s), std::fmax(kAbsFloor, 32 * kEps * l1));
        if (level >= kMinLevel && err <= target) {
            res.converged = true;
            return res;
        }
    }
    return res;
}

void check_exponents(const SingularIntegrand& f, bool left_finite, bool right_finite) {
    auto fail = [](const char* what, double e) {
        std::ostringstream os;
        os << what << " exponent " << e << " makes the integral divergent";
        throw NonIntegrableError(os.str());
    };
    if (left_finite && !(f.left_exponent > -1.0)) fail("left", f.left_exponent);
    if (right_finite && !(f.right_exponent > -1.0)) fail("right", f.right_exponent);
    if ((!left_finite || !right_finite) && !(f.decay_exponent < -1.0)) fail("decay", f.decay_exponent);
    if (!f.core) throw DomainError("integrand has no core function");
}

}  // namespace

SingularIntegrand SingularIntegrand::plain(std::function<double(double)> fn, double left_exponent,
                                           double right_exponent, double decay_exponent) {
    SingularIntegrand s;
    s.core = [fn = std::move(fn)](double y, double, double) { return Scaled(fn(y)); };
    s.left_exponent = left_exponent;
    s.right_exponent = right_exponent;
    s.decay_exponent = decay_exponent;
    return s;
}

double default_quad_tol() {
    if (const char* env = std::getenv("HYPTRANS_QUAD_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return kDefaultQuadTol;
}

QuadResult integrate_finite(const SingularIntegrand& f, double m, double M, double rel_tol) {
    if (!(std::isfinite(m) && std::isfinite(M) && m < M))
        throw DomainError("integrate_finite requires finite m < M");
    check_exponents(f, true, true);
    return run_de(f, m, M, tanh_sinh_node, rel_tol);
}

QuadResult integrate_semi_infinite(const SingularIntegrand& f, double finite_end, Direction dir,
                                   double rel_tol) {
    if (!std::isfinite(finite_end)) throw DomainError("integrate_semi_infinite needs a finite end");
    if (dir == Direction::PlusInfinity) {
        check_exponents(f, true, false);
        return run_de(f, finite_end, kInf, exp_sinh_plus_node, rel_tol);
    }
    check_exponents(f, false, true);
    return run_de(f, -kInf, finite_end, exp_sinh_minus_node, rel_tol);
}

QuadResult integrate(const SingularIntegrand& f, double lo, double hi, double rel_tol) {
    if (!(lo < hi)) throw DomainError("integrate requires lo < hi");
    bool lo_inf = std::isinf(lo), hi_inf = std::isinf(hi);
    if (!lo_inf && !hi_inf) return integrate_finite(f, lo, hi, rel_tol);
    if (lo_inf && !hi_inf) return integrate_semi_infinite(f, hi, Direction::MinusInfinity, rel_tol);
    if (!lo_inf && hi_inf) return integrate_semi_infinite(f, lo, Direction::PlusInfinity, rel_tol);
    QuadResult a = integrate_semi_infinite(f, 0.0, Direction::MinusInfinity, rel_tol);
    QuadResult b = integrate_semi_infinite(f, 0.0, Direction::PlusInfinity, rel_tol);
    QuadResult r;
    r.log_ref = std::fmax(a.log_ref, b.log_ref);
    double ka = std::exp(a.log_ref - r.log_ref), kb = std::exp(b.log_ref - r.log_ref);
    r.value = ka * a.value + kb * b.value;
    r.err_est = ka * a.err_est + kb * b.err_est;
    r.l1 = ka * a.l1 + kb * b.l1;
    r.level = std::max(a.level, b.level);
    r.evaluations = a.evaluations + b.evaluations;
    r.converged = a.converged && b.converged;
    return r;
}

const QuadResult& require_converged(const QuadResult& r) {
    if (!r.converged) {
        std::ostringstream os;
        os << "quadrature did not converge: value " << r.value << ", error estimate " << r.err_est;
        throw NoConvergenceError(os.str(), r.value, r.err_est);
    }
    return r;
}

}  // namespace hyptrans
