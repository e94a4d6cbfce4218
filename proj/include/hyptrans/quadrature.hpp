#pragma once

#include <functional>

#include "hyptrans/errors.hpp"
#include "hyptrans/scaled.hpp"

namespace hyptrans {

// Integrand on an interval (m, M). The core receives the abscissa y together
// with its exact distances to both ends (infinite for an infinite end), so
// factors like |y - m|^alpha keep full accuracy next to an endpoint.
// The exponents describe the local behaviour and are checked for integrability.
struct SingularIntegrand {
    std::function<Scaled(double y, double dist_left, double dist_right)> core;
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    double decay_exponent = -2.0;
    // Core values are divided by exp(log_ref); lets callers integrate functions
    // whose magnitude is outside the double range (see QuadResult::log_ref).
    double log_ref = 0.0;
    // Optional: error bound of the value core just returned (same units). The
    // quadrature sum of these bounds is added to err_est.
    std::function<Scaled()> last_error;

    static SingularIntegrand plain(std::function<double(double)> f, double left_exponent = 0.0,
                                   double right_exponent = 0.0, double decay_exponent = -2.0);
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    double l1 = 0.0;  // estimate of the integral of |f|
    int level = 0;
    long evaluations = 0;
    bool converged = false;
    // value, err_est and l1 are in units of exp(log_ref). Starts at the
    // integrand's log_ref and is raised if a term would overflow.
    double log_ref = 0.0;
};

inline constexpr int kMaxLevel = 12;
inline constexpr int kMinLevel = 5;
inline constexpr double kAbsFloor = 1e-300;
inline constexpr double kDefaultQuadTol = 1e-10;

// kDefaultQuadTol unless HYPTRANS_QUAD_TOL holds a positive number.
double default_quad_tol();

enum class Direction { PlusInfinity, MinusInfinity };

// tanh-sinh on (m, M)
QuadResult integrate_finite(const SingularIntegrand& f, double m, double M, double rel_tol);
// exp-sinh on (finite_end, +inf) or (-inf, finite_end)
QuadResult integrate_semi_infinite(const SingularIntegrand& f, double finite_end, Direction dir,
                                   double rel_tol);
// Dispatches on which bounds are infinite; (-inf, inf) is split at 0.
QuadResult integrate(const SingularIntegrand& f, double lo, double hi, double rel_tol);

// Throws NoConvergenceError (carrying the estimate) unless r.converged.
const QuadResult& require_converged(const QuadResult& r);

}  // namespace hyptrans
