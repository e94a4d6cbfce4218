#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "hyptrans/harness.hpp"

namespace hyptrans {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

PointResult check_point(const IdentitySpec& spec, const ParamPoint& pt, double rel_tol,
                        double quad_tol) {
    PointResult out;
    out.point = pt;
    out.lhs = out.rhs = out.rel_err = out.err_est = kNaN;
    try {
        out.rhs = realize_rhs(spec, pt);
        QuadResult q = integrate_lhs(spec, pt, quad_tol);
        out.lhs = q.value;
        out.err_est = q.err_est;
        if (!std::isfinite(q.value) || !std::isfinite(q.err_est)) {
            out.error_class = "OverflowError";
            out.error_message = "integral is not finite";
            return out;
        }
        out.absolute = std::fabs(out.rhs) < kZeroRhs;
        if (out.absolute) {
            out.rel_err = std::fabs(out.lhs);
            out.pass = out.rel_err <= kZeroLhsTol && out.err_est <= kZeroErrTol;
        } else {
            out.rel_err = std::fabs(out.lhs - out.rhs) / std::fabs(out.rhs);
            out.pass = out.rel_err <= rel_tol && out.err_est <= 0.1 * rel_tol * std::fabs(out.rhs);
        }
        if (!q.converged) {
            out.pass = false;
            out.error_class = "NoConvergenceError";
            out.error_message = "quadrature did not reach the requested tolerance";
        }
    } catch (const Error& e) {
        out.pass = false;
        out.error_class = e.kind();
        out.error_message = e.what();
    } catch (const std::exception& e) {
        out.pass = false;
        out.error_class = "std::exception";
        out.error_message = e.what();
    }
    return out;
}

VerificationReport verify_identity(const IdentitySpec& spec, const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.identity_id = spec.id;
    rep.family = spec.family;
    rep.requested = opt.n_points;
    double qtol = opt.quad_tol ? *opt.quad_tol
                  : spec.family == Family::Composition
                      ? std::fmax(kCompositionQuadTol, default_quad_tol())
                      : default_quad_tol();
    std::vector<ParamPoint> pts;
    try {
        pts = sample_params(spec, opt.seed, opt.n_points, opt.sample);
    } catch (const Error& e) {
        rep.error_class = e.kind();
        rep.error_message = e.what();
        rep.elapsed_s = seconds_since(t0);
        return rep;
    }
    for (const auto& pt : pts) {
        PointResult r = check_point(spec, pt, opt.rel_tol, qtol);
        if (r.pass) ++rep.pass_count;
        if (std::isfinite(r.rel_err)) rep.worst_rel_err = std::fmax(rep.worst_rel_err, r.rel_err);
        else rep.worst_rel_err = std::numeric_limits<double>::infinity();
        rep.points.push_back(std::move(r));
    }
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

VerificationReport verify_identity(const std::string& id, std::uint64_t seed, int n_points,
                                   double rel_tol) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.n_points = n_points;
    opt.rel_tol = rel_tol;
    return verify_identity(find_identity(id), opt);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opt, std::optional<Family> family,
                                           unsigned threads) {
    auto specs = catalog_family(family);
    std::vector<VerificationReport> out(specs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();)
            out[i] = verify_identity(*specs[i], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return out;
}

std::vector<VerificationReport> verify_all(std::uint64_t seed, int n_points, double rel_tol) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.n_points = n_points;
    opt.rel_tol = rel_tol;
    return verify_all(opt);
}

}  // namespace hyptrans
