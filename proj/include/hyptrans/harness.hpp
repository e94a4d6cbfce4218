#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyptrans/catalog.hpp"
#include "hyptrans/diffop.hpp"

namespace hyptrans {

inline constexpr int kReportVersion = 1;

// Below this |rhs| the comparison is absolute (rhs vanishes through 1/Gamma(1-mu)).
inline constexpr double kZeroRhs = 1e-10;
inline constexpr double kZeroLhsTol = 1e-8;
inline constexpr double kZeroErrTol = 1e-9;
// Nested quadrature is run at this tolerance for compositions.
inline constexpr double kCompositionQuadTol = 1e-8;

struct PointResult {
    ParamPoint point;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;  // |lhs - rhs| / |rhs|, or |lhs| on the absolute branch
    double err_est = 0.0;
    bool absolute = false;
    bool pass = false;
    std::string error_class;  // empty unless evaluation threw
    std::string error_message;
};

struct VerificationReport {
    std::string identity_id;
    Family family = Family::FracI;
    int requested = 0;
    std::vector<PointResult> points;
    int pass_count = 0;
    double worst_rel_err = 0.0;
    double elapsed_s = 0.0;
    // Set when no points could be produced (sampler exhausted).
    std::string error_class;
    std::string error_message;

    bool passed() const { return error_class.empty() && pass_count == requested; }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int n_points = 5;
    double rel_tol = 1e-6;
    // Quadrature tolerance; default_quad_tol(), or kCompositionQuadTol for compositions.
    std::optional<double> quad_tol;
    SampleOptions sample;
};

// Compares lhs and rhs at one point. Never throws for numerical failures.
PointResult check_point(const IdentitySpec& spec, const ParamPoint& pt, double rel_tol,
                        double quad_tol);

VerificationReport verify_identity(const IdentitySpec& spec, const VerifyOptions& opt);
VerificationReport verify_identity(const std::string& id, std::uint64_t seed, int n_points,
                                   double rel_tol);

// Identities run concurrently (threads = 0: hardware concurrency); reports come
// back in catalog order.
std::vector<VerificationReport> verify_all(const VerifyOptions& opt,
                                           std::optional<Family> family = std::nullopt,
                                           unsigned threads = 0);
std::vector<VerificationReport> verify_all(std::uint64_t seed, int n_points, double rel_tol);

// ---- transmutation ----

inline constexpr double kDefaultIntegralMu = 2.5;

struct KernelPointResult {
    HypParams p;
    double mu = 0.0, x = 0.0, y = 0.0;
    double lhs = 0.0, rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs| / (1 + |lhs|)
    bool pass = false;
    std::string error_class;
};

struct IntegralPointResult {
    HypParams p;
    double mu = 0.0, x = 0.0;
    double y0 = 0.0, sigma = 0.0;  // Gaussian test function
    double lhs = 0.0, rhs = 0.0;
    double rel_diff = 0.0;
    double err_est = 0.0;
    // "direct": L_x moved under the integral (mu > 2);
    // "rescaled": y = x0 + (x - x0) u first, valid for any mu > 0.
    std::string method;
    bool pass = false;
    std::string error_class;
    std::string error_message;
};

struct TransmutationReport {
    std::string case_name;
    double tol = 0.0;           // kernel residual
    double integral_tol = 0.0;  // relative difference of the integral form
    std::vector<KernelPointResult> kernel;
    std::vector<IntegralPointResult> integral;
    int kernel_pass = 0;
    int integral_pass = 0;
    double worst_kernel = 0.0;
    double worst_integral = 0.0;
    double elapsed_s = 0.0;

    bool passed() const {
        return kernel_pass == static_cast<int>(kernel.size()) &&
               integral_pass == static_cast<int>(integral.size());
    }
};

struct TransmuteOptions {
    std::uint64_t seed = 42;
    int n_points = 20;
    double tol = 1e-8;               // kernel check; the integral form uses 10 * tol
    std::optional<double> mu;        // pins mu in both checks
    std::optional<double> integral_tol;  // overrides 10 * tol
};

// Sides of the integral form at one point, with f the Gaussian centred in the
// effective interval. Throws on quadrature failure.
IntegralPointResult integral_form(const TransmutationCase& tc, const HypParams& p, double mu,
                                  double x);

TransmutationReport verify_transmutation(const std::string& case_name, const TransmuteOptions& opt);
TransmutationReport verify_transmutation(const std::string& case_name, std::uint64_t seed,
                                         int n_points, double tol);

// ---- output ----

enum class Format { Json, Csv, Table };
std::optional<Format> parse_format(std::string_view s);

struct ReportMeta {
    std::uint64_t seed = 42;
    double rel_tol = 1e-6;
    double quad_tol = kDefaultQuadTol;
    bool timing = false;  // include elapsed times (breaks byte-identical output)
};

std::string render(const std::vector<VerificationReport>& reports, const ReportMeta& meta,
                   Format fmt);
std::string render(const TransmutationReport& report, const ReportMeta& meta, Format fmt);
std::string render_catalog_list(const std::vector<const IdentitySpec*>& specs, Format fmt);

}  // namespace hyptrans
