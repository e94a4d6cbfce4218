#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyptrans/affine.hpp"
#include "hyptrans/quadrature.hpp"
#include "hyptrans/solutions.hpp"

namespace hyptrans {

enum class Family { FracI, FracII, FracIII, WTransform, Stieltjes, Euler, Composition, KarpSitnik };
inline constexpr Family kAllFamilies[] = {Family::FracI,     Family::FracII,      Family::FracIII,
                                          Family::WTransform, Family::Stieltjes,  Family::Euler,
                                          Family::Composition, Family::KarpSitnik};

std::string to_string(Family f);
// Case-insensitive; ignores '-' and '_' ("frac-i", "karp_sitnik", "Stieltjes").
std::optional<Family> parse_family(std::string_view name);

// A function factor: a solution, the plain series, or 3F2 at 1/x.
enum class FnKind { None, Pure2F1, W1, W2, W3, W4, W5, W6, Hyp3F2Inv };

struct FnSpec {
    FnKind kind = FnKind::None;
    std::vector<Affine> params;  // (a', b', c'), or (a, b, c, d, e) for Hyp3F2Inv
};

std::string to_string(FnKind k);

// Shapes of the integration interval; x is the free variable of the identity.
enum class Shape {
    Fixed,    // (lo, hi)
    ZeroX,    // 0 < y/x < 1
    XInf,     // y/x > 1
    XOne,     // 0 < (1-y)/(1-x) < 1
    NegInfX,  // (-inf, x)
    XPosInf,  // (x, inf)
};

struct IntervalSpec {
    Shape shape = Shape::Fixed;
    double lo = 0.0;
    double hi = 0.0;
};

std::string to_string(const IntervalSpec& iv);
OpenInterval resolve(const IntervalSpec& iv, double x);

// C * |x|^{x_exp} |1-x|^{one_minus_x_exp} * outer(x), C a ratio of gammas.
struct ClosedFormSpec {
    std::vector<Affine> gamma_num;
    std::vector<Affine> gamma_den;
    Affine x_exp;
    Affine one_minus_x_exp;
    FnSpec outer;
};

// Integral over the interval of |y|^{y_exp} |1-y|^{one_minus_y_exp} |x-y|^{kernel_exp}
// times the inner factor, times prod Gamma(gamma_num) and 1/Gamma(mu) if requested.
struct IntegralSpec {
    IntervalSpec interval;
    Affine y_exp;
    Affine one_minus_y_exp;
    Affine kernel_exp;
    FnSpec inner;
    bool normalize_by_gamma_mu = false;
    std::vector<Affine> gamma_num;
    // Composition: the inner factor is this integral with its x set to y.
    std::shared_ptr<const IntegralSpec> nested;
    // Closed form of the nested integral; used only for its endpoint exponents.
    std::shared_ptr<const ClosedFormSpec> nested_equiv;
};

// Strict inequality expr > 0.
struct Constraint {
    Affine expr;
    bool derived = false;  // from endpoint integrability rather than stated with the formula
};

struct IdentitySpec {
    std::string id;
    std::string tag;  // short human description of the source formula
    Family family;
    IntegralSpec lhs;
    ClosedFormSpec rhs;
    std::vector<Constraint> constraints;
    std::vector<OpenInterval> x_domain;
    std::vector<Sym> symbols;  // parameters used besides x
};

const std::vector<IdentitySpec>& catalog();
const IdentitySpec& find_identity(std::string_view id);  // UnknownIdentityError
std::vector<const IdentitySpec*> catalog_family(std::optional<Family> f);

struct ParamPoint {
    double a = 0, b = 0, c = 0, mu = 0, nu = 0, d = 0, e = 0;
    double x = 0;
    SymValues values() const { return {a, b, c, mu, nu, d, e}; }
};

// ---- sampling ----

inline constexpr double kConstraintMargin = 0.05;
inline constexpr double kPoleMargin = 1e-3;
inline constexpr double kDegeneracyMargin = 0.05;
inline constexpr double kXMargin = 0.02;
inline constexpr double kXClip = 10.0;
inline constexpr long kMaxRejections = 100000;

struct SampleOptions {
    // Pin a symbol to a value instead of drawing it.
    std::array<std::optional<double>, kNumSyms> fixed{};
    std::optional<double> fixed_x;
};

// Why a parameter point is unacceptable, or nullopt when it is fine.
std::optional<std::string> check_params(const IdentitySpec& spec, const SymValues& v,
                                        double margin = kConstraintMargin);
std::optional<std::string> check_x(const IdentitySpec& spec, const SymValues& v, double x);

// Seed of the random stream belonging to key (an identity id, a case name).
std::uint64_t stream_seed(std::uint64_t seed, std::string_view key);

std::vector<ParamPoint> sample_params(const IdentitySpec& spec, std::uint64_t seed, int n,
                                      const SampleOptions& opt = {});

// ---- realization ----

// One piece of the integration range in local coordinates: y = shift + scale * t,
// t in (lo, hi). The shift is 1 next to y = 1 so that 1 - y keeps full accuracy
// there; finite pieces are scaled to unit length. f includes the Jacobian and
// reports in units of exp(f.log_ref).
struct LhsPiece {
    SingularIntegrand f;
    double lo, hi;
    double shift = 0.0;
    double scale = 1.0;
};

struct RealizedLhs {
    std::vector<LhsPiece> pieces;
    double factor = 1.0;  // gamma normalization, applied after integration
};

// Pieces are split at interior 0 and 1. Endpoint exponents take the smallest
// candidate at finite points and the largest at infinity.
RealizedLhs realize_lhs(const IdentitySpec& spec, const ParamPoint& pt, double inner_tol = 1e-12);
double realize_rhs(const IdentitySpec& spec, const ParamPoint& pt);

QuadResult integrate_lhs(const IdentitySpec& spec, const ParamPoint& pt, double rel_tol);

// One integral side alone at a parameter vector and x; one_minus_x must equal 1 - x.
QuadResult integrate_spec(const IntegralSpec& spec, const SymValues& v, double x,
                          double one_minus_x, double rel_tol, double inner_tol = 1e-12);

// ---- export ----

inline constexpr int kCatalogSchemaVersion = 1;
std::string export_catalog_json();

}  // namespace hyptrans
