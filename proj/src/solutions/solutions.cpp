#include "hyptrans/solutions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hyptrans {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<OpenInterval> domain_of(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::W1: return {{-kInf, 1.0}};
        case SolutionKind::W2: return {{-kInf, 0.0}, {0.0, 1.0}};
        case SolutionKind::W3:
        case SolutionKind::W4: return {{-kInf, 0.0}, {1.0, kInf}};
        case SolutionKind::W5: return {{0.0, kInf}};
        case SolutionKind::W6: return {{0.0, 1.0}, {1.0, kInf}};
    }
    return {};
}

bool in_domain(SolutionKind kind, double x) {
    for (const auto& iv : domain_of(kind))
        if (iv.contains(x)) return true;
    return false;
}

std::string to_string(SolutionKind kind) {
    return "W" + std::to_string(static_cast<int>(kind) + 1);
}

std::optional<SolutionKind> parse_kind(std::string_view name) {
    if (name.size() == 2 && (name[0] == 'W' || name[0] == 'w') && name[1] >= '1' && name[1] <= '6')
        return static_cast<SolutionKind>(name[1] - '1');
    return std::nullopt;
}

SolutionForm solution_form(SolutionKind kind, const HypParams& p) {
    const double a = p.a, b = p.b, c = p.c;
    switch (kind) {
        case SolutionKind::W1: return {0.0, 0.0, a, b, c, ArgMap::X};
        case SolutionKind::W2: return {1.0 - c, 0.0, a - c + 1.0, b - c + 1.0, 2.0 - c, ArgMap::X};
        case SolutionKind::W3: return {-a, 0.0, a, a - c + 1.0, a - b + 1.0, ArgMap::InvX};
        case SolutionKind::W4: return {-b, 0.0, b, b - c + 1.0, b - a + 1.0, ArgMap::InvX};
        case SolutionKind::W5: return {0.0, 0.0, a, b, a + b - c + 1.0, ArgMap::OneMinusX};
        case SolutionKind::W6:
            return {0.0, c - a - b, c - a, c - b, c - a - b + 1.0, ArgMap::OneMinusX};
    }
    return {};
}

Scaled eval_w_scaled(SolutionKind kind, double x, double omx, const HypParams& p) {
    SolutionForm f = solution_form(kind, p);
    double z, omz;
    switch (f.arg) {
        case ArgMap::X: z = x; omz = omx; break;
        case ArgMap::InvX: z = 1.0 / x; omz = -omx / x; break;
        default: z = omx; omz = x; break;
    }
    Scaled v = hyp2f1_scaled(f.A, f.B, f.C, z, omz);
    if (f.exp0 != 0.0) v *= Scaled::pow_abs(x, f.exp0);
    if (f.exp1 != 0.0) v *= Scaled::pow_abs(omx, f.exp1);
    return v;
}

double eval_w(SolutionKind kind, double x, const HypParams& p) {
    if (!in_domain(kind, x)) {
        std::ostringstream os;
        os << to_string(kind) << " evaluated outside its domain at x=" << x;
        throw DomainError(os.str());
    }
    for (const auto& iv : domain_of(kind)) {
        if (!iv.contains(x)) continue;
        bool near_lo = std::isfinite(iv.lo) && x - iv.lo < kSingularGuard;
        bool near_hi = std::isfinite(iv.hi) && iv.hi - x < kSingularGuard;
        if (near_lo || near_hi) {
            std::ostringstream os;
            os << to_string(kind) << " too close to a singular point at x=" << x;
            throw DomainError(os.str());
        }
    }
    return eval_w_scaled(kind, x, 1.0 - x, p).value();
}

Jet eval_w_jet(SolutionKind kind, double x, const HypParams& p, int order) {
    SolutionForm f = solution_form(kind, p);
    double omx = 1.0 - x;
    Jet g;
    double z, omz;
    switch (f.arg) {
        case ArgMap::X:
            g = Jet::variable(x);
            z = x; omz = omx;
            break;
        case ArgMap::InvX: {
            double r = 1.0 / x;
            g = Jet(r, -r * r, 2 * r * r * r, -6 * r * r * r * r);
            z = r; omz = -omx / x;
            break;
        }
        default:
            g = Jet(omx, -1.0);
            z = omx; omz = x;
            break;
    }
    auto fj = hyp2f1_jet(f.A, f.B, f.C, z, omz, order);
    std::array<double, 4> h{};
    for (int i = 0; i <= order && i < 4; ++i) h[i] = fj[i].value();
    Jet out = Jet::compose(h, g);
    if (f.exp0 != 0.0) out = Jet::pow_abs(x, 0.0, f.exp0) * out;
    if (f.exp1 != 0.0) out = Jet::pow_abs(x, 1.0, f.exp1) * out;
    return out;
}

}  // namespace hyptrans
