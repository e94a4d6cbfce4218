#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "hyptrans/catalog.hpp"

namespace hyptrans::testing {

// y = x t maps |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1} over one range onto
// |t|^{a'-c'}|1-t|^{c'-b'-1}|x'-t|^{-a'} with (a', b', c') = (a, a-c+1, a-b+1), x' = 1/x:
//   I_first(a, b, c; x) = |x|^{c-a-1} I_second(a', b', c'; 1/x).
inline constexpr std::pair<const char*, const char*> kEulerPairs[] = {
    {"E-W1", "E-W3b"}, {"E-W2", "E-W4b"}, {"E-W3", "E-W1b"},
    {"E-W4", "E-W2b"}, {"E-W5", "E-W5b"}, {"E-W6", "E-W6b"},
};

inline ParamPoint euler_partner(const ParamPoint& p) {
    ParamPoint q = p;
    q.b = p.a - p.c + 1;
    q.c = p.a - p.b + 1;
    q.x = 1.0 / p.x;
    return q;
}

inline double euler_partner_factor(const ParamPoint& p) {
    return std::pow(std::fabs(p.x), p.c - p.a - 1);
}

// The partner point when it satisfies the partner's constraints and domain.
inline std::optional<ParamPoint> admissible_partner(const IdentitySpec& second, const ParamPoint& p) {
    ParamPoint q = euler_partner(p);
    if (check_params(second, q.values()) || check_x(second, q.values(), q.x)) return std::nullopt;
    return q;
}

}  // namespace hyptrans::testing
