#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "catalog_internal.hpp"

namespace hyptrans {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

void gamma_numerators(const IntegralSpec& s, std::vector<Affine>& out) {
    for (const auto& e : s.gamma_num) out.push_back(e);
    if (s.nested) gamma_numerators(*s.nested, out);
}

void evaluated_fns(const IntegralSpec& s, std::vector<const FnSpec*>& out) {
    if (s.nested) {
        evaluated_fns(*s.nested, out);
    } else if (s.inner.kind != FnKind::None) {
        out.push_back(&s.inner);
    }
}

bool near_pole(double x, double margin) {
    return x < 0.5 && distance_to_integer(x) < margin;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::string_view key) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

std::optional<std::string> check_params(const IdentitySpec& spec, const SymValues& v,
                                        double margin) {
    for (const auto& c : spec.constraints) {
        double val = c.expr.eval(v);
        if (!(val > margin)) return "constraint " + c.expr.str() + " > 0 not met with margin";
    }
    std::vector<Affine> nums = spec.rhs.gamma_num;
    gamma_numerators(spec.lhs, nums);
    for (const auto& e : nums)
        if (near_pole(e.eval(v), kPoleMargin)) return "gamma argument " + e.str() + " near a pole";

    std::vector<const FnSpec*> fns;
    evaluated_fns(spec.lhs, fns);
    fns.push_back(&spec.rhs.outer);
    for (const FnSpec* f : fns) {
        if (f->kind == FnKind::None) continue;
        if (f->kind == FnKind::Hyp3F2Inv) {
            for (int i = 3; i < 5; ++i)
                if (near_pole(f->params[i].eval(v), kPoleMargin))
                    return "3F2 lower parameter " + f->params[i].str() + " near a pole";
            continue;
        }
        SolutionForm form = solution_form(detail::solution_kind(f->kind), detail::fn_params(*f, v));
        if (near_pole(form.C, kPoleMargin)) return "series parameter c near a pole";
        if (distance_to_integer(form.A - form.B) < kDegeneracyMargin ||
            distance_to_integer(form.C - form.A - form.B) < kDegeneracyMargin)
            return "logarithmic degeneracy in " + to_string(f->kind);
    }
    return std::nullopt;
}

std::optional<std::string> check_x(const IdentitySpec& spec, const SymValues&, double x) {
    bool inside = false;
    for (const auto& iv : spec.x_domain)
        if (iv.contains(x)) inside = true;
    if (!inside) return "x outside the identity's domain";
    if (std::fabs(x) < kXMargin || std::fabs(1.0 - x) < kXMargin) return "x too close to 0 or 1";
    FnKind k = spec.rhs.outer.kind;
    if (k == FnKind::Pure2F1 && !(x < 1.0)) return "x outside the series domain";
    if (k >= FnKind::W1 && k <= FnKind::W6 && !in_domain(detail::solution_kind(k), x))
        return "x outside the solution's domain";
    if (k == FnKind::Hyp3F2Inv && std::fabs(x) <= 1.0) return "3F2 argument 1/x outside the unit disk";
    return std::nullopt;
}

std::vector<ParamPoint> sample_params(const IdentitySpec& spec, std::uint64_t seed, int n,
                                      const SampleOptions& opt) {
    if (n < 1) throw ConstraintError("sample_params needs n >= 1");
    std::mt19937_64 rng(stream_seed(seed, spec.id));
    std::vector<ParamPoint> out;
    for (int i = 0; i < n; ++i) {
        long rejected = 0;
        for (;;) {
            SymValues v{};
            for (Sym s : spec.symbols) {
                int k = static_cast<int>(s);
                if (opt.fixed[k]) {
                    v[k] = *opt.fixed[k];
                } else {
                    v[k] = s == Sym::Mu ? uniform(rng, 0.05, 2.5) : uniform(rng, -3.0, 3.0);
                }
            }
            double x;
            if (opt.fixed_x) {
                x = *opt.fixed_x;
            } else {
                std::size_t j = static_cast<std::size_t>(uniform(rng, 0.0, 1.0) * spec.x_domain.size());
                OpenInterval iv = spec.x_domain[std::min(j, spec.x_domain.size() - 1)];
                double lo = std::fmax(iv.lo, -kXClip) + kXMargin;
                double hi = std::fmin(iv.hi, kXClip) - kXMargin;
                x = uniform(rng, lo, hi);
            }
            if (!check_params(spec, v) && !check_x(spec, v, x)) {
                ParamPoint p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], x};
                out.push_back(p);
                break;
            }
            if (++rejected >= kMaxRejections) {
                std::ostringstream os;
                os << "sampler exhausted for " << spec.id << " after " << rejected << " rejections";
                throw SamplerExhaustedError(os.str());
            }
        }
    }
    return out;
}

}  // namespace hyptrans
