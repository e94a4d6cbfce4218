#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "catalog_internal.hpp"

namespace hyptrans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string normalize_name(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (ch != '-' && ch != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::FracI: return "FracI";
        case Family::FracII: return "FracII";
        case Family::FracIII: return "FracIII";
        case Family::WTransform: return "WTransform";
        case Family::Stieltjes: return "Stieltjes";
        case Family::Euler: return "Euler";
        case Family::Composition: return "Composition";
        case Family::KarpSitnik: return "KarpSitnik";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    std::string n = normalize_name(name);
    for (Family f : kAllFamilies)
        if (normalize_name(to_string(f)) == n) return f;
    return std::nullopt;
}

std::string to_string(FnKind k) {
    switch (k) {
        case FnKind::None: return "None";
        case FnKind::Pure2F1: return "2F1";
        case FnKind::W1: return "w1";
        case FnKind::W2: return "w2";
        case FnKind::W3: return "w3";
        case FnKind::W4: return "w4";
        case FnKind::W5: return "w5";
        case FnKind::W6: return "w6";
        case FnKind::Hyp3F2Inv: return "3F2(1/x)";
    }
    return "?";
}

std::string to_string(const IntervalSpec& iv) {
    auto bound = [](double v) {
        if (std::isinf(v)) return std::string(v < 0 ? "-inf" : "inf");
        std::ostringstream os;
        os << v;
        return os.str();
    };
    switch (iv.shape) {
        case Shape::Fixed: return "(" + bound(iv.lo) + "," + bound(iv.hi) + ")";
        case Shape::ZeroX: return "0<y/x<1";
        case Shape::XInf: return "y/x>1";
        case Shape::XOne: return "0<(1-y)/(1-x)<1";
        case Shape::NegInfX: return "(-inf,x)";
        case Shape::XPosInf: return "(x,inf)";
    }
    return "?";
}

OpenInterval resolve(const IntervalSpec& iv, double x) {
    auto need = [&](bool ok) {
        if (!ok) {
            std::ostringstream os;
            os << "interval " << to_string(iv) << " is empty at x=" << x;
            throw DomainError(os.str());
        }
    };
    switch (iv.shape) {
        case Shape::Fixed: return {iv.lo, iv.hi};
        case Shape::ZeroX:
            need(x != 0.0);
            return x > 0 ? OpenInterval{0.0, x} : OpenInterval{x, 0.0};
        case Shape::XInf:
            need(x < 0.0 || x > 1.0);
            return x > 0 ? OpenInterval{x, kInf} : OpenInterval{-kInf, x};
        case Shape::XOne:
            need(x != 1.0);
            return x < 1 ? OpenInterval{x, 1.0} : OpenInterval{1.0, x};
        case Shape::NegInfX: return {-kInf, x};
        case Shape::XPosInf: return {x, kInf};
    }
    return {0, 0};
}

namespace detail {

SolutionKind solution_kind(FnKind k) {
    switch (k) {
        case FnKind::W2: return SolutionKind::W2;
        case FnKind::W3: return SolutionKind::W3;
        case FnKind::W4: return SolutionKind::W4;
        case FnKind::W5: return SolutionKind::W5;
        case FnKind::W6: return SolutionKind::W6;
        default: return SolutionKind::W1;
    }
}

HypParams fn_params(const FnSpec& fn, const SymValues& v) {
    return {fn.params[0].eval(v), fn.params[1].eval(v), fn.params[2].eval(v)};
}

std::vector<Affine> fn_exponents(const FnSpec& fn, Point p) {
    if (fn.kind == FnKind::None || fn.kind == FnKind::Hyp3F2Inv) return {0};
    const Affine &A = fn.params[0], &B = fn.params[1], &C = fn.params[2];
    const Affine one(1);
    switch (p) {
        case Point::Zero:
            if (fn.kind == FnKind::W1 || fn.kind == FnKind::Pure2F1) return {0};
            if (fn.kind == FnKind::W2) return {one - C};
            return {0, one - C};
        case Point::One:
            if (fn.kind == FnKind::W5) return {0};
            if (fn.kind == FnKind::W6) return {C - A - B};
            return {0, C - A - B};
        case Point::Infinity:
            if (fn.kind == FnKind::W3) return {-A};
            if (fn.kind == FnKind::W4) return {-B};
            return {-A, -B};
    }
    return {0};
}

std::vector<Affine> inner_exponents(const IntegralSpec& spec, Point p) {
    if (!spec.nested_equiv) return fn_exponents(spec.inner, p);
    const ClosedFormSpec& eq = *spec.nested_equiv;
    Affine shift = p == Point::Zero ? eq.x_exp
                   : p == Point::One ? eq.one_minus_x_exp
                                     : eq.x_exp + eq.one_minus_x_exp;
    std::vector<Affine> out;
    for (const Affine& e : fn_exponents(eq.outer, p)) out.push_back(shift + e);
    return out;
}

double representative(const OpenInterval& iv) {
    double lo = std::isinf(iv.lo) ? std::fmin(-kXClip, iv.hi - 1.0) : iv.lo;
    double hi = std::isinf(iv.hi) ? std::fmax(kXClip, iv.lo + 1.0) : iv.hi;
    return 0.5 * (lo + hi);
}

namespace {

// Integrability of spec at x: exponent + 1 > 0 at finite singular points, and
// -1 - (total power) > 0 at an infinite end. Recurses into a nested integral
// with its x at a point of each piece.
void derive(const IntegralSpec& s, double x, std::vector<Affine>& out) {
    OpenInterval iv = resolve(s.interval, x);
    std::vector<double> cuts{iv.lo};
    for (double p : {0.0, 1.0})
        if (iv.lo < p && p < iv.hi) cuts.push_back(p);
    cuts.push_back(iv.hi);

    const Affine one(1);
    auto at_finite = [&](double p) {
        if (p == 0.0) {
            for (const Affine& e : inner_exponents(s, Point::Zero)) out.push_back(s.y_exp + e + one);
        } else if (p == 1.0) {
            for (const Affine& e : inner_exponents(s, Point::One))
                out.push_back(s.one_minus_y_exp + e + one);
        } else if (p == x) {
            out.push_back(s.kernel_exp + one);
        }
    };
    for (double p : cuts) {
        if (std::isinf(p)) {
            Affine total = s.y_exp + s.one_minus_y_exp + s.kernel_exp;
            for (const Affine& e : inner_exponents(s, Point::Infinity))
                out.push_back(Affine(-1) - total - e);
        } else {
            at_finite(p);
        }
    }
    if (s.nested)
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            derive(*s.nested, representative({cuts[i], cuts[i + 1]}), out);
}

void collect(const Affine& e, std::array<bool, kNumSyms>& used) {
    for (int i = 0; i < kNumSyms; ++i)
        if (e.coef[i] != 0) used[i] = true;
}

void collect(const FnSpec& f, std::array<bool, kNumSyms>& used) {
    for (const auto& e : f.params) collect(e, used);
}

void collect(const ClosedFormSpec& c, std::array<bool, kNumSyms>& used) {
    for (const auto& e : c.gamma_num) collect(e, used);
    for (const auto& e : c.gamma_den) collect(e, used);
    collect(c.x_exp, used);
    collect(c.one_minus_x_exp, used);
    collect(c.outer, used);
}

void collect(const IntegralSpec& s, std::array<bool, kNumSyms>& used) {
    collect(s.y_exp, used);
    collect(s.one_minus_y_exp, used);
    collect(s.kernel_exp, used);
    collect(s.inner, used);
    for (const auto& e : s.gamma_num) collect(e, used);
    if (s.normalize_by_gamma_mu) used[static_cast<int>(Sym::Mu)] = true;
    if (s.nested) collect(*s.nested, used);
    if (s.nested_equiv) collect(*s.nested_equiv, used);
}

void finalize(IdentitySpec& spec) {
    std::vector<Affine> derived;
    for (const auto& iv : spec.x_domain) derive(spec.lhs, representative(iv), derived);
    for (const Affine& e : derived) {
        if (e.coef == std::array<int, kNumSyms>{}) {
            if (e.constant > 0) continue;
            throw ConstraintError("identity " + spec.id + " is never integrable: " + e.str() + " > 0");
        }
        bool known = std::any_of(spec.constraints.begin(), spec.constraints.end(),
                                 [&](const Constraint& c) { return c.expr == e; });
        if (!known) spec.constraints.push_back({e, true});
    }
    std::array<bool, kNumSyms> used{};
    collect(spec.lhs, used);
    collect(spec.rhs, used);
    for (const auto& c : spec.constraints) collect(c.expr, used);
    for (int i = 0; i < kNumSyms; ++i)
        if (used[i]) spec.symbols.push_back(static_cast<Sym>(i));
}

std::vector<IdentitySpec> build() {
    auto entries = build_entries();
    for (auto& e : entries) finalize(e);
    return entries;
}

}  // namespace

}  // namespace detail

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> entries = detail::build();
    return entries;
}

const IdentitySpec& find_identity(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownIdentityError("unknown identity '" + std::string(id) + "'");
}

std::vector<const IdentitySpec*> catalog_family(std::optional<Family> f) {
    std::vector<const IdentitySpec*> out;
    for (const auto& e : catalog())
        if (!f || e.family == *f) out.push_back(&e);
    return out;
}

}  // namespace hyptrans
