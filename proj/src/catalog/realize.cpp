#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include "catalog_internal.hpp"

namespace hyptrans {

namespace {

using detail::inner_exponents;
using detail::Point;

enum class Tag { None, Zero, One, X };

// Value of the inner factor; *err receives its error bound (zero when exact to rounding).
using InnerFn = std::function<Scaled(double y, double one_minus_y, Scaled* err)>;

double min_of(const std::vector<Affine>& es, const SymValues& v) {
    double m = es[0].eval(v);
    for (const auto& e : es) m = std::fmin(m, e.eval(v));
    return m;
}

double max_of(const std::vector<Affine>& es, const SymValues& v) {
    double m = es[0].eval(v);
    for (const auto& e : es) m = std::fmax(m, e.eval(v));
    return m;
}

// A quadrature result in units of exp(log_ref).
struct LogQuad {
    QuadResult r;
    double log_ref = 0.0;
};

LogQuad integrate_spec_log(const IntegralSpec& s, const SymValues& v, double x, double omx,
                           double rel_tol, double inner_tol);

InnerFn make_inner(const IntegralSpec& s, const SymValues& v, double inner_tol) {
    if (s.nested) {
        auto nested = s.nested;
        // An inner result that misses inner_tol is still used; its error
        // estimate is carried into the outer err_est.
        return [nested, v, inner_tol](double y, double omy, Scaled* err) {
            LogQuad q = integrate_spec_log(*nested, v, y, omy, inner_tol, inner_tol);
            *err = Scaled(q.r.err_est, q.log_ref);
            return Scaled(q.r.value, q.log_ref);
        };
    }
    switch (s.inner.kind) {
        case FnKind::None:
        case FnKind::Hyp3F2Inv:
            return [](double, double, Scaled*) { return Scaled(1.0); };
        case FnKind::Pure2F1: {
            HypParams p = detail::fn_params(s.inner, v);
            return [p](double y, double omy, Scaled*) { return hyp2f1_scaled(p.a, p.b, p.c, y, omy); };
        }
        default: {
            HypParams p = detail::fn_params(s.inner, v);
            SolutionKind k = detail::solution_kind(s.inner.kind);
            return [p, k](double y, double omy, Scaled*) { return eval_w_scaled(k, y, omy, p); };
        }
    }
}

void check_inner_domain(const IntegralSpec& s, double lo, double hi) {
    if (s.nested || s.inner.kind == FnKind::None || s.inner.kind == FnKind::Hyp3F2Inv) return;
    double y = detail::representative({lo, hi});
    bool ok = s.inner.kind == FnKind::Pure2F1 ? y < 1.0
                                               : in_domain(detail::solution_kind(s.inner.kind), y);
    if (!ok) {
        std::ostringstream os;
        os << to_string(s.inner.kind) << " would be evaluated outside its domain on (" << lo << ", "
           << hi << ")";
        throw DomainError(os.str());
    }
}

double normalization(const IntegralSpec& s, const SymValues& v) {
    GammaRatioSpec g;
    for (const auto& e : s.gamma_num) g.numerator_args.push_back(e.eval(v));
    if (s.normalize_by_gamma_mu) g.denominator_args.push_back(v[static_cast<int>(Sym::Mu)]);
    return gamma_ratio(g);
}

struct End {
    double y;
    Tag tag;
};

// Interval ends and interior 0/1 in increasing order, each tagged with the
// singular point it sits on.
std::vector<End> cut_points(const IntegralSpec& s, double x, double omx) {
    std::vector<End> ends;
    if (s.interval.shape == Shape::XOne) {
        // ordered by the sign of 1 - x, which stays exact when x rounds to 1
        if (omx == 0.0) throw DomainError("interval between x and 1 is empty");
        if (omx > 0.0) {
            ends = {{x, Tag::X}, {1.0, Tag::One}};
        } else {
            ends = {{1.0, Tag::One}, {x, Tag::X}};
        }
    } else {
        OpenInterval iv = resolve(s.interval, x);
        const bool has_x = s.interval.shape != Shape::Fixed;
        auto tag_of = [&](double p) {
            if (p == 0.0) return Tag::Zero;
            if (p == 1.0) return Tag::One;
            if (has_x && p == x) return Tag::X;
            return Tag::None;
        };
        ends = {{iv.lo, tag_of(iv.lo)}, {iv.hi, tag_of(iv.hi)}};
    }
    std::vector<End> cuts{ends[0]};
    if (ends[0].y < 0.0 && 0.0 < ends[1].y) cuts.push_back({0.0, Tag::Zero});
    if (ends[0].y < 1.0 && 1.0 < ends[1].y && ends[1].tag != Tag::One) cuts.push_back({1.0, Tag::One});
    cuts.push_back(ends[1]);
    return cuts;
}

std::vector<LhsPiece> make_pieces(const IntegralSpec& s, const SymValues& v, double x, double omx,
                                  double inner_tol) {
    const std::vector<End> cuts = cut_points(s, x, omx);
    const double ye = s.y_exp.eval(v), ome = s.one_minus_y_exp.eval(v), ke = s.kernel_exp.eval(v);
    auto end_exponent = [&](Tag t) {
        switch (t) {
            case Tag::Zero: return ye + min_of(inner_exponents(s, Point::Zero), v);
            case Tag::One: return ome + min_of(inner_exponents(s, Point::One), v);
            case Tag::X: return ke;
            default: return 0.0;
        }
    };
    const double decay = ye + ome + ke + max_of(inner_exponents(s, Point::Infinity), v);
    InnerFn inner = make_inner(s, v, inner_tol);

    std::vector<LhsPiece> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const End a = cuts[i], b = cuts[i + 1];
        if (a.y != b.y) check_inner_domain(s, a.y, b.y);
        const Tag lt = a.tag, rt = b.tag;
        const double shift = (lt == Tag::One || rt == Tag::One) ? 1.0 : 0.0;
        const double xs = shift == 1.0 ? -omx : x;  // x - shift
        const bool finite = std::isfinite(a.y) && std::isfinite(b.y);
        auto has = [&](Tag t) { return lt == t || rt == t; };
        double scale = 1.0;
        if (finite) {
            if (has(Tag::X) && has(Tag::One)) {
                scale = std::fabs(omx);
            } else if (has(Tag::X) && has(Tag::Zero)) {
                scale = std::fabs(x);
            } else {
                scale = b.y - a.y;
            }
        }
        auto local = [&](const End& e) {
            if (std::isinf(e.y)) return e.y;
            return (e.tag == Tag::X ? xs : e.y - shift) / scale;
        };

        LhsPiece piece;
        piece.lo = local(a);
        piece.hi = local(b);
        piece.shift = shift;
        piece.scale = scale;
        piece.f.left_exponent = end_exponent(lt);
        piece.f.right_exponent = end_exponent(rt);
        piece.f.decay_exponent = decay;
        const double log_scale = std::log(scale);
        auto err_slot = std::make_shared<Scaled>();
        if (s.nested) piece.f.last_error = [err_slot] { return *err_slot; };
        piece.f.core = [=](double t, double dl, double dr) {
            *err_slot = Scaled(0.0);
            // Distances to tagged ends come from dl, dr; their logs are formed
            // without the product so tiny pieces do not underflow.
            double y, ly, omy, lomy, xmy, lxmy;
            if (lt == Tag::Zero) {
                y = scale * dl, ly = log_scale + std::log(dl);
            } else if (rt == Tag::Zero) {
                y = -scale * dr, ly = log_scale + std::log(dr);
            } else {
                y = shift + scale * t, ly = std::log(std::fabs(y));
            }
            if (lt == Tag::One) {
                omy = -scale * dl, lomy = log_scale + std::log(dl);
            } else if (rt == Tag::One) {
                omy = scale * dr, lomy = log_scale + std::log(dr);
            } else {
                omy = shift == 1.0 ? -scale * t : 1.0 - scale * t;
                lomy = std::log(std::fabs(omy));
            }
            if (lt == Tag::X) {
                xmy = -scale * dl, lxmy = log_scale + std::log(dl);
            } else if (rt == Tag::X) {
                xmy = scale * dr, lxmy = log_scale + std::log(dr);
            } else {
                xmy = xs - scale * t, lxmy = std::log(std::fabs(xmy));
            }
            // Beyond double range next to an end: the weight there is negligible.
            if (y == 0.0 || omy == 0.0 || xmy == 0.0) return Scaled(0.0);
            double lg = log_scale;
            if (ye != 0.0) lg += ye * ly;
            if (ome != 0.0) lg += ome * lomy;
            if (ke != 0.0) lg += ke * lxmy;
            Scaled ie(0.0);
            Scaled val = inner(y, omy, &ie) * Scaled(1.0, lg);
            *err_slot = ie * Scaled(1.0, lg);
            return val;
        };
        // reference magnitude from the middle of the piece
        double tc, dl, dr;
        if (finite) {
            tc = 0.5 * (piece.lo + piece.hi), dl = dr = 0.5 * (piece.hi - piece.lo);
        } else if (std::isinf(piece.hi)) {
            tc = piece.lo + 1.0, dl = 1.0, dr = piece.hi;
        } else {
            tc = piece.hi - 1.0, dl = -piece.lo, dr = 1.0;
        }
        Scaled mid = piece.f.core(tc, dl, dr);
        double lr = mid.is_zero() ? 0.0 : mid.log_abs();
        piece.f.log_ref = std::isfinite(lr) ? lr : 0.0;
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

LogQuad integrate_pieces(const RealizedLhs& lhs, double rel_tol) {
    std::vector<QuadResult> parts;
    LogQuad out;
    out.r.converged = true;
    out.log_ref = -std::numeric_limits<double>::infinity();
    for (const auto& p : lhs.pieces) {
        parts.push_back(integrate(p.f, p.lo, p.hi, rel_tol));
        out.log_ref = std::fmax(out.log_ref, parts.back().log_ref);
    }
    if (parts.empty()) out.log_ref = 0.0;
    for (const QuadResult& r : parts) {
        double w = std::exp(r.log_ref - out.log_ref);
        out.r.value += w * r.value;
        out.r.err_est += w * r.err_est;
        out.r.l1 += w * r.l1;
        out.r.level = std::max(out.r.level, r.level);
        out.r.evaluations += r.evaluations;
        out.r.converged = out.r.converged && r.converged;
    }
    double k = lhs.factor;
    out.r.value *= k;
    out.r.err_est *= std::fabs(k);
    out.r.l1 *= std::fabs(k);
    return out;
}

LogQuad integrate_spec_log(const IntegralSpec& s, const SymValues& v, double x, double omx,
                           double rel_tol, double inner_tol) {
    RealizedLhs r;
    r.pieces = make_pieces(s, v, x, omx, inner_tol);
    r.factor = normalization(s, v);
    return integrate_pieces(r, rel_tol);
}

QuadResult to_absolute(LogQuad q) {
    double k = std::exp(q.log_ref);
    q.r.value *= k;
    q.r.err_est *= k;
    q.r.l1 *= k;
    q.r.log_ref = 0.0;
    return q.r;
}

Scaled outer_value(const FnSpec& fn, const SymValues& v, double x, double omx) {
    switch (fn.kind) {
        case FnKind::None: return Scaled(1.0);
        case FnKind::Pure2F1: {
            if (!(x < 1.0)) throw DomainError("2F1 series factor needs x < 1");
            HypParams p = detail::fn_params(fn, v);
            return hyp2f1_scaled(p.a, p.b, p.c, x, omx);
        }
        case FnKind::Hyp3F2Inv: {
            double q[5];
            for (int i = 0; i < 5; ++i) q[i] = fn.params[i].eval(v);
            return Scaled(hyp3f2(q[0], q[1], q[2], q[3], q[4], 1.0 / x));
        }
        default: {
            SolutionKind k = detail::solution_kind(fn.kind);
            if (!in_domain(k, x)) {
                std::ostringstream os;
                os << to_string(k) << " evaluated outside its domain at x=" << x;
                throw DomainError(os.str());
            }
            return eval_w_scaled(k, x, omx, detail::fn_params(fn, v));
        }
    }
}

}  // namespace

RealizedLhs realize_lhs(const IdentitySpec& spec, const ParamPoint& pt, double inner_tol) {
    SymValues v = pt.values();
    RealizedLhs r;
    r.pieces = make_pieces(spec.lhs, v, pt.x, 1.0 - pt.x, inner_tol);
    r.factor = normalization(spec.lhs, v);
    return r;
}

QuadResult integrate_spec(const IntegralSpec& spec, const SymValues& v, double x,
                          double one_minus_x, double rel_tol, double inner_tol) {
    return to_absolute(integrate_spec_log(spec, v, x, one_minus_x, rel_tol, inner_tol));
}

QuadResult integrate_lhs(const IdentitySpec& spec, const ParamPoint& pt, double rel_tol) {
    return to_absolute(integrate_pieces(realize_lhs(spec, pt), rel_tol));
}

double realize_rhs(const IdentitySpec& spec, const ParamPoint& pt) {
    const ClosedFormSpec& c = spec.rhs;
    SymValues v = pt.values();
    GammaRatioSpec g;
    for (const auto& e : c.gamma_num) g.numerator_args.push_back(e.eval(v));
    for (const auto& e : c.gamma_den) g.denominator_args.push_back(e.eval(v));
    Scaled r = gamma_ratio_scaled(g);
    if (r.is_zero()) return 0.0;
    double x = pt.x, omx = 1.0 - x;
    double xe = c.x_exp.eval(v), omxe = c.one_minus_x_exp.eval(v);
    if (xe != 0.0) r *= Scaled::pow_abs(x, xe);
    if (omxe != 0.0) r *= Scaled::pow_abs(omx, omxe);
    r *= outer_value(c.outer, v, x, omx);
    double out = r.value();
    if (!std::isfinite(out)) {
        std::ostringstream os;
        os << spec.id << ": closed form overflows at x=" << x;
        throw OverflowError(os.str());
    }
    return out;
}

}  // namespace hyptrans
