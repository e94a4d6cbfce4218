// The identity table. Each entry states the integral side, its closed form and the
// conditions given with the formula; endpoint integrability conditions are added
// mechanically in catalog.cpp.

#include <limits>

#include "catalog_internal.hpp"

namespace hyptrans::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Affs = std::vector<Affine>;

FnSpec fn(FnKind k, Affs params = {"a", "b", "c"}) { return {k, std::move(params)}; }
const FnSpec kNone{};

IntervalSpec fixed(double lo, double hi) { return {Shape::Fixed, lo, hi}; }
const IntervalSpec kZeroX{Shape::ZeroX};
const IntervalSpec kXInf{Shape::XInf};
const IntervalSpec kXOne{Shape::XOne};
const IntervalSpec kNegInfX{Shape::NegInfX};
const IntervalSpec kXPosInf{Shape::XPosInf};

IntegralSpec integral(IntervalSpec iv, Affine ye, Affine ome, Affine ke, FnSpec inner,
                      bool by_gamma_mu = false) {
    IntegralSpec s;
    s.interval = iv;
    s.y_exp = ye;
    s.one_minus_y_exp = ome;
    s.kernel_exp = ke;
    s.inner = std::move(inner);
    s.normalize_by_gamma_mu = by_gamma_mu;
    return s;
}

ClosedFormSpec closed(Affs num, Affs den, Affine xe, Affine omxe, FnSpec outer) {
    return {std::move(num), std::move(den), xe, omxe, std::move(outer)};
}

const std::vector<OpenInterval> kN{{-kInf, 0.0}, {0.0, 1.0}};
const std::vector<OpenInterval> kO{{-kInf, 0.0}, {1.0, kInf}};
const std::vector<OpenInterval> kP{{0.0, 1.0}, {1.0, kInf}};
const std::vector<OpenInterval> kBelowOne{{-kInf, 1.0}};
const std::vector<OpenInterval> kPositive{{0.0, kInf}};
const std::vector<OpenInterval> kOutsideUnitDisk{{-kInf, -1.25}, {1.25, kInf}};

struct Builder {
    std::vector<IdentitySpec> out;

    void add(std::string id, std::string tag, Family fam, IntegralSpec lhs, ClosedFormSpec rhs,
             Affs stated, std::vector<OpenInterval> dom) {
        IdentitySpec s;
        s.id = std::move(id);
        s.tag = std::move(tag);
        s.family = fam;
        s.lhs = std::move(lhs);
        s.rhs = std::move(rhs);
        for (auto& e : stated) s.constraints.push_back({e, false});
        s.x_domain = std::move(dom);
        out.push_back(std::move(s));
    }

    // Riemann-Liouville type: integrand carries (x-y)^{mu-1}/Gamma(mu).
    void frac(std::string id, std::string tag, Family fam, IntervalSpec iv, Affine ye, Affine ome,
              FnSpec inner, ClosedFormSpec rhs, Affs stated, std::vector<OpenInterval> dom) {
        stated.push_back("mu");
        add(std::move(id), std::move(tag), fam, integral(iv, ye, ome, "mu-1", std::move(inner), true),
            std::move(rhs), std::move(stated), std::move(dom));
    }

    // Generalized Stieltjes: no 1/Gamma(mu); the closed form carries 1/Gamma(1-mu), and the
    // stated conditions are positivity of the three numerator gamma arguments.
    void stieltjes(std::string id, std::string tag, IntervalSpec iv, Affine ye, Affine ome,
                   SolutionKind from, Affs num, Affine den, Affine xe, Affine omxe, FnSpec outer,
                   std::vector<OpenInterval> dom) {
        Affs stated = num;
        add(std::move(id), std::move(tag), Family::Stieltjes,
            integral(iv, ye, ome, "mu-1", fn(static_cast<FnKind>(static_cast<int>(from) + 2))),
            closed(std::move(num), {den, "1-mu"}, xe, omxe, std::move(outer)), std::move(stated),
            std::move(dom));
    }

    // |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1} integrates to C |x|^{c-1} w(x).
    void euler1(std::string id, std::string tag, IntervalSpec iv, FnKind w, Affs num, Affs den,
                Affs stated, std::vector<OpenInterval> dom) {
        add(std::move(id), std::move(tag), Family::Euler, integral(iv, "b-1", "-a", "c-b-1", kNone),
            closed(std::move(num), std::move(den), "c-1", 0, fn(w)), std::move(stated), std::move(dom));
    }

    // |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a} integrates to C w(x).
    void euler2(std::string id, std::string tag, IntervalSpec iv, FnKind w, Affs num, Affs den,
                Affs stated, std::vector<OpenInterval> dom) {
        add(std::move(id), std::move(tag), Family::Euler, integral(iv, "a-c", "c-b-1", "-a", kNone),
            closed(std::move(num), std::move(den), 0, 0, fn(w)), std::move(stated), std::move(dom));
    }
};

using K = FnKind;
using W = SolutionKind;

void fractional(Builder& b) {
    b.frac("F-I-CP", "2F1 fractional integral, case c+", Family::FracI, kZeroX, "c-1", 0,
           fn(K::Pure2F1), closed({"c"}, {"c+mu"}, "c+mu-1", 0, fn(K::Pure2F1, {"a", "b", "c+mu"})),
           {"c"}, kN);
    b.frac("F-I-ACP", "2F1 fractional integral, case a+,c+", Family::FracI, kZeroX, "c-1", "b-c-mu",
           fn(K::Pure2F1),
           closed({"c"}, {"c+mu"}, "c+mu-1", "b-c", fn(K::Pure2F1, {"a+mu", "b", "c+mu"})), {"c"}, kN);
    b.frac("F-I-ABCP", "2F1 fractional integral, case a+,b+,c+", Family::FracI, kZeroX, "c-1",
           "a+b-c", fn(K::Pure2F1),
           closed({"c"}, {"c+mu"}, "c+mu-1", "a+b-c+mu", fn(K::Pure2F1, {"a+mu", "b+mu", "c+mu"})),
           {"c"}, kN);
    b.frac("F-II-AM", "2F1 fractional integral, case a-", Family::FracII, kZeroX, "a-mu-1", 0,
           fn(K::Pure2F1), closed({"a-mu"}, {"a"}, "a-1", 0, fn(K::Pure2F1, {"a-mu", "b", "c"})),
           {"a-mu"}, kN);
    b.frac("F-II-AP", "2F1 fractional integral, case a+", Family::FracII, kZeroX, "c-a-mu-1",
           "a+b-c", fn(K::Pure2F1),
           closed({"c-a-mu"}, {"c-a"}, "c-a-1", "a+b-c+mu", fn(K::Pure2F1, {"a+mu", "b", "c"})),
           {"c-a-mu"}, kN);
    b.frac("F-III-ABCM", "2F1 fractional integral, case a-,b-,c-", Family::FracIII, kNegInfX, 0, 0,
           fn(K::Pure2F1),
           closed({"a-mu", "b-mu", "c"}, {"a", "b", "c-mu"}, 0, 0,
                  fn(K::Pure2F1, {"a-mu", "b-mu", "c-mu"})),
           {"a-mu", "b-mu"}, kBelowOne);
    b.frac("F-III-ACM", "2F1 fractional integral, case a-,c-", Family::FracIII, kXOne, 0, "a-mu-1",
           fn(K::Pure2F1),
           closed({"a-mu", "c-b-mu", "c"}, {"a", "c-b", "c-mu"}, 0, "a-1",
                  fn(K::Pure2F1, {"a-mu", "b", "c-mu"})),
           {"a-mu", "c-b-mu"}, kBelowOne);
    b.frac("F-III-CM", "2F1 fractional integral, case c-", Family::FracIII, kNegInfX, 0, "a+b-c",
           fn(K::Pure2F1),
           closed({"c-a-mu", "c-b-mu", "c"}, {"c-a", "c-b", "c-mu"}, 0, "a+b-c+mu",
                  fn(K::Pure2F1, {"a", "b", "c-mu"})),
           {"c-a-mu", "c-b-mu"}, kBelowOne);
}

void w_transforms(Builder& b) {
    const Family F = Family::WTransform;
    b.frac("W-W1-CP", "w1 to w1, case c+", F, kZeroX, "c-1", 0, fn(K::W1),
           closed({"c"}, {"c+mu"}, "c+mu-1", 0, fn(K::W1, {"a", "b", "c+mu"})), {"c"}, kN);
    b.frac("W-W2-ABCM", "w2 to w2, case c+ over (-inf, x)", F, kNegInfX, "c-1", 0, fn(K::W2),
           closed({"a-c-mu+1", "b-c-mu+1", "2-c"}, {"a-c+1", "b-c+1", "2-c-mu"}, "c+mu-1", 0,
                  fn(K::W2, {"a", "b", "c+mu"})),
           {"a-c-mu+1", "b-c-mu+1"}, kN);
    b.frac("W-W3-AM", "w3 to w3, case c+", F, kXInf, "c-1", 0, fn(K::W3),
           closed({"a-c-mu+1"}, {"a-c+1"}, "c+mu-1", 0, fn(K::W3, {"a", "b", "c+mu"})),
           {"a-c-mu+1"}, kO);
    b.frac("W-W4-AM", "w4 to w4, case c+", F, kXInf, "c-1", 0, fn(K::W4),
           closed({"b-c-mu+1"}, {"b-c+1"}, "c+mu-1", 0, fn(K::W4, {"a", "b", "c+mu"})),
           {"b-c-mu+1"}, kO);
    b.frac("W-W5-CM", "w5 to w5, case c+ over (x, inf)", F, kXPosInf, "c-1", 0, fn(K::W5),
           closed({"b-c-mu+1", "a-c-mu+1", "a+b-c+1"}, {"b-c+1", "a-c+1", "a+b-c-mu+1"}, "c+mu-1",
                  0, fn(K::W5, {"a", "b", "c+mu"})),
           {"b-c-mu+1", "a-c-mu+1"}, kPositive);
    b.frac("W-W6-ABCP", "w6 to w6, case c+", F, kXOne, "c-1", 0, fn(K::W6),
           closed({"c-a-b+1"}, {"c-a-b+mu+1"}, "c+mu-1", 0, fn(K::W6, {"a", "b", "c+mu"})),
           {"c-a-b+1"}, kP);
    b.frac("W-W2-AM", "w2 to w2, case a-", F, kZeroX, "a-mu-1", 0, fn(K::W2),
           closed({"a-c-mu+1"}, {"a-c+1"}, "a-1", 0, fn(K::W2, {"a-mu", "b", "c"})), {"a-c-mu+1"},
           kN);
    b.frac("W-W4-ABCM", "w4 to w4, case a-,b-,c-", F, kXInf, 0, 0, fn(K::W4),
           closed({"b-mu"}, {"b"}, 0, 0, fn(K::W4, {"a-mu", "b-mu", "c-mu"})), {"b-mu"}, kO);
    b.frac("W-W6-ABCM", "w6 to w6, case a-,b-,c-", F, kXOne, 0, 0, fn(K::W6),
           closed({"c-a-b+1"}, {"c-a-b+mu+1"}, 0, 0, fn(K::W6, {"a-mu", "b-mu", "c-mu"})),
           {"c-a-b+1"}, kP);
}

void stieltjes(Builder& b) {
    const auto pos = fixed(1.0, kInf), neg = fixed(-kInf, 0.0), unit = fixed(0.0, 1.0);
    b.stieltjes("S-CP-W1toW5", "case c+, w1 to w5", neg, "c-1", 0, W::W1,
                {"a-c-mu+1", "b-c-mu+1", "c"}, "a+b-c-mu+1", "c+mu-1", 0,
                fn(K::W5, {"a", "b", "c+mu"}), kPositive);
    b.stieltjes("S-CP-W6toW2", "case c+, w6 to w2", pos, "c-1", 0, W::W6,
                {"a-c-mu+1", "b-c-mu+1", "c-a-b+1"}, "2-c-mu", "c+mu-1", 0,
                fn(K::W2, {"a", "b", "c+mu"}), kN);
    b.stieltjes("S-ACP-W1toW4", "case a+,c+, w1 to w4", unit, "c-1", "b-c-mu", W::W1,
                {"1-a-mu", "b-c-mu+1", "c"}, "b-a-mu+1", "c+mu-1", "b-c",
                fn(K::W4, {"a+mu", "b", "c+mu"}), kO);
    b.stieltjes("S-ACP-W3toW2", "case a+,c+, w3 to w2", pos, "c-1", "b-c-mu", W::W3,
                {"1-a-mu", "b-c-mu+1", "a-b+1"}, "2-c-mu", "c+mu-1", "b-c",
                fn(K::W2, {"a+mu", "b", "c+mu"}), kN);
    b.stieltjes("S-BCP-W1toW3", "case b+,c+, w1 to w3", unit, "c-1", "a-c-mu", W::W1,
                {"1-b-mu", "a-c-mu+1", "c"}, "a-b-mu+1", "c+mu-1", "a-c",
                fn(K::W3, {"a", "b+mu", "c+mu"}), kO);
    b.stieltjes("S-BCP-W4toW2", "case b+,c+, w4 to w2", pos, "c-1", "a-c-mu", W::W4,
                {"1-b-mu", "a-c-mu+1", "b-a+1"}, "2-c-mu", "c+mu-1", "a-c",
                fn(K::W2, {"a", "b+mu", "c+mu"}), kN);
    b.stieltjes("S-ABCP-W1toW6", "case a+,b+,c+, w1 to w6", neg, "c-1", "a+b-c", W::W1,
                {"1-a-mu", "1-b-mu", "c"}, "c-a-b-mu+1", "c+mu-1", "a+b-c+mu",
                fn(K::W6, {"a+mu", "b+mu", "c+mu"}), kP);
    b.stieltjes("S-ABCP-W5toW2", "case a+,b+,c+, w5 to w2", pos, "c-1", "a+b-c", W::W5,
                {"1-a-mu", "1-b-mu", "a+b-c+1"}, "2-c-mu", "c+mu-1", "a+b-c+mu",
                fn(K::W2, {"a+mu", "b+mu", "c+mu"}), kN);
    b.stieltjes("S-AM-W4toW5", "case a-, w4 to w5", neg, "a-mu-1", 0, W::W4,
                {"a-mu", "a-c-mu+1", "b-a+1"}, "a+b-c-mu+1", "a-1", 0,
                fn(K::W5, {"a-mu", "b", "c"}), kPositive);
    b.stieltjes("S-AM-W6toW3", "case a-, w6 to w3", unit, "a-mu-1", 0, W::W6,
                {"a-c-mu+1", "a-mu", "c-a-b+1"}, "a-b-mu+1", "a-1", 0,
                fn(K::W3, {"a-mu", "b", "c"}), kO);
    b.stieltjes("S-BM-W3toW5", "case b-, w3 to w5", neg, "b-mu-1", 0, W::W3,
                {"b-mu", "b-c-mu+1", "a-b+1"}, "a+b-c-mu+1", "b-1", 0,
                fn(K::W5, {"a", "b-mu", "c"}), kPositive);
    b.stieltjes("S-BM-W6toW4", "case b-, w6 to w4", unit, "b-mu-1", 0, W::W6,
                {"b-c-mu+1", "b-mu", "c-a-b+1"}, "b-a-mu+1", "b-1", 0,
                fn(K::W4, {"a", "b-mu", "c"}), kO);
    b.stieltjes("S-AP-W3toW6", "case a+, w3 to w6", neg, "c-a-mu-1", "a+b-c", W::W3,
                {"1-a-mu", "c-a-mu", "a-b+1"}, "c-a-b-mu+1", "c-a-1", "a+b-c+mu",
                fn(K::W6, {"a+mu", "b", "c"}), kP);
    b.stieltjes("S-AP-W5toW4", "case a+, w5 to w4", unit, "c-a-mu-1", "a+b-c", W::W5,
                {"1-a-mu", "c-a-mu", "a+b-c+1"}, "b-a-mu+1", "c-a-1", "a+b-c+mu",
                fn(K::W4, {"a+mu", "b", "c"}), kO);
    b.stieltjes("S-BP-W4toW6", "case b+, w4 to w6", neg, "c-b-mu-1", "a+b-c", W::W4,
                {"1-b-mu", "c-b-mu", "b-a+1"}, "c-a-b-mu+1", "c-b-1", "a+b-c+mu",
                fn(K::W6, {"a", "b+mu", "c"}), kP);
    b.stieltjes("S-BP-W5toW3", "case b+, w5 to w3", unit, "c-b-mu-1", "a+b-c", W::W5,
                {"1-b-mu", "c-b-mu", "a+b-c+1"}, "a-b-mu+1", "c-b-1", "a+b-c+mu",
                fn(K::W3, {"a", "b+mu", "c"}), kO);
    b.stieltjes("S-ABCM-W2toW5", "case a-,b-,c-, w2 to w5", neg, 0, 0, W::W2,
                {"a-mu", "b-mu", "2-c"}, "a+b-c-mu+1", 0, 0,
                fn(K::W5, {"a-mu", "b-mu", "c-mu"}), kPositive);
    b.stieltjes("S-ABCM-W6toW1", "case a-,b-,c-, w6 to w1", pos, 0, 0, W::W6,
                {"a-mu", "b-mu", "c-a-b+1"}, "c-mu", 0, 0, fn(K::W1, {"a-mu", "b-mu", "c-mu"}), kN);
    b.stieltjes("S-ACM-W2toW3", "case a-,c-, w2 to w3", unit, 0, "a-mu-1", W::W2,
                {"c-b-mu", "a-mu", "2-c"}, "a-b-mu+1", 0, "a-1", fn(K::W3, {"a-mu", "b", "c-mu"}),
                kO);
    b.stieltjes("S-ACM-W4toW1", "case a-,c-, w4 to w1", pos, 0, "a-mu-1", W::W4,
                {"c-b-mu", "a-mu", "b-a+1"}, "c-mu", 0, "a-1", fn(K::W1, {"a-mu", "b", "c-mu"}),
                kN);
    b.stieltjes("S-BCM-W2toW4", "case b-,c-, w2 to w4", unit, 0, "b-mu-1", W::W2,
                {"c-a-mu", "b-mu", "2-c"}, "b-a-mu+1", 0, "b-1", fn(K::W4, {"a", "b-mu", "c-mu"}),
                kO);
    b.stieltjes("S-BCM-W3toW1", "case b-,c-, w3 to w1", pos, 0, "b-mu-1", W::W3,
                {"c-a-mu", "b-mu", "a-b+1"}, "c-mu", 0, "b-1", fn(K::W1, {"a", "b-mu", "c-mu"}),
                kN);
    b.stieltjes("S-CM-W2toW6", "case c-, w2 to w6", neg, 0, "a+b-c", W::W2,
                {"c-a-mu", "c-b-mu", "2-c"}, "c-a-b-mu+1", 0, "a+b-c+mu",
                fn(K::W6, {"a", "b", "c-mu"}), kP);
    b.stieltjes("S-CM-W5toW1", "case c-, w5 to w1", pos, 0, "a+b-c", W::W5,
                {"c-a-mu", "c-b-mu", "a+b-c+1"}, "c-mu", 0, "a+b-c+mu",
                fn(K::W1, {"a", "b", "c-mu"}), kN);
}

void euler(Builder& b) {
    const auto pos = fixed(1.0, kInf), neg = fixed(-kInf, 0.0), unit = fixed(0.0, 1.0);
    b.euler1("E-W1", "w1, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", kZeroX, K::W1, {"b", "c-b"},
             {"c"}, {"b", "c-b"}, kN);
    b.euler1("E-W2", "w2, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", pos, K::W2, {"a-c+1", "1-a"},
             {"2-c"}, {"a-c+1", "1-a"}, kN);
    b.euler1("E-W3", "w3, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", kXInf, K::W3,
             {"a-c+1", "c-b"}, {"a-b+1"}, {"a-c+1", "c-b"}, kO);
    b.euler1("E-W4", "w4, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", unit, K::W4, {"1-a", "b"},
             {"b-a+1"}, {"1-a", "b"}, kO);
    b.euler1("E-W5", "w5, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", neg, K::W5, {"a-c+1", "b"},
             {"a+b-c+1"}, {"b", "a-c+1"}, kPositive);
    b.euler1("E-W6", "w6, integrand |y|^{b-1}|1-y|^{-a}|x-y|^{c-b-1}", kXOne, K::W6, {"1-a", "c-b"},
             {"c-a-b+1"}, {"c-b", "1-a"}, kP);
    b.euler2("E-W1b", "w1, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", pos, K::W1, {"b", "c-b"},
             {"c"}, {"b", "c-b"}, kBelowOne);
    b.euler2("E-W2b", "w2, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", kZeroX, K::W2,
             {"a-c+1", "1-a"}, {"2-c"}, {"1-a", "a-c+1"}, kN);
    b.euler2("E-W3b", "w3, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", unit, K::W3,
             {"a-c+1", "c-b"}, {"a-b+1"}, {"a-c+1", "c-b"}, kO);
    b.euler2("E-W4b", "w4, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", kXInf, K::W4, {"1-a", "b"},
             {"b-a+1"}, {"1-a", "b"}, kO);
    b.euler2("E-W5b", "w5, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", neg, K::W5, {"a-c+1", "b"},
             {"a+b-c+1"}, {"b", "a-c+1"}, kPositive);
    b.euler2("E-W6b", "w6, integrand |y|^{a-c}|1-y|^{c-b-1}|x-y|^{-a}", kXOne, K::W6,
             {"1-a", "c-b"}, {"c-a-b+1"}, {"c-b", "1-a"}, kP);
}

// Fractional integral of a Stieltjes transform and vice versa, with the
// Stieltjes part normalized by Gamma(1-nu); the result is a Stieltjes transform of
// order mu+nu normalized by Gamma(1-mu-nu).
void compositions(Builder& b) {
    const auto pos = fixed(1.0, kInf), neg = fixed(-kInf, 0.0);
    auto stieltjes_inner = [&](IntervalSpec iv, FnKind w) {
        auto s = integral(iv, "c-1", 0, "nu-1", fn(w));
        s.gamma_num = {"1-nu"};
        return s;
    };
    auto fractional_inner = [&](IntervalSpec iv, FnKind w) {
        return integral(iv, "c-1", 0, "mu-1", fn(w), true);
    };
    auto nest = [](IntegralSpec outer, IntegralSpec inner, ClosedFormSpec equiv) {
        outer.nested = std::make_shared<const IntegralSpec>(std::move(inner));
        outer.nested_equiv = std::make_shared<const ClosedFormSpec>(std::move(equiv));
        return outer;
    };

    // f(z) = z^{c-1} w6(z) on (1, inf): the transform lands on w2.
    ClosedFormSpec to_w2 = closed({"a-c-mu-nu+1", "b-c-mu-nu+1", "c-a-b+1"}, {"2-c-mu-nu"},
                                  "c+mu+nu-1", 0, fn(K::W2, {"a", "b", "c+mu+nu"}));
    Affs w2_stated = {"1-mu-nu", "a-c-mu-nu+1", "b-c-mu-nu+1", "c-a-b+1", "mu"};
    // f(z) = (-z)^{c-1} w1(z) on (-inf, 0): the transform lands on w5.
    ClosedFormSpec to_w5 = closed({"a-c-mu-nu+1", "b-c-mu-nu+1", "c"}, {"a+b-c-mu-nu+1"},
                                  "c+mu+nu-1", 0, fn(K::W5, {"a", "b", "c+mu+nu"}));
    Affs w5_stated = {"1-mu-nu", "a-c-mu-nu+1", "b-c-mu-nu+1", "c", "mu"};

    {
        auto outer = integral(kNegInfX, 0, 0, "mu-1", kNone, true);
        auto inner = stieltjes_inner(pos, K::W6);
        auto equiv = closed({"a-c-nu+1", "b-c-nu+1", "c-a-b+1"}, {"2-c-nu"}, "c+nu-1", 0,
                            fn(K::W2, {"a", "b", "c+nu"}));
        b.add("C-FS-W6toW2", "fractional integral over (-inf, x) of a Stieltjes transform",
              Family::Composition, nest(outer, inner, equiv), to_w2, w2_stated, kN);
    }
    {
        auto outer = integral(kXPosInf, 0, 0, "mu-1", kNone, true);
        auto inner = stieltjes_inner(neg, K::W1);
        auto equiv = closed({"a-c-nu+1", "b-c-nu+1", "c"}, {"a+b-c-nu+1"}, "c+nu-1", 0,
                            fn(K::W5, {"a", "b", "c+nu"}));
        b.add("C-FS-W1toW5", "fractional integral over (x, inf) of a Stieltjes transform",
              Family::Composition, nest(outer, inner, equiv), to_w5, w5_stated, kPositive);
    }
    {
        auto outer = integral(pos, 0, 0, "nu-1", kNone);
        outer.gamma_num = {"1-nu"};
        auto inner = fractional_inner(kXOne, K::W6);
        auto equiv = closed({"c-a-b+1"}, {"c-a-b+mu+1"}, "c+mu-1", 0, fn(K::W6, {"a", "b", "c+mu"}));
        b.add("C-SF-W6toW2", "Stieltjes transform of a fractional integral from 1",
              Family::Composition, nest(outer, inner, equiv), to_w2, w2_stated, kN);
    }
    {
        auto outer = integral(neg, 0, 0, "nu-1", kNone);
        outer.gamma_num = {"1-nu"};
        auto inner = fractional_inner(kZeroX, K::W1);
        auto equiv = closed({"c"}, {"c+mu"}, "c+mu-1", 0, fn(K::W1, {"a", "b", "c+mu"}));
        b.add("C-SF-W1toW5", "Stieltjes transform of a fractional integral to 0",
              Family::Composition, nest(outer, inner, equiv), to_w5, w5_stated, kPositive);
    }
}

void karp_sitnik(Builder& b) {
    b.add("K-3F2", "Stieltjes transform of w5 giving a 3F2", Family::KarpSitnik,
          integral(fixed(0.0, 1.0), "b-1", "d+e-b-c-1", "-a", fn(K::W5, {"d-c", "e-c", "b-c+1"})),
          closed({"b", "c", "d+e-b-c"}, {"d", "e"}, "-a", 0,
                 fn(K::Hyp3F2Inv, {"a", "b", "c", "d", "e"})),
          {"b", "c", "d+e-b-c"}, kOutsideUnitDisk);
    b.add("K-2F1", "the 3F2 case d = a, giving w3", Family::KarpSitnik,
          integral(fixed(0.0, 1.0), "b-1", "a+e-b-c-1", "-a", fn(K::W5, {"a-c", "e-c", "b-c+1"})),
          closed({"b", "c", "a+e-b-c"}, {"a", "e"}, "b-a", 0, fn(K::W3, {"b", "b-e+1", "b-c+1"})),
          {"b", "c", "a+e-b-c"}, kO);
}

}  // namespace

std::vector<IdentitySpec> build_entries() {
    Builder b;
    fractional(b);
    w_transforms(b);
    stieltjes(b);
    euler(b);
    compositions(b);
    karp_sitnik(b);
    return std::move(b.out);
}

}  // namespace hyptrans::detail
