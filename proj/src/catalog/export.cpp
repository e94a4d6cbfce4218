#include <cmath>

#include "json.hpp"

#include "catalog_internal.hpp"

namespace hyptrans {

namespace {

using nlohmann::json;

// Integer coefficients over (a, b, c, mu, nu, d, e) followed by the constant.
json affine(const Affine& e) {
    json coef = json::array();
    for (int c : e.coef) coef.push_back(c);
    coef.push_back(e.constant);
    return {{"expr", e.str()}, {"coefficients", coef}};
}

json affines(const std::vector<Affine>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back(affine(e));
    return out;
}

json bound(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    return v;
}

json fn(const FnSpec& f) { return {{"kind", to_string(f.kind)}, {"params", affines(f.params)}}; }

json closed_form(const ClosedFormSpec& c) {
    return {{"gamma_num", affines(c.gamma_num)},
            {"gamma_den", affines(c.gamma_den)},
            {"x_exp", affine(c.x_exp)},
            {"one_minus_x_exp", affine(c.one_minus_x_exp)},
            {"outer", fn(c.outer)}};
}

json integral(const IntegralSpec& s) {
    json j = {{"interval", to_string(s.interval)},
              {"y_exp", affine(s.y_exp)},
              {"one_minus_y_exp", affine(s.one_minus_y_exp)},
              {"kernel_exp", affine(s.kernel_exp)},
              {"inner", fn(s.inner)},
              {"normalize_by_gamma_mu", s.normalize_by_gamma_mu},
              {"gamma_num", affines(s.gamma_num)}};
    if (s.nested) j["nested"] = integral(*s.nested);
    if (s.nested_equiv) j["nested_closed_form"] = closed_form(*s.nested_equiv);
    return j;
}

}  // namespace

std::string export_catalog_json() {
    json ids = json::array();
    for (const auto& spec : catalog()) {
        json cons = json::array();
        for (const auto& c : spec.constraints) {
            json e = affine(c.expr);
            e["derived"] = c.derived;
            cons.push_back(e);
        }
        json dom = json::array();
        for (const auto& iv : spec.x_domain) dom.push_back({bound(iv.lo), bound(iv.hi)});
        json syms = json::array();
        for (Sym s : spec.symbols) syms.push_back(kSymNames[static_cast<int>(s)]);
        ids.push_back({{"id", spec.id},
                       {"tag", spec.tag},
                       {"family", to_string(spec.family)},
                       {"lhs", integral(spec.lhs)},
                       {"rhs", closed_form(spec.rhs)},
                       {"constraints", cons},
                       {"x_domain", dom},
                       {"symbols", syms}});
    }
    json symbols = json::array();
    for (const char* s : kSymNames) symbols.push_back(s);
    json doc = {{"version", kCatalogSchemaVersion}, {"symbols", symbols}, {"identities", ids}};
    return doc.dump(2) + "\n";
}

}  // namespace hyptrans
