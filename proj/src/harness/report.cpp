#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyptrans/harness.hpp"
#include "json.hpp"

namespace hyptrans {

namespace {

using Json = nlohmann::ordered_json;

// JSON has no inf/nan; both become null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string g17(double v) { return std::isnan(v) ? "" : fmt("%.17g", v); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

Json tolerances_json(const ReportMeta& m) {
    return Json{{"rel_tol", m.rel_tol},
                {"quad_tol", m.quad_tol},
                {"composition_quad_tol", std::fmax(kCompositionQuadTol, m.quad_tol)},
                {"quad_err_fraction", 0.1},
                {"zero_rhs", kZeroRhs},
                {"zero_lhs_tol", kZeroLhsTol},
                {"zero_err_tol", kZeroErrTol}};
}

Json params_json(const ParamPoint& p, const std::vector<Sym>& syms) {
    Json j = Json::object();
    SymValues v = p.values();
    for (Sym s : syms) j[kSymNames[static_cast<int>(s)]] = v[static_cast<int>(s)];
    j["x"] = p.x;
    return j;
}

const std::vector<Sym>& symbols_of(const std::string& id) {
    static const std::vector<Sym> none;
    for (const auto& s : catalog())
        if (s.id == id) return s.symbols;
    return none;
}

Json report_json(const VerificationReport& r, bool timing) {
    Json j{{"identity_id", r.identity_id},
           {"family", to_string(r.family)},
           {"requested", r.requested},
           {"pass_count", r.pass_count},
           {"worst_rel_err", num(r.worst_rel_err)},
           {"passed", r.passed()}};
    if (!r.error_class.empty()) {
        j["error_class"] = r.error_class;
        j["error_message"] = r.error_message;
    }
    if (timing) j["elapsed_s"] = r.elapsed_s;
    const auto& syms = symbols_of(r.identity_id);
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json q{{"params", params_json(p.point, syms)},
               {"lhs", num(p.lhs)},
               {"rhs", num(p.rhs)},
               {"rel_err", num(p.rel_err)},
               {"err_est", num(p.err_est)},
               {"absolute", p.absolute},
               {"pass", p.pass}};
        if (!p.error_class.empty()) {
            q["error_class"] = p.error_class;
            q["error_message"] = p.error_message;
        }
        pts.push_back(std::move(q));
    }
    j["points"] = std::move(pts);
    return j;
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
    std::string t;
    for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "json") return Format::Json;
    if (t == "csv") return Format::Csv;
    if (t == "table") return Format::Table;
    return std::nullopt;
}

std::string render(const std::vector<VerificationReport>& reports, const ReportMeta& meta,
                   Format format) {
    int passed = 0, points = 0, points_passed = 0;
    for (const auto& r : reports) {
        passed += r.passed();
        points += r.requested;
        points_passed += r.pass_count;
    }
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            Json j{{"version", kReportVersion},
                   {"seed", meta.seed},
                   {"tolerances", tolerances_json(meta)},
                   {"summary",
                    {{"identities", reports.size()},
                     {"passed", passed},
                     {"point_checks", points},
                     {"points_passed", points_passed}}}};
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_json(r, meta.timing));
            j["reports"] = std::move(arr);
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            os << "identity_id,family,point";
            for (const char* n : kSymNames) os << ',' << n;
            os << ",x,lhs,rhs,rel_err,err_est,absolute,pass,error_class\n";
            for (const auto& r : reports) {
                if (r.points.empty()) {
                    os << csv_field(r.identity_id) << ',' << to_string(r.family) << ",";
                    for (int i = 0; i < kNumSyms; ++i) os << ',';
                    os << ",,,,,,0," << r.error_class << '\n';
                    continue;
                }
                const auto& syms = symbols_of(r.identity_id);
                for (std::size_t i = 0; i < r.points.size(); ++i) {
                    const PointResult& p = r.points[i];
                    SymValues v = p.point.values();
                    os << csv_field(r.identity_id) << ',' << to_string(r.family) << ',' << i;
                    for (int k = 0; k < kNumSyms; ++k) {
                        bool used = false;
                        for (Sym s : syms) used = used || static_cast<int>(s) == k;
                        os << ',' << (used ? g17(v[k]) : "");
                    }
                    os << ',' << g17(p.point.x) << ',' << g17(p.lhs) << ',' << g17(p.rhs) << ','
                       << g17(p.rel_err) << ',' << g17(p.err_est) << ',' << p.absolute << ','
                       << p.pass << ',' << p.error_class << '\n';
                }
            }
            break;
        }
        case Format::Table: {
            char line[256];
            std::snprintf(line, sizeof line, "%-18s %-12s %7s %11s  %s\n", "identity", "family", "pass",
                          "worst", "status");
            os << line;
            for (const auto& r : reports) {
                std::string status = r.passed() ? "ok" : "FAIL";
                if (!r.error_class.empty()) status += " (" + r.error_class + ")";
                for (const auto& p : r.points)
                    if (!p.error_class.empty()) {
                        status += " (" + p.error_class + ")";
                        break;
                    }
                if (meta.timing) status += fmt("  %.2fs", r.elapsed_s);
                std::snprintf(line, sizeof line, "%-18s %-12s %3d/%-3d %11.3e  %s\n",
                              r.identity_id.c_str(), to_string(r.family).c_str(), r.pass_count,
                              r.requested, r.worst_rel_err, status.c_str());
                os << line;
            }
            os << passed << "/" << reports.size() << " identities pass, " << points_passed << "/"
               << points << " point checks (seed " << meta.seed << ", rtol "
               << fmt("%g", meta.rel_tol) << ")\n";
            break;
        }
    }
    return os.str();
}

std::string render(const TransmutationReport& r, const ReportMeta& meta, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            Json kern = Json::array(), integ = Json::array();
            for (const auto& k : r.kernel) {
                Json q{{"a", k.p.a}, {"b", k.p.b}, {"c", k.p.c}, {"mu", k.mu}, {"x", k.x},
                       {"y", k.y},   {"lhs", num(k.lhs)}, {"rhs", num(k.rhs)},
                       {"residual", num(k.residual)}, {"pass", k.pass}};
                if (!k.error_class.empty()) q["error_class"] = k.error_class;
                kern.push_back(std::move(q));
            }
            for (const auto& p : r.integral) {
                Json q{{"a", p.p.a},         {"b", p.p.b},         {"c", p.p.c},
                       {"mu", p.mu},         {"x", p.x},           {"y0", p.y0},
                       {"sigma", p.sigma},   {"method", p.method}, {"lhs", num(p.lhs)},
                       {"rhs", num(p.rhs)},  {"rel_diff", num(p.rel_diff)},
                       {"err_est", num(p.err_est)}, {"pass", p.pass}};
                if (!p.error_class.empty()) {
                    q["error_class"] = p.error_class;
                    q["error_message"] = p.error_message;
                }
                integ.push_back(std::move(q));
            }
            Json j{{"version", kReportVersion},
                   {"seed", meta.seed},
                   {"tolerances", {{"kernel", r.tol}, {"integral", r.integral_tol}}},
                   {"case", r.case_name},
                   {"kernel_pass", r.kernel_pass},
                   {"integral_pass", r.integral_pass},
                   {"worst_kernel", num(r.worst_kernel)},
                   {"worst_integral", num(r.worst_integral)},
                   {"passed", r.passed()}};
            if (meta.timing) j["elapsed_s"] = r.elapsed_s;
            j["kernel_points"] = std::move(kern);
            j["integral_points"] = std::move(integ);
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            os << "case,check,point,a,b,c,mu,x,y,lhs,rhs,deviation,err_est,method,pass,error_class\n";
            for (std::size_t i = 0; i < r.kernel.size(); ++i) {
                const auto& k = r.kernel[i];
                os << csv_field(r.case_name) << ",kernel," << i << ',' << g17(k.p.a) << ','
                   << g17(k.p.b) << ',' << g17(k.p.c) << ',' << g17(k.mu) << ',' << g17(k.x) << ','
                   << g17(k.y) << ',' << g17(k.lhs) << ',' << g17(k.rhs) << ',' << g17(k.residual)
                   << ",,," << k.pass << ',' << k.error_class << '\n';
            }
            for (std::size_t i = 0; i < r.integral.size(); ++i) {
                const auto& p = r.integral[i];
                os << csv_field(r.case_name) << ",integral," << i << ',' << g17(p.p.a) << ','
                   << g17(p.p.b) << ',' << g17(p.p.c) << ',' << g17(p.mu) << ',' << g17(p.x) << ",,"
                   << g17(p.lhs) << ',' << g17(p.rhs) << ',' << g17(p.rel_diff) << ','
                   << g17(p.err_est) << ',' << p.method << ',' << p.pass << ',' << p.error_class
                   << '\n';
            }
            break;
        }
        case Format::Table: {
            os << "case " << r.case_name << "\n";
            os << "  kernel   " << r.kernel_pass << "/" << r.kernel.size() << "  worst "
               << fmt("%.3e", r.worst_kernel) << "  (tol " << fmt("%g", r.tol) << ")\n";
            os << "  integral " << r.integral_pass << "/" << r.integral.size() << "  worst "
               << fmt("%.3e", r.worst_integral) << "  (tol " << fmt("%g", r.integral_tol) << ")";
            if (!r.integral.empty()) os << "  method " << r.integral.front().method;
            os << "\n";
            for (const auto& p : r.integral)
                if (!p.error_class.empty()) os << "  error: " << p.error_class << ": " << p.error_message << "\n";
            if (meta.timing) os << "  elapsed " << fmt("%.2fs", r.elapsed_s) << "\n";
            os << (r.passed() ? "PASS" : "FAIL") << "\n";
            break;
        }
    }
    return os.str();
}

std::string render_catalog_list(const std::vector<const IdentitySpec*>& specs, Format format) {
    std::ostringstream os;
    auto domain = [](const IdentitySpec& s) {
        std::string out;
        for (const auto& iv : s.x_domain) {
            if (!out.empty()) out += " U ";
            auto b = [](double v) { return std::isinf(v) ? std::string(v < 0 ? "-inf" : "inf") : fmt("%g", v); };
            out += "(" + b(iv.lo) + "," + b(iv.hi) + ")";
        }
        return out;
    };
    auto symbols = [](const IdentitySpec& s) {
        std::string out;
        for (Sym y : s.symbols) {
            if (!out.empty()) out += ' ';
            out += kSymNames[static_cast<int>(y)];
        }
        return out;
    };
    switch (format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto* s : specs)
                arr.push_back({{"id", s->id},
                               {"family", to_string(s->family)},
                               {"tag", s->tag},
                               {"symbols", symbols(*s)},
                               {"x_domain", domain(*s)}});
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << "id,family,tag,symbols,x_domain\n";
            for (const auto* s : specs)
                os << csv_field(s->id) << ',' << to_string(s->family) << ',' << csv_field(s->tag) << ','
                   << csv_field(symbols(*s)) << ',' << csv_field(domain(*s)) << '\n';
            break;
        case Format::Table: {
            char line[512];
            for (const auto* s : specs) {
                std::snprintf(line, sizeof line, "%-18s %-12s %-16s %s\n", s->id.c_str(),
                              to_string(s->family).c_str(), domain(*s).c_str(), s->tag.c_str());
                os << line;
            }
            os << specs.size() << " identities\n";
            break;
        }
    }
    return os.str();
}

}  // namespace hyptrans
