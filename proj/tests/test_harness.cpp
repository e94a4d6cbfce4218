#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hyptrans/harness.hpp"
#include "json.hpp"
#include "oracle_values.inc"

using namespace hyptrans;

namespace {

ParamPoint bateman_point() {
    ParamPoint p;
    p.a = 0.5;
    p.b = 0.5;
    p.c = 1.2;
    p.mu = 0.7;
    p.x = 0.6;
    return p;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char ch : s) n += ch == '\n';
    return n;
}

SampleOptions pin_mu(double mu) {
    SampleOptions opt;
    opt.fixed[static_cast<int>(Sym::Mu)] = mu;
    return opt;
}

}  // namespace

TEST_CASE("check_point relative branch") {
    PointResult r = check_point(find_identity("F-I-CP"), bateman_point(), 1e-6, 1e-10);
    CHECK(r.pass);
    CHECK_FALSE(r.absolute);
    CHECK(r.error_class.empty());
    CHECK(r.rel_err < 1e-12);
    CHECK(std::fabs(r.rhs - kBatemanExample) < 1e-13);
    CHECK(r.err_est <= 0.1 * 1e-6 * std::fabs(r.rhs));

    // an unreachable tolerance fails without an error class
    PointResult tight = check_point(find_identity("F-I-CP"), bateman_point(), 1e-30, 1e-10);
    CHECK_FALSE(tight.pass);
    CHECK(tight.error_class.empty());
}

TEST_CASE("check_point absolute branch at mu = 1") {
    const auto& s = find_identity("S-CP-W1toW5");
    auto pts = sample_params(s, 3, 3, pin_mu(1.0));
    for (const auto& p : pts) {
        PointResult r = check_point(s, p, 1e-6, 1e-10);
        CHECK(r.absolute);
        CHECK(r.rhs == 0.0);
        CHECK(r.rel_err == std::fabs(r.lhs));
        CHECK(r.pass);
    }
}

TEST_CASE("check_point records errors instead of throwing") {
    // (x - y)^{mu - 1} is not integrable at the endpoint y = x
    ParamPoint p = bateman_point();
    p.mu = -0.5;
    PointResult r = check_point(find_identity("F-I-CP"), p, 1e-6, 1e-10);
    CHECK_FALSE(r.pass);
    CHECK(r.error_class == "NonIntegrableError");
}

TEST_CASE("verify_identity example run") {
    VerificationReport rep = verify_identity("F-I-CP", 1, 5, 1e-6);
    CHECK(rep.identity_id == "F-I-CP");
    CHECK(rep.requested == 5);
    CHECK(rep.points.size() == 5);
    CHECK(rep.pass_count == 5);
    CHECK(rep.passed());
    CHECK(rep.worst_rel_err <= 1e-6);
    CHECK_THROWS_AS(verify_identity("F-9", 1, 5, 1e-6), UnknownIdentityError);
}

TEST_CASE("sampler failure becomes a report error") {
    VerifyOptions opt;
    opt.sample.fixed[static_cast<int>(Sym::C)] = -1.0;
    VerificationReport rep = verify_identity(find_identity("F-I-CP"), opt);
    CHECK(rep.error_class == "SamplerExhaustedError");
    CHECK(rep.points.empty());
    CHECK_FALSE(rep.passed());
}

TEST_CASE("verify_all family filter and ordering") {
    VerifyOptions opt;
    opt.n_points = 2;
    auto reps = verify_all(opt, Family::Stieltjes, 4);
    REQUIRE(reps.size() == 24);
    auto specs = catalog_family(Family::Stieltjes);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].identity_id == specs[i]->id);
        CHECK(reps[i].passed());
    }
    CHECK(verify_all(opt, Family::Composition, 2).size() == 4);
}

TEST_CASE("json reports are deterministic across thread counts") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.n_points = 2;
    ReportMeta meta;
    meta.seed = 7;
    std::string one = render(verify_all(opt, Family::WTransform, 1), meta, Format::Json);
    std::string many = render(verify_all(opt, Family::WTransform, 4), meta, Format::Json);
    std::string again = render(verify_all(opt, Family::WTransform, 4), meta, Format::Json);
    CHECK(one == many);
    CHECK(many == again);
}

TEST_CASE("json layout") {
    VerifyOptions opt;
    opt.n_points = 3;
    ReportMeta meta;
    auto doc = nlohmann::json::parse(render(verify_all(opt, Family::FracI, 1), meta, Format::Json));
    CHECK(doc["version"] == kReportVersion);
    CHECK(doc["seed"] == 42);
    CHECK(doc["tolerances"]["rel_tol"] == 1e-6);
    CHECK(doc["tolerances"]["zero_rhs"] == kZeroRhs);
    CHECK(doc["summary"]["identities"] == 3);
    CHECK(doc["summary"]["point_checks"] == 9);
    REQUIRE(doc["reports"].size() == 3);
    const auto& r = doc["reports"][0];
    CHECK(r["identity_id"] == "F-I-CP");
    CHECK(r["points"].size() == 3);
    CHECK(r["points"][0]["params"].contains("mu"));
    CHECK_FALSE(r["points"][0]["params"].contains("d"));
    CHECK_FALSE(r.contains("elapsed_s"));

    meta.timing = true;
    auto timed = nlohmann::json::parse(render(verify_all(opt, Family::FracI, 1), meta, Format::Json));
    CHECK(timed["reports"][0].contains("elapsed_s"));
}

TEST_CASE("csv and table layouts") {
    VerifyOptions opt;
    opt.n_points = 2;
    auto reps = verify_all(opt, Family::KarpSitnik, 1);
    ReportMeta meta;
    std::string csv = render(reps, meta, Format::Csv);
    CHECK(count_lines(csv) == 1 + 4);
    CHECK(csv.rfind("identity_id,family,point,", 0) == 0);
    std::string table = render(reps, meta, Format::Table);
    CHECK(table.find("K-3F2") != std::string::npos);
    CHECK(table.find("2/2 identities pass") != std::string::npos);

    CHECK(parse_format("JSON") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("catalog listing") {
    auto specs = catalog_family(Family::Euler);
    auto doc = nlohmann::json::parse(render_catalog_list(specs, Format::Json));
    CHECK(doc.size() == 12);
    std::string table = render_catalog_list(specs, Format::Table);
    CHECK(table.find("E-W6b") != std::string::npos);
}

TEST_CASE("transmutation rows") {
    for (const auto& tc : transmutation_cases()) {
        CAPTURE(tc.name);
        TransmutationReport rep = verify_transmutation(tc.name, 42, 6, 1e-8);
        CHECK(rep.kernel.size() == 6);
        CHECK(rep.integral.size() == 6);
        CHECK(rep.integral_tol == 1e-7);
        CHECK(rep.passed());
        for (const auto& r : rep.integral) CHECK(r.method == "direct");
    }
    CHECK_THROWS_AS(verify_transmutation("d+", 42, 5, 1e-8), UnknownCaseError);
}

TEST_CASE("transmutation below mu = 2 uses the rescaled form") {
    TransmuteOptions opt;
    opt.n_points = 6;
    opt.mu = 1.5;
    for (const char* name : {"a-,b-,c-", "c+", "a+"}) {
        TransmutationReport rep = verify_transmutation(name, opt);
        CHECK(rep.passed());
        for (const auto& r : rep.integral) CHECK(r.method == "rescaled");
        for (const auto& k : rep.kernel) CHECK(k.mu == 1.5);
    }
}

TEST_CASE("transmutation is deterministic") {
    TransmutationReport a = verify_transmutation("a+,c+", 9, 4, 1e-8);
    TransmutationReport b = verify_transmutation("a+,c+", 9, 4, 1e-8);
    ReportMeta meta;
    CHECK(render(a, meta, Format::Json) == render(b, meta, Format::Json));
    std::string csv = render(a, meta, Format::Csv);
    CHECK(count_lines(csv) == 1 + 8);
}
