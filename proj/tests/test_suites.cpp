#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <sstream>

#include "concavekit/csv_export.hpp"
#include "concavekit/functionals.hpp"
#include "concavekit/suites.hpp"

using namespace concavekit;

namespace {

RunConfig quick_config() {
    RunConfig cfg;
    cfg.grid_radii = 8;
    cfg.grid_angles = 64;
    return cfg;
}

std::vector<std::string> split_lines(const std::string& body) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : body) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

TEST_CASE("registry lists the twelve suites") {
    const std::vector<std::string> expected = {
        "thm1-disk",  "thm2-fixed-a",   "cor-norm-bounds", "cor-norm-fixed",
        "thm1a-distortion", "hp-means", "thm3-conv",       "thm4-kaplan",
        "thm5-coeff", "adde2-extremal", "thm6-lambda",     "cor-region"};
    CHECK(suite_ids() == expected);
}

TEST_CASE("unknown suite and invalid configs raise config errors") {
    RunConfig cfg = quick_config();
    CHECK_THROWS_AS(run_suite(cfg, "no-such-suite"), ConfigError);

    RunConfig bad = cfg;
    bad.alphas = {2.5};
    CHECK_THROWS_AS(run_suite(bad, "adde2-extremal"), ConfigError);
    bad = cfg;
    bad.order = 4;
    CHECK_THROWS_AS(run_suite(bad, "adde2-extremal"), ConfigError);
    bad = cfg;
    bad.r_test = 0.9;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.order = 64;  // incompatible with the default guard radius
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("identical seed and config reproduce a report byte for byte") {
    RunConfig cfg = quick_config();
    cfg.seed = 20240817;
    const std::string a = reports_to_json({run_suite(cfg, "thm2-fixed-a")});
    const std::string b = reports_to_json({run_suite(cfg, "thm2-fixed-a")});
    CHECK(a == b);

    cfg.seed = 7;
    const std::string c = reports_to_json({run_suite(cfg, "thm2-fixed-a")});
    CHECK(a != c);
}

TEST_CASE("reports serialize with the documented fields and no wall time") {
    RunConfig cfg = quick_config();
    const std::string json = reports_to_json({run_suite(cfg, "adde2-extremal")});
    for (const char* needle :
         {"\"suite_id\"", "\"status\"", "\"margin\"", "\"n_samples\"", "\"seed\"",
          "\"details\"", "\"label\"", "\"z\""}) {
        CHECK(json.find(needle) != std::string::npos);
    }
    CHECK(json.find("wall_time") == std::string::npos);
}

TEST_CASE("fast suites pass on the default parameters") {
    RunConfig cfg = quick_config();
    for (const char* id : {"adde2-extremal", "thm6-lambda", "cor-region", "thm5-coeff"}) {
        const VerificationReport rep = run_suite(cfg, id);
        INFO(id, " margin=", rep.margin);
        CHECK(rep.status == Status::Pass);
    }
}

TEST_CASE("distortion curve rows reproduce the bound formulas") {
    RunConfig cfg = quick_config();
    const std::vector<double> radii{0.0, 0.5};
    const std::string body = render_curve(cfg, "distortion", radii, 2.0, Complex(0.5, 0.0));
    const std::vector<std::string> lines = split_lines(body);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "r,lower,upper,sample_min,sample_max\r");

    double r = 0, lo = 0, hi = 0, smin = 0, smax = 0;
    REQUIRE(std::sscanf(lines[2].c_str(), "%lf,%lf,%lf,%lf,%lf", &r, &lo, &hi, &smin,
                        &smax) == 5);
    CHECK(r == doctest::Approx(0.5));
    CHECK(lo == doctest::Approx(4.0 / 27.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(12.0).epsilon(1e-12));
    // the extremal family sweeps out the whole envelope
    CHECK(smin >= lo - 1e-9);
    CHECK(smax <= hi + 1e-9);
    CHECK(smax == doctest::Approx(hi).epsilon(1e-6));
}

TEST_CASE("empty radius grid yields a header-only file") {
    RunConfig cfg = quick_config();
    const std::string body = render_curve(cfg, "means", {}, 2.0, Complex(0.0, 0.0));
    CHECK(body == "r,m_p04,m_p07\r\n");
    CHECK_THROWS_AS(render_curve(cfg, "no-such-curve", {}, 2.0, Complex(0.0, 0.0)),
                    ConfigError);
}

TEST_CASE("disk-boundary curve samples the variability circle") {
    RunConfig cfg = quick_config();
    const std::string body = render_curve(cfg, "disk-boundary", {}, 2.0, Complex(0.5, 0.0));
    const std::vector<std::string> lines = split_lines(body);
    REQUIRE(lines.size() == 257);
    CHECK(lines[0] == "t,re,im\r");
    double t = 0, re = 0, im = 0;
    REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3);
    // center at z = 0.5 is 2*0.5 + 3 = 4; the t = 0 point adds the radius 1
    CHECK(t == doctest::Approx(0.0));
    CHECK(re == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(im == doctest::Approx(0.0));

    const DiskRegion disk = variability_disk(ConcaveParams(2.0), Complex(0.5, 0.0));
    CHECK(disk.center.real() == doctest::Approx(4.0));
    CHECK(disk.radius == doctest::Approx(1.0));
}

TEST_CASE("norm-radial curve is monotone in the cap radius") {
    RunConfig cfg = quick_config();
    const std::string body =
        render_curve(cfg, "norm-radial", {0.3, 0.6, 0.9}, 1.5, Complex(0.0, 0.0));
    const std::vector<std::string> lines = split_lines(body);
    REQUIRE(lines.size() == 4);
    double prev_gpi = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double r, gpi, g0, central;
        REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf,%lf,%lf", &r, &gpi, &g0, &central) == 4);
        CHECK(gpi > prev_gpi);
        CHECK(gpi == doctest::Approx(2.0 * (1.0 + r)).epsilon(1e-9));
        CHECK(g0 == doctest::Approx(2.0 * (1.5 + r)).epsilon(1e-9));
        CHECK(central == doctest::Approx(2.5 * (1.0 + r)).epsilon(1e-9));
        prev_gpi = gpi;
    }
}
