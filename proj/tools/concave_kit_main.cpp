// Command line front end: theorem-indexed verification suites, curve export,
// and the opt-in parameter-range experiment.
//
// Exit codes: 0 all pass, 1 any failure, 2 any inconclusive result,
// 64 configuration error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "concavekit/convolution.hpp"
#include "concavekit/csv_export.hpp"
#include "concavekit/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitConfig = 64;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CONCAVE_KIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw concavekit::ConfigError("CONCAVE_KIT_SEED is not an unsigned integer");
        }
    }
    return 42;
}

int run_verify(const concavekit::RunConfig& config, const std::string& suite,
               bool all, const std::string& json_path) {
    std::vector<concavekit::VerificationReport> reports;
    if (all || suite.empty()) {
        reports = concavekit::run_all(config);
    } else {
        reports.push_back(concavekit::run_suite(config, suite));
    }

    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        std::printf("[%-12s] %-18s margin=%+.3e samples=%-6zu (%lld ms)\n",
                    concavekit::to_string(r.status).c_str(), r.suite_id.c_str(), r.margin,
                    r.n_samples, static_cast<long long>(r.wall_time_ms));
        any_fail |= (r.status == concavekit::Status::Fail);
        any_inconclusive |= (r.status == concavekit::Status::Inconclusive);
    }

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "cannot open %s\n", json_path.c_str());
            return kExitConfig;
        }
        out << concavekit::reports_to_json(reports);
    }
    if (any_fail) return kExitFail;
    if (any_inconclusive) return kExitInconclusive;
    return kExitPass;
}

int run_experiment(const concavekit::RunConfig& config, double alpha) {
    // Probes the quadratic-region inclusion outside the admissible parameter
    // range.  Informational only: no verdict is attached to these values.
    using namespace concavekit;
    if (std::abs((alpha - 2.0) / (2.0 * (alpha + 1.0))) >= 0.5) {
        std::fprintf(stderr, "alpha=%g puts |c| >= 1/2; boundary may self-intersect\n", alpha);
        return kExitConfig;
    }
    const RegionQuadratic region{Complex((alpha - 2.0) / (2.0 * (alpha + 1.0)), 0.0)};
    std::printf("region probe at alpha=%.6g (c=%.6g)\n", alpha, region.c.real());
    for (const StarlikeFixture& fx : standard_starlike_fixtures(config.order)) {
        const Complex a = a_functional_raw(alpha, fx.phi2, fx.phi3);
        std::printf("  %-10s A=%+.12f%+.12fi  location=%s\n", fx.name.c_str(), a.real(),
                    a.imag(), to_string(region_membership(region, a)).c_str());
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concave-kit: numerical verification toolkit for concave univalent maps"};
    app.require_subcommand(1);

    concavekit::RunConfig config;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    bool all = false;
    std::string json_path;
    std::vector<double> alphas;
    std::uint64_t seed = 0;
    verify->add_option("--suite", suite, "suite id (see --list)");
    verify->add_flag("--all", all, "run every registered suite");
    verify->add_option("--alpha", alphas, "opening-angle parameters")->delimiter(',');
    verify->add_option("--order", config.order, "series truncation order");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--json", json_path, "write machine-readable reports here");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite ids and exit");

    auto* exp = app.add_subcommand("export", "write curve data as CSV");
    std::string curve, out_path, z_spec;
    double exp_alpha = 2.0;
    exp->add_option("--curve", curve, "curve id: distortion|means|norm-radial|disk-boundary")
        ->required();
    exp->add_option("--out", out_path, "output CSV path")->required();
    exp->add_option("--alpha", exp_alpha, "opening-angle parameter");
    exp->add_option("--z", z_spec, "evaluation point RE,IM (disk-boundary)");

    auto* experiment = app.add_subcommand(
        "experiment", "opt-in probes outside the admissible parameter range");
    double probe_alpha = 2.5;
    experiment->add_option("--alpha", probe_alpha,
                           "raw alpha for the region probe (may leave (1,2])");

    CLI11_PARSE(app, argc, argv);

    try {
        config.seed = verify->count("--seed") ? seed : default_seed();
        if (!alphas.empty()) config.alphas = alphas;

        if (verify->parsed()) {
            if (list_suites) {
                for (const std::string& id : concavekit::suite_ids()) {
                    std::printf("%s\n", id.c_str());
                }
                return kExitPass;
            }
            if (suite.empty() && !all) {
                std::fprintf(stderr, "verify: pass --suite ID or --all\n");
                return kExitConfig;
            }
            return run_verify(config, suite, all, json_path);
        }
        if (exp->parsed()) {
            if (!(exp_alpha > 1.0 && exp_alpha <= 2.0)) {
                throw concavekit::ConfigError("export: alpha outside (1, 2]");
            }
            concavekit::Complex z(0.5, 0.0);
            if (!z_spec.empty()) {
                double re = 0.0, im = 0.0;
                if (std::sscanf(z_spec.c_str(), "%lf,%lf", &re, &im) != 2) {
                    std::fprintf(stderr, "export: --z expects RE,IM\n");
                    return kExitConfig;
                }
                z = concavekit::Complex(re, im);
            }
            concavekit::export_curve(config, curve, out_path,
                                     concavekit::default_curve_radii(curve), exp_alpha, z);
            return kExitPass;
        }
        if (experiment->parsed()) {
            return run_experiment(config, probe_alpha);
        }
    } catch (const concavekit::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitConfig;
}
