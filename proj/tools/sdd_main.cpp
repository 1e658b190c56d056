// Copyright 2026 The sdd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line frontend. Exit codes are a stable contract:
//   0 success, 1 input/parse failure, 2 invalid parameters,
//   3 shape mismatch between inputs, 4 metric-axiom or bound violation.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sdd/corpus.hpp"
#include "sdd/io.hpp"
#include "sdd/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitParams = 2;
constexpr int kExitShape = 3;
constexpr int kExitViolation = 4;

struct Options {
    std::string input, input_a, input_b, out, invariant, metric = "emd", name;
    std::size_t h = 2;
    unsigned l = 1;
    double eps = 0.01;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double gamma = 1.0;
    bool validate_triangle = false;
    std::string t6_params;  // "l1,l2,l3"
    std::string t6_signs;   // e.g. "+-+"
};

int run_compute(const Options& opt)
{
    const sdd::Cloud cloud = sdd::io::load_cloud(opt.input, opt.validate_triangle);
    std::string payload;
    if (opt.invariant == "sdd") {
        payload = sdd::io::sdd_to_json(sdd::sdd(cloud, opt.h));
    } else if (opt.invariant == "pdd") {
        payload = sdd::io::pdd_to_json(sdd::pdd(cloud));
    } else if (opt.invariant == "amd") {
        payload = sdd::io::reals_to_json(sdd::amd(cloud, opt.h));
    } else if (opt.invariant == "sdm") {
        payload = sdd::io::reals_to_json(sdd::sdm(cloud, opt.h, opt.l));
    } else if (opt.invariant == "wsd") {
        payload = sdd::io::wsd_to_json(sdd::wsd(sdd::WeightedSpace(cloud), opt.h));
    } else {
        throw sdd::ParamError("invariant: unknown '" + opt.invariant +
                              "' (expected sdd, pdd, amd, sdm or wsd)");
    }
    sdd::io::write_file(opt.out, payload);
    return kExitOk;
}

int run_compare(const Options& opt)
{
    const sdd::Cloud a = sdd::io::load_cloud(opt.input_a, opt.validate_triangle);
    const sdd::Cloud b = sdd::io::load_cloud(opt.input_b, opt.validate_triangle);
    if (a.size() != b.size())
        throw sdd::ShapeError("compare: point counts differ (" + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + ")");
    if (opt.metric != "emd" && opt.metric != "lac")
        throw sdd::ParamError("metric: unknown '" + opt.metric + "' (expected emd or lac)");

    const auto start = std::chrono::steady_clock::now();
    double value = 0.0;
    double lower = 0.0;
    if (opt.invariant == "wsd") {
        const sdd::Wsd wa = sdd::wsd(sdd::WeightedSpace(a), opt.h);
        const sdd::Wsd wb = sdd::wsd(sdd::WeightedSpace(b), opt.h);
        if (opt.metric != "emd")
            throw sdd::ParamError("metric: weighted comparison supports emd only");
        value = sdd::wsd_dist_emd(wa, wb, opt.gamma);
    } else {
        const sdd::Sdd sa = sdd::sdd(a, opt.h);
        const sdd::Sdd sb = sdd::sdd(b, opt.h);
        value = (opt.metric == "emd") ? sdd::sdd_dist_emd(sa, sb) : sdd::sdd_dist_lac(sa, sb);
        lower = sdd::sdm_lower_bound(a, b, opt.h);
    }
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const std::string report =
        sdd::io::comparison_report_json(opt.metric, opt.h, value, lower, ms);
    if (opt.out.empty())
        std::cout << report;
    else
        sdd::io::write_file(opt.out, report);
    return kExitOk;
}

sdd::corpus::T6Params parse_t6_params(const Options& opt)
{
    sdd::corpus::T6Params params = sdd::corpus::T6Params::defaults();
    if (!opt.t6_params.empty()) {
        double l1 = 0, l2 = 0, l3 = 0;
        if (std::sscanf(opt.t6_params.c_str(), "%lf,%lf,%lf", &l1, &l2, &l3) != 3)
            throw sdd::ParamError("params: expected 'l1,l2,l3'");
        params.l1 = l1;
        params.l2 = l2;
        params.l3 = l3;
    }
    if (!opt.t6_signs.empty()) {
        if (opt.t6_signs.size() != 3)
            throw sdd::ParamError("signs: expected three characters from '+-'");
        int* signs[3] = {&params.sign_y1, &params.sign_y2, &params.sign_y3};
        for (int i = 0; i < 3; ++i) {
            const char c = opt.t6_signs[static_cast<std::size_t>(i)];
            if (c == '+')
                *signs[i] = 1;
            else if (c == '-')
                *signs[i] = -1;
            else
                throw sdd::ParamError("signs: expected '+' or '-'");
        }
    }
    return params;
}

int run_corpus(const Options& opt)
{
    const auto files = sdd::corpus::build(opt.name, parse_t6_params(opt));
    std::filesystem::create_directories(opt.out);
    for (const auto& [stem, cloud] : files) {
        const std::string path = (std::filesystem::path(opt.out) / (stem + ".json")).string();
        sdd::io::save_cloud(path, cloud);
        std::cout << path << "\n";
    }
    return kExitOk;
}

int run_perturb_test(const Options& opt)
{
    const sdd::Cloud cloud = sdd::io::load_cloud(opt.input, opt.validate_triangle);
    const auto trials = sdd::lipschitz_check(cloud, opt.eps, opt.trials, opt.h, opt.seed);

    std::string report = "{\"eps\": " + sdd::io::format_real(opt.eps) +
                         ", \"h\": " + std::to_string(opt.h) + ", \"trials\": [";
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials.size(); ++t) {
        const auto& trial = trials[t];
        if (t)
            report += ", ";
        report += "{\"emd\": " + sdd::io::format_real(trial.emd) +
                  ", \"lac\": " + sdd::io::format_real(trial.lac) +
                  ", \"bound\": " + sdd::io::format_real(trial.bound) +
                  ", \"lower_bound\": " + sdd::io::format_real(trial.lower_bound) +
                  ", \"ok\": " + (trial.ok() ? "true" : "false") + "}";
        if (!trial.ok())
            ++violations;
    }
    report += "], \"violations\": " + std::to_string(violations) + "}\n";

    if (opt.out.empty())
        std::cout << report;
    else
        sdd::io::write_file(opt.out, report);
    if (violations > 0) {
        std::cerr << "perturb-test: " << violations << " of " << trials.size()
                  << " trials violated the Lipschitz bounds\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_validate(const Options& opt)
{
    const sdd::Matrix matrix = sdd::io::load_matrix_lenient(opt.input);
    const auto violations = sdd::validate_metric(matrix);
    if (violations.empty()) {
        std::cout << "ok: all metric axioms hold\n";
        return kExitOk;
    }
    for (const auto& v : violations)
        std::cerr << "violation: " << v.describe() << "\n";
    return kExitViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Isometry invariants of finite metric spaces and Lipschitz metrics on them"};
    app.set_help_flag("--help", "Print help");  // keep --h free for the order flag
    app.require_subcommand(1);
    Options opt;

    auto* compute = app.add_subcommand("compute", "Compute an invariant of a cloud file");
    compute->set_help_flag("--help", "Print help");
    compute->add_option("--input,-i", opt.input, "Cloud file (.json or .csv)")->required();
    compute->add_option("--invariant", opt.invariant, "One of sdd, pdd, amd, sdm, wsd")
        ->required();
    compute->add_option("--h", opt.h, "Order h (kmax for amd)");
    compute->add_option("--l", opt.l, "Moment order for sdm");
    compute->add_option("--out", opt.out, "Output file")->required();
    compute->add_flag("--validate-triangle", opt.validate_triangle,
                      "Run the O(m^3) triangle check on matrix inputs");

    auto* cmp = app.add_subcommand("compare", "Distance between the SDDs of two clouds");
    cmp->set_help_flag("--help", "Print help");
    cmp->add_option("--a", opt.input_a, "First cloud file")->required();
    cmp->add_option("--b", opt.input_b, "Second cloud file")->required();
    cmp->add_option("--h", opt.h, "Order h");
    cmp->add_option("--metric", opt.metric, "emd or lac");
    cmp->add_option("--invariant", opt.invariant, "sdd (default) or wsd for weighted spaces");
    cmp->add_option("--gamma", opt.gamma, "Weight scale for the WDD metric");
    cmp->add_option("--out", opt.out, "Report file (stdout when omitted)");
    cmp->add_flag("--validate-triangle", opt.validate_triangle,
                  "Run the O(m^3) triangle check on matrix inputs");

    auto* corpus = app.add_subcommand("corpus", "Write a named example family as cloud files");
    corpus->set_help_flag("--help", "Print help");
    corpus->add_option("--name", opt.name, "TK, TRI_SQ, S5, Q7, T6 or TREES9")->required();
    corpus->add_option("--out", opt.out, "Output directory")->required();
    corpus->add_option("--params", opt.t6_params, "T6 half-lengths 'l1,l2,l3'");
    corpus->add_option("--signs", opt.t6_signs, "T6 y-sign choices, e.g. '+-+'");

    auto* pt = app.add_subcommand("perturb-test", "Check the 2*eps Lipschitz bounds on trials");
    pt->set_help_flag("--help", "Print help");
    pt->add_option("--input,-i", opt.input, "Cloud file (coordinates)")->required();
    pt->add_option("--eps", opt.eps, "Perturbation radius")->required();
    pt->add_option("--trials", opt.trials, "Number of trials");
    pt->add_option("--h", opt.h, "Order h");
    pt->add_option("--seed", opt.seed, "Random seed");
    pt->add_option("--out", opt.out, "Report file (stdout when omitted)");

    auto* validate = app.add_subcommand("validate", "Check all metric axioms of a cloud file");
    validate->set_help_flag("--help", "Print help");
    validate->add_option("--input,-i", opt.input, "Cloud file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParams;
    }

    try {
        if (compute->parsed())
            return run_compute(opt);
        if (cmp->parsed())
            return run_compare(opt);
        if (corpus->parsed())
            return run_corpus(opt);
        if (pt->parsed())
            return run_perturb_test(opt);
        if (validate->parsed())
            return run_validate(opt);
    } catch (const sdd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sdd::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const sdd::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParams;
}
