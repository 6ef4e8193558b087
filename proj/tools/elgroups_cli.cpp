// Command-line front end: parse ring/form specs, dispatch verification
// suites and finite-scale oracles, emit deterministic JSON reports.
//
// Exit codes: 0 all pass, 1 any fail, 2 configuration error, 3 partial-only.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "elgroups/elgroups.hpp"

namespace {

using namespace elgroups;

std::string slurp_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot open spec file: " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    }
    return arg;
}

int finish(const Report& rep, const SuiteConfig& cfg, const std::string& json_out) {
    json j = report_to_json(rep);
    j["config"] = {{"suite", cfg.suite},
                   {"n", cfg.n},
                   {"m", cfg.m},
                   {"trials", cfg.sample.trials},
                   {"seed", cfg.sample.seed},
                   {"cap", cfg.cap}};
    if (cfg.ring) j["config"]["ring"] = ring_to_json(*cfg.ring);
    if (cfg.form) j["config"]["form"] = form_to_json(*cfg.form);

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write report to " << json_out << "\n";
            return 2;
        }
        out << j.dump(2) << "\n";
    }

    std::size_t pass = rep.count(CheckStatus::Pass);
    std::size_t fail = rep.count(CheckStatus::Fail);
    std::size_t partial = rep.count(CheckStatus::Partial);
    for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::Pass) continue;
        std::cout << "[" << status_name(c.status) << "] " << c.id
                  << (c.witness.empty() ? "" : "  " + c.witness) << "\n";
    }
    std::cout << cfg.suite << ": " << pass << " pass, " << fail << " fail, " << partial
              << " partial\n";
    if (fail > 0) return 1;
    if (partial > 0) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for elementary and unitary matrix groups"};
    app.require_subcommand(1);

    std::string ring_arg, form_arg, json_out;
    SuiteConfig cfg;
    int trials = 8;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool takes_m = false) {
        sub->add_option("--ring", ring_arg, "ring spec json or @file");
        sub->add_option("--form", form_arg, "form ring spec json or @file");
        sub->add_option("--n", cfg.n, "matrix size parameter");
        if (takes_m) sub->add_option("--m", cfg.m, "stable range index m");
        sub->add_option("--cap", cfg.cap, "closure element cap");
        sub->add_option("--trials", trials, "sample count for infinite rings");
        sub->add_option("--seed", seed, "sampling seed");
        sub->add_option("--json", json_out, "write the JSON report to this path");
    };

    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->require_subcommand(1);
    const char* verbs[] = {"ecom",   "prop",        "normal-conj", "b-identities",
                           "generation", "fuu",     "st",          "ucom",
                           "fuu-unitary", "gamma",  "c-order",     "embed",
                           "membership",  "validate-form",         "all"};
    for (const char* v : verbs) add_common(verify->add_subcommand(v));

    for (const char* v : {"closure", "perfect", "k1", "ku1"}) add_common(app.add_subcommand(v));
    for (const char* v : {"sr", "lambda-sr"}) add_common(app.add_subcommand(v), true);
    CLI::App* nc = app.add_subcommand("normal-closure");
    add_common(nc);
    nc->add_option("--seeds", cfg.seeds,
                   "seed elements, matrix json or e(i,j,element) literals");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.suite = sub->get_name();
        if (cfg.suite == "verify") cfg.suite = sub->get_subcommands().front()->get_name();
        cfg.sample.trials = trials;
        cfg.sample.seed = seed;
        if (!ring_arg.empty()) cfg.ring = ring_from_json(json::parse(slurp_arg(ring_arg)));
        if (!form_arg.empty()) cfg.form = form_from_json(json::parse(slurp_arg(form_arg)));
        Report rep = run_suite(cfg);
        return finish(rep, cfg, json_out);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
