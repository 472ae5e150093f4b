#include "CLI11.hpp"
#include "commands.hpp"

#include <fstream>
#include <iostream>

using namespace uqs;
using namespace uqs::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of quantum group structures at roots of unity"};
    app.require_subcommand(1);

    RunConfig given;
    std::string cartan_text, config_path, out_path;
    bool no_timing = false;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;
    auto track = [&](CLI::Option* opt, std::function<void(RunConfig&)> apply) { overrides.emplace_back(opt, std::move(apply)); };

    track(app.add_option("--type", given.type, "Cartan type such as A2, B2, G2"), [&](RunConfig& c) { c.type = given.type; });
    track(app.add_option("--cartan", cartan_text, "Cartan matrix as JSON, e.g. [[2,-1],[-1,2]]"), [&](RunConfig& c) {
        c.cartan = json::parse(cartan_text).get<std::vector<std::vector<int>>>();
    });
    track(app.add_option("--m", given.m, "Odd order of the root of unity"), [&](RunConfig& c) { c.m = given.m; });
    track(app.add_option("--element", given.element, "Weyl group element as a word, e.g. \"s1 s2\""),
          [&](RunConfig& c) { c.element = given.element; });
    track(app.add_option("--eta", given.eta_path, "JSON file with the central character"),
          [&](RunConfig& c) { c.eta_path = given.eta_path; });
    track(app.add_option("--chi", given.chi_path, "JSON file with the values c_i"), [&](RunConfig& c) { c.chi_path = given.chi_path; });
    track(app.add_option("--l", given.l_values, "Inline values eta(l_i)")->delimiter(','),
          [&](RunConfig& c) { c.l_values = given.l_values; });
    track(app.add_option("--c", given.c_values, "Inline values c_i")->delimiter(','),
          [&](RunConfig& c) { c.c_values = given.c_values; });
    track(app.add_option("--mode", given.mode, "Sweep mode: all or classes"), [&](RunConfig& c) { c.mode = given.mode; });
    track(app.add_option("--budget-dim", given.budget_dim, "Largest algebra dimension handled densely"),
          [&](RunConfig& c) { c.budget_dim = given.budget_dim; });
    track(app.add_option("--budget-search", given.budget_search, "Node budget of the ordering search"),
          [&](RunConfig& c) { c.budget_search = given.budget_search; });
    track(app.add_option("--seed", given.seed, "Seed for sampled checks"), [&](RunConfig& c) { c.seed = given.seed; });
    track(app.add_option("--jobs", given.jobs, "Worker threads for sweeps"), [&](RunConfig& c) { c.jobs = given.jobs; });
    app.add_option("--config", config_path, "JSON configuration file; command-line options take precedence");
    app.add_option("--out", out_path, "Write the JSON report here and print a summary table");
    app.add_flag("--no-timing", no_timing, "Omit timing fields from the JSON report");

    std::vector<std::pair<CLI::App*, std::string>> commands;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"roots", "Cartan datum and positive roots"},
             {"carter", "Carter decomposition and Cayley data of an element"},
             {"ordering", "Adapted normal ordering and segment checks"},
             {"relations", "Realization relations and character residuals"},
             {"ueta", "Central elements, U_eta(g) dimension and Frobenius form"},
             {"walg", "Induced module Q_chi, the algebra W and Skryabin round trips"},
             {"sweep", "Combinatorial and symbolic checks over the Weyl group"}}) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        commands.emplace_back(sub, name);
    }
    auto* verify = app.add_subcommand("verify", "Verification of module-theoretic statements")->fallthrough();
    verify->require_subcommand(1);
    auto* dkp = verify->add_subcommand("dkp", "Freeness over U_eta(m-) and divisibility of module dimensions")->fallthrough();
    commands.emplace_back(dkp, "verify dkp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg.merge(load_json_file(config_path));
        for (const auto& [opt, apply] : overrides)
            if (opt->count() > 0) apply(cfg);
        std::string command;
        for (const auto& [sub, name] : commands)
            if (sub->parsed()) command = name;
        Report report = run_command(command, cfg);
        std::string text = report_to_json(report, !no_timing).dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
            std::cerr << summary_table(report);
        } else {
            std::ofstream out(out_path);
            if (!(out << text)) throw InvalidArgument("cannot write " + out_path);
            std::cout << summary_table(report);
        }
        return report.exit_status();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
