#include "adfkit/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <string_view>
#include <vector>

namespace {

// CLI11 short options are single characters; map the multi-letter ones to long names.
std::vector<std::string> normalize(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        std::string_view a = argv[i];
        if (a == "-cf") args.emplace_back("--conflict-free");
        else if (a == "-sm") args.emplace_back("--stablemodel");
        else if (a == "-all") args.emplace_back("--all");
        else args.emplace_back(a);
    }
    return args;  // reversed, as CLI::App::parse(std::vector) expects
}

} // namespace

int main(int argc, char** argv) {
    using namespace adfkit;
    CLI::App app{"Semantics of abstract dialectical frameworks", "adfkit"};
    app.set_version_flag("--version", cli::version, "prints the current version");

    bool cf = false, model = false, stable = false, ground = false, complete = false, admissible = false, all = false;
    bool pform = false, prio = false, json = false;
    cli::RunConfig cfg;
    std::string instance;

    app.add_flag("--conflict-free", cf, "compute the conflict free sets (also -cf)");
    app.add_flag("-m,--model", model, "compute the two-valued models");
    app.add_flag("--stablemodel", stable, "compute the stable models (also -sm)");
    app.add_flag("-g,--grounded", ground, "compute the grounded model");
    app.add_flag("-c,--complete", complete, "compute the complete models");
    app.add_flag("-a,--admissible", admissible, "compute the admissible models");
    auto* tp = app.add_flag("--transform_pform", pform, "transform a propositional formula ADF before the computation");
    auto* tr = app.add_flag("--transform_prio", prio, "transform a prioritized ADF before the computation");
    tp->excludes(tr);
    app.add_flag("--all", all, "compute all sets and models (also -all)");
    app.add_flag("--json", json, "print results as JSON");
    app.add_flag("--trace", cfg.trace, "print the grounded iteration steps to stderr");
    app.add_option("instance", instance, "File name of the ADF instance (standard input if omitted or '-')");

    try {
        app.parse(normalize(argc, argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::ok : cli::usage_error;
    }

    if (!instance.empty()) cfg.instance = instance;
    cfg.transform = pform ? cli::Transform::Pform : prio ? cli::Transform::Prio : cli::Transform::None;
    cfg.output = json ? cli::OutputMode::Json : cli::OutputMode::Text;
    const std::pair<bool, Semantics> order[] = {
        {cf, Semantics::ConflictFree}, {model, Semantics::Model},       {stable, Semantics::Stable},
        {ground, Semantics::Grounded}, {complete, Semantics::Complete}, {admissible, Semantics::Admissible},
    };
    for (auto [on, k] : order) {
        if (on || all) cfg.semantics.push_back(k);
    }
    if (cfg.semantics.empty() && cfg.transform == cli::Transform::None) {
        std::cerr << "error: no semantics or transformation requested\n" << app.help();
        return cli::usage_error;
    }
    return cli::run(cfg, std::cin, std::cout, std::cerr);
}
