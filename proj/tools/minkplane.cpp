#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mink/commands.hpp"

using namespace mink;

int main(int argc, char** argv) {
    CLI::App app{"minkplane: antinorm and Radon-curve computations in normed planes"};
    app.set_version_flag("--version", std::string("minkplane ") + kToolVersion);

    std::string command, scene_path, out_path, svg_path;
    std::vector<std::string> tol_overrides;
    CliOverrides flags;
    std::uint64_t seed_value = 0;
    bool seed_set = false;
    int ngon_value = 0, trials_value = 0;

    std::string names;
    for (const auto& n : command_names()) names += (names.empty() ? "" : "|") + n;
    app.add_option("command", command, "one of: " + names)->required();
    app.add_option("--scene", scene_path, "scene JSON file");
    app.add_option("--out", out_path, "write the JSON report here (default: stdout)");
    app.add_option("--svg", svg_path, "write the figure SVG here");
    auto* seed_opt = app.add_option("--seed", seed_value, "master seed override");
    app.add_option("--tol", tol_overrides,
                   "tolerance override, key=value with key in {exact, opt}");
    auto* ngon_opt = app.add_option("--ngon", ngon_value, "zenodorus polygon size");
    auto* trials_opt = app.add_option("--trials", trials_value, "trial budget override");
    app.add_option("--suite", flags.suite, "property suite for proptest (default: all)");
    app.add_option("--body", flags.body, "named body to operate on");

    CLI11_PARSE(app, argc, argv);
    seed_set = seed_opt->count() > 0;
    if (seed_set) flags.seed = seed_value;
    if (ngon_opt->count() > 0) flags.ngon = ngon_value;
    if (trials_opt->count() > 0) flags.trials = trials_value;

    try {
        for (const auto& kv : tol_overrides) {
            auto eq = kv.find('=');
            require(eq != std::string::npos, "--tol expects key=value");
            std::string key = kv.substr(0, eq);
            double value = std::stod(kv.substr(eq + 1));
            if (key == "exact")
                flags.tol_exact = value;
            else if (key == "opt")
                flags.tol_opt = value;
            else
                throw validation_error("unknown tolerance key: " + key);
        }

        std::optional<Scene> scene;
        if (!scene_path.empty()) scene = load_scene_file(scene_path);

        CommandOutcome out = run_command(command, scene ? &*scene : nullptr, flags);

        std::string text = out.report.dump(2);
        text.push_back('\n');
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            require(f.good(), "cannot write report file: " + out_path);
            f << text;
        }
        if (!svg_path.empty()) {
            std::ofstream f(svg_path, std::ios::binary);
            require(f.good(), "cannot write SVG file: " + svg_path);
            if (out.svg.empty()) {
                // minimal valid SVG with a caption only
                f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 240 24\">\n"
                  << "  <text x=\"4\" y=\"16\" font-size=\"12\" fill=\"#333\">minkplane "
                  << command << ": no geometric payload</text>\n</svg>\n";
            } else {
                f << out.svg;
            }
        }
        return out.exit_code;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
