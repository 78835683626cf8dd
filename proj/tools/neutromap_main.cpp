// Command-line front end: classify structures, run scenarios, combine expert
// maps, export matrices.  Exit codes: 0 success, 1 internal fault, 2 bad
// input or usage.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <neutromap/cli.hpp>

using namespace neutromap;

namespace {

int run_main(int argc, char **argv) {
    CLI::App app{"n-matrix cognitive/relational map toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json")->capture_default_str();

    // classify
    auto *classify = app.add_subcommand("classify", "report shape, content and graph taxonomy");
    classify->fallthrough();
    std::string classify_path;
    classify->add_option("map", classify_path, "map file (.nmap or .json)")->required();

    // run
    auto *run = app.add_subcommand("run", "run a scenario to its hidden pattern");
    run->fallthrough();
    std::string run_path;
    std::string scenario_name;
    std::string on_list;
    bool all_scenarios = false;
    long long threshold = 0;
    std::string mode;
    bool trace = false;
    run->add_option("map", run_path, "map file")->required();
    run->add_option("--scenario", scenario_name, "named scenario to run");
    run->add_option("--on", on_list, "comma-separated on-node labels");
    run->add_flag("--all-scenarios", all_scenarios, "run every named scenario");
    run->add_option("--threshold", threshold, "threshold constant override (k >= 1)");
    run->add_option("--mode", mode, "threshold mode override: real|indet");
    run->add_flag("--trace", trace, "print the full state trace");

    // combine
    auto *combine = app.add_subcommand("combine", "sum expert maps entrywise");
    combine->fallthrough();
    std::vector<std::string> combine_paths;
    std::string out_path;
    combine->add_option("maps", combine_paths, "two or more aligned map files")->required();
    combine->add_option("-o,--out", out_path, "output .nmap path")->required();

    // export-matrix
    auto *exportm = app.add_subcommand("export-matrix", "print the document's n-matrix");
    exportm->fallthrough();
    std::string export_path;
    exportm->add_option("map", export_path, "map file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) {
            auto doc = cli::load_document(classify_path, std::cerr);
            if (!doc) return 2;
            auto rep = cli::classify_document(*doc);
            if (format == "json") std::cout << cli::render_json(rep).dump(2) << "\n";
            else std::cout << cli::render_text(rep);
            return 0;
        }
        if (*run) {
            auto doc = cli::load_document(run_path, std::cerr);
            if (!doc) return 2;
            cli::RunOptions opt;
            opt.trace = trace;
            opt.json_format = format == "json";
            if (threshold != 0) opt.threshold = threshold;
            if (!mode.empty()) {
                if (mode == "real") opt.mode = ThresholdMode::RealDominant;
                else if (mode == "indet") opt.mode = ThresholdMode::IndetDominant;
                else throw cli::UsageError("mode must be real or indet");
            }
            if (all_scenarios) {
                if (doc->scenarios.empty()) throw cli::UsageError("document has no scenarios");
                for (const auto &s : doc->scenarios) {
                    cli::RunOptions one = opt;
                    one.scenario = s.name;
                    std::cout << "== scenario \"" << s.name << "\" ==\n";
                    std::cout << cli::run_document(*doc, one);
                }
                return 0;
            }
            if (!scenario_name.empty() && !on_list.empty())
                throw cli::UsageError("give either --scenario or --on, not both");
            if (!scenario_name.empty()) opt.scenario = scenario_name;
            else if (!on_list.empty()) {
                std::string tok;
                std::istringstream is(on_list);
                while (std::getline(is, tok, ','))
                    if (!tok.empty()) opt.on.push_back(tok);
            } else {
                throw cli::UsageError("run needs --scenario, --on or --all-scenarios");
            }
            std::cout << cli::run_document(*doc, opt);
            return 0;
        }
        if (*combine) {
            if (combine_paths.size() < 2) throw cli::UsageError("combine needs at least two maps");
            std::vector<MapDocument> docs;
            for (const auto &p : combine_paths) {
                auto doc = cli::load_document(p, std::cerr);
                if (!doc) return 2;
                docs.push_back(std::move(*doc));
            }
            MapDocument combined = cli::combine_documents(docs);
            cli::write_file(out_path, serialize(combined));
            return 0;
        }
        if (*exportm) {
            auto doc = cli::load_document(export_path, std::cerr);
            if (!doc) return 2;
            std::cout << cli::export_matrix(*doc);
            return 0;
        }
    } catch (const cli::UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace

int main(int argc, char **argv) { return run_main(argc, argv); }
