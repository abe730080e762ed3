// Command-line front end for the assessment pipeline.
//
// Exit codes: 0 success, 1 usage/parse error, 2 validation failure,
// 3 database error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cpsva/analysis.hpp"
#include "cpsva/graph.hpp"
#include "cpsva/matcher.hpp"
#include "cpsva/model.hpp"
#include "cpsva/report.hpp"
#include "cpsva/vulndb.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDatabase = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

cpsva::SystemModel load_model(const std::string& path) {
    return cpsva::parse_model(read_file(path));
}

cpsva::VulnStore load_db(const std::string& dir) {
    cpsva::VulnStore store;
    if (!fs::is_directory(dir)) {
        throw cpsva::IngestError("database directory not found: " + dir);
    }
    std::vector<fs::path> feeds;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") feeds.push_back(entry.path());
    }
    std::sort(feeds.begin(), feeds.end());
    for (const auto& feed : feeds) {
        auto report = cpsva::ingest_nvd(read_file(feed.string()), store);
        for (const auto& w : report.warnings) {
            std::cerr << feed.filename().string() << ": " << w << "\n";
        }
    }
    return store;
}

void print_vector(const cpsva::AttackVector& v) {
    std::cout << v.id << " [" << cpsva::effect_name(v.effect)
              << ", requires " << cpsva::privilege_name(v.required_privilege)
              << ", gains " << cpsva::privilege_name(v.gained_privilege)
              << (v.requires_user_interaction ? ", user interaction" : "")
              << "]\n  " << v.summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-driven vulnerability assessment for cyber-physical systems"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::string model_path, db_dir, out_path, format = "markdown";
    std::string feed_path, query, remote_url;
    bool surface_only = false;

    auto* scan = app.add_subcommand("scan", "Assess a model against a vulnerability database");
    scan->add_option("model", model_path, "Model file (.model)")->required();
    scan->add_option("--db", db_dir, "Directory of NVD-style JSON feeds")->required();
    scan->add_option("--format", format, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    scan->add_flag("--surface-only", surface_only,
                   "Only report components on the attack surface");

    auto* export_cmd = app.add_subcommand("export-graphml",
                                          "Transform a model to GraphML");
    export_cmd->add_option("model", model_path, "Model file (.model)")->required();
    export_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* validate = app.add_subcommand("validate", "Validate a model file");
    validate->add_option("model", model_path, "Model file (.model)")->required();

    auto* db = app.add_subcommand("db", "Vulnerability database maintenance");
    db->require_subcommand(1);
    auto* ingest = db->add_subcommand("ingest", "Add a feed file to a database directory");
    ingest->add_option("feed", feed_path, "NVD-style JSON feed")->required();
    ingest->add_option("--db", db_dir, "Database directory")->required();
    auto* db_query = db->add_subcommand("query", "Search the database for a term");
    db_query->add_option("term", query, "Query term")->required();
    db_query->add_option("--db", db_dir, "Database directory");
    db_query->add_option("--remote", remote_url,
                         "Query a remote cve-search style endpoint instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*scan) {
            cpsva::SystemModel model = load_model(model_path);
            cpsva::VulnStore store;
            try {
                store = load_db(db_dir);
            } catch (const cpsva::IngestError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitDatabase;
            }
            cpsva::AssessmentReport report = cpsva::build_report(model, store);
            if (surface_only) {
                std::erase_if(report.findings, [](const auto& f) {
                    return !f.on_attack_surface;
                });
            }
            std::cout << cpsva::render_report(
                report, format == "json" ? cpsva::ReportFormat::Json
                                         : cpsva::ReportFormat::Markdown);
            return kExitOk;
        }

        if (*export_cmd) {
            cpsva::SystemModel model = load_model(model_path);
            std::string doc = cpsva::emit_graphml(cpsva::to_graph(model));
            if (out_path.empty()) {
                std::cout << doc;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                out << doc;
            }
            return kExitOk;
        }

        if (*validate) {
            try {
                load_model(model_path);
            } catch (const cpsva::ModelParseError& e) {
                std::cerr << e.what() << "\n";
                return kExitValidation;
            }
            std::cout << model_path << ": OK\n";
            return kExitOk;
        }

        if (*ingest) {
            try {
                cpsva::VulnStore store;
                auto report = cpsva::ingest_nvd(read_file(feed_path), store);
                fs::create_directories(db_dir);
                fs::copy_file(feed_path,
                              fs::path(db_dir) / fs::path(feed_path).filename(),
                              fs::copy_options::overwrite_existing);
                std::cout << "ingested " << report.added << " records, skipped "
                          << report.skipped << "\n";
                for (const auto& w : report.warnings) std::cerr << w << "\n";
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitDatabase;
            }
            return kExitOk;
        }

        if (*db_query) {
            try {
                std::vector<cpsva::AttackVector> results;
                if (!remote_url.empty()) {
                    results = cpsva::fetch_remote(remote_url, query);
                } else {
                    if (db_dir.empty()) {
                        std::cerr << "error: either --db or --remote is required\n";
                        return kExitUsage;
                    }
                    cpsva::VulnStore store = load_db(db_dir);
                    if (const cpsva::AttackVector* hit = store.lookup(query)) {
                        results.push_back(*hit);
                    } else {
                        std::string needle = query;
                        for (auto& c : needle) c = static_cast<char>(std::tolower(
                            static_cast<unsigned char>(c)));
                        for (std::size_t i = 0; i < store.size(); ++i) {
                            if (store.searchable_text(i).find(needle) !=
                                std::string::npos) {
                                results.push_back(store.records()[i]);
                            }
                        }
                    }
                }
                for (const auto& v : results) print_vector(v);
                std::cout << results.size() << " result(s)\n";
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitDatabase;
            }
            return kExitOk;
        }
    } catch (const cpsva::ModelParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const cpsva::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
