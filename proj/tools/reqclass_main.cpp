#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reqclass/error.hpp"
#include "reqclass/experiment.hpp"
#include "reqclass/metrics.hpp"

namespace fs = std::filesystem;
using namespace reqclass;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_csv(const EvalReport& report) {
    std::ostringstream out;
    write_report_csv(out, report);
    return out.str();
}

std::string render_confusion(const ConfusionMatrix& m, bool normalized) {
    std::ostringstream out;
    write_confusion_csv(out, m, normalized);
    return out.str();
}

void write_out(const fs::path& path, const std::string& content) {
    atomic_write_file(path.string(), content);
    std::cout << "wrote " << path.string() << "\n";
}

std::string fmt_pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", v * 100.0);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v, bool percent) {
    if (!v) return "undefined";
    if (percent) return fmt_pct(*v);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

void print_summary(const EvalReport& r) {
    std::cout << "instances: " << r.matrix.total() << "  correct: "
              << r.matrix.trace() << "  accuracy: " << fmt_pct(r.accuracy)
              << "\n";
    std::cout << "kappa: " << fmt_opt(r.kappa, false)
              << "  weighted precision: "
              << fmt_opt(r.weighted_precision, true)
              << "  weighted recall: " << fmt_opt(r.weighted_recall, true)
              << "\n";
    for (const auto& w : r.warnings) std::cout << "note: " << w << "\n";
}

struct GlobalArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::string format = "json";
    std::optional<std::uint64_t> seed;
};

ExperimentConfig load_config(const GlobalArgs& g) {
    if (g.config_path.empty()) {
        throw UsageError("this command requires --config <file>");
    }
    ExperimentConfig cfg = ExperimentConfig::load(g.config_path);
    if (g.seed) cfg.seed = *g.seed;
    return cfg;
}

int cmd_ingest(const GlobalArgs& g, const std::string& corpus_path,
               const std::string& input_format) {
    const IngestOutcome ing = run_ingest(corpus_path, input_format);
    std::cout << "requirements: " << ing.corpus.size() << " (FR " << ing.fr
              << ", NFR " << ing.nfr << ")\n";
    for (const auto& [code, n] : ing.by_label)
        std::cout << "  " << code << ": " << n << "\n";

    std::ostringstream csv;
    write_corpus_csv(ing.corpus, csv);
    write_out(fs::path(g.out_dir) / "corpus.csv", csv.str());

    if (g.format == "json") {
        std::ostringstream j;
        j << "{\n  \"total\": " << ing.corpus.size() << ",\n  \"fr\": "
          << ing.fr << ",\n  \"nfr\": " << ing.nfr << ",\n  \"by_label\": {";
        bool first = true;
        for (const auto& [code, n] : ing.by_label) {
            j << (first ? "" : ",") << "\n    \"" << code << "\": " << n;
            first = false;
        }
        j << "\n  }\n}\n";
        write_out(fs::path(g.out_dir) / "summary.json", j.str());
    } else {
        std::ostringstream c;
        c << "label,count\n";
        for (const auto& [code, n] : ing.by_label)
            c << code << ',' << n << "\n";
        write_out(fs::path(g.out_dir) / "summary.csv", c.str());
    }
    return 0;
}

int cmd_preprocess(const GlobalArgs& g) {
    const ExperimentConfig cfg = load_config(g);
    const PreprocessOutcome out = run_preprocess(cfg);

    std::ostringstream csv;
    write_corpus_csv(out.processed, csv);
    write_out(fs::path(g.out_dir) / "processed.csv", csv.str());

    std::map<std::string, int> firings;
    for (const auto& e : out.audit) ++firings[e.trace.rule];

    if (g.format == "json") {
        std::ostringstream j;
        j << "[\n";
        for (std::size_t i = 0; i < out.audit.size(); ++i) {
            const auto& e = out.audit[i];
            j << "  {\"id\": \"" << e.requirement_id << "\", \"rule\": \""
              << e.trace.rule << "\", \"before\": \"" << e.trace.before
              << "\", \"after\": \"" << e.trace.after << "\"}"
              << (i + 1 < out.audit.size() ? "," : "") << "\n";
        }
        j << "]\n";
        write_out(fs::path(g.out_dir) / "audit.json", j.str());
    } else {
        std::ostringstream c;
        c << "id,rule,before,after\n";
        for (const auto& e : out.audit) {
            c << e.requirement_id << ',' << e.trace.rule << ",\""
              << e.trace.before << "\",\"" << e.trace.after << "\"\n";
        }
        write_out(fs::path(g.out_dir) / "audit.csv", c.str());
    }

    std::cout << "processed " << out.processed.size() << " requirements, "
              << out.audit.size() << " rule firings\n";
    for (const auto& [rule, n] : firings)
        std::cout << "  " << rule << ": " << n << "\n";
    return 0;
}

int cmd_evaluate(const GlobalArgs& g) {
    const ExperimentConfig cfg = load_config(g);
    const EvaluateOutcome out = run_evaluate(cfg);

    std::cout << "task: " << task_name(cfg.task) << "  method: "
              << method_name(cfg.method) << "  preprocessed: "
              << (cfg.preprocess ? "yes" : "no") << "\n";
    print_summary(out.report);
    if (out.hopkins)
        std::cout << "hopkins: " << fmt_opt(out.hopkins, false)
                  << "  mean silhouette: "
                  << fmt_opt(out.silhouette_mean, false) << "\n";

    const fs::path dir(g.out_dir);
    write_out(dir / "report.json", out.to_json());
    if (g.format == "csv") {
        write_out(dir / "report.csv", render_csv(out.report));
    }
    write_out(dir / "confusion.csv", render_confusion(out.report.matrix, false));
    write_out(dir / "confusion_normalized.csv",
              render_confusion(out.report.matrix, true));
    return 0;
}

int cmd_compare(const GlobalArgs& g, const std::vector<std::string>& paths) {
    if (paths.size() < 2) throw UsageError("compare needs at least two reports");
    std::vector<std::string> docs;
    docs.reserve(paths.size());
    for (const auto& p : paths) docs.push_back(slurp(p));
    const std::string csv = compare_reports_csv(docs);
    std::cout << csv;
    write_out(fs::path(g.out_dir) / "compare.csv", csv);
    return 0;
}

int cmd_report(const GlobalArgs& g, const std::string& path,
               bool show_defaults) {
    if (show_defaults) {
        std::cout << ExperimentConfig().to_json();
        return 0;
    }
    if (path.empty()) {
        throw UsageError("report needs a report.json path or --show-defaults");
    }
    const ConfusionMatrix m = matrix_from_report_json(slurp(path));
    const EvalReport rep = evaluate(m);
    print_summary(rep);
    const fs::path dir(g.out_dir);
    if (g.format == "csv") {
        write_out(dir / "report.csv", render_csv(rep));
    } else {
        write_out(dir / "report.json", report_to_json(rep));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"requirements classification toolkit"};
    app.require_subcommand(1);

    GlobalArgs g;
    std::uint64_t seed_value = 0;
    auto* seed_opt =
        app.add_option("--seed", seed_value, "override the config seed");
    app.add_option("--config", g.config_path, "experiment config (JSON)");
    app.add_option("--out", g.out_dir, "output directory (default: out)");
    app.add_option("--format", g.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string ingest_path, input_format = "auto";
    auto* ingest = app.add_subcommand(
        "ingest", "validate a corpus and write it in canonical CSV form");
    ingest->add_option("corpus", ingest_path, "corpus file (.csv or .arff)")
        ->required();
    ingest->add_option("--input-format", input_format, "corpus file format")
        ->check(CLI::IsMember({"auto", "csv", "arff"}));

    auto* preprocess = app.add_subcommand(
        "preprocess", "run the preprocessing pipeline and write the result");
    auto* evaluate = app.add_subcommand(
        "evaluate", "evaluate the configured task and method");

    std::vector<std::string> compare_paths;
    auto* compare = app.add_subcommand(
        "compare", "consolidate evaluate reports into one CSV table");
    compare->add_option("reports", compare_paths, "report.json files (>= 2)");

    std::string report_path;
    bool show_defaults = false;
    auto* report = app.add_subcommand(
        "report", "re-render a report, or print the default config");
    report->add_option("report", report_path, "report.json file");
    report->add_flag("--show-defaults", show_defaults,
                     "print the default experiment config and exit");

    for (auto* sub : {ingest, preprocess, evaluate, compare, report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (seed_opt->count() > 0) g.seed = seed_value;
        if (ingest->parsed()) return cmd_ingest(g, ingest_path, input_format);
        if (preprocess->parsed()) return cmd_preprocess(g);
        if (evaluate->parsed()) return cmd_evaluate(g);
        if (compare->parsed()) return cmd_compare(g, compare_paths);
        if (report->parsed()) return cmd_report(g, report_path, show_defaults);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
