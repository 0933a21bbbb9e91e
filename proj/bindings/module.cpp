#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "reqclass/cluster.hpp"
#include "reqclass/cooccur.hpp"
#include "reqclass/diagnostics.hpp"
#include "reqclass/error.hpp"
#include "reqclass/experiment.hpp"
#include "reqclass/metrics.hpp"
#include "reqclass/pipeline.hpp"
#include "reqclass/pos.hpp"

namespace py = pybind11;
using namespace reqclass;

namespace {

ConfusionMatrix matrix_from_counts(const std::vector<std::vector<int>>& counts,
                                   const std::vector<std::string>& labels) {
    if (counts.size() != labels.size())
        throw UsageError("confusion row count does not match labels");
    ConfusionMatrix m(labels);
    for (std::size_t p = 0; p < labels.size(); ++p) {
        if (counts[p].size() != labels.size())
            throw UsageError("confusion matrix must be square");
        for (std::size_t a = 0; a < labels.size(); ++a)
            if (counts[p][a] != 0) m.add(labels[p], labels[a], counts[p][a]);
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "requirements classification toolkit";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

    m.def(
        "analyze",
        [](const std::string& text) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& t : analyze(text))
                out.emplace_back(t.surface, std::string(pos_name(t.pos)));
            return out;
        },
        py::arg("text"),
        "Tokenize and POS-tag a requirement; returns (surface, tag) pairs.");

    m.def("normalize_text", &normalize_surface, py::arg("text"),
          "Surface-level normalization (24/7 expansion, unit spelling, ...).");

    m.def(
        "preprocess_text",
        [](const std::string& text, const std::string& dictionary,
           const std::string& rules, const std::vector<std::string>& context) {
            PipelineConfig pc;
            if (!dictionary.empty())
                pc.dictionary = EntityDictionary::load(dictionary);
            if (!rules.empty()) pc.rules = load_rules(rules);
            std::vector<std::vector<std::string>> ctx;
            ctx.reserve(context.size());
            for (const auto& t : context)
                ctx.push_back(content_terms(analyze(t)));
            pc.cooccurrence = CooccurrenceIndex::build(ctx);
            const Requirement req{"1", "0", text, Label::nfr(NfrKind::SE)};
            return preprocess_requirement(req, pc).text;
        },
        py::arg("text"), py::arg("dictionary") = "", py::arg("rules") = "",
        py::arg("context") = std::vector<std::string>{},
        "Run the full preprocessing pipeline on one requirement. `context` "
        "supplies the requirement texts backing the co-occurrence guards.");

    m.def(
        "run_evaluate",
        [](const std::string& config_json) {
            return run_evaluate(ExperimentConfig::from_json(config_json))
                .to_json();
        },
        py::arg("config_json"),
        "Evaluate the experiment described by a config JSON document; "
        "returns the report as JSON text.");

    m.def(
        "default_config", [] { return ExperimentConfig().to_json(); },
        "Default experiment config as JSON text.");

    m.def("compare_reports", &compare_reports_csv, py::arg("report_jsons"),
          "Consolidate evaluate reports (JSON texts) into one CSV table.");

    m.def(
        "evaluate_confusion",
        [](const std::vector<std::vector<int>>& counts,
           const std::vector<std::string>& labels) {
            return report_to_json(evaluate(matrix_from_counts(counts, labels)));
        },
        py::arg("counts"), py::arg("labels"),
        "Metrics for a predicted-by-actual count matrix, as JSON text.");

    m.def(
        "cohen_kappa",
        [](const std::vector<std::vector<int>>& counts,
           const std::vector<std::string>& labels) {
            return cohen_kappa(matrix_from_counts(counts, labels));
        },
        py::arg("counts"), py::arg("labels"),
        "Cohen's kappa of a confusion matrix; None when chance agreement "
        "is 1.");

    m.def("hopkins", &hopkins, py::arg("vectors"),
          py::arg("sample_fraction") = 0.1, py::arg("seed") = 1,
          "Hopkins clustering-tendency statistic (near 0: clusterable).");

    m.def(
        "silhouette",
        [](const std::vector<DenseVec>& x, const std::vector<int>& assignments) {
            const SilhouetteResult r = silhouette(x, assignments);
            return py::make_tuple(r.mean, r.values);
        },
        py::arg("vectors"), py::arg("assignments"),
        "Mean silhouette and the per-point values.");
}
