#include "reqclass/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reqclass/cluster.hpp"
#include "reqclass/cooccur.hpp"
#include "reqclass/diagnostics.hpp"
#include "reqclass/error.hpp"
#include "reqclass/topic.hpp"

namespace reqclass {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view task_name(Task t) {
    return t == Task::FrNfr ? "fr_nfr" : "nfr_sub";
}

std::string_view method_name(Method m) {
    switch (m) {
    case Method::Tree: return "tree";
    case Method::Bnb: return "bnb";
    case Method::Lda: return "lda";
    case Method::Btm: return "btm";
    case Method::Hierarchical: return "hierarchical";
    case Method::KMeans: return "kmeans";
    case Method::Hybrid: return "hybrid";
    }
    return "?";
}

std::optional<Task> task_from_name(std::string_view name) {
    if (name == "fr_nfr") return Task::FrNfr;
    if (name == "nfr_sub") return Task::NfrSub;
    return std::nullopt;
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::Tree, Method::Bnb, Method::Lda, Method::Btm,
                     Method::Hierarchical, Method::KMeans, Method::Hybrid}) {
        if (name == method_name(m)) return m;
    }
    return std::nullopt;
}

namespace {

const std::set<std::string>& known_config_keys() {
    static const std::set<std::string> keys = {
        "corpus",        "corpus_format",   "dictionary",
        "rules",         "preprocess",      "normalize",
        "blind_entities", "temporal_rules",  "nfr_rules",
        "task",          "method",          "folds",
        "runs",          "seed",            "min_leaf",
        "cutoff_syntactic", "cutoff_keywords", "fold_wise_features",
        "smoothing",     "topics",          "alpha",
        "beta",          "iterations",      "clusters",
        "max_iters",     "linkage",         "exclude_po",
        "hopkins_fraction", "hopkins_seeds"};
    return keys;
}

template <typename T>
void read_key(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(std::string("config key '") + key +
                         "' has the wrong type");
    }
}

Linkage parse_linkage(const std::string& name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    throw UsageError("unknown linkage '" + name +
                     "' (expected single, complete or average)");
}

CorpusFormat resolve_format(const std::string& name, const std::string& path) {
    if (name == "csv") return CorpusFormat::Csv;
    if (name == "arff") return CorpusFormat::PromiseArff;
    if (name == "auto") {
        const auto ext = fs::path(path).extension().string();
        if (ext == ".arff") return CorpusFormat::PromiseArff;
        return CorpusFormat::Csv;
    }
    throw UsageError("unknown corpus_format '" + name +
                     "' (expected auto, csv or arff)");
}

json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

json report_json_fragment(const EvalReport& r) {
    json j;
    j["labels"] = r.matrix.labels();
    auto& counts = j["confusion"] = json::array();
    for (std::size_t p = 0; p < r.matrix.size(); ++p) {
        json row = json::array();
        for (std::size_t a = 0; a < r.matrix.size(); ++a)
            row.push_back(r.matrix.at(p, a));
        counts.push_back(row);
    }
    j["accuracy"] = r.accuracy;
    j["kappa"] = opt_json(r.kappa);
    j["weighted_precision"] = opt_json(r.weighted_precision);
    j["weighted_recall"] = opt_json(r.weighted_recall);
    j["weighted_f1"] = opt_json(r.weighted_f1);
    auto& per_class = j["per_class"] = json::object();
    for (std::size_t c = 0; c < r.matrix.size(); ++c) {
        json cm;
        cm["precision"] = opt_json(r.per_class[c].precision);
        cm["recall"] = opt_json(r.per_class[c].recall);
        cm["f1"] = opt_json(r.per_class[c].f1);
        cm["support"] = r.per_class[c].support;
        per_class[r.matrix.labels()[c]] = cm;
    }
    j["total"] = r.matrix.total();
    j["correct"] = r.matrix.trace();
    j["warnings"] = r.warnings;
    return j;
}

} // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& item : j.items()) {
        if (!known_config_keys().count(item.key())) {
            throw UsageError("unknown config key '" + item.key() + "'");
        }
    }

    ExperimentConfig cfg;
    read_key(j, "corpus", cfg.corpus);
    read_key(j, "corpus_format", cfg.corpus_format);
    read_key(j, "dictionary", cfg.dictionary);
    read_key(j, "rules", cfg.rules);
    read_key(j, "preprocess", cfg.preprocess);
    read_key(j, "normalize", cfg.normalize);
    read_key(j, "blind_entities", cfg.blind_entities);
    read_key(j, "temporal_rules", cfg.temporal_rules);
    read_key(j, "nfr_rules", cfg.nfr_rules);

    if (j.contains("task")) {
        std::string name;
        read_key(j, "task", name);
        const auto t = task_from_name(name);
        if (!t) throw UsageError("unknown task '" + name +
                                 "' (expected fr_nfr or nfr_sub)");
        cfg.task = *t;
    }
    if (j.contains("method")) {
        std::string name;
        read_key(j, "method", name);
        const auto m = method_from_name(name);
        if (!m)
            throw UsageError("unknown method '" + name +
                             "' (expected tree, bnb, lda, btm, hierarchical, "
                             "kmeans or hybrid)");
        cfg.method = *m;
    }

    read_key(j, "folds", cfg.folds);
    read_key(j, "runs", cfg.runs);
    read_key(j, "seed", cfg.seed);
    read_key(j, "min_leaf", cfg.min_leaf);
    read_key(j, "cutoff_syntactic", cfg.cutoff_syntactic);
    read_key(j, "cutoff_keywords", cfg.cutoff_keywords);
    read_key(j, "fold_wise_features", cfg.fold_wise_features);
    read_key(j, "smoothing", cfg.smoothing);
    read_key(j, "topics", cfg.topics);
    read_key(j, "alpha", cfg.alpha);
    read_key(j, "beta", cfg.beta);
    read_key(j, "iterations", cfg.iterations);
    read_key(j, "clusters", cfg.clusters);
    read_key(j, "max_iters", cfg.max_iters);
    read_key(j, "linkage", cfg.linkage);
    read_key(j, "exclude_po", cfg.exclude_po);
    read_key(j, "hopkins_fraction", cfg.hopkins_fraction);
    read_key(j, "hopkins_seeds", cfg.hopkins_seeds);

    parse_linkage(cfg.linkage); // validate early
    if (cfg.folds < 2) throw UsageError("config: folds must be >= 2");
    if (cfg.runs < 1) throw UsageError("config: runs must be >= 1");
    if (cfg.topics < 1) throw UsageError("config: topics must be >= 1");
    if (cfg.clusters < 1) throw UsageError("config: clusters must be >= 1");
    if (cfg.iterations < 1) throw UsageError("config: iterations must be >= 1");
    if (cfg.smoothing < 1) throw UsageError("config: smoothing must be >= 1");
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string ExperimentConfig::to_json() const {
    json j;
    j["corpus"] = corpus;
    j["corpus_format"] = corpus_format;
    j["dictionary"] = dictionary;
    j["rules"] = rules;
    j["preprocess"] = preprocess;
    j["normalize"] = normalize;
    j["blind_entities"] = blind_entities;
    j["temporal_rules"] = temporal_rules;
    j["nfr_rules"] = nfr_rules;
    j["task"] = std::string(task_name(task));
    j["method"] = std::string(method_name(method));
    j["folds"] = folds;
    j["runs"] = runs;
    j["seed"] = seed;
    j["min_leaf"] = min_leaf;
    j["cutoff_syntactic"] = cutoff_syntactic;
    j["cutoff_keywords"] = cutoff_keywords;
    j["fold_wise_features"] = fold_wise_features;
    j["smoothing"] = smoothing;
    j["topics"] = topics;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["iterations"] = iterations;
    j["clusters"] = clusters;
    j["max_iters"] = max_iters;
    j["linkage"] = linkage;
    j["exclude_po"] = exclude_po;
    j["hopkins_fraction"] = hopkins_fraction;
    j["hopkins_seeds"] = hopkins_seeds;
    return j.dump(2) + "\n";
}

std::string EvaluateOutcome::to_json() const {
    json j;
    j["task"] = std::string(task_name(config.task));
    j["method"] = std::string(method_name(config.method));
    j["preprocessed"] = config.preprocess;
    j["seed"] = config.seed;
    j["folds"] = config.folds;
    j["runs"] = config.runs;
    j["report"] = report_json_fragment(report);
    if (!per_run.empty()) {
        auto& runs = j["per_run"] = json::array();
        for (const auto& r : per_run) {
            json jr;
            jr["accuracy"] = r.accuracy;
            jr["kappa"] = opt_json(r.kappa);
            jr["weighted_precision"] = opt_json(r.weighted_precision);
            jr["weighted_recall"] = opt_json(r.weighted_recall);
            runs.push_back(jr);
        }
    }
    if (hopkins || silhouette_mean) {
        json d;
        d["hopkins"] = opt_json(hopkins);
        d["silhouette_mean"] = opt_json(silhouette_mean);
        j["diagnostics"] = d;
    }
    return j.dump(2) + "\n";
}

namespace {

PipelineConfig build_pipeline(const ExperimentConfig& cfg, const Corpus& corpus) {
    PipelineConfig pc;
    if (!cfg.dictionary.empty())
        pc.dictionary = EntityDictionary::load(cfg.dictionary);
    if (!cfg.rules.empty()) pc.rules = load_rules(cfg.rules);
    pc.cooccurrence =
        build_cooccurrence(corpus.filter([](const Requirement& r) {
            return r.label.is_nfr();
        }));
    pc.normalize = cfg.normalize;
    pc.blind_entities = cfg.blind_entities;
    pc.temporal_rules = cfg.temporal_rules;
    pc.nfr_rules = cfg.nfr_rules;
    return pc;
}

Corpus nfr_subset(const Corpus& corpus, bool exclude_po) {
    Corpus sub = corpus.filter([&](const Requirement& r) {
        if (!r.label.is_nfr()) return false;
        if (exclude_po && r.label.sub() == NfrKind::PO) return false;
        return true;
    });
    if (sub.empty())
        throw DataError("corpus has no NFR requirements to sub-classify");
    return sub;
}

std::vector<std::string> label_codes(const Corpus& corpus) {
    std::vector<std::string> out;
    out.reserve(corpus.size());
    for (const auto& r : corpus) out.push_back(r.label.code());
    return out;
}

EvaluateOutcome evaluate_topic_or_cluster(const ExperimentConfig& cfg,
                                          const Corpus& sub) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(sub.size());
    for (const auto& r : sub) docs.push_back(content_terms(analyze(r.text)));
    const std::vector<std::string> truth = label_codes(sub);

    std::vector<int> dominant;
    int groups = 0;
    EvaluateOutcome out;
    out.config = cfg;

    if (cfg.method == Method::Lda || cfg.method == Method::Btm) {
        TopicParams params;
        params.K = cfg.topics;
        params.alpha = cfg.alpha;
        params.beta = cfg.beta;
        params.iterations = cfg.iterations;
        params.seed = cfg.seed;
        groups = params.K;
        dominant.reserve(docs.size());
        if (cfg.method == Method::Lda) {
            const LdaModel model = train_lda(docs, params);
            for (std::size_t d = 0; d < docs.size(); ++d)
                dominant.push_back(model.dominant_topic(d));
        } else {
            const BtmModel model = train_btm(docs, params);
            for (std::size_t d = 0; d < docs.size(); ++d)
                dominant.push_back(model.dominant_topic(d));
        }
    } else {
        const Vocab vocab = Vocab::fit(docs);
        const std::vector<DenseVec> x = doc_term_matrix(docs, vocab);
        ClusterModel model;
        switch (cfg.method) {
        case Method::Hierarchical:
            model = cluster_hierarchical(x, cfg.clusters,
                                         parse_linkage(cfg.linkage));
            break;
        case Method::KMeans:
            model = cluster_kmeans(x, cfg.clusters, cfg.seed, cfg.max_iters);
            break;
        default:
            model = cluster_hybrid(x, cfg.clusters, cfg.max_iters,
                                   parse_linkage(cfg.linkage));
            break;
        }
        groups = cfg.clusters;
        dominant = model.assignments;
        out.hopkins = hopkins_mean(x, cfg.hopkins_fraction, cfg.hopkins_seeds,
                                   cfg.seed);
        out.silhouette_mean = silhouette(x, model.assignments).mean;
    }

    const std::vector<std::string> mapping =
        majority_label_map(dominant, truth, groups);
    std::vector<std::string> predicted;
    predicted.reserve(dominant.size());
    for (int g : dominant)
        predicted.push_back(mapping[static_cast<std::size_t>(g)]);

    std::set<std::string> label_set(truth.begin(), truth.end());
    out.report = evaluate(ConfusionMatrix::from_pairs(
        predicted, truth,
        std::vector<std::string>(label_set.begin(), label_set.end())));
    return out;
}

} // namespace

EvaluateOutcome run_evaluate(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.corpus.empty()) throw UsageError("config: corpus path is empty");

    Corpus corpus =
        load_corpus(cfg.corpus, resolve_format(cfg.corpus_format, cfg.corpus));
    if (cfg.preprocess) {
        corpus = preprocess_corpus(corpus, build_pipeline(cfg, corpus));
    }

    EvaluateOutcome out;
    out.config = cfg;

    if (cfg.task == Task::FrNfr) {
        if (cfg.method != Method::Tree) {
            throw UsageError("task fr_nfr supports only the tree method");
        }
        TreeCvOptions opt;
        opt.tree.min_leaf = cfg.min_leaf;
        opt.cutoff_syntactic = cfg.cutoff_syntactic;
        opt.cutoff_keywords = cfg.cutoff_keywords;
        opt.fold_wise_features = cfg.fold_wise_features;
        const CvResult cv = cross_validate_tree(
            corpus, opt, CvSpec{cfg.folds, cfg.runs, cfg.seed});
        out.report = cv.report;
        out.per_run = cv.per_run;
    } else {
        const Corpus sub = nfr_subset(corpus, cfg.exclude_po);
        switch (cfg.method) {
        case Method::Tree:
            throw UsageError("task nfr_sub does not support the tree method");
        case Method::Bnb: {
            const CvResult cv = cross_validate_bnb(
                sub, BnbCvOptions{cfg.smoothing},
                CvSpec{cfg.folds, cfg.runs, cfg.seed});
            out.report = cv.report;
            out.per_run = cv.per_run;
            break;
        }
        default:
            out = evaluate_topic_or_cluster(cfg, sub);
            break;
        }
    }

    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return out;
}

PreprocessOutcome run_preprocess(const ExperimentConfig& cfg) {
    if (cfg.corpus.empty()) throw UsageError("config: corpus path is empty");
    PreprocessOutcome out;
    out.original =
        load_corpus(cfg.corpus, resolve_format(cfg.corpus_format, cfg.corpus));
    out.processed =
        preprocess_corpus(out.original, build_pipeline(cfg, out.original),
                          &out.audit);
    return out;
}

IngestOutcome run_ingest(const std::string& path,
                         const std::string& format_name) {
    IngestOutcome out;
    out.corpus = load_corpus(path, resolve_format(format_name, path));
    out.by_label = label_counts(out.corpus);
    for (const auto& r : out.corpus) {
        if (r.label.is_fr())
            ++out.fr;
        else
            ++out.nfr;
    }
    return out;
}

namespace {

struct ParsedReport {
    std::string method;
    bool preprocessed = false;
    std::vector<std::string> labels;
    double accuracy = 0.0;
    std::optional<double> total_recall, total_precision;
    std::map<std::string, std::optional<double>> recall, precision;
};

std::optional<double> json_opt(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

ParsedReport parse_report(const std::string& text, std::size_t ordinal) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError("report " + std::to_string(ordinal + 1) +
                        " is not valid JSON: " + e.what());
    }
    try {
        ParsedReport r;
        r.method = j.at("method").get<std::string>();
        r.preprocessed = j.at("preprocessed").get<bool>();
        const json& rep = j.at("report");
        r.labels = rep.at("labels").get<std::vector<std::string>>();
        r.accuracy = rep.at("accuracy").get<double>();
        r.total_recall = json_opt(rep.at("weighted_recall"));
        r.total_precision = json_opt(rep.at("weighted_precision"));
        for (const auto& label : r.labels) {
            const json& cm = rep.at("per_class").at(label);
            r.recall[label] = json_opt(cm.at("recall"));
            r.precision[label] = json_opt(cm.at("precision"));
        }
        return r;
    } catch (const json::exception& e) {
        throw DataError("report " + std::to_string(ordinal + 1) +
                        " is missing expected fields: " + e.what());
    }
}

std::string pct(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *v * 100.0);
    return buf;
}

} // namespace

std::string compare_reports_csv(const std::vector<std::string>& report_jsons) {
    if (report_jsons.size() < 2) {
        throw UsageError("compare needs at least two reports");
    }
    std::vector<ParsedReport> reports;
    reports.reserve(report_jsons.size());
    for (std::size_t i = 0; i < report_jsons.size(); ++i)
        reports.push_back(parse_report(report_jsons[i], i));

    const auto& labels = reports.front().labels;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].labels != labels) {
            throw UsageError("report " + std::to_string(i + 1) +
                             " has a different label set than report 1");
        }
    }

    std::ostringstream out;
    out << "method,preprocessed,accuracy,total_recall,total_precision";
    for (const auto& label : labels)
        out << ',' << label << "_recall," << label << "_precision";
    out << "\n";
    for (const auto& r : reports) {
        out << r.method << ',' << (r.preprocessed ? "yes" : "no") << ','
            << pct(r.accuracy) << ',' << pct(r.total_recall) << ','
            << pct(r.total_precision);
        for (const auto& label : labels) {
            out << ',' << pct(r.recall.at(label)) << ','
                << pct(r.precision.at(label));
        }
        out << "\n";
    }
    return out.str();
}

ConfusionMatrix matrix_from_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        const json& rep = j.contains("report") ? j.at("report") : j;
        const auto labels = rep.at("labels").get<std::vector<std::string>>();
        const auto counts =
            rep.at("confusion").get<std::vector<std::vector<int>>>();
        if (counts.size() != labels.size()) {
            throw DataError("report confusion matrix does not match labels");
        }
        ConfusionMatrix m(labels);
        for (std::size_t p = 0; p < labels.size(); ++p) {
            if (counts[p].size() != labels.size()) {
                throw DataError("report confusion matrix is ragged");
            }
            for (std::size_t a = 0; a < labels.size(); ++a) {
                if (counts[p][a] > 0) m.add(labels[p], labels[a], counts[p][a]);
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw DataError(std::string("report is missing expected fields: ") +
                        e.what());
    }
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
        if (ec) {
            throw UsageError("cannot create directory " +
                             target.parent_path().string() + ": " +
                             ec.message());
        }
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw UsageError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        throw UsageError("cannot rename " + tmp.string() + " to " +
                         target.string() + ": " + ec.message());
    }
}

} // namespace reqclass
