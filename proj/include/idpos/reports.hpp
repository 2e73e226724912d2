#pragma once

// Tab-separated and JSON renderings of every report. Each report starts with
// the run configuration that produced it.

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "idpos/analysis.hpp"
#include "idpos/evaluation.hpp"
#include "idpos/importance.hpp"
#include "idpos/metrics.hpp"

namespace idpos {

enum class ReportFormat { Tsv, Json };

inline ReportFormat parse_report_format(std::string_view s) {
    if (s == "tsv") return ReportFormat::Tsv;
    if (s == "json") return ReportFormat::Json;
    throw ConfigError("unknown report format '" + std::string(s) + "' (expected tsv or json)");
}

/// Ordered key/value echo of the invocation.
struct RunConfiguration {
    std::vector<std::pair<std::string, std::string>> entries;

    RunConfiguration& set(std::string key, std::string value) {
        for (auto& [k, v] : entries)
            if (k == key) {
                v = std::move(value);
                return *this;
            }
        entries.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    void describe(const Hyperparameters& hp, const DatasetConfiguration& dataset, const FeatureSubset& features) {
        set("config", ConfigurationCode{hp.algorithm, dataset}.str());
        set("algorithm", std::string(to_string(hp.algorithm)));
        set("criterion", std::string(to_string(hp.criterion)));
        set("max_depth", std::to_string(hp.max_depth));
        set("n_estimators", std::to_string(hp.n_estimators));
        set("bootstrap", hp.bootstrap ? "true" : "false");
        set("feature_subsample", hp.feature_subsample ? "true" : "false");
        set("threshold", std::to_string(dataset.augment_threshold));
        set("features", features.str());
        set("seed", std::to_string(hp.seed));
    }
};

inline std::string fixed(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

namespace detail {

inline std::string title_case(std::string_view upper) {
    std::string s(upper);
    for (std::size_t i = 1; i < s.size(); ++i) s[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    return s;
}

inline void tsv_header(std::ostream& out, const RunConfiguration& run) {
    for (const auto& [k, v] : run.entries) out << "# " << k << '=' << v << '\n';
}

inline nlohmann::json json_config(const RunConfiguration& run) {
    auto j = nlohmann::json::object();
    for (const auto& [k, v] : run.entries) j[k] = v;
    return j;
}

inline std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// Context rows in alphabetical order, as the per-context tables list them.
inline constexpr std::array<IdentifierContext, kContextCount> kContextRowOrder = {
    IdentifierContext::ATTRIBUTE, IdentifierContext::CLASS, IdentifierContext::DECLARATION,
    IdentifierContext::FUNCTION, IdentifierContext::PARAMETER};

} // namespace detail

inline nlohmann::json word_metrics_json(const WordMetrics& m) {
    nlohmann::json j;
    j["accuracy"] = m.accuracy;
    j["balanced_accuracy"] = m.balanced_accuracy;
    j["f1"] = m.weighted_f1;
    j["precision"] = m.weighted_precision;
    j["recall"] = m.weighted_recall;
    j["words"] = m.total;
    auto tags = nlohmann::json::array();
    for (const auto& t : m.per_tag)
        tags.push_back({{"annotation", to_string(t.tag)},
                        {"total", t.gold_support},
                        {"precision", t.precision},
                        {"recall", t.recall},
                        {"f1", t.f1},
                        {"predicted_total", t.predicted_total}});
    j["per_tag"] = tags;
    return j;
}

inline nlohmann::json context_json(const ContextReport& r) {
    auto rows = nlohmann::json::array();
    auto cell = [](std::string name, const ContextCell& c) {
        return nlohmann::json{{"context", std::move(name)},
                              {"words", c.words},
                              {"word_accuracy", c.word_accuracy()},
                              {"identifiers", c.identifiers},
                              {"identifier_accuracy", c.identifier_accuracy()}};
    };
    for (auto ctx : detail::kContextRowOrder)
        rows.push_back(cell(detail::title_case(to_string(ctx)), r.contexts[index_of(ctx)]));
    rows.push_back(cell("Overall", r.overall));
    return rows;
}

inline void write_per_tag_tsv(std::ostream& out, const WordMetrics& m) {
    out << "Annotation\tTotal\tPrecision\tRecall\tF1\tPredicted Total\n";
    for (const auto& t : m.per_tag)
        out << to_string(t.tag) << '\t' << t.gold_support << '\t' << fixed(t.precision, 2) << '\t'
            << fixed(t.recall, 2) << '\t' << fixed(t.f1, 2) << '\t' << t.predicted_total << '\n';
}

inline void write_context_tsv(std::ostream& out, const ContextReport& r) {
    out << "Context\tWord Accuracy\tIdentifier Accuracy\tWords\tIdentifiers\n";
    auto row = [&](std::string_view name, const ContextCell& c) {
        out << name << '\t' << fixed(c.word_accuracy(), 2) << '\t' << fixed(c.identifier_accuracy(), 2) << '\t'
            << c.words << '\t' << c.identifiers << '\n';
    };
    for (auto ctx : detail::kContextRowOrder)
        row(detail::title_case(to_string(ctx)), r.contexts[index_of(ctx)]);
    row("Overall", r.overall);
}

inline void write_summary_tsv(std::ostream& out, const EvaluationReport& r) {
    out << "Metric\tValue\n";
    out << "accuracy\t" << fixed(r.word.accuracy) << '\n';
    out << "balanced_accuracy\t" << fixed(r.word.balanced_accuracy) << '\n';
    out << "f1\t" << fixed(r.word.weighted_f1) << '\n';
    out << "precision\t" << fixed(r.word.weighted_precision) << '\n';
    out << "recall\t" << fixed(r.word.weighted_recall) << '\n';
    out << "identifier_accuracy\t" << fixed(r.identifier_accuracy) << '\n';
}

/// Held-out evaluation: summary, per-tag table and per-context table.
inline std::string evaluation_report(const EvaluationReport& r, const RunConfiguration& run, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        j["word"] = word_metrics_json(r.word);
        j["identifier_accuracy"] = r.identifier_accuracy;
        j["contexts"] = context_json(r.contexts);
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    write_summary_tsv(out, r);
    out << '\n';
    write_per_tag_tsv(out, r.word);
    out << '\n';
    write_context_tsv(out, r.contexts);
    return out.str();
}

inline std::string kfold_report(const KFoldResult& cv, const RunConfiguration& run, ReportFormat fmt) {
    static constexpr std::array<Metric, 5> cols = {Metric::Accuracy, Metric::BalancedAccuracy, Metric::WeightedF1,
                                                   Metric::WeightedPrecision, Metric::WeightedRecall};
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        auto folds = nlohmann::json::array();
        for (const auto& f : cv.folds) {
            nlohmann::json fj;
            fj["fold"] = f.fold;
            fj["train_identifiers"] = f.train_identifiers;
            fj["test_identifiers"] = f.test_identifiers;
            fj["word"] = word_metrics_json(f.report.word);
            fj["identifier_accuracy"] = f.report.identifier_accuracy;
            fj["contexts"] = context_json(f.report.contexts);
            folds.push_back(std::move(fj));
        }
        j["folds"] = folds;
        nlohmann::json mean;
        for (auto m : cols) mean[std::string(to_string(m))] = cv.mean(m);
        mean["identifier_accuracy"] = cv.mean_identifier_accuracy();
        j["mean"] = mean;
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    out << "Fold\tAccuracy\tBalanced Accuracy\tF1\tPrecision\tRecall\tIdentifier Accuracy\n";
    for (const auto& f : cv.folds) {
        out << f.fold + 1;
        for (auto m : cols) out << '\t' << fixed(metric_value(f.report.word, m));
        out << '\t' << fixed(f.report.identifier_accuracy) << '\n';
    }
    out << "Mean";
    for (auto m : cols) out << '\t' << fixed(cv.mean(m));
    out << '\t' << fixed(cv.mean_identifier_accuracy()) << '\n';
    return out.str();
}

inline std::string grid_report(const GridSearchResult& g, const RunConfiguration& run, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        j["metric"] = to_string(g.metric);
        auto rows = nlohmann::json::array();
        for (const auto& r : g.rows)
            rows.push_back({{"algorithm", to_string(r.hp.algorithm)},
                            {"criterion", to_string(r.hp.criterion)},
                            {"max_depth", r.hp.max_depth},
                            {"n_estimators", r.hp.n_estimators},
                            {"bootstrap", r.hp.bootstrap},
                            {"fold_scores", r.fold_scores},
                            {"mean", r.mean}});
        j["rows"] = rows;
        j["best"] = g.best;
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    out << "# metric=" << to_string(g.metric) << '\n';
    out << "Algorithm\tCriterion\tMax Depth\tEstimators\tBootstrap\tMean\tBest\n";
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        const auto& r = g.rows[i];
        out << to_string(r.hp.algorithm) << '\t' << to_string(r.hp.criterion) << '\t' << r.hp.max_depth << '\t'
            << r.hp.n_estimators << '\t' << (r.hp.bootstrap ? "true" : "false") << '\t' << fixed(r.mean) << '\t'
            << (i == g.best ? "*" : "") << '\n';
    }
    return out.str();
}

inline std::string drop_column_report(const DropColumnResult& d, const RunConfiguration& run, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        auto rows = nlohmann::json::array();
        for (const auto& r : d.rows)
            rows.push_back({{"features", r.subset.str()},
                            {"f1", r.f1},
                            {"accuracy", r.accuracy},
                            {"balanced_accuracy", r.balanced_accuracy}});
        j["rows"] = rows;
        if (!d.rows.empty())
            j["best"] = {{"f1", d.rows[d.best_f1].subset.str()},
                         {"accuracy", d.rows[d.best_accuracy].subset.str()},
                         {"balanced_accuracy", d.rows[d.best_balanced_accuracy].subset.str()}};
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    if (!d.rows.empty()) {
        out << "# best_f1=" << d.rows[d.best_f1].subset.str() << '\n';
        out << "# best_accuracy=" << d.rows[d.best_accuracy].subset.str() << '\n';
        out << "# best_balanced_accuracy=" << d.rows[d.best_balanced_accuracy].subset.str() << '\n';
    }
    out << "Features\tF1\tAccuracy\tBalanced Accuracy\n";
    for (const auto& r : d.rows)
        out << r.subset.str() << '\t' << fixed(r.f1) << '\t' << fixed(r.accuracy) << '\t'
            << fixed(r.balanced_accuracy) << '\n';
    return out.str();
}

inline std::string permutation_report(const PermutationTable& t, const RunConfiguration& run, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        auto metrics = nlohmann::json::object();
        for (std::size_t mi = 0; mi < kImportanceMetrics.size(); ++mi) {
            auto rows = nlohmann::json::array();
            for (std::size_t fi = 0; fi < t.features.size(); ++fi)
                rows.push_back({{"feature", to_string(t.features[fi])},
                                {"folds", t.importance[mi][fi]},
                                {"average", t.average(mi, fi)}});
            metrics[std::string(to_string(kImportanceMetrics[mi]))] = rows;
        }
        j["importance"] = metrics;
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    out << "Metric\tFeature";
    for (std::size_t f = 0; f < t.folds; ++f) out << "\tFold " << f + 1;
    out << "\tAverage\n";
    for (std::size_t mi = 0; mi < kImportanceMetrics.size(); ++mi)
        for (std::size_t fi = 0; fi < t.features.size(); ++fi) {
            out << to_string(kImportanceMetrics[mi]) << '\t' << to_string(t.features[fi]);
            for (double v : t.importance[mi][fi]) out << '\t' << fixed(v);
            out << '\t' << fixed(t.average(mi, fi)) << '\n';
        }
    return out.str();
}

inline void write_ranking_tsv(std::ostream& out, std::span<const MisannotationRow> rows) {
    out << "Grammar Pattern\t# Incorrect\tActual\tProportion\n";
    for (const auto& r : rows)
        out << r.pattern.str() << '\t' << r.incorrect << '\t' << r.actual << '\t' << fixed(r.proportion, 2) << '\n';
}

inline std::string ranking_report(std::span<const MisannotationRow> rows, const RunConfiguration& run,
                                  ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        auto arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"pattern", r.pattern.str()},
                           {"incorrect", r.incorrect},
                           {"actual", r.actual},
                           {"proportion", r.proportion}});
        j["ranking"] = arr;
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    write_ranking_tsv(out, rows);
    return out.str();
}

/// Held-out evaluation followed by the mis-annotation ranking.
inline std::string analysis_report(const EvaluationReport& r, std::span<const MisannotationRow> rows,
                                   const RunConfiguration& run, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(run);
        j["word"] = word_metrics_json(r.word);
        j["identifier_accuracy"] = r.identifier_accuracy;
        j["contexts"] = context_json(r.contexts);
        auto arr = nlohmann::json::array();
        for (const auto& row : rows)
            arr.push_back({{"pattern", row.pattern.str()},
                           {"incorrect", row.incorrect},
                           {"actual", row.actual},
                           {"proportion", row.proportion}});
        j["ranking"] = arr;
        return detail::json_text(j);
    }
    std::ostringstream out;
    detail::tsv_header(out, run);
    write_summary_tsv(out, r);
    out << '\n';
    write_per_tag_tsv(out, r.word);
    out << '\n';
    write_context_tsv(out, r.contexts);
    out << '\n';
    write_ranking_tsv(out, rows);
    return out.str();
}

} // namespace idpos
