#pragma once

// Held-out evaluation, k-fold cross-validation and exhaustive grid search.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "idpos/corpus.hpp"
#include "idpos/metrics.hpp"
#include "idpos/model.hpp"

namespace idpos {

/// Tags every record with `model` and pairs the predictions with gold tags
/// relabeled the way the model was trained.
inline std::vector<ScoredIdentifier> score_records(const TaggerModel& model, std::span<const IdentifierRecord> records,
                                                   bool use_standins = true) {
    std::vector<ScoredIdentifier> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");
        ScoredIdentifier s;
        s.context = r.context;
        s.gold = r.gold_tags();
        if (model.dataset.variant == Variant::AUGMENTED)
            for (auto& g : s.gold)
                if (std::find(model.rare_tags.begin(), model.rare_tags.end(), g) != model.rare_tags.end())
                    g = Tag::OTHER;
        s.predicted = predict(model, r, use_standins).tags;
        out.push_back(std::move(s));
    }
    return out;
}

inline EvaluationReport evaluate_model(const TaggerModel& model, std::span<const IdentifierRecord> test,
                                       bool use_standins = true) {
    auto scored = score_records(model, test, use_standins);
    return evaluate(scored);
}

struct FoldResult {
    std::size_t fold = 0;
    std::size_t train_identifiers = 0;
    std::size_t test_identifiers = 0;
    EvaluationReport report;
};

struct KFoldResult {
    std::vector<FoldResult> folds;

    double mean(Metric m) const {
        double s = 0.0;
        for (const auto& f : folds) s += metric_value(f.report.word, m);
        return s / static_cast<double>(folds.size());
    }

    double mean_identifier_accuracy() const {
        double s = 0.0;
        for (const auto& f : folds) s += f.report.identifier_accuracy;
        return s / static_cast<double>(folds.size());
    }
};

/// Trains on k-1 folds and evaluates on the held-out fold, for every fold.
inline KFoldResult kfold_evaluate(std::span<const IdentifierRecord> records, std::size_t k, const Hyperparameters& hp,
                                  const DatasetConfiguration& dataset, const FeatureSubset& subset,
                                  std::uint64_t seed, unsigned threads = 0) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    for (const auto& r : records)
        if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");
    auto folds = assign_folds(records, k, seed);

    KFoldResult result;
    for (std::size_t f = 0; f < k; ++f) {
        std::vector<IdentifierRecord> train, test;
        for (std::size_t i = 0; i < records.size(); ++i)
            (folds.fold_of[i] == f ? test : train).push_back(records[i]);
        auto model = train_model(train, hp, dataset, subset, threads);
        FoldResult fr;
        fr.fold = f;
        fr.train_identifiers = train.size();
        fr.test_identifiers = test.size();
        fr.report = evaluate_model(model, test, false);
        result.folds.push_back(std::move(fr));
    }
    return result;
}

/// Candidate values per hyperparameter. Estimator count and bootstrap only
/// multiply forest configurations.
struct HyperparameterGrid {
    std::vector<Algorithm> algorithms{Algorithm::RANDOM_FOREST};
    std::vector<Criterion> criteria{Criterion::GINI};
    std::vector<std::size_t> max_depths{83};
    std::vector<std::size_t> n_estimators{250};
    std::vector<bool> bootstrap{true};

    std::vector<Hyperparameters> configurations(std::uint64_t seed) const {
        if (algorithms.empty() || criteria.empty() || max_depths.empty() || n_estimators.empty() ||
            bootstrap.empty())
            throw std::invalid_argument("hyperparameter grid is empty");
        std::vector<Hyperparameters> out;
        for (auto a : algorithms)
            for (auto c : criteria)
                for (auto d : max_depths) {
                    Hyperparameters hp = Hyperparameters::defaults(a);
                    hp.criterion = c;
                    hp.max_depth = d;
                    hp.seed = seed;
                    if (a == Algorithm::DECISION_TREE) {
                        out.push_back(hp);
                        continue;
                    }
                    for (auto n : n_estimators)
                        for (bool b : bootstrap) {
                            hp.n_estimators = n;
                            hp.bootstrap = b;
                            out.push_back(hp);
                        }
                }
        return out;
    }
};

struct GridRow {
    Hyperparameters hp;
    std::vector<double> fold_scores;
    double mean = 0.0;
};

struct GridSearchResult {
    Metric metric = Metric::Accuracy;
    std::vector<GridRow> rows;  // grid order
    std::size_t best = 0;

    const Hyperparameters& best_hyperparameters() const { return rows.at(best).hp; }
};

/// Index of the best row: highest mean, then smaller depth, then fewer
/// estimators, then earlier grid position.
inline std::size_t select_best(std::span<const GridRow> rows) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = rows[best];
        if (a.mean != b.mean) {
            if (a.mean > b.mean) best = i;
            continue;
        }
        if (a.hp.max_depth != b.hp.max_depth) {
            if (a.hp.max_depth < b.hp.max_depth) best = i;
            continue;
        }
        if (a.hp.n_estimators < b.hp.n_estimators) best = i;
    }
    return best;
}

/// Exhaustive grid search with k-fold cross-validation on `records`.
inline GridSearchResult grid_search(const HyperparameterGrid& grid, std::span<const IdentifierRecord> records,
                                    std::size_t k, std::string_view metric_name, std::uint64_t seed,
                                    const DatasetConfiguration& dataset = {},
                                    const FeatureSubset& subset = FeatureSubset::best(), unsigned threads = 0) {
    GridSearchResult result;
    result.metric = parse_metric(metric_name);
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    for (const auto& hp : grid.configurations(seed)) {
        auto cv = kfold_evaluate(records, k, hp, dataset, subset, seed, threads);
        GridRow row;
        row.hp = hp;
        for (const auto& f : cv.folds) row.fold_scores.push_back(metric_value(f.report.word, result.metric));
        row.mean = cv.mean(result.metric);
        result.rows.push_back(std::move(row));
    }
    result.best = select_best(result.rows);
    return result;
}

} // namespace idpos
