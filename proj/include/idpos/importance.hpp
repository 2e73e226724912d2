#pragma once

// Feature importance: permutation importance on a fitted model and
// drop-column importance over every non-empty feature subset.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "idpos/evaluation.hpp"
#include "idpos/metrics.hpp"
#include "idpos/model.hpp"
#include "idpos/rng.hpp"

namespace idpos {

/// Encoded rows and gold tags of gold-annotated records, prepared for `model`.
struct ScoringSet {
    std::vector<std::vector<std::uint32_t>> X;
    std::vector<Tag> y;
};

inline ScoringSet scoring_set(const TaggerModel& model, std::span<const IdentifierRecord> records,
                              bool use_standins = false) {
    ScoringSet s;
    for (const auto& r : records) {
        if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");
        auto rows = encode_for_model(model, r, use_standins);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            s.X.push_back(std::move(rows[i]));
            Tag g = *r.gold[i];
            if (model.dataset.variant == Variant::AUGMENTED &&
                std::find(model.rare_tags.begin(), model.rare_tags.end(), g) != model.rare_tags.end())
                g = Tag::OTHER;
            s.y.push_back(g);
        }
    }
    return s;
}

inline double score_rows(const TaggerModel& model, std::span<const std::vector<std::uint32_t>> X,
                         std::span<const Tag> y, Metric metric) {
    auto pred = predict_rows(model, X);
    return metric_value(word_metrics(y, pred), metric);
}

struct PermutationImportance {
    double baseline = 0.0;
    std::vector<double> decreases;  // one per repeat
    double mean_decrease = 0.0;
};

/// Baseline score minus the score after shuffling one feature column, averaged
/// over `n_repeats` shuffles.
inline PermutationImportance permutation_importance(const TaggerModel& model,
                                                    std::span<const std::vector<std::uint32_t>> X,
                                                    std::span<const Tag> y, Feature feature, Metric metric,
                                                    std::size_t n_repeats, std::uint64_t seed) {
    if (!model.features.contains(feature))
        throw ModelError("feature " + std::string(to_string(feature)) + " is not used by the model (" +
                         model.features.str() + ")");
    if (n_repeats == 0) throw std::invalid_argument("n_repeats must be positive");
    auto used = model.features.features();
    const auto column = static_cast<std::size_t>(std::find(used.begin(), used.end(), feature) - used.begin());

    PermutationImportance out;
    out.baseline = score_rows(model, X, y, metric);
    Rng rng(seed);
    std::vector<std::vector<std::uint32_t>> shuffled(X.begin(), X.end());
    std::vector<std::uint32_t> values(X.size());
    for (std::size_t r = 0; r < n_repeats; ++r) {
        for (std::size_t i = 0; i < X.size(); ++i) values[i] = X[i][column];
        shuffle(values, rng);
        for (std::size_t i = 0; i < X.size(); ++i) shuffled[i][column] = values[i];
        out.decreases.push_back(out.baseline - score_rows(model, shuffled, y, metric));
    }
    double sum = 0.0;
    for (double d : out.decreases) sum += d;
    out.mean_decrease = sum / static_cast<double>(n_repeats);
    return out;
}

inline constexpr std::array<Metric, 3> kImportanceMetrics = {Metric::WeightedF1, Metric::BalancedAccuracy,
                                                             Metric::Accuracy};

/// importance[metric][feature][fold], metrics in kImportanceMetrics order and
/// features in the subset's canonical order.
struct PermutationTable {
    std::vector<Feature> features;
    std::size_t folds = 0;
    std::array<std::vector<std::vector<double>>, 3> importance;

    double average(std::size_t metric, std::size_t feature) const {
        double s = 0.0;
        for (double v : importance[metric][feature]) s += v;
        return s / static_cast<double>(folds);
    }
};

/// Per-fold permutation importances of every model feature under k-fold
/// cross-validation.
inline PermutationTable permutation_table(std::span<const IdentifierRecord> records, std::size_t k,
                                          const Hyperparameters& hp, const DatasetConfiguration& dataset,
                                          const FeatureSubset& subset, std::size_t n_repeats, std::uint64_t seed,
                                          unsigned threads = 0) {
    auto folds = assign_folds(records, k, seed);
    PermutationTable table;
    table.features = subset.features();
    table.folds = k;
    for (auto& m : table.importance) m.assign(table.features.size(), std::vector<double>(k, 0.0));
    for (std::size_t f = 0; f < k; ++f) {
        std::vector<IdentifierRecord> train, test;
        for (std::size_t i = 0; i < records.size(); ++i)
            (folds.fold_of[i] == f ? test : train).push_back(records[i]);
        auto model = train_model(train, hp, dataset, subset, threads);
        auto set = scoring_set(model, test);
        for (std::size_t mi = 0; mi < kImportanceMetrics.size(); ++mi)
            for (std::size_t fi = 0; fi < table.features.size(); ++fi)
                table.importance[mi][fi][f] =
                    permutation_importance(model, set.X, set.y, table.features[fi], kImportanceMetrics[mi],
                                           n_repeats, derive_seed(seed, f * 1000 + fi))
                        .mean_decrease;
    }
    return table;
}

struct DropColumnRow {
    FeatureSubset subset;
    double f1 = 0.0;
    double accuracy = 0.0;
    double balanced_accuracy = 0.0;
};

struct DropColumnResult {
    std::vector<DropColumnRow> rows;  // ascending subset mask
    std::size_t best_f1 = 0;
    std::size_t best_accuracy = 0;
    std::size_t best_balanced_accuracy = 0;
};

/// Retrains and cross-validates one model per non-empty subset of
/// `features`. `on_subset` is called after each evaluation.
inline DropColumnResult drop_column_importance(
    std::span<const IdentifierRecord> records, const FeatureSubset& features, const Hyperparameters& hp,
    const DatasetConfiguration& dataset, std::size_t k, std::uint64_t seed,
    const std::function<void(const DropColumnRow&, std::size_t done)>& on_subset = {}, unsigned threads = 0) {
    DropColumnResult out;
    const std::uint32_t full = features.mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if ((mask & ~full) != 0) continue;
        auto subset = FeatureSubset::from_mask(mask);
        auto cv = kfold_evaluate(records, k, hp, dataset, subset, seed, threads);
        DropColumnRow row{subset, cv.mean(Metric::WeightedF1), cv.mean(Metric::Accuracy),
                          cv.mean(Metric::BalancedAccuracy)};
        out.rows.push_back(row);
        if (on_subset) on_subset(row, out.rows.size());
    }
    // Earliest (smallest mask) subset wins ties.
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        if (out.rows[i].f1 > out.rows[out.best_f1].f1) out.best_f1 = i;
        if (out.rows[i].accuracy > out.rows[out.best_accuracy].accuracy) out.best_accuracy = i;
        if (out.rows[i].balanced_accuracy > out.rows[out.best_balanced_accuracy].balanced_accuracy)
            out.best_balanced_accuracy = i;
    }
    return out;
}

} // namespace idpos
