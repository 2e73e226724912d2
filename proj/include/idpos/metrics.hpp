#pragma once

// Word- and identifier-level classification metrics over the reduced tag
// alphabet.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/error.hpp"
#include "idpos/record.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

/// Counts indexed by (gold, predicted) in fixed tag order.
class ConfusionMatrix {
public:
    void add(Tag gold, Tag predicted) {
        ++cells_[index_of(gold)][index_of(predicted)];
        ++total_;
    }

    std::uint64_t at(Tag gold, Tag predicted) const { return cells_[index_of(gold)][index_of(predicted)]; }
    std::uint64_t total() const { return total_; }

    std::uint64_t gold_support(Tag t) const {
        std::uint64_t s = 0;
        for (auto c : cells_[index_of(t)]) s += c;
        return s;
    }

    std::uint64_t predicted_total(Tag t) const {
        std::uint64_t s = 0;
        for (const auto& row : cells_) s += row[index_of(t)];
        return s;
    }

    std::uint64_t correct() const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < kTagCount; ++i) s += cells_[i][i];
        return s;
    }

private:
    std::array<std::array<std::uint64_t, kTagCount>, kTagCount> cells_{};
    std::uint64_t total_ = 0;
};

struct TagScore {
    Tag tag = Tag::N;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t gold_support = 0;
    std::uint64_t predicted_total = 0;
};

struct WordMetrics {
    double accuracy = 0.0;
    double balanced_accuracy = 0.0;
    double weighted_precision = 0.0;
    double weighted_recall = 0.0;
    double weighted_f1 = 0.0;
    std::uint64_t total = 0;
    std::vector<TagScore> per_tag;  // tags with gold support or predictions, tag order
};

inline double f1_score(double precision, double recall) {
    return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

/// Metrics of a confusion matrix. Balanced accuracy averages recall over tags
/// with gold support; weighted scores weight each tag by its gold support.
inline WordMetrics word_metrics(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw std::invalid_argument("no scored words");
    WordMetrics m;
    m.total = cm.total();
    const double total = static_cast<double>(cm.total());
    m.accuracy = static_cast<double>(cm.correct()) / total;
    std::size_t supported = 0;
    double recall_sum = 0.0;
    for (Tag t : kAllTags) {
        TagScore s;
        s.tag = t;
        s.gold_support = cm.gold_support(t);
        s.predicted_total = cm.predicted_total(t);
        if (s.gold_support == 0 && s.predicted_total == 0) continue;
        const double hit = static_cast<double>(cm.at(t, t));
        s.precision = s.predicted_total ? hit / static_cast<double>(s.predicted_total) : 0.0;
        s.recall = s.gold_support ? hit / static_cast<double>(s.gold_support) : 0.0;
        s.f1 = f1_score(s.precision, s.recall);
        if (s.gold_support > 0) {
            ++supported;
            recall_sum += s.recall;
            const double w = static_cast<double>(s.gold_support) / total;
            m.weighted_precision += w * s.precision;
            m.weighted_recall += w * s.recall;
            m.weighted_f1 += w * s.f1;
        }
        m.per_tag.push_back(s);
    }
    m.balanced_accuracy = recall_sum / static_cast<double>(supported);
    return m;
}

inline WordMetrics word_metrics(std::span<const Tag> gold, std::span<const Tag> predicted) {
    if (gold.size() != predicted.size())
        throw std::invalid_argument("gold and predicted sequences differ in length (" +
                                    std::to_string(gold.size()) + " vs " + std::to_string(predicted.size()) + ")");
    if (gold.empty()) throw std::invalid_argument("no scored words");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], predicted[i]);
    return word_metrics(cm);
}

enum class Metric : std::uint8_t { Accuracy, BalancedAccuracy, WeightedF1, WeightedPrecision, WeightedRecall };

inline constexpr std::array<std::string_view, 5> kMetricNames = {
    "accuracy", "balanced_accuracy", "f1", "precision", "recall"};

constexpr std::string_view to_string(Metric m) { return kMetricNames[static_cast<std::size_t>(m)]; }

inline Metric parse_metric(std::string_view s) {
    for (std::size_t i = 0; i < kMetricNames.size(); ++i)
        if (kMetricNames[i] == s) return static_cast<Metric>(i);
    if (s == "weighted_f1") return Metric::WeightedF1;
    if (s == "weighted_precision") return Metric::WeightedPrecision;
    if (s == "weighted_recall") return Metric::WeightedRecall;
    throw ConfigError("unknown metric '" + std::string(s) + "'");
}

inline double metric_value(const WordMetrics& m, Metric metric) {
    switch (metric) {
    case Metric::Accuracy: return m.accuracy;
    case Metric::BalancedAccuracy: return m.balanced_accuracy;
    case Metric::WeightedF1: return m.weighted_f1;
    case Metric::WeightedPrecision: return m.weighted_precision;
    case Metric::WeightedRecall: return m.weighted_recall;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Identifier-level scoring.

inline void require_tagged(const ScoredIdentifier& s) {
    if (s.gold.empty() || s.gold.size() != s.predicted.size())
        throw DataError("identifier is not fully tagged (" + std::to_string(s.gold.size()) + " gold, " +
                        std::to_string(s.predicted.size()) + " predicted)");
}

/// Fraction of identifiers whose whole predicted sequence equals gold.
inline double identifier_accuracy(std::span<const ScoredIdentifier> scored) {
    if (scored.empty()) throw std::invalid_argument("no identifiers to score");
    std::size_t correct = 0;
    for (const auto& s : scored) {
        require_tagged(s);
        if (s.gold == s.predicted) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(scored.size());
}

struct ContextCell {
    std::size_t words = 0;
    std::size_t words_correct = 0;
    std::size_t identifiers = 0;
    std::size_t identifiers_correct = 0;

    double word_accuracy() const { return words ? static_cast<double>(words_correct) / words : 0.0; }
    double identifier_accuracy() const {
        return identifiers ? static_cast<double>(identifiers_correct) / identifiers : 0.0;
    }
};

/// Word and identifier accuracy per identifier context plus overall.
struct ContextReport {
    std::array<ContextCell, kContextCount> contexts{};
    ContextCell overall;
};

inline ContextReport context_report(std::span<const ScoredIdentifier> scored) {
    ContextReport r;
    for (const auto& s : scored) {
        require_tagged(s);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < s.gold.size(); ++i) hits += s.gold[i] == s.predicted[i];
        const bool whole = hits == s.gold.size();
        for (ContextCell* cell : {&r.contexts[index_of(s.context)], &r.overall}) {
            cell->words += s.gold.size();
            cell->words_correct += hits;
            cell->identifiers += 1;
            cell->identifiers_correct += whole ? 1 : 0;
        }
    }
    return r;
}

/// Full evaluation of one test set.
struct EvaluationReport {
    WordMetrics word;
    double identifier_accuracy = 0.0;
    ContextReport contexts;
};

inline EvaluationReport evaluate(std::span<const ScoredIdentifier> scored) {
    if (scored.empty()) throw std::invalid_argument("no identifiers to score");
    ConfusionMatrix cm;
    for (const auto& s : scored) {
        require_tagged(s);
        for (std::size_t i = 0; i < s.gold.size(); ++i) cm.add(s.gold[i], s.predicted[i]);
    }
    EvaluationReport r;
    r.word = word_metrics(cm);
    r.identifier_accuracy = identifier_accuracy(scored);
    r.contexts = context_report(scored);
    return r;
}

} // namespace idpos
