#pragma once

// CART over categorical features with binary equality splits
// ("feature == value" goes to the true branch).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/error.hpp"
#include "idpos/features.hpp"
#include "idpos/rng.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

enum class Criterion : std::uint8_t { GINI, ENTROPY };

constexpr std::string_view to_string(Criterion c) { return c == Criterion::GINI ? "GINI" : "ENTROPY"; }
constexpr std::string_view to_string(Algorithm a) {
    return a == Algorithm::DECISION_TREE ? "DECISION_TREE" : "RANDOM_FOREST";
}

inline Criterion parse_criterion(std::string_view s) {
    if (s == "GINI" || s == "gini") return Criterion::GINI;
    if (s == "ENTROPY" || s == "entropy") return Criterion::ENTROPY;
    throw ConfigError("unknown criterion '" + std::string(s) + "'");
}

inline Algorithm parse_algorithm(std::string_view s) {
    if (s == "DECISION_TREE" || s == "DT") return Algorithm::DECISION_TREE;
    if (s == "RANDOM_FOREST" || s == "RF") return Algorithm::RANDOM_FOREST;
    throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

struct Hyperparameters {
    Algorithm algorithm = Algorithm::RANDOM_FOREST;
    Criterion criterion = Criterion::GINI;
    std::size_t max_depth = 83;
    std::size_t n_estimators = 250;
    bool bootstrap = true;
    /// Draw ceil(sqrt(#features)) candidate features per split (forest only).
    bool feature_subsample = true;
    std::uint64_t seed = 0;

    /// Tuned defaults: forest (depth 83, 250 trees, gini, bootstrap),
    /// tree (entropy, depth 9).
    static Hyperparameters defaults(Algorithm algorithm) {
        Hyperparameters hp;
        hp.algorithm = algorithm;
        if (algorithm == Algorithm::DECISION_TREE) {
            hp.criterion = Criterion::ENTROPY;
            hp.max_depth = 9;
            hp.n_estimators = 1;
            hp.bootstrap = false;
            hp.feature_subsample = false;
        }
        return hp;
    }

    friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

/// Impurity of a class-count distribution: gini 1 - sum p^2, or entropy in bits.
inline double impurity(std::span<const std::uint32_t> counts, Criterion criterion) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw std::invalid_argument("impurity of an empty distribution");
    const double n = static_cast<double>(total);
    double acc = 0.0;
    if (criterion == Criterion::GINI) {
        for (auto c : counts) {
            double p = static_cast<double>(c) / n;
            acc += p * p;
        }
        return 1.0 - acc;
    }
    for (auto c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / n;
        acc -= p * std::log2(p);
    }
    return acc;
}

inline double impurity(std::initializer_list<std::uint32_t> counts, Criterion criterion) {
    return impurity(std::span<const std::uint32_t>(counts.begin(), counts.size()), criterion);
}

/// Splits must improve impurity by more than this to be taken.
inline constexpr double kMinGain = 1e-12;

/// Gain of splitting `parent` into `left` and parent - left.
inline double split_gain(std::span<const std::uint32_t> parent, std::span<const std::uint32_t> left,
                         double parent_impurity, Criterion criterion, std::vector<std::uint32_t>& scratch) {
    std::uint64_t n = 0, nl = 0;
    scratch.resize(parent.size());
    for (std::size_t c = 0; c < parent.size(); ++c) {
        n += parent[c];
        nl += left[c];
        scratch[c] = parent[c] - left[c];
    }
    const double fl = static_cast<double>(nl) / static_cast<double>(n);
    const double fr = static_cast<double>(n - nl) / static_cast<double>(n);
    return parent_impurity - fl * impurity(left, criterion) - fr * impurity(scratch, criterion);
}

/// Flattened binary tree. Branch nodes test X[feature] == value; leaves hold
/// the training class counts.
class TreeModel {
public:
    struct Node {
        std::int32_t feature = -1;  // -1 marks a leaf
        std::uint32_t value = 0;
        std::int32_t if_true = -1;
        std::int32_t if_false = -1;
        std::uint32_t leaf = 0;     // leaf slot, leaves only

        bool is_leaf() const { return feature < 0; }
        friend bool operator==(const Node&, const Node&) = default;
    };

    TreeModel() = default;
    TreeModel(std::size_t class_count, std::vector<Node> nodes, std::vector<std::uint32_t> leaf_counts)
        : class_count_(class_count), nodes_(std::move(nodes)), leaf_counts_(std::move(leaf_counts)) {}

    std::size_t class_count() const { return class_count_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<std::uint32_t>& leaf_counts() const { return leaf_counts_; }

    std::size_t depth() const { return nodes_.empty() ? 0 : depth_from(0); }
    std::size_t leaf_count() const { return class_count_ ? leaf_counts_.size() / class_count_ : 0; }

    /// Class counts of the leaf reached by `row`.
    std::span<const std::uint32_t> distribution(std::span<const std::uint32_t> row) const {
        std::int32_t at = 0;
        while (!nodes_[at].is_leaf()) {
            const auto& node = nodes_[at];
            at = row[node.feature] == node.value ? node.if_true : node.if_false;
        }
        return {leaf_counts_.data() + nodes_[at].leaf * class_count_, class_count_};
    }

    /// Majority class of the reached leaf; ties go to the lowest class index.
    std::uint32_t predict(std::span<const std::uint32_t> row) const {
        auto d = distribution(row);
        return static_cast<std::uint32_t>(std::max_element(d.begin(), d.end()) - d.begin());
    }

    friend bool operator==(const TreeModel&, const TreeModel&) = default;

private:
    std::size_t depth_from(std::int32_t at) const {
        const auto& n = nodes_[at];
        if (n.is_leaf()) return 0;
        return 1 + std::max(depth_from(n.if_true), depth_from(n.if_false));
    }

    std::size_t class_count_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> leaf_counts_;
};

/// Best equality split found at one node.
struct SplitChoice {
    bool found = false;
    std::size_t feature = 0;
    std::uint32_t value = 0;
    double gain = 0.0;
};

namespace detail {

class TreeBuilder {
public:
    TreeBuilder(const EncodedDataset& data, std::size_t class_count, const Hyperparameters& hp, Rng* rng,
                bool subsample)
        : data_(data), classes_(class_count), hp_(hp), rng_(rng), subsample_(subsample) {
        cardinality_.assign(data.feature_count, 1);
        for (const auto& row : data.X)
            for (std::size_t f = 0; f < data.feature_count; ++f)
                cardinality_[f] = std::max<std::size_t>(cardinality_[f], row[f] + 1);
        if (subsample_) {
            auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(data.feature_count))));
            per_split_ = std::max<std::size_t>(1, k);
        } else {
            per_split_ = data.feature_count;
        }
    }

    TreeModel build(std::vector<std::uint32_t> rows) {
        rows_ = std::move(rows);
        grow(0, rows_.size(), 0);
        return TreeModel(classes_, std::move(nodes_), std::move(leaf_counts_));
    }

    SplitChoice root_split(std::vector<std::uint32_t> rows) {
        rows_ = std::move(rows);
        std::vector<std::uint32_t> counts(classes_, 0);
        for (auto r : rows_) ++counts[data_.y[r]];
        std::vector<std::size_t> features(data_.feature_count);
        std::iota(features.begin(), features.end(), 0);
        return best_split(0, rows_.size(), features, counts, impurity(counts, hp_.criterion));
    }

    /// Best split over `features` for rows [begin, end), tie-broken by
    /// feature order then value order.
    SplitChoice best_split(std::size_t begin, std::size_t end, std::span<const std::size_t> features,
                           std::span<const std::uint32_t> parent, double parent_impurity) {
        SplitChoice best;
        const std::size_t n = end - begin;
        for (auto f : features) {
            const std::size_t card = cardinality_[f];
            table_.assign(card * classes_, 0);
            per_value_.assign(card, 0);
            for (std::size_t i = begin; i < end; ++i) {
                const auto& row = data_.X[rows_[i]];
                ++table_[row[f] * classes_ + data_.y[rows_[i]]];
                ++per_value_[row[f]];
            }
            for (std::uint32_t v = 0; v < card; ++v) {
                if (per_value_[v] == 0 || per_value_[v] == n) continue;
                std::span<const std::uint32_t> left(table_.data() + v * classes_, classes_);
                double gain = split_gain(parent, left, parent_impurity, hp_.criterion, scratch_);
                if (gain > kMinGain && (!best.found || gain > best.gain)) best = {true, f, v, gain};
            }
        }
        return best;
    }

private:
    bool is_constant(std::size_t begin, std::size_t end, std::size_t f) const {
        auto first = data_.X[rows_[begin]][f];
        for (std::size_t i = begin + 1; i < end; ++i)
            if (data_.X[rows_[i]][f] != first) return false;
        return true;
    }

    /// Candidate features for one split. Without subsampling: all of them.
    /// With subsampling: features are visited in random order and the first
    /// `per_split_` that are not constant on the node are kept, so a split is
    /// never lost to a draw of constant columns.
    std::vector<std::size_t> candidates(std::size_t begin, std::size_t end) {
        std::vector<std::size_t> all(data_.feature_count);
        std::iota(all.begin(), all.end(), 0);
        if (!subsample_ || per_split_ >= all.size()) return all;
        shuffle(all, *rng_);
        std::vector<std::size_t> chosen;
        for (auto f : all) {
            if (chosen.size() == per_split_) break;
            if (!is_constant(begin, end, f)) chosen.push_back(f);
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    std::int32_t make_leaf(std::span<const std::uint32_t> counts) {
        Node node;
        node.leaf = static_cast<std::uint32_t>(leaf_counts_.size() / classes_);
        leaf_counts_.insert(leaf_counts_.end(), counts.begin(), counts.end());
        nodes_.push_back(node);
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    std::int32_t grow(std::size_t begin, std::size_t end, std::size_t depth) {
        std::vector<std::uint32_t> counts(classes_, 0);
        for (std::size_t i = begin; i < end; ++i) ++counts[data_.y[rows_[i]]];
        const double parent_impurity = impurity(counts, hp_.criterion);

        if (depth >= hp_.max_depth || parent_impurity <= 0.0) return make_leaf(counts);
        auto features = candidates(begin, end);
        auto split = best_split(begin, end, features, counts, parent_impurity);
        if (!split.found) return make_leaf(counts);

        auto mid = std::stable_partition(rows_.begin() + static_cast<std::ptrdiff_t>(begin),
                                         rows_.begin() + static_cast<std::ptrdiff_t>(end),
                                         [&](std::uint32_t r) { return data_.X[r][split.feature] == split.value; });
        const auto cut = static_cast<std::size_t>(mid - rows_.begin());

        nodes_.push_back(Node{static_cast<std::int32_t>(split.feature), split.value, -1, -1, 0});
        const auto self = static_cast<std::int32_t>(nodes_.size() - 1);
        auto t = grow(begin, cut, depth + 1);
        nodes_[self].if_true = t;
        auto f = grow(cut, end, depth + 1);
        nodes_[self].if_false = f;
        return self;
    }

    using Node = TreeModel::Node;

    const EncodedDataset& data_;
    std::size_t classes_;
    Hyperparameters hp_;
    Rng* rng_;
    bool subsample_;
    std::size_t per_split_ = 0;
    std::vector<std::size_t> cardinality_;
    std::vector<std::uint32_t> rows_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> leaf_counts_;
    std::vector<std::uint32_t> table_, per_value_, scratch_;
};

inline void check_dataset(const EncodedDataset& data, std::size_t class_count) {
    if (data.X.empty() || data.X.size() != data.y.size())
        throw std::invalid_argument("training data must be non-empty with one label per row");
    for (auto c : data.y)
        if (c >= class_count) throw std::invalid_argument("class index out of range");
    for (const auto& row : data.X)
        if (row.size() != data.feature_count) throw std::invalid_argument("ragged feature matrix");
}

} // namespace detail

/// Best split at the root of a tree trained on all of `data` without
/// feature subsampling.
inline SplitChoice best_root_split(const EncodedDataset& data, std::size_t class_count, Criterion criterion) {
    detail::check_dataset(data, class_count);
    Hyperparameters hp;
    hp.criterion = criterion;
    detail::TreeBuilder builder(data, class_count, hp, nullptr, false);
    std::vector<std::uint32_t> rows(data.rows());
    std::iota(rows.begin(), rows.end(), 0);
    return builder.root_split(std::move(rows));
}

/// Trains one tree on `rows` (indices into `data`, repeats allowed).
/// `rng` is consulted only when `subsample` is set.
inline TreeModel train_tree(const EncodedDataset& data, std::size_t class_count, const Hyperparameters& hp,
                            std::vector<std::uint32_t> rows, Rng& rng, bool subsample) {
    detail::check_dataset(data, class_count);
    if (rows.empty()) throw std::invalid_argument("training rows are empty");
    detail::TreeBuilder builder(data, class_count, hp, &rng, subsample);
    return builder.build(std::move(rows));
}

/// Trains a single decision tree on every row of `data`.
inline TreeModel train_tree(const EncodedDataset& data, std::size_t class_count, const Hyperparameters& hp) {
    detail::check_dataset(data, class_count);
    std::vector<std::uint32_t> rows(data.rows());
    std::iota(rows.begin(), rows.end(), 0);
    Rng rng(hp.seed);
    return train_tree(data, class_count, hp, std::move(rows), rng, false);
}

} // namespace idpos
