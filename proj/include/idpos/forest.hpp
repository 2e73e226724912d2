#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "idpos/rng.hpp"
#include "idpos/tree.hpp"

namespace idpos {

/// Majority-vote ensemble of trees. A decision tree is stored as a
/// one-tree forest.
class ForestModel {
public:
    ForestModel() = default;
    ForestModel(std::size_t class_count, std::vector<TreeModel> trees)
        : class_count_(class_count), trees_(std::move(trees)) {}

    std::size_t class_count() const { return class_count_; }
    const std::vector<TreeModel>& trees() const { return trees_; }

    /// Votes per class, reduced in tree-index order.
    std::vector<std::uint32_t> votes(std::span<const std::uint32_t> row) const {
        std::vector<std::uint32_t> v(class_count_, 0);
        for (const auto& t : trees_) ++v[t.predict(row)];
        return v;
    }

    /// Majority vote; ties go to the lowest class index (fixed tag order).
    std::uint32_t predict(std::span<const std::uint32_t> row) const {
        if (trees_.size() == 1) return trees_.front().predict(row);
        auto v = votes(row);
        return static_cast<std::uint32_t>(std::max_element(v.begin(), v.end()) - v.begin());
    }

    /// Leaf class proportions for a single tree, vote fractions for a forest.
    std::vector<double> distribution(std::span<const std::uint32_t> row) const {
        std::vector<double> out(class_count_, 0.0);
        if (trees_.size() == 1) {
            auto d = trees_.front().distribution(row);
            double total = std::accumulate(d.begin(), d.end(), 0.0);
            for (std::size_t c = 0; c < class_count_; ++c) out[c] = d[c] / total;
            return out;
        }
        auto v = votes(row);
        for (std::size_t c = 0; c < class_count_; ++c)
            out[c] = static_cast<double>(v[c]) / static_cast<double>(trees_.size());
        return out;
    }

    friend bool operator==(const ForestModel&, const ForestModel&) = default;

private:
    std::size_t class_count_ = 0;
    std::vector<TreeModel> trees_;
};

/// Trains `hp.n_estimators` trees. Tree i draws its bootstrap sample and
/// split candidates from its own stream seeded with derive_seed(hp.seed, i),
/// so the result does not depend on how trees are scheduled over threads.
inline ForestModel train_forest(const EncodedDataset& data, std::size_t class_count, const Hyperparameters& hp,
                                unsigned threads = 0) {
    detail::check_dataset(data, class_count);
    if (hp.n_estimators == 0) throw std::invalid_argument("n_estimators must be positive");
    const std::size_t n = data.rows();
    std::vector<TreeModel> trees(hp.n_estimators);

    auto train_one = [&](std::size_t i) {
        Rng rng(derive_seed(hp.seed, i));
        std::vector<std::uint32_t> rows(n);
        if (hp.bootstrap) {
            for (auto& r : rows) r = static_cast<std::uint32_t>(rng.below(n));
        } else {
            std::iota(rows.begin(), rows.end(), 0);
        }
        trees[i] = train_tree(data, class_count, hp, std::move(rows), rng, hp.feature_subsample);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, hp.n_estimators));
    if (threads <= 1) {
        for (std::size_t i = 0; i < hp.n_estimators; ++i) train_one(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < hp.n_estimators; i += threads) train_one(i);
            });
        for (auto& th : pool) th.join();
    }
    return ForestModel(class_count, std::move(trees));
}

} // namespace idpos
