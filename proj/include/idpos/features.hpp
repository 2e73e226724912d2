#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/error.hpp"
#include "idpos/record.hpp"
#include "idpos/taggers.hpp"

namespace idpos {

/// The nine per-word features, in canonical order.
enum class Feature : std::uint8_t {
    Word, DataType, Swum, Posse, Stanford, Position, IdentifierSize, NormalizedPosition, Context
};

inline constexpr std::size_t kFeatureCount = 9;

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "word", "type_hint", "swum", "posse", "stanford", "position", "identifier_size", "normalized_position",
    "context"};

constexpr std::string_view to_string(Feature f) { return kFeatureNames[static_cast<std::size_t>(f)]; }

inline Feature parse_feature(std::string_view s) {
    for (std::size_t i = 0; i < kFeatureCount; ++i)
        if (kFeatureNames[i] == s) return static_cast<Feature>(i);
    if (s == "data_type") return Feature::DataType;
    throw ConfigError("unknown feature '" + std::string(s) + "'");
}

/// Non-empty set of features, iterated in canonical order.
class FeatureSubset {
public:
    FeatureSubset() = default;

    static FeatureSubset from_mask(std::uint32_t mask) {
        if (mask == 0 || mask >= (1u << kFeatureCount)) throw std::invalid_argument("feature subset is empty");
        FeatureSubset s;
        s.mask_ = mask;
        return s;
    }

    static FeatureSubset of(std::initializer_list<Feature> features) {
        std::uint32_t mask = 0;
        for (auto f : features) mask |= 1u << static_cast<unsigned>(f);
        return from_mask(mask);
    }

    /// Comma-separated feature names, e.g. "swum,posse,stanford".
    static FeatureSubset parse(std::string_view list) {
        std::uint32_t mask = 0;
        std::size_t start = 0;
        while (start <= list.size()) {
            auto comma = list.find(',', start);
            auto item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
            if (!item.empty()) mask |= 1u << static_cast<unsigned>(parse_feature(item));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (mask == 0) throw ConfigError("feature subset is empty");
        return from_mask(mask);
    }

    static FeatureSubset all() { return from_mask((1u << kFeatureCount) - 1); }

    /// SWUM, POSSE and Stanford annotations, normalized position and context.
    static FeatureSubset best() {
        return of({Feature::Swum, Feature::Posse, Feature::Stanford, Feature::NormalizedPosition,
                   Feature::Context});
    }

    bool contains(Feature f) const { return (mask_ >> static_cast<unsigned>(f)) & 1u; }
    std::uint32_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }

    std::vector<Feature> features() const {
        std::vector<Feature> out;
        for (std::size_t i = 0; i < kFeatureCount; ++i)
            if ((mask_ >> i) & 1u) out.push_back(static_cast<Feature>(i));
        return out;
    }

    std::size_t size() const { return features().size(); }

    std::string str() const {
        std::string out;
        for (auto f : features()) {
            if (!out.empty()) out += ',';
            out += to_string(f);
        }
        return out;
    }

    friend bool operator==(const FeatureSubset&, const FeatureSubset&) = default;

private:
    std::uint32_t mask_ = 0;
};

/// Categorical feature values of one word, aligned with FeatureSubset::features().
struct FeatureVector {
    std::vector<std::string> values;
};

/// Beginning (1), middle (2) or end (3) of an identifier. The first word is
/// always 1, so a single-word identifier is 1.
inline int normalized_position(std::size_t index, std::size_t length) {
    if (index < 1 || index > length)
        throw std::out_of_range("word index " + std::to_string(index) + " outside 1.." + std::to_string(length));
    if (index == 1) return 1;
    if (index == length) return 3;
    return 2;
}

inline std::string canonical_type_hint(std::string_view type_hint) { return detail::canonical_type(type_hint); }

namespace detail {

inline bool column_present(const IdentifierRecord& r, Label ConstituentTags::*col) {
    if (r.constituent.size() != r.words.size()) return false;
    for (const auto& c : r.constituent)
        if (c.*col != Label::MISSING) return true;
    return false;
}

} // namespace detail

/// Features of every word of `record`, one vector per word in word order.
///
/// A constituent column counts as absent when the record carries no value
/// for it at all; individual MISSING words are ordinary categorical values.
inline std::vector<FeatureVector> vectorize(const IdentifierRecord& record, const FeatureSubset& subset) {
    if (subset.empty()) throw std::invalid_argument("feature subset is empty");
    auto features = subset.features();
    const std::size_t n = record.words.size();
    if (n == 0) throw DataError("identifier " + record.id + " has no words");

    for (auto f : features) {
        Label ConstituentTags::*col = nullptr;
        if (f == Feature::Swum) col = &ConstituentTags::swum;
        if (f == Feature::Posse) col = &ConstituentTags::posse;
        if (f == Feature::Stanford) col = &ConstituentTags::stanford;
        if (col && !detail::column_present(record, col))
            throw DataError("identifier " + record.id + " lacks the " + std::string(to_string(f)) + " column");
    }

    std::vector<FeatureVector> out(n);
    const std::string type = canonical_type_hint(record.type_hint);
    for (std::size_t i = 0; i < n; ++i) {
        auto& values = out[i].values;
        values.reserve(features.size());
        for (auto f : features) {
            switch (f) {
            case Feature::Word: values.push_back(to_lower(record.words[i])); break;
            case Feature::DataType: values.push_back(type); break;
            case Feature::Swum: values.emplace_back(to_string(record.constituent[i].swum)); break;
            case Feature::Posse: values.emplace_back(to_string(record.constituent[i].posse)); break;
            case Feature::Stanford: values.emplace_back(to_string(record.constituent[i].stanford)); break;
            case Feature::Position: values.push_back(std::to_string(i + 1)); break;
            case Feature::IdentifierSize: values.push_back(std::to_string(n)); break;
            case Feature::NormalizedPosition: values.push_back(std::to_string(normalized_position(i + 1, n))); break;
            case Feature::Context: values.emplace_back(to_string(record.context)); break;
            }
        }
    }
    return out;
}

/// Encoded rows: X[row][feature] category codes, y[row] class index.
struct EncodedDataset {
    std::vector<std::vector<std::uint32_t>> X;
    std::vector<std::uint32_t> y;
    std::size_t feature_count = 0;

    std::size_t rows() const { return X.size(); }
};

/// Per-feature category dictionaries. Code 0 is reserved for values not seen
/// while fitting; seen values take codes 1, 2, ... in order of first appearance.
class FeatureEncoder {
public:
    static constexpr std::uint32_t kUnknown = 0;

    FeatureEncoder() = default;
    explicit FeatureEncoder(std::size_t feature_count) : dictionaries_(feature_count) {}

    void fit(const FeatureVector& v) {
        if (v.values.size() != dictionaries_.size()) throw std::invalid_argument("feature vector width mismatch");
        for (std::size_t f = 0; f < v.values.size(); ++f) {
            auto& dict = dictionaries_[f];
            if (!dict.index.contains(v.values[f])) {
                dict.values.push_back(v.values[f]);
                dict.index.emplace(v.values[f], static_cast<std::uint32_t>(dict.values.size()));
            }
        }
    }

    std::vector<std::uint32_t> encode(const FeatureVector& v) const {
        if (v.values.size() != dictionaries_.size()) throw std::invalid_argument("feature vector width mismatch");
        std::vector<std::uint32_t> out(v.values.size());
        for (std::size_t f = 0; f < v.values.size(); ++f) {
            const auto& idx = dictionaries_[f].index;
            auto it = idx.find(v.values[f]);
            out[f] = it == idx.end() ? kUnknown : it->second;
        }
        return out;
    }

    std::size_t feature_count() const { return dictionaries_.size(); }

    /// Seen values of feature f in code order (code = position + 1).
    const std::vector<std::string>& values(std::size_t f) const { return dictionaries_.at(f).values; }

    std::size_t cardinality(std::size_t f) const { return dictionaries_.at(f).values.size() + 1; }

    void set_values(std::size_t f, std::vector<std::string> vals) {
        auto& dict = dictionaries_.at(f);
        dict.values = std::move(vals);
        dict.index.clear();
        for (std::size_t i = 0; i < dict.values.size(); ++i)
            dict.index.emplace(dict.values[i], static_cast<std::uint32_t>(i + 1));
    }

    friend bool operator==(const FeatureEncoder& a, const FeatureEncoder& b) {
        if (a.dictionaries_.size() != b.dictionaries_.size()) return false;
        for (std::size_t f = 0; f < a.dictionaries_.size(); ++f)
            if (a.dictionaries_[f].values != b.dictionaries_[f].values) return false;
        return true;
    }

private:
    struct Dictionary {
        std::vector<std::string> values;
        std::map<std::string, std::uint32_t> index;
    };
    std::vector<Dictionary> dictionaries_;
};

} // namespace idpos
