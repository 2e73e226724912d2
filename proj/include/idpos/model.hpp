#pragma once

// The ensemble tagger: dataset configuration, feature encoding and a trained
// tree or forest, with a versioned JSON model file.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "idpos/corpus.hpp"
#include "idpos/error.hpp"
#include "idpos/features.hpp"
#include "idpos/forest.hpp"
#include "idpos/tagset.hpp"
#include "idpos/taggers.hpp"

namespace idpos {

inline constexpr int kModelFormatVersion = 1;

struct TaggerModel {
    Hyperparameters hp;
    DatasetConfiguration dataset;
    FeatureSubset features;
    FeatureEncoder encoder;
    std::vector<Tag> classes;    // class index -> tag, in tag order
    std::vector<Tag> rare_tags;  // relabeled to OTHER (augmented configuration)
    ForestModel forest;

    std::string code() const { return ConfigurationCode{hp.algorithm, dataset}.str(); }

    friend bool operator==(const TaggerModel&, const TaggerModel&) = default;
};

struct Prediction {
    std::vector<Tag> tags;
    std::vector<std::vector<double>> distributions;  // per word, indexed like TaggerModel::classes
};

/// Records prepared for a model: conjugation applied; rare gold tags relabeled.
inline std::vector<IdentifierRecord> prepare_records(std::vector<IdentifierRecord> records,
                                                     const DatasetConfiguration& dataset,
                                                     std::span<const Tag> rare) {
    apply_conjugation(records, dataset.conjugation);
    if (dataset.variant == Variant::AUGMENTED) relabel_rare(records, rare);
    return records;
}

/// Feature rows of `records` under an existing encoder; labels are appended
/// when `classes` is non-empty and the record has gold tags.
inline EncodedDataset encode_records(std::span<const IdentifierRecord> records, const FeatureSubset& subset,
                                     const FeatureEncoder& encoder, std::span<const Tag> classes) {
    EncodedDataset data;
    data.feature_count = subset.size();
    for (const auto& r : records) {
        auto vectors = vectorize(r, subset);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            data.X.push_back(encoder.encode(vectors[i]));
            if (!classes.empty()) {
                if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");
                auto it = std::find(classes.begin(), classes.end(), *r.gold[i]);
                if (it == classes.end())
                    throw DataError("identifier " + r.id + ": gold tag " + std::string(to_string(*r.gold[i])) +
                                    " is not a model class");
                data.y.push_back(static_cast<std::uint32_t>(it - classes.begin()));
            }
        }
    }
    return data;
}

/// Trains a tagger on gold-annotated records. Under the augmented
/// configuration the rare-tag set is computed from these records only.
inline TaggerModel train_model(std::span<const IdentifierRecord> records, const Hyperparameters& hp,
                               const DatasetConfiguration& dataset, const FeatureSubset& subset,
                               unsigned threads = 0) {
    if (records.empty()) throw std::invalid_argument("no training records");
    for (const auto& r : records)
        if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");

    TaggerModel model;
    model.hp = hp;
    model.dataset = dataset;
    model.features = subset;

    std::vector<IdentifierRecord> prepared(records.begin(), records.end());
    apply_conjugation(prepared, dataset.conjugation);
    if (dataset.variant == Variant::AUGMENTED) {
        model.rare_tags = rare_tags(count_gold(prepared), dataset.augment_threshold);
        relabel_rare(prepared, model.rare_tags);
    }

    model.encoder = FeatureEncoder(subset.size());
    std::array<bool, kTagCount> present{};
    for (const auto& r : prepared) {
        for (const auto& v : vectorize(r, subset)) model.encoder.fit(v);
        for (const auto& g : r.gold) present[index_of(*g)] = true;
    }
    for (Tag t : kAllTags)
        if (present[index_of(t)]) model.classes.push_back(t);

    auto data = encode_records(prepared, subset, model.encoder, model.classes);
    if (hp.algorithm == Algorithm::DECISION_TREE) {
        model.forest = ForestModel(model.classes.size(), {train_tree(data, model.classes.size(), hp)});
    } else {
        model.forest = train_forest(data, model.classes.size(), hp, threads);
    }
    return model;
}

/// Encoded feature rows of one record, with stand-ins filling absent
/// constituent columns when `use_standins` is set.
inline std::vector<std::vector<std::uint32_t>> encode_for_model(const TaggerModel& model,
                                                                const IdentifierRecord& record,
                                                                bool use_standins) {
    IdentifierRecord r = record;
    if (use_standins) annotate_missing(r, model.dataset.conjugation);
    std::vector<IdentifierRecord> one{std::move(r)};
    apply_conjugation(one, model.dataset.conjugation);
    try {
        return encode_records(one, model.features, model.encoder, {}).X;
    } catch (const DataError& e) {
        throw ModelError(std::string("cannot tag with model features ") + model.features.str() + ": " + e.what());
    }
}

inline Prediction predict(const TaggerModel& model, const IdentifierRecord& record, bool use_standins = true) {
    Prediction out;
    for (const auto& row : encode_for_model(model, record, use_standins)) {
        out.tags.push_back(model.classes[model.forest.predict(row)]);
        out.distributions.push_back(model.forest.distribution(row));
    }
    return out;
}

/// Class predictions for already-encoded rows.
inline std::vector<Tag> predict_rows(const TaggerModel& model, std::span<const std::vector<std::uint32_t>> rows) {
    std::vector<Tag> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != model.features.size())
            throw ModelError("feature row width " + std::to_string(row.size()) + " does not match model (" +
                             std::to_string(model.features.size()) + ")");
        out.push_back(model.classes[model.forest.predict(row)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Model file.

inline nlohmann::json to_json(const TaggerModel& m) {
    using nlohmann::json;
    json j;
    j["format"] = "idpos-model";
    j["version"] = kModelFormatVersion;
    j["configuration"] = {
        {"code", m.code()},
        {"algorithm", to_string(m.hp.algorithm)},
        {"criterion", to_string(m.hp.criterion)},
        {"max_depth", m.hp.max_depth},
        {"n_estimators", m.hp.n_estimators},
        {"bootstrap", m.hp.bootstrap},
        {"feature_subsample", m.hp.feature_subsample},
        {"seed", m.hp.seed},
        {"conjugation", m.dataset.conjugation == Conjugation::CONJUGATED ? "CONJUGATED" : "NORMALIZED"},
        {"variant", m.dataset.variant == Variant::PLAIN ? "PLAIN" : "AUGMENTED"},
        {"augment_threshold", m.dataset.augment_threshold},
    };
    json features = json::array();
    for (auto f : m.features.features()) features.push_back(to_string(f));
    j["features"] = features;
    json encoders = json::array();
    for (std::size_t f = 0; f < m.encoder.feature_count(); ++f) encoders.push_back(m.encoder.values(f));
    j["encoders"] = encoders;
    json classes = json::array();
    for (auto t : m.classes) classes.push_back(to_string(t));
    j["classes"] = classes;
    json rare = json::array();
    for (auto t : m.rare_tags) rare.push_back(to_string(t));
    j["rare_tags"] = rare;

    json trees = json::array();
    for (const auto& t : m.forest.trees()) {
        json feature = json::array(), value = json::array(), if_true = json::array(), if_false = json::array(),
             leaf = json::array();
        for (const auto& n : t.nodes()) {
            feature.push_back(n.feature);
            value.push_back(n.value);
            if_true.push_back(n.if_true);
            if_false.push_back(n.if_false);
            leaf.push_back(n.leaf);
        }
        trees.push_back({{"feature", feature},
                         {"value", value},
                         {"if_true", if_true},
                         {"if_false", if_false},
                         {"leaf", leaf},
                         {"leaf_counts", t.leaf_counts()}});
    }
    j["trees"] = trees;
    return j;
}

inline TaggerModel model_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "idpos-model") throw DataError("not an idpos model file");
        if (j.at("version").get<int>() != kModelFormatVersion)
            throw DataError("unsupported model version " + j.at("version").dump());
        TaggerModel m;
        const auto& c = j.at("configuration");
        m.hp.algorithm = parse_algorithm(c.at("algorithm").get<std::string>());
        m.hp.criterion = parse_criterion(c.at("criterion").get<std::string>());
        m.hp.max_depth = c.at("max_depth").get<std::size_t>();
        m.hp.n_estimators = c.at("n_estimators").get<std::size_t>();
        m.hp.bootstrap = c.at("bootstrap").get<bool>();
        m.hp.feature_subsample = c.at("feature_subsample").get<bool>();
        m.hp.seed = c.at("seed").get<std::uint64_t>();
        m.dataset.conjugation =
            c.at("conjugation").get<std::string>() == "CONJUGATED" ? Conjugation::CONJUGATED : Conjugation::NORMALIZED;
        m.dataset.variant = c.at("variant").get<std::string>() == "PLAIN" ? Variant::PLAIN : Variant::AUGMENTED;
        m.dataset.augment_threshold = c.at("augment_threshold").get<std::size_t>();

        std::string feature_list;
        for (const auto& f : j.at("features")) {
            if (!feature_list.empty()) feature_list += ',';
            feature_list += f.get<std::string>();
        }
        m.features = FeatureSubset::parse(feature_list);
        const auto& enc = j.at("encoders");
        if (enc.size() != m.features.size()) throw DataError("encoder count does not match features");
        m.encoder = FeatureEncoder(m.features.size());
        for (std::size_t f = 0; f < enc.size(); ++f) m.encoder.set_values(f, enc[f].get<std::vector<std::string>>());
        for (const auto& t : j.at("classes")) m.classes.push_back(parse_tag(t.get<std::string>()));
        for (const auto& t : j.at("rare_tags")) m.rare_tags.push_back(parse_tag(t.get<std::string>()));
        if (m.classes.empty()) throw DataError("model has no classes");

        std::vector<TreeModel> trees;
        for (const auto& t : j.at("trees")) {
            auto feature = t.at("feature").get<std::vector<std::int32_t>>();
            auto value = t.at("value").get<std::vector<std::uint32_t>>();
            auto if_true = t.at("if_true").get<std::vector<std::int32_t>>();
            auto if_false = t.at("if_false").get<std::vector<std::int32_t>>();
            auto leaf = t.at("leaf").get<std::vector<std::uint32_t>>();
            auto counts = t.at("leaf_counts").get<std::vector<std::uint32_t>>();
            const auto n = feature.size();
            if (n == 0 || value.size() != n || if_true.size() != n || if_false.size() != n || leaf.size() != n)
                throw DataError("malformed tree node arrays");
            std::vector<TreeModel::Node> nodes(n);
            const auto leaves = counts.size() / m.classes.size();
            for (std::size_t i = 0; i < n; ++i) {
                nodes[i] = {feature[i], value[i], if_true[i], if_false[i], leaf[i]};
                auto in_range = [&](std::int32_t k) { return k > static_cast<std::int32_t>(i) && k < static_cast<std::int32_t>(n); };
                if (nodes[i].is_leaf() ? leaf[i] >= leaves
                                       : (static_cast<std::size_t>(feature[i]) >= m.features.size() ||
                                          !in_range(if_true[i]) || !in_range(if_false[i])))
                    throw DataError("malformed tree node " + std::to_string(i));
            }
            trees.emplace_back(m.classes.size(), std::move(nodes), std::move(counts));
        }
        if (trees.empty()) throw DataError("model has no trees");
        m.forest = ForestModel(m.classes.size(), std::move(trees));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed model file: ") + e.what());
    } catch (const ConfigError& e) {
        throw DataError(std::string("malformed model file: ") + e.what());
    }
}

inline std::string serialize_model(const TaggerModel& m) { return to_json(m).dump() + "\n"; }

inline TaggerModel deserialize_model(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

inline void save_model(const std::string& path, const TaggerModel& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write model " + path);
    out << serialize_model(m);
    if (!out) throw DataError("error writing model " + path);
}

inline TaggerModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize_model(buf.str());
}

} // namespace idpos
