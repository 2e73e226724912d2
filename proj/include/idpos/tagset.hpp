#pragma once

// Reduced part-of-speech alphabet for identifier words, the Penn Treebank
// mapping onto it, identifier categories and dataset configurations.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/error.hpp"

namespace idpos {

/// Reduced tag alphabet. Declaration order is the fixed tag order used for
/// every tie-break (leaf argmax, forest vote, report rows).
enum class Tag : std::uint8_t { N, DT, CJ, P, NPL, NM, V, VM, PR, D, PRE, OTHER };

inline constexpr std::size_t kTagCount = 12;

inline constexpr std::array<Tag, kTagCount> kAllTags = {
    Tag::N, Tag::DT, Tag::CJ, Tag::P, Tag::NPL, Tag::NM,
    Tag::V, Tag::VM, Tag::PR, Tag::D, Tag::PRE, Tag::OTHER};

inline constexpr std::array<std::string_view, kTagCount> kTagNames = {
    "N", "DT", "CJ", "P", "NPL", "NM", "V", "VM", "PR", "D", "PRE", "OTHER"};

constexpr std::size_t index_of(Tag t) { return static_cast<std::size_t>(t); }
constexpr std::string_view to_string(Tag t) { return kTagNames[index_of(t)]; }

inline std::optional<Tag> try_parse_tag(std::string_view s) {
    for (std::size_t i = 0; i < kTagCount; ++i)
        if (kTagNames[i] == s) return kAllTags[i];
    return std::nullopt;
}

inline Tag parse_tag(std::string_view s) {
    if (auto t = try_parse_tag(s)) return *t;
    throw DataError("unknown tag " + std::string(s));
}

/// Value of a constituent-tagger column. Shares numbering with Tag for the
/// first twelve members; VBD/VBG/VBN carry raw Stanford conjugations kept
/// under the conjugated configuration; MISSING marks absent tagger output.
enum class Label : std::uint8_t {
    N, DT, CJ, P, NPL, NM, V, VM, PR, D, PRE, OTHER, VBD, VBG, VBN, MISSING
};

inline constexpr std::size_t kLabelCount = 16;

inline constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
    "N", "DT", "CJ", "P", "NPL", "NM", "V", "VM", "PR", "D", "PRE", "OTHER",
    "VBD", "VBG", "VBN", "MISSING"};

constexpr Label to_label(Tag t) { return static_cast<Label>(index_of(t)); }
constexpr std::string_view to_string(Label l) { return kLabelNames[static_cast<std::size_t>(l)]; }
constexpr bool is_conjugation(Label l) {
    return l == Label::VBD || l == Label::VBG || l == Label::VBN;
}

/// The Tag a label names, if it is one of the twelve reduced tags.
constexpr std::optional<Tag> as_tag(Label l) {
    auto i = static_cast<std::size_t>(l);
    if (i < kTagCount) return kAllTags[i];
    return std::nullopt;
}

inline std::optional<Label> try_parse_label(std::string_view s) {
    for (std::size_t i = 0; i < kLabelCount; ++i)
        if (kLabelNames[i] == s) return static_cast<Label>(i);
    return std::nullopt;
}

/// Penn Treebank annotations that the mapping table covers.
enum class PennTag : std::uint8_t {
    CC, CD, DT, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNP, NNPS, NNS, PRP, PRPS,
    RB, RBR, RP, SYM, TO, VB, VBD, VBG, VBN, VBP, VBZ
};

inline constexpr std::size_t kPennTagCount = 27;

inline constexpr std::array<std::string_view, kPennTagCount> kPennTagNames = {
    "CC", "CD", "DT", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNP", "NNPS", "NNS",
    "PRP", "PRP$", "RB", "RBR", "RP", "SYM", "TO", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ"};

constexpr std::string_view to_string(PennTag p) { return kPennTagNames[static_cast<std::size_t>(p)]; }

inline std::optional<PennTag> try_parse_penn(std::string_view s) {
    for (std::size_t i = 0; i < kPennTagCount; ++i)
        if (kPennTagNames[i] == s) return static_cast<PennTag>(i);
    return std::nullopt;
}

inline PennTag parse_penn(std::string_view s) {
    if (auto p = try_parse_penn(s)) return *p;
    throw DataError("unknown Penn tag " + std::string(s));
}

enum class IdentifierContext : std::uint8_t { FUNCTION, CLASS, ATTRIBUTE, PARAMETER, DECLARATION };

inline constexpr std::size_t kContextCount = 5;

inline constexpr std::array<IdentifierContext, kContextCount> kAllContexts = {
    IdentifierContext::FUNCTION, IdentifierContext::CLASS, IdentifierContext::ATTRIBUTE,
    IdentifierContext::PARAMETER, IdentifierContext::DECLARATION};

inline constexpr std::array<std::string_view, kContextCount> kContextNames = {
    "FUNCTION", "CLASS", "ATTRIBUTE", "PARAMETER", "DECLARATION"};

constexpr std::size_t index_of(IdentifierContext c) { return static_cast<std::size_t>(c); }
constexpr std::string_view to_string(IdentifierContext c) { return kContextNames[index_of(c)]; }

inline IdentifierContext parse_context(std::string_view s) {
    for (std::size_t i = 0; i < kContextCount; ++i)
        if (kContextNames[i] == s) return kAllContexts[i];
    throw DataError("unknown identifier context " + std::string(s));
}

enum class Conjugation : std::uint8_t { CONJUGATED, NORMALIZED };
enum class Variant : std::uint8_t { PLAIN, AUGMENTED };

/// Whether a mapping result feeds a learner feature or becomes a gold label.
enum class MappingPurpose : std::uint8_t { Feature, Gold };

struct DatasetConfiguration {
    Variant variant = Variant::PLAIN;
    Conjugation conjugation = Conjugation::CONJUGATED;
    std::size_t augment_threshold = 25;

    friend bool operator==(const DatasetConfiguration&, const DatasetConfiguration&) = default;
};

/// Penn Treebank to reduced-tag mapping.
///
/// VBD/VBG/VBN are the only context-dependent rows. For features they
/// collapse to V when normalized and stay verbatim when conjugated. For gold
/// labels they resolve to V in function names and NM everywhere else.
constexpr Label map_penn_to_reduced(PennTag penn, Conjugation conjugation, IdentifierContext context,
                                    MappingPurpose purpose = MappingPurpose::Feature) {
    switch (penn) {
    case PennTag::CC: return Label::CJ;
    case PennTag::CD: return Label::D;
    case PennTag::DT: return Label::DT;
    case PennTag::FW: return Label::N;
    case PennTag::IN: return Label::P;
    case PennTag::JJ:
    case PennTag::JJR:
    case PennTag::JJS: return Label::NM;
    case PennTag::LS: return Label::N;
    case PennTag::MD: return Label::V;
    case PennTag::NN:
    case PennTag::NNP: return Label::N;
    case PennTag::NNPS:
    case PennTag::NNS: return Label::NPL;
    case PennTag::PRP:
    case PennTag::PRPS: return Label::PR;
    case PennTag::RB:
    case PennTag::RBR:
    case PennTag::RP: return Label::VM;
    case PennTag::SYM: return Label::N;
    case PennTag::TO: return Label::P;
    case PennTag::VB: return Label::V;
    case PennTag::VBD:
    case PennTag::VBG:
    case PennTag::VBN:
        if (purpose == MappingPurpose::Gold)
            return context == IdentifierContext::FUNCTION ? Label::V : Label::NM;
        if (conjugation == Conjugation::NORMALIZED) return Label::V;
        return penn == PennTag::VBD ? Label::VBD : penn == PennTag::VBG ? Label::VBG : Label::VBN;
    case PennTag::VBP:
    case PennTag::VBZ: return Label::V;
    }
    return Label::N;
}

/// Gold-label form of the mapping; always one of the twelve reduced tags.
constexpr Tag map_penn_to_gold(PennTag penn, IdentifierContext context) {
    return *as_tag(map_penn_to_reduced(penn, Conjugation::NORMALIZED, context, MappingPurpose::Gold));
}

/// Applies a conjugation mode to an already-mapped Stanford label.
constexpr Label apply_conjugation(Label stanford, Conjugation conjugation) {
    if (conjugation == Conjugation::NORMALIZED && is_conjugation(stanford)) return Label::V;
    return stanford;
}

// ---------------------------------------------------------------------------
// Augmentation: rare gold tags collapse into OTHER.

using TagCounts = std::array<std::size_t, kTagCount>;

inline TagCounts count_tags(std::span<const std::vector<Tag>> corpus) {
    TagCounts counts{};
    for (const auto& seq : corpus)
        for (Tag t : seq) ++counts[index_of(t)];
    return counts;
}

/// Tags with 0 < count < threshold. OTHER itself is never reported rare.
inline std::vector<Tag> rare_tags(const TagCounts& counts, std::size_t threshold) {
    if (threshold < 1) throw std::invalid_argument("augmentation threshold must be >= 1");
    std::vector<Tag> rare;
    for (Tag t : kAllTags) {
        auto c = counts[index_of(t)];
        if (t != Tag::OTHER && c > 0 && c < threshold) rare.push_back(t);
    }
    return rare;
}

inline void relabel_rare(std::vector<std::vector<Tag>>& corpus, std::span<const Tag> rare) {
    for (auto& seq : corpus)
        for (Tag& t : seq)
            if (std::find(rare.begin(), rare.end(), t) != rare.end()) t = Tag::OTHER;
}

/// Relabels every tag whose frequency in `corpus` falls below `threshold`.
inline std::vector<std::vector<Tag>> apply_augmentation(std::vector<std::vector<Tag>> corpus,
                                                        std::size_t threshold) {
    auto rare = rare_tags(count_tags(corpus), threshold);
    relabel_rare(corpus, rare);
    return corpus;
}

// ---------------------------------------------------------------------------
// Configuration codes: DT/RF + C/N + A/P, e.g. RFCP.

enum class Algorithm : std::uint8_t { DECISION_TREE, RANDOM_FOREST };

struct ConfigurationCode {
    Algorithm algorithm = Algorithm::RANDOM_FOREST;
    DatasetConfiguration dataset;

    std::string str() const {
        std::string s = algorithm == Algorithm::DECISION_TREE ? "DT" : "RF";
        s += dataset.conjugation == Conjugation::CONJUGATED ? 'C' : 'N';
        s += dataset.variant == Variant::PLAIN ? 'P' : 'A';
        return s;
    }
};

inline ConfigurationCode parse_configuration_code(std::string_view code) {
    auto bad = [&] { return ConfigError("invalid configuration code '" + std::string(code) +
                                        "' (expected DT|RF, C|N, A|P, e.g. RFCP)"); };
    if (code.size() != 4) throw bad();
    ConfigurationCode out;
    auto algo = code.substr(0, 2);
    if (algo == "DT") out.algorithm = Algorithm::DECISION_TREE;
    else if (algo == "RF") out.algorithm = Algorithm::RANDOM_FOREST;
    else throw bad();
    if (code[2] == 'C') out.dataset.conjugation = Conjugation::CONJUGATED;
    else if (code[2] == 'N') out.dataset.conjugation = Conjugation::NORMALIZED;
    else throw bad();
    if (code[3] == 'P') out.dataset.variant = Variant::PLAIN;
    else if (code[3] == 'A') out.dataset.variant = Variant::AUGMENTED;
    else throw bad();
    return out;
}

} // namespace idpos
