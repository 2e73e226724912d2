#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idpos/tagset.hpp"

namespace idpos {

/// Per-word output of the three constituent taggers. MISSING marks a column
/// the tagger did not produce; it is an ordinary categorical value to the learners.
struct ConstituentTags {
    Label swum = Label::MISSING;
    Label posse = Label::MISSING;
    Label stanford = Label::MISSING;

    friend bool operator==(const ConstituentTags&, const ConstituentTags&) = default;
};

/// One identifier with its split words and whatever annotations are known.
struct IdentifierRecord {
    std::string id;
    std::string system;
    IdentifierContext context = IdentifierContext::DECLARATION;
    std::string type_hint;
    std::string raw_name;
    std::vector<std::string> words;
    std::vector<ConstituentTags> constituent;  // empty or one per word
    std::vector<std::optional<Tag>> gold;       // empty or one per word

    std::size_t size() const { return words.size(); }

    bool has_gold() const {
        if (gold.size() != words.size() || words.empty()) return false;
        for (const auto& g : gold)
            if (!g) return false;
        return true;
    }

    std::vector<Tag> gold_tags() const {
        std::vector<Tag> out;
        out.reserve(gold.size());
        for (const auto& g : gold) out.push_back(g.value());
        return out;
    }

    friend bool operator==(const IdentifierRecord&, const IdentifierRecord&) = default;
};

/// Gold and predicted tag sequences of one identifier, for scoring.
struct ScoredIdentifier {
    IdentifierContext context = IdentifierContext::DECLARATION;
    std::vector<Tag> gold;
    std::vector<Tag> predicted;
};

} // namespace idpos
