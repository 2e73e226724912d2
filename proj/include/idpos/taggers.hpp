#pragma once

// Heuristic stand-ins for the three constituent taggers. They reproduce the
// tag-support limits and broad error structure of SWUM, POSSE and Stanford,
// not their accuracy. Corpora that carry precomputed columns bypass them.

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/lexicon.hpp"
#include "idpos/record.hpp"
#include "idpos/splitter.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

namespace detail {

inline bool all_digits(std::string_view w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return is_digit(c); });
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline bool is_verb_reading(PennTag p) {
    switch (p) {
    case PennTag::VB: case PennTag::VBD: case PennTag::VBG: case PennTag::VBN:
    case PennTag::VBP: case PennTag::VBZ: case PennTag::MD:
        return true;
    default:
        return false;
    }
}

inline bool is_noun_reading(PennTag p) {
    return p == PennTag::NN || p == PennTag::NNS || p == PennTag::NNP || p == PennTag::NNPS;
}

/// Most frequent reading, or the suffix default for unknown words.
inline PennTag primary_reading(const Lexicon& lex, std::string_view word) {
    if (all_digits(word)) return PennTag::CD;
    const auto& r = lex.readings(word);
    if (!r.empty()) return r.front();
    auto w = to_lower(word);
    if (w.size() > 3 && ends_with(w, "ed")) return PennTag::VBD;
    if (w.size() > 4 && ends_with(w, "ing")) return PennTag::VBG;
    if (w.size() > 3 && ends_with(w, "ly")) return PennTag::RB;
    if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss")) return PennTag::NNS;
    return PennTag::NN;
}

/// Known preamble spellings: namespace, Hungarian and library prefixes.
inline bool is_known_prefix(std::string_view word) {
    static constexpr std::array<std::string_view, 16> prefixes = {
        "g", "m", "p", "s", "k", "b", "gl", "glew", "gimp", "gtk", "qt", "wx", "sdl", "vk", "ns", "cf"};
    auto w = to_lower(word);
    return std::find(prefixes.begin(), prefixes.end(), w) != prefixes.end();
}

inline bool is_closed_class(PennTag p) {
    return p == PennTag::IN || p == PennTag::TO || p == PennTag::DT || p == PennTag::PRP ||
           p == PennTag::PRPS || p == PennTag::CC;
}

inline std::string canonical_type(std::string_view type_hint) {
    std::string out;
    for (char c : type_hint)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '&') out.push_back(c);
    return out;
}

inline bool is_boolean_type(std::string_view type_hint) {
    auto t = to_lower(canonical_type(type_hint));
    for (std::string_view q : {"const", "static", "unsigned"})
        if (t.starts_with(q)) t.erase(0, q.size());
    return t == "bool" || t == "boolean" || t == "gboolean" || t == "int" || t == "bool_t";
}

inline bool is_predicate_prefix(std::string_view word) {
    static constexpr std::array<std::string_view, 10> forms = {
        "is", "has", "can", "should", "was", "does", "are", "have", "contains", "needs"};
    auto w = to_lower(word);
    return std::find(forms.begin(), forms.end(), w) != forms.end();
}

inline void require_words(std::span<const std::string> words) {
    if (words.empty()) throw std::invalid_argument("tagger input has no words");
}

/// Noun-phrase shaping shared by the SWUM- and POSSE-style stand-ins:
/// last word is the head noun, earlier words modify it.
inline Tag phrase_role(std::size_t i, std::size_t n) { return i + 1 == n ? Tag::N : Tag::NM; }

} // namespace detail

/// Stanford-style tagging: lexicon lookup with suffix fallbacks and a small
/// bigram adjustment, mapped onto the reduced alphabet.
///
/// Function names are tagged behind a synthetic leading "I" so a verb-initial
/// name reads as an action; the synthetic token's tag is discarded.
inline std::vector<Label> tag_lexicon(std::span<const std::string> words, IdentifierContext context,
                                      Conjugation conjugation, const Lexicon& lex = Lexicon::builtin()) {
    using namespace detail;
    require_words(words);

    std::vector<std::string> tokens;
    const bool prefixed = context == IdentifierContext::FUNCTION;
    if (prefixed) tokens.emplace_back("I");
    tokens.insert(tokens.end(), words.begin(), words.end());

    std::vector<PennTag> penn;
    penn.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& w = tokens[i];
        PennTag tag = primary_reading(lex, w);
        const auto& r = lex.readings(w);
        if (i > 0 && !r.empty()) {
            PennTag prev = penn[i - 1];
            if (prev == PennTag::PRP && (lex.has_reading(w, PennTag::VB) || lex.has_reading(w, PennTag::VBP)))
                tag = PennTag::VBP;
            else if ((prev == PennTag::MD || prev == PennTag::TO) && lex.has_reading(w, PennTag::VB))
                tag = PennTag::VB;
            else if ((prev == PennTag::DT || prev == PennTag::JJ || prev == PennTag::PRPS) &&
                     is_verb_reading(tag)) {
                auto noun = std::find_if(r.begin(), r.end(), is_noun_reading);
                if (noun != r.end()) tag = *noun;
            }
        }
        penn.push_back(tag);
    }

    std::vector<Label> out;
    out.reserve(words.size());
    for (std::size_t i = prefixed ? 1 : 0; i < penn.size(); ++i)
        out.push_back(map_penn_to_reduced(penn[i], conjugation, context));
    return out;
}

inline std::vector<Label> tag_lexicon(const SplitIdentifier& id, IdentifierContext context,
                                      Conjugation conjugation, const Lexicon& lex = Lexicon::builtin()) {
    return tag_lexicon(id.words, context, conjugation, lex);
}

/// SWUM-style tagging: verb detection on the first word of function names,
/// noun-phrase shaping elsewhere, preamble detection on the first token.
/// Never produces NPL, VM or CJ.
inline std::vector<Tag> tag_swum_like(std::span<const std::string> words, IdentifierContext context,
                                      std::string_view type_hint, const Lexicon& lex = Lexicon::builtin()) {
    using namespace detail;
    require_words(words);
    const std::size_t n = words.size();
    std::vector<Tag> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = phrase_role(i, n);

    bool verb_first = false;
    if (n > 1 && is_known_prefix(words[0]) && !lex.has_reading(words[0], PennTag::DT)) {
        out[0] = Tag::PRE;
    } else {
        const auto& r = lex.readings(words[0]);
        bool verbish = std::any_of(r.begin(), r.end(), is_verb_reading);
        if (context == IdentifierContext::FUNCTION && verbish) verb_first = true;
        if (is_boolean_type(type_hint) && is_predicate_prefix(words[0])) verb_first = true;
        if (verb_first) out[0] = Tag::V;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (out[i] == Tag::PRE || (i == 0 && verb_first)) continue;
        const auto& w = words[i];
        if (all_digits(w)) { out[i] = Tag::D; continue; }
        PennTag p = primary_reading(lex, w);
        if (p == PennTag::IN || p == PennTag::TO || p == PennTag::CC) out[i] = Tag::P;
        else if (p == PennTag::DT) out[i] = Tag::DT;
        else if (p == PennTag::PRP || p == PennTag::PRPS) out[i] = Tag::PR;
    }
    return out;
}

inline std::vector<Tag> tag_swum_like(const SplitIdentifier& id, IdentifierContext context,
                                      std::string_view type_hint, const Lexicon& lex = Lexicon::builtin()) {
    return tag_swum_like(id.words, context, type_hint, lex);
}

/// POSSE-style tagging: the same phrase shaping, a stricter verb test (the
/// word's most frequent reading must be a verb), a merged closed list for
/// prepositions, determiners, pronouns and conjunctions (all P), and adverbs
/// as VM. Never produces NPL, CJ or PRE.
inline std::vector<Tag> tag_posse_like(std::span<const std::string> words, IdentifierContext context,
                                       std::string_view type_hint, const Lexicon& lex = Lexicon::builtin()) {
    using namespace detail;
    require_words(words);
    const std::size_t n = words.size();
    std::vector<Tag> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = phrase_role(i, n);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& w = words[i];
        if (all_digits(w)) { out[i] = Tag::D; continue; }
        PennTag p = primary_reading(lex, w);
        if (is_closed_class(p)) { out[i] = Tag::P; continue; }
        if (p == PennTag::RB || p == PennTag::RBR) { out[i] = Tag::VM; continue; }
        if (i == 0) {
            bool verb = context == IdentifierContext::FUNCTION && is_verb_reading(p);
            if (is_boolean_type(type_hint) && is_predicate_prefix(w)) verb = true;
            if (verb) out[i] = Tag::V;
        }
    }
    return out;
}

inline std::vector<Tag> tag_posse_like(const SplitIdentifier& id, IdentifierContext context,
                                       std::string_view type_hint, const Lexicon& lex = Lexicon::builtin()) {
    return tag_posse_like(id.words, context, type_hint, lex);
}

/// Runs the stand-ins for every constituent column the record lacks
/// entirely. A column holding at least one value is precomputed tagger
/// output and is left untouched, MISSING words included.
inline void annotate_missing(IdentifierRecord& record, Conjugation conjugation,
                             const Lexicon& lex = Lexicon::builtin()) {
    if (record.words.empty()) return;
    if (record.constituent.size() != record.words.size())
        record.constituent.assign(record.words.size(), ConstituentTags{});
    auto need = [&](Label ConstituentTags::*col) {
        return std::all_of(record.constituent.begin(), record.constituent.end(),
                           [&](const ConstituentTags& c) { return c.*col == Label::MISSING; });
    };
    if (need(&ConstituentTags::swum)) {
        auto tags = tag_swum_like(record.words, record.context, record.type_hint, lex);
        for (std::size_t i = 0; i < tags.size(); ++i)
            record.constituent[i].swum = to_label(tags[i]);
    }
    if (need(&ConstituentTags::posse)) {
        auto tags = tag_posse_like(record.words, record.context, record.type_hint, lex);
        for (std::size_t i = 0; i < tags.size(); ++i)
            record.constituent[i].posse = to_label(tags[i]);
    }
    if (need(&ConstituentTags::stanford)) {
        auto tags = tag_lexicon(record.words, record.context, conjugation, lex);
        for (std::size_t i = 0; i < tags.size(); ++i)
            record.constituent[i].stanford = tags[i];
    }
}

} // namespace idpos
