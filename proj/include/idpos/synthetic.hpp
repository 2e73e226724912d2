#pragma once

// Generated corpora with known gold patterns and simulated constituent
// taggers whose mistakes are confined to chosen tags.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/record.hpp"
#include "idpos/rng.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

/// Per-tagger error model: each listed gold tag is replaced, with
/// probability `rate`, by a tag drawn uniformly from the other eleven.
struct SimulatedTagger {
    std::vector<Tag> error_tags;
    double rate = 0.0;
};

struct SyntheticOptions {
    std::size_t identifiers = 2000;
    std::size_t target_words = 0;  // when non-zero, stop at exactly this many words
    std::uint64_t seed = 1;
    SimulatedTagger swum{{Tag::V}, 0.4};
    SimulatedTagger posse{{Tag::NM}, 0.4};
    SimulatedTagger stanford{{Tag::PRE, Tag::P}, 0.4};
};

namespace detail::synthetic {

struct WeightedPattern {
    std::string_view tags;
    unsigned weight;
};

inline constexpr std::array<WeightedPattern, 11> kFunction = {{{"V N", 6},
                                                                {"V NM N", 4},
                                                                {"V P N", 4},
                                                                {"V NM P N", 2},
                                                                {"PRE V N", 4},
                                                                {"PRE V NM N", 2},
                                                                {"PRE V P N", 2},
                                                                {"V NPL", 2},
                                                                {"V DT N", 1},
                                                                {"V N P N", 2},
                                                                {"V", 4}}};
inline constexpr std::array<WeightedPattern, 7> kClass = {
    {{"NM N", 4}, {"PRE NM N", 5}, {"PRE N", 4}, {"N", 1}, {"NM NM N", 4}, {"N P N", 2}, {"PRE N P N", 1}}};
inline constexpr std::array<WeightedPattern, 8> kAttribute = {
    {{"PRE N", 4}, {"PRE NM N", 3}, {"V NM", 6}, {"V N", 3}, {"NM N", 3}, {"N P N", 2}, {"NPL", 1}, {"N", 1}}};
inline constexpr std::array<WeightedPattern, 7> kParameter = {
    {{"N", 2}, {"NM N", 3}, {"PRE N", 3}, {"V N", 4}, {"N P N", 3}, {"NPL", 1}, {"P NM N", 1}}};
inline constexpr std::array<WeightedPattern, 8> kDeclaration = {
    {{"NM N", 3}, {"NM P N", 3}, {"PRE NM N", 3}, {"V N", 5}, {"N D", 2}, {"NPL", 1}, {"DT NM N", 1}, {"N", 1}}};

inline std::span<const WeightedPattern> patterns_for(IdentifierContext c) {
    switch (c) {
    case IdentifierContext::FUNCTION: return kFunction;
    case IdentifierContext::CLASS: return kClass;
    case IdentifierContext::ATTRIBUTE: return kAttribute;
    case IdentifierContext::PARAMETER: return kParameter;
    case IdentifierContext::DECLARATION: return kDeclaration;
    }
    return kDeclaration;
}

inline const std::vector<std::string_view>& words_for(Tag t) {
    static const std::array<std::vector<std::string_view>, kTagCount> words = {{
        /* N */ {"user", "token", "list", "head", "node", "buffer", "name", "file", "count", "index", "size",
                 "handler", "reader", "writer", "value", "key", "table", "item", "event", "window", "widget",
                 "path", "stream", "socket", "config", "entry", "record", "queue", "cache", "state"},
        /* DT */ {"the", "a", "all", "each", "any", "this"},
        /* CJ */ {"and", "or"},
        /* P */ {"to", "from", "of", "in", "for", "by", "at", "on", "with", "into"},
        /* NPL */ {"users", "tokens", "items", "nodes", "files", "names", "entries", "values", "events", "keys"},
        /* NM */ {"max", "min", "last", "first", "current", "default", "total", "temp", "local", "new", "old",
                  "next", "prev", "active", "global", "raw", "user", "file", "data", "text", "byte", "line"},
        /* V */ {"get", "set", "find", "load", "save", "create", "remove", "update", "read", "write", "parse",
                 "init", "reset", "open", "close", "add", "insert", "compute", "build", "handle"},
        /* VM */ {"quickly", "again", "now"},
        /* PR */ {"my", "our", "it"},
        /* D */ {"2", "3", "4", "8", "16", "32", "64"},
        /* PRE */ {"g", "m", "p", "s", "k", "gl", "gtk", "qt", "wx", "xml"},
        /* OTHER */ {"misc"},
    }};
    return words[index_of(t)];
}

inline std::string_view type_for(IdentifierContext c, Rng& rng) {
    static constexpr std::array<std::string_view, 6> fn = {"void", "int", "bool", "char*", "Token", "size_t"};
    static constexpr std::array<std::string_view, 6> var = {"int", "char*", "GList*", "std::string", "double",
                                                            "Node*"};
    if (c == IdentifierContext::CLASS) return "";
    if (c == IdentifierContext::FUNCTION) return fn[rng.below(fn.size())];
    return var[rng.below(var.size())];
}

inline std::vector<Tag> parse_tags(std::string_view s) {
    std::vector<Tag> out;
    std::size_t start = 0;
    while (start < s.size()) {
        auto end = s.find(' ', start);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(parse_tag(s.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

inline std::vector<Tag> draw_pattern(IdentifierContext c, Rng& rng) {
    auto pats = patterns_for(c);
    unsigned total = 0;
    for (const auto& p : pats) total += p.weight;
    auto pick = rng.below(total);
    for (const auto& p : pats) {
        if (pick < p.weight) return parse_tags(p.tags);
        pick -= p.weight;
    }
    return parse_tags(pats.back().tags);
}

inline Tag simulate(Tag gold, const SimulatedTagger& tagger, Rng& rng) {
    bool eligible = false;
    for (Tag t : tagger.error_tags) eligible |= t == gold;
    if (!eligible || !rng.bernoulli(tagger.rate)) return gold;
    // Uniform over the eleven real tags other than gold.
    auto k = rng.below(kTagCount - 2);
    std::size_t seen = 0;
    for (Tag t : kAllTags) {
        if (t == gold || t == Tag::OTHER) continue;
        if (seen++ == k) return t;
    }
    return gold;
}

} // namespace detail::synthetic

/// Generated gold-annotated corpus with simulated constituent columns.
/// Contexts cycle FUNCTION, CLASS, ATTRIBUTE, PARAMETER, DECLARATION.
inline std::vector<IdentifierRecord> generate_synthetic_corpus(const SyntheticOptions& opt) {
    using namespace detail::synthetic;
    static constexpr std::array<std::string_view, 4> systems = {"alpha", "beta", "gamma", "delta"};
    Rng rng(opt.seed);
    std::vector<IdentifierRecord> out;
    std::size_t words_total = 0;
    for (std::size_t i = 0;; ++i) {
        if (opt.target_words ? words_total >= opt.target_words : i >= opt.identifiers) break;
        IdentifierRecord r;
        r.context = kAllContexts[i % kContextCount];
        r.system = systems[(i / kContextCount) % systems.size()];
        r.id = "syn-" + std::to_string(i + 1);
        auto tags = draw_pattern(r.context, rng);
        if (opt.target_words && words_total + tags.size() > opt.target_words) {
            const std::size_t left = opt.target_words - words_total;
            tags.assign(left - 1, Tag::NM);
            tags.push_back(Tag::N);
        }
        r.type_hint = std::string(type_for(r.context, rng));
        for (std::size_t w = 0; w < tags.size(); ++w) {
            const auto& pool = words_for(tags[w]);
            std::string word(pool[rng.below(pool.size())]);
            if (w > 0 && !word.empty() && std::islower(static_cast<unsigned char>(word[0])))
                word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
            r.raw_name += word;
            r.words.push_back(word);
            ConstituentTags ct;
            ct.swum = to_label(simulate(tags[w], opt.swum, rng));
            ct.posse = to_label(simulate(tags[w], opt.posse, rng));
            ct.stanford = to_label(simulate(tags[w], opt.stanford, rng));
            r.constituent.push_back(ct);
            r.gold.emplace_back(tags[w]);
        }
        words_total += tags.size();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace idpos
