#pragma once

// Annotated identifier corpora: the tab-separated file format, dataset
// configuration transforms over records, and identifier-atomic partitions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "idpos/error.hpp"
#include "idpos/record.hpp"
#include "idpos/rng.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

inline constexpr std::string_view kCorpusHeader =
    "id\tsystem\tcontext\ttype_hint\traw_name\tposition\tword\tswum\tposse\tstanford\tgold";

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

inline std::string at_line(std::size_t lineno) { return " at line " + std::to_string(lineno); }

} // namespace detail

/// Reads a corpus. Rows are grouped into records by id in order of first
/// appearance; positions of one id must run 1, 2, 3, ... in file order.
inline std::vector<IdentifierRecord> parse_corpus(std::istream& in) {
    using detail::at_line;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw DataError("corpus is empty: header row missing");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCorpusHeader) throw DataError("bad corpus header" + at_line(lineno));

    std::vector<IdentifierRecord> records;
    std::unordered_map<std::string, std::size_t> by_id;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = detail::split_tabs(line);
        if (f.size() != 11)
            throw DataError("malformed row (" + std::to_string(f.size()) + " fields, expected 11)" +
                            at_line(lineno));

        std::size_t position = 0;
        try {
            std::size_t used = 0;
            position = std::stoul(std::string(f[5]), &used);
            if (used != f[5].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DataError("bad position '" + std::string(f[5]) + "'" + at_line(lineno));
        }
        if (f[6].empty()) throw DataError("empty word" + at_line(lineno));

        auto label = [&](std::string_view s) {
            auto l = try_parse_label(s);
            if (!l) throw DataError("unknown tag " + std::string(s) + at_line(lineno));
            return *l;
        };
        ConstituentTags ct{label(f[7]), label(f[8]), label(f[9])};
        std::optional<Tag> gold;
        if (f[10] != "MISSING") {
            gold = try_parse_tag(f[10]);
            if (!gold) throw DataError("unknown tag " + std::string(f[10]) + at_line(lineno));
        }

        IdentifierContext context;
        try {
            context = parse_context(f[2]);
        } catch (const DataError& e) {
            throw DataError(e.what() + at_line(lineno));
        }

        std::string id(f[0]);
        if (id.empty()) throw DataError("empty id" + at_line(lineno));
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            it = by_id.emplace(id, records.size()).first;
            IdentifierRecord r;
            r.id = id;
            r.system = std::string(f[1]);
            r.context = context;
            r.type_hint = std::string(f[3]);
            r.raw_name = std::string(f[4]);
            records.push_back(std::move(r));
        }
        auto& rec = records[it->second];
        if (rec.system != f[1] || rec.context != context || rec.type_hint != f[3] || rec.raw_name != f[4])
            throw DataError("identifier " + id + " has inconsistent metadata" + at_line(lineno));
        if (position != rec.words.size() + 1)
            throw DataError("identifier " + id + ": position " + std::to_string(position) + " out of sequence" +
                            at_line(lineno));
        rec.words.emplace_back(f[6]);
        rec.constituent.push_back(ct);
        rec.gold.push_back(gold);
    }
    return records;
}

inline std::vector<IdentifierRecord> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus " + path);
    return parse_corpus(in);
}

/// Canonical writer: header, then one row per word in record order, LF endings.
inline void write_corpus(std::ostream& out, std::span<const IdentifierRecord> records) {
    auto check = [](const std::string& s, const char* what) {
        if (s.find_first_of("\t\n\r") != std::string::npos)
            throw DataError(std::string(what) + " contains a tab or newline: " + s);
    };
    out << kCorpusHeader << '\n';
    for (const auto& r : records) {
        check(r.id, "id");
        check(r.system, "system");
        check(r.type_hint, "type_hint");
        check(r.raw_name, "raw_name");
        if (!r.constituent.empty() && r.constituent.size() != r.words.size())
            throw DataError("identifier " + r.id + ": constituent tags do not match word count");
        if (!r.gold.empty() && r.gold.size() != r.words.size())
            throw DataError("identifier " + r.id + ": gold tags do not match word count");
        for (std::size_t i = 0; i < r.words.size(); ++i) {
            check(r.words[i], "word");
            ConstituentTags ct = r.constituent.empty() ? ConstituentTags{} : r.constituent[i];
            std::string_view gold = "MISSING";
            if (!r.gold.empty() && r.gold[i]) gold = to_string(*r.gold[i]);
            out << r.id << '\t' << r.system << '\t' << to_string(r.context) << '\t' << r.type_hint << '\t'
                << r.raw_name << '\t' << (i + 1) << '\t' << r.words[i] << '\t' << to_string(ct.swum) << '\t'
                << to_string(ct.posse) << '\t' << to_string(ct.stanford) << '\t' << gold << '\n';
        }
    }
}

inline void save_corpus(const std::string& path, std::span<const IdentifierRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus " + path);
    write_corpus(out, records);
    if (!out) throw DataError("error writing corpus " + path);
}

// ---------------------------------------------------------------------------
// Dataset configuration transforms.

/// Collapses Stanford conjugation labels to V under the normalized configuration.
inline void apply_conjugation(std::vector<IdentifierRecord>& records, Conjugation conjugation) {
    for (auto& r : records)
        for (auto& c : r.constituent) c.stanford = apply_conjugation(c.stanford, conjugation);
}

/// Gold-tag frequencies over the records.
inline TagCounts count_gold(std::span<const IdentifierRecord> records) {
    TagCounts counts{};
    for (const auto& r : records)
        for (const auto& g : r.gold)
            if (g) ++counts[index_of(*g)];
    return counts;
}

inline void relabel_rare(std::vector<IdentifierRecord>& records, std::span<const Tag> rare) {
    for (auto& r : records)
        for (auto& g : r.gold)
            if (g && std::find(rare.begin(), rare.end(), *g) != rare.end()) g = Tag::OTHER;
}

/// Augmented configuration: tags rarer than `threshold` in `train` become
/// OTHER in both `train` and `test`. Returns the relabeled tags.
inline std::vector<Tag> augment(std::vector<IdentifierRecord>& train, std::vector<IdentifierRecord>& test,
                                std::size_t threshold) {
    auto rare = rare_tags(count_gold(train), threshold);
    relabel_rare(train, rare);
    relabel_rare(test, rare);
    return rare;
}

// ---------------------------------------------------------------------------
// Partitions. Every partition moves whole identifiers.

struct FoldAssignment {
    std::size_t k = 0;
    std::vector<std::size_t> fold_of;  // indexed like the input records
    std::map<std::string, std::size_t> fold_by_id;

    std::vector<std::size_t> fold_sizes() const {
        std::vector<std::size_t> sizes(k, 0);
        for (auto f : fold_of) ++sizes[f];
        return sizes;
    }
};

namespace detail {

inline std::array<std::vector<std::size_t>, kContextCount> indices_by_context(
    std::span<const IdentifierRecord> records) {
    std::array<std::vector<std::size_t>, kContextCount> groups;
    for (std::size_t i = 0; i < records.size(); ++i) groups[index_of(records[i].context)].push_back(i);
    return groups;
}

inline void require_unique_ids(std::span<const IdentifierRecord> records) {
    std::unordered_set<std::string> seen;
    for (const auto& r : records)
        if (!seen.insert(r.id).second) throw DataError("duplicate identifier id " + r.id);
}

} // namespace detail

/// Stratified k-fold assignment. Each context's records are shuffled and dealt
/// round-robin, with the dealing position carried across contexts so both the
/// per-context and the overall fold sizes differ by at most one.
inline FoldAssignment assign_folds(std::span<const IdentifierRecord> records, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (records.size() < k)
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds identifier count " +
                                    std::to_string(records.size()));
    detail::require_unique_ids(records);

    Rng rng(seed);
    FoldAssignment out;
    out.k = k;
    out.fold_of.assign(records.size(), 0);
    std::size_t dealer = 0;
    for (auto& group : detail::indices_by_context(records)) {
        shuffle(group, rng);
        for (auto idx : group) {
            out.fold_of[idx] = dealer % k;
            ++dealer;
        }
    }
    for (std::size_t i = 0; i < records.size(); ++i) out.fold_by_id[records[i].id] = out.fold_of[i];
    return out;
}

struct TrainTestSplit {
    std::vector<IdentifierRecord> train;
    std::vector<IdentifierRecord> test;
};

/// Stratified, identifier-atomic split. The train side receives
/// round(fraction * N) identifiers; each context contributes the floor of its
/// share and the remainder goes to the contexts with the largest fractional
/// parts (ties in context order). Both sides keep the input order.
inline TrainTestSplit train_test_split(std::span<const IdentifierRecord> records, double train_fraction,
                                       std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train fraction must lie strictly between 0 and 1");
    const std::size_t n = records.size();
    const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
    if (n_train == 0 || n_train >= n)
        throw std::invalid_argument("split of " + std::to_string(n) + " identifiers at fraction " +
                                    std::to_string(train_fraction) + " leaves an empty side");

    auto groups = detail::indices_by_context(records);
    std::array<std::size_t, kContextCount> quota{};
    std::array<double, kContextCount> frac{};
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < kContextCount; ++c) {
        double share = train_fraction * static_cast<double>(groups[c].size());
        quota[c] = static_cast<std::size_t>(std::floor(share));
        frac[c] = share - static_cast<double>(quota[c]);
        assigned += quota[c];
    }
    std::array<std::size_t, kContextCount> order{0, 1, 2, 3, 4};
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return frac[a] > frac[b]; });
    for (std::size_t j = 0; assigned < n_train; j = (j + 1) % kContextCount) {
        auto c = order[j];
        if (quota[c] < groups[c].size()) {
            ++quota[c];
            ++assigned;
        }
    }

    Rng rng(seed);
    std::vector<bool> is_train(n, false);
    for (std::size_t c = 0; c < kContextCount; ++c) {
        shuffle(groups[c], rng);
        for (std::size_t j = 0; j < quota[c]; ++j) is_train[groups[c][j]] = true;
    }
    TrainTestSplit out;
    for (std::size_t i = 0; i < n; ++i) (is_train[i] ? out.train : out.test).push_back(records[i]);
    return out;
}

/// Round-robin sampling across systems: for each context, visit systems in
/// sorted order and draw one random unused identifier from each until
/// `per_context` identifiers are chosen or every system is exhausted.
inline std::vector<IdentifierRecord> sample_round_robin(std::span<const IdentifierRecord> records,
                                                        std::size_t per_context, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::size_t> chosen;
    for (auto ctx : kAllContexts) {
        std::map<std::string, std::vector<std::size_t>> by_system;
        for (std::size_t i = 0; i < records.size(); ++i)
            if (records[i].context == ctx) by_system[records[i].system].push_back(i);
        for (auto& [_, pool] : by_system) shuffle(pool, rng);
        std::map<std::string, std::size_t> cursor;
        std::size_t taken = 0;
        bool progress = true;
        while (taken < per_context && progress) {
            progress = false;
            for (auto& [system, pool] : by_system) {
                if (taken == per_context) break;
                auto& at = cursor[system];
                if (at < pool.size()) {
                    chosen.push_back(pool[at++]);
                    ++taken;
                    progress = true;
                }
            }
        }
    }
    std::vector<IdentifierRecord> out;
    out.reserve(chosen.size());
    for (auto i : chosen) out.push_back(records[i]);
    return out;
}

} // namespace idpos
