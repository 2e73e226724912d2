#pragma once

// Grammar patterns, per-context breakdowns and mis-annotation ranking.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/metrics.hpp"
#include "idpos/record.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

struct GrammarPattern {
    std::vector<Tag> tags;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (i) s.push_back(' ');
            s += to_string(tags[i]);
        }
        return s;
    }

    friend bool operator==(const GrammarPattern&, const GrammarPattern&) = default;
};

inline GrammarPattern pattern_of(std::span<const Tag> tags) {
    if (tags.empty()) throw std::invalid_argument("grammar pattern needs at least one tag");
    return GrammarPattern{{tags.begin(), tags.end()}};
}

/// Inverse of GrammarPattern::str(). Tags are separated by single spaces.
inline GrammarPattern parse_pattern(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty grammar pattern");
    GrammarPattern p;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(' ', start);
        if (end == std::string_view::npos) end = s.size();
        p.tags.push_back(parse_tag(s.substr(start, end - start)));
        start = end + 1;
    }
    return p;
}

struct MisannotationRow {
    GrammarPattern pattern;
    std::size_t incorrect = 0;
    std::size_t actual = 0;
    double proportion = 0.0;
};

enum class PatternGrouping { Gold, Predicted };

/// Identifiers grouped by pattern, ranked by the share mispredicted. Ties go
/// to the more frequent pattern, then to the lexically smaller one. Patterns
/// with no mispredictions are left out.
inline std::vector<MisannotationRow> misannotation_ranking(std::span<const ScoredIdentifier> scored, std::size_t top_k,
                                                           PatternGrouping grouping = PatternGrouping::Gold) {
    if (top_k < 1) throw std::invalid_argument("top_k must be at least 1");
    std::map<std::string, MisannotationRow> groups;
    for (const auto& s : scored) {
        require_tagged(s);
        auto pattern = pattern_of(grouping == PatternGrouping::Gold ? s.gold : s.predicted);
        auto& row = groups[pattern.str()];
        row.pattern = std::move(pattern);
        ++row.actual;
        if (s.gold != s.predicted) ++row.incorrect;
    }
    std::vector<std::pair<std::string, MisannotationRow>> rows;
    for (auto& [key, row] : groups) {
        if (row.incorrect == 0) continue;
        row.proportion = static_cast<double>(row.incorrect) / static_cast<double>(row.actual);
        rows.emplace_back(key, std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        // Cross-multiplied so equal ratios compare equal exactly.
        auto lhs = a.second.incorrect * b.second.actual;
        auto rhs = b.second.incorrect * a.second.actual;
        if (lhs != rhs) return lhs > rhs;
        if (a.second.actual != b.second.actual) return a.second.actual > b.second.actual;
        return a.first < b.first;
    });
    std::vector<MisannotationRow> out;
    for (std::size_t i = 0; i < rows.size() && i < top_k; ++i) out.push_back(std::move(rows[i].second));
    return out;
}

inline ContextReport per_context_report(std::span<const ScoredIdentifier> scored) { return context_report(scored); }

} // namespace idpos
