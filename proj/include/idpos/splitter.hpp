#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idpos {

struct SplitIdentifier {
    std::string raw;
    std::vector<std::string> words;

    /// 1-based word positions.
    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> p(words.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = i + 1;
        return p;
    }
};

namespace detail {

inline bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
inline bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_alnum_ascii(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

inline bool is_short_acronym(std::string_view w) {
    if (w.empty() || w.size() > 4) return false;
    for (char c : w)
        if (!is_upper(c)) return false;
    return true;
}

} // namespace detail

/// Splits an identifier into words.
///
/// Boundaries: any non-alphanumeric character (dropped), lower-to-upper
/// camel case, the last capital of an upper-case run that is followed by a
/// lower-case letter (XMLReader -> XML Reader), and digit runs. A digit run
/// stays attached to a preceding all-capital token of at most four letters
/// so domain abbreviations such as IPV4 survive intact. No abbreviation
/// expansion is attempted.
inline SplitIdentifier split(std::string_view raw) {
    using namespace detail;
    SplitIdentifier out{std::string(raw), {}};
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.words.push_back(std::move(cur));
        cur.clear();
    };

    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (!is_alnum_ascii(c)) {
            flush();
            continue;
        }
        if (cur.empty()) {
            cur.push_back(c);
            continue;
        }
        char prev = cur.back();
        if (is_digit(c)) {
            if (!is_digit(prev) && !is_short_acronym(cur)) flush();
        } else if (is_digit(prev)) {
            flush();
        } else if (is_upper(c) && is_lower(prev)) {
            flush();
        } else if (is_lower(c) && is_upper(prev) && cur.size() > 1 && is_upper(cur[cur.size() - 2])) {
            // Upper run followed by lower case: the last capital starts a new word.
            char last = cur.back();
            cur.pop_back();
            flush();
            cur.push_back(last);
        }
        cur.push_back(c);
    }
    flush();

    if (out.words.empty())
        throw std::invalid_argument("unsplittable identifier '" + std::string(raw) +
                                    "': no alphanumeric characters");
    return out;
}

} // namespace idpos
