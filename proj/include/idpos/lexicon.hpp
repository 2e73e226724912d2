#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "idpos/detail/lexicon_data.hpp"
#include "idpos/error.hpp"
#include "idpos/tagset.hpp"

namespace idpos {

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

/// Word -> Penn readings, most frequent reading first. Lookup is case-insensitive.
///
/// Text format: one "word<TAB>penn-tag" per line; repeated words add further
/// readings in order of appearance; blank lines and lines starting with '#'
/// are ignored.
class Lexicon {
public:
    Lexicon() = default;

    static Lexicon parse(std::istream& in) {
        Lexicon lex;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos || tab == 0)
                throw DataError("lexicon line " + std::to_string(lineno) + ": expected word<TAB>tag");
            auto penn = try_parse_penn(std::string_view(line).substr(tab + 1));
            if (!penn)
                throw DataError("lexicon line " + std::to_string(lineno) + ": unknown tag " +
                                line.substr(tab + 1));
            lex.add(line.substr(0, tab), *penn);
        }
        return lex;
    }

    static Lexicon load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DataError("cannot open lexicon " + path);
        return parse(in);
    }

    /// The lexicon compiled into the library.
    static const Lexicon& builtin() {
        static const Lexicon lex = [] {
            std::string text;
            for (auto chunk : detail::kLexiconChunks) text.append(chunk);
            std::istringstream in(text);
            return parse(in);
        }();
        return lex;
    }

    void add(std::string_view word, PennTag tag) {
        auto& readings = entries_[to_lower(word)];
        if (std::find(readings.begin(), readings.end(), tag) == readings.end()) readings.push_back(tag);
    }

    /// Readings for `word`; empty when unknown.
    const std::vector<PennTag>& readings(std::string_view word) const {
        static const std::vector<PennTag> none;
        auto it = entries_.find(to_lower(word));
        return it == entries_.end() ? none : it->second;
    }

    bool contains(std::string_view word) const { return !readings(word).empty(); }

    bool has_reading(std::string_view word, PennTag tag) const {
        const auto& r = readings(word);
        return std::find(r.begin(), r.end(), tag) != r.end();
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, std::vector<PennTag>> entries_;
};

} // namespace idpos
