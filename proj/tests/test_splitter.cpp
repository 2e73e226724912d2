#include <gtest/gtest.h>

#include <cctype>
#include <string>
#include <vector>

#include "idpos/rng.hpp"
#include "idpos/splitter.hpp"

using namespace idpos;
using Words = std::vector<std::string>;

TEST(Splitter, Examples) {
    EXPECT_EQ(split("GetUserToken").words, (Words{"Get", "User", "Token"}));
    EXPECT_EQ(split("tile_list_head").words, (Words{"tile", "list", "head"}));
    EXPECT_EQ(split("IPV4").words, (Words{"IPV4"}));
    EXPECT_EQ(split("x").words, (Words{"x"}));
    EXPECT_EQ(split("GetXMLReaderHandler").words, (Words{"Get", "XML", "Reader", "Handler"}));
}

TEST(Splitter, DigitsAndDelimiters) {
    EXPECT_EQ(split("user2name").words, (Words{"user", "2", "name"}));
    EXPECT_EQ(split("__m_count__").words, (Words{"m", "count"}));
    EXPECT_EQ(split("HTTPServer").words, (Words{"HTTP", "Server"}));
    EXPECT_EQ(split("utf8Decode").words, (Words{"utf", "8", "Decode"}));
    EXPECT_EQ(split("parseHTTP2Frame").words, (Words{"parse", "HTTP2", "Frame"}));
    EXPECT_EQ(split("ABCDE5").words, (Words{"ABCDE", "5"}));
    EXPECT_EQ(split("SDL_GL_SwapWindow").words, (Words{"SDL", "GL", "Swap", "Window"}));
}

TEST(Splitter, PositionsAreOneBased) {
    auto s = split("getXMLReaderHandler");
    EXPECT_EQ(s.positions(), (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(s.raw, "getXMLReaderHandler");
}

TEST(Splitter, UnsplittableInputIsAnError) {
    EXPECT_THROW(split(""), std::invalid_argument);
    EXPECT_THROW(split("___"), std::invalid_argument);
    EXPECT_THROW(split("$-$"), std::invalid_argument);
}

namespace {

std::string fold_alnum(std::string_view s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::string random_identifier(Rng& rng) {
    static const std::string lower = "abcdefghijklmnopqrstuvwxyz";
    static const std::string delims = "_$-.:";
    std::string out;
    const auto parts = 1 + rng.below(5);
    for (std::size_t p = 0; p < parts; ++p) {
        if (p > 0 && rng.bernoulli(0.3)) out.push_back(delims[rng.below(delims.size())]);
        const auto len = 1 + rng.below(7);
        const auto style = rng.below(4);
        for (std::size_t i = 0; i < len; ++i) {
            char c = lower[rng.below(lower.size())];
            if (style == 1 && i == 0) c = static_cast<char>(std::toupper(c));
            if (style == 2) c = static_cast<char>(std::toupper(c));
            if (style == 3 && rng.bernoulli(0.4)) c = static_cast<char>('0' + rng.below(10));
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

TEST(Splitter, ContentRoundTripsOnRandomIdentifiers) {
    Rng rng(20240501);
    for (int n = 0; n < 10000; ++n) {
        auto raw = random_identifier(rng);
        if (fold_alnum(raw).empty()) continue;
        auto s = split(raw);
        ASSERT_FALSE(s.words.empty()) << raw;
        std::string joined;
        for (const auto& w : s.words) {
            ASSERT_FALSE(w.empty()) << raw;
            joined += w;
        }
        ASSERT_EQ(fold_alnum(joined), fold_alnum(raw)) << raw;
        ASSERT_EQ(s.positions().size(), s.words.size());
        ASSERT_EQ(split(raw).words, s.words) << raw;
    }
}

TEST(Splitter, IdempotentOnSingleWords) {
    for (const char* w : {"Get", "user", "XML", "IPV4", "Reader", "2"}) {
        auto once = split(w);
        ASSERT_EQ(once.words.size(), 1u) << w;
        EXPECT_EQ(split(once.words[0]).words, once.words);
    }
}
