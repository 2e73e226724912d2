#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "idpos/rng.hpp"
#include "idpos/taggers.hpp"

using namespace idpos;
using Words = std::vector<std::string>;
using Tags = std::vector<Tag>;

namespace {

bool is_verb_family(PennTag p) {
    return p == PennTag::VB || p == PennTag::VBD || p == PennTag::VBG || p == PennTag::VBN ||
           p == PennTag::VBP || p == PennTag::VBZ || p == PennTag::MD;
}

} // namespace

TEST(Lexicon, BuiltinReadings) {
    const auto& lex = Lexicon::builtin();
    EXPECT_GT(lex.size(), 2000u);
    ASSERT_FALSE(lex.readings("run").empty());
    EXPECT_TRUE(is_verb_family(lex.readings("run").front()));
    ASSERT_FALSE(lex.readings("dogs").empty());
    EXPECT_EQ(lex.readings("dogs").front(), PennTag::NNS);
    EXPECT_EQ(lex.readings("DOGS"), lex.readings("dogs"));
    EXPECT_TRUE(lex.readings("qwzxv").empty());
}

TEST(Lexicon, ParseReportsBadLines) {
    std::istringstream ok("# comment\nfoo\tNN\nfoo\tVB\n\nbar\tJJ\n");
    auto lex = Lexicon::parse(ok);
    EXPECT_EQ(lex.readings("foo"), (std::vector<PennTag>{PennTag::NN, PennTag::VB}));
    std::istringstream bad_tag("foo\tNN\nbar\tXYZ\n");
    try {
        Lexicon::parse(bad_tag);
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    std::istringstream no_tab("foo NN\n");
    EXPECT_THROW(Lexicon::parse(no_tab), DataError);
}

TEST(TagLexicon, Examples) {
    EXPECT_EQ(tag_lexicon(Words{"run"}, IdentifierContext::FUNCTION, Conjugation::NORMALIZED),
              std::vector<Label>{Label::V});
    EXPECT_EQ(tag_lexicon(Words{"dogs"}, IdentifierContext::DECLARATION, Conjugation::NORMALIZED),
              std::vector<Label>{Label::NPL});
    EXPECT_THROW(tag_lexicon(Words{}, IdentifierContext::FUNCTION, Conjugation::NORMALIZED), std::invalid_argument);
}

TEST(TagLexicon, SuffixDefaultsForUnknownWords) {
    auto tags = tag_lexicon(Words{"zorbed", "zorbing", "zorbly", "zorbs", "zorb"}, IdentifierContext::DECLARATION,
                            Conjugation::CONJUGATED);
    EXPECT_EQ(tags, (std::vector<Label>{Label::VBD, Label::VBG, Label::VM, Label::NPL, Label::N}));
    auto normalized = tag_lexicon(Words{"zorbed"}, IdentifierContext::DECLARATION, Conjugation::NORMALIZED);
    EXPECT_EQ(normalized, std::vector<Label>{Label::V});
}

TEST(TagLexicon, PronounPrefixMakesFunctionNamesReadAsActions) {
    // "list" reads as a noun on its own; behind the synthetic pronoun it is a verb.
    EXPECT_EQ(tag_lexicon(Words{"list"}, IdentifierContext::DECLARATION, Conjugation::NORMALIZED),
              std::vector<Label>{Label::N});
    EXPECT_EQ(tag_lexicon(Words{"list"}, IdentifierContext::FUNCTION, Conjugation::NORMALIZED),
              std::vector<Label>{Label::V});
}

TEST(TagSwum, Examples) {
    EXPECT_EQ(tag_swum_like(Words{"Get", "User", "Token"}, IdentifierContext::FUNCTION, "Token"),
              (Tags{Tag::V, Tag::NM, Tag::N}));
    EXPECT_EQ(tag_swum_like(Words{"tile", "list", "head"}, IdentifierContext::DECLARATION, "GList*"),
              (Tags{Tag::NM, Tag::NM, Tag::N}));
    EXPECT_EQ(tag_swum_like(Words{"g", "list", "last"}, IdentifierContext::FUNCTION, "GList*"),
              (Tags{Tag::PRE, Tag::NM, Tag::N}));
}

TEST(TagSwum, BooleanTypeRaisesVerbReading) {
    EXPECT_EQ(tag_swum_like(Words{"is", "empty"}, IdentifierContext::ATTRIBUTE, "bool"), (Tags{Tag::V, Tag::N}));
    EXPECT_EQ(tag_swum_like(Words{"is", "empty"}, IdentifierContext::ATTRIBUTE, "char*").front(), Tag::NM);
}

TEST(TagPosse, Examples) {
    EXPECT_EQ(tag_posse_like(Words{"the", "list"}, IdentifierContext::DECLARATION, "GList*"), (Tags{Tag::P, Tag::N}));
    EXPECT_EQ(tag_posse_like(Words{"Get", "User", "Token"}, IdentifierContext::FUNCTION, "Token"),
              (Tags{Tag::V, Tag::NM, Tag::N}));
    EXPECT_EQ(tag_posse_like(Words{"items"}, IdentifierContext::PARAMETER, "vector"), (Tags{Tag::N}));
}

namespace {

Words random_words(Rng& rng) {
    static const Words pool = {"get", "set", "user", "token", "list", "head", "the", "a", "to", "from", "and",
                               "or", "quickly", "my", "its", "2", "42", "g", "m", "gl", "items", "dogs",
                               "running", "parsed", "is", "has", "zorb", "XML", "Reader", "last", "new", "of"};
    Words out(1 + rng.below(6));
    for (auto& w : out) w = pool[rng.below(pool.size())];
    return out;
}

} // namespace

TEST(Taggers, SupportConstraintsLengthAndDeterminism) {
    Rng rng(99);
    static const std::vector<std::string> types = {"", "bool", "int", "GList*", "void", "std::string"};
    for (int n = 0; n < 3000; ++n) {
        auto words = random_words(rng);
        auto ctx = kAllContexts[rng.below(kContextCount)];
        const auto& type = types[rng.below(types.size())];
        auto conj = rng.bernoulli(0.5) ? Conjugation::CONJUGATED : Conjugation::NORMALIZED;

        auto swum = tag_swum_like(words, ctx, type);
        auto posse = tag_posse_like(words, ctx, type);
        auto stanford = tag_lexicon(words, ctx, conj);
        ASSERT_EQ(swum.size(), words.size());
        ASSERT_EQ(posse.size(), words.size());
        ASSERT_EQ(stanford.size(), words.size());
        for (Tag t : swum) ASSERT_TRUE(t != Tag::NPL && t != Tag::VM && t != Tag::CJ && t != Tag::OTHER);
        for (Tag t : posse) ASSERT_TRUE(t != Tag::NPL && t != Tag::CJ && t != Tag::PRE && t != Tag::OTHER);
        for (Label l : stanford) {
            ASSERT_TRUE(l != Label::PRE && l != Label::OTHER && l != Label::MISSING);
            if (conj == Conjugation::NORMALIZED) {
                ASSERT_FALSE(is_conjugation(l));
            }
        }
        ASSERT_EQ(tag_swum_like(words, ctx, type), swum);
        ASSERT_EQ(tag_posse_like(words, ctx, type), posse);
        ASSERT_EQ(tag_lexicon(words, ctx, conj), stanford);
    }
}

TEST(Taggers, AnnotateMissingFillsOnlyAbsentColumns) {
    IdentifierRecord r;
    r.id = "f1";
    r.context = IdentifierContext::FUNCTION;
    r.type_hint = "Token";
    r.words = {"Get", "User", "Token"};
    annotate_missing(r, Conjugation::NORMALIZED);
    ASSERT_EQ(r.constituent.size(), 3u);
    EXPECT_EQ(r.constituent[0].swum, Label::V);
    EXPECT_EQ(r.constituent[2].posse, Label::N);
    EXPECT_NE(r.constituent[1].stanford, Label::MISSING);

    // A column with any precomputed value is kept as is, MISSING entries included.
    IdentifierRecord p = r;
    for (auto& c : p.constituent) c.stanford = Label::MISSING;
    p.constituent[0].stanford = Label::CJ;
    p.constituent[0].swum = Label::D;
    annotate_missing(p, Conjugation::NORMALIZED);
    EXPECT_EQ(p.constituent[0].stanford, Label::CJ);
    EXPECT_EQ(p.constituent[1].stanford, Label::MISSING);
    EXPECT_EQ(p.constituent[0].swum, Label::D);
}
