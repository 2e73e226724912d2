#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idpos/corpus.hpp"

using namespace idpos;

namespace {

const std::string kCorpus50 = std::string(IDPOS_SOURCE_DIR) + "/tests/data/corpus50.tsv";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<IdentifierRecord> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in);
}

std::string header() { return std::string(kCorpusHeader) + "\n"; }

IdentifierRecord make(std::string id, IdentifierContext ctx, std::string system = "sys") {
    IdentifierRecord r;
    r.id = std::move(id);
    r.system = std::move(system);
    r.context = ctx;
    r.raw_name = "getItem";
    r.words = {"get", "Item"};
    r.gold = {Tag::V, Tag::N};
    return r;
}

std::vector<IdentifierRecord> make_many(std::size_t n, std::size_t systems = 1) {
    std::vector<IdentifierRecord> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(make("id" + std::to_string(i), kAllContexts[i % kContextCount],
                           "s" + std::to_string(i % systems)));
    return out;
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const DataError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(CorpusFormat, GroupsRowsIntoRecords) {
    auto recs = parse(header() +
                      "a\tsys\tFUNCTION\tint\tgetX\t1\tget\tV\tV\tV\tV\n"
                      "a\tsys\tFUNCTION\tint\tgetX\t2\tX\tN\tN\tNM\tN\n"
                      "b\tsys\tCLASS\t\tFoo\t1\tFoo\tMISSING\tN\tVBD\tMISSING\n");
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].words, (std::vector<std::string>{"get", "X"}));
    EXPECT_EQ(recs[0].type_hint, "int");
    EXPECT_TRUE(recs[0].has_gold());
    EXPECT_EQ(recs[0].gold_tags(), (std::vector<Tag>{Tag::V, Tag::N}));
    EXPECT_EQ(recs[1].context, IdentifierContext::CLASS);
    EXPECT_EQ(recs[1].constituent[0].swum, Label::MISSING);
    EXPECT_EQ(recs[1].constituent[0].stanford, Label::VBD);
    EXPECT_FALSE(recs[1].has_gold());
}

TEST(CorpusFormat, UnknownTagReportsTagAndLine) {
    auto msg = error_of(header() + "a\tsys\tFUNCTION\t\tgetX\t1\tget\tV\tV\tV\tV\n"
                                   "a\tsys\tFUNCTION\t\tgetX\t2\tX\tN\tXX\tN\tN\n");
    EXPECT_NE(msg.find("unknown tag XX"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(error_of(header() + "a\tsys\tFUNCTION\t\tx\t1\tx\tN\tN\tN\tVBD\n").find("unknown tag VBD"),
              std::string::npos);
}

TEST(CorpusFormat, MalformedInputIsRejected) {
    EXPECT_NE(error_of(header() + "a\tsys\tFUNCTION\t\tx\t1\tx\tN\tN\tN\n").find("malformed"), std::string::npos);
    EXPECT_NE(error_of(header() + "a\tsys\tFUNCTION\t\tx\tone\tx\tN\tN\tN\tN\n").find("bad position"),
              std::string::npos);
    EXPECT_NE(error_of(header() + "a\tsys\tFUNCTION\t\tx\t2\tx\tN\tN\tN\tN\n").find("out of sequence"),
              std::string::npos);
    EXPECT_NE(error_of(header() + "a\tsys\tMETHOD\t\tx\t1\tx\tN\tN\tN\tN\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of(header() + "a\tsys\tFUNCTION\t\tx\t1\tx\tN\tN\tN\tN\n"
                                  "a\tsys\tCLASS\t\tx\t2\ty\tN\tN\tN\tN\n")
                  .find("inconsistent"),
              std::string::npos);
    EXPECT_FALSE(error_of("id\tsystem\n").empty());
    EXPECT_FALSE(error_of("").empty());
}

TEST(CorpusFormat, HeaderOnlyIsEmptyCorpus) {
    EXPECT_TRUE(parse(header()).empty());
}

TEST(CorpusFormat, FixtureRoundTripsByteForByte) {
    auto text = read_file(kCorpus50);
    ASSERT_FALSE(text.empty());
    auto recs = parse(text);
    EXPECT_EQ(recs.size(), 50u);
    std::ostringstream out;
    write_corpus(out, recs);
    EXPECT_EQ(out.str(), text);
    EXPECT_EQ(parse(out.str()), recs);
}

TEST(CorpusFormat, WriterRejectsTabsInFields) {
    auto r = make("a", IdentifierContext::FUNCTION);
    r.type_hint = "in\tt";
    std::ostringstream out;
    EXPECT_THROW(write_corpus(out, std::vector<IdentifierRecord>{r}), DataError);
}

TEST(CorpusTransforms, AugmentUsesTrainingCountsOnly) {
    std::vector<IdentifierRecord> train, test;
    for (int i = 0; i < 30; ++i) train.push_back(make("t" + std::to_string(i), IdentifierContext::FUNCTION));
    auto rare_one = make("r", IdentifierContext::FUNCTION);
    rare_one.gold = {Tag::P, Tag::N};
    train.push_back(rare_one);
    auto t = make("x", IdentifierContext::FUNCTION);
    t.gold = {Tag::P, Tag::DT};
    test.push_back(t);
    auto rare = augment(train, test, 25);
    EXPECT_NE(std::find(rare.begin(), rare.end(), Tag::P), rare.end());
    EXPECT_EQ(train.back().gold[0], Tag::OTHER);
    EXPECT_EQ(test[0].gold[0], Tag::OTHER);
    EXPECT_EQ(test[0].gold[1], Tag::DT);  // unseen in train, so not counted as rare
    EXPECT_EQ(train[0].gold[0], Tag::V);
}

TEST(Folds, SizesFollowFromCount) {
    EXPECT_EQ(assign_folds(make_many(10), 5, 1).fold_sizes(), (std::vector<std::size_t>(5, 2)));
    EXPECT_EQ(assign_folds(make_many(1335), 5, 1).fold_sizes(), (std::vector<std::size_t>(5, 267)));
    EXPECT_THROW(assign_folds(make_many(5), 7, 1), std::invalid_argument);
    EXPECT_THROW(assign_folds(make_many(5), 1, 1), std::invalid_argument);
    auto dup = make_many(6);
    dup[3].id = dup[0].id;
    EXPECT_THROW(assign_folds(dup, 2, 1), DataError);
}

TEST(Folds, PartitionIsBalancedDeterministicAndDisjoint) {
    for (std::size_t n : {7u, 23u, 101u, 348u}) {
        auto recs = make_many(n);
        for (std::size_t i = 0; i < n; i += 3) recs[i].context = IdentifierContext::PARAMETER;
        for (std::size_t k : {2u, 3u, 5u}) {
            auto folds = assign_folds(recs, k, 42);
            ASSERT_EQ(folds.fold_of.size(), n);
            ASSERT_EQ(folds.fold_by_id.size(), n);
            auto sizes = folds.fold_sizes();
            auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
            EXPECT_LE(*hi - *lo, 1u);
            for (auto ctx : kAllContexts) {
                std::vector<std::size_t> per(k, 0);
                for (std::size_t i = 0; i < n; ++i)
                    if (recs[i].context == ctx) ++per[folds.fold_of[i]];
                auto [a, b] = std::minmax_element(per.begin(), per.end());
                EXPECT_LE(*b - *a, 1u);
            }
            EXPECT_EQ(assign_folds(recs, k, 42).fold_of, folds.fold_of);
        }
    }
    auto recs = make_many(200);
    EXPECT_NE(assign_folds(recs, 5, 1).fold_of, assign_folds(recs, 5, 2).fold_of);
}

TEST(Split, SizesAndErrors) {
    auto s = train_test_split(make_many(100), 0.7, 3);
    EXPECT_EQ(s.train.size(), 70u);
    EXPECT_EQ(s.test.size(), 30u);
    auto two = train_test_split(make_many(2), 0.5, 3);
    EXPECT_EQ(two.train.size(), 1u);
    EXPECT_EQ(two.test.size(), 1u);
    EXPECT_THROW(train_test_split(make_many(10), 1.0, 3), std::invalid_argument);
    EXPECT_THROW(train_test_split(make_many(10), 0.0, 3), std::invalid_argument);
    EXPECT_THROW(train_test_split(make_many(1), 0.5, 3), std::invalid_argument);
}

TEST(Split, IdentifierAtomicStratifiedAndDeterministic) {
    auto recs = make_many(137);
    auto s = train_test_split(recs, 0.7, 11);
    std::set<std::string> train_ids, test_ids;
    for (const auto& r : s.train) train_ids.insert(r.id);
    for (const auto& r : s.test) test_ids.insert(r.id);
    EXPECT_EQ(train_ids.size() + test_ids.size(), recs.size());
    for (const auto& id : train_ids) EXPECT_FALSE(test_ids.contains(id));
    for (auto ctx : kAllContexts) {
        std::size_t total = 0, in_train = 0;
        for (const auto& r : recs) total += r.context == ctx;
        for (const auto& r : s.train) in_train += r.context == ctx;
        EXPECT_LE(std::abs(static_cast<double>(in_train) - 0.7 * static_cast<double>(total)), 1.0);
    }
    auto again = train_test_split(recs, 0.7, 11);
    EXPECT_EQ(again.train, s.train);
    EXPECT_EQ(again.test, s.test);
}

TEST(Sampling, RoundRobinAcrossSystems) {
    auto recs = make_many(300, 3);
    auto sample = sample_round_robin(recs, 9, 4);
    ASSERT_EQ(sample.size(), 45u);
    for (auto ctx : kAllContexts) {
        std::map<std::string, int> per_system;
        for (const auto& r : sample)
            if (r.context == ctx) ++per_system[r.system];
        ASSERT_EQ(per_system.size(), 3u);
        for (auto& [_, c] : per_system) EXPECT_EQ(c, 3);
    }
    std::set<std::string> ids;
    for (const auto& r : sample) ids.insert(r.id);
    EXPECT_EQ(ids.size(), sample.size());
    EXPECT_EQ(sample_round_robin(recs, 9, 4), sample);
    EXPECT_EQ(sample_round_robin(recs, 1000, 4).size(), recs.size());
}
