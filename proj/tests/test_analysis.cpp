#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "idpos/analysis.hpp"
#include "idpos/reports.hpp"
#include "json.hpp"

using namespace idpos;
using Tags = std::vector<Tag>;

namespace {

std::vector<ScoredIdentifier> repeat(IdentifierContext c, const Tags& gold, const Tags& wrong, std::size_t total,
                                     std::size_t mispredicted) {
    std::vector<ScoredIdentifier> out;
    for (std::size_t i = 0; i < total; ++i) out.push_back({c, gold, i < mispredicted ? wrong : gold});
    return out;
}

void append(std::vector<ScoredIdentifier>& to, const std::vector<ScoredIdentifier>& from) {
    to.insert(to.end(), from.begin(), from.end());
}

const Tags kNm4N{Tag::NM, Tag::NM, Tag::NM, Tag::NM, Tag::N};
const Tags kNm4NWrong{Tag::NM, Tag::NM, Tag::N, Tag::NM, Tag::N};

} // namespace

TEST(Patterns, Examples) {
    EXPECT_EQ(pattern_of(Tags{Tag::V, Tag::NM, Tag::N}).str(), "V NM N");
    EXPECT_EQ(pattern_of(Tags{Tag::PRE, Tag::N, Tag::V, Tag::N}).str(), "PRE N V N");
    EXPECT_EQ(pattern_of(Tags{Tag::N}).str(), "N");
    EXPECT_THROW(pattern_of(Tags{}), std::invalid_argument);
}

TEST(Patterns, StringFormRoundTrips) {
    for (const char* s : {"V NM N", "N", "PRE N V N", "DT NM NPL OTHER"}) EXPECT_EQ(parse_pattern(s).str(), s);
    EXPECT_EQ(parse_pattern("V NM N"), pattern_of(Tags{Tag::V, Tag::NM, Tag::N}));
    EXPECT_THROW(parse_pattern(""), std::invalid_argument);
    EXPECT_THROW(parse_pattern("V QQ"), DataError);
}

TEST(Ranking, SixOfEight) {
    auto s = repeat(IdentifierContext::DECLARATION, kNm4N, kNm4NWrong, 8, 6);
    auto rows = misannotation_ranking(s, 10);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].pattern.str(), "NM NM NM NM N");
    EXPECT_EQ(rows[0].incorrect, 6u);
    EXPECT_EQ(rows[0].actual, 8u);
    EXPECT_DOUBLE_EQ(rows[0].proportion, 0.75);
}

TEST(Ranking, AllCorrectIsEmpty) {
    auto s = repeat(IdentifierContext::FUNCTION, {Tag::V, Tag::N}, {}, 5, 0);
    EXPECT_TRUE(misannotation_ranking(s, 3).empty());
    EXPECT_THROW(misannotation_ranking(s, 0), std::invalid_argument);
}

TEST(Ranking, TwoOfFour) {
    auto s = repeat(IdentifierContext::CLASS, {Tag::NM, Tag::N}, {Tag::N, Tag::N}, 4, 2);
    auto rows = misannotation_ranking(s, 5);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_DOUBLE_EQ(rows[0].proportion, 0.5);
}

TEST(Ranking, OrderingAndTopK) {
    std::vector<ScoredIdentifier> s;
    append(s, repeat(IdentifierContext::FUNCTION, {Tag::V, Tag::N}, {Tag::N, Tag::N}, 4, 2));          // 0.5, 4
    append(s, repeat(IdentifierContext::FUNCTION, {Tag::V, Tag::NM, Tag::N}, {Tag::V, Tag::N, Tag::N}, 8, 4));  // 0.5, 8
    append(s, repeat(IdentifierContext::CLASS, {Tag::N}, {Tag::V}, 2, 2));                              // 1.0
    append(s, repeat(IdentifierContext::CLASS, {Tag::NM, Tag::N}, {Tag::N, Tag::N}, 2, 1));             // 0.5, 2
    append(s, repeat(IdentifierContext::CLASS, {Tag::PRE, Tag::N}, {Tag::N, Tag::N}, 2, 1));            // 0.5, 2
    auto rows = misannotation_ranking(s, 10);
    std::vector<std::string> order;
    for (const auto& r : rows) order.push_back(r.pattern.str());
    EXPECT_EQ(order, (std::vector<std::string>{"N", "V NM N", "V N", "NM N", "PRE N"}));
    std::size_t incorrect = 0, actual = 0;
    for (const auto& r : rows) {
        EXPECT_LE(r.incorrect, r.actual);
        EXPECT_DOUBLE_EQ(r.proportion, static_cast<double>(r.incorrect) / static_cast<double>(r.actual));
        incorrect += r.incorrect;
        actual += r.actual;
    }
    EXPECT_EQ(actual, s.size());
    std::size_t wrong = 0;
    for (const auto& x : s) wrong += x.gold != x.predicted;
    EXPECT_EQ(incorrect, wrong);
    auto top2 = misannotation_ranking(s, 2);
    ASSERT_EQ(top2.size(), 2u);
    EXPECT_EQ(top2[1].pattern.str(), "V NM N");
}

TEST(Ranking, GroupingByPrediction) {
    auto s = repeat(IdentifierContext::CLASS, {Tag::NM, Tag::N}, {Tag::N, Tag::N}, 4, 3);
    auto rows = misannotation_ranking(s, 5, PatternGrouping::Predicted);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].pattern.str(), "N N");
    EXPECT_EQ(rows[0].actual, 3u);
}

TEST(Ranking, TsvRowLayout) {
    auto s = repeat(IdentifierContext::DECLARATION, kNm4N, kNm4NWrong, 8, 6);
    auto rows = misannotation_ranking(s, 10);
    std::ostringstream out;
    write_ranking_tsv(out, rows);
    EXPECT_EQ(out.str(), "Grammar Pattern\t# Incorrect\tActual\tProportion\nNM NM NM NM N\t6\t8\t0.75\n");
    RunConfiguration run;
    run.set("config", "DTCP");
    auto json = nlohmann::json::parse(ranking_report(rows, run, ReportFormat::Json));
    EXPECT_EQ(json["configuration"]["config"], "DTCP");
    EXPECT_EQ(json["ranking"][0]["incorrect"], 6);
    EXPECT_EQ(json["ranking"][0]["actual"], 8);
    EXPECT_DOUBLE_EQ(json["ranking"][0]["proportion"].get<double>(), 0.75);
    auto tsv = ranking_report(rows, run, ReportFormat::Tsv);
    EXPECT_EQ(tsv.rfind("# config=DTCP\n", 0), 0u);
}

TEST(ContextReport, SingleContextOverallEqualsCell) {
    auto s = repeat(IdentifierContext::PARAMETER, {Tag::NM, Tag::N}, {Tag::N, Tag::N}, 5, 2);
    auto r = per_context_report(s);
    const auto& cell = r.contexts[index_of(IdentifierContext::PARAMETER)];
    EXPECT_EQ(cell.words, r.overall.words);
    EXPECT_EQ(cell.words_correct, r.overall.words_correct);
    EXPECT_DOUBLE_EQ(cell.identifier_accuracy(), r.overall.identifier_accuracy());
    EXPECT_DOUBLE_EQ(r.overall.identifier_accuracy(), 0.6);
    EXPECT_DOUBLE_EQ(r.overall.word_accuracy(), 0.8);
}

TEST(ContextReport, FiveContextRowsThenOverall) {
    std::vector<ScoredIdentifier> s;
    append(s, repeat(IdentifierContext::FUNCTION, {Tag::V, Tag::N}, {Tag::N, Tag::N}, 4, 1));
    append(s, repeat(IdentifierContext::ATTRIBUTE, {Tag::N}, {Tag::V}, 2, 1));
    auto r = per_context_report(s);
    std::ostringstream out;
    write_context_tsv(out, r);
    std::vector<std::string> first;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) first.push_back(line.substr(0, line.find('\t')));
    EXPECT_EQ(first, (std::vector<std::string>{"Context", "Attribute", "Class", "Declaration", "Function",
                                                "Parameter", "Overall"}));
    EXPECT_NE(out.str().find("Function\t0.88\t0.75\t8\t4\n"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("Overall\t0.80\t0.67\t10\t6\n"), std::string::npos) << out.str();
    auto j = context_json(r);
    ASSERT_EQ(j.size(), 6u);
    EXPECT_EQ(j[5]["context"], "Overall");
}

TEST(Reports, FormatsAndConfigurationEcho) {
    EXPECT_EQ(parse_report_format("tsv"), ReportFormat::Tsv);
    EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
    EXPECT_THROW(parse_report_format("xml"), ConfigError);
    RunConfiguration run;
    run.describe(Hyperparameters::defaults(Algorithm::RANDOM_FOREST), {}, FeatureSubset::best());
    run.set("seed", "7");
    EXPECT_EQ(run.entries.front().first, "config");
    EXPECT_EQ(run.entries.front().second, "RFCP");
    std::vector<ScoredIdentifier> s = repeat(IdentifierContext::FUNCTION, {Tag::V, Tag::N}, {Tag::N, Tag::N}, 4, 1);
    auto eval = evaluate(s);
    auto tsv = evaluation_report(eval, run, ReportFormat::Tsv);
    EXPECT_NE(tsv.find("# seed=7\n"), std::string::npos);
    EXPECT_NE(tsv.find("accuracy\t0.8750\n"), std::string::npos) << tsv;
    EXPECT_NE(tsv.find("Annotation\tTotal\tPrecision\tRecall\tF1\tPredicted Total\n"), std::string::npos);
    auto j = nlohmann::json::parse(evaluation_report(eval, run, ReportFormat::Json));
    EXPECT_EQ(j["configuration"]["max_depth"], "83");
    EXPECT_DOUBLE_EQ(j["word"]["accuracy"].get<double>(), 0.875);
    EXPECT_EQ(fixed(0.125, 2), "0.12");
    EXPECT_EQ(fixed(2.0 / 3.0), "0.6667");
}
