// idpos: extract, annotate, train, tag and evaluate identifier part-of-speech models.
//
// Exit status: 0 success, 2 usage or configuration error, 3 data or model error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idpos/idpos.hpp"

using namespace idpos;

namespace {

struct Options {
    std::string config = "RFCP";
    std::string corpus;
    std::string model;
    std::string features;
    std::string input = "-";
    std::string predictions;
    std::string root;
    std::string out;
    std::string format = "tsv";
    std::string metric = "accuracy";
    std::string mode = "drop-column";
    std::string criterion;
    std::string group_by = "gold";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_depth;
    std::optional<std::size_t> n_estimators;
    std::size_t k = 5;
    std::size_t threshold = 25;
    std::size_t top = 5;
    std::size_t per_context = 100;
    std::size_t repeats = 5;
    unsigned threads = 0;
    bool no_standins = false;
    std::vector<std::size_t> grid_depths;
    std::vector<std::size_t> grid_estimators;
    std::vector<std::string> grid_criteria;
    std::vector<std::string> grid_bootstrap;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("IDPOS_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (env[used] == '\0') return v;
        } catch (const std::exception&) {
        }
        throw ConfigError(std::string("IDPOS_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

struct Setup {
    ConfigurationCode code;
    Hyperparameters hp;
    FeatureSubset features;
    std::uint64_t seed = 0;
    RunConfiguration run;
};

Setup resolve(const Options& o, const std::string& command) {
    Setup s;
    s.code = parse_configuration_code(o.config);
    s.code.dataset.augment_threshold = o.threshold;
    if (o.threshold < 1) throw ConfigError("--threshold must be at least 1");
    s.seed = resolve_seed(o);
    s.hp = Hyperparameters::defaults(s.code.algorithm);
    s.hp.seed = s.seed;
    if (!o.criterion.empty()) s.hp.criterion = parse_criterion(o.criterion);
    if (o.max_depth) s.hp.max_depth = *o.max_depth;
    if (o.n_estimators) {
        if (s.code.algorithm != Algorithm::RANDOM_FOREST) throw ConfigError("--n-estimators needs a forest config");
        if (*o.n_estimators == 0) throw ConfigError("--n-estimators must be positive");
        s.hp.n_estimators = *o.n_estimators;
    }
    s.features = o.features.empty() ? FeatureSubset::best() : FeatureSubset::parse(o.features);
    s.run.set("command", command);
    s.run.describe(s.hp, s.code.dataset, s.features);
    if (!o.corpus.empty()) s.run.set("corpus", o.corpus);
    return s;
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw DataError("cannot write " + o.out);
    f << text;
    if (!f) throw DataError("error writing " + o.out);
}

std::vector<IdentifierRecord> require_corpus(const Options& o) {
    if (o.corpus.empty()) throw ConfigError("--corpus is required");
    return load_corpus(o.corpus);
}

std::string corpus_text(std::span<const IdentifierRecord> records) {
    std::ostringstream out;
    write_corpus(out, records);
    return out.str();
}

ReportFormat format_of(const Options& o) { return parse_report_format(o.format); }

// ---------------------------------------------------------------------------

int cmd_extract(const Options& o) {
    if (o.root.empty()) throw ConfigError("a source directory is required");
    auto records = extract_identifiers(o.root, std::cerr);
    std::cerr << "extracted " << records.size() << " identifiers\n";
    write_output(o, corpus_text(records));
    return 0;
}

int cmd_annotate(const Options& o) {
    auto records = require_corpus(o);
    for (auto& r : records) annotate_missing(r, Conjugation::CONJUGATED);
    write_output(o, corpus_text(records));
    return 0;
}

int cmd_sample(const Options& o) {
    auto records = require_corpus(o);
    auto sample = sample_round_robin(records, o.per_context, resolve_seed(o));
    write_output(o, corpus_text(sample));
    return 0;
}

int cmd_train(const Options& o) {
    auto s = resolve(o, "train");
    if (o.model.empty()) throw ConfigError("--model (output path) is required");
    auto records = require_corpus(o);
    auto model = train_model(records, s.hp, s.code.dataset, s.features, o.threads);
    save_model(o.model, model);

    std::size_t words = 0, nodes = 0, depth = 0;
    for (const auto& r : records) words += r.size();
    for (const auto& t : model.forest.trees()) {
        nodes += t.nodes().size();
        depth = std::max(depth, t.depth());
    }
    std::string classes, rare;
    for (Tag t : model.classes) classes += (classes.empty() ? "" : ",") + std::string(to_string(t));
    for (Tag t : model.rare_tags) rare += (rare.empty() ? "" : ",") + std::string(to_string(t));

    s.run.set("model", o.model);
    std::vector<std::pair<std::string, std::string>> summary = {
        {"identifiers", std::to_string(records.size())},
        {"words", std::to_string(words)},
        {"classes", classes},
        {"rare_tags", rare},
        {"trees", std::to_string(model.forest.trees().size())},
        {"nodes", std::to_string(nodes)},
        {"max_tree_depth", std::to_string(depth)},
    };
    if (format_of(o) == ReportFormat::Json) {
        nlohmann::json j;
        j["configuration"] = detail::json_config(s.run);
        for (const auto& [k, v] : summary) j["training"][k] = v;
        write_output(o, detail::json_text(j));
    } else {
        std::ostringstream out;
        detail::tsv_header(out, s.run);
        out << "Field\tValue\n";
        for (const auto& [k, v] : summary) out << k << '\t' << v << '\n';
        write_output(o, out.str());
    }
    return 0;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

// Either a corpus file or lines of "Name,CONTEXT[,type]".
std::vector<IdentifierRecord> parse_tag_input(const std::string& text) {
    if (text.rfind(std::string(kCorpusHeader), 0) == 0) {
        std::istringstream in(text);
        return parse_corpus(in);
    }
    std::vector<IdentifierRecord> out;
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto c1 = line.find(',');
        if (c1 == std::string::npos)
            throw DataError("expected Name,CONTEXT[,type] at line " + std::to_string(lineno));
        auto c2 = line.find(',', c1 + 1);
        IdentifierRecord r;
        r.id = "input-" + std::to_string(lineno);
        r.raw_name = line.substr(0, c1);
        try {
            r.context = parse_context(line.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
        } catch (const DataError& e) {
            throw DataError(std::string(e.what()) + " at line " + std::to_string(lineno));
        }
        if (c2 != std::string::npos) r.type_hint = line.substr(c2 + 1);
        try {
            r.words = split(r.raw_name).words;
        } catch (const std::invalid_argument& e) {
            throw DataError(std::string(e.what()) + " at line " + std::to_string(lineno));
        }
        out.push_back(std::move(r));
    }
    return out;
}

TaggerModel require_model(const Options& o) {
    if (o.model.empty()) throw ConfigError("--model is required");
    auto model = load_model(o.model);
    if (!o.features.empty()) {
        auto wanted = FeatureSubset::parse(o.features);
        if (!(wanted == model.features))
            throw ModelError("model was trained on features " + model.features.str() + ", not " + wanted.str());
    }
    return model;
}

int cmd_tag(const Options& o) {
    auto model = require_model(o);
    auto records = parse_tag_input(read_input(o.input));
    std::ostringstream out;
    for (const auto& r : records) {
        auto p = predict(model, r, !o.no_standins);
        out << r.raw_name << '\t' << to_string(r.context) << '\t' << pattern_of(p.tags).str() << '\n';
    }
    write_output(o, out.str());
    return 0;
}

int cmd_crossval(const Options& o) {
    auto s = resolve(o, "crossval");
    s.run.set("k", std::to_string(o.k));
    auto records = require_corpus(o);
    auto cv = kfold_evaluate(records, o.k, s.hp, s.code.dataset, s.features, s.seed, o.threads);
    write_output(o, kfold_report(cv, s.run, format_of(o)));
    return 0;
}

int cmd_gridsearch(const Options& o) {
    auto s = resolve(o, "gridsearch");
    auto records = require_corpus(o);
    HyperparameterGrid grid;
    grid.algorithms = {s.code.algorithm};
    grid.criteria = {s.hp.criterion};
    grid.max_depths = {s.hp.max_depth};
    grid.n_estimators = {s.hp.n_estimators};
    grid.bootstrap = {s.hp.bootstrap};
    if (!o.grid_criteria.empty()) {
        grid.criteria.clear();
        for (const auto& c : o.grid_criteria) grid.criteria.push_back(parse_criterion(c));
    }
    if (!o.grid_depths.empty()) grid.max_depths = o.grid_depths;
    if (!o.grid_estimators.empty()) grid.n_estimators = o.grid_estimators;
    if (!o.grid_bootstrap.empty()) {
        grid.bootstrap.clear();
        for (const auto& b : o.grid_bootstrap) {
            if (b != "true" && b != "false") throw ConfigError("--bootstrap values are true or false");
            grid.bootstrap.push_back(b == "true");
        }
    }
    s.run.set("k", std::to_string(o.k));
    auto result = grid_search(grid, records, o.k, o.metric, s.seed, s.code.dataset, s.features, o.threads);
    write_output(o, grid_report(result, s.run, format_of(o)));
    return 0;
}

int cmd_importance(const Options& o) {
    auto s = resolve(o, "importance");
    s.run.set("k", std::to_string(o.k));
    s.run.set("mode", o.mode);
    auto records = require_corpus(o);
    if (o.mode == "drop-column") {
        auto universe = o.features.empty() ? FeatureSubset::all() : s.features;
        s.run.set("features", universe.str());
        const std::size_t total = (std::size_t{1} << universe.size()) - 1;
        auto result = drop_column_importance(
            records, universe, s.hp, s.code.dataset, o.k, s.seed,
            [&](const DropColumnRow& row, std::size_t done) {
                std::cerr << "subset " << done << "/" << total << " " << row.subset.str() << " f1=" << fixed(row.f1)
                          << '\n';
            },
            o.threads);
        write_output(o, drop_column_report(result, s.run, format_of(o)));
        return 0;
    }
    if (o.mode == "permutation") {
        if (o.repeats == 0) throw ConfigError("--repeats must be positive");
        s.run.set("repeats", std::to_string(o.repeats));
        auto table =
            permutation_table(records, o.k, s.hp, s.code.dataset, s.features, o.repeats, s.seed, o.threads);
        write_output(o, permutation_report(table, s.run, format_of(o)));
        return 0;
    }
    throw ConfigError("unknown importance mode '" + o.mode + "' (expected drop-column or permutation)");
}

RunConfiguration model_run(const TaggerModel& m, const std::string& command, const Options& o) {
    RunConfiguration run;
    run.set("command", command);
    run.describe(m.hp, m.dataset, m.features);
    run.set("corpus", o.corpus);
    run.set("model", o.model);
    run.set("standins", o.no_standins ? "false" : "true");
    return run;
}

int cmd_evaluate(const Options& o) {
    auto model = require_model(o);
    auto records = require_corpus(o);
    auto report = evaluate_model(model, records, !o.no_standins);
    write_output(o, evaluation_report(report, model_run(model, "evaluate", o), format_of(o)));
    return 0;
}

// Predictions come from --model, or from --predictions: a corpus whose gold
// column holds the predicted tags of the same identifiers.
int cmd_analyze(const Options& o) {
    if (o.top < 1) throw ConfigError("--top must be at least 1");
    auto records = require_corpus(o);
    std::vector<ScoredIdentifier> scored;
    RunConfiguration run;
    if (!o.predictions.empty()) {
        if (!o.model.empty()) throw ConfigError("--model and --predictions are exclusive");
        auto predicted = load_corpus(o.predictions);
        std::map<std::string, const IdentifierRecord*> by_id;
        for (const auto& p : predicted) by_id[p.id] = &p;
        for (const auto& r : records) {
            if (!r.has_gold()) throw DataError("identifier " + r.id + " has no gold tags");
            auto it = by_id.find(r.id);
            if (it == by_id.end()) throw DataError("no prediction for identifier " + r.id);
            if (!it->second->has_gold() || it->second->size() != r.size())
                throw DataError("prediction for identifier " + r.id + " does not cover every word");
            scored.push_back({r.context, r.gold_tags(), it->second->gold_tags()});
        }
        run.set("command", "analyze");
        run.set("corpus", o.corpus);
        run.set("predictions", o.predictions);
    } else {
        auto model = require_model(o);
        scored = score_records(model, records, !o.no_standins);
        run = model_run(model, "analyze", o);
    }
    run.set("top", std::to_string(o.top));
    auto report = evaluate(scored);
    if (o.group_by != "gold" && o.group_by != "predicted")
        throw ConfigError("--group-by must be gold or predicted");
    run.set("group_by", o.group_by);
    auto ranking = misannotation_ranking(scored, o.top,
                                         o.group_by == "gold" ? PatternGrouping::Gold : PatternGrouping::Predicted);
    write_output(o, analysis_report(report, ranking, run, format_of(o)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Part-of-speech tagging of source-code identifiers"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Output file (default: stdout)");
    };
    auto seeded = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "Random seed (default: $IDPOS_SEED, else 0)");
    };
    auto learning = [&](CLI::App* c) {
        c->add_option("--config", o.config, "Configuration code: DT/RF, C/N, A/P (e.g. RFCP)");
        c->add_option("--corpus", o.corpus, "Gold-annotated corpus")->required();
        c->add_option("--features", o.features, "Comma-separated features");
        c->add_option("--threshold", o.threshold, "Rare-tag threshold of the augmented variant");
        c->add_option("--criterion", o.criterion, "gini or entropy");
        c->add_option("--max-depth", o.max_depth, "Maximum tree depth");
        c->add_option("--n-estimators", o.n_estimators, "Trees in the forest");
        c->add_option("--threads", o.threads, "Worker threads (0: all cores)");
        c->add_option("--format", o.format, "Report format: tsv or json");
        seeded(c);
        common(c);
    };

    auto* extract = app.add_subcommand("extract", "Collect identifiers from a source tree into an untagged corpus");
    extract->add_option("root", o.root, "Source directory")->required();
    common(extract);

    auto* annotate = app.add_subcommand("annotate", "Fill absent constituent-tagger columns of a corpus");
    annotate->add_option("--corpus", o.corpus, "Corpus file")->required();
    common(annotate);

    auto* sample = app.add_subcommand("sample", "Draw identifiers round-robin across systems");
    sample->add_option("--corpus", o.corpus, "Corpus file")->required();
    sample->add_option("--per-context", o.per_context, "Identifiers per context");
    seeded(sample);
    common(sample);

    auto* train = app.add_subcommand("train", "Train a model and write it with a training summary");
    learning(train);
    train->add_option("--model", o.model, "Model output path")->required();

    auto* tag = app.add_subcommand("tag", "Tag identifiers with a trained model");
    tag->add_option("--model", o.model, "Model file")->required();
    tag->add_option("--input", o.input, "Corpus or Name,CONTEXT[,type] lines (default: stdin)");
    tag->add_option("--features", o.features, "Expected model features");
    tag->add_flag("--no-standins", o.no_standins, "Do not fill absent tagger columns");
    common(tag);

    auto* crossval = app.add_subcommand("crossval", "k-fold cross-validation");
    learning(crossval);
    crossval->add_option("--k", o.k, "Folds");

    auto* gridsearch = app.add_subcommand("gridsearch", "Exhaustive hyperparameter grid search");
    learning(gridsearch);
    gridsearch->add_option("--k", o.k, "Folds");
    gridsearch->add_option("--metric", o.metric, "accuracy, balanced_accuracy, f1, precision or recall");
    gridsearch->add_option("--depths", o.grid_depths, "Candidate max depths");
    gridsearch->add_option("--estimators", o.grid_estimators, "Candidate tree counts");
    gridsearch->add_option("--criteria", o.grid_criteria, "Candidate criteria");
    gridsearch->add_option("--bootstrap", o.grid_bootstrap, "Candidate bootstrap settings (true/false)");

    auto* importance = app.add_subcommand("importance", "Drop-column or permutation feature importance");
    learning(importance);
    importance->add_option("--k", o.k, "Folds");
    importance->add_option("--mode", o.mode, "drop-column or permutation");
    importance->add_option("--repeats", o.repeats, "Shuffles per feature (permutation mode)");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a model on a gold-annotated corpus");
    evaluate_cmd->add_option("--model", o.model, "Model file")->required();
    evaluate_cmd->add_option("--corpus", o.corpus, "Gold-annotated corpus")->required();
    evaluate_cmd->add_option("--features", o.features, "Expected model features");
    evaluate_cmd->add_flag("--no-standins", o.no_standins, "Do not fill absent tagger columns");
    evaluate_cmd->add_option("--format", o.format, "Report format: tsv or json");
    common(evaluate_cmd);

    auto* analyze = app.add_subcommand("analyze", "Evaluation plus the most mis-annotated grammar patterns");
    analyze->add_option("--corpus", o.corpus, "Gold-annotated corpus")->required();
    analyze->add_option("--model", o.model, "Model file");
    analyze->add_option("--predictions", o.predictions, "Corpus whose gold column holds predictions");
    analyze->add_option("--features", o.features, "Expected model features");
    analyze->add_option("--top", o.top, "Rows of the ranking");
    analyze->add_option("--group-by", o.group_by, "Group the ranking by gold or predicted pattern");
    analyze->add_flag("--no-standins", o.no_standins, "Do not fill absent tagger columns");
    analyze->add_option("--format", o.format, "Report format: tsv or json");
    common(analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*extract) return cmd_extract(o);
        if (*annotate) return cmd_annotate(o);
        if (*sample) return cmd_sample(o);
        if (*train) return cmd_train(o);
        if (*tag) return cmd_tag(o);
        if (*crossval) return cmd_crossval(o);
        if (*gridsearch) return cmd_gridsearch(o);
        if (*importance) return cmd_importance(o);
        if (*evaluate_cmd) return cmd_evaluate(o);
        if (*analyze) return cmd_analyze(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
