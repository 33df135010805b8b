#include "natrob/cli/commands.hpp"
#include "natrob/cli/config.hpp"
#include "natrob/cli/io.hpp"
#include "natrob/metrics/statistics.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace natrob::cli {

namespace fs = std::filesystem;

namespace {

/// Usage problems detected after parsing (missing model, unknown operator).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

void report_errors(std::ostream& err, const std::string& what, const std::vector<JsonlError>& errors) {
    for (const auto& e : errors)
        err << "warning: " << what << " line " << e.line << ": " << e.message << '\n';
}

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;)
            fn(i);
    };
    const unsigned t = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
}

// ---- train-lm --------------------------------------------------------------

struct TrainArgs {
    std::string corpus;
    std::string out;
};

std::vector<std::vector<std::string>> read_corpus(const std::string& path, std::ostream& err) {
    std::vector<std::vector<std::string>> corpus;
    if (fs::is_regular_file(path)) {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot read " + path);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream words(line);
            std::vector<std::string> seq{std::istream_iterator<std::string>(words), {}};
            if (!seq.empty())
                corpus.push_back(std::move(seq));
        }
        return corpus;
    }
    if (!fs::is_directory(path))
        throw IoError("corpus " + path + " is neither a file nor a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(path))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::size_t skipped = 0;
    for (const auto& f : files) {
        try {
            for (const auto& m : source::extract_methods(read_file(f.string()))) {
                auto tokens = source::code_token_texts(m.text);
                if (!tokens.empty())
                    corpus.push_back(std::move(tokens));
            }
        } catch (const source::ParseError& e) {
            ++skipped;
            err << "warning: skipping " << f.string() << ": " << e.what() << '\n';
        }
    }
    if (skipped)
        err << "warning: " << skipped << " corpus file(s) could not be read\n";
    return corpus;
}

int cmd_train_lm(const TrainArgs& a, const Config& cfg, Streams s) {
    const auto corpus = read_corpus(a.corpus, s.err);
    if (corpus.empty())
        throw lm::EmptyCorpus("no token sequences found in " + a.corpus);
    const auto model = lm::NgramModel::train(corpus, {cfg.lm_order, cfg.lm_min_count});
    model.save(a.out);
    s.out << "trained " << cfg.lm_order << "-gram model on " << corpus.size() << " sequences, vocabulary "
          << model.vocabulary().size() << " -> " << a.out << '\n';
    return kExitOk;
}

// ---- transform -------------------------------------------------------------

struct TransformArgs {
    std::string bugs;
    std::string out;
};

std::unique_ptr<transform::SubstitutionProvider> make_provider(const Config& cfg) {
    if (cfg.provider == "firstchar")
        return std::make_unique<transform::FirstCharProvider>();
    if (cfg.provider == "dictionary")
        return std::make_unique<transform::DictionaryProvider>(
            cfg.dictionary.empty() ? transform::DictionaryProvider::builtin(cfg.top_k)
                                   : transform::DictionaryProvider::load(cfg.dictionary, cfg.top_k));
    if (cfg.provider == "external") {
        if (cfg.provider_endpoint.empty())
            throw UsageError("transform.provider = external needs transform.provider.endpoint");
        return std::make_unique<transform::ExternalProvider>(cfg.provider_endpoint, cfg.top_k);
    }
    return nullptr;
}

transform::EngineOptions engine_options(const Config& cfg) {
    transform::EngineOptions opt;
    opt.unary2add_style =
        cfg.unary2add_style == "compound" ? transform::Unary2AddStyle::Compound : transform::Unary2AddStyle::Expanded;
    if (!cfg.operators.empty()) {
        opt.enabled.clear();
        for (const auto& name : cfg.operators) {
            const auto op = transform::operator_from_string(name);
            if (!op)
                throw UsageError("unknown operator '" + name + "'");
            opt.enabled.insert(*op);
        }
    }
    return opt;
}

int cmd_transform(const TransformArgs& a, const Config& cfg, Streams s) {
    const auto options = engine_options(cfg);
    const auto provider = make_provider(cfg);
    const std::string base_dir = fs::path(a.bugs).parent_path().string();

    std::vector<BugInput> bugs;
    auto errors = for_each_jsonl(a.bugs, [&](const json& j) { bugs.push_back(bug_from_json(j, base_dir)); });
    report_errors(s.err, a.bugs, errors);

    struct Outcome {
        std::vector<json> lines;
        std::size_t valid = 0;
        std::string error;
    };
    std::vector<Outcome> outcomes(bugs.size());
    parallel_for(bugs.size(), cfg.jobs, [&](std::size_t i) {
        const BugInput& b = bugs[i];
        Outcome& o = outcomes[i];
        try {
            const auto method = source::parse_method(b.source, b.region, {b.bug_id, b.first_line});
            std::optional<transform::FileContext> context;
            if (b.file)
                context = transform::FileContext{*b.file, method.first_line(), method.last_line()};
            for (const auto& r : transform::apply_all(method, provider.get(), options)) {
                std::optional<transform::ValidationResult> v;
                if (cfg.validate_cmd)
                    v = transform::validate_external(r, cfg.validate_cmd, context);
                o.valid += r.status == transform::Status::Valid;
                o.lines.push_back(record_to_json(r, v));
            }
        } catch (const std::exception& e) {
            o.lines.clear();
            o.error = e.what();
        }
    });

    OutputFile out(a.out, s.out);
    std::size_t records = 0, valid = 0, failed = 0;
    for (std::size_t i = 0; i < bugs.size(); ++i) {
        if (!outcomes[i].error.empty()) {
            ++failed;
            s.err << "warning: bug " << bugs[i].bug_id << ": " << outcomes[i].error << '\n';
            continue;
        }
        for (const auto& j : outcomes[i].lines)
            out.line(j);
        records += outcomes[i].lines.size();
        valid += outcomes[i].valid;
    }
    out.close();
    s.err << "transform: " << bugs.size() << " bugs, " << records << " records (" << valid << " valid), "
          << failed + errors.size() << " errors\n";
    return kExitOk;
}

// ---- score -----------------------------------------------------------------

struct ScoreArgs {
    std::string records;
    std::string out;
};

metrics::LmBackend backend_of(const Config& cfg) {
    if (cfg.lm_backend == "external") {
        if (cfg.lm_bridge.empty())
            throw UsageError("lm.backend = external needs lm.bridge (or --bridge)");
        return metrics::LmBackend::external(cfg.lm_bridge);
    }
    if (cfg.lm_model.empty())
        throw UsageError("no language model given (--model or lm.model)");
    return metrics::LmBackend::ngram(cfg.lm_model);
}

int cmd_score(const ScoreArgs& a, const Config& cfg, Streams s) {
    if (cfg.score_min.has_value() != cfg.score_max.has_value())
        throw UsageError("score.min and score.max must be given together");
    const auto backend = backend_of(cfg);

    std::vector<transform::TransformationRecord> records;
    auto errors = for_each_jsonl(a.records, [&](const json& j) {
        auto r = record_from_json(j);
        if (r.status != transform::Status::Valid)
            return;
        if (source::code_token_texts(r.original_source).empty() || source::code_token_texts(r.transformed_source).empty())
            throw metrics::EmptyTokens("record " + r.id + " has no code tokens");
        records.push_back(std::move(r));
    });
    report_errors(s.err, a.records, errors);

    const auto scorer = metrics::open_backend(backend);
    auto scores = metrics::score_all(*scorer, records, cfg.jobs);
    std::optional<metrics::Range> range;
    if (cfg.score_min)
        range = metrics::Range{*cfg.score_min, *cfg.score_max};
    const auto field = cfg.score_field == "ce" ? metrics::NormalizeField::CeTransformed : metrics::NormalizeField::Rnc;
    const auto report = metrics::normalize(scores, field, range);
    if (report.degenerate && !scores.empty())
        s.err << "warning: degenerate " << cfg.score_field << " range (min = max = " << report.range.min
              << "); every p_unnatural set to 0.5\n";

    OutputFile out(a.out, s.out);
    for (const auto& sc : scores)
        out.line(score_to_json(sc));
    out.close();
    s.err << "score: " << scores.size() << " records scored, " << errors.size() << " errors\n";
    return kExitOk;
}

// ---- evaluate-metric -------------------------------------------------------

struct EvaluateArgs {
    std::string scores;
    std::string labels;
    std::string json_out;
};

std::map<std::string, annotation::Label> read_labels(const std::string& path, std::ostream& err) {
    std::map<std::string, annotation::Label> labels;
    auto errors = for_each_jsonl(path, [&](const json& j) {
        const auto l = label_from_json(j);
        labels[l.transformation_id] = l.label;
    });
    report_errors(err, path, errors);
    return labels;
}

int cmd_evaluate(const EvaluateArgs& a, const Config& cfg, Streams s) {
    std::vector<metrics::NaturalnessScore> scores;
    auto errors = for_each_jsonl(a.scores, [&](const json& j) { scores.push_back(score_from_json(j)); });
    report_errors(s.err, a.scores, errors);
    const auto labels = read_labels(a.labels, s.err);

    std::vector<metrics::LabeledScore> rnc, ce, anc;
    std::vector<double> rnc_unnatural, rnc_natural;
    std::size_t unlabeled = 0, likely = 0;
    for (const auto& sc : scores) {
        auto it = labels.find(sc.transformation_id);
        if (it == labels.end()) {
            ++unlabeled;
            continue;
        }
        using annotation::Label;
        const Label l = it->second;
        if ((l == Label::LikelyNatural || l == Label::LikelyUnnatural) && !cfg.include_likely) {
            ++likely;
            continue;
        }
        const bool unnatural = l == Label::Unnatural || l == Label::LikelyUnnatural;
        rnc.push_back({sc.rnc, unnatural});
        ce.push_back({sc.ce_transformed, unnatural});
        anc.push_back({sc.anc, unnatural});
        (unnatural ? rnc_unnatural : rnc_natural).push_back(sc.rnc);
    }

    const std::vector<metrics::MetricEvaluation> evals = {metrics::auc(rnc, "RNC"), metrics::auc(ce, "CE"),
                                                          metrics::auc(anc, "ANC")};
    const auto mww = metrics::mww_test(rnc_unnatural, rnc_natural);

    char line[256];
    std::snprintf(line, sizeof line, "%-8s %8s %12s %10s\n", "metric", "AUC", "unnatural", "natural");
    s.out << line;
    for (const auto& e : evals) {
        std::snprintf(line, sizeof line, "%-8s %8s %12zu %10zu\n", e.metric.c_str(), fixed(e.auc).c_str(),
                      e.n_positive, e.n_negative);
        s.out << line;
    }
    s.out << "RNC unnatural vs natural: U = " << mww.u << ", p = " << fixed(mww.p_value, 6)
          << ", effect size = " << fixed(mww.effect_size) << '\n';
    s.out << "joined " << rnc.size() << ", unlabeled " << unlabeled << ", likely excluded " << likely << '\n';

    if (!a.json_out.empty()) {
        json j{{"joined", rnc.size()}, {"unlabeled", unlabeled}, {"excluded_likely", likely}};
        for (const auto& e : evals)
            j["metrics"].push_back(
                {{"metric", e.metric}, {"auc", e.auc}, {"n_positive", e.n_positive}, {"n_negative", e.n_negative}});
        j["mww_rnc"] = {{"u", mww.u}, {"p_value", mww.p_value}, {"effect_size", mww.effect_size}};
        OutputFile out(a.json_out, s.out);
        out.stream() << j.dump(2) << '\n';
        out.close();
    }
    return kExitOk;
}

// ---- robustness ------------------------------------------------------------

struct RobustnessArgs {
    std::string evals;
    std::string labels;
    std::string json_out;
};

int cmd_robustness(const RobustnessArgs& a, const Config& cfg, Streams s) {
    std::vector<robustness::BugEvaluation> evals;
    auto errors = for_each_jsonl(a.evals, [&](const json& j) { evals.push_back(evaluation_from_json(j)); });
    report_errors(s.err, a.evals, errors);
    if (evals.empty())
        throw std::invalid_argument("no bug evaluations in " + a.evals);

    if (!a.labels.empty()) {
        const auto labels = read_labels(a.labels, s.err);
        for (auto& e : evals)
            for (auto& v : e.variants)
                if (auto it = labels.find(v.transformation_id); it != labels.end())
                    v.label = it->second;
    }
    bool fully_labeled = true;
    for (const auto& e : evals)
        for (const auto& v : e.variants)
            fully_labeled = fully_labeled && v.label.has_value();

    std::vector<robustness::Filter> filters;
    std::string mode = cfg.report_filter;
    if (mode == "auto") {
        mode = fully_labeled ? "both" : "all";
        if (!fully_labeled)
            s.err << "note: some variants are unlabeled; reporting AllTransforms only\n";
    }
    if (mode == "all" || mode == "both")
        filters.push_back(robustness::Filter::AllTransforms);
    if (mode == "natural" || mode == "both")
        filters.push_back(robustness::Filter::NaturalOnly);

    std::vector<robustness::RobustnessReport> all;
    for (auto f : filters)
        for (auto& r : robustness::reports(evals, f))
            all.push_back(std::move(r));
    s.out << robustness::format_table(all);
    for (const auto& r : all)
        if (!r.rates.no_variants.empty())
            s.out << r.tool << " (" << robustness::to_string(r.filter) << "): " << r.rates.no_variants.size()
                  << " bug(s) without kept variants excluded from transformed rates\n";

    if (!a.json_out.empty()) {
        json j{{"reports", json::array()}};
        for (const auto& r : all)
            j["reports"].push_back(report_to_json(r));
        OutputFile out(a.json_out, s.out);
        out.stream() << j.dump(2) << '\n';
        out.close();
    }
    return kExitOk;
}

// ---- annotations -----------------------------------------------------------

struct AnnotationArgs {
    std::string responses;
    std::string out;
    std::string summary_out;
};

int cmd_annotations(const AnnotationArgs& a, const Config&, Streams s) {
    std::ifstream in(a.responses);
    if (!in)
        throw IoError("cannot read " + a.responses);
    const auto csv = annotation::read_responses_csv(in);
    for (const auto& e : csv.errors)
        s.err << "warning: " << a.responses << " line " << e.line << ": " << e.message << '\n';

    const auto labeled = annotation::label_all(csv.responses);
    for (const auto& e : labeled.errors)
        s.err << "warning: transformation " << e.transformation_id << ": " << e.message << '\n';
    const auto sum = annotation::summarize(labeled.labels, csv.responses);

    OutputFile out(a.out, s.out);
    for (const auto& l : labeled.labels)
        out.line(label_to_json(l));
    out.close();

    json summary{
        {"items", sum.items},
        {"row_errors", csv.errors.size()},
        {"item_errors", labeled.errors.size()},
        {"agreement", {{"full", sum.full}, {"high", sum.high}, {"disagreement", sum.disagreement}}},
        {"labels",
         {{"Natural", sum.natural},
          {"LikelyNatural", sum.likely_natural},
          {"LikelyUnnatural", sum.likely_unnatural},
          {"Unnatural", sum.unnatural}}},
        {"fleiss_kappa", sum.fleiss ? json(*sum.fleiss) : json(nullptr)},
        {"mean_pairwise_cohen_kappa", sum.mean_pairwise_cohen ? json(*sum.mean_pairwise_cohen) : json(nullptr)},
    };
    std::ostream& txt = a.out == "-" ? s.err : s.out;
    txt << "items " << sum.items << ": Natural " << sum.natural << ", LikelyNatural " << sum.likely_natural
        << ", LikelyUnnatural " << sum.likely_unnatural << ", Unnatural " << sum.unnatural << '\n';
    txt << "agreement: full " << sum.full << ", high " << sum.high << ", disagreement " << sum.disagreement << '\n';
    if (sum.fleiss)
        txt << "Fleiss kappa " << fixed(*sum.fleiss) << '\n';
    if (sum.mean_pairwise_cohen)
        txt << "mean pairwise Cohen kappa " << fixed(*sum.mean_pairwise_cohen) << '\n';
    if (!csv.responses.empty()) {
        const auto trimmed = annotation::trim_outlier_times(csv.responses);
        std::vector<double> times;
        for (const auto& r : trimmed.kept)
            times.push_back(r.completion_seconds);
        const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
        const double median = metrics::percentile(times, 50);
        txt << "completion time (cutoff " << fixed(trimmed.cutoff, 1) << "s, " << trimmed.dropped
            << " dropped): mean " << fixed(mean, 1) << "s, median " << fixed(median, 1) << "s\n";
        summary["time"] = {{"cutoff", trimmed.cutoff},
                           {"dropped", trimmed.dropped},
                           {"mean", mean},
                           {"median", median}};
    }
    if (!a.summary_out.empty()) {
        OutputFile so(a.summary_out, s.out);
        so.stream() << summary.dump(2) << '\n';
        so.close();
    }
    return kExitOk;
}

// ---- wiring ----------------------------------------------------------------

/// A flag that overrides a config key when given on the command line.
struct Override {
    CLI::Option* option;
    std::string key;
    std::function<std::string()> value;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semantic-preserving transformations, naturalness scoring and robustness analysis for Java methods",
                 "natrob"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::vector<Override> overrides;
    auto add_string = [&](CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
        auto value = std::make_shared<std::string>();
        overrides.push_back({cmd->add_option(flag, *value, help), key, [value] { return *value; }});
    };
    auto add_flag = [&](CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
        overrides.push_back({cmd->add_flag(flag, help), key, [] { return std::string("true"); }});
    };

    app.add_option("--config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
    add_string(&app, "--jobs", "jobs", "worker threads for per-item work");
    add_string(&app, "--seed", "seed", "reserved; accepted and recorded, currently unused");

    TrainArgs train;
    auto* c_train = app.add_subcommand("train-lm", "train and save an n-gram model");
    c_train->add_option("corpus", train.corpus, "directory of .java files, or a file of token lines")->required();
    c_train->add_option("-o,--out", train.out, "model file to write")->required();
    add_string(c_train, "--order", "lm.order", "n-gram order (default 4)");
    add_string(c_train, "--min-count", "lm.min_count", "tokens seen fewer times become <unk>");

    TransformArgs tr;
    auto* c_transform = app.add_subcommand("transform", "apply every operator to each bug's method");
    c_transform->add_option("bugs", tr.bugs, "bugs JSONL")->required();
    c_transform->add_option("-o,--out", tr.out, "records JSONL ('-' for stdout)")->required();
    add_string(c_transform, "--operators", "transform.operators", "comma-separated operator names");
    add_string(c_transform, "--unary2add-style", "transform.unary2add.style", "expanded or compound");
    add_string(c_transform, "--provider", "transform.provider", "none, firstchar, dictionary or external");
    add_string(c_transform, "--dictionary", "transform.dictionary", "JSON synonym table for the dictionary provider");
    add_string(c_transform, "--provider-endpoint", "transform.provider.endpoint", "external provider endpoint");
    add_string(c_transform, "--top-k", "transform.top_k", "candidates per variable");
    add_string(c_transform, "--validate-cmd", "validate.cmd", "shell hook run on each Valid record; {file} is replaced");

    ScoreArgs sc;
    auto* c_score = app.add_subcommand("score", "score Valid records and normalize");
    c_score->add_option("records", sc.records, "records JSONL")->required();
    c_score->add_option("-o,--out", sc.out, "scores JSONL ('-' for stdout)")->required();
    add_string(c_score, "--model", "lm.model", "n-gram model file");
    add_string(c_score, "--bridge", "lm.bridge", "external LM endpoint (tcp://host:port or command)");
    add_string(c_score, "--backend", "lm.backend", "ngram or external");
    add_string(c_score, "--field", "score.field", "normalize rnc or ce");
    add_string(c_score, "--min", "score.min", "fixed normalization minimum");
    add_string(c_score, "--max", "score.max", "fixed normalization maximum");

    EvaluateArgs ev;
    auto* c_eval = app.add_subcommand("evaluate-metric", "AUC of RNC and CE against naturalness labels");
    c_eval->add_option("scores", ev.scores, "scores JSONL")->required();
    c_eval->add_option("labels", ev.labels, "labels JSONL")->required();
    c_eval->add_option("--json", ev.json_out, "also write results as JSON");
    add_flag(c_eval, "--include-likely", "report.include_likely", "count Likely* labels with their majority class");

    RobustnessArgs rb;
    auto* c_rob = app.add_subcommand("robustness", "prediction and performance changes of repair tools");
    c_rob->add_option("evals", rb.evals, "bug evaluations JSONL")->required();
    c_rob->add_option("--labels", rb.labels, "labels JSONL joined by transformation_id");
    c_rob->add_option("--json", rb.json_out, "also write reports as JSON");
    add_string(c_rob, "--filter", "report.filter", "auto, all, natural or both");

    AnnotationArgs an;
    auto* c_ann = app.add_subcommand("annotations", "labels and agreement statistics from survey responses");
    c_ann->add_option("responses", an.responses, "responses CSV")->required();
    c_ann->add_option("-o,--out", an.out, "labels JSONL ('-' for stdout)")->required();
    c_ann->add_option("--summary", an.summary_out, "write the statistics as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Config cfg;
    try {
        if (!config_path.empty())
            load_config_file(config_path, cfg);
        for (const auto& o : overrides)
            if (o.option->count() > 0)
                cfg.set(o.key, o.value());
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Streams s{out, err};
    try {
        if (*c_train)
            return cmd_train_lm(train, cfg, s);
        if (*c_transform)
            return cmd_transform(tr, cfg, s);
        if (*c_score)
            return cmd_score(sc, cfg, s);
        if (*c_eval)
            return cmd_evaluate(ev, cfg, s);
        if (*c_rob)
            return cmd_robustness(rb, cfg, s);
        if (*c_ann)
            return cmd_annotations(an, cfg, s);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFatal;
    }
    return kExitUsage;
}

}  // namespace natrob::cli
