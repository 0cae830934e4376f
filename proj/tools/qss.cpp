// Command-line front door: build and persist spaces, inspect neighbors,
// induce density states, run collapse queries and quantum-logic queries.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qss/collapse.hpp"
#include "qss/corpus.hpp"
#include "qss/hal.hpp"
#include "qss/io.hpp"
#include "qss/qlogic.hpp"
#include "qss/state.hpp"

using nlohmann::json;

namespace {

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string lower_ascii(std::string s) {
    for (auto& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

qss::Stoplist load_stoplist_opt(const std::string& path) {
    if (path.empty()) return {};
    return qss::load_stoplist(path);
}

qss::Corpus load_and_ingest(const std::string& corpus_path, const std::string& stoplist_path) {
    return qss::ingest(qss::load_corpus_path(corpus_path), load_stoplist_opt(stoplist_path));
}

qss::Vec unit_column(const qss::SemanticSpace& space, qss::WordId w) {
    return qss::word_vector(space, w, true).components;
}

void print_ranking(const qss::Vocabulary& vocab, const std::vector<qss::Neighbor>& ranked,
                   const std::string& format) {
    if (format == "jsonl") {
        int rank = 1;
        for (const auto& n : ranked) {
            json record{{"rank", rank++}, {"word", vocab.word(n.word)}, {"similarity", n.similarity}};
            std::cout << record.dump() << "\n";
        }
        return;
    }
    int rank = 1;
    for (const auto& n : ranked)
        std::cout << rank++ << "\t" << vocab.word(n.word) << "\t" << fixed6(n.similarity) << "\n";
}

struct PartitionSpec {
    std::vector<std::string> cues;
    int kmeans_k = 0;

    bool set() const { return !cues.empty() || kmeans_k > 0; }
};

std::vector<qss::LabelledTraces> make_partition(const qss::Corpus& corpus,
                                                const std::vector<qss::Trace>& traces,
                                                const PartitionSpec& spec, int window,
                                                std::uint64_t seed) {
    if (!spec.cues.empty()) {
        std::vector<qss::WordId> ids;
        ids.reserve(spec.cues.size());
        for (const auto& cue : spec.cues) ids.push_back(corpus.vocab->require(lower_ascii(cue)));
        return qss::partition_by_cues(traces, ids, corpus.vocab);
    }
    return qss::partition_kmeans(traces, spec.kmeans_k, seed, window, corpus.vocab);
}

qss::DensityState induce_state(const qss::Corpus& corpus, qss::WordId w,
                               const PartitionSpec& spec, int window, std::uint64_t seed) {
    const auto traces = qss::extract_traces(corpus, w, window);
    if (traces.empty())
        throw qss::DegenerateError("word '" + corpus.vocab->word(w) +
                                   "' does not occur in the corpus");
    const auto partition = make_partition(corpus, traces, spec, window, seed);
    return qss::build_density_state(w, partition, window, corpus.vocab);
}

void run_build(const std::string& corpus_path, const std::string& output, int window,
               const std::string& stoplist_path, const std::string& kind) {
    const qss::Corpus corpus = load_and_ingest(corpus_path, stoplist_path);
    if (corpus.vocab->size() == 0) std::cerr << "warning: empty vocabulary\n";
    const qss::HalMatrix hal = qss::build_hal_parallel(corpus.documents, window, corpus.vocab);
    std::size_t nonzeros = hal.nonzero_count();
    if (kind == "hal") {
        qss::save_hal(output, hal);
    } else {
        const qss::SemanticSpace space = qss::symmetrize(hal);
        nonzeros = space.nonzero_count();
        qss::save_space(output, space);
    }
    std::cout << "vocabulary " << corpus.vocab->size() << " nonzeros " << nonzeros << "\n";
}

void run_neighbors(const std::string& space_path, const std::string& word, int k,
                   const std::string& format) {
    const qss::Container c = qss::load_as_space(space_path);
    const qss::WordId w = c.vocab->require(lower_ascii(word));
    print_ranking(*c.vocab, qss::nearest_neighbors(*c.space, w, k), format);
}

void print_senses(const qss::DensityState& state, const std::string& format) {
    if (format == "jsonl") {
        for (const auto& s : state.senses()) {
            json record{{"label", s.label},
                        {"probability", s.probability},
                        {"traces", s.trace_count}};
            std::cout << record.dump() << "\n";
        }
        return;
    }
    for (const auto& s : state.senses())
        std::cout << s.label << "\t" << fixed6(s.probability) << "\t" << s.trace_count << "\n";
}

void run_senses(const std::string& corpus_path, const std::string& word,
                const PartitionSpec& spec, int window, const std::string& stoplist_path,
                std::uint64_t seed, const std::string& output, const std::string& format) {
    const qss::Corpus corpus = load_and_ingest(corpus_path, stoplist_path);
    const qss::WordId w = corpus.vocab->require(lower_ascii(word));
    const qss::DensityState state = induce_state(corpus, w, spec, window, seed);
    if (!output.empty()) {
        const qss::SemanticSpace space =
            qss::symmetrize(qss::build_hal_parallel(corpus.documents, window, corpus.vocab));
        qss::save_space(output, space, {&state, 1});
    }
    print_senses(state, format);
}

void print_collapse(const qss::Vocabulary& vocab, const qss::DensityState& prior,
                    const qss::CollapseOutcome& outcome, const std::string& target,
                    const std::string& cue, const std::string& format) {
    if (format == "jsonl") {
        json summary{{"type", "summary"},
                     {"target", target},
                     {"cue", cue},
                     {"match_score", outcome.match},
                     {"probability", outcome.probability},
                     {"retained", outcome.retained.size()},
                     {"senses", prior.senses().size()}};
        std::cout << summary.dump() << "\n";
        for (std::size_t r = 0; r < outcome.retained.size(); ++r) {
            const auto& sense = prior.senses()[static_cast<std::size_t>(outcome.retained[r])];
            json record{{"type", "sense"},
                        {"label", sense.label},
                        {"prior", sense.probability},
                        {"activation", outcome.activations[r]},
                        {"posterior", outcome.weights[r]}};
            std::cout << record.dump() << "\n";
        }
        return;
    }
    (void)vocab;
    std::cout << "match_score " << fixed6(outcome.match) << "\n";
    std::cout << "probability " << fixed6(outcome.probability) << "\n";
    std::cout << "retained " << outcome.retained.size() << " of " << prior.senses().size()
              << " senses\n";
    for (std::size_t r = 0; r < outcome.retained.size(); ++r) {
        const auto& sense = prior.senses()[static_cast<std::size_t>(outcome.retained[r])];
        std::cout << sense.label << "\tprior " << fixed6(sense.probability) << "\tactivation "
                  << fixed6(outcome.activations[r]) << "\tposterior " << fixed6(outcome.weights[r])
                  << "\n";
    }
}

void run_collapse(const std::string& corpus_path, const std::string& space_path,
                  const std::string& target, const std::string& cue, PartitionSpec spec,
                  int window, const std::string& stoplist_path, std::uint64_t seed,
                  double epsilon, const std::string& format) {
    const std::string target_word = lower_ascii(target);
    const std::string cue_word = lower_ascii(cue);

    if (!space_path.empty()) {
        if (spec.set())
            throw qss::UsageError("--cues/--kmeans apply only to --corpus input");
        const qss::Container c = qss::load_as_space(space_path);
        const qss::WordId w = c.vocab->require(target_word);
        const qss::WordId x = c.vocab->require(cue_word);
        const qss::DensityState* state = nullptr;
        for (const auto& s : c.states)
            if (s.word() == w) state = &s;
        if (!state)
            throw qss::UnknownWordError("container has no density state for '" + target_word + "'");
        const auto outcome = qss::collapse(*state, unit_column(*c.space, x), epsilon);
        print_collapse(*c.vocab, *state, outcome, target_word, cue_word, format);
        return;
    }

    const qss::Corpus corpus = load_and_ingest(corpus_path, stoplist_path);
    const qss::WordId w = corpus.vocab->require(target_word);
    const qss::WordId x = corpus.vocab->require(cue_word);
    if (!spec.set()) spec.cues = {cue_word};  // default split: cue contexts vs the rest
    const qss::DensityState state = induce_state(corpus, w, spec, window, seed);
    const qss::SemanticSpace space =
        qss::symmetrize(qss::build_hal_parallel(corpus.documents, window, corpus.vocab));
    const auto outcome = qss::collapse(state, unit_column(space, x), epsilon);
    print_collapse(*corpus.vocab, state, outcome, target_word, cue_word, format);
}

struct QueryExpr {
    std::vector<std::string> positives;
    std::vector<std::string> negatives;
};

QueryExpr parse_query(const std::string& text) {
    struct Token {
        std::string value;
        std::size_t column;  // 1-based
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        tokens.push_back({text.substr(start, i - start), start + 1});
    }
    auto fail = [](std::size_t column, const std::string& what) -> void {
        throw qss::UsageError("parse error at column " + std::to_string(column) + ": " + what);
    };
    auto is_word = [](const std::string& t) { return t != "OR" && t != "NOT"; };
    const std::size_t end_column = text.size() + 1;

    QueryExpr expr;
    std::size_t idx = 0;
    if (tokens.empty()) fail(1, "expected word");
    if (!is_word(tokens[idx].value)) fail(tokens[idx].column, "expected word");
    expr.positives.push_back(lower_ascii(tokens[idx++].value));

    while (idx < tokens.size() && tokens[idx].value == "OR") {
        ++idx;
        if (idx >= tokens.size()) fail(end_column, "expected word after OR");
        if (!is_word(tokens[idx].value)) fail(tokens[idx].column, "expected word after OR");
        expr.positives.push_back(lower_ascii(tokens[idx++].value));
    }
    if (idx < tokens.size() && tokens[idx].value == "NOT") {
        if (expr.positives.size() > 1) fail(tokens[idx].column, "NOT cannot follow OR");
        ++idx;
        if (idx >= tokens.size()) fail(end_column, "expected word after NOT");
        while (idx < tokens.size()) {
            if (!is_word(tokens[idx].value)) fail(tokens[idx].column, "expected word after NOT");
            expr.negatives.push_back(lower_ascii(tokens[idx++].value));
        }
    }
    if (idx < tokens.size()) fail(tokens[idx].column, "expected OR or NOT");
    return expr;
}

void run_query(const std::string& space_path, const std::vector<std::string>& expr_parts, int k,
               const std::string& format) {
    std::string text;
    for (const auto& part : expr_parts) {
        if (!text.empty()) text += ' ';
        text += part;
    }
    const QueryExpr expr = parse_query(text);

    const qss::Container c = qss::load_as_space(space_path);
    const auto& space = *c.space;
    std::vector<qss::Vec> positives, negatives;
    for (const auto& w : expr.positives) positives.push_back(unit_column(space, c.vocab->require(w)));
    for (const auto& w : expr.negatives) negatives.push_back(unit_column(space, c.vocab->require(w)));

    const std::size_t n = space.dim();
    std::vector<qss::Neighbor> ranked;
    ranked.reserve(n);
    if (positives.size() == 1) {
        qss::Vec query = positives.front();
        if (!negatives.empty()) query = qss::negate(query, negatives);
        for (std::size_t u = 0; u < n; ++u) {
            const qss::Vec col = space.column(static_cast<qss::WordId>(u));
            const double norm = col.norm();
            ranked.push_back({static_cast<qss::WordId>(u), norm > 0.0 ? col.dot(query) / norm : 0.0});
        }
    } else {
        const qss::Subspace disjunction = qss::span(positives);
        for (std::size_t u = 0; u < n; ++u) {
            qss::Vec col = space.column(static_cast<qss::WordId>(u));
            const double norm = col.norm();
            double sim = 0.0;
            if (norm > 0.0) sim = qss::project(col / norm, disjunction).norm();
            ranked.push_back({static_cast<qss::WordId>(u), sim});
        }
    }
    std::sort(ranked.begin(), ranked.end(), [](const qss::Neighbor& a, const qss::Neighbor& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.word < b.word;
    });
    if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(static_cast<std::size_t>(k));
    print_ranking(*c.vocab, ranked, format);
}

void run_derive(const std::string& space_path, const std::string& word,
                const std::vector<std::string>& from, double tau, const std::string& format) {
    const qss::Container c = qss::load_as_space(space_path);
    const qss::Vec target = unit_column(*c.space, c.vocab->require(lower_ascii(word)));
    std::vector<qss::Vec> generators;
    generators.reserve(from.size());
    for (const auto& g : from) generators.push_back(unit_column(*c.space, c.vocab->require(lower_ascii(g))));

    const auto result = qss::approx_derivable(target, generators, tau);
    if (format == "jsonl") {
        json record{{"word", lower_ascii(word)},
                    {"residual", result.residual},
                    {"tau", tau},
                    {"derivable", result.derivable}};
        std::cout << record.dump() << "\n";
        return;
    }
    std::cout << "residual " << fixed6(result.residual) << "\n";
    std::cout << "derivable " << (result.derivable ? "true" : "false") << " (tau " << fixed6(tau)
              << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HAL semantic spaces, density-state word meanings, collapse and subspace queries"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"table", "jsonl"};

    std::string build_corpus, build_output, build_stoplist, build_kind = "hal";
    int build_window = 5;
    auto* build = app.add_subcommand("build", "build a space from a corpus and persist it");
    build->add_option("corpus", build_corpus,
                      "corpus file (one document per line) or directory of .txt files")
        ->required();
    build->add_option("-o,--output", build_output, "output container path")->required();
    build->add_option("--window", build_window, "sliding-window length")->check(CLI::PositiveNumber);
    build->add_option("--stoplist", build_stoplist, "stoplist file, one word per line");
    build->add_option("--kind", build_kind, "matrix to persist: hal (directed) or sym (H+H^T)")
        ->check(CLI::IsMember({"hal", "sym"}));

    std::string nb_space, nb_word, nb_format = "table";
    int nb_k = 10;
    auto* neighbors = app.add_subcommand("neighbors", "rank nearest neighbors by cosine");
    neighbors->add_option("space", nb_space, "container path")->required();
    neighbors->add_option("word", nb_word)->required();
    neighbors->add_option("-k,--top", nb_k, "rows to print")->check(CLI::PositiveNumber);
    neighbors->add_option("--format", nb_format)->check(CLI::IsMember(formats));

    std::string sn_corpus, sn_word, sn_stoplist, sn_output, sn_format = "table";
    PartitionSpec sn_spec;
    int sn_window = 5;
    std::uint64_t sn_seed = 1;
    auto* senses = app.add_subcommand("senses", "induce a density state for a word");
    senses->add_option("--corpus", sn_corpus, "corpus file or directory")->required();
    senses->add_option("--word", sn_word)->required();
    auto* sn_cues = senses->add_option("--cues", sn_spec.cues, "cue-filter partition words")
                        ->delimiter(',');
    auto* sn_kmeans = senses->add_option("--kmeans", sn_spec.kmeans_k, "spherical k-means clusters")
                          ->check(CLI::PositiveNumber);
    sn_cues->excludes(sn_kmeans);
    senses->add_option("--window", sn_window)->check(CLI::PositiveNumber);
    senses->add_option("--stoplist", sn_stoplist);
    senses->add_option("--seed", sn_seed, "k-means seed");
    senses->add_option("-o,--output", sn_output, "persist space plus density state");
    senses->add_option("--format", sn_format)->check(CLI::IsMember(formats));

    std::string cl_corpus, cl_space, cl_target, cl_cue, cl_stoplist, cl_format = "table";
    PartitionSpec cl_spec;
    int cl_window = 5;
    std::uint64_t cl_seed = 1;
    double cl_epsilon = 1e-6;
    auto* collapse = app.add_subcommand("collapse", "collapse a word's meaning under a context cue");
    auto* cl_corpus_opt = collapse->add_option("--corpus", cl_corpus, "corpus file or directory");
    auto* cl_space_opt =
        collapse->add_option("--space", cl_space, "container with a stored density state");
    cl_corpus_opt->excludes(cl_space_opt);
    collapse->add_option("--target", cl_target)->required();
    collapse->add_option("--cue", cl_cue)->required();
    collapse->add_option("--cues", cl_spec.cues, "cue-filter partition words")->delimiter(',');
    collapse->add_option("--kmeans", cl_spec.kmeans_k)->check(CLI::PositiveNumber);
    collapse->add_option("--window", cl_window)->check(CLI::PositiveNumber);
    collapse->add_option("--stoplist", cl_stoplist);
    collapse->add_option("--seed", cl_seed);
    collapse->add_option("--epsilon", cl_epsilon, "sense activation threshold")
        ->check(CLI::NonNegativeNumber);
    collapse->add_option("--format", cl_format)->check(CLI::IsMember(formats));

    std::string q_space, q_format = "table";
    std::vector<std::string> q_expr;
    int q_k = 10;
    auto* query = app.add_subcommand("query", "rank words against WORD [OR WORD ...] / WORD NOT WORD...");
    query->add_option("space", q_space, "container path")->required();
    query->add_option("expression", q_expr, "query expression")->required()->take_all();
    query->add_option("-k,--top", q_k)->check(CLI::PositiveNumber);
    query->add_option("--format", q_format)->check(CLI::IsMember(formats));

    std::string d_space, d_word, d_format = "table";
    std::vector<std::string> d_from;
    double d_tau = 0.0;
    auto* derive = app.add_subcommand("derive", "test approximate derivation from a span");
    derive->add_option("space", d_space, "container path")->required();
    derive->add_option("word", d_word)->required();
    derive->add_option("--from", d_from, "generator words")->required()->delimiter(',');
    derive->add_option("--tau", d_tau, "residual threshold")->required();
    derive->add_option("--format", d_format)->check(CLI::IsMember(formats));

    build->callback([&] { run_build(build_corpus, build_output, build_window, build_stoplist, build_kind); });
    neighbors->callback([&] { run_neighbors(nb_space, nb_word, nb_k, nb_format); });
    senses->callback([&] {
        if (!sn_spec.set()) throw qss::UsageError("senses requires --cues or --kmeans");
        run_senses(sn_corpus, sn_word, sn_spec, sn_window, sn_stoplist, sn_seed, sn_output, sn_format);
    });
    collapse->callback([&] {
        if (cl_corpus.empty() && cl_space.empty())
            throw qss::UsageError("collapse requires --corpus or --space");
        run_collapse(cl_corpus, cl_space, cl_target, cl_cue, cl_spec, cl_window, cl_stoplist,
                     cl_seed, cl_epsilon, cl_format);
    });
    query->callback([&] { run_query(q_space, q_expr, q_k, q_format); });
    derive->callback([&] { run_derive(d_space, d_word, d_from, d_tau, d_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const qss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
