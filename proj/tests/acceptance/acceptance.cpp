// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero if any criterion fails. The collapse criterion is
// checked against a self-contained string-keyed reimplementation so the two
// paths share no code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/collapse.hpp"
#include "qss/corpus.hpp"
#include "qss/hal.hpp"
#include "qss/io.hpp"
#include "qss/qlogic.hpp"
#include "qss/state.hpp"
#include "support/helpers.hpp"
#include "support/subprocess.hpp"

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::string g_cli;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string cli(const std::vector<std::string>& args, const std::string& redirect = "2>/dev/null") {
    std::string cmd = testsupport::shell_quote(g_cli);
    for (const auto& a : args) cmd += " " + testsupport::shell_quote(a);
    if (!redirect.empty()) cmd += " " + redirect;
    return cmd;
}

qss::Vec random_unit(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> gauss;
    qss::Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gauss(rng);
    return v.normalized();
}

qss::Corpus random_corpus(std::mt19937_64& rng, std::size_t max_docs, std::size_t max_tokens) {
    std::vector<std::string> texts(1 + rng() % max_docs);
    for (auto& text : texts) {
        const std::size_t len = rng() % (max_tokens + 1);
        for (std::size_t t = 0; t < len; ++t) {
            if (t) text += ' ';
            text += "w" + std::to_string(rng() % 40);
        }
    }
    return testsupport::make_corpus(texts);
}

// --- criterion 1 ------------------------------------------------------------

void criterion_table1() {
    const auto start = Clock::now();
    const qss::Corpus corpus = testsupport::make_corpus({testsupport::kReaganSentence});
    const qss::HalMatrix hal = qss::build_hal(corpus.documents, 5, corpus.vocab);

    int exact = 0;
    const auto& expected = testsupport::reagan_hal_cells();
    for (const auto& row : corpus.vocab->words()) {
        for (const auto& col : corpus.vocab->words()) {
            auto it = expected.find({row, col});
            const long long want = it == expected.end() ? 0 : it->second;
            if (hal.at(corpus.vocab->require(row), corpus.vocab->require(col)) == want) ++exact;
        }
    }
    const double elapsed = seconds_since(start);
    const bool ok = exact == 49 && corpus.vocab->size() == 7 && elapsed < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/49 cells exact, %.3fs", exact, elapsed);
    report(1, "golden sliding-window matrix", ok, detail);
}

// --- criterion 2 ------------------------------------------------------------

void criterion_merge_determinism() {
    const auto start = Clock::now();
    std::mt19937_64 rng(220809);
    bool ok = true;
    for (int round = 0; round < 100 && ok; ++round) {
        const qss::Corpus corpus = random_corpus(rng, 50, 200);
        const qss::HalMatrix whole = qss::build_hal(corpus.documents, 5, corpus.vocab);

        const qss::SemanticSpace s = qss::symmetrize(whole);
        for (const auto& [cell, v] : s.entries())
            if (s.at(cell.second, cell.first) != v) ok = false;

        qss::HalMatrix merged(corpus.vocab->size(), corpus.vocab);
        std::span<const qss::Document> docs(corpus.documents);
        const std::size_t third = docs.size() / 3;
        merged.merge(qss::build_hal(docs.subspan(0, third), 5, corpus.vocab));
        merged.merge(qss::build_hal(docs.subspan(third, third), 5, corpus.vocab));
        merged.merge(qss::build_hal(docs.subspan(2 * third), 5, corpus.vocab));
        if (merged.entries() != whole.entries()) ok = false;

        const qss::HalMatrix parallel =
            qss::build_hal_parallel(corpus.documents, 5, corpus.vocab, 4);
        if (parallel.entries() != whole.entries()) ok = false;
    }
    const double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof detail, "100 corpora, %.2fs", elapsed);
    report(2, "symmetry and merge determinism", ok && elapsed < 30.0, detail);
}

// --- criterion 3 ------------------------------------------------------------

void criterion_density_validity() {
    std::mt19937_64 rng(330809);
    bool ok = true;
    double worst_trace = 0.0, worst_eig = 0.0, worst_recon = 0.0;
    for (int round = 0; round < 200; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 29);
        const int m = 1 + static_cast<int>(rng() % 8);
        std::vector<qss::Sense> senses;
        std::vector<double> raw(static_cast<std::size_t>(m));
        double total = 0.0;
        for (auto& p : raw) {
            p = 1e-3 + static_cast<double>(rng() % 10000);
            total += p;
        }
        const qss::Vec anchor = random_unit(rng, n);
        for (int i = 0; i < m; ++i) {
            // mix in the anchor so non-orthogonal sense pairs are common
            qss::Vec v = random_unit(rng, n);
            if (rng() % 2) v = (0.7 * anchor + 0.3 * v).normalized();
            senses.push_back({"s" + std::to_string(i), raw[static_cast<std::size_t>(i)] / total, v, 0});
        }
        double fix = 0.0;
        for (const auto& s : senses) fix += s.probability;
        senses.back().probability += 1.0 - fix;
        const qss::DensityState state =
            qss::DensityState::from_senses(0, senses, random_unit(rng, n));

        // independent recomputation of every invariant
        const qss::Mat& rho = state.rho();
        const double trace_err = std::abs(rho.trace() - 1.0);
        const double asym = (rho - rho.transpose()).cwiseAbs().maxCoeff();
        Eigen::SelfAdjointEigenSolver<qss::Mat> es(rho, Eigen::EigenvaluesOnly);
        const double min_eig = es.eigenvalues().minCoeff();
        qss::Mat rebuilt = qss::Mat::Zero(n, n);
        for (const auto& s : senses)
            for (Eigen::Index r = 0; r < n; ++r)
                for (Eigen::Index c = 0; c < n; ++c)
                    rebuilt(r, c) += s.probability * s.state_vector[r] * s.state_vector[c];
        const double recon = (rho - rebuilt).cwiseAbs().maxCoeff();

        worst_trace = std::max(worst_trace, trace_err);
        worst_eig = std::min(worst_eig, min_eig);
        worst_recon = std::max(worst_recon, recon);
        if (trace_err > 1e-9 || asym > 1e-9 || min_eig < -1e-9 || recon > 1e-9 ||
            !state.validate().ok())
            ok = false;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "200 states, worst trace err %.2e, min eig %.2e, recon %.2e", worst_trace,
                  worst_eig, worst_recon);
    report(3, "density-state validity", ok, detail);
}

// --- criterion 4 ------------------------------------------------------------

void criterion_projector_suite() {
    std::mt19937_64 rng(440809);
    bool ok = true;
    int built = 0;
    double worst = 0.0;
    while (built < 200) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 19);
        const int m = 1 + static_cast<int>(rng() % static_cast<int>(n));
        std::vector<qss::Vec> senses;
        qss::Mat b(n, m);
        for (int i = 0; i < m; ++i) {
            senses.push_back(random_unit(rng, n));
            b.col(i) = senses.back();
        }
        Eigen::JacobiSVD<qss::Mat> svd(b);
        if (svd.singularValues().minCoeff() < 5e-2) continue;
        const int r = 1 + static_cast<int>(rng() % m);
        std::vector<int> retained(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) retained[static_cast<std::size_t>(i)] = i;

        const auto p = qss::ObliqueProjector::build(senses, retained);
        ++built;
        double err = (p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff();
        for (int i = 0; i < m; ++i) {
            const auto& s = senses[static_cast<std::size_t>(i)];
            err = std::max(err, i < r ? (p.apply(s) - s).norm() : p.apply(s).norm());
        }
        worst = std::max(worst, err);
        if (err > 1e-9) ok = false;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "200 projectors, worst law residual %.2e", worst);
    report(4, "oblique projector laws", ok, detail);
}

// --- criterion 5 ------------------------------------------------------------
// Independent oracle: string-keyed weights, plain loops, no library calls.

namespace oracle {

using Tokens = std::vector<std::string>;
using Matrix = std::map<std::pair<std::string, std::string>, long long>;
using Column = std::map<std::string, double>;

Tokens split(const std::string& text) {
    Tokens out;
    std::istringstream in(text);
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

Matrix hal(const std::vector<Tokens>& docs, int window) {
    Matrix m;
    for (const auto& d : docs) {
        for (int i = 0; i < static_cast<int>(d.size()); ++i)
            for (int j = std::max(0, i - window); j < i; ++j)
                m[{d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]}] +=
                    window + 1 - (i - j);
    }
    return m;
}

Column symmetric_column(const Matrix& m, const std::string& w) {
    Column col;
    for (const auto& [cell, v] : m) {
        if (cell.first == w) col[cell.second] += static_cast<double>(v);
        if (cell.second == w) col[cell.first] += static_cast<double>(v);
    }
    return col;
}

double norm(const Column& c) {
    double sum = 0.0;
    for (const auto& [word, v] : c) sum += v * v;
    return std::sqrt(sum);
}

double dot(const Column& a, const Column& b) {
    double sum = 0.0;
    for (const auto& [word, v] : a) {
        auto it = b.find(word);
        if (it != b.end()) sum += v * it->second;
    }
    return sum;
}

Column normalized(Column c) {
    const double len = norm(c);
    for (auto& [word, v] : c) v /= len;
    return c;
}

std::vector<Tokens> traces_of(const std::vector<Tokens>& docs, const std::string& w, int l) {
    std::vector<Tokens> traces;
    const int before = l / 2;
    const int after = l - 1 - before;
    for (const auto& d : docs) {
        for (int i = 0; i < static_cast<int>(d.size()); ++i) {
            if (d[static_cast<std::size_t>(i)] != w) continue;
            const int lo = std::max(0, i - before);
            const int hi = std::min(static_cast<int>(d.size()), i + after + 1);
            traces.emplace_back(d.begin() + lo, d.begin() + hi);
        }
    }
    return traces;
}

bool contains(const Tokens& t, const std::string& w) {
    for (const auto& x : t)
        if (x == w) return true;
    return false;
}

}  // namespace oracle

void criterion_collapse_oracle() {
    const std::vector<std::string> corpus_lines = testsupport::iran_corpus();
    std::string corpus_text;
    for (const auto& line : corpus_lines) corpus_text += line + "\n";

    testsupport::TempDir dir;
    const std::string corpus_path = dir.write("iran.txt", corpus_text);
    const auto run = testsupport::run_command(
        cli({"collapse", "--corpus", corpus_path, "--target", "reagan", "--cue", "iran", "--cues",
             "contra,hostage", "--window", "5", "--format", "jsonl"}));
    if (run.exit_code != 0) {
        report(5, "collapse oracle equivalence", false,
               "cli exited with " + std::to_string(run.exit_code));
        return;
    }

    // oracle evaluation
    std::vector<oracle::Tokens> docs;
    for (const auto& line : corpus_lines) docs.push_back(oracle::split(line));
    const int window = 5;
    const auto traces = oracle::traces_of(docs, "reagan", window);

    std::vector<std::pair<std::string, std::vector<oracle::Tokens>>> parts{
        {"contra", {}}, {"hostage", {}}, {"other", {}}};
    for (const auto& t : traces) {
        if (oracle::contains(t, "contra"))
            parts[0].second.push_back(t);
        else if (oracle::contains(t, "hostage"))
            parts[1].second.push_back(t);
        else
            parts[2].second.push_back(t);
    }

    const oracle::Column cue =
        oracle::normalized(oracle::symmetric_column(oracle::hal(docs, window), "iran"));
    const oracle::Column target =
        oracle::normalized(oracle::symmetric_column(oracle::hal(traces, window), "reagan"));

    struct OracleSense {
        std::string label;
        double prior, activation, cos_theta, cos_psi;
    };
    std::vector<OracleSense> senses;
    for (const auto& [label, part] : parts) {
        const oracle::Column e =
            oracle::normalized(oracle::symmetric_column(oracle::hal(part, window), "reagan"));
        const double cos_theta = oracle::dot(cue, e);
        senses.push_back({label, static_cast<double>(part.size()) / static_cast<double>(traces.size()),
                          cos_theta * cos_theta, cos_theta, oracle::dot(e, target)});
    }
    double match = 0.0;
    for (const auto& s : senses) match += s.prior * s.cos_theta * s.cos_psi;
    const double probability = match * match;

    const double epsilon = 1e-6;
    double denom = 0.0;
    std::vector<OracleSense> retained;
    for (const auto& s : senses)
        if (s.activation > epsilon) {
            retained.push_back(s);
            denom += s.prior * s.activation;
        }

    // compare with the cli records
    std::istringstream in(run.output);
    std::string line;
    bool ok = true;
    std::string why = "matched brute force at 1e-9";
    std::size_t sense_index = 0;
    while (std::getline(in, line)) {
        const json record = json::parse(line);
        if (record.at("type") == "summary") {
            if (std::abs(record.at("match_score").get<double>() - match) > 1e-9) ok = false;
            if (std::abs(record.at("probability").get<double>() - probability) > 1e-9) ok = false;
            if (record.at("retained").get<std::size_t>() != retained.size()) ok = false;
            if (record.at("senses").get<std::size_t>() != senses.size()) ok = false;
        } else {
            if (sense_index >= retained.size()) {
                ok = false;
                break;
            }
            const auto& s = retained[sense_index];
            if (record.at("label").get<std::string>() != s.label) ok = false;
            if (std::abs(record.at("prior").get<double>() - s.prior) > 1e-9) ok = false;
            if (std::abs(record.at("activation").get<double>() - s.activation) > 1e-9) ok = false;
            if (std::abs(record.at("posterior").get<double>() - s.prior * s.activation / denom) >
                1e-9)
                ok = false;
            ++sense_index;
        }
    }
    if (sense_index != retained.size()) ok = false;
    if (retained.size() != 2) {
        ok = false;
        why = "expected exactly the two iran-flavoured senses";
    }
    report(5, "collapse oracle equivalence", ok, ok ? why : "cli diverged from brute force");

    // optional, non-gating: corpus-scale sanity run when a collection is supplied
    if (const char* reuters = std::getenv("QSS_REUTERS")) {
        try {
            const std::string space = (dir.path() / "reuters.qss").string();
            const auto build = testsupport::run_command(cli({"build", reuters, "-o", space}));
            const auto near = testsupport::run_command(
                cli({"neighbors", space, "reagan", "-k", "10", "--format", "jsonl"}));
            const bool found_president = near.output.find("\"president\"") != std::string::npos;
            const bool found_admin = near.output.find("\"administration\"") != std::string::npos;
            std::printf("[INFO] optional corpus check: president=%s administration=%s\n",
                        found_president ? "yes" : "no", found_admin ? "yes" : "no");
            (void)build;
        } catch (const std::exception& e) {
            std::printf("[INFO] optional corpus check skipped: %s\n", e.what());
        }
    }
}

// --- criterion 6 ------------------------------------------------------------

void criterion_spectral() {
    std::mt19937_64 rng(660809);
    bool ok = true;
    double worst_rel = 0.0;
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 5 + rng() % 8;
        auto vocab = std::make_shared<qss::Vocabulary>();
        for (std::size_t i = 0; i < n; ++i) vocab->add("w" + std::to_string(i));
        qss::SemanticSpace s(n, vocab);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = static_cast<double>(rng() % 10);
                if (v == 0.0) continue;
                s.add(static_cast<qss::WordId>(i), static_cast<qss::WordId>(j), v);
                if (i != j) s.add(static_cast<qss::WordId>(j), static_cast<qss::WordId>(i), v);
            }
        const auto pairs = qss::spectral_decompose(s, static_cast<int>(n));
        qss::Mat rebuilt = qss::Mat::Zero(n, n);
        for (const auto& [d, e] : pairs) rebuilt += d * (e * e.transpose());
        const qss::Mat dense = s.dense();
        const double rel = (rebuilt - dense).norm() / std::max(1.0, dense.norm());
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-8) ok = false;
    }

    // non-orthogonal two-sense corpus: eigenvectors are not the senses
    const qss::Corpus corpus = testsupport::make_corpus({
        "reagan iran contra arms",
        "reagan iran contra arms",
        "reagan iran contra deal",
        "reagan iran hostage embassy",
        "reagan iran hostage teheran",
    });
    const qss::WordId reagan = corpus.vocab->require("reagan");
    const auto traces = qss::extract_traces(corpus, reagan, 5);
    const std::vector<qss::WordId> cues{corpus.vocab->require("contra")};
    const auto parts = qss::partition_by_cues(traces, cues, corpus.vocab);
    const qss::DensityState state = qss::build_density_state(reagan, parts, 5, corpus.vocab);
    const double sense_overlap =
        std::abs(state.senses()[0].state_vector.dot(state.senses()[1].state_vector));
    if (sense_overlap <= 0.0) ok = false;

    std::vector<qss::SemanticSpace> spaces;
    for (const auto& t : traces) spaces.push_back(qss::trace_space(t, 5, corpus.vocab));
    const auto eigen_pairs = qss::spectral_decompose(qss::sum_spaces(spaces), 2);
    double worst_cos = 0.0;
    for (const auto& [d, eigvec] : eigen_pairs)
        for (const auto& sense : state.senses())
            worst_cos = std::max(worst_cos, std::abs(eigvec.dot(sense.state_vector)));
    if (worst_cos >= 1.0 - 1e-6) ok = false;

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "worst rel reconstruction %.2e, sense overlap %.3f, max eig-sense cos %.6f",
                  worst_rel, sense_overlap, worst_cos);
    report(6, "spectral baseline and orthogonality contrast", ok, detail);
}

// --- criterion 7 ------------------------------------------------------------

void criterion_qlogic() {
    const auto start = Clock::now();
    std::mt19937_64 rng(770809);
    bool ok = true;

    // negation orthogonality and span/projection laws over random draws
    int tested = 0;
    while (tested < 100) {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 10);
        std::vector<qss::Vec> unwanted;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i) unwanted.push_back(random_unit(rng, n));
        const qss::Vec q = random_unit(rng, n);
        try {
            const qss::Vec out = qss::negate(q, unwanted);
            ++tested;
            for (const auto& u : unwanted)
                if (std::abs(out.dot(u)) > 1e-10) ok = false;
        } catch (const qss::DegenerateError&) {
        }

        std::vector<qss::Vec> gens;
        for (std::size_t i = 0; i < 1 + rng() % 4; ++i) gens.push_back(random_unit(rng, n));
        const qss::Subspace s = qss::span(gens);
        const qss::Mat gram = s.basis().transpose() * s.basis();
        if ((gram - qss::Mat::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff() > 1e-10) ok = false;
        std::vector<qss::Vec> columns;
        for (int c = 0; c < s.dim(); ++c) columns.push_back(s.basis().col(c));
        if (qss::span(columns).dim() != s.dim()) ok = false;

        const qss::Vec v = random_unit(rng, n);
        const qss::Vec p = qss::project(v, s);
        if ((qss::project(p, s) - p).norm() > 1e-10) ok = false;
        for (int c = 0; c < s.dim(); ++c)
            if (std::abs((v - p).dot(s.basis().col(c))) > 1e-10) ok = false;
    }

    // distributivity failure witness
    auto axis3 = [](Eigen::Index i) {
        qss::Vec v = qss::Vec::Zero(3);
        v[i] = 1.0;
        return v;
    };
    qss::Vec diag(3);
    diag << 1.0, 1.0, 0.0;
    diag.normalize();
    const qss::Subspace line_a = qss::span({axis3(0)});
    const qss::Subspace line_b = qss::span({axis3(1)});
    const qss::Subspace line_c = qss::span({diag});
    const qss::Subspace plane = qss::span({axis3(0), axis3(1)});
    if (!plane.contains(diag, 1e-10)) ok = false;
    const qss::Subspace c_and_plane = qss::meet(line_c, plane);
    if (c_and_plane.dim() != 1 || !line_c.contains(c_and_plane.basis().col(0), 1e-9)) ok = false;
    if (qss::meet(line_c, line_a).dim() != 0) ok = false;
    if (qss::meet(line_c, line_b).dim() != 0) ok = false;

    // overgeneration: a near-parallel independent triple spans all of 3-space
    qss::Vec d(3), e(3), f(3);
    d << 1.0, 0.0, 0.0;
    e << 1.0, 0.3, 0.0;
    f << 1.0, 0.0, 0.3;
    const qss::Subspace tight = qss::span({d, e, f});
    const qss::Subspace orthogonal = qss::span({axis3(0), axis3(1), axis3(2)});
    const double min_cos = std::min({d.normalized().dot(e.normalized()),
                                     d.normalized().dot(f.normalized()),
                                     e.normalized().dot(f.normalized())});
    if (tight.dim() != 3 || orthogonal.dim() != 3) ok = false;
    if (min_cos <= 0.9) ok = false;

    // the between-vector derives from its neighbours at tau 0.2
    qss::Vec between(3);
    between << 0.7, 0.7, 0.14;
    between.normalize();
    const auto derivation = qss::approx_derivable(between, {axis3(0), axis3(1)}, 0.2);
    if (!derivation.derivable) ok = false;
    if (std::abs(derivation.residual - 0.14) > 0.01) ok = false;

    const double elapsed = seconds_since(start);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "triple cosines >= %.3f span dim 3, derivation residual %.4f, %.2fs", min_cos,
                  derivation.residual, elapsed);
    report(7, "quantum-logic suite", ok && elapsed < 10.0, detail);
}

// --- criterion 8 ------------------------------------------------------------

void criterion_determinism() {
    testsupport::TempDir dir;
    std::string corpus_text;
    for (const auto& line : testsupport::iran_corpus()) corpus_text += line + "\n";
    const std::string corpus = dir.write("corpus.txt", corpus_text);
    bool ok = true;
    std::string detail = "hal, sym and density containers byte-identical";

    for (const std::string kind : {"hal", "sym"}) {
        const std::string out1 = (dir.path() / ("a-" + kind)).string();
        const std::string out2 = (dir.path() / ("b-" + kind)).string();
        if (testsupport::run_command(cli({"build", corpus, "-o", out1, "--kind", kind})).exit_code)
            ok = false;
        if (testsupport::run_command(cli({"build", corpus, "-o", out2, "--kind", kind})).exit_code)
            ok = false;
        if (dir.read("a-" + kind) != dir.read("b-" + kind)) {
            ok = false;
            detail = "rebuild of kind " + kind + " differed";
        }
    }

    for (int i = 0; i < 2; ++i) {
        const std::string name = "qds-" + std::to_string(i);
        const auto rc = testsupport::run_command(
            cli({"senses", "--corpus", corpus, "--word", "reagan", "--kmeans", "2", "--seed", "17",
                 "-o", (dir.path() / name).string()}));
        if (rc.exit_code) ok = false;
    }
    if (dir.read("qds-0") != dir.read("qds-1")) {
        ok = false;
        detail = "density container rebuild differed";
    }
    report(8, "byte-identical rebuilds", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli = argv[1];
    else
        g_cli = testsupport::cli_path();

    criterion_table1();
    criterion_merge_determinism();
    criterion_density_validity();
    criterion_projector_suite();
    criterion_collapse_oracle();
    criterion_spectral();
    criterion_qlogic();
    criterion_determinism();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
