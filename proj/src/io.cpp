#include "qss/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qss {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void append_vocab(std::string& out, const Vocabulary& vocab) {
    for (const auto& word : vocab.words()) {
        out += word;
        out += '\n';
    }
}

void append_states(std::string& out, const Vocabulary& vocab,
                   std::span<const DensityState> states) {
    for (const auto& state : states) {
        out += "QDS1 ";
        out += vocab.word(state.word());
        out += ' ';
        out += std::to_string(state.senses().size());
        out += '\n';
        for (const auto& sense : state.senses()) {
            out += sense.label;
            out += '\n';
            out += format_real(sense.probability);
            for (Eigen::Index i = 0; i < sense.state_vector.size(); ++i) {
                out += ' ';
                out += format_real(sense.state_vector[i]);
            }
            out += '\n';
        }
        out += "target";
        for (Eigen::Index i = 0; i < state.target().size(); ++i) {
            out += ' ';
            out += format_real(state.target()[i]);
        }
        out += '\n';
    }
}

}  // namespace

std::string serialize_hal(const HalMatrix& hal) {
    std::string out = "QSS1 " + std::to_string(hal.dim()) + " hal\n";
    append_vocab(out, *hal.vocab());
    for (const auto& [cell, w] : hal.entries()) {
        out += std::to_string(cell.first);
        out += ' ';
        out += std::to_string(cell.second);
        out += ' ';
        out += std::to_string(w);
        out += '\n';
    }
    return out;
}

std::string serialize_space(const SemanticSpace& space, std::span<const DensityState> states) {
    std::string out = "QSS1 " + std::to_string(space.dim()) + " sym\n";
    append_vocab(out, *space.vocab());
    for (const auto& [cell, v] : space.entries()) {
        out += std::to_string(cell.first);
        out += ' ';
        out += std::to_string(cell.second);
        out += ' ';
        out += format_real(v);
        out += '\n';
    }
    append_states(out, *space.vocab(), states);
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failure on '" + path + "'");
}

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ > text_.size()) return false;
        if (pos_ == text_.size()) {
            pos_ = text_.size() + 1;
            return false;  // trailing newline already consumed
        }
        const std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size() + 1;
        } else {
            line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
        }
        ++lineno_;
        return true;
    }

    std::size_t lineno() const noexcept { return lineno_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t lineno_ = 0;
};

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw IoError("line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, end - pos));
        pos = end + 1;
    }
    return fields;
}

long long parse_int(std::string_view field, std::size_t lineno, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        fail(lineno, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return value;
}

double parse_double(std::string_view field, std::size_t lineno, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value))
        fail(lineno, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return value;
}

Vec parse_vector(std::span<const std::string_view> fields, std::size_t n, std::size_t lineno) {
    if (fields.size() != n)
        fail(lineno, "expected " + std::to_string(n) + " components, got " +
                         std::to_string(fields.size()));
    Vec v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        v[static_cast<Eigen::Index>(i)] = parse_double(fields[i], lineno, "component");
    return v;
}

}  // namespace

void save_hal(const std::string& path, const HalMatrix& hal) {
    write_file(path, serialize_hal(hal));
}

void save_space(const std::string& path, const SemanticSpace& space,
                std::span<const DensityState> states) {
    write_file(path, serialize_space(space, states));
}

Container parse_container(std::string_view text) {
    LineReader reader(text);
    std::string_view line;

    if (!reader.next(line)) throw IoError("empty container");
    auto header = split_fields(line);
    if (header.size() != 3 || header[0] != "QSS1")
        fail(reader.lineno(), "unsupported container version (expected 'QSS1 <n> <kind>')");
    const long long n_signed = parse_int(header[1], reader.lineno(), "dimension");
    if (n_signed < 0) fail(reader.lineno(), "negative dimension");
    const std::size_t n = static_cast<std::size_t>(n_signed);
    std::string kind(header[2]);
    if (kind != "hal" && kind != "sym") fail(reader.lineno(), "unknown kind '" + kind + "'");

    auto vocab = std::make_shared<Vocabulary>();
    for (std::size_t i = 0; i < n; ++i) {
        if (!reader.next(line)) fail(reader.lineno() + 1, "unexpected end of vocabulary");
        if (line.empty()) fail(reader.lineno(), "empty vocabulary entry");
        const std::string word(line);
        if (vocab->find(word)) fail(reader.lineno(), "duplicate vocabulary entry '" + word + "'");
        vocab->add(word);
    }

    Container container;
    container.kind = kind;
    container.vocab = vocab;

    // canonical order is enforced while scanning, so the maps can be built
    // from the already-sorted runs in linear time
    std::vector<std::pair<Cell, std::int64_t>> hal_cells;
    std::vector<std::pair<Cell, double>> sym_cells;

    Cell previous{-1, -1};
    bool pending = false;
    std::string_view pending_line;

    while (reader.next(line)) {
        auto fields = split_fields(line);
        if (!fields.empty() && fields[0] == "QDS1") {
            pending = true;
            pending_line = line;
            break;
        }
        if (fields.size() != 3) fail(reader.lineno(), "malformed triple");
        const long long i = parse_int(fields[0], reader.lineno(), "row index");
        const long long j = parse_int(fields[1], reader.lineno(), "column index");
        if (i < 0 || j < 0 || i >= n_signed || j >= n_signed)
            fail(reader.lineno(), "index out of range");
        const Cell cell{static_cast<WordId>(i), static_cast<WordId>(j)};
        if (!(previous < cell)) fail(reader.lineno(), "triples out of canonical row-major order");
        previous = cell;
        if (kind == "hal") {
            const long long w = parse_int(fields[2], reader.lineno(), "weight");
            if (w <= 0) fail(reader.lineno(), "non-positive weight");
            hal_cells.emplace_back(cell, w);
        } else {
            const double v = parse_double(fields[2], reader.lineno(), "value");
            if (!(v > 0.0)) fail(reader.lineno(), "non-positive value");
            sym_cells.emplace_back(cell, v);
        }
    }

    if (kind == "hal")
        container.hal.emplace(n, container.vocab,
                              std::map<Cell, std::int64_t>(hal_cells.begin(), hal_cells.end()));
    else
        container.space.emplace(n, container.vocab,
                                std::map<Cell, double>(sym_cells.begin(), sym_cells.end()));

    if (container.space) {
        for (const auto& [cell, v] : container.space->entries())
            if (container.space->at(cell.second, cell.first) != v)
                throw IoError("asymmetric entries in sym container");
    }

    // density-state sections
    while (pending || reader.next(line)) {
        if (pending) {
            line = pending_line;
            pending = false;
        }
        auto fields = split_fields(line);
        if (fields.size() != 3 || fields[0] != "QDS1")
            fail(reader.lineno(), "expected 'QDS1 <word> <m>' section header");
        const std::string word(fields[1]);
        const auto word_id = vocab->find(word);
        if (!word_id) fail(reader.lineno(), "density state for unknown word '" + word + "'");
        for (const auto& existing : container.states)
            if (existing.word() == *word_id)
                fail(reader.lineno(), "duplicate density state for '" + word + "'");
        const long long m = parse_int(fields[2], reader.lineno(), "sense count");
        if (m < 1) fail(reader.lineno(), "sense count must be >= 1");

        std::vector<Sense> senses;
        senses.reserve(static_cast<std::size_t>(m));
        for (long long s = 0; s < m; ++s) {
            if (!reader.next(line)) fail(reader.lineno() + 1, "unexpected end of sense section");
            if (line.empty()) fail(reader.lineno(), "empty sense label");
            Sense sense;
            sense.label = std::string(line);
            if (!reader.next(line)) fail(reader.lineno() + 1, "unexpected end of sense section");
            auto values = split_fields(line);
            if (values.size() != n + 1) fail(reader.lineno(), "malformed sense vector line");
            sense.probability = parse_double(values[0], reader.lineno(), "probability");
            sense.state_vector = parse_vector({values.data() + 1, values.size() - 1}, n, reader.lineno());
            senses.push_back(std::move(sense));
        }
        if (!reader.next(line)) fail(reader.lineno() + 1, "missing target line");
        auto values = split_fields(line);
        if (values.empty() || values[0] != "target") fail(reader.lineno(), "missing target line");
        Vec target = parse_vector({values.data() + 1, values.size() - 1}, n, reader.lineno());
        const std::size_t section_end = reader.lineno();
        try {
            container.states.push_back(
                DensityState::from_senses(*word_id, std::move(senses), std::move(target)));
        } catch (const UsageError& e) {
            fail(section_end, std::string("invalid density state: ") + e.what());
        }
    }

    return container;
}

Container load_container(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return parse_container(buf.str());
}

Container load_as_space(const std::string& path) {
    Container container = load_container(path);
    if (container.hal) {
        container.space.emplace(symmetrize(*container.hal));
        container.hal.reset();
    }
    return container;
}

}  // namespace qss
