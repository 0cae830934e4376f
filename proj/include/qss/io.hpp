#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qss/hal.hpp"
#include "qss/state.hpp"

namespace qss {

// Container format, one matrix per file plus any number of density-state
// sections. Serialization is deterministic: identical inputs produce
// byte-identical files.
//
//   QSS1 <n> <kind>           kind: hal | sym
//   <word>                    n vocabulary lines in index order
//   <i> <j> <w>               sparse triples, row-major ascending (i then j)
//   QDS1 <word> <m>           density state for <word> with m senses
//   <label>                   per sense: label line,
//   <p> <v_1> ... <v_n>       then probability and dense state vector
//   target <t_1> ... <t_n>    the word's own unit ket
//
// Counts are written as integers; real values use 17 significant digits so
// loading and re-serializing round-trips exactly. Loading rejects unknown
// versions and non-canonical triple order.

struct Container {
    std::string kind;
    VocabPtr vocab;
    std::optional<HalMatrix> hal;        // kind == "hal"
    std::optional<SemanticSpace> space;  // kind == "sym"
    std::vector<DensityState> states;
};

std::string serialize_hal(const HalMatrix& hal);
std::string serialize_space(const SemanticSpace& space, std::span<const DensityState> states = {});

void save_hal(const std::string& path, const HalMatrix& hal);
void save_space(const std::string& path, const SemanticSpace& space,
                std::span<const DensityState> states = {});

Container parse_container(std::string_view text);
Container load_container(const std::string& path);

// Loads either kind and guarantees `space` is set (hal files are symmetrized).
Container load_as_space(const std::string& path);

// %.17g: shortest form that still round-trips doubles exactly.
std::string format_real(double v);

}  // namespace qss
