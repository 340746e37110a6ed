#pragma once

#include "efa/algebra.hpp"
#include "efa/structure.hpp"
#include "efa/system.hpp"

#include <optional>
#include <string>

namespace efa {

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_ = 1)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                             ": " + msg),
          line(line_), column(column_) {}
};

enum class DocKind { system, series, algebra };

struct InputDocument {
    DocKind kind;
    std::optional<CorrelationSystem> system;
    std::optional<StructureSeries> series;
    std::optional<ExtendedFrobeniusAlgebra> algebra;
};

// Line-oriented grammar with '#' comments; see README for the full format.
// Duplicate entries that disagree after canonicalization are errors.
InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

std::string print_document(const InputDocument& doc);

std::string print_system(const CorrelationSystem& sys);
std::string print_series(const StructureSeries& ss);
std::string print_algebra(const ExtendedFrobeniusAlgebra& alg);

} // namespace efa
