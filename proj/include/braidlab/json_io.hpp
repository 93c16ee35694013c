#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings shared by the command-line tool: automata, quandle tables, numbers.
 *
 * Every payload carries "schema": kSchemaVersion. Indices are 1-based in JSON.
 */

#include "braidlab/automaton.hpp"
#include "braidlab/quandle.hpp"

#include <json.hpp>

#include <complex>
#include <string>

namespace braidlab {

inline constexpr const char* kSchemaVersion = "braidlab/1";

/// Kind check applied to parsed matrices, loose enough for entries printed with 12 digits.
inline constexpr double kSerializedKindTolerance = 1e-10;

/// The double nearest to value printed with %.12g, so serialization shows at most 12 significant digits.
double round_significant(double value);

nlohmann::json real_to_json(double value);
nlohmann::json complex_to_json(std::complex<double> value);
std::complex<double> complex_from_json(const nlohmann::json& node);

nlohmann::json automaton_to_json(const Automaton& automaton);
Automaton automaton_from_json(const nlohmann::json& node);

nlohmann::json quandle_table_to_json(const QuandleTable& table);
QuandleTable quandle_table_from_json(const nlohmann::json& node);

}  // namespace braidlab
