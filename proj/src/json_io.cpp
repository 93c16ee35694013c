#include "braidlab/json_io.hpp"

#include "braidlab/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace braidlab {

using nlohmann::json;

double round_significant(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return std::strtod(buffer, nullptr);
}

json real_to_json(double value) {
  const double rounded = round_significant(value);
  return rounded == 0.0 ? json(0.0) : json(rounded);
}

json complex_to_json(std::complex<double> value) {
  return json{{"re", real_to_json(value.real())}, {"im", real_to_json(value.imag())}};
}

std::complex<double> complex_from_json(const json& node) {
  if (node.is_number()) return {node.get<double>(), 0.0};
  if (node.is_object() && node.contains("re") && node.contains("im")) {
    return {node.at("re").get<double>(), node.at("im").get<double>()};
  }
  throw ValidationError("expected a number or an {re, im} object");
}

json automaton_to_json(const Automaton& automaton) {
  const bool complex_entries = automaton.kind() == MatrixKind::unitary;
  json matrices = json::object();
  for (std::size_t letter = 0; letter < automaton.alphabet().size(); ++letter) {
    const auto& m = automaton.transition(letter).entries();
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        row.push_back(complex_entries ? complex_to_json(m(r, c)) : real_to_json(m(r, c).real()));
      }
      rows.push_back(std::move(row));
    }
    matrices[automaton.alphabet()[letter]] = std::move(rows);
  }
  json accepting = json::array();
  for (std::size_t s : automaton.accepting()) accepting.push_back(s + 1);
  return json{{"schema", kSchemaVersion},
              {"states", automaton.state_labels()},
              {"alphabet", automaton.alphabet()},
              {"kind", to_string(automaton.kind())},
              {"matrices", std::move(matrices)},
              {"start", automaton.start() + 1},
              {"accepting", std::move(accepting)}};
}

Automaton automaton_from_json(const json& node) {
  try {
    const auto states = node.at("states").get<std::vector<std::string>>();
    const auto alphabet = node.at("alphabet").get<std::vector<std::string>>();
    const MatrixKind kind = parse_matrix_kind(node.at("kind").get<std::string>());
    const auto n = static_cast<Eigen::Index>(states.size());
    std::vector<TransitionMatrix> transitions;
    for (const auto& letter : alphabet) {
      const json& rows = node.at("matrices").at(letter);
      if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
        throw ValidationError("matrix for letter '" + letter + "' must have one row per state");
      }
      ComplexMatrix m(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        const json& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
          throw ValidationError("matrix for letter '" + letter + "' must be square");
        }
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
      }
      transitions.emplace_back(std::move(m), kind, kSerializedKindTolerance);
    }
    const auto start = node.at("start").get<std::size_t>();
    if (start < 1) throw ValidationError("start index is 1-based");
    std::set<std::size_t> accepting;
    for (const auto& a : node.at("accepting")) {
      const auto index = a.get<std::size_t>();
      if (index < 1) throw ValidationError("accepting indices are 1-based");
      accepting.insert(index - 1);
    }
    return Automaton(alphabet, std::move(transitions), kind, start - 1, std::move(accepting), states);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed automaton JSON: ") + e.what());
  }
}

json quandle_table_to_json(const QuandleTable& table) {
  json op = json::array();
  for (int v : table.entries()) op.push_back(v + 1);
  return json{{"schema", kSchemaVersion},
              {"n", table.size()},
              {"op", std::move(op)},
              {"indexing", "1-based; x_1 corresponds to residue 0"}};
}

QuandleTable quandle_table_from_json(const json& node) {
  try {
    const int n = node.at("n").get<int>();
    std::vector<int> op;
    for (const auto& v : node.at("op")) op.push_back(v.get<int>() - 1);
    return QuandleTable(n, std::move(op));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed quandle table JSON: ") + e.what());
  }
}

}  // namespace braidlab
