#pragma once

/**
 * @file automaton.hpp
 * @brief Linearized finite automata: states are basis vectors, letters act by matrices.
 *
 * State and letter indices are 0-based in this API. JSON and DOT output use the
 * state labels (default q1, q2, ...) and 1-based indices.
 *
 * Orientation: matrix_of(w) = M_{w_1} M_{w_2} ... M_{w_k}, so that
 * matrix_of(uv) = matrix_of(u) matrix_of(v). run_word reads w left to right and
 * left-multiplies, giving M_{w_k} ... M_{w_1} e_start = matrix_of(reverse(w)) e_start.
 */

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace braidlab {

enum class MatrixKind { combinatorial, stochastic, unitary, general };

std::string to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(const std::string& text);

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Relative tolerance used when validating a matrix against its kind.
inline constexpr double kKindTolerance = 1e-12;

/// Returns an empty string when `entries` satisfies `kind`, otherwise a description of the violation.
std::string kind_violation(const ComplexMatrix& entries, MatrixKind kind,
                           double tolerance = kKindTolerance);

class TransitionMatrix {
 public:
  TransitionMatrix(ComplexMatrix entries, MatrixKind kind, double tolerance = kKindTolerance);
  static TransitionMatrix from_real(const Eigen::MatrixXd& entries, MatrixKind kind);
  static TransitionMatrix identity(std::size_t n, MatrixKind kind);

  const ComplexMatrix& entries() const { return entries_; }
  MatrixKind kind() const { return kind_; }
  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }

  /// Product this * other; throws ValidationError if the result leaves the kind.
  TransitionMatrix operator*(const TransitionMatrix& other) const;

 private:
  ComplexMatrix entries_;
  MatrixKind kind_;
};

using LetterWord = std::vector<std::size_t>;

class Automaton {
 public:
  Automaton(std::vector<std::string> alphabet, std::vector<TransitionMatrix> transitions,
            MatrixKind kind, std::size_t start, std::set<std::size_t> accepting,
            std::vector<std::string> state_labels = {});

  std::size_t n_states() const { return state_labels_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& state_labels() const { return state_labels_; }
  MatrixKind kind() const { return kind_; }
  std::size_t start() const { return start_; }
  const std::set<std::size_t>& accepting() const { return accepting_; }
  const TransitionMatrix& transition(std::size_t letter) const;
  std::size_t letter_index(const std::string& label) const;
  std::size_t state_index(const std::string& label) const;

  /// Splits text into letters: per character when every label is one character,
  /// otherwise on whitespace or commas. The empty string is the empty word.
  LetterWord parse_word(const std::string& text) const;
  std::string format_word(const LetterWord& word) const;

 private:
  void check_word(const LetterWord& word) const;
  friend ComplexMatrix matrix_of(const Automaton&, const LetterWord&);
  friend ComplexVector run_word(const Automaton&, const LetterWord&);

  std::vector<std::string> alphabet_;
  std::vector<TransitionMatrix> transitions_;
  MatrixKind kind_;
  std::size_t start_;
  std::set<std::size_t> accepting_;
  std::vector<std::string> state_labels_;
};

struct TransitionRule {
  std::string from;
  std::string letter;
  std::optional<std::string> to;  ///< nullopt marks an explicitly undefined transition
};

struct TransitionTable {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<TransitionRule> rules;
  std::string start;
  std::vector<std::string> accepting;
};

/// Builds combinatorial matrices with (M_a)_{x,y} = 1 iff delta_a(y) = x.
Automaton linearize(const TransitionTable& table);

ComplexMatrix matrix_of(const Automaton& automaton, const LetterWord& word);
ComplexVector run_word(const Automaton& automaton, const LetterWord& word);
bool dfa_accepts(const Automaton& automaton, const LetterWord& word);

/// Stochastic: sum over accepting states of the final distribution.
/// Unitary: sum over accepting states of |amplitude|^2.
double acceptance_probability(const Automaton& automaton, const LetterWord& word);

/// Words up to `max_len` letters, by length and then colexicographically
/// (the last letter varies slowest), starting with the empty word.
std::vector<LetterWord> tree_order_enumerate(std::size_t alphabet_size, std::size_t max_len);

/// Adds a sink state that absorbs every undefined transition of a combinatorial automaton.
Automaton complete_with_sink(const Automaton& automaton, const std::string& sink_label = "sink");

std::string to_dot(const Automaton& automaton, const std::string& graph_name = "automaton");

/// Transition tables of the worked examples: "exa01" (3 states) and "e1" (4 states).
TransitionTable example_table(const std::string& name);

}  // namespace braidlab
