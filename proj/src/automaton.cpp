#include "braidlab/automaton.hpp"

#include "braidlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace braidlab {

namespace {

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string format_weight(std::complex<double> value) {
  if (value.imag() == 0.0) return format_number(value.real());
  if (value.real() == 0.0) return format_number(value.imag()) + "i";
  std::string imag = format_number(value.imag());
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return format_number(value.real()) + imag + "i";
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

double scale_of(const ComplexMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::combinatorial: return "combinatorial";
    case MatrixKind::stochastic: return "stochastic";
    case MatrixKind::unitary: return "unitary";
    case MatrixKind::general: return "general";
  }
  return "general";
}

MatrixKind parse_matrix_kind(const std::string& text) {
  if (text == "combinatorial") return MatrixKind::combinatorial;
  if (text == "stochastic") return MatrixKind::stochastic;
  if (text == "unitary") return MatrixKind::unitary;
  if (text == "general") return MatrixKind::general;
  throw ValidationError("unknown matrix kind '" + text + "'");
}

std::string kind_violation(const ComplexMatrix& entries, MatrixKind kind, double tolerance) {
  if (entries.rows() != entries.cols()) return "matrix is not square";
  if (kind == MatrixKind::general) return {};
  if (kind != MatrixKind::unitary && entries.imag().cwiseAbs().maxCoeff() > 0.0) {
    return "complex entries are only allowed for unitary matrices";
  }
  const Eigen::MatrixXd real = entries.real();
  for (Eigen::Index col = 0; col < entries.cols(); ++col) {
    if (kind == MatrixKind::combinatorial) {
      int ones = 0;
      for (Eigen::Index row = 0; row < entries.rows(); ++row) {
        const double v = real(row, col);
        if (v == 1.0) {
          ++ones;
        } else if (v != 0.0) {
          return "column " + std::to_string(col + 1) + " has an entry other than 0 or 1";
        }
      }
      if (ones > 1) return "column " + std::to_string(col + 1) + " has more than one 1";
    } else if (kind == MatrixKind::stochastic) {
      if (real.col(col).minCoeff() < -tolerance) {
        return "column " + std::to_string(col + 1) + " has a negative entry";
      }
      if (std::abs(real.col(col).sum() - 1.0) > tolerance) {
        return "column " + std::to_string(col + 1) + " does not sum to 1";
      }
    }
  }
  if (kind == MatrixKind::unitary) {
    const auto n = entries.rows();
    const double defect = (entries.adjoint() * entries - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > tolerance * scale_of(entries)) return "matrix is not unitary";
  }
  return {};
}

TransitionMatrix::TransitionMatrix(ComplexMatrix entries, MatrixKind kind, double tolerance)
    : entries_(std::move(entries)), kind_(kind) {
  if (const auto problem = kind_violation(entries_, kind_, tolerance); !problem.empty()) {
    throw ValidationError(to_string(kind_) + " transition matrix invalid: " + problem);
  }
}

TransitionMatrix TransitionMatrix::from_real(const Eigen::MatrixXd& entries, MatrixKind kind) {
  return TransitionMatrix(entries.cast<std::complex<double>>(), kind);
}

TransitionMatrix TransitionMatrix::identity(std::size_t n, MatrixKind kind) {
  const auto dim = static_cast<Eigen::Index>(n);
  return TransitionMatrix(ComplexMatrix::Identity(dim, dim), kind);
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& other) const {
  if (other.dimension() != dimension()) throw ValidationError("transition matrix dimensions differ");
  const MatrixKind kind = other.kind_ == kind_ ? kind_ : MatrixKind::general;
  ComplexMatrix product = entries_ * other.entries_;
  if (kind == MatrixKind::combinatorial) product = product.real().cast<std::complex<double>>();
  return TransitionMatrix(std::move(product), kind);
}

Automaton::Automaton(std::vector<std::string> alphabet, std::vector<TransitionMatrix> transitions,
                     MatrixKind kind, std::size_t start, std::set<std::size_t> accepting,
                     std::vector<std::string> state_labels)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      kind_(kind),
      start_(start),
      accepting_(std::move(accepting)),
      state_labels_(std::move(state_labels)) {
  if (alphabet_.empty()) throw ValidationError("alphabet must not be empty");
  if (transitions_.size() != alphabet_.size()) {
    throw ValidationError("need exactly one transition matrix per letter");
  }
  if (std::set<std::string>(alphabet_.begin(), alphabet_.end()).size() != alphabet_.size()) {
    throw ValidationError("duplicate letter label");
  }
  const std::size_t n = transitions_.front().dimension();
  if (n == 0) throw ValidationError("automaton needs at least one state");
  for (const auto& m : transitions_) {
    if (m.dimension() != n) throw ValidationError("transition matrices must all be n x n");
    if (m.kind() != kind_) throw ValidationError("transition matrix kind differs from automaton kind");
  }
  if (state_labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) state_labels_.push_back("q" + std::to_string(i + 1));
  }
  if (state_labels_.size() != n) throw ValidationError("state label count does not match matrix size");
  if (start_ >= n) throw ValidationError("start state out of range");
  for (std::size_t s : accepting_) {
    if (s >= n) throw ValidationError("accepting state out of range");
  }
}

const TransitionMatrix& Automaton::transition(std::size_t letter) const {
  if (letter >= transitions_.size()) throw ValidationError("letter index out of range");
  return transitions_[letter];
}

std::size_t Automaton::letter_index(const std::string& label) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), label);
  if (it == alphabet_.end()) throw ValidationError("unknown letter '" + label + "'");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t Automaton::state_index(const std::string& label) const {
  auto it = std::find(state_labels_.begin(), state_labels_.end(), label);
  if (it == state_labels_.end()) throw ValidationError("unknown state '" + label + "'");
  return static_cast<std::size_t>(it - state_labels_.begin());
}

LetterWord Automaton::parse_word(const std::string& text) const {
  LetterWord word;
  const bool single_chars = std::all_of(alphabet_.begin(), alphabet_.end(),
                                        [](const std::string& s) { return s.size() == 1; });
  if (single_chars) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
      word.push_back(letter_index(std::string(1, c)));
    }
    return word;
  }
  std::string token;
  auto flush = [&] {
    if (!token.empty()) word.push_back(letter_index(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return word;
}

std::string Automaton::format_word(const LetterWord& word) const {
  const bool single_chars = std::all_of(alphabet_.begin(), alphabet_.end(),
                                        [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_chars && i > 0) out.push_back(' ');
    out += alphabet_.at(word[i]);
  }
  return out;
}

void Automaton::check_word(const LetterWord& word) const {
  for (std::size_t letter : word) {
    if (letter >= alphabet_.size()) throw ValidationError("word uses a letter outside the alphabet");
  }
}

Automaton linearize(const TransitionTable& table) {
  if (table.states.empty()) throw ValidationError("transition table has no states");
  if (table.alphabet.empty()) throw ValidationError("transition table has no letters");
  std::map<std::string, std::size_t> state_pos;
  for (std::size_t i = 0; i < table.states.size(); ++i) {
    if (!state_pos.emplace(table.states[i], i).second) {
      throw ValidationError("duplicate state '" + table.states[i] + "'");
    }
  }
  std::map<std::string, std::size_t> letter_pos;
  for (std::size_t i = 0; i < table.alphabet.size(); ++i) {
    if (!letter_pos.emplace(table.alphabet[i], i).second) {
      throw ValidationError("duplicate letter '" + table.alphabet[i] + "'");
    }
  }
  auto lookup = [](const std::map<std::string, std::size_t>& index, const std::string& key,
                   const char* what) {
    auto it = index.find(key);
    if (it == index.end()) throw ValidationError(std::string("unknown ") + what + " '" + key + "'");
    return it->second;
  };

  const auto n = static_cast<Eigen::Index>(table.states.size());
  std::vector<Eigen::MatrixXd> matrices(table.alphabet.size(), Eigen::MatrixXd::Zero(n, n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& rule : table.rules) {
    const std::size_t from = lookup(state_pos, rule.from, "state");
    const std::size_t letter = lookup(letter_pos, rule.letter, "letter");
    if (!seen.emplace(from, letter).second) {
      throw ValidationError("duplicate transition for (" + rule.from + ", " + rule.letter + ")");
    }
    if (rule.to) {
      const std::size_t to = lookup(state_pos, *rule.to, "state");
      matrices[letter](static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)) = 1.0;
    }
  }
  std::vector<TransitionMatrix> transitions;
  for (const auto& m : matrices) transitions.push_back(TransitionMatrix::from_real(m, MatrixKind::combinatorial));
  std::set<std::size_t> accepting;
  for (const auto& label : table.accepting) accepting.insert(lookup(state_pos, label, "state"));
  return Automaton(table.alphabet, std::move(transitions), MatrixKind::combinatorial,
                   lookup(state_pos, table.start, "state"), std::move(accepting), table.states);
}

ComplexMatrix matrix_of(const Automaton& automaton, const LetterWord& word) {
  automaton.check_word(word);
  const auto n = static_cast<Eigen::Index>(automaton.n_states());
  ComplexMatrix product = ComplexMatrix::Identity(n, n);
  for (std::size_t letter : word) product = product * automaton.transitions_[letter].entries();
  return product;
}

ComplexVector run_word(const Automaton& automaton, const LetterWord& word) {
  automaton.check_word(word);
  ComplexVector state = ComplexVector::Zero(static_cast<Eigen::Index>(automaton.n_states()));
  state(static_cast<Eigen::Index>(automaton.start())) = 1.0;
  for (std::size_t letter : word) state = automaton.transitions_[letter].entries() * state;
  return state;
}

bool dfa_accepts(const Automaton& automaton, const LetterWord& word) {
  if (automaton.kind() != MatrixKind::combinatorial) {
    throw ValidationError("dfa_accepts requires a combinatorial automaton");
  }
  const ComplexVector state = run_word(automaton, word);
  for (std::size_t s : automaton.accepting()) {
    if (state(static_cast<Eigen::Index>(s)) == std::complex<double>(1.0, 0.0)) return true;
  }
  return false;
}

double acceptance_probability(const Automaton& automaton, const LetterWord& word) {
  const ComplexVector state = run_word(automaton, word);
  double total = 0.0;
  switch (automaton.kind()) {
    case MatrixKind::stochastic:
      for (std::size_t s : automaton.accepting()) total += state(static_cast<Eigen::Index>(s)).real();
      return total;
    case MatrixKind::unitary:
      for (std::size_t s : automaton.accepting()) total += std::norm(state(static_cast<Eigen::Index>(s)));
      return total;
    default:
      throw ValidationError("acceptance probability needs a stochastic or unitary automaton, got " +
                            to_string(automaton.kind()));
  }
}

std::vector<LetterWord> tree_order_enumerate(std::size_t alphabet_size, std::size_t max_len) {
  if (alphabet_size == 0) throw ValidationError("alphabet must not be empty");
  constexpr std::size_t kMaxWords = 10'000'000;
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    layer = checked_pow(alphabet_size, static_cast<int>(len));
    total += layer;
    require_within(total, kMaxWords, "tree order enumeration");
  }
  std::vector<LetterWord> words;
  words.reserve(total);
  words.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len) {
    LetterWord word(len, 0);
    // Odometer with the first letter as the fastest digit gives colexicographic order.
    while (true) {
      words.push_back(word);
      std::size_t pos = 0;
      while (pos < len && ++word[pos] == alphabet_size) word[pos++] = 0;
      if (pos == len) break;
    }
  }
  return words;
}

Automaton complete_with_sink(const Automaton& automaton, const std::string& sink_label) {
  if (automaton.kind() != MatrixKind::combinatorial) {
    throw ValidationError("sink completion applies to combinatorial automata");
  }
  const auto n = static_cast<Eigen::Index>(automaton.n_states());
  std::vector<TransitionMatrix> completed;
  for (std::size_t letter = 0; letter < automaton.alphabet().size(); ++letter) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
    m.topLeftCorner(n, n) = automaton.transition(letter).entries().real();
    for (Eigen::Index col = 0; col <= n; ++col) {
      if (m.col(col).sum() == 0.0) m(n, col) = 1.0;
    }
    completed.push_back(TransitionMatrix::from_real(m, MatrixKind::combinatorial));
  }
  auto labels = automaton.state_labels();
  labels.push_back(sink_label);
  return Automaton(automaton.alphabet(), std::move(completed), MatrixKind::combinatorial,
                   automaton.start(), automaton.accepting(), std::move(labels));
}

std::string to_dot(const Automaton& automaton, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  const auto& labels = automaton.state_labels();
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const bool accepting = automaton.accepting().count(s) > 0;
    out << "  " << quoted(labels[s]) << " [shape=" << (accepting ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> " << quoted(labels[automaton.start()]) << ";\n";
  for (std::size_t letter = 0; letter < automaton.alphabet().size(); ++letter) {
    const ComplexMatrix& m = automaton.transition(letter).entries();
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      for (Eigen::Index row = 0; row < m.rows(); ++row) {
        const std::complex<double> w = m(row, col);
        if (w == 0.0) continue;
        std::string label = automaton.alphabet()[letter];
        if (w != 1.0) label += ";" + format_weight(w);
        out << "  " << quoted(labels[static_cast<std::size_t>(col)]) << " -> "
            << quoted(labels[static_cast<std::size_t>(row)]) << " [label=" << quoted(label) << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

TransitionTable example_table(const std::string& name) {
  if (name == "exa01") {
    return TransitionTable{
        {"q1", "q2", "q3"},
        {"a", "b"},
        {{"q1", "a", "q1"}, {"q1", "b", "q2"}, {"q2", "a", "q3"},
         {"q2", "b", "q2"}, {"q3", "a", "q2"}, {"q3", "b", "q2"}},
        "q1",
        {"q2"}};
  }
  if (name == "e1") {
    return TransitionTable{
        {"q1", "q2", "q3", "q4"},
        {"a", "b"},
        {{"q1", "a", "q2"}, {"q1", "b", "q3"}, {"q2", "a", "q4"},
         {"q2", "b", "q2"}, {"q3", "a", "q4"}, {"q3", "b", "q3"}},
        "q1",
        {"q4"}};
  }
  throw ValidationError("unknown example automaton '" + name + "' (known: exa01, e1)");
}

}  // namespace braidlab
