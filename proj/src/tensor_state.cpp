#include "braidlab/tensor_state.hpp"

#include "braidlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace braidlab {

TensorState::TensorState(int n, int sites) : n_(n), sites_(sites) {
  if (n < 1) throw ValidationError("alphabet size must be positive");
  if (sites < 1) throw ValidationError("number of tensor sites must be positive");
}

TensorState TensorState::basis(int n, const Word& word) {
  TensorState state(n, static_cast<int>(word.size()));
  state.add(word, 1.0);
  return state;
}

void TensorState::check_word(const Word& word) const {
  if (static_cast<int>(word.size()) != sites_) {
    throw ValidationError("word length " + std::to_string(word.size()) + " does not match " +
                          std::to_string(sites_) + " sites");
  }
  for (int letter : word) {
    if (letter < 0 || letter >= n_) throw ValidationError("letter outside alphabet");
  }
}

void TensorState::check_compatible(const TensorState& other) const {
  if (other.n_ != n_ || other.sites_ != sites_) {
    throw ValidationError("tensor states live in different spaces");
  }
}

void TensorState::add(const Word& word, double amplitude) {
  if (amplitude == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(word, amplitude);
  if (inserted) {
    check_word(word);
    return;
  }
  it->second += amplitude;
  if (it->second == 0.0) terms_.erase(it);
}

double TensorState::amplitude(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0.0 : it->second;
}

double TensorState::norm() const { return std::sqrt(dot(*this)); }

double TensorState::dot(const TensorState& other) const {
  check_compatible(other);
  const auto& small = size() <= other.size() ? terms_ : other.terms_;
  const auto& large = size() <= other.size() ? other.terms_ : terms_;
  double sum = 0.0;
  for (const auto& [word, value] : small) {
    auto it = large.find(word);
    if (it != large.end()) sum += value * it->second;
  }
  return sum;
}

void TensorState::prune(double tolerance) {
  std::erase_if(terms_, [tolerance](const auto& term) { return std::abs(term.second) <= tolerance; });
}

TensorState& TensorState::operator+=(const TensorState& other) {
  check_compatible(other);
  for (const auto& [word, value] : other.terms_) add(word, value);
  return *this;
}

TensorState& TensorState::operator-=(const TensorState& other) {
  check_compatible(other);
  for (const auto& [word, value] : other.terms_) add(word, -value);
  return *this;
}

TensorState& TensorState::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= factor;
  return *this;
}

std::size_t tensor_dimension(int n, int sites) {
  return checked_pow(static_cast<std::size_t>(n), sites);
}

std::size_t word_index(int n, const Word& word) {
  std::size_t index = 0;
  for (int letter : word) index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(letter);
  return index;
}

Word word_at(int n, int sites, std::size_t index) {
  Word word(static_cast<std::size_t>(sites));
  for (int pos = sites - 1; pos >= 0; --pos) {
    word[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return word;
}

std::vector<Word> all_words(int n, int sites) {
  const std::size_t dim = tensor_dimension(n, sites);
  std::vector<Word> words;
  words.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) words.push_back(word_at(n, sites, i));
  return words;
}

std::vector<Word> words_with_content(const std::vector<int>& content) {
  Word word;
  for (std::size_t letter = 0; letter < content.size(); ++letter) {
    if (content[letter] < 0) throw ValidationError("negative letter multiplicity");
    word.insert(word.end(), static_cast<std::size_t>(content[letter]), static_cast<int>(letter));
  }
  std::vector<Word> words;
  if (word.empty()) return words;
  do {
    words.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return words;
}

std::vector<int> content_of(int n, const Word& word) {
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  for (int letter : word) ++content[static_cast<std::size_t>(letter)];
  return content;
}

Eigen::VectorXd to_dense(const TensorState& state) {
  const std::size_t dim = tensor_dimension(state.alphabet_size(), state.sites());
  Eigen::VectorXd dense = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [word, value] : state.terms()) {
    dense(static_cast<Eigen::Index>(word_index(state.alphabet_size(), word))) = value;
  }
  return dense;
}

TensorState from_dense(int n, int sites, const Eigen::VectorXd& amplitudes, double tolerance) {
  if (static_cast<std::size_t>(amplitudes.size()) != tensor_dimension(n, sites)) {
    throw ValidationError("dense vector has the wrong dimension");
  }
  TensorState state(n, sites);
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (std::abs(amplitudes(i)) > tolerance) {
      state.add(word_at(n, sites, static_cast<std::size_t>(i)), amplitudes(i));
    }
  }
  return state;
}

Eigen::VectorXd coordinates(const TensorState& state, const std::vector<Word>& basis,
                            double leak_tolerance) {
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  std::map<Word, Eigen::Index> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], static_cast<Eigen::Index>(i));
  for (const auto& [word, value] : state.terms()) {
    auto it = position.find(word);
    if (it == position.end()) {
      if (std::abs(value) > leak_tolerance) {
        throw ValidationError("state has support outside the requested basis");
      }
      continue;
    }
    coords(it->second) = value;
  }
  return coords;
}

TensorState combination(int n, const std::vector<Word>& basis, const Eigen::VectorXd& coefficients) {
  if (basis.empty()) throw ValidationError("empty basis");
  TensorState state(n, static_cast<int>(basis.front().size()));
  for (std::size_t i = 0; i < basis.size(); ++i) state.add(basis[i], coefficients(static_cast<Eigen::Index>(i)));
  return state;
}

std::string format_word(int n, const Word& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (n > 9 && i > 0) out << ',';
    out << word[i] + 1;
  }
  return out.str();
}

Word parse_word(int n, const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == 'x' || c == 'X' || std::isspace(static_cast<unsigned char>(c))) {
      cleaned.push_back(',');
    } else {
      cleaned.push_back(c);
    }
  }
  const bool separated = cleaned.find(',') != std::string::npos;
  std::vector<std::string> tokens;
  if (separated) {
    std::istringstream in(cleaned);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) tokens.push_back(token);
    }
  } else {
    for (char c : cleaned) tokens.emplace_back(1, c);
  }
  if (tokens.empty()) throw ValidationError("empty word '" + text + "'");
  Word word;
  for (const auto& token : tokens) {
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ValidationError("invalid letter '" + token + "' in word '" + text + "'");
    }
    const int letter = std::stoi(token);
    if (letter < 1 || letter > n) {
      throw ValidationError("letter " + token + " outside alphabet [1," + std::to_string(n) + "]");
    }
    word.push_back(letter - 1);
  }
  return word;
}

}  // namespace braidlab
