#pragma once

/**
 * @file tensor_state.hpp
 * @brief Sparse vectors in V_n^{\otimes N} keyed by words over a 0-indexed alphabet.
 *
 * Letter `a` in a Word stands for the basis vector x_{a+1}. Dense conversions use
 * the lexicographic index sum_i w_i n^{N-1-i}.
 */

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace braidlab {

using Word = std::vector<int>;

class TensorState {
 public:
  using Terms = std::map<Word, double>;

  TensorState(int n, int sites);

  static TensorState basis(int n, const Word& word);

  int alphabet_size() const { return n_; }
  int sites() const { return sites_; }

  /// Adds `amplitude` to the coefficient of `word`; entries that cancel to zero are erased.
  void add(const Word& word, double amplitude);
  double amplitude(const Word& word) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double norm() const;
  double dot(const TensorState& other) const;

  /// Drops entries with magnitude at most `tolerance`.
  void prune(double tolerance);

  TensorState& operator+=(const TensorState& other);
  TensorState& operator-=(const TensorState& other);
  TensorState& operator*=(double factor);

  friend TensorState operator+(TensorState lhs, const TensorState& rhs) { return lhs += rhs; }
  friend TensorState operator-(TensorState lhs, const TensorState& rhs) { return lhs -= rhs; }
  friend TensorState operator*(double factor, TensorState state) { return state *= factor; }
  friend TensorState operator*(TensorState state, double factor) { return state *= factor; }

 private:
  void check_compatible(const TensorState& other) const;
  void check_word(const Word& word) const;

  int n_;
  int sites_;
  Terms terms_;
};

/// Number of basis words n^N, with overflow checking.
std::size_t tensor_dimension(int n, int sites);

std::size_t word_index(int n, const Word& word);
Word word_at(int n, int sites, std::size_t index);

/// All words of length `sites` in lexicographic order.
std::vector<Word> all_words(int n, int sites);

/// Words with prescribed letter content, lexicographic order. content[a] counts letter a.
std::vector<Word> words_with_content(const std::vector<int>& content);

std::vector<int> content_of(int n, const Word& word);

Eigen::VectorXd to_dense(const TensorState& state);
TensorState from_dense(int n, int sites, const Eigen::VectorXd& amplitudes, double tolerance = 0.0);

/// Coordinates of `state` on an explicit list of basis words; throws if support leaks outside.
Eigen::VectorXd coordinates(const TensorState& state, const std::vector<Word>& basis,
                            double leak_tolerance);
TensorState combination(int n, const std::vector<Word>& basis, const Eigen::VectorXd& coefficients);

/// 1-indexed rendering: digits concatenated when n <= 9, comma separated otherwise.
std::string format_word(int n, const Word& word);

/// Parses "122", "1,2,2" or "x1x2x2" (1-indexed letters) into a 0-indexed Word.
Word parse_word(int n, const std::string& text);

}  // namespace braidlab
