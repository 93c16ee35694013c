#pragma once

/**
 * @file hecke.hpp
 * @brief Hecke-algebra action on V_n^{\otimes N} through the rescaled r-matrix.
 *
 * r(x_a x_a) = x_a x_a, r(x_a x_b) = q^{-1} x_b x_a for a < b, and
 * r(x_a x_b) = q^{-1} x_b x_a + (1 - q^{-2}) x_a x_b for a > b.
 * Generator indices are 1-based: r_i acts on sites i and i+1.
 */

#include "braidlab/deformation.hpp"
#include "braidlab/tensor_state.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace braidlab {

/// The n^2 x n^2 r-matrix in the basis x_a x_b with index a*n + b.
Eigen::MatrixXd r_matrix(int n, Deformation q);

TensorState apply_generator(const TensorState& state, int i, Deformation q);

/// Dense r_i = I_{n^{i-1}} (x) r (x) I_{n^{N-i-1}}, built independently of apply_generator.
Eigen::MatrixXd dense_generator(int n, int sites, int i, Deformation q);

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::vector<int> generators, int sites);

  const std::vector<int>& generators() const { return generators_; }
  std::size_t length() const { return generators_.size(); }
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<int> generators_;
};

/// Applies scale^len * r_{i_1} r_{i_2} ... r_{i_len} (rightmost factor first).
TensorState apply_braid_word(const TensorState& state, const BraidWord& word, Deformation q,
                             double scale = 1.0);

/// Y_N(z) = S_{N-1}(z) ... S_1(z), S_k(z) = 1 + z r_k + z^2 r_{k-1} r_k + ... + z^k r_1 ... r_k.
TensorState shuffle_apply(const TensorState& state, double z, Deformation q);
TensorState q_symmetrize(const TensorState& state, Deformation q);
TensorState q_antisymmetrize(const TensorState& state, Deformation q);

/// One reduced word per permutation of S_N (2 <= N <= 8), grouped by length:
/// result[l] holds the words of length l in lexicographic order. Each word is the
/// product c_{N-1} ... c_1 with c_k = t_{k-d+1} ... t_k read off the inversion table.
std::vector<std::vector<BraidWord>> reduced_words(int sites);

/// s_l = sum over reduced words of length l of (q r)_{word}.
TensorState word_sum_operator(int sites, int length, Deformation q, const TensorState& state);

struct CommutatorReport {
  double max_residual = 0.0;
  int worst_k = 0;
  int worst_l = 0;
};

/// Largest column norm of [s_k, s_l] over all 1 <= k < l <= N(N-1)/2, on the basis of V_n^{\otimes N}.
CommutatorReport conjecture_commutator_check(int sites, int n, Deformation q);

}  // namespace braidlab
