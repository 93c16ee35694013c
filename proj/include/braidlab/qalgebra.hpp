#pragma once

/**
 * @file qalgebra.hpp
 * @brief N-fold coproduct action of U_q(gl_n) on V_n^{\otimes N}, q-Dicke states and the crystal limit.
 *
 * Fundamental representation: e_j sends x_j to x_{j+1}, f_j sends x_{j+1} to x_j,
 * s_j = e_{jj} - e_{j+1,j+1}. The coproduct places q^{-s_j/2} on every site left of
 * the acting site and q^{s_j/2} on every site to its right. Indices j are 1-based.
 */

#include "braidlab/automaton.hpp"
#include "braidlab/deformation.hpp"
#include "braidlab/tensor_state.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidlab {

TensorState apply_E(int j, const TensorState& state, Deformation q);
TensorState apply_F(int j, const TensorState& state, Deformation q);
/// q^{H_j} = q^{Eps_j - Eps_{j+1}}; the `power` argument gives q^{power * H_j}.
TensorState apply_qH(int j, const TensorState& state, Deformation q, int power = 1);
TensorState apply_qEps(int j, const TensorState& state, Deformation q);

/// Letter multiplicities (m_1, ..., m_n) of a q-symmetric state.
class DickeLabel {
 public:
  DickeLabel(std::vector<int> multiplicities, int sites);

  const std::vector<int>& multiplicities() const { return m_; }
  int alphabet_size() const { return static_cast<int>(m_.size()); }
  int sites() const { return sites_; }
  int operator[](int letter) const { return m_[static_cast<std::size_t>(letter)]; }

  /// The ordered word x_1^{m_1} x_2^{m_2} ... x_n^{m_n}.
  Word ordered_word() const;
  std::string to_string() const;

  friend bool operator==(const DickeLabel&, const DickeLabel&) = default;
  friend auto operator<=>(const DickeLabel&, const DickeLabel&) = default;

 private:
  std::vector<int> m_;
  int sites_;
};

/// All labels with n entries summing to N, ordered as (N,0,..,0) first.
std::vector<DickeLabel> dicke_labels(int n, int sites);

/// Norm of Y_N(q^2)(ordered word) / prod [[m_i]]_q!, i.e. sqrt([[N]]_q! / prod [[m_i]]_q!).
double dicke_norm(const DickeLabel& label, Deformation q);

/// Unit-norm q-symmetric state.
TensorState q_dicke(const DickeLabel& label, Deformation q);

struct ActionCheck {
  std::string operation;            ///< "E", "F" or "qH"
  std::optional<DickeLabel> target; ///< nullopt when the operator annihilates the state
  double expected_coefficient = 0.0;
  double observed_coefficient = 0.0;
  double residual = 0.0;            ///< norm of (observed image - expected image)
};

struct CanonicalActionReport {
  DickeLabel label;
  int j = 0;
  std::vector<ActionCheck> checks;
  double max_residual() const;
};

/// Checks E_j, F_j and q^{H_j} on the q-Dicke state of `label` against
/// E_j b = sqrt([k_{j+1}+1]_q [k_j]_q) b', F_j b = sqrt([k_j+1]_q [k_{j+1}]_q) b'', q^{H_j} b = q^{k_j-k_{j+1}} b.
CanonicalActionReport verify_canonical_action(const DickeLabel& label, int j, Deformation q);

/// Builds every q-symmetric state by E-strings on x_1^N (E_1 first), normalized.
std::map<DickeLabel, TensorState> generate_basis_by_raising(int n, int sites, Deformation q);

/// Crystal moves on ordered words: e moves one letter j to j+1, f moves one letter j+1 to j.
std::optional<Word> crystal_e(int j, const Word& ordered, int n);
std::optional<Word> crystal_f(int j, const Word& ordered, int n);

/// Combinatorial automaton on ordered words with letters e1.., f1.., started at x_1^N.
Automaton crystal_automaton(int n, int sites);

enum class CoefficientVariant { symmetric, rescaled };

/// Automaton on the q-Dicke basis with E_j, F_j, q^{H_j} as transition matrices.
/// The symmetric variant carries sqrt([k+1][k']) on both E and F; the rescaled
/// variant puts 1 on E and the product [k+1][k'] on F.
Automaton symmetric_automaton(int n, int sites, Deformation q,
                              CoefficientVariant variant = CoefficientVariant::symmetric);

}  // namespace braidlab
