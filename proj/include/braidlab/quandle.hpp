#pragma once

/**
 * @file quandle.hpp
 * @brief Shelves, racks and quandles with their combinatorial braid solutions.
 *
 * Elements are 0-based here; element a is printed as x_{a+1}, so x_1 is residue 0
 * of the dihedral quandle.
 */

#include "braidlab/automaton.hpp"
#include "braidlab/tensor_state.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace braidlab {

class QuandleTable {
 public:
  /// `op` is row-major: op[a*n + b] = a |> b. Throws ValidationError on out-of-range entries.
  QuandleTable(int n, std::vector<int> op);

  int size() const { return n_; }
  int operator()(int a, int b) const { return op_[static_cast<std::size_t>(a * n_ + b)]; }
  const std::vector<int>& entries() const { return op_; }

  friend bool operator==(const QuandleTable&, const QuandleTable&) = default;

 private:
  int n_;
  std::vector<int> op_;
};

struct AxiomReport {
  bool shelf = false;
  bool rack = false;
  bool quandle = false;
};

AxiomReport validate(const QuandleTable& table);

/// i |> j = 2i - j mod n.
QuandleTable dihedral(int n);
QuandleTable tetrahedron();
/// a |> b = b.
QuandleTable trivial_quandle(int n);

/// The solution r(a, b) = (b, b |> a) on X x X, stored as a permutation of pair codes a*n + b.
class QuandleBraid {
 public:
  explicit QuandleBraid(const QuandleTable& table);

  int size() const { return n_; }
  std::size_t image(std::size_t pair) const { return image_[pair]; }
  std::size_t preimage(std::size_t pair) const { return preimage_[pair]; }
  Eigen::MatrixXd matrix() const;

 private:
  int n_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

/// Requires a rack.
QuandleBraid braid_solution(const QuandleTable& table);
/// r^{-1}(a, b) = (a |>^{-1} b, a) as a permutation matrix.
Eigen::MatrixXd inverse_solution(const QuandleTable& table);

/// Permutation of the n^N basis words induced by r acting on sites (j, j+1), 1-based j.
std::vector<std::size_t> word_permutation(const QuandleBraid& braid, int sites, int j);

struct ComplexEigenspace {
  std::complex<double> value;
  Eigen::MatrixXcd vectors;  ///< columns span the eigenspace
};

struct QuandleSpectrum {
  int n = 0;
  std::vector<ComplexEigenspace> spaces;  ///< ordered by the angle of the eigenvalue in [0, 2 pi)
  std::size_t dimension() const;
  double max_residual(const Eigen::MatrixXd& r) const;
};

/// e^{2 pi i k/n}, exact when the order divides 4.
std::complex<double> root_of_unity(int k, int n);

/// Eigenvectors L^{-1/2} sum_{t<L} Lambda_k^{-t} r^t (seed) over the r-orbits of length L with
/// Lambda_k^L = 1, plus the diagonal words for Lambda = 1. Odd n >= 3. For prime n the seeds are
/// x_1 x_m and every eigenspace has dimension n - 1 except Lambda = 1 with 2n - 1.
QuandleSpectrum dihedral_spectrum(int n);

/// Dense complex eigendecomposition of a braid solution, eigenvalues clustered within `tolerance`.
QuandleSpectrum dense_braid_spectrum(const QuandleBraid& braid, double tolerance = 1e-8);

/// M_a = sum_b e_{b, a |> b}. Requires a rack.
Eigen::MatrixXi quandle_group_rep(const QuandleTable& table, int a);

/// max |r_j M_a^{(x)N} - M_a^{(x)N} r_j| over all a, j, computed on permutations. Requires a rack.
int centralizer_residual(const QuandleTable& table, int sites);

struct OrbitGraph {
  int n = 0;
  int sites = 0;
  /// cycles[j-1] lists the cycles of r_j on basis word indices, fixed points included.
  std::vector<std::vector<std::vector<std::size_t>>> cycles;
  /// Least common multiple of the cycle lengths of each r_j.
  std::vector<std::size_t> orders;
  std::vector<std::size_t> permutation_of(int j) const;
  Automaton to_automaton() const;
};

OrbitGraph orbit_automaton(const QuandleTable& table, int sites);

/// Components of the action of {M_a (x) M_a} on the r-orbits of X x X (the Lambda = 1 block at N = 2).
/// Each component lists orbit representatives, the smallest pair code in each orbit.
std::vector<std::vector<std::size_t>> invariant_orbit_components(const QuandleTable& table);

}  // namespace braidlab
