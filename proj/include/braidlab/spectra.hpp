#pragma once

/**
 * @file spectra.hpp
 * @brief Exact diagonalization of the open chain H = sum_j r_j, block by letter content.
 */

#include "braidlab/deformation.hpp"
#include "braidlab/tensor_state.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace braidlab {

class OpenChain {
 public:
  OpenChain(int n, int sites, Deformation q);

  int alphabet_size() const { return n_; }
  int sites() const { return sites_; }
  Deformation q() const { return q_; }

 private:
  int n_;
  int sites_;
  Deformation q_;
};

TensorState hamiltonian_apply(const OpenChain& chain, const TensorState& state);

/// Full n^N x n^N matrix of H, assembled from Kronecker-built generators. Oracle only.
Eigen::MatrixXd dense_hamiltonian(const OpenChain& chain);

/// Matrix of H restricted to span(basis); the basis must be closed under H.
Eigen::MatrixXd block_matrix(const OpenChain& chain, const std::vector<Word>& basis);

/// H on the n = 2 weight-k subspace, basis ordered by position sets i_1 < ... < i_k of x_2
/// (lexicographic), which is the reverse of the word order.
Eigen::MatrixXd sector_matrix(int sites, Deformation q, int k);

/// The n = 2 basis words in the order used by sector_matrix.
std::vector<Word> sector_basis(int sites, int k);

struct WeightBlock {
  std::vector<int> content;
  std::vector<Word> basis;
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< orthonormal columns, first nonzero component positive
};

struct ClusterMember {
  std::size_t block = 0;
  Eigen::Index column = 0;
};

struct EigenCluster {
  double value = 0.0;
  std::vector<ClusterMember> members;
  std::size_t multiplicity() const { return members.size(); }
};

struct DiagonalizeOptions {
  bool parallel = false;
  /// Relative clustering gap, scaled by max(1, max |Lambda|).
  double cluster_tolerance = 1e-8;
};

class SpectralDecomposition {
 public:
  SpectralDecomposition(OpenChain chain, std::vector<WeightBlock> blocks, double cluster_tolerance);

  const OpenChain& chain() const { return chain_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  const std::vector<EigenCluster>& clusters() const { return clusters_; }
  std::size_t dimension() const;

  TensorState eigenvector(const ClusterMember& member) const;
  /// Eigenvectors of one cluster restricted to the block with the given content, as block coordinates.
  Eigen::MatrixXd cluster_vectors(std::size_t cluster, std::size_t block) const;
  std::optional<std::size_t> block_with_content(const std::vector<int>& content) const;

  /// Largest ||H v - Lambda v|| over all eigenvectors.
  double max_residual() const;

 private:
  OpenChain chain_;
  std::vector<WeightBlock> blocks_;
  std::vector<EigenCluster> clusters_;
};

/// Guards: n = 2 needs N <= 20 and every block within the dense limit; other n need n^N within it.
SpectralDecomposition diagonalize(const OpenChain& chain, const DiagonalizeOptions& options = {});

/// Dense oracle: eigenvalues of the full matrix, ascending.
Eigen::VectorXd dense_spectrum(const OpenChain& chain);

struct LadderStep {
  int m = 0;                   ///< the state b_m has weight (N - m, m)
  double expected_kappa = 0.0; ///< [N-k-m]_q [m-k+1]_q
  double observed_kappa = 0.0; ///< <b_m, F_1 b_{m+1}> / <b_m, b_m>
  double residual = 0.0;       ///< ||F_1 b_{m+1} - kappa b_m|| / ||F_1 b_{m+1}||
};

struct HighestWeightVector {
  std::size_t cluster = 0;
  double value = 0.0;
  int k = 0;
  double hw_residual = 0.0;    ///< ||F_1 v|| for the unit vector v
  int ladder_length = 0;       ///< number of nonzero states E_1^t v, t >= 0
  double top_residual = 0.0;   ///< ||E_1 b_{N-k}|| / ||b_{N-k}||
  double eigen_residual = 0.0; ///< max over the ladder of ||H b - Lambda b|| / ||b||
  double weight_residual = 0.0;///< max over the ladder of ||q^{H_1} b - q^{N-2m} b|| / ||b||
  std::vector<LadderStep> ladder;
  double max_kappa_error() const;
};

struct Sector {
  int k = 0;
  std::size_t expected_count = 0;  ///< m_k = N!/(k!(N-k+1)!) (N-2k+1)
  int ladder_dimension = 0;        ///< d_{k,2} = N - 2k + 1
  std::vector<HighestWeightVector> vectors;
  bool distinct_eigenvalues = true;
};

struct SectorReport {
  int sites = 0;
  double q = 1.0;
  std::vector<Sector> sectors;
  /// Sector of each cluster, nullopt when its highest-weight vectors sit in several sectors.
  std::vector<std::optional<int>> cluster_sector;
  std::vector<double> cluster_hw_residual;
  std::vector<std::string> warnings;
  bool degenerate = false;
};

/// Classifies the clusters of an n = 2 decomposition into sectors k = 0..floor(N/2).
SectorReport classify_sectors(const SpectralDecomposition& decomposition);

struct VerificationCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  int n = 0;
  int sites = 0;
  double q = 1.0;
  std::vector<VerificationCheck> checks;
  bool pass() const;
};

/// Cross-checks diagonalize against the tableau predictions for the decomposition of V_n^{\otimes N}.
VerificationReport verify_decomposition(int n, int sites, Deformation q);

/// max over basis words v and generators y in {E_j, F_j, q^{H_j}, q^{Eps_j}} of ||[H, y] v||.
double symmetry_residual(int n, int sites, Deformation q);

}  // namespace braidlab
