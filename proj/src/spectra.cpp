#include "braidlab/spectra.hpp"

#include "braidlab/errors.hpp"
#include "braidlab/hecke.hpp"
#include "braidlab/qalgebra.hpp"
#include "braidlab/qnumbers.hpp"
#include "braidlab/tableaux.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <sstream>

namespace braidlab {

namespace {

constexpr double kHighestWeightTolerance = 1e-8;
constexpr int kMaxWeightBlockSites = 20;

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index col = 0; col < vectors.cols(); ++col) {
    const double scale = vectors.col(col).cwiseAbs().maxCoeff();
    for (Eigen::Index row = 0; row < vectors.rows(); ++row) {
      const double v = vectors(row, col);
      if (std::abs(v) > 1e-12 * scale) {
        if (v < 0.0) vectors.col(col) *= -1.0;
        break;
      }
    }
  }
}

WeightBlock solve_block(const OpenChain& chain, std::vector<int> content) {
  WeightBlock block;
  block.content = std::move(content);
  block.basis = words_with_content(block.content);
  const Eigen::MatrixXd h = block_matrix(chain, block.basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  block.values = solver.eigenvalues();
  block.vectors = solver.eigenvectors();
  fix_signs(block.vectors);
  return block;
}

std::vector<int> sector_content(int sites, int k) { return {sites - k, k}; }

}  // namespace

OpenChain::OpenChain(int n, int sites, Deformation q) : n_(n), sites_(sites), q_(q) {
  if (n < 1) throw ValidationError("open chain needs n >= 1");
  if (sites < 1) throw ValidationError("open chain needs N >= 1");
}

TensorState hamiltonian_apply(const OpenChain& chain, const TensorState& state) {
  if (state.alphabet_size() != chain.alphabet_size() || state.sites() != chain.sites()) {
    throw ValidationError("state does not belong to the chain's tensor space");
  }
  TensorState result(chain.alphabet_size(), chain.sites());
  for (int j = 1; j < chain.sites(); ++j) result += apply_generator(state, j, chain.q());
  return result;
}

Eigen::MatrixXd dense_hamiltonian(const OpenChain& chain) {
  const std::size_t dim = tensor_dimension(chain.alphabet_size(), chain.sites());
  require_within(dim, dense_dimension_limit(), "dense Hamiltonian");
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int j = 1; j < chain.sites(); ++j) {
    h += dense_generator(chain.alphabet_size(), chain.sites(), j, chain.q());
  }
  return h;
}

Eigen::MatrixXd block_matrix(const OpenChain& chain, const std::vector<Word>& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h(d, d);
  std::map<Word, Eigen::Index> position;
  for (Eigen::Index i = 0; i < d; ++i) position.emplace(basis[static_cast<std::size_t>(i)], i);
  for (Eigen::Index col = 0; col < d; ++col) {
    const TensorState image =
        hamiltonian_apply(chain, TensorState::basis(chain.alphabet_size(), basis[static_cast<std::size_t>(col)]));
    h.col(col).setZero();
    for (const auto& [word, value] : image.terms()) {
      auto it = position.find(word);
      if (it == position.end()) throw ValidationError("basis is not closed under the Hamiltonian");
      h(it->second, col) = value;
    }
  }
  return h;
}

std::vector<Word> sector_basis(int sites, int k) {
  if (k < 0 || k > sites) throw ValidationError("sector index outside [0, N]");
  auto words = words_with_content(sector_content(sites, k));
  std::reverse(words.begin(), words.end());
  return words;
}

Eigen::MatrixXd sector_matrix(int sites, Deformation q, int k) {
  const auto basis = sector_basis(sites, k);
  require_within(basis.size(), dense_dimension_limit(), "sector matrix");
  return block_matrix(OpenChain(2, sites, q), basis);
}

SpectralDecomposition::SpectralDecomposition(OpenChain chain, std::vector<WeightBlock> blocks,
                                             double cluster_tolerance)
    : chain_(chain), blocks_(std::move(blocks)) {
  struct Entry {
    double value;
    ClusterMember member;
  };
  std::vector<Entry> entries;
  double largest = 1.0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Eigen::Index c = 0; c < blocks_[b].values.size(); ++c) {
      entries.push_back({blocks_[b].values(c), {b, c}});
      largest = std::max(largest, std::abs(blocks_[b].values(c)));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.value < b.value; });
  const double gap = cluster_tolerance * largest;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || entries[i].value - entries[i - 1].value > gap) clusters_.emplace_back();
    clusters_.back().members.push_back(entries[i].member);
  }
  for (auto& cluster : clusters_) {
    double sum = 0.0;
    for (const auto& m : cluster.members) sum += blocks_[m.block].values(m.column);
    cluster.value = sum / static_cast<double>(cluster.members.size());
  }
}

std::size_t SpectralDecomposition::dimension() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.basis.size();
  return total;
}

TensorState SpectralDecomposition::eigenvector(const ClusterMember& member) const {
  const auto& block = blocks_.at(member.block);
  return combination(chain_.alphabet_size(), block.basis, block.vectors.col(member.column));
}

Eigen::MatrixXd SpectralDecomposition::cluster_vectors(std::size_t cluster, std::size_t block) const {
  const auto& members = clusters_.at(cluster).members;
  std::vector<Eigen::Index> columns;
  for (const auto& m : members) {
    if (m.block == block) columns.push_back(m.column);
  }
  const auto& vectors = blocks_.at(block).vectors;
  Eigen::MatrixXd out(vectors.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vectors.col(columns[i]);
  return out;
}

std::optional<std::size_t> SpectralDecomposition::block_with_content(const std::vector<int>& content) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].content == content) return b;
  }
  return std::nullopt;
}

double SpectralDecomposition::max_residual() const {
  double worst = 0.0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Eigen::MatrixXd h = block_matrix(chain_, blocks_[b].basis);
    const Eigen::MatrixXd r = h * blocks_[b].vectors - blocks_[b].vectors * blocks_[b].values.asDiagonal();
    if (r.size() > 0) worst = std::max(worst, r.colwise().norm().maxCoeff());
  }
  return worst;
}

SpectralDecomposition diagonalize(const OpenChain& chain, const DiagonalizeOptions& options) {
  const int n = chain.alphabet_size();
  const int sites = chain.sites();
  const std::size_t limit = dense_dimension_limit();
  if (n == 2) {
    if (sites > kMaxWeightBlockSites) {
      throw GuardError("weight-block path supports N <= " + std::to_string(kMaxWeightBlockSites));
    }
    require_within(binomial(sites, sites / 2), limit, "largest weight block");
  } else {
    require_within(tensor_dimension(n, sites), limit, "dense diagonalization");
  }
  const auto contents = dicke_labels(n, sites);
  std::vector<WeightBlock> blocks(contents.size());
  if (options.parallel) {
    std::vector<std::future<WeightBlock>> pending;
    for (const auto& label : contents) {
      pending.push_back(std::async(std::launch::async, solve_block, chain, label.multiplicities()));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) blocks[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < contents.size(); ++i) blocks[i] = solve_block(chain, contents[i].multiplicities());
  }
  return SpectralDecomposition(chain, std::move(blocks), options.cluster_tolerance);
}

Eigen::VectorXd dense_spectrum(const OpenChain& chain) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_hamiltonian(chain), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver did not converge");
  return solver.eigenvalues();
}

double HighestWeightVector::max_kappa_error() const {
  double worst = 0.0;
  for (const auto& step : ladder) {
    const double relative = std::abs(step.observed_kappa - step.expected_kappa) / std::abs(step.expected_kappa);
    worst = std::max({worst, relative, step.residual});
  }
  return worst;
}

namespace {

std::size_t sector_multiplicity(int sites, int k) {
  // N!/(k!(N-k+1)!) (N-2k+1) = binomial(N+1, k) (N-2k+1) / (N+1)
  return static_cast<std::size_t>(binomial(sites + 1, k) * static_cast<std::uint64_t>(sites - 2 * k + 1) /
                                  static_cast<std::uint64_t>(sites + 1));
}

HighestWeightVector build_ladder(const OpenChain& chain, std::size_t cluster, double value, int k,
                                 const TensorState& top, double hw_residual) {
  const int sites = chain.sites();
  const Deformation q = chain.q();
  HighestWeightVector hw;
  hw.cluster = cluster;
  hw.value = value;
  hw.k = k;
  hw.hw_residual = hw_residual;

  std::vector<TensorState> states{top};
  for (int m = k; m < sites - k; ++m) states.push_back(apply_E(1, states.back(), q));
  const TensorState beyond = apply_E(1, states.back(), q);
  hw.top_residual = beyond.norm() / states.back().norm();

  hw.ladder_length = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double previous = i == 0 ? 1.0 : states[i - 1].norm();
    if (states[i].norm() > kHighestWeightTolerance * previous) ++hw.ladder_length;
  }
  if (hw.top_residual > kHighestWeightTolerance) ++hw.ladder_length;

  for (std::size_t i = 0; i < states.size(); ++i) {
    const int m = k + static_cast<int>(i);
    const TensorState& b = states[i];
    const double scale = b.norm();
    hw.eigen_residual = std::max(hw.eigen_residual, (hamiltonian_apply(chain, b) - value * b).norm() / scale);
    const double weight = std::pow(q.value(), sites - 2 * m);
    hw.weight_residual = std::max(hw.weight_residual, (apply_qH(1, b, q) - weight * b).norm() / scale);
    if (i + 1 < states.size()) {
      const TensorState lowered = apply_F(1, states[i + 1], q);
      LadderStep step;
      step.m = m;
      step.expected_kappa = q_number(sites - k - m, q) * q_number(m - k + 1, q);
      step.observed_kappa = b.dot(lowered) / b.dot(b);
      step.residual = (lowered - step.expected_kappa * b).norm() / lowered.norm();
      hw.ladder.push_back(step);
    }
  }
  return hw;
}

}  // namespace

SectorReport classify_sectors(const SpectralDecomposition& decomposition) {
  const OpenChain& chain = decomposition.chain();
  if (chain.alphabet_size() != 2) throw ValidationError("sector classification covers n = 2 only");
  const int sites = chain.sites();
  const Deformation q = chain.q();
  SectorReport report;
  report.sites = sites;
  report.q = q.value();
  for (int k = 0; k <= sites / 2; ++k) {
    report.sectors.push_back(Sector{k, sector_multiplicity(sites, k), sites - 2 * k + 1, {}, true});
  }
  const auto& clusters = decomposition.clusters();
  report.cluster_sector.assign(clusters.size(), std::nullopt);
  report.cluster_hw_residual.assign(clusters.size(), 0.0);

  for (std::size_t c = 0; c < clusters.size(); ++c) {
    std::vector<int> sectors_hit;
    for (int k = 0; k <= sites / 2; ++k) {
      const auto block = decomposition.block_with_content(sector_content(sites, k));
      if (!block) continue;
      const Eigen::MatrixXd vectors = decomposition.cluster_vectors(c, *block);
      if (vectors.cols() == 0) continue;
      const auto& basis = decomposition.blocks()[*block].basis;

      // Null space of F_1 restricted to this cluster's eigenvectors in block k.
      Eigen::MatrixXd kernel;
      Eigen::VectorXd residuals;
      if (k == 0) {
        kernel = vectors;
        residuals = Eigen::VectorXd::Zero(vectors.cols());
      } else {
        const auto& lower_basis = decomposition.blocks()[*decomposition.block_with_content(sector_content(sites, k - 1))].basis;
        Eigen::MatrixXd lowered(static_cast<Eigen::Index>(lower_basis.size()), vectors.cols());
        for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
          const TensorState v = combination(2, basis, vectors.col(i));
          lowered.col(i) = coordinates(apply_F(1, v, q), lower_basis, 1e-12);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(lowered, Eigen::ComputeFullV);
        const Eigen::VectorXd sigma = svd.singularValues();
        std::vector<Eigen::Index> null_columns;
        std::vector<double> null_sigma;
        for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
          const double s = i < sigma.size() ? sigma(i) : 0.0;
          if (s < kHighestWeightTolerance) {
            null_columns.push_back(i);
            null_sigma.push_back(s);
          }
        }
        kernel.resize(vectors.rows(), static_cast<Eigen::Index>(null_columns.size()));
        residuals.resize(static_cast<Eigen::Index>(null_columns.size()));
        for (std::size_t i = 0; i < null_columns.size(); ++i) {
          kernel.col(static_cast<Eigen::Index>(i)) = vectors * svd.matrixV().col(null_columns[i]);
          residuals(static_cast<Eigen::Index>(i)) = null_sigma[i];
        }
      }
      if (kernel.cols() == 0) continue;
      sectors_hit.push_back(k);
      auto& sector = report.sectors[static_cast<std::size_t>(k)];
      if (kernel.cols() > 1) sector.distinct_eigenvalues = false;
      for (Eigen::Index i = 0; i < kernel.cols(); ++i) {
        const TensorState top = combination(2, basis, kernel.col(i));
        const double residual = apply_F(1, top, q).norm() / top.norm();
        report.cluster_hw_residual[c] = std::max(report.cluster_hw_residual[c], residual);
        sector.vectors.push_back(build_ladder(chain, c, clusters[c].value, k, top, residual));
      }
    }
    if (sectors_hit.size() == 1) {
      report.cluster_sector[c] = sectors_hit.front();
    } else {
      report.degenerate = true;
      std::ostringstream msg;
      msg << "eigenvalue " << format_double(clusters[c].value) << " has highest-weight vectors in "
          << sectors_hit.size() << " sectors; falling back to multiplicity-only matching";
      report.warnings.push_back(msg.str());
    }
  }
  return report;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.pass; });
}

namespace {

VerificationCheck count_check(std::string name, std::uint64_t expected, std::uint64_t observed) {
  return {std::move(name), std::to_string(expected), std::to_string(observed), expected == observed};
}

}  // namespace

VerificationReport verify_decomposition(int n, int sites, Deformation q) {
  VerificationReport report;
  report.n = n;
  report.sites = sites;
  report.q = q.value();
  const OpenChain chain(n, sites, q);
  const SpectralDecomposition decomposition = diagonalize(chain);
  const std::uint64_t total_dimension = tensor_dimension(n, sites);

  std::uint64_t multiplicity_total = 0;
  for (const auto& cluster : decomposition.clusters()) multiplicity_total += cluster.multiplicity();
  report.checks.push_back(count_check("sum of multiplicities = n^N", total_dimension, multiplicity_total));

  const double residual = decomposition.max_residual();
  report.checks.push_back({"max eigen residual < 1e-9", "< 1e-9", format_double(residual), residual < 1e-9});

  std::uint64_t tableau_total = 0;
  for (const auto& shape : partitions_of(sites, n)) tableau_total += syt_dim(shape) * ssyt_dim(shape, n);
  report.checks.push_back(count_check("sum over shapes of m_lambda d_lambda = n^N", total_dimension, tableau_total));

  if (n != 2) return report;

  const SectorReport sectors = classify_sectors(decomposition);
  std::uint64_t ladder_total = 0;
  std::vector<std::uint64_t> ladder_dims;
  for (const auto& sector : sectors.sectors) {
    const Partition shape = sector.k == 0 ? Partition({sites}) : Partition({sites - sector.k, sector.k});
    const std::uint64_t m_k = syt_dim(shape);
    const std::uint64_t d_k = ssyt_dim(shape, 2);
    ladder_dims.push_back(d_k);
    ladder_total += m_k * d_k;
    report.checks.push_back(count_check("sector " + std::to_string(sector.k) + " highest-weight count m_k", m_k,
                                        sector.vectors.size()));
    report.checks.push_back(count_check("sector " + std::to_string(sector.k) + " m_k formula", sector.expected_count, m_k));
    for (const auto& hw : sector.vectors) {
      if (static_cast<std::uint64_t>(hw.ladder_length) != d_k) {
        report.checks.push_back(count_check("ladder length in sector " + std::to_string(sector.k), d_k,
                                            static_cast<std::uint64_t>(hw.ladder_length)));
      }
    }
  }
  report.checks.push_back(count_check("sum_k m_k d_k = 2^N", total_dimension, ladder_total));

  // Each cluster's multiplicity must equal the ladder dimensions of its highest-weight vectors.
  std::vector<std::uint64_t> predicted(decomposition.clusters().size(), 0);
  for (const auto& sector : sectors.sectors) {
    for (const auto& hw : sector.vectors) predicted[hw.cluster] += ladder_dims[static_cast<std::size_t>(sector.k)];
  }
  std::size_t mismatches = 0;
  for (std::size_t c = 0; c < predicted.size(); ++c) {
    if (predicted[c] != decomposition.clusters()[c].multiplicity()) ++mismatches;
  }
  report.checks.push_back(count_check("clusters whose multiplicity differs from sum of ladder dims", 0, mismatches));
  return report;
}

double symmetry_residual(int n, int sites, Deformation q) {
  require_within(tensor_dimension(n, sites), dense_dimension_limit(), "symmetry residual");
  const OpenChain chain(n, sites, q);
  double worst = 0.0;
  for (const auto& word : all_words(n, sites)) {
    const TensorState v = TensorState::basis(n, word);
    const TensorState hv = hamiltonian_apply(chain, v);
    auto check = [&](const auto& op) {
      worst = std::max(worst, (hamiltonian_apply(chain, op(v)) - op(hv)).norm());
    };
    for (int j = 1; j < n; ++j) {
      check([&](const TensorState& s) { return apply_E(j, s, q); });
      check([&](const TensorState& s) { return apply_F(j, s, q); });
      check([&](const TensorState& s) { return apply_qH(j, s, q); });
    }
    for (int j = 1; j <= n; ++j) check([&](const TensorState& s) { return apply_qEps(j, s, q); });
  }
  return worst;
}

}  // namespace braidlab
