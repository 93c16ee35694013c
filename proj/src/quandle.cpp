#include "braidlab/quandle.hpp"

#include "braidlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace braidlab {

namespace {

constexpr std::size_t kOrbitGuard = 100'000;

bool row_is_bijective(const QuandleTable& table, int a) {
  std::vector<bool> hit(static_cast<std::size_t>(table.size()), false);
  for (int b = 0; b < table.size(); ++b) {
    const auto value = static_cast<std::size_t>(table(a, b));
    if (hit[value]) return false;
    hit[value] = true;
  }
  return true;
}

void require_rack(const QuandleTable& table, const char* what) {
  for (int a = 0; a < table.size(); ++a) {
    if (!row_is_bijective(table, a)) {
      throw ValidationError(std::string(what) + " needs a rack: row x" + std::to_string(a + 1) +
                            " is not a bijection");
    }
  }
}

/// inverse[a][y] = b with a |> b = y.
std::vector<std::vector<int>> inverse_rows(const QuandleTable& table) {
  const int n = table.size();
  std::vector<std::vector<int>> inverse(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) inverse[static_cast<std::size_t>(a)][static_cast<std::size_t>(table(a, b))] = b;
  }
  return inverse;
}

std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t>& permutation) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t start = 0; start < permutation.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = permutation[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Permutation of words applying L_a^{-1} letterwise, i.e. the action of M_a^{(x)N}.
std::vector<std::size_t> group_permutation(const std::vector<int>& inverse_row, int n, int sites) {
  const std::size_t dim = tensor_dimension(n, sites);
  std::vector<std::size_t> perm(dim);
  for (std::size_t w = 0; w < dim; ++w) {
    Word word = word_at(n, sites, w);
    for (int& letter : word) letter = inverse_row[static_cast<std::size_t>(letter)];
    perm[w] = word_index(n, word);
  }
  return perm;
}

}  // namespace

QuandleTable::QuandleTable(int n, std::vector<int> op) : n_(n), op_(std::move(op)) {
  if (n < 1) throw ValidationError("quandle table needs n >= 1");
  if (op_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError("quandle table must have n*n entries");
  }
  for (int v : op_) {
    if (v < 0 || v >= n) throw ValidationError("quandle table entry outside [1, n]");
  }
}

AxiomReport validate(const QuandleTable& t) {
  const int n = t.size();
  AxiomReport report;
  report.shelf = true;
  for (int a = 0; a < n && report.shelf; ++a) {
    for (int b = 0; b < n && report.shelf; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t(a, t(b, c)) != t(t(a, b), t(a, c))) {
          report.shelf = false;
          break;
        }
      }
    }
  }
  bool bijective = true;
  for (int a = 0; a < n; ++a) bijective = bijective && row_is_bijective(t, a);
  report.rack = report.shelf && bijective;
  bool idempotent = true;
  for (int a = 0; a < n; ++a) idempotent = idempotent && t(a, a) == a;
  report.quandle = report.rack && idempotent;
  return report;
}

QuandleTable dihedral(int n) {
  if (n < 2) throw ValidationError("dihedral quandle needs n >= 2");
  std::vector<int> op;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) op.push_back(((2 * i - j) % n + n) % n);
  }
  return QuandleTable(n, std::move(op));
}

QuandleTable tetrahedron() {
  const std::vector<int> one_based = {1, 3, 4, 2,  4, 2, 1, 3,  2, 4, 3, 1,  3, 1, 2, 4};
  std::vector<int> op;
  for (int v : one_based) op.push_back(v - 1);
  return QuandleTable(4, std::move(op));
}

QuandleTable trivial_quandle(int n) {
  std::vector<int> op;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) op.push_back(b);
  }
  return QuandleTable(n, std::move(op));
}

QuandleBraid::QuandleBraid(const QuandleTable& table) : n_(table.size()) {
  require_rack(table, "braid solution");
  const auto n = static_cast<std::size_t>(n_);
  image_.resize(n * n);
  preimage_.resize(n * n);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      const std::size_t from = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      const std::size_t to = static_cast<std::size_t>(b) * n + static_cast<std::size_t>(table(b, a));
      image_[from] = to;
      preimage_[to] = from;
    }
  }
}

Eigen::MatrixXd QuandleBraid::matrix() const {
  const auto dim = static_cast<Eigen::Index>(image_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t from = 0; from < image_.size(); ++from) {
    m(static_cast<Eigen::Index>(image_[from]), static_cast<Eigen::Index>(from)) = 1.0;
  }
  return m;
}

QuandleBraid braid_solution(const QuandleTable& table) { return QuandleBraid(table); }

Eigen::MatrixXd inverse_solution(const QuandleTable& table) {
  require_rack(table, "inverse solution");
  const int n = table.size();
  const auto inverse = inverse_rows(table);
  const auto dim = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int left = inverse[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      m(static_cast<Eigen::Index>(left) * n + a, static_cast<Eigen::Index>(a) * n + b) = 1.0;
    }
  }
  return m;
}

std::vector<std::size_t> word_permutation(const QuandleBraid& braid, int sites, int j) {
  if (j < 1 || j > sites - 1) throw ValidationError("generator index out of range");
  const int n = braid.size();
  const std::size_t dim = tensor_dimension(n, sites);
  require_within(dim, kOrbitGuard, "quandle word permutation");
  std::vector<std::size_t> perm(dim);
  const auto left = static_cast<std::size_t>(j - 1);
  for (std::size_t w = 0; w < dim; ++w) {
    Word word = word_at(n, sites, w);
    const std::size_t pair = static_cast<std::size_t>(word[left] * n + word[left + 1]);
    const std::size_t mapped = braid.image(pair);
    word[left] = static_cast<int>(mapped / static_cast<std::size_t>(n));
    word[left + 1] = static_cast<int>(mapped % static_cast<std::size_t>(n));
    perm[w] = word_index(n, word);
  }
  return perm;
}

std::size_t QuandleSpectrum::dimension() const {
  std::size_t total = 0;
  for (const auto& space : spaces) total += static_cast<std::size_t>(space.vectors.cols());
  return total;
}

double QuandleSpectrum::max_residual(const Eigen::MatrixXd& r) const {
  const Eigen::MatrixXcd rc = r.cast<std::complex<double>>();
  double worst = 0.0;
  for (const auto& space : spaces) {
    if (space.vectors.cols() == 0) continue;
    const Eigen::MatrixXcd defect = rc * space.vectors - space.value * space.vectors;
    worst = std::max(worst, defect.colwise().norm().maxCoeff());
  }
  return worst;
}

std::complex<double> root_of_unity(int k, int n) {
  if (n < 1) throw ValidationError("root of unity needs n >= 1");
  k = ((k % n) + n) % n;
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

QuandleSpectrum dihedral_spectrum(int n) {
  if (n < 3 || n % 2 == 0) throw ValidationError("dihedral_spectrum covers odd n >= 3 only");
  const QuandleBraid braid(dihedral(n));
  const auto un = static_cast<std::size_t>(n);
  const auto dim = static_cast<Eigen::Index>(un * un);

  // Off-diagonal r-orbits, each seeded at its smallest pair code. For prime n these are
  // the n - 1 orbits of x_1 x_{m+1}; composite n also has shorter orbits.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(un * un, false);
  for (std::size_t pair = 0; pair < un * un; ++pair) {
    if (seen[pair] || pair / un == pair % un) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t p = pair; !seen[p]; p = braid.image(p)) {
      seen[p] = true;
      orbit.push_back(p);
    }
    orbits.push_back(std::move(orbit));
  }

  QuandleSpectrum spectrum;
  spectrum.n = n;
  for (int k = 0; k < n; ++k) {
    ComplexEigenspace space;
    space.value = root_of_unity(k, n);
    std::vector<Eigen::VectorXcd> columns;
    for (const auto& orbit : orbits) {
      const auto length = static_cast<int>(orbit.size());
      if ((k * length) % n != 0) continue;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
      const double normalization = 1.0 / std::sqrt(static_cast<double>(length));
      for (int t = 0; t < length; ++t) {
        v(static_cast<Eigen::Index>(orbit[static_cast<std::size_t>(t)])) = normalization * root_of_unity(-k * t, n);
      }
      columns.push_back(std::move(v));
    }
    if (k == 0) {
      for (Eigen::Index a = 0; a < n; ++a) {
        columns.push_back(Eigen::VectorXcd::Unit(dim, a * n + a));
      }
    }
    space.vectors.resize(dim, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) space.vectors.col(static_cast<Eigen::Index>(c)) = columns[c];
    spectrum.spaces.push_back(std::move(space));
  }
  return spectrum;
}

QuandleSpectrum dense_braid_spectrum(const QuandleBraid& braid, double tolerance) {
  const Eigen::MatrixXcd r = braid.matrix().cast<std::complex<double>>();
  require_within(static_cast<std::size_t>(r.rows()), dense_dimension_limit(), "dense braid spectrum");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(r);
  if (solver.info() != Eigen::Success) throw std::runtime_error("complex eigensolver did not converge");
  struct Entry {
    double angle;
    Eigen::Index column;
  };
  std::vector<Entry> entries;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    double angle = std::arg(solver.eigenvalues()(i));
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    if (angle > 2.0 * std::numbers::pi - tolerance) angle = 0.0;
    entries.push_back({angle, i});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.angle < b.angle; });
  QuandleSpectrum spectrum;
  spectrum.n = braid.size();
  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<std::complex<double>> anchors;
  for (const auto& entry : entries) {
    const auto value = solver.eigenvalues()(entry.column);
    if (groups.empty() || std::abs(value - anchors.back()) > tolerance) {
      groups.emplace_back();
      anchors.push_back(value);
    }
    groups.back().push_back(entry.column);
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    ComplexEigenspace space;
    std::complex<double> sum = 0.0;
    space.vectors.resize(r.rows(), static_cast<Eigen::Index>(groups[g].size()));
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      sum += solver.eigenvalues()(groups[g][i]);
      space.vectors.col(static_cast<Eigen::Index>(i)) = solver.eigenvectors().col(groups[g][i]);
    }
    space.value = sum / static_cast<double>(groups[g].size());
    spectrum.spaces.push_back(std::move(space));
  }
  return spectrum;
}

Eigen::MatrixXi quandle_group_rep(const QuandleTable& table, int a) {
  require_rack(table, "rack group representation");
  if (a < 0 || a >= table.size()) throw ValidationError("element outside the quandle");
  const int n = table.size();
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (int b = 0; b < n; ++b) m(b, table(a, b)) = 1;
  return m;
}

int centralizer_residual(const QuandleTable& table, int sites) {
  if (sites < 2) throw ValidationError("centralizer check needs N >= 2");
  const int n = table.size();
  require_within(tensor_dimension(n, sites), kOrbitGuard, "centralizer residual");
  const QuandleBraid braid(table);
  const auto inverse = inverse_rows(table);
  int worst = 0;
  for (int a = 0; a < n; ++a) {
    const auto group = group_permutation(inverse[static_cast<std::size_t>(a)], n, sites);
    for (int j = 1; j < sites; ++j) {
      const auto r = word_permutation(braid, sites, j);
      for (std::size_t w = 0; w < r.size(); ++w) {
        if (r[group[w]] != group[r[w]]) worst = 1;
      }
    }
  }
  return worst;
}

std::vector<std::size_t> OrbitGraph::permutation_of(int j) const {
  const auto& list = cycles.at(static_cast<std::size_t>(j - 1));
  std::size_t dim = 0;
  for (const auto& c : list) dim += c.size();
  std::vector<std::size_t> perm(dim);
  for (const auto& c : list) {
    for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
  }
  return perm;
}

Automaton OrbitGraph::to_automaton() const {
  const std::size_t dim = tensor_dimension(n, sites);
  require_within(dim, dense_dimension_limit(), "orbit automaton");
  std::vector<std::string> labels;
  for (std::size_t w = 0; w < dim; ++w) {
    std::string label;
    for (int letter : word_at(n, sites, w)) label += "x" + std::to_string(letter + 1);
    labels.push_back(label);
  }
  std::vector<std::string> alphabet;
  std::vector<TransitionMatrix> matrices;
  for (int j = 1; j < sites; ++j) {
    const auto perm = permutation_of(j);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t w = 0; w < dim; ++w) m(static_cast<Eigen::Index>(perm[w]), static_cast<Eigen::Index>(w)) = 1.0;
    alphabet.push_back("r" + std::to_string(j));
    matrices.push_back(TransitionMatrix::from_real(m, MatrixKind::combinatorial));
  }
  return Automaton(std::move(alphabet), std::move(matrices), MatrixKind::combinatorial, 0, {}, std::move(labels));
}

OrbitGraph orbit_automaton(const QuandleTable& table, int sites) {
  if (sites < 2) throw ValidationError("orbit graph needs N >= 2");
  const QuandleBraid braid(table);
  OrbitGraph graph;
  graph.n = table.size();
  graph.sites = sites;
  for (int j = 1; j < sites; ++j) {
    auto cycles = cycles_of(word_permutation(braid, sites, j));
    std::size_t order = 1;
    for (const auto& c : cycles) order = std::lcm(order, c.size());
    graph.cycles.push_back(std::move(cycles));
    graph.orders.push_back(order);
  }
  return graph;
}

std::vector<std::vector<std::size_t>> invariant_orbit_components(const QuandleTable& table) {
  const int n = table.size();
  const QuandleBraid braid(table);
  std::vector<std::size_t> permutation(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < permutation.size(); ++p) permutation[p] = braid.image(p);
  const auto orbits = cycles_of(permutation);
  std::vector<std::size_t> orbit_of(permutation.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (std::size_t p : orbits[o]) orbit_of[p] = o;
  }
  std::vector<std::size_t> parent(orbits.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto inverse = inverse_rows(table);
  for (int a = 0; a < n; ++a) {
    const auto group = group_permutation(inverse[static_cast<std::size_t>(a)], n, 2);
    for (std::size_t p = 0; p < group.size(); ++p) {
      const std::size_t x = find(orbit_of[p]);
      const std::size_t y = find(orbit_of[group[p]]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(orbits.size(), SIZE_MAX);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const std::size_t root = find(o);
    if (slot[root] == SIZE_MAX) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(*std::min_element(orbits[o].begin(), orbits[o].end()));
  }
  return components;
}

}  // namespace braidlab
