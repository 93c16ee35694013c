#include "braidlab/errors.hpp"
#include "braidlab/quandle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

using namespace braidlab;

namespace {

// Conjugation quandle of S_3: a |> b = a^{-1} b a, permutations composed as functions.
QuandleTable conjugation_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    std::array<int, 3> h{};
    for (int i = 0; i < 3; ++i) h[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
    return h;
  };
  auto inverse = [](const std::array<int, 3>& f) {
    std::array<int, 3> h{};
    for (int i = 0; i < 3; ++i) h[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] = i;
    return h;
  };
  const int n = static_cast<int>(perms.size());
  std::vector<int> op;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const auto c = compose(inverse(a), compose(b, a));
      op.push_back(static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  }
  return QuandleTable(n, op);
}

QuandleTable shift_rack(int n) {
  std::vector<int> op;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) op.push_back((b + 1) % n);
  }
  return QuandleTable(n, op);
}

std::vector<QuandleTable> builtin_racks() {
  return {dihedral(3), dihedral(5), dihedral(4), tetrahedron(), trivial_quandle(3), conjugation_s3(), shift_rack(4)};
}

Eigen::MatrixXi kron(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  Eigen::MatrixXi out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

std::size_t code(int n, std::initializer_list<int> one_based) {
  std::size_t c = 0;
  for (int letter : one_based) c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(letter - 1);
  return c;
}

}  // namespace

TEST(QuandleTables, PrintedTables) {
  EXPECT_EQ(dihedral(3).entries(), (std::vector<int>{0, 2, 1, 2, 1, 0, 1, 0, 2}));
  EXPECT_EQ(tetrahedron().entries(), (std::vector<int>{0, 2, 3, 1, 3, 1, 0, 2, 1, 3, 2, 0, 2, 0, 1, 3}));
  EXPECT_EQ(dihedral(2), trivial_quandle(2));
  EXPECT_THROW(QuandleTable(2, {0, 1, 2, 0}), ValidationError);
  EXPECT_THROW(QuandleTable(2, {0, 1, 1}), ValidationError);
  EXPECT_THROW(dihedral(1), ValidationError);
}

TEST(QuandleTables, Axioms) {
  for (int n = 2; n <= 15; ++n) {
    const auto report = validate(dihedral(n));
    EXPECT_TRUE(report.shelf && report.rack && report.quandle) << n;
  }
  for (const auto& table : {tetrahedron(), trivial_quandle(5), conjugation_s3()}) {
    const auto report = validate(table);
    EXPECT_TRUE(report.shelf && report.rack && report.quandle);
  }
  const auto shift = validate(shift_rack(4));
  EXPECT_TRUE(shift.shelf && shift.rack);
  EXPECT_FALSE(shift.quandle);

  const auto constant_rows = validate(QuandleTable(2, {0, 0, 1, 1}));
  EXPECT_TRUE(constant_rows.shelf);
  EXPECT_FALSE(constant_rows.rack);

  const auto broken = validate(QuandleTable(2, {1, 1, 0, 0}));
  EXPECT_FALSE(broken.shelf);
}

TEST(BraidSolution, ExamplesAndPermutationStructure) {
  const QuandleBraid r = braid_solution(dihedral(3));
  EXPECT_EQ(r.image(code(3, {1, 2})), code(3, {2, 3}));
  for (int a = 1; a <= 3; ++a) EXPECT_EQ(r.image(code(3, {a, a})), code(3, {a, a}));
  const Eigen::MatrixXd m = r.matrix();
  EXPECT_EQ(m.colwise().sum(), Eigen::RowVectorXd::Ones(9));
  EXPECT_EQ(m.rowwise().sum(), Eigen::VectorXd::Ones(9));
  EXPECT_THROW(braid_solution(QuandleTable(2, {0, 0, 1, 1})), ValidationError);
}

TEST(BraidSolution, InverseFormula) {
  for (const auto& table : builtin_racks()) {
    const Eigen::MatrixXd r = braid_solution(table).matrix();
    const auto dim = r.rows();
    EXPECT_EQ(r * inverse_solution(table), Eigen::MatrixXd::Identity(dim, dim));
    EXPECT_EQ(inverse_solution(table) * r, Eigen::MatrixXd::Identity(dim, dim));
  }
}

TEST(BraidSolution, BraidRelationOnThreeSites) {
  for (const auto& table : builtin_racks()) {
    const QuandleBraid r = braid_solution(table);
    const auto p1 = word_permutation(r, 3, 1);
    const auto p2 = word_permutation(r, 3, 2);
    for (std::size_t w = 0; w < p1.size(); ++w) {
      ASSERT_EQ(p1[p2[p1[w]]], p2[p1[p2[w]]]);
    }
  }
}

TEST(BraidSolution, WordPermutationMatchesMatrix) {
  const QuandleBraid r = braid_solution(tetrahedron());
  const auto p = word_permutation(r, 2, 1);
  const Eigen::MatrixXd m = r.matrix();
  for (std::size_t w = 0; w < p.size(); ++w) {
    EXPECT_EQ(m(static_cast<Eigen::Index>(p[w]), static_cast<Eigen::Index>(w)), 1.0);
  }
  EXPECT_THROW(word_permutation(r, 3, 3), ValidationError);
}

TEST(RootsOfUnity, ExactQuarterTurns) {
  EXPECT_EQ(root_of_unity(1, 4), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(root_of_unity(2, 4), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(root_of_unity(1, 2), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(root_of_unity(5, 5), std::complex<double>(1.0, 0.0));
  EXPECT_LT(std::abs(root_of_unity(1, 3) - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)), 1e-15);
}

TEST(DihedralSpectrum, ThreeLetters) {
  const auto spectrum = dihedral_spectrum(3);
  ASSERT_EQ(spectrum.spaces.size(), 3u);
  EXPECT_EQ(spectrum.spaces[0].value, std::complex<double>(1.0));
  EXPECT_EQ(spectrum.spaces[0].vectors.cols(), 5);
  EXPECT_EQ(spectrum.spaces[1].vectors.cols(), 2);
  EXPECT_EQ(spectrum.spaces[2].vectors.cols(), 2);
  EXPECT_LT(std::abs(spectrum.spaces[1].value - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)), 1e-15);
  for (int m = 1; m <= 3; ++m) {
    Eigen::VectorXcd diagonal = Eigen::VectorXcd::Zero(9);
    diagonal(static_cast<Eigen::Index>(code(3, {m, m}))) = 1.0;
    const Eigen::MatrixXcd& v = spectrum.spaces[0].vectors;
    const Eigen::VectorXcd projected = v * (v.adjoint() * diagonal);
    EXPECT_LT((projected - diagonal).norm(), 1e-14);
  }
  EXPECT_THROW(dihedral_spectrum(4), ValidationError);
}

TEST(DihedralSpectrum, MatchesDenseOracle) {
  for (int n : {3, 5, 7}) {
    const auto spectrum = dihedral_spectrum(n);
    const QuandleBraid braid = braid_solution(dihedral(n));
    const Eigen::MatrixXd r = braid.matrix();
    EXPECT_EQ(spectrum.dimension(), static_cast<std::size_t>(n * n));
    EXPECT_LT(spectrum.max_residual(r), 1e-12);

    const auto dense = dense_braid_spectrum(braid);
    ASSERT_EQ(dense.spaces.size(), static_cast<std::size_t>(n));
    ASSERT_EQ(spectrum.spaces.size(), static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
      const auto& mine = spectrum.spaces[k];
      const auto& theirs = dense.spaces[k];
      EXPECT_LT(std::abs(std::pow(mine.value, n) - 1.0), 1e-12);
      EXPECT_LT(std::abs(mine.value - theirs.value), 1e-10);
      EXPECT_EQ(mine.vectors.cols(), k == 0 ? 2 * n - 1 : n - 1);
      EXPECT_EQ(mine.vectors.cols(), theirs.vectors.cols());
      EXPECT_LT((mine.vectors.adjoint() * mine.vectors -
                 Eigen::MatrixXcd::Identity(mine.vectors.cols(), mine.vectors.cols())).norm(), 1e-12);
      // Same subspace: the orthonormal oracle basis lies inside span(mine).
      const Eigen::MatrixXcd q = theirs.vectors.householderQr().householderQ() *
                                 Eigen::MatrixXcd::Identity(theirs.vectors.rows(), theirs.vectors.cols());
      EXPECT_LT((q - mine.vectors * (mine.vectors.adjoint() * q)).norm(), 1e-10);
    }
  }
}

// Composite odd n has r-orbits shorter than n, so eigenspace dimensions depart from n - 1.
TEST(DihedralSpectrum, CompositeOrderMatchesDenseOracle) {
  for (int n : {9, 15}) {
    const QuandleBraid braid = braid_solution(dihedral(n));
    const auto spectrum = dihedral_spectrum(n);
    const auto dense = dense_braid_spectrum(braid);
    EXPECT_EQ(spectrum.dimension(), static_cast<std::size_t>(n * n));
    EXPECT_LT(spectrum.max_residual(braid.matrix()), 1e-12);
    ASSERT_EQ(spectrum.spaces.size(), dense.spaces.size());
    for (std::size_t k = 0; k < spectrum.spaces.size(); ++k) {
      EXPECT_EQ(spectrum.spaces[k].vectors.cols(), dense.spaces[k].vectors.cols()) << "n=" << n << " k=" << k;
    }
  }
  EXPECT_EQ(dihedral_spectrum(9).spaces[1].vectors.cols(), 6);
}

TEST(DihedralSpectrum, EvenOrderOracleOnly) {
  const auto dense = dense_braid_spectrum(braid_solution(dihedral(4)));
  EXPECT_EQ(dense.dimension(), 16u);
  EXPECT_LT(dense.max_residual(braid_solution(dihedral(4)).matrix()), 1e-10);
}

TEST(GroupRepresentation, PrintedMatrixAndInvolution) {
  Eigen::Matrix3i expected;
  expected << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  EXPECT_EQ(quandle_group_rep(dihedral(3), 0), expected);
  for (int a = 0; a < 3; ++a) {
    const Eigen::MatrixXi m = quandle_group_rep(dihedral(3), a);
    EXPECT_EQ(m * m, Eigen::Matrix3i::Identity());
    EXPECT_EQ(quandle_group_rep(trivial_quandle(3), a), Eigen::Matrix3i::Identity());
  }
}

TEST(GroupRepresentation, RackGroupRelations) {
  for (const auto& table : builtin_racks()) {
    for (int a = 0; a < table.size(); ++a) {
      for (int b = 0; b < table.size(); ++b) {
        EXPECT_EQ(quandle_group_rep(table, a) * quandle_group_rep(table, b),
                  quandle_group_rep(table, b) * quandle_group_rep(table, table(b, a)));
      }
    }
  }
}

TEST(Centralizer, ExactForBuiltins) {
  EXPECT_EQ(centralizer_residual(dihedral(3), 2), 0);
  EXPECT_EQ(centralizer_residual(dihedral(3), 3), 0);
  EXPECT_EQ(centralizer_residual(trivial_quandle(4), 2), 0);
  EXPECT_EQ(centralizer_residual(tetrahedron(), 3), 0);
  EXPECT_EQ(centralizer_residual(conjugation_s3(), 3), 0);
  EXPECT_THROW(centralizer_residual(dihedral(11), 5), GuardError);
}

TEST(Centralizer, AgreesWithKroneckerOracle) {
  for (const auto& table : builtin_racks()) {
    const Eigen::MatrixXi r = braid_solution(table).matrix().cast<int>();
    for (int a = 0; a < table.size(); ++a) {
      const Eigen::MatrixXi m = quandle_group_rep(table, a);
      const Eigen::MatrixXi mm = kron(m, m);
      EXPECT_EQ(r * mm, mm * r);
    }
  }
}

TEST(Orbits, DihedralThreeTwoSites) {
  const OrbitGraph graph = orbit_automaton(dihedral(3), 2);
  ASSERT_EQ(graph.orders.size(), 1u);
  EXPECT_EQ(graph.orders[0], 3u);
  std::set<std::vector<std::size_t>> cycles(graph.cycles[0].begin(), graph.cycles[0].end());
  EXPECT_TRUE(cycles.count({code(3, {1, 2}), code(3, {2, 3}), code(3, {3, 1})}));
  EXPECT_TRUE(cycles.count({code(3, {1, 3}), code(3, {3, 2}), code(3, {2, 1})}));
  for (int a = 1; a <= 3; ++a) EXPECT_TRUE(cycles.count({code(3, {a, a})}));
  EXPECT_EQ(cycles.size(), 5u);

  const Automaton automaton = graph.to_automaton();
  EXPECT_EQ(automaton.alphabet(), (std::vector<std::string>{"r1"}));
  EXPECT_EQ(automaton.kind(), MatrixKind::combinatorial);
}

TEST(Orbits, CycleCountsForPrimeDihedral) {
  for (int n : {3, 5, 7, 11}) {
    const OrbitGraph graph = orbit_automaton(dihedral(n), 2);
    std::size_t fixed = 0, long_cycles = 0;
    for (const auto& cycle : graph.cycles[0]) {
      if (cycle.size() == 1) ++fixed;
      if (cycle.size() == static_cast<std::size_t>(n)) ++long_cycles;
    }
    EXPECT_EQ(fixed, static_cast<std::size_t>(n));
    EXPECT_EQ(long_cycles, static_cast<std::size_t>(n - 1));
    EXPECT_EQ(fixed + long_cycles, graph.cycles[0].size());
  }
}

TEST(Orbits, TrivialQuandleSwapsLetters) {
  const OrbitGraph graph = orbit_automaton(trivial_quandle(3), 3);
  ASSERT_EQ(graph.orders.size(), 2u);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(graph.orders[j], 2u);
    for (const auto& cycle : graph.cycles[j]) EXPECT_LE(cycle.size(), 2u);
  }
  EXPECT_EQ(graph.permutation_of(1)[code(3, {1, 2, 3})], code(3, {2, 1, 3}));
}

TEST(Orbits, ReducibleInvariantBlock) {
  const auto components = invariant_orbit_components(dihedral(3));
  std::vector<std::size_t> sizes;
  for (const auto& c : components) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 3}));
}
