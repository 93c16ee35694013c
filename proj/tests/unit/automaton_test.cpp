#include "braidlab/automaton.hpp"
#include "braidlab/errors.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace braidlab;

namespace {

Eigen::MatrixXd real_part(const ComplexMatrix& m) { return m.real(); }

Eigen::VectorXd basis_vector(Eigen::Index n, Eigen::Index i) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(i) = 1.0;
  return e;
}

// Independent oracle: chase the transition table through a map, no matrices involved.
std::optional<std::string> chase(const TransitionTable& table, const std::vector<std::string>& letters) {
  std::map<std::pair<std::string, std::string>, std::string> delta;
  for (const auto& rule : table.rules) {
    if (rule.to) delta[{rule.from, rule.letter}] = *rule.to;
  }
  std::string state = table.start;
  for (const auto& letter : letters) {
    auto it = delta.find({state, letter});
    if (it == delta.end()) return std::nullopt;
    state = it->second;
  }
  return state;
}

std::size_t count_edges(const std::string& dot) {
  std::size_t count = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++count;
  return count - 1;  // the start marker arrow
}

Automaton stochastic_example(double p) {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << p, 1.0, 1.0 - p, 0.0;
  b << 1.0, 1.0 - p, 0.0, p;
  return Automaton({"a", "b"},
                   {TransitionMatrix::from_real(a, MatrixKind::stochastic),
                    TransitionMatrix::from_real(b, MatrixKind::stochastic)},
                   MatrixKind::stochastic, 0, {1});
}

Automaton quantum_example(std::complex<double> a, std::complex<double> b) {
  ComplexMatrix m(2, 2);
  m << a, b, -std::conj(b), std::conj(a);
  return Automaton({"1"}, {TransitionMatrix(m, MatrixKind::unitary)}, MatrixKind::unitary, 0, {1});
}

Eigen::MatrixXd random_stochastic(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) m(r, c) = u(rng);
    m.col(c) /= m.col(c).sum();
  }
  return m;
}

ComplexMatrix random_unitary(std::mt19937& rng, int n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

}  // namespace

TEST(Linearize, Exa01MatchesPrintedMatrices) {
  const Automaton a = linearize(example_table("exa01"));
  Eigen::MatrixXd ma(3, 3), mb(3, 3);
  ma << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  mb << 0, 0, 0, 1, 1, 1, 0, 0, 0;
  EXPECT_EQ(real_part(a.transition(a.letter_index("a")).entries()), ma);
  EXPECT_EQ(real_part(a.transition(a.letter_index("b")).entries()), mb);
  EXPECT_EQ(a.kind(), MatrixKind::combinatorial);
}

TEST(Linearize, E1MatchesPrintedMatrices) {
  const Automaton a = linearize(example_table("e1"));
  Eigen::MatrixXd ma(4, 4), mb(4, 4);
  ma << 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0;
  mb << 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_EQ(real_part(a.transition(0).entries()), ma);
  EXPECT_EQ(real_part(a.transition(1).entries()), mb);
  // q4 has no outgoing transitions: zero columns.
  EXPECT_EQ(ma.col(3).sum(), 0.0);
  EXPECT_EQ(mb.col(3).sum(), 0.0);
}

TEST(Linearize, EmptyWordIsIdentity) {
  const Automaton a = linearize(example_table("exa01"));
  EXPECT_EQ(real_part(matrix_of(a, {})), Eigen::MatrixXd::Identity(3, 3));
}

TEST(Linearize, RejectsDuplicateTransition) {
  TransitionTable table = example_table("exa01");
  table.rules.push_back({"q1", "a", "q2"});
  EXPECT_THROW(linearize(table), ValidationError);
}

TEST(Linearize, RejectsUnknownNames) {
  TransitionTable table = example_table("exa01");
  table.rules.push_back({"q9", "a", "q2"});
  EXPECT_THROW(linearize(table), ValidationError);
  table = example_table("exa01");
  table.rules.push_back({"q1", "z", "q2"});
  EXPECT_THROW(linearize(table), ValidationError);
}

TEST(RunWord, FollowsTheTransitionTable) {
  const Automaton a = linearize(example_table("exa01"));
  EXPECT_EQ(real_part(run_word(a, a.parse_word("b"))), basis_vector(3, 1));
  EXPECT_EQ(real_part(run_word(a, a.parse_word(""))), basis_vector(3, 0));
  EXPECT_EQ(real_part(run_word(a, a.parse_word("ba"))), basis_vector(3, 2));
}

TEST(RunWord, IsReversedMatrixOf) {
  const Automaton a = linearize(example_table("exa01"));
  const LetterWord w = a.parse_word("abbab");
  LetterWord reversed(w.rbegin(), w.rend());
  ComplexVector start = ComplexVector::Zero(3);
  start(0) = 1.0;
  EXPECT_EQ(run_word(a, w), matrix_of(a, reversed) * start);
}

TEST(RunWord, RejectsUnknownLetter) {
  const Automaton a = linearize(example_table("exa01"));
  EXPECT_THROW(a.parse_word("abc"), ValidationError);
  EXPECT_THROW(run_word(a, {7}), ValidationError);
}

TEST(DfaAccepts, ExamplesFromTheTable) {
  const Automaton a = linearize(example_table("exa01"));
  EXPECT_TRUE(dfa_accepts(a, a.parse_word("b")));
  EXPECT_FALSE(dfa_accepts(a, a.parse_word("")));
  EXPECT_FALSE(dfa_accepts(a, a.parse_word("ba")));
}

TEST(DfaAccepts, ZeroVectorNeverAccepts) {
  const Automaton a = linearize(example_table("e1"));
  EXPECT_TRUE(dfa_accepts(a, a.parse_word("aa")));
  EXPECT_FALSE(dfa_accepts(a, a.parse_word("aaa")));
}

TEST(DfaAccepts, AgreesWithTableChasingOnRandomWords) {
  std::mt19937 rng(20240611);
  for (const char* name : {"exa01", "e1"}) {
    const TransitionTable table = example_table(name);
    const Automaton a = linearize(table);
    std::uniform_int_distribution<int> length(0, 12);
    std::uniform_int_distribution<std::size_t> letter(0, table.alphabet.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      LetterWord w;
      std::vector<std::string> letters;
      for (int i = length(rng); i > 0; --i) {
        w.push_back(letter(rng));
        letters.push_back(table.alphabet[w.back()]);
      }
      const auto end = chase(table, letters);
      const bool expected = end && std::find(table.accepting.begin(), table.accepting.end(), *end) != table.accepting.end();
      ASSERT_EQ(dfa_accepts(a, w), expected) << name << " word " << a.format_word(w);
    }
  }
}

TEST(DfaAccepts, RejectsNonCombinatorialKind) {
  EXPECT_THROW(dfa_accepts(stochastic_example(0.3), {0}), ValidationError);
}

TEST(AcceptanceProbability, StochasticExample) {
  const double p = 0.3;
  const Automaton a = stochastic_example(p);
  EXPECT_NEAR(acceptance_probability(a, a.parse_word("a")), 1.0 - p, 1e-15);
  const Automaton same_final({"a"}, {TransitionMatrix::identity(2, MatrixKind::stochastic)}, MatrixKind::stochastic, 0, {0});
  EXPECT_DOUBLE_EQ(acceptance_probability(same_final, {}), 1.0);
}

TEST(AcceptanceProbability, QuantumExampleGivesAmplitudeSquared) {
  const std::complex<double> alpha(0.6, 0.0), beta(0.0, 0.8);
  const Automaton a = quantum_example(alpha, beta);
  EXPECT_NEAR(acceptance_probability(a, a.parse_word("1")), std::norm(beta), 1e-15);
}

TEST(AcceptanceProbability, QuantumSumsOverAcceptingStates) {
  const std::complex<double> alpha(0.6, 0.0), beta(0.0, 0.8);
  ComplexMatrix m(2, 2);
  m << alpha, beta, -std::conj(beta), std::conj(alpha);
  const Automaton both({"1"}, {TransitionMatrix(m, MatrixKind::unitary)}, MatrixKind::unitary, 0, {0, 1});
  EXPECT_NEAR(acceptance_probability(both, both.parse_word("11")), 1.0, 1e-15);
}

TEST(AcceptanceProbability, RejectsCombinatorialKind) {
  const Automaton a = linearize(example_table("exa01"));
  EXPECT_THROW(acceptance_probability(a, {}), ValidationError);
}

TEST(TransitionMatrix, KindValidation) {
  Eigen::MatrixXd bad(2, 2);
  bad << 0.5, 1.0, 0.4, 0.0;
  EXPECT_THROW(TransitionMatrix::from_real(bad, MatrixKind::stochastic), ValidationError);
  Eigen::MatrixXd two_ones(2, 2);
  two_ones << 1, 0, 1, 0;
  EXPECT_THROW(TransitionMatrix::from_real(two_ones, MatrixKind::combinatorial), ValidationError);
  ComplexMatrix complex_stochastic = ComplexMatrix::Identity(2, 2);
  complex_stochastic(0, 0) = {1.0, 1e-3};
  EXPECT_THROW(TransitionMatrix(complex_stochastic, MatrixKind::stochastic), ValidationError);
  EXPECT_THROW(TransitionMatrix::from_real(2.0 * Eigen::MatrixXd::Identity(2, 2), MatrixKind::unitary), ValidationError);
  EXPECT_NO_THROW(TransitionMatrix::from_real(bad, MatrixKind::general));
}

TEST(CompositionLaw, HoldsOnRandomWords) {
  std::mt19937 rng(7);
  std::vector<TransitionMatrix> stochastic, unitary;
  for (int i = 0; i < 3; ++i) {
    stochastic.push_back(TransitionMatrix::from_real(random_stochastic(rng, 4), MatrixKind::stochastic));
    unitary.push_back(TransitionMatrix(random_unitary(rng, 4), MatrixKind::unitary));
  }
  const Automaton automata[] = {
      linearize(example_table("exa01")),
      Automaton({"a", "b", "c"}, stochastic, MatrixKind::stochastic, 0, {1}),
      Automaton({"a", "b", "c"}, unitary, MatrixKind::unitary, 0, {1}),
  };
  std::uniform_int_distribution<int> length(0, 6);
  for (const auto& a : automata) {
    std::uniform_int_distribution<std::size_t> letter(0, a.alphabet().size() - 1);
    auto random_word = [&] {
      LetterWord w;
      for (int i = length(rng); i > 0; --i) w.push_back(letter(rng));
      return w;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const LetterWord u = random_word();
      const LetterWord v = random_word();
      LetterWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const double defect = (matrix_of(a, uv) - matrix_of(a, u) * matrix_of(a, v)).cwiseAbs().maxCoeff();
      ASSERT_LT(defect, 1e-12);
    }
  }
}

TEST(KindPreservation, ProductsStayInKind) {
  std::mt19937 rng(11);
  TransitionMatrix s = TransitionMatrix::identity(5, MatrixKind::stochastic);
  TransitionMatrix u = TransitionMatrix::identity(5, MatrixKind::unitary);
  for (int i = 0; i < 50; ++i) {
    s = s * TransitionMatrix::from_real(random_stochastic(rng, 5), MatrixKind::stochastic);
    u = u * TransitionMatrix(random_unitary(rng, 5), MatrixKind::unitary);
  }
  EXPECT_LT((s.entries().real().colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_LT((u.entries().adjoint() * u.entries() - ComplexMatrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-12);
  const Automaton a = linearize(example_table("e1"));
  EXPECT_NO_THROW(a.transition(0) * a.transition(1) * a.transition(0));
}

TEST(TreeOrder, ThreeLetterExample) {
  const auto words = tree_order_enumerate(3, 2);
  const std::vector<std::string> expected = {"", "a", "b", "c", "aa", "ba", "ca", "ab", "bb", "cb", "ac", "bc", "cc"};
  const Automaton labels({"a", "b", "c"}, std::vector<TransitionMatrix>(3, TransitionMatrix::identity(1, MatrixKind::combinatorial)),
                         MatrixKind::combinatorial, 0, {});
  ASSERT_EQ(words.size(), expected.size());
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(labels.format_word(words[i]), expected[i]);
}

TEST(TreeOrder, TwoLetterExampleAndTrivialCase) {
  const auto words = tree_order_enumerate(2, 2);
  const std::vector<LetterWord> expected = {{}, {0}, {1}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(words, expected);
  EXPECT_EQ(tree_order_enumerate(4, 0), std::vector<LetterWord>{LetterWord{}});
}

TEST(TreeOrder, WordCountFormula) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t len = 0; len <= 5; ++len) {
      std::size_t power = 1;
      for (std::size_t i = 0; i <= len; ++i) power *= n;
      EXPECT_EQ(tree_order_enumerate(n, len).size(), (power - 1) / (n - 1));
    }
  }
}

TEST(ToDot, Exa01HasThreeNodesAndSixEdges) {
  const std::string dot = to_dot(linearize(example_table("exa01")));
  EXPECT_EQ(count_edges(dot), 6u);
  EXPECT_NE(dot.find("\"q2\" [shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("\"q1\" [shape=circle]"), std::string::npos);
  EXPECT_NE(dot.find("__start -> \"q1\""), std::string::npos);
  EXPECT_NE(dot.find("\"q1\" -> \"q2\" [label=\"b\"]"), std::string::npos);
}

TEST(ToDot, NoTransitionsGivesNodesOnly) {
  const Automaton a({"a"}, {TransitionMatrix::from_real(Eigen::MatrixXd::Zero(2, 2), MatrixKind::combinatorial)},
                    MatrixKind::combinatorial, 0, {});
  EXPECT_EQ(count_edges(to_dot(a)), 0u);
}

TEST(ToDot, WeightsAppearAfterSemicolon) {
  const std::string dot = to_dot(stochastic_example(0.25));
  EXPECT_NE(dot.find("label=\"a;0.25\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
}

TEST(SinkCompletion, MakesEveryColumnCombinatorialUnit) {
  const Automaton completed = complete_with_sink(linearize(example_table("e1")));
  ASSERT_EQ(completed.n_states(), 5u);
  for (std::size_t letter = 0; letter < 2; ++letter) {
    const Eigen::MatrixXd m = completed.transition(letter).entries().real();
    for (Eigen::Index c = 0; c < m.cols(); ++c) EXPECT_EQ(m.col(c).sum(), 1.0);
  }
  EXPECT_FALSE(dfa_accepts(completed, completed.parse_word("aaa")));
  EXPECT_EQ(real_part(run_word(completed, completed.parse_word("aaa"))), basis_vector(5, 4));
}
