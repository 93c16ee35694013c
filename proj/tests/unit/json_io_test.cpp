#include "braidlab/errors.hpp"
#include "braidlab/json_io.hpp"
#include "braidlab/qalgebra.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace braidlab;
using nlohmann::json;

namespace {

Automaton rotation_automaton() {
  const double c = std::cos(0.3), s = std::sin(0.3);
  ComplexMatrix a(2, 2), b(2, 2);
  a << c, -s, s, c;
  b << std::complex<double>(0, 1) / std::numbers::sqrt2, 1 / std::numbers::sqrt2,
      1 / std::numbers::sqrt2, std::complex<double>(0, 1) / std::numbers::sqrt2;
  return Automaton({"a", "b"}, {TransitionMatrix(a, MatrixKind::unitary), TransitionMatrix(b, MatrixKind::unitary)},
                   MatrixKind::unitary, 0, {1});
}

Automaton thirds_automaton() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
  return Automaton({"p"}, {TransitionMatrix::from_real(m, MatrixKind::stochastic)}, MatrixKind::stochastic, 2, {0, 2},
                   {"s1", "s2", "s3"});
}

void expect_round_trip(const Automaton& automaton, double tolerance) {
  const json first = automaton_to_json(automaton);
  const Automaton parsed = automaton_from_json(json::parse(first.dump()));
  EXPECT_EQ(automaton_to_json(parsed), first);
  EXPECT_EQ(parsed.alphabet(), automaton.alphabet());
  EXPECT_EQ(parsed.state_labels(), automaton.state_labels());
  EXPECT_EQ(parsed.kind(), automaton.kind());
  EXPECT_EQ(parsed.start(), automaton.start());
  EXPECT_EQ(parsed.accepting(), automaton.accepting());
  for (std::size_t letter = 0; letter < automaton.alphabet().size(); ++letter) {
    EXPECT_LE((parsed.transition(letter).entries() - automaton.transition(letter).entries()).cwiseAbs().maxCoeff(),
              tolerance);
  }
}

}  // namespace

TEST(JsonNumbers, TwelveSignificantDigits) {
  EXPECT_EQ(round_significant(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round_significant(2.0), 2.0);
  EXPECT_EQ(real_to_json(-0.0).dump(), "0.0");
  EXPECT_EQ(real_to_json(1e-300).get<double>(), 1e-300);
  const json z = complex_to_json({0.5, -2.0});
  EXPECT_EQ(z.at("re").get<double>(), 0.5);
  EXPECT_EQ(complex_from_json(z), std::complex<double>(0.5, -2.0));
  EXPECT_EQ(complex_from_json(json(1.5)), std::complex<double>(1.5, 0.0));
  EXPECT_THROW(complex_from_json(json("x")), ValidationError);
}

TEST(JsonAutomaton, SchemaAndLayout) {
  const json node = automaton_to_json(linearize(example_table("exa01")));
  EXPECT_EQ(node.at("schema"), kSchemaVersion);
  EXPECT_EQ(node.at("kind"), "combinatorial");
  EXPECT_EQ(node.at("start"), 1);
  EXPECT_TRUE(node.at("matrices").is_object());
  EXPECT_EQ(node.at("matrices").size(), node.at("alphabet").size());
}

TEST(JsonAutomaton, RoundTrips) {
  expect_round_trip(linearize(example_table("exa01")), 0.0);
  expect_round_trip(linearize(example_table("e1")), 0.0);
  expect_round_trip(crystal_automaton(3, 2), 0.0);
  expect_round_trip(symmetric_automaton(2, 3, 1.3), 5e-12);
  expect_round_trip(rotation_automaton(), 5e-12);
  expect_round_trip(thirds_automaton(), 5e-12);
}

TEST(JsonAutomaton, DeterministicText) {
  const Automaton a = symmetric_automaton(3, 2, 0.7);
  EXPECT_EQ(automaton_to_json(a).dump(2), automaton_to_json(a).dump(2));
}

TEST(JsonAutomaton, MalformedInputs) {
  json node = automaton_to_json(linearize(example_table("exa01")));
  json missing = node;
  missing.erase("kind");
  EXPECT_THROW(automaton_from_json(missing), ValidationError);

  json short_rows = node;
  short_rows["matrices"].begin()->erase(0);
  EXPECT_THROW(automaton_from_json(short_rows), ValidationError);

  json zero_start = node;
  zero_start["start"] = 0;
  EXPECT_THROW(automaton_from_json(zero_start), ValidationError);

  json bad_kind = node;
  bad_kind["kind"] = "stochastic";
  bad_kind["matrices"].begin()->at(0).at(0) = 7.0;
  EXPECT_THROW(automaton_from_json(bad_kind), ValidationError);
}

TEST(JsonQuandle, RoundTrips) {
  for (const auto& table : {dihedral(3), dihedral(5), tetrahedron(), trivial_quandle(2)}) {
    const json node = quandle_table_to_json(table);
    EXPECT_EQ(node.at("schema"), kSchemaVersion);
    EXPECT_EQ(quandle_table_from_json(json::parse(node.dump())), table);
  }
  const json printed = quandle_table_to_json(dihedral(3));
  EXPECT_EQ(printed.at("op"), json({1, 3, 2, 3, 2, 1, 2, 1, 3}));
}

TEST(JsonQuandle, MalformedInputs) {
  EXPECT_THROW(quandle_table_from_json(json{{"n", 2}, {"op", {1, 2, 3, 1}}}), ValidationError);
  EXPECT_THROW(quandle_table_from_json(json{{"op", {1, 2}}}), ValidationError);
  EXPECT_THROW(quandle_table_from_json(json{{"n", 2}, {"op", "12"}}), ValidationError);
}
