// braidlab: command-line front end for the braid, Hecke, q-Dicke, spin-chain and quandle tools.
//
// Exit codes: 0 success, 1 size guard rejection or internal error, 2 invalid input,
// 3 a `verify` run whose checks did not all pass.

#include "braidlab/automaton.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/hecke.hpp"
#include "braidlab/json_io.hpp"
#include "braidlab/qalgebra.hpp"
#include "braidlab/quandle.hpp"
#include "braidlab/spectra.hpp"
#include "braidlab/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace braidlab;
using nlohmann::json;

namespace {

constexpr int kExitGuard = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

struct DeformationFlags {
  double q = 1.5;
  bool expert = false;

  Deformation get() const { return expert ? Deformation::expert(q) : Deformation(q); }
};

void add_deformation(CLI::App* cmd, DeformationFlags& flags) {
  cmd->add_option("--q", flags.q, "Deformation parameter q (positive unless --expert)")->capture_default_str();
  cmd->add_flag("--expert", flags.expert, "Accept any nonzero real q");
}

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", round_significant(value) == 0.0 ? 0.0 : value);
  return buffer;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

json state_to_json(const TensorState& state) {
  json coefficients = json::object();
  for (const auto& [word, value] : state.terms()) {
    coefficients[format_word(state.alphabet_size(), word)] = real_to_json(value);
  }
  return coefficients;
}

// ---------------------------------------------------------------------------------------------
// automaton

struct AutomatonArgs {
  std::string example;
  std::string file;
  std::string word;
  bool has_word = false;
  int accepted_up_to = -1;
  bool dot = false;
  bool complete = false;
};

std::string run_automaton(const AutomatonArgs& args) {
  if (args.example.empty() == args.file.empty()) {
    throw ValidationError("give exactly one of --example or --file");
  }
  Automaton automaton = args.file.empty() ? linearize(example_table(args.example))
                                          : automaton_from_json(read_json_file(args.file));
  if (args.complete) automaton = complete_with_sink(automaton);

  if (args.dot) return to_dot(automaton, args.example.empty() ? "automaton" : args.example);

  if (!args.has_word && args.accepted_up_to < 0) return automaton_to_json(automaton).dump(2) + "\n";

  json out{{"schema", kSchemaVersion}, {"kind", to_string(automaton.kind())}};
  if (args.has_word) {
    const LetterWord word = automaton.parse_word(args.word);
    const ComplexVector final_state = run_word(automaton, word);
    json vector = json::array();
    for (Eigen::Index i = 0; i < final_state.size(); ++i) {
      vector.push_back(automaton.kind() == MatrixKind::unitary ? complex_to_json(final_state(i))
                                                               : real_to_json(final_state(i).real()));
    }
    out["word"] = automaton.format_word(word);
    out["state"] = std::move(vector);
    if (automaton.kind() == MatrixKind::combinatorial) {
      out["accepted"] = dfa_accepts(automaton, word);
    } else {
      out["acceptance_probability"] = real_to_json(acceptance_probability(automaton, word));
    }
  }
  if (args.accepted_up_to >= 0) {
    if (automaton.kind() != MatrixKind::combinatorial) {
      throw ValidationError("--accepted-up-to needs a combinatorial automaton");
    }
    json accepted = json::array();
    for (const auto& word : tree_order_enumerate(automaton.alphabet().size(),
                                                 static_cast<std::size_t>(args.accepted_up_to))) {
      if (dfa_accepts(automaton, word)) accepted.push_back(automaton.format_word(word));
    }
    out["accepted_words"] = std::move(accepted);
  }
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------
// tableaux

std::string run_tableaux(int n, int sites) {
  if (n < 1 || sites < 1) throw ValidationError("tableaux needs --n >= 1 and --N >= 1");
  json rows = json::array();
  for (const auto& shape : partitions_of(sites)) {
    rows.push_back({{"partition", shape.parts()}, {"syt_dim", syt_dim(shape)}, {"ssyt_dim", ssyt_dim(shape, n)}});
  }
  const json out{{"schema", kSchemaVersion},
                 {"n", n},
                 {"N", sites},
                 {"partitions", std::move(rows)},
                 {"schur_weyl", schur_weyl_check(n, sites)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------
// shuffle

struct ShuffleArgs {
  int n = 2;
  int sites = 3;
  std::string z = "q2";
  std::string state;
  bool reduced_words = false;
  DeformationFlags q;
};

double parse_z(const std::string& text, double q) {
  if (text == "q2") return q * q;
  if (text == "minus1") return -1.0;
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ValidationError("--z must be q2, minus1 or a number, got '" + text + "'");
}

std::string run_shuffle(const ShuffleArgs& args) {
  if (args.reduced_words) {
    std::ostringstream out;
    const auto grouped = reduced_words(args.sites);
    for (std::size_t length = 0; length < grouped.size(); ++length) {
      out << "# length " << length << "\n";
      for (const auto& word : grouped[length]) out << word.to_string() << "\n";
    }
    return out.str();
  }
  if (args.state.empty()) throw ValidationError("shuffle needs --state or --reduced-words");
  const Deformation q = args.q.get();
  const Word word = parse_word(args.n, args.state);
  if (static_cast<int>(word.size()) != args.sites) {
    throw ValidationError("state has " + std::to_string(word.size()) + " letters, expected N = " +
                          std::to_string(args.sites));
  }
  const double z = parse_z(args.z, q.value());
  const TensorState image = shuffle_apply(TensorState::basis(args.n, word), z, q);
  const json out{{"schema", kSchemaVersion}, {"n", args.n},        {"N", args.sites},
                 {"q", real_to_json(q.value())}, {"z", real_to_json(z)}, {"state", format_word(args.n, word)},
                 {"coefficients", state_to_json(image)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------
// dicke and crystal

struct DickeArgs {
  int n = 2;
  int sites = 2;
  std::vector<int> label;
  bool automaton = false;
  bool rescaled = false;
  DeformationFlags q;
};

std::string run_dicke(const DickeArgs& args) {
  const Deformation q = args.q.get();
  if (args.automaton) {
    const auto variant = args.rescaled ? CoefficientVariant::rescaled : CoefficientVariant::symmetric;
    return to_dot(symmetric_automaton(args.n, args.sites, q, variant), "symmetric");
  }
  if (args.label.empty()) throw ValidationError("dicke needs --label or --automaton");
  if (static_cast<int>(args.label.size()) != args.n) {
    throw ValidationError("--label needs n = " + std::to_string(args.n) + " multiplicities");
  }
  const DickeLabel label(args.label, args.sites);
  const TensorState state = q_dicke(label, q);
  const json out{{"schema", kSchemaVersion},
                 {"n", args.n},
                 {"N", args.sites},
                 {"q", real_to_json(q.value())},
                 {"label", label.multiplicities()},
                 {"coefficients", state_to_json(state)},
                 {"norm_check", real_to_json(state.norm())}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------
// spectrum and verify

struct SpectrumArgs {
  int n = 2;
  int sites = 3;
  std::optional<int> sector;
  std::string format = "json";
  bool parallel = false;
  DeformationFlags q;
};

std::string run_spectrum(const SpectrumArgs& args) {
  const Deformation q = args.q.get();
  const auto decomposition = diagonalize(OpenChain(args.n, args.sites, q), {.parallel = args.parallel});
  std::optional<SectorReport> sectors;
  if (args.n == 2 && q.value() > 0.0) {
    sectors = classify_sectors(decomposition);
  } else if (args.sector) {
    throw ValidationError("--sector needs n = 2 and q > 0");
  }

  struct Row {
    double value;
    std::size_t multiplicity;
    std::optional<int> sector;
    std::optional<double> hw_residual;
  };
  std::vector<Row> rows;
  for (std::size_t c = 0; c < decomposition.clusters().size(); ++c) {
    Row row{decomposition.clusters()[c].value, decomposition.clusters()[c].multiplicity(), std::nullopt, std::nullopt};
    if (sectors) {
      row.sector = sectors->cluster_sector[c];
      row.hw_residual = sectors->cluster_hw_residual[c];
    }
    if (args.sector && row.sector != args.sector) continue;
    rows.push_back(row);
  }

  if (args.format == "csv") {
    std::ostringstream out;
    out << "value,multiplicity,sector,hw_residual\n";
    for (const auto& row : rows) {
      out << format_real(row.value) << ',' << row.multiplicity << ','
          << (row.sector ? std::to_string(*row.sector) : "") << ','
          << (row.hw_residual ? format_real(*row.hw_residual) : "") << "\n";
    }
    return out.str();
  }

  json table = json::array();
  for (const auto& row : rows) {
    table.push_back({{"value", real_to_json(row.value)},
                     {"multiplicity", row.multiplicity},
                     {"sector", row.sector ? json(*row.sector) : json(nullptr)},
                     {"hw_residual", row.hw_residual ? real_to_json(*row.hw_residual) : json(nullptr)}});
  }
  json out{{"schema", kSchemaVersion},
           {"n", args.n},
           {"N", args.sites},
           {"q", real_to_json(q.value())},
           {"dimension", decomposition.dimension()},
           {"max_residual", real_to_json(decomposition.max_residual())},
           {"eigenvalues", std::move(table)}};
  if (sectors) out["warnings"] = sectors->warnings;
  return out.dump(2) + "\n";
}

std::string run_verify(int n, int sites, const DeformationFlags& flags, bool& passed) {
  const VerificationReport report = verify_decomposition(n, sites, flags.get());
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(
        {{"name", check.name}, {"expected", check.expected}, {"observed", check.observed}, {"pass", check.pass}});
  }
  passed = report.pass();
  const json out{{"schema", kSchemaVersion}, {"n", n},          {"N", sites},
                 {"q", real_to_json(report.q)}, {"pass", passed}, {"checks", std::move(checks)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------
// quandle

json spectrum_to_json(const QuandleSpectrum& spectrum, const Eigen::MatrixXd& r, const std::string& source) {
  json spaces = json::array();
  for (const auto& space : spectrum.spaces) {
    QuandleSpectrum single{spectrum.n, {space}};
    spaces.push_back({{"value", complex_to_json(space.value)},
                      {"dimension", space.vectors.cols()},
                      {"residual", real_to_json(single.max_residual(r))}});
  }
  return json{{"schema", kSchemaVersion},
              {"n", spectrum.n},
              {"source", source},
              {"dimension", spectrum.dimension()},
              {"eigenspaces", std::move(spaces)}};
}

std::string run_quandle_dihedral(int n, bool spectrum) {
  const QuandleTable table = dihedral(n);
  if (!spectrum) return quandle_table_to_json(table).dump(2) + "\n";
  const QuandleBraid braid = braid_solution(table);
  if (n % 2 == 1) return spectrum_to_json(dihedral_spectrum(n), braid.matrix(), "orbit construction").dump(2) + "\n";
  return spectrum_to_json(dense_braid_spectrum(braid), braid.matrix(), "dense oracle").dump(2) + "\n";
}

std::string run_quandle_validate(const std::string& path) {
  const QuandleTable table = quandle_table_from_json(read_json_file(path));
  const AxiomReport axioms = validate(table);
  const json out{{"schema", kSchemaVersion},
                 {"n", table.size()},
                 {"shelf", axioms.shelf},
                 {"rack", axioms.rack},
                 {"quandle", axioms.quandle}};
  return out.dump(2) + "\n";
}

std::string run_quandle_orbits(int n, const std::string& table_path, int sites, bool dot) {
  const QuandleTable table = table_path.empty() ? dihedral(n) : quandle_table_from_json(read_json_file(table_path));
  const OrbitGraph graph = orbit_automaton(table, sites);
  if (dot) return to_dot(graph.to_automaton(), "orbits");
  json generators = json::array();
  for (std::size_t j = 0; j < graph.cycles.size(); ++j) {
    json cycles = json::array();
    for (const auto& cycle : graph.cycles[j]) {
      json words = json::array();
      for (std::size_t index : cycle) words.push_back(format_word(table.size(), word_at(table.size(), sites, index)));
      cycles.push_back(std::move(words));
    }
    generators.push_back({{"generator", "r" + std::to_string(j + 1)}, {"order", graph.orders[j]}, {"cycles", std::move(cycles)}});
  }
  const json out{{"schema", kSchemaVersion}, {"n", table.size()}, {"N", sites}, {"generators", std::move(generators)}};
  return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided automata, Hecke and q-Dicke tools, open spin-chain spectra and quandle solutions"};
  app.require_subcommand(1);

  AutomatonArgs automaton_args;
  auto* automaton = app.add_subcommand("automaton", "Linearize, run or export an automaton");
  automaton->add_option("--example", automaton_args.example, "Built-in transition table")
      ->check(CLI::IsMember({"exa01", "e1"}));
  automaton->add_option("--file", automaton_args.file, "Automaton JSON description")->check(CLI::ExistingFile);
  auto* word_option = automaton->add_option("--word", automaton_args.word, "Run this word (empty string allowed)");
  automaton->add_option("--accepted-up-to", automaton_args.accepted_up_to,
                        "List accepted words up to this length in tree order")
      ->check(CLI::Range(0, 64));
  automaton->add_flag("--dot", automaton_args.dot, "Emit Graphviz DOT instead of JSON");
  automaton->add_flag("--complete", automaton_args.complete, "Route missing transitions to a sink state");

  int tableaux_n = 2, tableaux_sites = 3;
  auto* tableaux = app.add_subcommand("tableaux", "Tableau counts for partitions of N");
  tableaux->add_option("--n", tableaux_n, "Alphabet size")->required();
  tableaux->add_option("--N", tableaux_sites, "Number of boxes")->required();

  ShuffleArgs shuffle_args;
  auto* shuffle = app.add_subcommand("shuffle", "Apply the shuffle operator Y_N(z) or list reduced words");
  shuffle->add_option("--n", shuffle_args.n, "Alphabet size")->capture_default_str();
  shuffle->add_option("--N", shuffle_args.sites, "Number of sites")->capture_default_str();
  shuffle->add_option("--z", shuffle_args.z, "q2, minus1 or a number")->capture_default_str();
  shuffle->add_option("--state", shuffle_args.state, "Basis word such as 122 or x1x2x2");
  shuffle->add_flag("--reduced-words", shuffle_args.reduced_words, "Print one reduced word per permutation");
  add_deformation(shuffle, shuffle_args.q);

  DickeArgs dicke_args;
  auto* dicke = app.add_subcommand("dicke", "Normalized q-symmetric state or the symmetric automaton");
  dicke->add_option("--n", dicke_args.n, "Alphabet size")->capture_default_str();
  dicke->add_option("--N", dicke_args.sites, "Number of sites")->capture_default_str();
  dicke->add_option("--label", dicke_args.label, "Multiplicities k1,k2,...")->delimiter(',');
  dicke->add_flag("--automaton", dicke_args.automaton, "Emit the E/F/qH automaton on q-Dicke states as DOT");
  dicke->add_flag("--rescaled", dicke_args.rescaled, "Use unit E coefficients with the product on F");
  add_deformation(dicke, dicke_args.q);

  int crystal_n = 2, crystal_sites = 2;
  auto* crystal = app.add_subcommand("crystal", "DOT of the symmetric crystal automaton");
  crystal->add_option("--n", crystal_n, "Alphabet size")->capture_default_str();
  crystal->add_option("--N", crystal_sites, "Number of sites")->capture_default_str();

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the open chain H = r_1 + ... + r_{N-1}");
  spectrum->add_option("--n", spectrum_args.n, "Alphabet size")->capture_default_str();
  spectrum->add_option("--N", spectrum_args.sites, "Number of sites")->capture_default_str();
  spectrum->add_option("--sector", spectrum_args.sector, "Only clusters of this sector (n = 2)");
  spectrum->add_option("--format", spectrum_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  spectrum->add_flag("--parallel", spectrum_args.parallel, "Solve weight blocks concurrently");
  add_deformation(spectrum, spectrum_args.q);

  int verify_n = 2, verify_sites = 4;
  DeformationFlags verify_q;
  auto* verify = app.add_subcommand("verify", "Check eigenspace multiplicities against tableau predictions");
  verify->add_option("--n", verify_n, "Alphabet size")->capture_default_str();
  verify->add_option("--N", verify_sites, "Number of sites")->capture_default_str();
  add_deformation(verify, verify_q);

  auto* quandle = app.add_subcommand("quandle", "Quandle tables, braid solutions and orbit graphs");
  quandle->require_subcommand(1);
  int dihedral_n = 3;
  bool dihedral_spectrum_flag = false;
  auto* q_dihedral = quandle->add_subcommand("dihedral", "Dihedral quandle i |> j = 2i - j mod n");
  q_dihedral->add_option("--n", dihedral_n, "Order")->capture_default_str();
  q_dihedral->add_flag("--spectrum", dihedral_spectrum_flag, "Eigenspaces of r instead of the table");
  auto* q_tetrahedron = quandle->add_subcommand("tetrahedron", "The four-element tetrahedron quandle");
  std::string validate_path;
  auto* q_validate = quandle->add_subcommand("validate", "Check shelf, rack and quandle axioms");
  q_validate->add_option("--table", validate_path, "Table JSON {n, op}")->required()->check(CLI::ExistingFile);
  int orbits_n = 3, orbits_sites = 2;
  std::string orbits_path;
  bool orbits_dot = false;
  auto* q_orbits = quandle->add_subcommand("orbits", "Cycles of r_j on basis words");
  q_orbits->add_option("--n", orbits_n, "Dihedral order when no table is given")->capture_default_str();
  q_orbits->add_option("--table", orbits_path, "Table JSON {n, op}")->check(CLI::ExistingFile);
  q_orbits->add_option("--N", orbits_sites, "Number of sites")->capture_default_str();
  q_orbits->add_flag("--dot", orbits_dot, "Emit Graphviz DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitInvalid;
  }
  automaton_args.has_word = word_option->count() > 0;

  int exit_code = 0;
  try {
    std::string payload;
    if (*automaton) {
      payload = run_automaton(automaton_args);
    } else if (*tableaux) {
      payload = run_tableaux(tableaux_n, tableaux_sites);
    } else if (*shuffle) {
      payload = run_shuffle(shuffle_args);
    } else if (*dicke) {
      payload = run_dicke(dicke_args);
    } else if (*crystal) {
      payload = to_dot(crystal_automaton(crystal_n, crystal_sites), "crystal");
    } else if (*spectrum) {
      payload = run_spectrum(spectrum_args);
    } else if (*verify) {
      bool passed = false;
      payload = run_verify(verify_n, verify_sites, verify_q, passed);
      if (!passed) exit_code = kExitVerifyFailed;
    } else if (*q_dihedral) {
      payload = run_quandle_dihedral(dihedral_n, dihedral_spectrum_flag);
    } else if (*q_tetrahedron) {
      payload = quandle_table_to_json(tetrahedron()).dump(2) + "\n";
    } else if (*q_validate) {
      payload = run_quandle_validate(validate_path);
    } else if (*q_orbits) {
      payload = run_quandle_orbits(orbits_n, orbits_path, orbits_sites, orbits_dot);
    }
    std::cout << payload << std::flush;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const GuardError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitGuard;
  }
  return exit_code;
}
