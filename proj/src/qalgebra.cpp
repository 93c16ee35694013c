#include "braidlab/qalgebra.hpp"

#include "braidlab/errors.hpp"
#include "braidlab/hecke.hpp"
#include "braidlab/qnumbers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace braidlab {

namespace {

void require_positive(Deformation q, const char* what) {
  if (q.value() <= 0.0) throw ValidationError(std::string(what) + " needs q > 0 (uses q^{1/2})");
}

void require_simple_root(int j, int n) {
  if (j < 1 || j > n - 1) {
    throw ValidationError("root index " + std::to_string(j) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

/// Sparse application of sum_k K^{-1} x ... x K^{-1} x g_k x K x ... x K, where g moves letter
/// `from` to `to` and K = q^{s_j/2} with s_j = +1 on letter j-1 and -1 on letter j (0-based).
TensorState apply_root_operator(int j, const TensorState& state, Deformation q, int from, int to) {
  require_positive(q, "coproduct action");
  require_simple_root(j, state.alphabet_size());
  const int up = j - 1;
  const int down = j;
  auto weight = [&](int letter) { return letter == up ? 1 : (letter == down ? -1 : 0); };
  const double half_power = std::sqrt(q.value());
  TensorState out(state.alphabet_size(), state.sites());
  Word moved;
  for (const auto& [word, amplitude] : state.terms()) {
    int suffix = 0;
    for (int letter : word) suffix += weight(letter);
    int prefix = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const int letter = word[k];
      suffix -= weight(letter);
      if (letter == from) {
        moved = word;
        moved[k] = to;
        out.add(moved, amplitude * std::pow(half_power, suffix - prefix));
      }
      prefix += weight(letter);
    }
  }
  return out;
}

}  // namespace

TensorState apply_E(int j, const TensorState& state, Deformation q) {
  return apply_root_operator(j, state, q, j - 1, j);
}

TensorState apply_F(int j, const TensorState& state, Deformation q) {
  return apply_root_operator(j, state, q, j, j - 1);
}

TensorState apply_qH(int j, const TensorState& state, Deformation q, int power) {
  require_simple_root(j, state.alphabet_size());
  TensorState out(state.alphabet_size(), state.sites());
  for (const auto& [word, amplitude] : state.terms()) {
    const auto up = std::count(word.begin(), word.end(), j - 1);
    const auto down = std::count(word.begin(), word.end(), j);
    out.add(word, amplitude * std::pow(q.value(), power * static_cast<int>(up - down)));
  }
  return out;
}

TensorState apply_qEps(int j, const TensorState& state, Deformation q) {
  if (j < 1 || j > state.alphabet_size()) {
    throw ValidationError("weight index " + std::to_string(j) + " outside [1, " +
                          std::to_string(state.alphabet_size()) + "]");
  }
  TensorState out(state.alphabet_size(), state.sites());
  for (const auto& [word, amplitude] : state.terms()) {
    const auto count = std::count(word.begin(), word.end(), j - 1);
    out.add(word, amplitude * std::pow(q.value(), static_cast<int>(count)));
  }
  return out;
}

DickeLabel::DickeLabel(std::vector<int> multiplicities, int sites) : m_(std::move(multiplicities)), sites_(sites) {
  if (m_.empty()) throw ValidationError("label needs at least one multiplicity");
  for (int m : m_) {
    if (m < 0 || m > sites) throw ValidationError("label multiplicities must lie in [0, N]");
  }
  if (std::accumulate(m_.begin(), m_.end(), 0) != sites) {
    throw ValidationError("label multiplicities must sum to N = " + std::to_string(sites));
  }
}

Word DickeLabel::ordered_word() const {
  Word word;
  for (std::size_t letter = 0; letter < m_.size(); ++letter) {
    word.insert(word.end(), static_cast<std::size_t>(m_[letter]), static_cast<int>(letter));
  }
  return word;
}

std::string DickeLabel::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < m_.size(); ++i) out << (i ? "," : "") << m_[i];
  out << ')';
  return out.str();
}

std::vector<DickeLabel> dicke_labels(int n, int sites) {
  if (n < 1 || sites < 1) throw ValidationError("dicke_labels needs n, N >= 1");
  std::vector<DickeLabel> labels;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int remaining) {
    if (static_cast<int>(current.size()) == n - 1) {
      current.push_back(remaining);
      labels.emplace_back(current, sites);
      current.pop_back();
      return;
    }
    for (int m = remaining; m >= 0; --m) {
      current.push_back(m);
      extend(remaining - m);
      current.pop_back();
    }
  };
  extend(sites);
  return labels;
}

double dicke_norm(const DickeLabel& label, Deformation q) {
  double denominator = 1.0;
  for (int m : label.multiplicities()) denominator *= bracket_factorial(m, q.value());
  return std::sqrt(bracket_factorial(label.sites(), q.value()) / denominator);
}

TensorState q_dicke(const DickeLabel& label, Deformation q) {
  const int n = label.alphabet_size();
  TensorState state = q_symmetrize(TensorState::basis(n, label.ordered_word()), q);
  double scale = dicke_norm(label, q);
  for (int m : label.multiplicities()) scale *= bracket_factorial(m, q.value());
  state *= 1.0 / scale;
  return state;
}

double CanonicalActionReport::max_residual() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

namespace {

ActionCheck compare_image(std::string operation, const TensorState& image, std::optional<DickeLabel> target,
                          double expected, Deformation q) {
  ActionCheck check{std::move(operation), target, expected, 0.0, 0.0};
  if (!target) {
    check.residual = image.norm();
    return check;
  }
  const TensorState reference = q_dicke(*target, q);
  check.observed_coefficient = image.dot(reference);
  check.residual = (image - expected * reference).norm();
  return check;
}

std::optional<DickeLabel> shifted(const DickeLabel& label, int from, int to) {
  auto m = label.multiplicities();
  if (m[static_cast<std::size_t>(from)] == 0) return std::nullopt;
  --m[static_cast<std::size_t>(from)];
  ++m[static_cast<std::size_t>(to)];
  return DickeLabel(std::move(m), label.sites());
}

}  // namespace

CanonicalActionReport verify_canonical_action(const DickeLabel& label, int j, Deformation q) {
  require_simple_root(j, label.alphabet_size());
  const TensorState state = q_dicke(label, q);
  const int kj = label[j - 1];
  const int kn = label[j];
  CanonicalActionReport report{label, j, {}};
  const double e_coefficient = kj > 0 ? std::sqrt(q_number(kn + 1, q) * q_number(kj, q)) : 0.0;
  report.checks.push_back(compare_image("E", apply_E(j, state, q), shifted(label, j - 1, j), e_coefficient, q));
  const double f_coefficient = kn > 0 ? std::sqrt(q_number(kj + 1, q) * q_number(kn, q)) : 0.0;
  report.checks.push_back(compare_image("F", apply_F(j, state, q), shifted(label, j, j - 1), f_coefficient, q));
  report.checks.push_back(
      compare_image("qH", apply_qH(j, state, q), label, std::pow(q.value(), kj - kn), q));
  return report;
}

std::map<DickeLabel, TensorState> generate_basis_by_raising(int n, int sites, Deformation q) {
  require_within(tensor_dimension(n, sites), 1'000'000, "generate_basis_by_raising");
  std::map<DickeLabel, TensorState> basis;
  const Word reference(static_cast<std::size_t>(sites), 0);
  for (const auto& label : dicke_labels(n, sites)) {
    TensorState state = TensorState::basis(n, reference);
    for (int j = 1; j < n; ++j) {
      int raises = 0;
      for (int letter = j; letter < n; ++letter) raises += label[letter];
      for (int step = 0; step < raises; ++step) state = apply_E(j, state, q);
    }
    state *= 1.0 / state.norm();
    basis.emplace(label, std::move(state));
  }
  return basis;
}

namespace {

void require_ordered(const Word& word, int n) {
  if (!std::is_sorted(word.begin(), word.end())) {
    throw ValidationError("crystal operators act on ordered words only");
  }
  for (int letter : word) {
    if (letter < 0 || letter >= n) throw ValidationError("letter outside alphabet");
  }
}

}  // namespace

std::optional<Word> crystal_e(int j, const Word& ordered, int n) {
  require_simple_root(j, n);
  require_ordered(ordered, n);
  auto it = std::find(ordered.rbegin(), ordered.rend(), j - 1);
  if (it == ordered.rend()) return std::nullopt;
  Word moved = ordered;
  moved[static_cast<std::size_t>(ordered.rend() - it - 1)] = j;
  return moved;
}

std::optional<Word> crystal_f(int j, const Word& ordered, int n) {
  require_simple_root(j, n);
  require_ordered(ordered, n);
  auto it = std::find(ordered.begin(), ordered.end(), j);
  if (it == ordered.end()) return std::nullopt;
  Word moved = ordered;
  moved[static_cast<std::size_t>(it - ordered.begin())] = j - 1;
  return moved;
}

namespace {

struct LabelIndex {
  std::vector<DickeLabel> labels;
  std::map<DickeLabel, std::size_t> position;
  std::vector<std::string> names;
};

LabelIndex index_labels(int n, int sites) {
  LabelIndex index{dicke_labels(n, sites), {}, {}};
  require_within(index.labels.size(), dense_dimension_limit(), "q-symmetric state space");
  for (std::size_t i = 0; i < index.labels.size(); ++i) {
    index.position.emplace(index.labels[i], i);
    std::string name;
    for (int letter : index.labels[i].ordered_word()) name += "x" + std::to_string(letter + 1);
    index.names.push_back(name);
  }
  return index;
}

}  // namespace

Automaton crystal_automaton(int n, int sites) {
  if (n < 2) throw ValidationError("crystal automaton needs n >= 2");
  const LabelIndex index = index_labels(n, sites);
  const auto dim = static_cast<Eigen::Index>(index.labels.size());
  std::vector<std::string> alphabet;
  std::vector<TransitionMatrix> matrices;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 1; j < n; ++j) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
      for (std::size_t s = 0; s < index.labels.size(); ++s) {
        const Word word = index.labels[s].ordered_word();
        const auto image = pass == 0 ? crystal_e(j, word, n) : crystal_f(j, word, n);
        if (!image) continue;
        const DickeLabel target(content_of(n, *image), sites);
        m(static_cast<Eigen::Index>(index.position.at(target)), static_cast<Eigen::Index>(s)) = 1.0;
      }
      alphabet.push_back((pass == 0 ? "e" : "f") + std::to_string(j));
      matrices.push_back(TransitionMatrix::from_real(m, MatrixKind::combinatorial));
    }
  }
  return Automaton(std::move(alphabet), std::move(matrices), MatrixKind::combinatorial, 0, {}, index.names);
}

Automaton symmetric_automaton(int n, int sites, Deformation q, CoefficientVariant variant) {
  if (n < 2) throw ValidationError("symmetric automaton needs n >= 2");
  require_positive(q, "symmetric automaton");
  const LabelIndex index = index_labels(n, sites);
  const auto dim = static_cast<Eigen::Index>(index.labels.size());
  std::vector<std::string> alphabet;
  std::vector<TransitionMatrix> matrices;
  for (int j = 1; j < n; ++j) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < index.labels.size(); ++s) {
      const DickeLabel& label = index.labels[s];
      const int kj = label[j - 1];
      const int kn = label[j];
      const auto col = static_cast<Eigen::Index>(s);
      if (auto up = shifted(label, j - 1, j)) {
        const double product = q_number(kn + 1, q) * q_number(kj, q);
        e(static_cast<Eigen::Index>(index.position.at(*up)), col) =
            variant == CoefficientVariant::symmetric ? std::sqrt(product) : 1.0;
      }
      if (auto down = shifted(label, j, j - 1)) {
        const double product = q_number(kj + 1, q) * q_number(kn, q);
        f(static_cast<Eigen::Index>(index.position.at(*down)), col) =
            variant == CoefficientVariant::symmetric ? std::sqrt(product) : product;
      }
      h(col, col) = std::pow(q.value(), kj - kn);
    }
    const std::string suffix = std::to_string(j);
    alphabet.insert(alphabet.end(), {"E" + suffix, "F" + suffix, "qH" + suffix});
    matrices.push_back(TransitionMatrix::from_real(e, MatrixKind::general));
    matrices.push_back(TransitionMatrix::from_real(f, MatrixKind::general));
    matrices.push_back(TransitionMatrix::from_real(h, MatrixKind::general));
  }
  return Automaton(std::move(alphabet), std::move(matrices), MatrixKind::general, 0, {}, index.names);
}

}  // namespace braidlab
