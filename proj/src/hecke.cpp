#include "braidlab/hecke.hpp"

#include "braidlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace braidlab {

Deformation::Deformation(double q) : q_(q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw ValidationError("q must be a positive real number (got " + std::to_string(q) +
                          "); use the expert mode for other values");
  }
}

Deformation::Deformation(double q, ExpertTag) : q_(q) {
  if (q == 0.0 || !std::isfinite(q)) throw ValidationError("q must be a nonzero finite real number");
}

Deformation Deformation::expert(double q) { return Deformation(q, ExpertTag{}); }

Eigen::MatrixXd r_matrix(int n, Deformation q) {
  if (n < 1) throw ValidationError("r_matrix needs n >= 1");
  const double inv = 1.0 / q.value();
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Eigen::Index in = a * n + b;
      const Eigen::Index swapped = b * n + a;
      if (a == b) {
        r(in, in) = 1.0;
      } else {
        r(swapped, in) += inv;
        if (a > b) r(in, in) += 1.0 - inv * inv;
      }
    }
  }
  return r;
}

TensorState apply_generator(const TensorState& state, int i, Deformation q) {
  const int sites = state.sites();
  if (i < 1 || i > sites - 1) {
    throw ValidationError("generator index " + std::to_string(i) + " outside [1, " +
                          std::to_string(sites - 1) + "]");
  }
  const double inv = 1.0 / q.value();
  const double diagonal = 1.0 - inv * inv;
  const auto left = static_cast<std::size_t>(i - 1);
  TensorState out(state.alphabet_size(), sites);
  Word swapped;
  for (const auto& [word, amplitude] : state.terms()) {
    const int a = word[left];
    const int b = word[left + 1];
    if (a == b) {
      out.add(word, amplitude);
      continue;
    }
    swapped = word;
    std::swap(swapped[left], swapped[left + 1]);
    out.add(swapped, inv * amplitude);
    if (a > b) out.add(word, diagonal * amplitude);
  }
  return out;
}

Eigen::MatrixXd dense_generator(int n, int sites, int i, Deformation q) {
  if (i < 1 || i > sites - 1) throw ValidationError("generator index out of range");
  const std::size_t dim = tensor_dimension(n, sites);
  require_within(dim, dense_dimension_limit(), "dense generator");
  const Eigen::MatrixXd r = r_matrix(n, q);
  const std::size_t outer = tensor_dimension(n, i - 1);
  const std::size_t inner = tensor_dimension(n, sites - i - 1);
  const std::size_t local = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t u = 0; u < outer; ++u) {
    for (std::size_t v = 0; v < inner; ++v) {
      for (std::size_t row = 0; row < local; ++row) {
        for (std::size_t col = 0; col < local; ++col) {
          const double entry = r(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
          if (entry == 0.0) continue;
          const auto to = static_cast<Eigen::Index>((u * local + row) * inner + v);
          const auto from = static_cast<Eigen::Index>((u * local + col) * inner + v);
          m(to, from) = entry;
        }
      }
    }
  }
  return m;
}

BraidWord::BraidWord(std::vector<int> generators, int sites) : generators_(std::move(generators)) {
  for (int g : generators_) {
    if (g < 1 || g > sites - 1) {
      throw ValidationError("braid generator t" + std::to_string(g) + " outside [1, " +
                            std::to_string(sites - 1) + "]");
    }
  }
}

std::string BraidWord::to_string() const {
  if (generators_.empty()) return "e";
  std::ostringstream out;
  for (int g : generators_) out << 't' << g;
  return out.str();
}

TensorState apply_braid_word(const TensorState& state, const BraidWord& word, Deformation q, double scale) {
  TensorState current = state;
  const auto& gens = word.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    current = apply_generator(current, *it, q);
    if (scale != 1.0) current *= scale;
  }
  return current;
}

TensorState shuffle_apply(const TensorState& state, double z, Deformation q) {
  TensorState current = state;
  for (int k = 1; k < state.sites(); ++k) {
    TensorState accumulated = current;
    TensorState term = current;
    double power = 1.0;
    for (int j = 1; j <= k; ++j) {
      term = apply_generator(term, k - j + 1, q);
      power *= z;
      accumulated += power * term;
    }
    current = std::move(accumulated);
  }
  return current;
}

TensorState q_symmetrize(const TensorState& state, Deformation q) {
  return shuffle_apply(state, q.value() * q.value(), q);
}

TensorState q_antisymmetrize(const TensorState& state, Deformation q) { return shuffle_apply(state, -1.0, q); }

std::vector<std::vector<BraidWord>> reduced_words(int sites) {
  if (sites < 2) throw ValidationError("reduced_words needs N >= 2");
  if (sites > 8) throw GuardError("reduced_words is limited to N <= 8 (N! words)");
  const int max_length = sites * (sites - 1) / 2;
  std::vector<std::vector<BraidWord>> grouped(static_cast<std::size_t>(max_length + 1));
  // Inversion-table digits d_k in [0, k] for k = 1..N-1.
  std::vector<int> digits(static_cast<std::size_t>(sites - 1), 0);
  while (true) {
    std::vector<int> generators;
    for (int k = sites - 1; k >= 1; --k) {
      const int d = digits[static_cast<std::size_t>(k - 1)];
      for (int g = k - d + 1; g <= k; ++g) generators.push_back(g);
    }
    grouped[generators.size()].emplace_back(std::move(generators), sites);
    int k = 0;
    while (k < sites - 1 && ++digits[static_cast<std::size_t>(k)] > k + 1) digits[static_cast<std::size_t>(k++)] = 0;
    if (k == sites - 1) break;
  }
  for (auto& group : grouped) std::sort(group.begin(), group.end());
  return grouped;
}

TensorState word_sum_operator(int sites, int length, Deformation q, const TensorState& state) {
  if (state.sites() != sites) throw ValidationError("state has the wrong number of sites");
  const int max_length = sites * (sites - 1) / 2;
  if (length < 0 || length > max_length) {
    throw ValidationError("word length " + std::to_string(length) + " outside [0, " +
                          std::to_string(max_length) + "]");
  }
  TensorState result(state.alphabet_size(), sites);
  if (sites == 1) return state;
  const auto grouped = reduced_words(sites);
  for (const auto& word : grouped[static_cast<std::size_t>(length)]) {
    result += apply_braid_word(state, word, q, q.value());
  }
  return result;
}

CommutatorReport conjecture_commutator_check(int sites, int n, Deformation q) {
  const std::size_t dim = tensor_dimension(n, sites);
  require_within(dim, dense_dimension_limit(), "commutator check");
  CommutatorReport report;
  if (sites < 2) return report;
  const int max_length = sites * (sites - 1) / 2;
  const auto basis = all_words(n, sites);
  std::vector<Eigen::MatrixXd> sums;
  for (int l = 0; l <= max_length; ++l) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      m.col(static_cast<Eigen::Index>(col)) =
          to_dense(word_sum_operator(sites, l, q, TensorState::basis(n, basis[col])));
    }
    sums.push_back(std::move(m));
  }
  for (int k = 1; k <= max_length; ++k) {
    for (int l = k + 1; l <= max_length; ++l) {
      const auto& a = sums[static_cast<std::size_t>(k)];
      const auto& b = sums[static_cast<std::size_t>(l)];
      const double residual = (a * b - b * a).colwise().norm().maxCoeff();
      if (residual > report.max_residual) report = {residual, k, l};
    }
  }
  return report;
}

}  // namespace braidlab
