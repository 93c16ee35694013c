#include "braidlab/tableaux.hpp"

#include "braidlab/errors.hpp"

#include <functional>
#include <numeric>
#include <string>

namespace braidlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> columns(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++columns[static_cast<std::size_t>(c)];
  }
  return columns;
}

std::uint64_t factorial(int k) {
  if (k < 0) throw ValidationError("factorial of a negative number");
  if (k > 20) throw GuardError("factorial(" + std::to_string(k) + ") overflows 64 bits");
  std::uint64_t result = 1;
  for (int i = 2; i <= k; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i is integral; gcd(result, i) is cancelled before the multiplication.
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) throw GuardError("binomial coefficient overflows 64 bits");
  }
  return result;
}

std::vector<Partition> partitions_of(int N, std::optional<int> max_rows) {
  if (N < 1) throw ValidationError("partitions_of needs N >= 1");
  if (max_rows && *max_rows < 1) throw ValidationError("max_rows must be positive");
  std::vector<Partition> result;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    if (max_rows && static_cast<int>(current.size()) == *max_rows) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(N, N);
  return result;
}

std::uint64_t syt_dim(const Partition& shape) {
  const auto columns = shape.conjugate();
  std::uint64_t hooks = 1;
  for (int row = 0; row < shape.rows(); ++row) {
    for (int col = 0; col < shape[row]; ++col) {
      const int arm = shape[row] - col - 1;
      const int leg = columns[static_cast<std::size_t>(col)] - row - 1;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return factorial(shape.size()) / hooks;
}

namespace {

/// Backtracking over cells in row-major order. `allowed(value)` may veto entries,
/// which lets kostka reuse the same walk with a content budget.
class TableauFiller {
 public:
  TableauFiller(const Partition& shape, int n) : shape_(shape), n_(n) {
    for (int r = 0; r < shape.rows(); ++r) grid_.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  }

  std::uint64_t count(std::vector<int>* budget) {
    budget_ = budget;
    return fill(0, 0);
  }

 private:
  std::uint64_t fill(int row, int col) {
    if (row == shape_.rows()) return 1;
    const int next_row = col + 1 == shape_[row] ? row + 1 : row;
    const int next_col = col + 1 == shape_[row] ? 0 : col + 1;
    int low = 1;
    if (col > 0) low = std::max(low, cell(row, col - 1));
    if (row > 0) low = std::max(low, cell(row - 1, col) + 1);
    std::uint64_t total = 0;
    for (int v = low; v <= n_; ++v) {
      if (budget_ != nullptr) {
        int& left = (*budget_)[static_cast<std::size_t>(v - 1)];
        if (left == 0) continue;
        --left;
        cell(row, col) = v;
        total += fill(next_row, next_col);
        ++left;
      } else {
        cell(row, col) = v;
        total += fill(next_row, next_col);
      }
    }
    return total;
  }

  int& cell(int row, int col) { return grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

  const Partition& shape_;
  int n_;
  std::vector<std::vector<int>> grid_;
  std::vector<int>* budget_ = nullptr;
};

}  // namespace

std::uint64_t ssyt_dim(const Partition& shape, int n) {
  if (n < 1) throw ValidationError("alphabet size must be positive");
  if (shape.rows() > n) return 0;
  return TableauFiller(shape, n).count(nullptr);
}

std::uint64_t kostka(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw ValidationError("content entries must be nonnegative");
    total += c;
  }
  if (total != shape.size()) {
    throw ValidationError("content size " + std::to_string(total) + " differs from |lambda| = " +
                          std::to_string(shape.size()));
  }
  if (content.empty()) return 0;
  std::vector<int> budget = content;
  return TableauFiller(shape, static_cast<int>(content.size())).count(&budget);
}

bool schur_weyl_check(int n, int N) {
  if (n < 1 || N < 1) throw ValidationError("schur_weyl_check needs n, N >= 1");
  std::uint64_t total = 0;
  for (const auto& shape : partitions_of(N, n)) total += syt_dim(shape) * ssyt_dim(shape, n);
  return total == checked_pow(static_cast<std::size_t>(n), N);
}

}  // namespace braidlab
