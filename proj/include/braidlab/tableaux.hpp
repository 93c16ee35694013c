#pragma once

/**
 * @file tableaux.hpp
 * @brief Partitions and Young-tableau counts, in exact integer arithmetic.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace braidlab {

class Partition {
 public:
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_[static_cast<std::size_t>(row)]; }

  /// Column lengths of the conjugate diagram.
  std::vector<int> conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// k! for 0 <= k <= 20; throws GuardError beyond.
std::uint64_t factorial(int k);
std::uint64_t binomial(int n, int k);

/// All partitions of N in reverse-lexicographic order, optionally with at most `max_rows` parts.
std::vector<Partition> partitions_of(int N, std::optional<int> max_rows = std::nullopt);

/// Number of standard Young tableaux, by the hook-length formula.
std::uint64_t syt_dim(const Partition& shape);

/// Number of semistandard tableaux with entries in [1, n], by backtracking.
std::uint64_t ssyt_dim(const Partition& shape, int n);

/// Number of semistandard tableaux of `shape` with content `content` (content[i] copies of i+1).
std::uint64_t kostka(const Partition& shape, const std::vector<int>& content);

/// Checks sum over shapes with at most n rows of syt_dim * ssyt_dim against n^N.
bool schur_weyl_check(int n, int N);

}  // namespace braidlab
