#pragma once

#include "dergraph/bigint.hpp"
#include "dergraph/permutation.hpp"

#include <string>
#include <vector>

namespace dergraph {

/// Integer partition, parts strictly positive and non-increasing.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }

  /// lambda_1 + l(lambda) - 1; throws on the empty partition.
  int principal_hook_size() const;
  /// (lambda_2 - 1, lambda_3 - 1, ...) with zeros dropped.
  Partition remove_principal_hook() const;
  /// (lambda_1 - 1, lambda_2 - 1, ...) with zeros dropped.
  Partition remove_first_column() const;
  Partition conjugate() const;

  bool is_hook() const;
  bool is_near_hook() const;

  /// "(4,1,1)"; the empty partition prints as "()".
  std::string to_string() const;
  CycleType as_cycle_type() const { return CycleType(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// (n-i, 1^i)
Partition hook(int n, int i);
/// (n-2-i, 2, 1^i)
Partition near_hook(int n, int i);

/// All partitions of n in reverse-lexicographic order, (n) first and (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda, by the hook-length formula.
BigInt dim_f(const Partition& lambda);

}  // namespace dergraph
