#pragma once

#include "dergraph/bigint.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace dergraph {

/// Append-only memo of D_0, D_1, ... computed by D_n = n D_{n-1} + (-1)^n.
/// Concurrent readers share the lock; extension takes it exclusively.
class DerangementTable {
 public:
  BigInt operator()(int n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<BigInt> values_{BigInt(1)};
};

/// Number of fixed-point-free permutations of n points.
BigInt derangement_count(int n);

/// Independent routes, kept for cross-checking the main recurrence.
BigInt derangement_count_inclusion_exclusion(int n);
BigInt derangement_count_two_term(int n);

struct IdentityViolation {
  int n;
  std::string identity;
};

struct IdentityReport {
  int n_max = 0;
  int checked = 0;
  std::vector<IdentityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks D_n = n D_{n-1} + (-1)^n for 1 <= n <= n_max and
/// D_n = (n-1)(D_{n-1} + D_{n-2}) for 2 <= n <= n_max.
IdentityReport verify_identities(int n_max);

struct NearestIntegerCheck {
  bool is_nearest = false;     ///< |D_n - n!/e| < 1/2
  bool within_bound = false;   ///< |D_n - n!/e| < 1/(n+1)
  int series_terms = 0;        ///< terms of sum (-1)^k/k! used for 1/e
  bool holds() const { return is_nearest && within_bound; }
};

/// Decides both comparisons with rational interval arithmetic, doubling the
/// number of series terms until each comparison is conclusive. Requires n >= 3.
NearestIntegerCheck nearest_integer_check(int n);
bool nearest_integer_characterization(int n);

}  // namespace dergraph
