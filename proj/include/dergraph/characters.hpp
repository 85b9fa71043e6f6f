#pragma once

#include "dergraph/bigint.hpp"
#include "dergraph/partition.hpp"
#include "dergraph/permutation.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dergraph {

/// chi_lambda(mu) by the Murnaghan-Nakayama rule, stripping the largest cycle
/// first. Results are memoized process-wide; safe to call concurrently.
BigInt character(const Partition& lambda, const CycleType& mu);

/// Full character table of S_n. Rows follow partitions_of(n); columns are the
/// same partitions read as cycle types.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<CycleType> classes;
  std::vector<std::vector<BigInt>> values;  // values[row][col]

  const BigInt& at(std::size_t row, std::size_t col) const { return values[row][col]; }
  std::size_t index_of(const Partition& lambda) const;
  std::size_t index_of(const CycleType& mu) const;

  /// Sum_lambda chi(mu) chi(nu) = delta_{mu,nu} n!/|C_mu|.
  bool column_orthogonality_holds() const;
};

CharacterTable build_character_table(int n);

/// {"n": N, "classes": [[...]], "partitions": [[...]], "values": [["..."]]}
std::string character_table_to_json(const CharacterTable& table);
/// Throws std::runtime_error on schema violations.
CharacterTable character_table_from_json(const std::string& text);

/// $DERGRAPH_CACHE_DIR, or ./.dergraph-cache when unset.
std::filesystem::path default_cache_dir();

/// Loads chartable_<n>.json from `cache_dir` if present and well-formed,
/// otherwise builds it and writes the file. No cache access when
/// `cache_dir` is empty.
CharacterTable load_or_build_character_table(int n, const std::optional<std::filesystem::path>& cache_dir);

}  // namespace dergraph
