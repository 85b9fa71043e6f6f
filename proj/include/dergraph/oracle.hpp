#pragma once

#include "dergraph/bigint.hpp"
#include "dergraph/factorizer.hpp"
#include "dergraph/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

/// Brute-force ground truth for small n: the derangement graph built
/// explicitly, BFS distances, the distance matrix and exact trace powers.
///
/// The kernels in `dergraph::oracle` are OpenMP-parallel over vertices;
/// `dergraph::oracle::serial` holds single-threaded reference versions with
/// identical results, used by the tests and the benchmark.
namespace dergraph::oracle {

using VertexId = std::uint32_t;

/// Cayley graph on S_n with connection set D_n: w ~ s w for s a derangement.
/// Vertex ids are lexicographic ranks, so vertex 0 is the identity.
struct CayleyGraph {
  int n = 0;
  std::vector<Permutation> vertices;
  std::vector<Permutation> connection_set;
  /// Sorted neighbor ids per vertex; left empty for n = 8.
  std::vector<std::vector<VertexId>> adjacency;

  std::size_t order() const { return vertices.size(); }
  std::size_t valency() const { return connection_set.size(); }
  bool materialized() const { return !adjacency.empty(); }
  /// Sorted neighbors, computed on the fly when not materialized.
  std::vector<VertexId> neighbors(VertexId v) const;
};

constexpr int kMaxGraphDegree = 8;
constexpr int kMaxMaterializedDegree = 7;

/// 2 <= n <= 8; adjacency is materialized for n <= 7.
CayleyGraph build_graph(int n);

struct BfsResult {
  int n = 0;
  VertexId source = 0;
  std::vector<int> dist;  // -1 when unreachable
  bool connected = false;
  int eccentricity = 0;   // over reachable vertices
  /// Sizes of all connected components, filled only when disconnected.
  std::vector<std::size_t> component_sizes;

  /// Number of vertices at each distance 0, 1, 2, ...
  std::vector<std::size_t> histogram() const;
};

/// Single-source BFS; stops early once every vertex is reached.
BfsResult bfs_from(const CayleyGraph& g, VertexId source);
/// BFS from the identity; by vertex-transitivity this determines all distances.
BfsResult bfs_distances(const CayleyGraph& g);

/// Dense distance matrix, entries 0..254, 255 for unreachable pairs.
struct DistanceMatrix {
  std::size_t order = 0;
  std::vector<std::uint8_t> entries;

  static constexpr std::uint8_t kUnreachable = 255;
  std::uint8_t at(std::size_t u, std::size_t v) const { return entries[u * order + v]; }
};

/// d(u, v) = dist(identity, v u^-1). Requires a materialized graph.
DistanceMatrix distance_matrix(const CayleyGraph& g, const BfsResult& from_identity);

/// d == 2J - A entrywise, J with zero diagonal.
bool matrix_identity_check(const CayleyGraph& g, const DistanceMatrix& d);
bool matrix_identity_check(int n);

/// tr(d^k) = n! (d^k)_{id,id}, exact. 0 <= k <= 4.
BigInt trace_power(const DistanceMatrix& d, int n, int k);
BigInt trace_power(int n, int k);

/// tr(A^k) for the adjacency matrix, exact. 0 <= k <= 4.
BigInt adjacency_trace_power(const CayleyGraph& g, int k);

struct TraceRow {
  int k;
  BigInt trace;      // from the explicit graph
  BigInt predicted;  // sum_lambda f_lambda^2 gamma_lambda^k
  bool ok() const { return trace == predicted; }
};

struct NumericCheck {
  double max_abs_error = 0;
  double tolerance = 0;
  bool ok() const { return max_abs_error <= tolerance; }
};

struct SpectrumVerification {
  int n = 0;
  std::vector<TraceRow> rows;
  std::optional<NumericCheck> numeric;  // advisory, never gates ok()
  bool ok() const;
};

/// Exact trace identities for 0 <= k <= k_max; with `numeric`, also compares
/// floating eigenvalues of d against the predicted multiset within
/// 1e-6 * ||d||_F. 4 <= n <= 7.
SpectrumVerification verify_spectrum(int n, int k_max, bool numeric = false);

/// Distance histograms from `samples` pseudo-random sources all match the
/// histogram from the identity.
bool vertex_transitivity_spot_check(const CayleyGraph& g, int samples, unsigned seed);

struct CertificationReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<Permutation> failures;
  std::map<FactorMethod, std::size_t> by_method;
  bool ok() const { return failures.empty(); }
};

/// factorize_two on every non-identity non-derangement of S_n, each
/// certificate re-verified and checked against BFS distance 2.
CertificationReport certify_all(int n);

namespace serial {

CayleyGraph build_graph(int n);
DistanceMatrix distance_matrix(const CayleyGraph& g, const BfsResult& from_identity);
bool matrix_identity_check(const CayleyGraph& g, const DistanceMatrix& d);
BigInt trace_power(const DistanceMatrix& d, int n, int k);
BigInt adjacency_trace_power(const CayleyGraph& g, int k);
CertificationReport certify_all(int n);

}  // namespace serial

}  // namespace dergraph::oracle
