// Single-threaded reference kernels. Kept deliberately plain: they define the
// expected output of the parallel versions in oracle.cpp.

#include "dergraph/oracle.hpp"

#include "oracle_detail.hpp"

namespace dergraph::oracle::serial {

CayleyGraph build_graph(int n)
{
  CayleyGraph g = detail::skeleton(n);
  if (n > kMaxMaterializedDegree)
    return g;
  g.adjacency.resize(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    auto& nbrs = g.adjacency[v];
    for (const Permutation& s : g.connection_set)
      nbrs.push_back(static_cast<VertexId>(lex_rank(compose(s, g.vertices[v]))));
    std::sort(nbrs.begin(), nbrs.end());
  }
  return g;
}

DistanceMatrix distance_matrix(const CayleyGraph& g, const BfsResult& from_identity)
{
  DistanceMatrix d;
  d.order = g.order();
  d.entries.resize(d.order * d.order);
  for (std::size_t u = 0; u < d.order; ++u) {
    const Permutation u_inv = inverse(g.vertices[u]);
    for (std::size_t v = 0; v < d.order; ++v) {
      const int dist = from_identity.dist[lex_rank(compose(g.vertices[v], u_inv))];
      d.entries[u * d.order + v] = dist < 0 ? DistanceMatrix::kUnreachable : static_cast<std::uint8_t>(dist);
    }
  }
  return d;
}

bool matrix_identity_check(const CayleyGraph& g, const DistanceMatrix& d)
{
  for (VertexId u = 0; u < g.order(); ++u) {
    std::vector<std::uint8_t> adjacent(g.order(), 0);
    for (VertexId v : g.neighbors(u))
      adjacent[v] = 1;
    for (VertexId v = 0; v < g.order(); ++v) {
      const int expected = (u == v) ? 0 : 2 - adjacent[v];
      if (d.at(u, v) != expected)
        return false;
    }
  }
  return true;
}

BigInt trace_power(const DistanceMatrix& d, int n, int k)
{
  if (k < 0 || k > 4)
    throw std::invalid_argument("trace_power: 0 <= k <= 4");
  detail::check_trace_bound(d.order, 2, k);
  std::vector<std::int64_t> row(d.order, 0);
  row[0] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::int64_t> next(d.order, 0);
    for (std::size_t u = 0; u < d.order; ++u)
      for (std::size_t v = 0; v < d.order; ++v)
        next[v] += row[u] * d.at(u, v);
    row = std::move(next);
  }
  return factorial(n) * BigInt(static_cast<long>(row[0]));
}

BigInt adjacency_trace_power(const CayleyGraph& g, int k)
{
  if (k < 0 || k > 4)
    throw std::invalid_argument("adjacency_trace_power: 0 <= k <= 4");
  detail::check_trace_bound(g.valency(), 1, k);
  std::vector<std::int64_t> row(g.order(), 0);
  row[0] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::int64_t> next(g.order(), 0);
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v : g.neighbors(u))
        next[v] += row[u];
    row = std::move(next);
  }
  return factorial(g.n) * BigInt(static_cast<long>(row[0]));
}

CertificationReport certify_all(int n)
{
  const CayleyGraph g = detail::skeleton(n);
  const BfsResult bfs = bfs_from(g, 0);
  CertificationReport report;
  report.n = n;
  for (VertexId v = 0; v < g.order(); ++v) {
    const Permutation& w = g.vertices[v];
    if (w.is_identity() || is_derangement(w))
      continue;
    ++report.checked;
    try {
      const FactorizationCertificate cert = factorize_two(w);
      if (cert.verify() && cert.w == w && bfs.dist[v] == 2)
        ++report.by_method[cert.method];
      else
        report.failures.push_back(w);
    } catch (const std::exception&) {
      report.failures.push_back(w);
    }
  }
  return report;
}

}  // namespace dergraph::oracle::serial
