#include "dergraph/oracle.hpp"

#include "dergraph/derangements.hpp"
#include "dergraph/errors.hpp"
#include "dergraph/spectra.hpp"
#include "oracle_detail.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace dergraph::oracle {

namespace detail {

CayleyGraph skeleton(int n)
{
  if (n < 2 || n > kMaxGraphDegree)
    throw UnsupportedDegree("build_graph: supported for 2 <= n <= " + std::to_string(kMaxGraphDegree) +
                            " (got n = " + std::to_string(n) + ")");
  CayleyGraph g;
  g.n = n;
  g.vertices = all_permutations(n);
  for (const Permutation& w : g.vertices)
    if (is_derangement(w))
      g.connection_set.push_back(w);
  return g;
}

std::vector<VertexId> neighbors_of(const CayleyGraph& g, const std::vector<Image>& conn, VertexId v)
{
  const Image w = to_image(g.vertices[v]);
  std::vector<VertexId> out;
  out.reserve(conn.size());
  for (const Image& s : conn)
    out.push_back(rank(compose(s, w, g.n), g.n));
  std::sort(out.begin(), out.end());
  return out;
}

void check_trace_bound(std::size_t order, int max_entry, int k)
{
  long double bound = 1;
  for (int i = 0; i < k; ++i)
    bound *= static_cast<long double>(order) * max_entry;
  if (bound >= 4.0e18L)
    throw std::overflow_error("trace power exceeds the exact int64 row-product range");
}

}  // namespace detail

namespace {

std::vector<detail::Image> connection_images(const CayleyGraph& g)
{
  std::vector<detail::Image> conn;
  conn.reserve(g.connection_set.size());
  for (const Permutation& s : g.connection_set)
    conn.push_back(detail::to_image(s));
  return conn;
}

}  // namespace

std::vector<VertexId> CayleyGraph::neighbors(VertexId v) const
{
  if (materialized())
    return adjacency[v];
  return detail::neighbors_of(*this, connection_images(*this), v);
}

CayleyGraph build_graph(int n)
{
  CayleyGraph g = detail::skeleton(n);
  if (n > kMaxMaterializedDegree)
    return g;
  const auto conn = connection_images(g);
  const auto order = static_cast<long>(g.order());
  g.adjacency.resize(g.order());
#pragma omp parallel for schedule(static)
  for (long v = 0; v < order; ++v)
    g.adjacency[v] = detail::neighbors_of(g, conn, static_cast<VertexId>(v));
  return g;
}

std::vector<std::size_t> BfsResult::histogram() const
{
  std::vector<std::size_t> h(eccentricity + 1, 0);
  for (int d : dist)
    if (d >= 0)
      ++h[d];
  return h;
}

BfsResult bfs_from(const CayleyGraph& g, VertexId source)
{
  BfsResult r;
  r.n = g.n;
  r.source = source;
  r.dist.assign(g.order(), -1);
  const auto conn = g.materialized() ? std::vector<detail::Image>{} : connection_images(g);

  std::deque<VertexId> queue{source};
  r.dist[source] = 0;
  std::size_t reached = 1;
  while (!queue.empty() && reached < g.order()) {
    const VertexId u = queue.front();
    queue.pop_front();
    const auto nbrs = g.materialized() ? g.adjacency[u] : detail::neighbors_of(g, conn, u);
    for (VertexId v : nbrs) {
      if (r.dist[v] >= 0)
        continue;
      r.dist[v] = r.dist[u] + 1;
      queue.push_back(v);
      if (++reached == g.order())
        break;
    }
  }
  r.connected = reached == g.order();
  r.eccentricity = *std::max_element(r.dist.begin(), r.dist.end());
  return r;
}

BfsResult bfs_distances(const CayleyGraph& g)
{
  BfsResult r = bfs_from(g, 0);
  if (r.connected)
    return r;
  std::vector<bool> seen(g.order(), false);
  for (VertexId start = 0; start < g.order(); ++start) {
    if (seen[start])
      continue;
    const BfsResult comp = bfs_from(g, start);
    std::size_t size = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (comp.dist[v] >= 0) {
        seen[v] = true;
        ++size;
      }
    r.component_sizes.push_back(size);
  }
  return r;
}

DistanceMatrix distance_matrix(const CayleyGraph& g, const BfsResult& from_identity)
{
  if (g.n > kMaxMaterializedDegree)
    throw UnsupportedDegree("distance_matrix: n <= 7 only");
  const int n = g.n;
  DistanceMatrix d;
  d.order = g.order();
  d.entries.assign(d.order * d.order, 0);
  const auto order = static_cast<long>(d.order);
#pragma omp parallel for schedule(static)
  for (long u = 0; u < order; ++u) {
    const detail::Image u_inv = detail::inverse(detail::to_image(g.vertices[u]), n);
    for (std::size_t v = 0; v < d.order; ++v) {
      const int dist = from_identity.dist[detail::rank(detail::compose(detail::to_image(g.vertices[v]), u_inv, n), n)];
      d.entries[u * d.order + v] = dist < 0 ? DistanceMatrix::kUnreachable : static_cast<std::uint8_t>(dist);
    }
  }
  return d;
}

bool matrix_identity_check(const CayleyGraph& g, const DistanceMatrix& d)
{
  const auto order = static_cast<long>(g.order());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (long u = 0; u < order; ++u) {
    std::vector<std::uint8_t> adjacent(g.order(), 0);
    for (VertexId v : g.neighbors(static_cast<VertexId>(u)))
      adjacent[v] = 1;
    for (std::size_t v = 0; v < g.order(); ++v) {
      const int expected = (static_cast<std::size_t>(u) == v) ? 0 : 2 - adjacent[v];
      ok = ok && d.at(u, v) == expected;
    }
  }
  return ok;
}

bool matrix_identity_check(int n)
{
  if (n < 4 || n > kMaxMaterializedDegree)
    throw UnsupportedDegree("matrix_identity_check: 4 <= n <= 7");
  const CayleyGraph g = build_graph(n);
  return matrix_identity_check(g, distance_matrix(g, bfs_distances(g)));
}

BigInt trace_power(const DistanceMatrix& d, int n, int k)
{
  if (k < 0 || k > 4)
    throw std::invalid_argument("trace_power: 0 <= k <= 4");
  detail::check_trace_bound(d.order, 2, k);
  std::vector<std::int64_t> row(d.order, 0), next(d.order);
  row[0] = 1;  // identity
  const auto order = static_cast<long>(d.order);
  for (int step = 0; step < k; ++step) {
    // next = d^T row; the diagonal of d^k and of (d^T)^k agree.
#pragma omp parallel for schedule(static)
    for (long v = 0; v < order; ++v) {
      std::int64_t acc = 0;
      const std::uint8_t* col = &d.entries[0];
      for (std::size_t u = 0; u < d.order; ++u)
        acc += row[u] * col[u * d.order + v];
      next[v] = acc;
    }
    row.swap(next);
  }
  return factorial(n) * BigInt(static_cast<long>(row[0]));
}

BigInt trace_power(int n, int k)
{
  if (n < 4 || n > kMaxMaterializedDegree)
    throw UnsupportedDegree("trace_power: 4 <= n <= 7");
  const CayleyGraph g = build_graph(n);
  return trace_power(distance_matrix(g, bfs_distances(g)), n, k);
}

BigInt adjacency_trace_power(const CayleyGraph& g, int k)
{
  if (k < 0 || k > 4)
    throw std::invalid_argument("adjacency_trace_power: 0 <= k <= 4");
  if (!g.materialized())
    throw UnsupportedDegree("adjacency_trace_power: needs a materialized graph");
  detail::check_trace_bound(g.valency(), 1, k);
  std::vector<std::int64_t> row(g.order(), 0), next(g.order());
  row[0] = 1;
  const auto order = static_cast<long>(g.order());
  for (int step = 0; step < k; ++step) {
#pragma omp parallel for schedule(static)
    for (long v = 0; v < order; ++v) {
      std::int64_t acc = 0;
      for (VertexId u : g.adjacency[v])
        acc += row[u];
      next[v] = acc;
    }
    row.swap(next);
  }
  return factorial(g.n) * BigInt(static_cast<long>(row[0]));
}

bool SpectrumVerification::ok() const
{
  return std::all_of(rows.begin(), rows.end(), [](const TraceRow& r) { return r.ok(); });
}

SpectrumVerification verify_spectrum(int n, int k_max, bool numeric)
{
  if (n < 4 || n > kMaxMaterializedDegree)
    throw UnsupportedDegree("verify_spectrum: 4 <= n <= 7");
  const auto table = spectrum_table(n);
  const CayleyGraph g = build_graph(n);
  const DistanceMatrix d = distance_matrix(g, bfs_distances(g));

  SpectrumVerification out;
  out.n = n;
  for (int k = 0; k <= k_max; ++k) {
    BigInt predicted = 0;
    for (const SpectrumEntry& e : table) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), e.gamma.get_mpz_t(), static_cast<unsigned long>(k));
      predicted += e.multiplicity * power;
    }
    out.rows.push_back({k, trace_power(d, n, k), predicted});
  }

  if (numeric) {
    const auto size = static_cast<Eigen::Index>(d.order);
    Eigen::MatrixXd m(size, size);
    for (Eigen::Index u = 0; u < size; ++u)
      for (Eigen::Index v = 0; v < size; ++v)
        m(u, v) = d.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> expected;
    for (const SpectrumEntry& e : table)
      expected.insert(expected.end(), e.multiplicity.get_ui(), e.gamma.get_d());
    std::sort(expected.begin(), expected.end());
    const Eigen::VectorXd& got = solver.eigenvalues();  // ascending
    NumericCheck check;
    check.tolerance = 1e-6 * m.norm();
    for (Eigen::Index i = 0; i < size; ++i)
      check.max_abs_error = std::max(check.max_abs_error, std::abs(got(i) - expected[static_cast<std::size_t>(i)]));
    out.numeric = check;
  }
  return out;
}

bool vertex_transitivity_spot_check(const CayleyGraph& g, int samples, unsigned seed)
{
  const auto reference = bfs_from(g, 0).histogram();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.order() - 1));
  for (int i = 0; i < samples; ++i)
    if (bfs_from(g, pick(rng)).histogram() != reference)
      return false;
  return true;
}

CertificationReport certify_all(int n)
{
  const CayleyGraph g = detail::skeleton(n);
  const BfsResult bfs = bfs_from(g, 0);
  const auto order = static_cast<long>(g.order());

  CertificationReport report;
  report.n = n;
#pragma omp parallel
  {
    std::map<FactorMethod, std::size_t> local_methods;
    std::vector<Permutation> local_failures;
    std::size_t local_checked = 0;
#pragma omp for schedule(dynamic, 64)
    for (long v = 0; v < order; ++v) {
      const Permutation& w = g.vertices[v];
      if (w.is_identity() || is_derangement(w))
        continue;
      ++local_checked;
      try {
        const FactorizationCertificate cert = factorize_two(w);
        if (cert.verify() && cert.w == w && bfs.dist[v] == 2)
          ++local_methods[cert.method];
        else
          local_failures.push_back(w);
      } catch (const std::exception&) {
        local_failures.push_back(w);
      }
    }
#pragma omp critical
    {
      report.checked += local_checked;
      for (const auto& [m, c] : local_methods)
        report.by_method[m] += c;
      report.failures.insert(report.failures.end(), local_failures.begin(), local_failures.end());
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace dergraph::oracle
