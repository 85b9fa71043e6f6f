#pragma once

#include "dergraph/oracle.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace dergraph::oracle::detail {

using Image = std::array<std::uint8_t, kMaxGraphDegree>;  // 0-based one-line form

inline Image to_image(const Permutation& w)
{
  Image img{};
  for (int x = 1; x <= w.degree(); ++x)
    img[x - 1] = static_cast<std::uint8_t>(w(x) - 1);
  return img;
}

/// Lexicographic rank of a 0-based one-line form of length n.
inline VertexId rank(const Image& img, int n)
{
  std::uint32_t unused = (1u << n) - 1;
  VertexId r = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t v = img[i];
    r = r * static_cast<VertexId>(n - i) + static_cast<VertexId>(std::popcount(unused & ((1u << v) - 1)));
    unused &= ~(1u << v);
  }
  return r;
}

/// (p * q)(x) = p(q(x))
inline Image compose(const Image& p, const Image& q, int n)
{
  Image out{};
  for (int i = 0; i < n; ++i)
    out[i] = p[q[i]];
  return out;
}

inline Image inverse(const Image& w, int n)
{
  Image out{};
  for (int i = 0; i < n; ++i)
    out[w[i]] = static_cast<std::uint8_t>(i);
  return out;
}

/// Vertices and connection set only; adjacency left empty.
CayleyGraph skeleton(int n);

/// Neighbors of vertex v, sorted.
std::vector<VertexId> neighbors_of(const CayleyGraph& g, const std::vector<Image>& conn, VertexId v);

/// Throws unless (2 * max_entry * order)^k stays within int64.
void check_trace_bound(std::size_t order, int max_entry, int k);

}  // namespace dergraph::oracle::detail
