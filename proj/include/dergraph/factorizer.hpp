#pragma once

#include "dergraph/permutation.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dergraph {

/// Which construction produced a two-derangement factorization.
enum class FactorMethod {
  paired_fixed_points,        // exactly two fixed points, (i)(j) = (ij)(ij) or (i)(j)(kl)
  fixed_pair_reduction,       // more than two fixed points, peeled off in pairs
  single_cycle_construction,  // one fixed point and no 2-cycles: (1)(2 3 ... m)
  two_cycle_identity,         // fixed-point-free blocks only (paired 2-cycles, square x reverse)
  mixed_identity,             // one fixed point next to 2-cycles
  exhaustive_fallback,        // small support with no closed-form identity
};

std::string_view to_string(FactorMethod m);

/// w = sigma * tau with sigma and tau derangements.
struct FactorizationCertificate {
  Permutation w;
  Permutation sigma;
  Permutation tau;
  FactorMethod method = FactorMethod::exhaustive_fallback;

  bool verify() const;
};

/// A factorization of w restricted to `support`; all three permutations act
/// on the full degree but fix every point outside the support, and sigma and
/// tau move every point inside it.
struct BlockFactorization {
  std::vector<Point> support;
  Permutation w;
  Permutation sigma;
  Permutation tau;
  FactorMethod method = FactorMethod::exhaustive_fallback;

  bool verify() const;
};

/// Minimum number of derangements whose product is w: 0 for the identity,
/// 1 for a derangement, 2 otherwise. Requires degree >= 4.
int ell_D(const Permutation& w);

/// Graph distance ell_D(v u^-1) in the derangement graph.
int distance(const Permutation& u, const Permutation& v);

/// Factorization of a non-identity permutation with at least one fixed point.
/// Deterministic; the result is always re-verified before returning.
FactorizationCertificate factorize_two(const Permutation& w);

/// The explicit construction for (1)(2 3 ... n): tau = [2, k_1, ..., k_{n-2}, 1]
/// with k_j the element of {3..n} congruent to j+p+2 mod n-2, and sigma
/// sending that row to [1, 3, 4, ..., n, 2]. Requires n >= 5 and n-2
/// dividing neither p nor p+1.
FactorizationCertificate single_cycle_factorization(int n, int p);

/// Smallest p accepted by single_cycle_factorization for degree n.
int default_single_cycle_parameter(int n);

/// Joins per-support factorizations into one certificate. Supports must be
/// pairwise disjoint and cover {1..n}.
FactorizationCertificate assemble_blocks(std::span<const BlockFactorization> blocks, FactorMethod method);

/// First (sigma, tau) in lexicographic order of sigma with sigma * tau = w on
/// `support`, both moving every support point. Throws RejectedInput if the
/// support is too large to search or no factorization exists.
BlockFactorization exhaustive_block(const Permutation& w, std::span<const Point> support);

/// The closed-form cycle identities, each returning (sigma, tau) as cycle
/// lists on the given labels. Labels must be distinct.
namespace identities {

struct CyclePair {
  std::vector<Cycle> sigma;
  std::vector<Cycle> tau;
};

/// (i)(j) = (ij)(ij)
CyclePair two_fixed(Point i, Point j);
/// (i)(j)(kl) = (ik)(jl) (ikjl)
CyclePair two_fixed_transposition(Point i, Point j, Point k, Point l);
/// (ij)(kl) = (ik)(jl) (il)(jk)
CyclePair transposition_pair(Point i, Point j, Point k, Point l);
/// (l1 ... lr) = (l1 ... lr)^2 (lr ... l1), r >= 3
CyclePair square_reverse(const Cycle& c);
/// (i)(jk)(lm) = (ilkmj) (ijlkm)
CyclePair fixed_two_transpositions(Point i, Point j, Point k, Point l, Point m);
/// (i)(jk)(lm)(np) = (inj)(lkmp) (ijlknmp)
CyclePair fixed_three_transpositions(Point i, Point j, Point k, Point l, Point m, Point n, Point p);
/// (i)(jk)(l1 ... lr), r >= 3, split by the parity of r.
CyclePair fixed_transposition_cycle(Point i, Point j, Point k, const Cycle& c);

}  // namespace identities

}  // namespace dergraph
