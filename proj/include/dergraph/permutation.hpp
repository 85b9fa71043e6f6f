#pragma once

#include "dergraph/bigint.hpp"
#include "dergraph/errors.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dergraph {

using Point = int;  // 1-based element label
using Cycle = std::vector<Point>;

/// Weakly decreasing cycle lengths summing to the degree.
struct CycleType {
  std::vector<int> parts;

  CycleType() = default;
  explicit CycleType(std::vector<int> p);

  int degree() const;
  int length() const { return static_cast<int>(parts.size()); }
  int count(int part) const;
  int fixed_point_count() const { return count(1); }
  /// Sign of any permutation of this type.
  int sign() const;
  bool has_fixed_point() const { return count(1) > 0; }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// A bijection of {1..n} stored in one-line form. Composition is
/// right-to-left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of degree n.
  explicit Permutation(int n);
  /// One-line form with 1-based values; throws std::invalid_argument unless
  /// `image` is a bijection of {1..image.size()}.
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(int n) { return Permutation(n); }
  /// Builds a permutation of degree n from disjoint cycles.
  static Permutation from_cycles(int n, std::span<const Cycle> cycles);
  static Permutation from_cycles(int n, std::initializer_list<Cycle> cycles);

  int degree() const { return static_cast<int>(image_.size()); }
  Point operator()(Point x) const { return image_[x - 1]; }
  const std::vector<Point>& image() const { return image_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
Permutation inverse(const Permutation& w);
/// u w u^-1
Permutation conjugate(const Permutation& w, const Permutation& u);

/// Disjoint cycles in canonical form: each rotated to start at its minimum,
/// cycles sorted by minimum. Fixed points are included as 1-cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& w);
CycleType cycle_type(const Permutation& w);
std::vector<Point> fixed_points(const Permutation& w);
bool is_derangement(const Permutation& w);

/// n! / z_mu with z_mu = prod_i i^{m_i} m_i!.
BigInt class_size(const CycleType& mu);

/// Canonical cycle notation, e.g. "(1 2)(3 6 5 4)". The identity prints as
/// "()" unless fixed points are requested.
std::string to_cycle_string(const Permutation& w, bool show_fixed = false);
/// "[w(1),w(2),...,w(n)]"
std::string to_one_line_string(const Permutation& w);

/// Parses cycle notation "(a b c)(d e)" (spaces or commas between points) or
/// one-line form "[w1,w2,...]". The degree is max(n_hint, largest listed
/// point) for cycle notation. Throws std::invalid_argument on malformed input.
Permutation parse_permutation(std::string_view text, std::optional<int> n_hint = std::nullopt);

/// All permutations of {1..n} in lexicographic order of their one-line form.
std::vector<Permutation> all_permutations(int n);

/// Lexicographic rank of the one-line form, in [0, n!).
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

}  // namespace dergraph
