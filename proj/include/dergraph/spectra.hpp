#pragma once

#include "dergraph/bigint.hpp"
#include "dergraph/characters.hpp"
#include "dergraph/partition.hpp"

#include <string>
#include <vector>

namespace dergraph {

/// Adjacency eigenvalue of the derangement graph attached to chi_lambda, by
/// the recurrence
///   eta_lambda = (-1)^h (eta_{lambda-h} + (-1)^{lambda_1} h eta_{lambda-1}),
/// eta_empty = 1, where h is the principal hook size, lambda-h removes the
/// principal hook and lambda-1 removes the first column. Memoized across n.
BigInt eta(const Partition& lambda);

enum class ClosedFormFamily { hook, near_hook, two_row_2, two_row_3 };

/// Closed-form eta for the shapes (n-i,1^i), (n-2-i,2,1^i), (n-2,2) and
/// (n-3,3). `index` is i for the first two families and ignored otherwise.
/// Throws std::out_of_range outside 1 <= i <= n-1 (hooks), 1 <= i <= n-4
/// (near hooks), n >= 4 for (n-2,2) and n >= 6 for (n-3,3).
BigInt eta_closed_form(ClosedFormFamily family, int n, int index = 0);
Partition closed_form_shape(ClosedFormFamily family, int n, int index = 0);

/// Distance eigenvalue: 2(n!-1) - eta for lambda = (n), -2 - eta otherwise.
/// Requires n >= 4.
BigInt gamma(const Partition& lambda);

struct SpectrumEntry {
  Partition lam;
  BigInt eta;
  BigInt gamma;
  BigInt multiplicity;  // f_lambda^2
};

/// One entry per partition of n, in partitions_of order.
std::vector<SpectrumEntry> spectrum_table(int n);

struct PolynomialFactor {
  BigInt root;
  BigInt multiplicity;
};

/// Characteristic polynomial of the distance matrix in factored form,
/// roots strictly decreasing.
struct DistancePolynomial {
  int n = 0;
  std::vector<PolynomialFactor> factors;

  /// "(q-37)(q-1)^10(q+3)^9(q+5)^4"
  std::string to_string() const;
};

DistancePolynomial distance_polynomial(int n);
DistancePolynomial distance_polynomial(int n, const std::vector<SpectrumEntry>& table);

struct ExtremalValue {
  BigInt value;
  std::vector<Partition> achieved_by;
};

struct ExtremalReport {
  int n = 0;
  ExtremalValue largest, second_largest, third_largest;
  ExtremalValue smallest, second_smallest;
};

/// Ranks distinct distance eigenvalues; ties list every achieving partition.
ExtremalReport extremal(int n);

struct LemmaViolation {
  int n;
  std::string lemma;  // "l2" .. "l5"
  Partition lam;
  std::string detail;
};

struct LemmaReport {
  int n_from = 0, n_to = 0;
  long instances = 0;
  std::vector<LemmaViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exact check of the eigenvalue inequality families used to locate the
/// extremal distance eigenvalues (two-row shapes, hooks, near hooks,
/// three-row shapes). Requires n_from >= 6.
LemmaReport lemma_sweep(int n_from, int n_to);

struct SignViolation {
  Partition lam;
  BigInt eta;
};

struct SignReport {
  int n_max = 0;
  long checked = 0;
  std::vector<SignViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// eta_lambda != 0 and sign(eta_lambda) = (-1)^{n - lambda_1} for 2 <= n <= n_max.
SignReport sign_check(int n_max);

/// (1/f_lambda) sum over fixed-point-free classes mu of |C_mu| chi_lambda(mu).
BigInt eta_from_characters(const Partition& lambda);
/// (1/f_lambda) sum_{w != 1} ell_D(w) chi_lambda(w), summed classwise. n >= 4.
BigInt gamma_from_characters(const Partition& lambda);

struct CharacterSumCheck {
  std::size_t partitions = 0;
  bool eta_ok = false;    // eta_from_characters == eta for every row
  bool gamma_ok = false;  // gamma_from_characters == gamma for every row
};

/// Both character-sum identities evaluated from a precomputed table. n >= 4.
CharacterSumCheck check_character_sums(const CharacterTable& table);

}  // namespace dergraph
