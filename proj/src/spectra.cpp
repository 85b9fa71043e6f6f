#include "dergraph/spectra.hpp"

#include "dergraph/characters.hpp"
#include "dergraph/derangements.hpp"
#include "dergraph/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace dergraph {

namespace {

class EtaMemo {
 public:
  std::optional<BigInt> find(const Partition& lam) const
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(lam);
    if (it == memo_.end())
      return std::nullopt;
    return it->second;
  }
  void store(const Partition& lam, const BigInt& v)
  {
    std::unique_lock lock(mutex_);
    memo_.emplace(lam, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Partition, BigInt> memo_;
};

EtaMemo& eta_memo()
{
  static EtaMemo m;
  return m;
}

void require_degree(int n, const char* what)
{
  if (n < 4)
    throw UnsupportedDegree(std::string(what) + ": requires n >= 4 (got n = " + std::to_string(n) + ")");
}

}  // namespace

BigInt eta(const Partition& lambda)
{
  if (lambda.empty())
    return 1;
  if (auto hit = eta_memo().find(lambda))
    return *hit;
  const int h = lambda.principal_hook_size();
  BigInt inner = eta(lambda.remove_first_column());
  inner *= sign_power(lambda.first_row()) * h;
  inner += eta(lambda.remove_principal_hook());
  if (sign_power(h) < 0)
    inner = -inner;
  eta_memo().store(lambda, inner);
  return inner;
}

Partition closed_form_shape(ClosedFormFamily family, int n, int index)
{
  switch (family) {
    case ClosedFormFamily::hook:
      if (index < 1 || index > n - 1)
        throw std::out_of_range("hook closed form needs 1 <= i <= n-1");
      return hook(n, index);
    case ClosedFormFamily::near_hook:
      if (index < 1 || index > n - 4)
        throw std::out_of_range("near-hook closed form needs 1 <= i <= n-4");
      return near_hook(n, index);
    case ClosedFormFamily::two_row_2:
      if (n < 4)
        throw std::out_of_range("(n-2,2) closed form needs n >= 4");
      return Partition{n - 2, 2};
    case ClosedFormFamily::two_row_3:
      if (n < 6)
        throw std::out_of_range("(n-3,3) closed form needs n >= 6");
      return Partition{n - 3, 3};
  }
  throw std::out_of_range("unknown closed-form family");
}

BigInt eta_closed_form(ClosedFormFamily family, int n, int index)
{
  closed_form_shape(family, n, index);  // range checks
  switch (family) {
    case ClosedFormFamily::hook:
      // (-1)^n + (-1)^i n D_{n-1-i}
      return sign_power(n) + sign_power(index) * n * derangement_count(n - 1 - index);
    case ClosedFormFamily::near_hook:
      // (n-1)((-1)^{n-1} + (-1)^i (n-i-2) D_{n-i-4})
      return (n - 1) * (sign_power(n - 1) + sign_power(index) * (n - index - 2) * derangement_count(n - index - 4));
    case ClosedFormFamily::two_row_2:
      // (n-1)/(n-3) D_{n-2}
      return exact_div((n - 1) * derangement_count(n - 2), n - 3);
    case ClosedFormFamily::two_row_3:
      // (-1)^{n-2} - (n-2)(n-3)/(n-5) D_{n-4}
      return sign_power(n - 2) - exact_div(BigInt((n - 2) * (n - 3)) * derangement_count(n - 4), n - 5);
  }
  throw std::out_of_range("unknown closed-form family");
}

BigInt gamma(const Partition& lambda)
{
  const int n = lambda.size();
  require_degree(n, "gamma");
  if (lambda.length() == 1)
    return 2 * (factorial(n) - 1) - eta(lambda);
  return -2 - eta(lambda);
}

std::vector<SpectrumEntry> spectrum_table(int n)
{
  require_degree(n, "spectrum_table");
  std::vector<SpectrumEntry> out;
  for (Partition& lam : partitions_of(n)) {
    const BigInt f = dim_f(lam);
    SpectrumEntry e{std::move(lam), 0, 0, f * f};
    e.eta = eta(e.lam);
    e.gamma = gamma(e.lam);
    out.push_back(std::move(e));
  }
  return out;
}

DistancePolynomial distance_polynomial(int n, const std::vector<SpectrumEntry>& table)
{
  std::map<BigInt, BigInt, std::greater<>> grouped;
  for (const SpectrumEntry& e : table)
    grouped[e.gamma] += e.multiplicity;
  DistancePolynomial poly;
  poly.n = n;
  for (auto& [root, mult] : grouped)
    poly.factors.push_back({root, mult});
  return poly;
}

DistancePolynomial distance_polynomial(int n) { return distance_polynomial(n, spectrum_table(n)); }

std::string DistancePolynomial::to_string() const
{
  std::string out;
  for (const PolynomialFactor& f : factors) {
    if (f.root == 0)
      out += "q";
    else if (f.root > 0)
      out += "(q-" + to_decimal(f.root) + ")";
    else
      out += "(q+" + to_decimal(BigInt(-f.root)) + ")";
    if (f.multiplicity != 1)
      out += "^" + to_decimal(f.multiplicity);
  }
  return out;
}

ExtremalReport extremal(int n)
{
  const auto table = spectrum_table(n);
  std::map<BigInt, std::vector<Partition>> by_value;
  for (const SpectrumEntry& e : table)
    by_value[e.gamma].push_back(e.lam);
  if (by_value.size() < 3)
    throw std::logic_error("extremal: fewer than three distinct distance eigenvalues");

  auto at = [](auto it) { return ExtremalValue{it->first, it->second}; };
  ExtremalReport r;
  r.n = n;
  auto lo = by_value.begin();
  r.smallest = at(lo);
  r.second_smallest = at(std::next(lo));
  auto hi = by_value.rbegin();
  r.largest = at(hi);
  r.second_largest = at(std::next(hi));
  r.third_largest = at(std::next(hi, 2));
  return r;
}

namespace {

class LemmaChecker {
 public:
  LemmaChecker(int n, LemmaReport& report) : n_(n), report_(report) {}

  /// Records `lhs < rhs`.
  void less(const char* lemma, const Partition& lam, const BigInt& lhs, const BigInt& rhs, const char* what)
  {
    ++report_.instances;
    if (lhs < rhs)
      return;
    report_.violations.push_back({n_, lemma, lam,
                                  std::string(what) + ": " + to_decimal(lhs) + " is not < " + to_decimal(rhs)});
  }

 private:
  int n_;
  LemmaReport& report_;
};

}  // namespace

LemmaReport lemma_sweep(int n_from, int n_to)
{
  if (n_from < 6)
    throw std::invalid_argument("lemma_sweep: n_from must be at least 6");
  LemmaReport report;
  report.n_from = n_from;
  report.n_to = n_to;
  for (int n = n_from; n <= n_to; ++n) {
    LemmaChecker check(n, report);
    const BigInt top_hook = eta(hook(n, 2));                // eta_{(n-2,1^2)}
    const BigInt two_row_3 = eta(Partition{n - 3, 3});      // eta_{(n-3,3)}
    const BigInt neg_two_row_3 = -two_row_3;

    // Two-row shapes: |eta_(n-i,i)| < |eta_(n+1-i,i-1)| < eta_(n-2,1^2).
    for (int i = 4; 2 * i <= n; ++i) {
      const Partition lam{n - i, i};
      const BigInt a = abs(eta(lam));
      const BigInt b = abs(eta(Partition{n + 1 - i, i - 1}));
      check.less("l2", lam, a, b, "|eta(n-i,i)| < |eta(n+1-i,i-1)|");
      check.less("l2", lam, b, top_hook, "|eta(n+1-i,i-1)| < eta(n-2,1^2)");
    }

    // Hooks (n-i,1^i), 3 <= i <= n-1.
    for (int i = 3; i <= n - 1; ++i) {
      const Partition lam = hook(n, i);
      const BigInt a = abs(eta(lam));
      check.less("l3", lam, a, top_hook, "|eta(hook)| < eta(n-2,1^2)");
      check.less("l3", lam, two_row_3, BigInt(-a), "eta(n-3,3) < -|eta(hook)|");
    }

    // Near hooks (n-2-i,2,1^i), 1 <= i <= n-4.
    for (int i = 1; i <= n - 4; ++i) {
      const Partition lam = near_hook(n, i);
      const BigInt a = abs(eta(lam));
      check.less("l4", lam, a, top_hook, "|eta(near hook)| < eta(n-2,1^2)");
      check.less("l4", lam, two_row_3, BigInt(-a), "eta(n-3,3) < -|eta(near hook)|");
    }

    // Three-row shapes.
    if (n >= 7)
      for (int i = 3; 2 * i <= n - 1; ++i) {
        const Partition lam{n - i - 1, i, 1};
        check.less("l5", lam, abs(eta(lam)), neg_two_row_3, "|eta(n-i-1,i,1)| < -eta(n-3,3)");
      }
    for (int i = 2; 2 * i <= n - 2; ++i)
      for (int j = 2; j <= i; ++j) {
        if (n - i - j < i)
          continue;  // not a partition
        const Partition lam{n - i - j, i, j};
        check.less("l5", lam, abs(eta(lam)), neg_two_row_3, "|eta(n-i-j,i,j)| < -eta(n-3,3)");
      }
  }
  return report;
}

SignReport sign_check(int n_max)
{
  if (n_max < 2)
    throw std::invalid_argument("sign_check: n_max must be at least 2");
  SignReport report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n)
    for (const Partition& lam : partitions_of(n)) {
      ++report.checked;
      const BigInt v = eta(lam);
      if (sgn(v) != sign_power(n - lam.first_row()))
        report.violations.push_back({lam, v});
    }
  return report;
}

BigInt eta_from_characters(const Partition& lambda)
{
  const int n = lambda.size();
  BigInt sum = 0;
  for (const Partition& mu : partitions_of(n)) {
    const CycleType type = mu.as_cycle_type();
    if (type.has_fixed_point())
      continue;
    sum += class_size(type) * character(lambda, type);
  }
  return exact_div(sum, dim_f(lambda));
}

BigInt gamma_from_characters(const Partition& lambda)
{
  const int n = lambda.size();
  require_degree(n, "gamma_from_characters");
  BigInt sum = 0;
  for (const Partition& mu : partitions_of(n)) {
    const CycleType type = mu.as_cycle_type();
    if (type.fixed_point_count() == n)
      continue;  // identity contributes ell_D = 0
    const int ell = type.has_fixed_point() ? 2 : 1;
    sum += ell * class_size(type) * character(lambda, type);
  }
  return exact_div(sum, dim_f(lambda));
}

CharacterSumCheck check_character_sums(const CharacterTable& table)
{
  require_degree(table.n, "check_character_sums");
  CharacterSumCheck out;
  out.partitions = table.partitions.size();
  out.eta_ok = out.gamma_ok = true;
  for (std::size_t row = 0; row < table.partitions.size(); ++row) {
    BigInt eta_sum = 0, gamma_sum = 0;
    for (std::size_t col = 0; col < table.classes.size(); ++col) {
      const CycleType& mu = table.classes[col];
      const BigInt weighted = class_size(mu) * table.at(row, col);
      if (!mu.has_fixed_point())
        eta_sum += weighted;
      if (mu.fixed_point_count() != table.n)
        gamma_sum += (mu.has_fixed_point() ? 2 : 1) * weighted;
    }
    const Partition& lam = table.partitions[row];
    const BigInt f = dim_f(lam);
    out.eta_ok = out.eta_ok && eta_sum == f * eta(lam);
    out.gamma_ok = out.gamma_ok && gamma_sum == f * gamma(lam);
  }
  return out;
}

}  // namespace dergraph
