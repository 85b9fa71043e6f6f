#include "dergraph/derangements.hpp"

#include <stdexcept>

namespace dergraph {

BigInt DerangementTable::operator()(int n)
{
  if (n < 0)
    throw std::invalid_argument("derangement_count: negative degree");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < values_.size())
      return values_[n];
  }
  std::unique_lock lock(mutex_);
  while (values_.size() <= static_cast<std::size_t>(n)) {
    const long k = static_cast<long>(values_.size());
    values_.push_back(k * values_.back() + sign_power(k));
  }
  return values_[n];
}

std::size_t DerangementTable::size() const
{
  std::shared_lock lock(mutex_);
  return values_.size();
}

BigInt derangement_count(int n)
{
  static DerangementTable table;
  return table(n);
}

BigInt derangement_count_inclusion_exclusion(int n)
{
  if (n < 0)
    throw std::invalid_argument("derangement_count: negative degree");
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    const BigInt term = binom * factorial(n - k);
    sum += (k % 2 == 0) ? term : BigInt(-term);
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

BigInt derangement_count_two_term(int n)
{
  if (n < 0)
    throw std::invalid_argument("derangement_count: negative degree");
  if (n == 0)
    return 1;
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  for (int k = 2; k <= n; ++k) {
    BigInt next = (k - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

IdentityReport verify_identities(int n_max)
{
  if (n_max < 2)
    throw std::invalid_argument("verify_identities: n_max must be at least 2");
  IdentityReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const BigInt dn = derangement_count_inclusion_exclusion(n);
    const BigInt d1 = derangement_count_inclusion_exclusion(n - 1);
    ++report.checked;
    if (dn != n * d1 + sign_power(n))
      report.violations.push_back({n, "D_n = n D_{n-1} + (-1)^n"});
    if (n >= 2) {
      ++report.checked;
      const BigInt d2 = derangement_count_inclusion_exclusion(n - 2);
      if (dn != (n - 1) * (d1 + d2))
        report.violations.push_back({n, "D_n = (n-1)(D_{n-1} + D_{n-2})"});
    }
  }
  return report;
}

namespace {

enum class Verdict { below, not_below, unknown };

/// Decides |center +- radius| < threshold over the whole interval.
Verdict compare_abs(const BigRational& center, const BigRational& radius, const BigRational& threshold)
{
  const BigRational mag = abs(center);
  if (mag + radius < threshold)
    return Verdict::below;
  if (mag - radius >= threshold)
    return Verdict::not_below;
  return Verdict::unknown;
}

}  // namespace

NearestIntegerCheck nearest_integer_check(int n)
{
  if (n < 3)
    throw std::invalid_argument("nearest_integer_check: requires n >= 3");
  const BigInt dn = derangement_count(n);
  const BigInt nfact = factorial(n);
  const BigRational half(1, 2);
  const BigRational bound(1, n + 1);

  int terms = n + 2;
  Verdict nearest = Verdict::unknown, within = Verdict::unknown;
  while (nearest == Verdict::unknown || within == Verdict::unknown) {
    if (terms > (1 << 20))
      throw std::logic_error("nearest_integer_check: interval failed to separate");
    // 1/e = sum_{k<terms} (-1)^k/k! + tail, |tail| <= 1/terms!
    BigRational partial = 0;
    BigRational inv_fact = 1;
    for (int k = 0; k < terms; ++k) {
      partial += (k % 2 == 0) ? inv_fact : BigRational(-inv_fact);
      inv_fact /= (k + 1);
    }
    // inv_fact == 1/terms! now.
    BigRational center = BigRational(dn) - BigRational(nfact) * partial;
    BigRational radius = BigRational(nfact) * inv_fact;
    center.canonicalize();
    radius.canonicalize();
    if (nearest == Verdict::unknown)
      nearest = compare_abs(center, radius, half);
    if (within == Verdict::unknown)
      within = compare_abs(center, radius, bound);
    if (nearest == Verdict::unknown || within == Verdict::unknown)
      terms *= 2;
  }
  return {nearest == Verdict::below, within == Verdict::below, terms};
}

bool nearest_integer_characterization(int n) { return nearest_integer_check(n).holds(); }

}  // namespace dergraph
