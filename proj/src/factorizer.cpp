#include "dergraph/factorizer.hpp"

#include <algorithm>
#include <numeric>

namespace dergraph {

std::string_view to_string(FactorMethod m)
{
  switch (m) {
    case FactorMethod::paired_fixed_points: return "paired-fixed-points";
    case FactorMethod::fixed_pair_reduction: return "fixed-pair-reduction";
    case FactorMethod::single_cycle_construction: return "single-cycle-construction";
    case FactorMethod::two_cycle_identity: return "two-cycle-identity";
    case FactorMethod::mixed_identity: return "mixed-identity";
    case FactorMethod::exhaustive_fallback: return "exhaustive-fallback";
  }
  return "unknown";
}

bool FactorizationCertificate::verify() const
{
  return sigma.degree() == w.degree() && tau.degree() == w.degree() && compose(sigma, tau) == w &&
         is_derangement(sigma) && is_derangement(tau);
}

bool BlockFactorization::verify() const
{
  const int n = w.degree();
  if (sigma.degree() != n || tau.degree() != n || compose(sigma, tau) != w)
    return false;
  std::vector<bool> inside(n + 1, false);
  for (Point x : support) {
    if (x < 1 || x > n || inside[x])
      return false;
    inside[x] = true;
  }
  for (Point x = 1; x <= n; ++x) {
    const bool moves = sigma(x) != x && tau(x) != x;
    const bool fixed = sigma(x) == x && tau(x) == x && w(x) == x;
    if (inside[x] ? !moves : !fixed)
      return false;
  }
  return true;
}

int ell_D(const Permutation& w)
{
  if (w.degree() < 4)
    throw UnsupportedDegree("ell_D: the derangement graph has diameter 2 only for n >= 4 (got n = " +
                            std::to_string(w.degree()) + ")");
  if (w.is_identity())
    return 0;
  return is_derangement(w) ? 1 : 2;
}

int distance(const Permutation& u, const Permutation& v)
{
  if (u.degree() != v.degree())
    throw DegreeMismatch("distance: degrees " + std::to_string(u.degree()) + " and " + std::to_string(v.degree()));
  return ell_D(compose(v, inverse(u)));
}

namespace identities {

namespace {

void require_distinct(const char* what, std::vector<Point> labels)
{
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw RejectedInput(std::string(what) + ": labels must be distinct");
}

}  // namespace

CyclePair two_fixed(Point i, Point j)
{
  require_distinct("two_fixed", {i, j});
  return {{{i, j}}, {{i, j}}};
}

CyclePair two_fixed_transposition(Point i, Point j, Point k, Point l)
{
  require_distinct("two_fixed_transposition", {i, j, k, l});
  return {{{i, k}, {j, l}}, {{i, k, j, l}}};
}

CyclePair transposition_pair(Point i, Point j, Point k, Point l)
{
  require_distinct("transposition_pair", {i, j, k, l});
  return {{{i, k}, {j, l}}, {{i, l}, {j, k}}};
}

CyclePair square_reverse(const Cycle& c)
{
  const std::size_t r = c.size();
  if (r < 3)
    throw std::invalid_argument("square_reverse: cycle length must be at least 3");
  require_distinct("square_reverse", c);
  CyclePair out;
  if (r % 2 == 1) {
    Cycle sq;
    for (std::size_t s = 0; s < r; ++s)
      sq.push_back(c[(2 * s) % r]);
    out.sigma.push_back(std::move(sq));
  } else {
    Cycle even, odd;
    for (std::size_t s = 0; s < r; s += 2) {
      even.push_back(c[s]);
      odd.push_back(c[s + 1]);
    }
    out.sigma.push_back(std::move(even));
    out.sigma.push_back(std::move(odd));
  }
  out.tau.push_back(Cycle(c.rbegin(), c.rend()));
  return out;
}

CyclePair fixed_two_transpositions(Point i, Point j, Point k, Point l, Point m)
{
  require_distinct("fixed_two_transpositions", {i, j, k, l, m});
  return {{{i, l, k, m, j}}, {{i, j, l, k, m}}};
}

CyclePair fixed_three_transpositions(Point i, Point j, Point k, Point l, Point m, Point n, Point p)
{
  require_distinct("fixed_three_transpositions", {i, j, k, l, m, n, p});
  return {{{i, n, j}, {l, k, m, p}}, {{i, j, l, k, n, m, p}}};
}

CyclePair fixed_transposition_cycle(Point i, Point j, Point k, const Cycle& c)
{
  const std::size_t r = c.size();
  if (r < 3)
    throw std::invalid_argument("fixed_transposition_cycle: cycle length must be at least 3");
  std::vector<Point> labels{i, j, k};
  labels.insert(labels.end(), c.begin(), c.end());
  require_distinct("fixed_transposition_cycle", std::move(labels));
  // c[0] is l_1, so l_1, l_3, ... sit at even offsets.
  Cycle odd_ls, even_ls;
  for (std::size_t s = 0; s < r; ++s)
    (s % 2 == 0 ? odd_ls : even_ls).push_back(c[s]);

  CyclePair out;
  out.sigma.push_back({i, j});
  if (r % 2 == 1) {
    Cycle joined = odd_ls;
    joined.push_back(k);
    joined.insert(joined.end(), even_ls.begin(), even_ls.end());
    out.sigma.push_back(std::move(joined));
  } else {
    even_ls.push_back(k);
    out.sigma.push_back(std::move(odd_ls));
    out.sigma.push_back(std::move(even_ls));
  }
  Cycle t{i, j};
  t.insert(t.end(), c.rbegin(), c.rend());
  t.push_back(k);
  out.tau.push_back(std::move(t));
  return out;
}

}  // namespace identities

namespace {

Permutation restrict_to(const Permutation& w, std::span<const Point> support)
{
  std::vector<Point> image(w.degree());
  std::iota(image.begin(), image.end(), 1);
  for (Point x : support)
    image[x - 1] = w(x);
  return Permutation(std::move(image));
}

std::vector<Point> support_of(const identities::CyclePair& cp)
{
  std::vector<Point> s;
  for (const Cycle& c : cp.sigma)
    s.insert(s.end(), c.begin(), c.end());
  std::sort(s.begin(), s.end());
  return s;
}

BlockFactorization identity_block(const Permutation& w, const identities::CyclePair& cp, FactorMethod method)
{
  const int n = w.degree();
  BlockFactorization b;
  b.support = support_of(cp);
  b.w = restrict_to(w, b.support);
  b.sigma = Permutation::from_cycles(n, cp.sigma);
  b.tau = Permutation::from_cycles(n, cp.tau);
  b.method = method;
  if (!b.verify())
    throw std::logic_error("cycle identity failed to verify on support of " + to_cycle_string(b.w));
  return b;
}

/// Transports the (1)(2 ... m+1) construction onto (a)(c_1 ... c_m).
BlockFactorization relabeled_single_cycle(const Permutation& w, Point a, const Cycle& c)
{
  const int local_n = static_cast<int>(c.size()) + 1;
  const FactorizationCertificate local =
      single_cycle_factorization(local_n, default_single_cycle_parameter(local_n));
  std::vector<Point> label(local_n + 1);
  label[1] = a;
  for (int x = 2; x <= local_n; ++x)
    label[x] = c[x - 2];

  const int n = w.degree();
  std::vector<Point> sigma(n), tau(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::iota(tau.begin(), tau.end(), 1);
  for (int x = 1; x <= local_n; ++x) {
    sigma[label[x] - 1] = label[local.sigma(x)];
    tau[label[x] - 1] = label[local.tau(x)];
  }
  BlockFactorization b;
  b.support.assign(label.begin() + 1, label.end());
  std::sort(b.support.begin(), b.support.end());
  b.w = restrict_to(w, b.support);
  b.sigma = Permutation(std::move(sigma));
  b.tau = Permutation(std::move(tau));
  b.method = FactorMethod::single_cycle_construction;
  if (!b.verify())
    throw std::logic_error("single-cycle construction failed to transport");
  return b;
}

constexpr std::size_t kMaxSearchSupport = 8;

}  // namespace

int default_single_cycle_parameter(int n)
{
  if (n < 5)
    throw UnsupportedDegree("single-cycle construction needs n >= 5 (no valid p when n - 2 <= 2)");
  const int m = n - 2;
  for (int p = 1;; ++p)
    if (p % m != 0 && (p + 1) % m != 0)
      return p;
}

FactorizationCertificate single_cycle_factorization(int n, int p)
{
  if (n < 5)
    throw UnsupportedDegree("single-cycle construction needs n >= 5 (got n = " + std::to_string(n) + ")");
  const int m = n - 2;
  if (p < 1 || p % m == 0 || (p + 1) % m == 0)
    throw RejectedInput("single-cycle construction needs a positive p with n-2 = " + std::to_string(m) +
                        " dividing neither p nor p+1 (got p = " + std::to_string(p) + ")");

  // middle[x-1] is the image of x under tau; sigma sends middle[x-1] to bottom[x-1].
  std::vector<Point> middle(n), bottom(n);
  middle[0] = 2;
  bottom[0] = 1;
  for (int j = 1; j <= m; ++j) {
    const int residue = (j + p + 2) % m;
    middle[j] = 3 + (((residue - 3) % m) + m) % m;
    bottom[j] = j + 2;
  }
  middle[n - 1] = 1;
  bottom[n - 1] = 2;

  std::vector<Point> sigma(n);
  for (int x = 0; x < n; ++x)
    sigma[middle[x] - 1] = bottom[x];

  Cycle long_cycle(m + 1);
  std::iota(long_cycle.begin(), long_cycle.end(), 2);
  FactorizationCertificate cert{Permutation::from_cycles(n, {long_cycle}), Permutation(std::move(sigma)),
                                Permutation(std::move(middle)), FactorMethod::single_cycle_construction};
  if (!cert.verify())
    throw std::logic_error("single-cycle construction failed for n = " + std::to_string(n) +
                           ", p = " + std::to_string(p));
  return cert;
}

BlockFactorization exhaustive_block(const Permutation& w, std::span<const Point> support)
{
  std::vector<Point> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  const int s = static_cast<int>(pts.size());
  if (pts.size() > kMaxSearchSupport)
    throw RejectedInput("exhaustive search limited to supports of size " + std::to_string(kMaxSearchSupport));
  const int n = w.degree();
  std::vector<int> local(n + 1, 0);
  for (int idx = 0; idx < s; ++idx)
    local[pts[idx]] = idx + 1;
  std::vector<Point> w_local(s);
  for (int idx = 0; idx < s; ++idx) {
    const Point image = w(pts[idx]);
    if (local[image] == 0)
      throw RejectedInput("support is not invariant under w");
    w_local[idx] = local[image];
  }

  std::vector<Point> sigma(s), sigma_inv(s);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    bool deranged = true;
    for (int x = 0; x < s && deranged; ++x)
      deranged = sigma[x] != x + 1;
    if (!deranged)
      continue;
    for (int x = 0; x < s; ++x)
      sigma_inv[sigma[x] - 1] = x + 1;
    bool tau_ok = true;
    for (int x = 0; x < s && tau_ok; ++x)
      tau_ok = sigma_inv[w_local[x] - 1] != x + 1;
    if (!tau_ok)
      continue;

    std::vector<Point> gs(n), gt(n);
    std::iota(gs.begin(), gs.end(), 1);
    std::iota(gt.begin(), gt.end(), 1);
    for (int x = 0; x < s; ++x) {
      gs[pts[x] - 1] = pts[sigma[x] - 1];
      gt[pts[x] - 1] = pts[sigma_inv[w_local[x] - 1] - 1];
    }
    BlockFactorization b{pts, restrict_to(w, pts), Permutation(std::move(gs)), Permutation(std::move(gt)),
                         FactorMethod::exhaustive_fallback};
    if (!b.verify())
      throw std::logic_error("exhaustive search produced an invalid block");
    return b;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  throw RejectedInput("no product of two derangements equals " + to_cycle_string(restrict_to(w, pts)) +
                      " on its support");
}

FactorizationCertificate assemble_blocks(std::span<const BlockFactorization> blocks, FactorMethod method)
{
  if (blocks.empty())
    throw RejectedInput("assemble_blocks: no blocks");
  const int n = blocks.front().w.degree();
  std::vector<Point> w(n, 0), sigma(n, 0), tau(n, 0);
  for (const BlockFactorization& b : blocks) {
    if (b.w.degree() != n)
      throw DegreeMismatch("assemble_blocks: blocks of different degree");
    if (!b.verify())
      throw RejectedInput("assemble_blocks: block on " + to_cycle_string(b.w) + " does not verify");
    for (Point x : b.support) {
      if (w[x - 1] != 0)
        throw RejectedInput("assemble_blocks: point " + std::to_string(x) + " lies in two blocks");
      w[x - 1] = b.w(x);
      sigma[x - 1] = b.sigma(x);
      tau[x - 1] = b.tau(x);
    }
  }
  if (std::find(w.begin(), w.end(), 0) != w.end())
    throw RejectedInput("assemble_blocks: blocks do not cover every point");
  FactorizationCertificate cert{Permutation(std::move(w)), Permutation(std::move(sigma)),
                                Permutation(std::move(tau)), method};
  if (!cert.verify())
    throw std::logic_error("assemble_blocks: assembled certificate does not verify");
  return cert;
}

FactorizationCertificate factorize_two(const Permutation& w)
{
  using namespace identities;
  const int n = w.degree();
  if (n < 4)
    throw UnsupportedDegree("factorize_two: requires n >= 4 (got n = " + std::to_string(n) + ")");
  if (w.is_identity())
    throw RejectedInput("factorize_two: w is the identity");
  if (is_derangement(w))
    throw RejectedInput("factorize_two: w is already a derangement");

  std::vector<Point> fixed;
  std::vector<Cycle> twos, longs;
  for (Cycle& c : cycle_decomposition(w)) {
    if (c.size() == 1)
      fixed.push_back(c[0]);
    else if (c.size() == 2)
      twos.push_back(std::move(c));
    else
      longs.push_back(std::move(c));
  }
  const std::size_t f = fixed.size();
  const std::size_t t = twos.size();

  // An odd number of fixed points beside a single transposition leaves
  // (a)(jk) on three points, which has no factorization; keep three fixed
  // points back and search the five-point block instead.
  const bool five_point_block = f >= 3 && f % 2 == 1 && t == 1 && longs.empty();
  const std::size_t keep = five_point_block ? 3 : (f % 2 == 0 ? 2 : 1);

  std::vector<BlockFactorization> blocks;
  std::size_t next_fixed = 0;
  while (f - next_fixed > keep) {
    blocks.push_back(identity_block(w, two_fixed(fixed[next_fixed], fixed[next_fixed + 1]),
                                    FactorMethod::fixed_pair_reduction));
    next_fixed += 2;
  }

  std::size_t next_two = 0;
  std::vector<bool> long_used(longs.size(), false);
  FactorMethod core = FactorMethod::paired_fixed_points;

  if (five_point_block) {
    std::vector<Point> support(fixed.begin() + static_cast<std::ptrdiff_t>(next_fixed), fixed.end());
    support.insert(support.end(), twos[0].begin(), twos[0].end());
    blocks.push_back(exhaustive_block(w, support));
    next_two = 1;
  } else if (keep == 2) {
    const Point a = fixed[next_fixed], b = fixed[next_fixed + 1];
    if (t % 2 == 1) {
      blocks.push_back(identity_block(w, two_fixed_transposition(a, b, twos[0][0], twos[0][1]),
                                      FactorMethod::paired_fixed_points));
      next_two = 1;
    } else {
      blocks.push_back(identity_block(w, two_fixed(a, b), FactorMethod::paired_fixed_points));
    }
  } else {
    const Point a = fixed[next_fixed];
    core = FactorMethod::mixed_identity;
    if (t == 0) {
      if (longs.empty())
        throw std::logic_error("factorize_two: lone fixed point with nothing to pair");
      std::size_t pick = 0;
      for (std::size_t i = 1; i < longs.size(); ++i)
        if (longs[i].size() > longs[pick].size())
          pick = i;
      long_used[pick] = true;
      if (longs[pick].size() >= 4) {
        blocks.push_back(relabeled_single_cycle(w, a, longs[pick]));
        core = FactorMethod::single_cycle_construction;
      } else {
        std::vector<Point> support{a};
        support.insert(support.end(), longs[pick].begin(), longs[pick].end());
        blocks.push_back(exhaustive_block(w, support));
      }
    } else if (t % 2 == 0) {
      blocks.push_back(identity_block(
          w, fixed_two_transpositions(a, twos[0][0], twos[0][1], twos[1][0], twos[1][1]),
          FactorMethod::mixed_identity));
      next_two = 2;
    } else if (t >= 3) {
      blocks.push_back(identity_block(w,
                                      fixed_three_transpositions(a, twos[0][0], twos[0][1], twos[1][0],
                                                                 twos[1][1], twos[2][0], twos[2][1]),
                                      FactorMethod::mixed_identity));
      next_two = 3;
    } else {
      if (longs.empty())
        throw std::logic_error("factorize_two: (a)(jk) has no two-derangement factorization");
      long_used[0] = true;
      blocks.push_back(identity_block(w, fixed_transposition_cycle(a, twos[0][0], twos[0][1], longs[0]),
                                      FactorMethod::mixed_identity));
      next_two = 1;
    }
  }

  for (; next_two + 1 < t; next_two += 2)
    blocks.push_back(identity_block(
        w, transposition_pair(twos[next_two][0], twos[next_two][1], twos[next_two + 1][0], twos[next_two + 1][1]),
        FactorMethod::two_cycle_identity));
  if (next_two != t)
    throw std::logic_error("factorize_two: unpaired transposition left over");
  for (std::size_t i = 0; i < longs.size(); ++i)
    if (!long_used[i])
      blocks.push_back(identity_block(w, square_reverse(longs[i]), FactorMethod::two_cycle_identity));

  FactorMethod method = f > 2 ? FactorMethod::fixed_pair_reduction : core;
  if (std::any_of(blocks.begin(), blocks.end(),
                  [](const BlockFactorization& b) { return b.method == FactorMethod::exhaustive_fallback; }))
    method = FactorMethod::exhaustive_fallback;
  return assemble_blocks(blocks, method);
}

}  // namespace dergraph
