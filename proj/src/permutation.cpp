#include "dergraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace dergraph {

BigInt exact_div(const BigInt& num, const BigInt& den)
{
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("exact_div: " + to_decimal(num) + " is not divisible by " + to_decimal(den));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

CycleType::CycleType(std::vector<int> p) : parts(std::move(p))
{
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x <= 0; }))
    throw std::invalid_argument("cycle type parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int CycleType::count(int part) const
{
  return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

int CycleType::sign() const { return sign_power(degree() - length()); }

Permutation::Permutation(int n)
{
  if (n < 0)
    throw std::invalid_argument("negative degree");
  image_.resize(n);
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image))
{
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (Point x : image_) {
    if (x < 1 || x > n)
      throw std::invalid_argument("image value " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[x])
      throw std::invalid_argument("image value " + std::to_string(x) + " repeated");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(int n, std::span<const Cycle> cycles)
{
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point x = c[i];
      if (x < 1 || x > n)
        throw std::invalid_argument("point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (used[x])
        throw std::invalid_argument("point " + std::to_string(x) + " repeated");
      used[x] = true;
      image[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, std::initializer_list<Cycle> cycles)
{
  return from_cycles(n, std::span<const Cycle>(cycles.begin(), cycles.size()));
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i + 1)
      return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<Point> image(p.degree());
  for (int x = 1; x <= p.degree(); ++x)
    image[x - 1] = p(q(x));
  return Permutation(std::move(image));
}

Permutation inverse(const Permutation& w)
{
  std::vector<Point> image(w.degree());
  for (int x = 1; x <= w.degree(); ++x)
    image[w(x) - 1] = x;
  return Permutation(std::move(image));
}

Permutation conjugate(const Permutation& w, const Permutation& u)
{
  return compose(u, compose(w, inverse(u)));
}

std::vector<Cycle> cycle_decomposition(const Permutation& w)
{
  std::vector<Cycle> cycles;
  std::vector<bool> seen(w.degree() + 1, false);
  // Scanning from 1 upward starts every cycle at its minimum, already sorted.
  for (Point start = 1; start <= w.degree(); ++start) {
    if (seen[start])
      continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = w(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

CycleType cycle_type(const Permutation& w)
{
  std::vector<int> parts;
  for (const Cycle& c : cycle_decomposition(w))
    parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

std::vector<Point> fixed_points(const Permutation& w)
{
  std::vector<Point> out;
  for (Point x = 1; x <= w.degree(); ++x)
    if (w(x) == x)
      out.push_back(x);
  return out;
}

bool is_derangement(const Permutation& w)
{
  for (Point x = 1; x <= w.degree(); ++x)
    if (w(x) == x)
      return false;
  return true;
}

BigInt class_size(const CycleType& mu)
{
  const int n = mu.degree();
  BigInt z = 1;
  for (int i = 1; i <= n; ++i) {
    const int m = mu.count(i);
    if (m == 0)
      continue;
    BigInt ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), i, m);
    z *= ipow * factorial(m);
  }
  return exact_div(factorial(n), z);
}

std::string to_cycle_string(const Permutation& w, bool show_fixed)
{
  std::string out;
  for (const Cycle& c : cycle_decomposition(w)) {
    if (c.size() == 1 && !show_fixed)
      continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string to_one_line_string(const Permutation& w)
{
  std::string out = "[";
  for (int x = 1; x <= w.degree(); ++x) {
    if (x > 1)
      out += ',';
    out += std::to_string(w(x));
  }
  return out + "]";
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end()
  {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek()
  {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  int number()
  {
    if (!at_digit())
      fail("expected a positive integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000)
        fail("point label too large");
    }
    return static_cast<int>(v);
  }
  [[noreturn]] void fail(const std::string& what) const
  {
    throw std::invalid_argument("cannot parse permutation '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> n_hint)
{
  Scanner sc(text);
  if (sc.accept('[')) {
    std::vector<Point> image;
    if (!sc.accept(']')) {
      do {
        image.push_back(sc.number());
      } while (sc.accept(','));
      sc.expect(']');
    }
    if (!sc.at_end())
      sc.fail("trailing characters");
    if (n_hint && *n_hint != static_cast<int>(image.size()))
      sc.fail("one-line form has " + std::to_string(image.size()) + " entries but degree " +
              std::to_string(*n_hint) + " was requested");
    return Permutation(std::move(image));
  }

  std::vector<Cycle> cycles;
  int max_point = 0;
  while (!sc.at_end()) {
    sc.expect('(');
    Cycle c;
    while (sc.at_digit()) {
      const int x = sc.number();
      if (x < 1)
        sc.fail("points are 1-based");
      c.push_back(x);
      max_point = std::max(max_point, x);
      sc.accept(',');
    }
    sc.expect(')');
    cycles.push_back(std::move(c));
  }
  if (n_hint && max_point > *n_hint)
    throw std::invalid_argument("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(*n_hint));
  const int n = std::max(n_hint.value_or(0), max_point);
  std::vector<bool> used(n + 1, false);
  for (const Cycle& c : cycles)
    for (Point x : c) {
      if (used[x])
        throw std::invalid_argument("repeated point " + std::to_string(x) + " in '" + std::string(text) + "'");
      used[x] = true;
    }
  return Permutation::from_cycles(n, cycles);
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::uint64_t lex_rank(const Permutation& w)
{
  const int n = w.degree();
  std::uint64_t rank = 0;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    const Point v = w(i);
    std::uint64_t smaller = 0;
    for (Point u = 1; u < v; ++u)
      smaller += used[u] ? 0 : 1;
    used[v] = true;
    rank = rank * static_cast<std::uint64_t>(n - i + 1) + smaller;
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank)
{
  std::vector<std::uint64_t> digits(n);
  for (int i = n; i >= 1; --i) {
    digits[i - 1] = rank % static_cast<std::uint64_t>(n - i + 1);
    rank /= static_cast<std::uint64_t>(n - i + 1);
  }
  std::vector<Point> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Point> image;
  image.reserve(n);
  for (int i = 0; i < n; ++i) {
    image.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Permutation(std::move(image));
}

}  // namespace dergraph
