#include "dergraph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dergraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::principal_hook_size() const
{
  if (empty())
    throw std::invalid_argument("principal hook of the empty partition");
  return parts_.front() + length() - 1;
}

Partition Partition::remove_principal_hook() const
{
  if (empty())
    throw std::invalid_argument("principal hook of the empty partition");
  std::vector<int> rest;
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > 1)
      rest.push_back(parts_[i] - 1);
  return Partition(std::move(rest));
}

Partition Partition::remove_first_column() const
{
  if (empty())
    throw std::invalid_argument("first column of the empty partition");
  std::vector<int> rest;
  for (int p : parts_)
    if (p > 1)
      rest.push_back(p - 1);
  return Partition(std::move(rest));
}

Partition Partition::conjugate() const
{
  std::vector<int> cols(first_row(), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c)
      ++cols[c];
  return Partition(std::move(cols));
}

bool Partition::is_hook() const { return length() <= 1 || parts_[1] == 1; }

bool Partition::is_near_hook() const
{
  return length() >= 2 && parts_[1] == 2 && (length() == 2 || parts_[2] == 1);
}

std::string Partition::to_string() const
{
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition hook(int n, int i)
{
  if (i < 0 || i > n - 1)
    throw std::invalid_argument("hook index out of range");
  std::vector<int> p{n - i};
  p.insert(p.end(), i, 1);
  return Partition(std::move(p));
}

Partition near_hook(int n, int i)
{
  if (i < 0 || i > n - 4)
    throw std::invalid_argument("near-hook index out of range");
  std::vector<int> p{n - 2 - i, 2};
  p.insert(p.end(), i, 1);
  return Partition(std::move(p));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

BigInt dim_f(const Partition& lambda)
{
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
  return exact_div(factorial(lambda.size()), hooks);
}

}  // namespace dergraph
