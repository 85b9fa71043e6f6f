#include "dergraph/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace dergraph {

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet to_beta(const std::vector<int>& parts)
{
  const int len = static_cast<int>(parts.size());
  BetaSet beta(len);
  for (int i = 0; i < len; ++i)
    beta[i] = parts[i] + (len - 1 - i);
  return beta;
}

std::vector<int> from_beta(BetaSet beta)
{
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[i] - (len - 1 - i);
    if (p > 0)
      parts.push_back(p);
  }
  return parts;
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

class CharacterMemo {
 public:
  std::optional<BigInt> find(const MemoKey& key) const
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end())
      return std::nullopt;
    return it->second;
  }
  void store(MemoKey key, const BigInt& value)
  {
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<MemoKey, BigInt> memo_;
};

CharacterMemo& memo()
{
  static CharacterMemo m;
  return m;
}

/// chi_shape at the class `cycles` (sorted non-increasing).
BigInt mn(const std::vector<int>& shape, const std::vector<int>& cycles)
{
  if (cycles.empty())
    return shape.empty() ? 1 : 0;
  MemoKey key{shape, cycles};
  if (auto hit = memo().find(key))
    return *hit;

  const int k = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const BetaSet beta = to_beta(shape);
  const std::set<int> occupied(beta.begin(), beta.end());

  BigInt total = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int from = beta[idx];
    const int to = from - k;
    if (to < 0 || occupied.count(to))
      continue;
    // Leg length = beads strictly between the new and old positions.
    const auto between = std::distance(occupied.upper_bound(to), occupied.lower_bound(from));
    BetaSet moved = beta;
    moved[idx] = to;
    const BigInt sub = mn(from_beta(std::move(moved)), rest);
    if (between % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  memo().store(std::move(key), total);
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const CycleType& mu)
{
  if (lambda.size() != mu.degree())
    throw std::invalid_argument("character: |lambda| = " + std::to_string(lambda.size()) +
                                " but mu has degree " + std::to_string(mu.degree()));
  return mn(lambda.parts(), mu.parts);
}

std::size_t CharacterTable::index_of(const Partition& lambda) const
{
  auto it = std::find(partitions.begin(), partitions.end(), lambda);
  if (it == partitions.end())
    throw std::out_of_range("partition " + lambda.to_string() + " not in table");
  return static_cast<std::size_t>(it - partitions.begin());
}

std::size_t CharacterTable::index_of(const CycleType& mu) const
{
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end())
    throw std::out_of_range("cycle type not in table");
  return static_cast<std::size_t>(it - classes.begin());
}

bool CharacterTable::column_orthogonality_holds() const
{
  const BigInt nfact = factorial(n);
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a; b < classes.size(); ++b) {
      BigInt sum = 0;
      for (std::size_t r = 0; r < partitions.size(); ++r)
        sum += values[r][a] * values[r][b];
      const BigInt expected = (a == b) ? BigInt(nfact / class_size(classes[a])) : BigInt(0);
      if (sum != expected)
        return false;
    }
  return true;
}

CharacterTable build_character_table(int n)
{
  CharacterTable table;
  table.n = n;
  table.partitions = partitions_of(n);
  for (const Partition& p : table.partitions)
    table.classes.push_back(p.as_cycle_type());
  const auto rows = static_cast<long>(table.partitions.size());
  table.values.assign(rows, std::vector<BigInt>(table.classes.size()));
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      table.values[r][c] = character(table.partitions[r], table.classes[c]);
  return table;
}

std::string character_table_to_json(const CharacterTable& table)
{
  nlohmann::json j;
  j["n"] = table.n;
  j["classes"] = nlohmann::json::array();
  for (const CycleType& mu : table.classes)
    j["classes"].push_back(mu.parts);
  j["partitions"] = nlohmann::json::array();
  for (const Partition& p : table.partitions)
    j["partitions"].push_back(p.parts());
  j["values"] = nlohmann::json::array();
  for (const auto& row : table.values) {
    nlohmann::json jr = nlohmann::json::array();
    for (const BigInt& v : row)
      jr.push_back(to_decimal(v));
    j["values"].push_back(std::move(jr));
  }
  return j.dump();
}

CharacterTable character_table_from_json(const std::string& text)
{
  try {
    const auto j = nlohmann::json::parse(text);
    CharacterTable table;
    table.n = j.at("n").get<int>();
    for (const auto& c : j.at("classes"))
      table.classes.emplace_back(c.get<std::vector<int>>());
    for (const auto& p : j.at("partitions"))
      table.partitions.emplace_back(p.get<std::vector<int>>());
    for (const auto& row : j.at("values")) {
      std::vector<BigInt> r;
      for (const auto& v : row)
        r.emplace_back(v.get<std::string>(), 10);
      if (r.size() != table.classes.size())
        throw std::runtime_error("row width does not match class count");
      table.values.push_back(std::move(r));
    }
    if (table.values.size() != table.partitions.size())
      throw std::runtime_error("row count does not match partition count");
    for (const Partition& p : table.partitions)
      if (p.size() != table.n)
        throw std::runtime_error("partition " + p.to_string() + " has the wrong size");
    for (const CycleType& mu : table.classes)
      if (mu.degree() != table.n)
        throw std::runtime_error("class has the wrong degree");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed character table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed character table: ") + e.what());
  }
}

std::filesystem::path default_cache_dir()
{
  if (const char* env = std::getenv("DERGRAPH_CACHE_DIR"); env && *env)
    return env;
  return ".dergraph-cache";
}

CharacterTable load_or_build_character_table(int n, const std::optional<std::filesystem::path>& cache_dir)
{
  if (!cache_dir)
    return build_character_table(n);
  const auto file = *cache_dir / ("chartable_" + std::to_string(n) + ".json");
  if (std::ifstream in(file); in) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      CharacterTable cached = character_table_from_json(buf.str());
      if (cached.n == n && cached.partitions == partitions_of(n))
        return cached;
    } catch (const std::runtime_error&) {
      // Unreadable cache entries are rebuilt and overwritten below.
    }
  }
  CharacterTable table = build_character_table(n);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  if (!ec) {
    const auto tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << character_table_to_json(table);
    }
    std::filesystem::rename(tmp, file, ec);
  }
  return table;
}

}  // namespace dergraph
