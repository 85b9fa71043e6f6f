#include "dergraph/characters.hpp"
#include "dergraph/partition.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

using namespace dergraph;

namespace {

// Standard Young tableaux by removing corners; independent of the hook formula.
BigInt count_tableaux(const std::vector<int>& shape, std::map<std::vector<int>, BigInt>& memo)
{
  if (shape.empty())
    return 1;
  if (auto it = memo.find(shape); it != memo.end())
    return it->second;
  BigInt total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner)
      continue;
    std::vector<int> smaller = shape;
    if (--smaller[r] == 0)
      smaller.pop_back();
    total += count_tableaux(smaller, memo);
  }
  return memo[shape] = total;
}

struct TempDir {
  std::filesystem::path path;
  TempDir()
  {
    path = std::filesystem::temp_directory_path() / ("dergraph-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("partition basics")
{
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(9).size() == 30);
  CHECK(partitions_of(20).size() == 627);
  for (int n = 1; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    CHECK(ps.front() == Partition{n});
    CHECK(ps.back() == Partition(std::vector<int>(n, 1)));
    for (std::size_t i = 1; i < ps.size(); ++i)
      CHECK(ps[i].parts() < ps[i - 1].parts());
    for (const Partition& p : ps)
      CHECK(p.size() == n);
  }
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition{4, 1, 1}.to_string() == "(4,1,1)");
  CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("hook operations")
{
  const Partition a{2, 2};
  CHECK(a.principal_hook_size() == 3);
  CHECK(a.remove_principal_hook() == Partition{1});
  CHECK(a.remove_first_column() == Partition{1, 1});
  const Partition b{3, 1};
  CHECK(b.principal_hook_size() == 4);
  CHECK(b.remove_principal_hook().empty());
  CHECK(b.remove_first_column() == Partition{2});
  CHECK(Partition{5}.remove_principal_hook().empty());
  CHECK_THROWS(Partition{}.principal_hook_size());

  CHECK(hook(6, 2) == Partition{4, 1, 1});
  CHECK(near_hook(7, 2) == Partition{3, 2, 1, 1});
  CHECK(hook(6, 2).is_hook());
  CHECK(near_hook(7, 2).is_near_hook());
  CHECK(!Partition{3, 3}.is_hook());
  CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
}

TEST_CASE("dimensions")
{
  CHECK(dim_f(Partition{5}) == 1);
  CHECK(dim_f(Partition{2, 2}) == 2);
  CHECK(dim_f(Partition{4, 1}) == 4);
  std::map<std::vector<int>, BigInt> memo;
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const Partition& lam : partitions_of(n)) {
      const BigInt f = dim_f(lam);
      total += f * f;
      CHECK(f == dim_f(lam.conjugate()));
      if (n <= 9)
        CHECK(f == count_tableaux(lam.parts(), memo));
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("characters against direct traces")
{
  for (int n = 2; n <= 8; ++n)
    for (const Partition& mu : partitions_of(n)) {
      const CycleType type = mu.as_cycle_type();
      // trivial, sign, standard = permutation representation minus trivial
      CHECK(character(Partition{n}, type) == 1);
      CHECK(character(Partition(std::vector<int>(n, 1)), type) == type.sign());
      CHECK(character(Partition{n - 1, 1}, type) == type.fixed_point_count() - 1);
    }
  for (int n = 1; n <= 9; ++n)
    for (const Partition& lam : partitions_of(n))
      CHECK(character(lam, CycleType(std::vector<int>(n, 1))) == dim_f(lam));
  // chi_(2,2) on S_4 classes (1^4),(2,1,1),(2,2),(3,1),(4)
  CHECK(character(Partition{2, 2}, CycleType({2, 2})) == 2);
  CHECK(character(Partition{2, 2}, CycleType({3, 1})) == -1);
  CHECK(character(Partition{2, 2}, CycleType({4})) == 0);
  CHECK(character(Partition{2, 2}, CycleType({2, 1, 1})) == 0);
  CHECK_THROWS(character(Partition{3}, CycleType({2, 2})));
}

TEST_CASE("orthogonality and sign twist")
{
  for (int n = 1; n <= 9; ++n) {
    const CharacterTable t = build_character_table(n);
    CHECK(t.column_orthogonality_holds());
    // Row orthogonality: sum_mu |C_mu| chi_l chi_m = n! delta.
    for (std::size_t a = 0; a < t.partitions.size(); ++a)
      for (std::size_t b = 0; b < t.partitions.size(); ++b) {
        BigInt s = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          s += class_size(t.classes[c]) * t.at(a, c) * t.at(b, c);
        CHECK(s == (a == b ? factorial(n) : BigInt(0)));
      }
  }
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        const CycleType type = mu.as_cycle_type();
        CHECK(character(lam.conjugate(), type) == type.sign() * character(lam, type));
      }
}

TEST_CASE("character table JSON and cache")
{
  const CharacterTable t = build_character_table(6);
  const CharacterTable back = character_table_from_json(character_table_to_json(t));
  CHECK(back.n == t.n);
  CHECK(back.partitions == t.partitions);
  CHECK(back.classes == t.classes);
  CHECK(back.values == t.values);
  CHECK_THROWS_AS(character_table_from_json("{\"n\": 3}"), std::runtime_error);
  CHECK_THROWS_AS(character_table_from_json("not json"), std::runtime_error);

  TempDir dir;
  const auto file = dir.path / "chartable_6.json";
  const CharacterTable built = load_or_build_character_table(6, dir.path);
  CHECK(std::filesystem::exists(file));
  CHECK(load_or_build_character_table(6, dir.path).values == built.values);

  // A damaged file is replaced by a fresh build.
  std::ofstream(file) << "{\"n\": 6, \"values\": 1";
  CHECK(load_or_build_character_table(6, dir.path).values == t.values);
  CHECK(character_table_from_json([&] {
          std::ifstream in(file);
          return std::string(std::istreambuf_iterator<char>(in), {});
        }()).values == t.values);

  // No cache directory: nothing touches the filesystem.
  CHECK(load_or_build_character_table(5, std::nullopt).n == 5);

  ::setenv("DERGRAPH_CACHE_DIR", dir.path.c_str(), 1);
  CHECK(default_cache_dir() == dir.path);
  ::unsetenv("DERGRAPH_CACHE_DIR");
  CHECK(default_cache_dir() == std::filesystem::path(".dergraph-cache"));
}
