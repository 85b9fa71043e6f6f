#include "dergraph/derangements.hpp"
#include "dergraph/errors.hpp"
#include "dergraph/spectra.hpp"

#include <doctest.h>

#include <map>
#include <thread>

using namespace dergraph;

namespace {

std::map<long, long> roots(const DistancePolynomial& p)
{
  std::map<long, long> out;
  for (const PolynomialFactor& f : p.factors)
    out[f.root.get_si()] = f.multiplicity.get_si();
  return out;
}

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

}  // namespace

TEST_CASE("eta recurrence examples")
{
  CHECK(eta(Partition{}) == 1);
  CHECK(eta(Partition{1}) == 0);
  CHECK(eta(Partition{3, 1}) == -3);
  CHECK(eta(Partition{2, 2}) == 3);
  CHECK(eta(Partition{3}) == 2);
  CHECK(eta(ones(4)) == -3);
  for (int n = 0; n <= 30; ++n)
    CHECK(eta(Partition(n == 0 ? std::vector<int>{} : std::vector<int>{n})) == derangement_count(n));
}

TEST_CASE("closed forms agree with the recurrence")
{
  for (int n = 4; n <= 15; ++n) {
    for (int i = 1; i <= n - 1; ++i)
      CHECK(eta_closed_form(ClosedFormFamily::hook, n, i) == eta(hook(n, i)));
    for (int i = 1; i <= n - 4; ++i)
      CHECK(eta_closed_form(ClosedFormFamily::near_hook, n, i) == eta(near_hook(n, i)));
    CHECK(eta_closed_form(ClosedFormFamily::two_row_2, n) == eta(Partition{n - 2, 2}));
    if (n >= 6)
      CHECK(eta_closed_form(ClosedFormFamily::two_row_3, n) == eta(Partition{n - 3, 3}));
  }
  // (n-1)/(n-3) D_{n-2} at n = 5 is 4/2 * 2 = 4
  CHECK(eta_closed_form(ClosedFormFamily::two_row_2, 5) == 4);
  CHECK(closed_form_shape(ClosedFormFamily::two_row_3, 7) == Partition{4, 3});
  CHECK_THROWS_AS(eta_closed_form(ClosedFormFamily::hook, 6, 0), std::out_of_range);
  CHECK_THROWS_AS(eta_closed_form(ClosedFormFamily::hook, 6, 6), std::out_of_range);
  CHECK_THROWS_AS(eta_closed_form(ClosedFormFamily::near_hook, 6, 3), std::out_of_range);
  CHECK_THROWS_AS(eta_closed_form(ClosedFormFamily::two_row_3, 5), std::out_of_range);
}

TEST_CASE("standard character eigenvalue")
{
  // eta_(n-1,1) (n-1) = -D_n
  for (int n = 2; n <= 20; ++n)
    CHECK(eta(Partition{n - 1, 1}) * (n - 1) == -derangement_count(n));
}

TEST_CASE("gamma examples")
{
  CHECK(gamma(Partition{4}) == 37);
  CHECK(gamma(Partition{4, 1}) == 9);
  CHECK(gamma(Partition{4, 1}) == -2 + derangement_count(5) / 4);
  CHECK(gamma(ones(4)) == 1);
  CHECK(gamma(Partition{3, 1}) == 1);
  CHECK(gamma(Partition{2, 2}) == -5);
  CHECK_THROWS_AS(gamma(Partition{3}), UnsupportedDegree);
}

TEST_CASE("spectrum tables")
{
  CHECK(spectrum_table(4).size() == 5);
  CHECK(roots(distance_polynomial(4)) == std::map<long, long>{{37, 1}, {1, 10}, {-3, 9}, {-5, 4}});
  CHECK(roots(distance_polynomial(5)) == std::map<long, long>{{194, 1}, {9, 16}, {2, 25}, {-1, 16}, {-6, 62}});
  CHECK(roots(distance_polynomial(6)) == std::map<long, long>{{1173, 1}, {51, 25}, {9, 25}, {3, 357}, {-3, 25},
                                                              {-7, 81}, {-9, 25}, {-15, 100}, {-17, 81}});
  CHECK(distance_polynomial(4).to_string() == "(q-37)(q-1)^10(q+3)^9(q+5)^4");
  CHECK_THROWS_AS(spectrum_table(3), UnsupportedDegree);

  DistancePolynomial zero{4, {{5, 1}, {0, 2}, {-1, 1}}};
  CHECK(zero.to_string() == "(q-5)q^2(q+1)");
}

TEST_CASE("trace identities")
{
  for (int n = 4; n <= 9; ++n) {
    BigInt mult = 0, eta_sum = 0, gamma_sum = 0, gamma_sq = 0;
    for (const SpectrumEntry& e : spectrum_table(n)) {
      mult += e.multiplicity;
      eta_sum += e.multiplicity * e.eta;
      gamma_sum += e.multiplicity * e.gamma;
      gamma_sq += e.multiplicity * e.gamma * e.gamma;
    }
    CHECK(mult == factorial(n));
    CHECK(eta_sum == 0);
    CHECK(gamma_sum == 0);
    // tr(d^2) = n! (D_n + 4 (n! - 1 - D_n))
    const BigInt d = derangement_count(n);
    CHECK(gamma_sq == factorial(n) * (d + 4 * (factorial(n) - 1 - d)));
  }
}

TEST_CASE("extremal eigenvalues")
{
  const ExtremalReport r4 = extremal(4);
  CHECK(r4.smallest.value == -5);
  CHECK(r4.smallest.achieved_by == std::vector<Partition>{{2, 2}});
  CHECK(r4.second_smallest.value == -3);
  CHECK(r4.second_smallest.achieved_by == std::vector<Partition>{{2, 1, 1}});
  CHECK(r4.largest.value == 37);

  const ExtremalReport r5 = extremal(5);
  CHECK(r5.smallest.value == -6);
  CHECK(r5.smallest.achieved_by.size() == 3);
  for (const Partition& p : {Partition{3, 2}, Partition{3, 1, 1}, ones(5)})
    CHECK(std::count(r5.smallest.achieved_by.begin(), r5.smallest.achieved_by.end(), p) == 1);
  CHECK(r5.third_largest.value == 2);
  CHECK(r5.third_largest.achieved_by == std::vector<Partition>{{2, 2, 1}});

  const ExtremalReport r6 = extremal(6);
  CHECK(r6.smallest.value == -17);
  CHECK(r6.smallest.achieved_by == std::vector<Partition>{{4, 2}});
  CHECK(r6.second_smallest.value == -15);
  CHECK(r6.second_smallest.achieved_by == std::vector<Partition>{{4, 1, 1}});
  CHECK(r6.largest.value == 1173);
  CHECK(r6.second_largest.value == 51);
  CHECK(r6.third_largest.value == 9);
  CHECK(r6.third_largest.achieved_by == std::vector<Partition>{{3, 3}});

  for (int n = 6; n <= 13; ++n) {
    const ExtremalReport r = extremal(n);
    CHECK(r.largest.achieved_by == std::vector<Partition>{{n}});
    CHECK(r.second_largest.achieved_by == std::vector<Partition>{{n - 1, 1}});
    CHECK(r.third_largest.achieved_by == std::vector<Partition>{{n - 3, 3}});
    CHECK(r.smallest.achieved_by == std::vector<Partition>{{n - 2, 2}});
    CHECK(r.second_smallest.achieved_by == std::vector<Partition>{{n - 2, 1, 1}});
    // Known values: gamma_(n) = 2(n!-1) - D_n, gamma_(n-1,1) = -2 + D_n/(n-1).
    CHECK(r.largest.value == 2 * (factorial(n) - 1) - derangement_count(n));
    CHECK(r.second_largest.value == -2 + derangement_count(n) / (n - 1));
  }
}

TEST_CASE("inequality sweep")
{
  const LemmaReport small = lemma_sweep(6, 6);
  CHECK(small.ok());
  // At n = 6 the hook (3,1^3) has |eta| = 5 below eta_(4,1,1) = 13.
  CHECK(abs(eta(Partition{3, 1, 1, 1})) == 5);
  CHECK(eta(Partition{4, 1, 1}) == 13);
  const LemmaReport r = lemma_sweep(6, 20);
  CHECK(r.ok());
  CHECK(r.instances > 800);
  CHECK(lemma_sweep(21, 30).ok());
  CHECK_THROWS_AS(lemma_sweep(5, 8), std::invalid_argument);
}

TEST_CASE("alternating sign")
{
  const SignReport r = sign_check(12);
  CHECK(r.ok());
  long expected = 0;
  for (int n = 2; n <= 12; ++n)
    expected += static_cast<long>(partitions_of(n).size());
  CHECK(r.checked == expected);
  CHECK(sign_check(16).ok());
  CHECK_THROWS(sign_check(1));
}

TEST_CASE("character sums reproduce eta and gamma")
{
  for (int n = 4; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n)) {
      CHECK(eta_from_characters(lam) == eta(lam));
      CHECK(gamma_from_characters(lam) == gamma(lam));
    }
  const CharacterSumCheck c = check_character_sums(build_character_table(7));
  CHECK(c.partitions == 15);
  CHECK(c.eta_ok);
  CHECK(c.gamma_ok);
}

TEST_CASE("eta memo under concurrent use")
{
  std::vector<std::vector<BigInt>> seen(6);
  std::vector<std::thread> threads;
  for (int t = 0; t < 6; ++t)
    threads.emplace_back([t, &seen] {
      for (const Partition& lam : partitions_of(14 + t % 3))
        seen[t].push_back(eta(lam));
    });
  for (auto& th : threads)
    th.join();
  for (int t = 3; t < 6; ++t)
    CHECK(seen[t] == seen[t - 3]);
}
