#include "doctest.h"

#include <random>

#include "invharm/errors.hpp"
#include "invharm/schur_series.hpp"
#include "support/oracles.hpp"

using namespace invharm;

namespace {

SchurSeries from_oracle(const std::map<std::vector<int>, Integer>& m, int n, int grade = 0) {
  SchurSeries s(n);
  for (const auto& [lambda, c] : m) s.add(grade, Partition(lambda), c);
  return s;
}

SchurSeries random_series(int n, std::mt19937& rng) {
  SchurSeries s(n);
  const auto parts = enumerate_partitions(n);
  std::uniform_int_distribution<int> coeff(-3, 3), grade(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int k = 0; k < 6; ++k) s.add(grade(rng), parts[pick(rng)], coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic keeps only nonzero terms") {
  SchurSeries s(3);
  s.add(0, {3}, 2);
  s.add(1, {2, 1}, 1);
  s.add(0, {3}, -2);
  CHECK(s.terms().size() == 1);
  CHECK(s.coefficient(1, {2, 1}) == 1);
  CHECK(s.coefficient(0, {3}) == 0);
  CHECK_THROWS_AS(s.add(0, {2}, 1), DomainError);
  CHECK_THROWS_AS(s.add(-1, {3}, 1), DomainError);
  CHECK(s.max_grade() == 1);
  CHECK(SchurSeries(2).max_grade() == -1);
  CHECK((s - s).is_zero());
  CHECK(s.shifted(2).coefficient(3, {2, 1}) == 1);
  SchurSeries t = s;
  t.add(0, {2, 1}, 4);
  CHECK(t.at_q_equals_one().coefficient(0, {2, 1}) == 5);
  CHECK(t.grades() == std::vector<int>{0, 1});
  CHECK(t.to_string() == "q^0: 4*s_21\nq^1: s_21");
}

TEST_CASE("pieri rule agrees with multiplication of Schur polynomials") {
  for (int m = 0; m <= 5; ++m)
    for (const auto& lambda : enumerate_partitions(m))
      for (int b = 0; b <= 3; ++b) {
        const int n = m + b;
        const auto product = oracle::multiply(oracle::schur_poly(lambda.parts(), n), oracle::schur_poly({b}, n));
        const SchurSeries expected = from_oracle(oracle::schur_expand(product, n), n);
        CHECK(pieri_multiply(SchurSeries::single(lambda), b) == expected);
      }
}

TEST_CASE("plethysm s_d[s_2] agrees with h_d evaluated at the monomials x_i x_j") {
  for (int d = 0; d <= 3; ++d) {
    const int n = 2 * d;
    const SchurSeries expected = from_oracle(oracle::schur_expand(oracle::plethysm_h_h2(d, n), n), n);
    CHECK(plethysm_sd_s2(d) == expected);
  }
  CHECK(plethysm_sd_s2_or_zero(-1, 4).is_zero());
  CHECK(plethysm_sd_s2_or_zero(2, 4) == plethysm_sd_s2(2));
  CHECK_THROWS_AS(plethysm_sd_s2(-1), DomainError);
}

TEST_CASE("pieri products of plethysms are nonnegative with the strip count as mass") {
  for (int d = 0; d <= 4; ++d)
    for (int a = 0; 2 * d + a <= 12; ++a) {
      const SchurSeries p = pieri_multiply(plethysm_sd_s2(d), a);
      CHECK(p.is_nonnegative());
      Integer mass = 0;
      for (const auto& [key, c] : p.terms()) {
        mass += c;
        CHECK(key.lambda.first_row() >= a);
      }
      Integer pairs = 0;
      for (const auto& mu : even_partitions(2 * d))
        for (const auto& nu : enumerate_partitions(2 * d + a)) pairs += is_horizontal_strip(nu, mu) ? 1 : 0;
      CHECK(mass == pairs);
    }
}

TEST_CASE("first-row truncations split a series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    const SchurSeries s = random_series(n, rng);
    for (int a = 0; a <= n; ++a) {
      const SchurSeries low = truncate_first_row(s, FirstRowPredicate::at_most(a));
      const SchurSeries high = truncate_first_row(s, FirstRowPredicate::between(a + 1, n));
      CHECK(low + high == s);
      for (const auto& [key, c] : low.terms()) CHECK(key.lambda.first_row() <= a);
    }
  }
  CHECK(schur_coefficient(SchurSeries::single({2, 1}, 3), 3, {2, 1}) == 1);
}
