#include "doctest.h"

#include "invharm/errors.hpp"
#include "invharm/formulas.hpp"
#include "invharm/loci.hpp"
#include "invharm/repr.hpp"
#include "invharm/rsk.hpp"
#include "support/oracles.hpp"

using namespace invharm;

namespace {

SchurSeries expand(const oracle::Poly& p, int n, int grade) {
  SchurSeries s(n);
  for (const auto& [lambda, c] : oracle::schur_expand(p, n)) s.add(grade, Partition(lambda), c);
  return s;
}

// Permutation character of S_n on the involutions with a fixed points,
// counting w with g w g^{-1} = w for g a product of consecutive cycles.
ClassFunction conjugation_character(int n, int a) {
  std::vector<Rational> values;
  for (const Partition& mu : enumerate_partitions(n)) {
    std::vector<int> g(static_cast<std::size_t>(n));
    int start = 0;
    for (int len : mu.parts()) {
      for (int k = 0; k < len; ++k) g[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
      start += len;
    }
    long count = 0;
    for (const auto& w : oracle::involutions_brute(n)) {
      if (oracle::fixed_points(w) != a) continue;
      bool commutes = true;
      for (int i = 0; i < n && commutes; ++i)
        commutes = g[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] + 1 ==
                   w[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
      count += commutes;
    }
    values.emplace_back(count);
  }
  return ClassFunction(n, values);
}

}  // namespace

TEST_CASE("the M_6 graded Frobenius image term by term") {
  SchurSeries expected(6);
  expected.add(0, {6}, 1);
  for (auto p : {Partition{6}, Partition{5, 1}, Partition{4, 2}}) expected.add(1, p, 1);
  for (auto p : {Partition{6}, Partition{5, 1}, Partition{3, 2, 1}, Partition{2, 2, 2}}) expected.add(2, p, 1);
  expected.add(2, {4, 2}, 2);
  for (auto p : {Partition{6}, Partition{4, 2}, Partition{2, 2, 2}}) expected.add(3, p, 1);
  const SchurSeries s = grfrob_matchings(6);
  CHECK(s == expected);
  CHECK(s.coefficient(2, {4, 2}) == 2);
  CHECK(s.max_grade() == 3);
}

TEST_CASE("small Frobenius images") {
  SchurSeries pm4(4);
  pm4.add(0, {4}, 1);
  pm4.add(1, {2, 2}, 1);
  CHECK(grfrob_pm(4) == pm4);
  CHECK(grfrob_conjugacy(4, 4) == SchurSeries::single({4}));
  CHECK(grfrob_matchings(0) == SchurSeries::single(Partition()));
  CHECK(hilb_matchings(4) == QPoly({1, 6, 3}));
  CHECK(hilb_matchings(6) == QPoly({1, 15, 45, 15}));
  CHECK(hilb_matchings(0) == QPoly({1}));
  CHECK_THROWS_AS(grfrob_pm(5), DomainError);
  CHECK_THROWS_AS(grfrob_conjugacy(5, 2), DomainError);
  CHECK_THROWS_AS(lds_histogram_pm(16), ResourceError);
}

TEST_CASE("matching formula agrees with symmetric polynomial products") {
  for (int n = 0; n <= 6; ++n) {
    SchurSeries expected(n);
    for (int k = 0; 2 * k <= n; ++k)
      expected += expand(oracle::multiply(oracle::plethysm_h_h2(k, n), oracle::schur_poly({n - 2 * k}, n)), n, k);
    CHECK(grfrob_matchings(n) == expected);
  }
}

TEST_CASE("Hilbert series masses") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(hilb_matchings(n).at_one() == involution_count(n));
    CHECK(dimension_series(grfrob_matchings(n)) == hilb_matchings(n));
    CHECK(histogram_matchings(n).as_qpoly() == hilb_matchings(n));
    for (int a = n % 2; a <= n; a += 2) CHECK(hilb_conjugacy(n, a).at_one() == locus_size(LocusSpec::fixed_count(n, a)));
  }
  for (int n = 0; n <= 12; n += 2) {
    CHECK(hilb_pm(n).at_one() == odd_double_factorial(n - 1));
    CHECK(dimension_series(grfrob_pm(n)) == hilb_pm(n));
  }
}

TEST_CASE("perfect matching Hilbert series is the lds distribution") {
  for (int n = 0; n <= 10; n += 2) {
    QPoly brute;
    for (const auto& w : oracle::involutions_brute(n))
      if (oracle::fixed_points(w) == 0) brute.add_to((n - oracle::lds_dp(w)) / 2, 1);
    CHECK(hilb_pm(n) == brute);
    CHECK(lds_histogram_pm(n).as_qpoly() == brute);
    CHECK(lds_histogram_pm(n) == histogram_pm(n));
  }
}

TEST_CASE("s_d[s_2] s_a coefficients agree with symmetric polynomial products") {
  for (int d = 0; d <= 3; ++d)
    for (int a = 0; a + 2 * d <= 7; ++a) {
      const int n = a + 2 * d;
      const auto m = oracle::schur_expand(oracle::multiply(oracle::plethysm_h_h2(d, n), oracle::schur_poly({a}, n)), n);
      for (const auto& lambda : enumerate_partitions(n)) {
        auto it = m.find(lambda.parts());
        CHECK(lemma51_coefficient(lambda, a, d) == (it == m.end() ? Integer(0) : it->second));
      }
    }
  CHECK_THROWS_AS(lemma51_coefficient(Partition{3}, 2, 1), DomainError);
  // s_1[s_2] s_1 = s_3 + s_21: a repeated odd part forces zero.
  CHECK(lemma51_coefficient(Partition{1, 1, 1}, 1, 1) == 0);
}

TEST_CASE("s_d[s_2] s_a coefficients agree with the Pieri expansion up to size 12") {
  for (int d = 0; 2 * d <= 12; ++d)
    for (int a = 0; a + 2 * d <= 12; ++a) {
      const SchurSeries p = pieri_multiply(plethysm_sd_s2(d), a);
      for (const auto& lambda : enumerate_partitions(a + 2 * d))
        CHECK(lemma51_coefficient(lambda, a, d) == schur_coefficient(p, 0, lambda));
    }
}

TEST_CASE("truncation identities") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(check_identity_s2(n));
    for (int a = n % 2; a <= n; a += 2) CHECK(check_identity_s1(n, a));
  }
}

TEST_CASE("fixed-point strata: structure of the graded Frobenius image") {
  for (int n = 0; n <= 12; ++n) {
    SchurSeries ungraded_sum(n);
    for (int a = n % 2; a <= n; a += 2) {
      const SchurSeries s = grfrob_conjugacy(n, a);
      CHECK(s.is_nonnegative());
      CHECK(s.max_grade() <= (n - a) / 2);
      for (const auto& [key, c] : s.terms()) CHECK(key.lambda.first_row() <= n - 2 * key.grade + a);
      CHECK(s.at_q_equals_one() == ungraded_frob_conjugacy(n, a));
      CHECK(dimension_series(s) == hilb_conjugacy(n, a));
      ungraded_sum += ungraded_frob_conjugacy(n, a);
    }
    CHECK(grfrob_matchings(n).at_q_equals_one() == ungraded_sum);
    CHECK(grfrob_conjugacy(n, n) == SchurSeries::single(Partition(std::vector<int>(n > 0 ? 1 : 0, n))));
    if (n % 2 == 0) CHECK(grfrob_conjugacy(n, 0) == grfrob_pm(n));
  }
}

TEST_CASE("ungraded modules agree with permutation characters") {
  for (int n = 0; n <= 7; ++n)
    for (int a = n % 2; a <= n; a += 2)
      CHECK(decompose_class_function(conjugation_character(n, a)) == ungraded_frob_conjugacy(n, a));
}

TEST_CASE("Hilbert series are log-concave up to n = 15") {
  for (int n = 0; n <= 15; ++n) {
    CHECK(is_log_concave(hilb_matchings(n)));
    for (int a = n % 2; a <= n; a += 2) CHECK(is_log_concave(hilb_conjugacy(n, a)));
    if (n % 2 == 0) CHECK(is_log_concave(hilb_pm(n)));
  }
}

TEST_CASE("figure-scale tables") {
  const LdsHistogram m = histogram_matchings(200);
  CHECK(m.counts.size() == 101);
  CHECK(m.total() == involution_count(200));
  const LdsHistogram pm = histogram_pm(100);
  CHECK(pm.total() == odd_double_factorial(99));
  CHECK(pm.counts.size() == 50);
}
