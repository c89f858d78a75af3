#include "invharm/formulas.hpp"

#include "invharm/errors.hpp"
#include "invharm/loci.hpp"
#include "invharm/rsk.hpp"

namespace invharm {

Integer LdsHistogram::total() const {
  Integer t = 0;
  for (const auto& [d, c] : counts) t += c;
  return t;
}

QPoly LdsHistogram::as_qpoly() const {
  QPoly p;
  for (const auto& [d, c] : counts) p.add_to(d, c);
  return p;
}

namespace {

void require_even(int n, const char* what) {
  if (n < 0 || n % 2 != 0) throw DomainError(std::string(what) + ": n must be even and nonnegative");
}

void require_fixed_count(int n, int a, const char* what) {
  if (n < 0 || a < 0 || a > n || (n - a) % 2 != 0)
    throw DomainError(std::string(what) + ": need 0 <= a <= n with a = n mod 2");
}

// s_d[s_2] s_{n-2d}, the Frobenius image of C[M_{n, n-2d}].
SchurSeries matching_term(int n, int d) {
  if (d < 0) return SchurSeries(n);
  return pieri_multiply(plethysm_sd_s2(d), n - 2 * d);
}

// { s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2} }_{lambda_1 <= n-2d+a} at grade 0.
SchurSeries conjugacy_layer(int n, int a, int d) {
  return truncate_first_row(matching_term(n, d) - matching_term(n, d - 1), FirstRowPredicate::at_most(n - 2 * d + a));
}

}  // namespace

SchurSeries grfrob_matchings(int n) {
  if (n < 0) throw DomainError("grfrob_matchings: n must be nonnegative");
  SchurSeries out(n);
  for (int k = 0; 2 * k <= n; ++k) out += matching_term(n, k).shifted(k);
  return out;
}

QPoly hilb_matchings(int n) {
  if (n < 0) throw DomainError("hilb_matchings: n must be nonnegative");
  QPoly p;
  for (int d = 0; 2 * d <= n; ++d) p.add_to(d, binomial(n, 2 * d) * odd_double_factorial(2 * d - 1));
  return p;
}

SchurSeries grfrob_pm(int n) {
  require_even(n, "grfrob_pm");
  SchurSeries out(n);
  for (const Partition& lambda : even_partitions(n)) out.add((n - lambda.first_row()) / 2, lambda, 1);
  return out;
}

QPoly hilb_pm(int n) { return histogram_pm(n).as_qpoly(); }

LdsHistogram lds_histogram_pm(int n, int bound) {
  require_even(n, "lds_histogram_pm");
  if (n > bound)
    throw ResourceError("lds_histogram_pm: n = " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
  LdsHistogram h{n, {}};
  for (const Involution& w : enumerate(LocusSpec::perfect_matchings(n))) {
    const int longest = lds(w.to_word());
    h.counts[(n - longest) / 2] += 1;
  }
  return h;
}

SchurSeries grfrob_conjugacy(int n, int a) {
  require_fixed_count(n, a, "grfrob_conjugacy");
  SchurSeries out(n);
  for (int d = 0; 2 * d <= n - a; ++d) out += conjugacy_layer(n, a, d).shifted(d);
  if (!out.is_nonnegative())
    throw InvariantError("grfrob_conjugacy(" + std::to_string(n) + "," + std::to_string(a) +
                         ") produced a negative multiplicity");
  return out;
}

QPoly hilb_conjugacy(int n, int a) { return dimension_series(grfrob_conjugacy(n, a)); }

SchurSeries ungraded_frob_conjugacy(int n, int a) {
  require_fixed_count(n, a, "ungraded_frob_conjugacy");
  return pieri_multiply(plethysm_sd_s2((n - a) / 2), a);
}

Integer lemma51_coefficient(const Partition& lambda, int a, int d) {
  if (a < 0 || d < 0) throw DomainError("lemma51_coefficient: a and d must be nonnegative");
  if (lambda.size() != a + 2 * d) throw DomainError("lemma51_coefficient: |lambda| must equal a + 2d");

  std::vector<int> values;  // distinct part values, decreasing
  for (int p : lambda.parts())
    if (values.empty() || values.back() != p) values.push_back(p);

  // A horizontal strip only shortens the last row of a block of equal parts,
  // so a repeated odd part leaves an odd row in mu and no even mu exists.
  const auto mult = lambda.multiplicities();
  for (int v : values)
    if (v % 2 == 1 && mult[static_cast<std::size_t>(v)] > 1) return 0;

  int odd_values = 0;
  for (int v : values) odd_values += v % 2;
  const int target = a - odd_values;
  if (target < 0 || target % 2 != 0) return 0;
  const int exponent = target / 2;

  // Product of (1 + q + ... + q^{floor(l_i/2) - ceil(l_{i+1}/2)}), truncated at q^exponent.
  std::vector<Integer> poly(static_cast<std::size_t>(exponent) + 1, 0);
  poly[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int next = i + 1 < values.size() ? values[i + 1] : 0;
    const int top = values[i] / 2 - (next + 1) / 2;
    std::vector<Integer> prod(poly.size(), 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (poly[e] == 0) continue;
      for (int j = 0; j <= top && e + static_cast<std::size_t>(j) < poly.size(); ++j)
        prod[e + static_cast<std::size_t>(j)] += poly[e];
    }
    poly = std::move(prod);
  }
  return poly.back();
}

bool check_identity_s1(int n, int a) {
  require_fixed_count(n, a, "check_identity_s1");
  SchurSeries lhs(n);
  for (int d = 0; 2 * d <= n - a; ++d) lhs += conjugacy_layer(n, a, d);
  return lhs == ungraded_frob_conjugacy(n, a);
}

bool check_identity_s2(int n) {
  if (n < 0) throw DomainError("check_identity_s2: n must be nonnegative");
  SchurSeries lhs(n), rhs(n);
  for (int d = 0; 2 * d <= n; ++d) {
    const SchurSeries term = matching_term(n, d);
    const int wide = 2 * (n - 2 * d);
    lhs += truncate_first_row(term, FirstRowPredicate::at_most(wide));
    lhs += truncate_first_row(term, FirstRowPredicate::at_most(wide - 2));
    rhs += term;
  }
  return lhs == rhs;
}

LdsHistogram histogram_matchings(int n) {
  LdsHistogram h{n, {}};
  const QPoly p = hilb_matchings(n);
  for (int d = 0; d <= p.degree(); ++d) h.counts[d] = p.coefficient(d);
  return h;
}

LdsHistogram histogram_pm(int n) {
  require_even(n, "histogram_pm");
  LdsHistogram h{n, {}};
  const Integer n_factorial = factorial(n);
  Integer dim;
  for (const Partition& lambda : even_partitions(n)) {
    const Integer hooks = hook_product(lambda);
    mpz_divexact(dim.get_mpz_t(), n_factorial.get_mpz_t(), hooks.get_mpz_t());
    h.counts[(n - lambda.first_row()) / 2] += dim;
  }
  return h;
}

QPoly dimension_series(const SchurSeries& s) {
  QPoly p;
  for (const auto& [key, coeff] : s.terms()) p.add_to(key.grade, coeff * count_syt(key.lambda));
  return p;
}

}  // namespace invharm
