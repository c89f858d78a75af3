#pragma once

#include <map>

#include "invharm/numeric.hpp"
#include "invharm/partition.hpp"
#include "invharm/qpoly.hpp"
#include "invharm/schur_series.hpp"

namespace invharm {

/// Exact per-degree counts over a locus, keyed by degree d.
struct LdsHistogram {
  int n = 0;
  std::map<int, Integer> counts;

  Integer total() const;
  QPoly as_qpoly() const;
  bool operator==(const LdsHistogram&) const = default;
};

/// Default enumeration bound for brute-force histograms over PM_n.
inline constexpr int kDefaultLdsEnumerationBound = 14;

// Graded Frobenius images and Hilbert series of the involution loci.

/// sum_k q^k s_k[s_2] s_{n-2k}.
SchurSeries grfrob_matchings(int n);
/// sum_d C(n,2d) (2d-1)!! q^d.
QPoly hilb_matchings(int n);

/// sum over even lambda of n of q^{(n - lambda_1)/2} s_lambda. Odd n throws DomainError.
SchurSeries grfrob_pm(int n);
/// Dimension of grfrob_pm via hook lengths.
QPoly hilb_pm(int n);

/// Histogram of (n - lds(w))/2 over the perfect matchings w of n, by
/// enumeration and Schensted insertion. Throws ResourceError above `bound`.
LdsHistogram lds_histogram_pm(int n, int bound = kDefaultLdsEnumerationBound);

/// Graded Frobenius image of the fixed-point-count locus M_{n,a}:
/// sum_d q^d { s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2} }_{lambda_1 <= n-2d+a},
/// with s_{-1} = 0. Throws InvariantError if any resulting coefficient is negative.
SchurSeries grfrob_conjugacy(int n, int a);
QPoly hilb_conjugacy(int n, int a);
/// s_{(n-a)/2}[s_2] s_a at grade 0.
SchurSeries ungraded_frob_conjugacy(int n, int a);

/// Coefficient of s_lambda in s_d[s_2] s_a through the q-coefficient
/// extraction over the distinct part values of lambda; zero when an odd part
/// value is repeated.
Integer lemma51_coefficient(const Partition& lambda, int a, int d);

/// Truncated stratification of s_{(n-a)/2}[s_2] s_a by first-row length.
bool check_identity_s1(int n, int a);
/// Two truncations of the M_n Frobenius image recombine to the whole.
bool check_identity_s2(int n);

/// Coefficient table of hilb_matchings (closed form; n = 200 is cheap).
LdsHistogram histogram_matchings(int n);
/// Coefficient table of hilb_pm (hook lengths over even partitions).
LdsHistogram histogram_pm(int n);

/// Sum of coeff * |SYT(lambda)| * q^grade over the terms of s.
QPoly dimension_series(const SchurSeries& s);

}  // namespace invharm
