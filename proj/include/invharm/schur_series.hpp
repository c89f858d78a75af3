#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invharm/numeric.hpp"
#include "invharm/partition.hpp"

namespace invharm {

/// A q-graded integer combination of Schur functions s_lambda, all of the
/// same symmetric-function degree. Only nonzero terms are stored.
class SchurSeries {
 public:
  struct Key {
    int grade;
    Partition lambda;
    bool operator==(const Key&) const = default;
  };
  /// Grade ascending, then partitions in reverse lexicographic order.
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      if (a.grade != b.grade) return a.grade < b.grade;
      return ReverseLex{}(a.lambda, b.lambda);
    }
  };
  using Terms = std::map<Key, Integer, KeyOrder>;

  explicit SchurSeries(int degree_n = 0);

  /// q^grade * s_lambda.
  static SchurSeries single(const Partition& lambda, int grade = 0);

  int degree_n() const { return degree_n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * q^grade * s_lambda; throws DomainError if |lambda| != degree_n.
  void add(int grade, const Partition& lambda, const Integer& coeff);

  /// Stored coefficient or 0; throws DomainError if |lambda| != degree_n.
  Integer coefficient(int grade, const Partition& lambda) const;

  /// Sorted distinct grades carrying a nonzero term.
  std::vector<int> grades() const;
  /// -1 when zero.
  int max_grade() const;

  /// Terms of one grade, kept at that grade.
  SchurSeries grade_part(int grade) const;
  /// All grade keys summed into grade 0 (evaluation at q = 1).
  SchurSeries at_q_equals_one() const;
  /// Multiplies by q^k.
  SchurSeries shifted(int k) const;

  bool is_nonnegative() const;

  SchurSeries& operator+=(const SchurSeries& other);
  SchurSeries& operator-=(const SchurSeries& other);
  friend SchurSeries operator+(SchurSeries a, const SchurSeries& b) { return a += b; }
  friend SchurSeries operator-(SchurSeries a, const SchurSeries& b) { return a -= b; }
  bool operator==(const SchurSeries& other) const {
    return degree_n_ == other.degree_n_ && terms_ == other.terms_;
  }

  /// "q^0: s_6 | q^1: s_6 + s_51 + s_42" style rendering, one grade per line.
  std::string to_string() const;

 private:
  void check_size(const Partition& lambda) const;
  int degree_n_;
  Terms terms_;
};

/// Predicate on the first row length used by truncation.
/// Covers lambda_1 <= a, lambda_1 == a and lo <= lambda_1 <= hi.
struct FirstRowPredicate {
  int lo;
  int hi;
  static FirstRowPredicate at_most(int a) { return {0, a}; }
  static FirstRowPredicate exactly(int a) { return {a, a}; }
  static FirstRowPredicate between(int lo, int hi) { return {lo, hi}; }
  bool operator()(const Partition& lambda) const {
    return lambda.first_row() >= lo && lambda.first_row() <= hi;
  }
};

/// Every term s_lambda becomes the Pieri sum over horizontal strips of b boxes.
SchurSeries pieri_multiply(const SchurSeries& s, int b);

/// s_d[s_2]: the multiplicity-free sum of s_lambda over even lambda of 2d.
SchurSeries plethysm_sd_s2(int d);

/// s_d[s_2] with the convention s_{-1}[s_2] = 0 at degree 2d for d < 0.
SchurSeries plethysm_sd_s2_or_zero(int d, int degree_n);

SchurSeries truncate_first_row(const SchurSeries& s, FirstRowPredicate keep);

Integer schur_coefficient(const SchurSeries& s, int grade, const Partition& lambda);

}  // namespace invharm
