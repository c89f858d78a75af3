#pragma once

#include <vector>

#include "invharm/numeric.hpp"
#include "invharm/partition.hpp"

namespace invharm {

/// A permutation of 1..n in one-line notation (w(1), ..., w(n)).
class PermutationWord {
 public:
  PermutationWord() = default;
  /// Throws DomainError unless `images` is a bijection of 1..n.
  explicit PermutationWord(std::vector<int> images);

  static PermutationWord identity(int n);
  /// n, n-1, ..., 1.
  static PermutationWord reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  PermutationWord inverse() const;
  bool is_involution() const;

  bool operator==(const PermutationWord&) const = default;

 private:
  std::vector<int> images_;
};

/// (u * v)(i) = u(v(i)).
PermutationWord compose(const PermutationWord& u, const PermutationWord& v);

/// Standard Young tableau: rows strictly increase, columns strictly
/// increase, entries are exactly 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws DomainError if the filling is not standard.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  std::vector<int> column_lengths() const;

  bool operator==(const StandardTableau&) const = default;

 private:
  struct Unchecked {};
  StandardTableau(std::vector<std::vector<int>> rows, Unchecked) : rows_(std::move(rows)) {}
  friend struct SchenstedPair schensted(const PermutationWord& w);

  std::vector<std::vector<int>> rows_;
};

struct SchenstedPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Row-insertion Schensted correspondence w -> (P, Q).
SchenstedPair schensted(const PermutationWord& w);

/// Longest decreasing subsequence length, read off as the first column of P.
int lds(const PermutationWord& w);

/// Product of all hook lengths of lambda.
Integer hook_product(const Partition& lambda);

/// |SYT(lambda)| by the hook length formula.
Integer count_syt(const Partition& lambda);

/// Number of columns of odd length. For an involution w with w -> (P, P)
/// this is the number of fixed points of w.
int fixed_point_count_via_odd_columns(const StandardTableau& p);

}  // namespace invharm
