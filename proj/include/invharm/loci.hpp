#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invharm/numeric.hpp"
#include "invharm/rsk.hpp"

namespace invharm {

/// An involution of 1..n, stored as its sorted 2-cycles (i, j) with i < j.
/// As a permutation matrix it is a symmetric 0/1 matrix with one 1 per row
/// and column.
class Involution {
 public:
  Involution() = default;
  /// Throws DomainError if the pairs overlap, leave 1..n, or have i >= j.
  Involution(int n, std::vector<std::pair<int, int>> pairs);

  static Involution identity(int n) { return Involution(n, {}); }
  /// Throws DomainError if `w` is not an involution.
  static Involution from_word(const PermutationWord& w);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::vector<int> fixed_points() const;
  int fixed_point_count() const { return n_ - 2 * static_cast<int>(pairs_.size()); }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  /// w(i) for 1-based i.
  int image(int i) const;
  PermutationWord to_word() const;

  std::string to_string() const;

  bool operator==(const Involution&) const = default;
  auto operator<=>(const Involution&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

/// Squarefree product of upper-triangular variables x_{i,j}, i < j, one per
/// 2-cycle. The empty set is the constant monomial 1.
struct MatchingMonomial {
  std::vector<std::pair<int, int>> variables;
  int degree() const { return static_cast<int>(variables.size()); }
  bool operator==(const MatchingMonomial&) const = default;
  auto operator<=>(const MatchingMonomial&) const = default;
};

enum class LocusKind { AllInvolutions, PerfectMatchings, FixedCount };

/// One of the three involution loci: M_n, PM_n (n even), or M_{n,a}
/// (exactly a fixed points, a = n mod 2).
class LocusSpec {
 public:
  static LocusSpec all_involutions(int n);
  static LocusSpec perfect_matchings(int n);
  static LocusSpec fixed_count(int n, int a);

  LocusKind kind() const { return kind_; }
  int n() const { return n_; }
  /// Fixed-point count for FixedCount, 0 for PerfectMatchings, nullopt for AllInvolutions.
  std::optional<int> fixed_points() const;
  std::string to_string() const;

  bool contains(const Involution& w) const;

 private:
  LocusSpec(LocusKind kind, int n, int a) : kind_(kind), n_(n), a_(a) {}
  LocusKind kind_;
  int n_;
  int a_;
};

/// Each involution of the locus once. Order: recursively decide the smallest
/// undecided point, first as a fixed point, then paired with partners in
/// ascending order.
std::vector<Involution> enumerate(const LocusSpec& spec);

MatchingMonomial matching_monomial(const Involution& w);

/// v w v^{-1}: the pair set {(v(i), v(j)) sorted}.
Involution conjugate_involution(const PermutationWord& v, const Involution& w);

/// Closed-form locus size, no enumeration.
Integer locus_size(const LocusSpec& spec);

}  // namespace invharm
