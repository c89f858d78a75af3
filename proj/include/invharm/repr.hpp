#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "invharm/numeric.hpp"
#include "invharm/partition.hpp"
#include "invharm/schur_series.hpp"

namespace invharm {

inline constexpr int kDefaultCharacterTableBound = 15;

/// Character table of the symmetric group S_n. Rows are irreducibles
/// chi^lambda, columns are conjugacy classes by cycle type; both are indexed
/// by enumerate_partitions(n) in reverse lexicographic order.
class CharacterTable {
 public:
  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

  CharacterTable(int n, std::vector<Partition> partitions, Matrix values, std::vector<Integer> class_sizes);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index_of(const Partition& lambda) const;
  std::size_t size() const { return partitions_.size(); }

  const Matrix& values() const { return values_; }
  /// chi^lambda(mu).
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const;

  const std::vector<Integer>& class_sizes() const { return class_sizes_; }
  const Integer& group_order() const { return group_order_; }

 private:
  int n_;
  std::vector<Partition> partitions_;
  Matrix values_;
  std::vector<Integer> class_sizes_;
  Integer group_order_;
};

/// Murnaghan-Nakayama table, built once per n and shared. Throws
/// ResourceError above `bound`.
std::shared_ptr<const CharacterTable> character_table(int n, int bound = kDefaultCharacterTableBound);

/// n! / prod_i (i^{m_i} m_i!).
Integer class_size(const Partition& mu);

/// A rational-valued class function on S_n, one value per cycle type in
/// enumerate_partitions(n) order.
class ClassFunction {
 public:
  explicit ClassFunction(int n);
  ClassFunction(int n, std::vector<Rational> values);

  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(const Partition& mu) const;
  Rational& value(const Partition& mu);

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product (character of the inner tensor product).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  bool operator==(const ClassFunction&) const = default;

 private:
  std::size_t index_of(const Partition& mu) const;
  int n_;
  std::vector<Partition> classes_;
  std::vector<Rational> values_;
};

/// sum c_lambda chi^lambda for a series concentrated in one grade.
ClassFunction schur_to_class_function(const SchurSeries& s, int bound = kDefaultCharacterTableBound);

/// Frobenius image (grade 0) of a virtual character. Throws DomainError if
/// some multiplicity <f, chi^lambda> is not an integer.
SchurSeries decompose_class_function(const ClassFunction& f, int bound = kDefaultCharacterTableBound);

/// Irreducible multiplicities of the inner tensor product of two modules.
SchurSeries kronecker_multiplicities(const SchurSeries& a, const SchurSeries& b,
                                     int bound = kDefaultCharacterTableBound);

/// Multiplicity of the trivial S_j-module in the restriction of f to the
/// subgroup S_j permuting 1..j. The symmetrizer over S_j annihilates a
/// module exactly when this is zero.
Rational restricted_trivial_multiplicity(const ClassFunction& f, int j);

struct LogConcavityWitness {
  int grade;
  Partition lambda;
  Integer outer;   // multiplicity in V_{d-1} (x) V_{d+1}
  Integer middle;  // multiplicity in V_d (x) V_d
};

struct LogConcavityResult {
  bool holds = true;
  std::optional<LogConcavityWitness> witness;
};

/// For every interior grade d, checks that V_{d-1} (x) V_{d+1} embeds in
/// V_d (x) V_d, i.e. irreducible multiplicities are dominated.
LogConcavityResult equivariant_log_concave(const SchurSeries& series, int bound = kDefaultCharacterTableBound);

}  // namespace invharm
