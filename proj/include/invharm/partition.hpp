#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace invharm {

/// An integer partition stored with weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0. Partitions index Schur
/// functions, irreducible characters of the symmetric group and its
/// conjugacy classes (as cycle types).
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based), with 0 beyond the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }

  bool is_even() const;

  /// Multiplicity vector m with m[i] = number of parts equal to i (index 0 unused).
  std::vector<int> multiplicities() const;

  /// Compact rendering: "42" when every part is a single digit, "10,2" otherwise.
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  /// Plain lexicographic order on the part sequence.
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Reverse lexicographic order, (4) before (3,1) before (2,2) ... before (1^n).
/// This is the canonical output order everywhere in the library.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of n whose parts are all even; empty when n is odd.
std::vector<Partition> even_partitions(int n);

Partition conjugate(const Partition& lambda);

/// True when lambda is contained in nu and nu/lambda has no two boxes in one column.
bool is_horizontal_strip(const Partition& nu, const Partition& lambda);

}  // namespace invharm
