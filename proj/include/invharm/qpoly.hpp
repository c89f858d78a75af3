#pragma once

#include <string>
#include <vector>

#include "invharm/numeric.hpp"

namespace invharm {

/// Polynomial in the grading variable q with exact integer coefficients.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no stored coefficients and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coefficients);

  /// Coefficient of q^d, 0 for d beyond the degree or d < 0.
  Integer coefficient(int d) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  void add_to(int d, const Integer& value);
  Integer at_one() const;

  QPoly& operator+=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  bool operator==(const QPoly& other) const { return coeffs_ == other.coeffs_; }

  /// "1 + 6q + 3q^2" style rendering.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// a_i^2 >= a_{i-1} a_{i+1} for every interior index of the coefficient
/// sequence from q^0 through the degree.
bool is_log_concave(const QPoly& p);

}  // namespace invharm
