#pragma once

// Exact elimination over Eigen containers. Every routine is templated on the
// scalar: Rational (GMP mpq), Integer (GMP mpz, fraction-free) or the prime
// field Zp<P>.

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "invharm/numeric.hpp"

namespace invharm {

/// Integers modulo a prime P < 2^31.
template <std::uint32_t P>
class Zp {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}
  explicit Zp(const Integer& z) : v_(static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), P))) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Zp operator+(Zp a, Zp b) { return raw((a.v_ + static_cast<std::uint64_t>(b.v_)) % P); }
  friend constexpr Zp operator-(Zp a, Zp b) { return raw((a.v_ + static_cast<std::uint64_t>(P - b.v_)) % P); }
  friend constexpr Zp operator*(Zp a, Zp b) { return raw(static_cast<std::uint64_t>(a.v_) * b.v_ % P); }
  friend constexpr Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw((P - v_) % P); }
  constexpr Zp& operator+=(Zp b) { return *this = *this + b; }
  constexpr Zp& operator-=(Zp b) { return *this = *this - b; }
  constexpr Zp& operator*=(Zp b) { return *this = *this * b; }
  constexpr Zp& operator/=(Zp b) { return *this = *this / b; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  constexpr Zp inverse() const {
    std::uint64_t result = 1, base = v_;
    for (std::uint64_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
    }
    return raw(result);
  }

 private:
  static constexpr Zp raw(std::uint64_t v) {
    Zp z;
    z.v_ = static_cast<std::uint32_t>(v);
    return z;
  }
  std::uint32_t v_ = 0;
};

/// The deterministic prime used by the modular fast path; larger than any
/// locus the oracle will enumerate.
using ModPrime = Zp<2147483647u>;

enum class ArithmeticMode { Exact, Modular };

}  // namespace invharm

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 150, MulCost = 100 };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 100, MulCost = 100 };
};

template <std::uint32_t P>
struct NumTraits<invharm::Zp<P>> : GenericNumTraits<invharm::Zp<P>> {
  using Real = invharm::Zp<P>;
  using NonInteger = invharm::Zp<P>;
  using Nested = invharm::Zp<P>;
  using Literal = invharm::Zp<P>;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 0, RequireInitialization = 0, ReadCost = 1, AddCost = 2, MulCost = 4 };
};

}  // namespace Eigen

namespace invharm {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {
template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}
}  // namespace detail

/// Rank over a field by Gaussian elimination on a copy.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(!std::is_same_v<Scalar, Integer>, "use bareiss_rank for integer matrices");
  DenseMatrix<Scalar> m = input;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && detail::is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (detail::is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c) * inv;
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination; every
/// intermediate entry stays an exact integer.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  DenseMatrix<Integer> m = input.template cast<Integer>();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < m.cols(); ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Reduced row echelon form over a field. Returns the pivot column of each
/// nonzero row; zero rows are dropped from `m`.
template <typename Scalar>
std::vector<Eigen::Index> reduce_to_rref(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && detail::is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || detail::is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  m.conservativeResize(r, m.cols());
  return pivots;
}

/// Row echelon basis grown one vector at a time. For Integer the update is
/// fraction-free: v <- b_p v - v_p b, then divided by its content.
template <typename Scalar>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  bool full() const { return rank() == dim_; }

  /// Returns true when v is independent of the rows inserted so far.
  bool insert(DenseVector<Scalar> v) {
    for (const auto& [pivot, row] : rows_) {
      if (detail::is_zero(v(pivot))) continue;
      if constexpr (std::is_same_v<Scalar, Integer>) {
        const Integer a = row(pivot), b = v(pivot);
        for (Eigen::Index j = 0; j < dim_; ++j) v(j) = a * v(j) - b * row(j);
        normalize_content(v);
      } else {
        const Scalar factor = v(pivot) / row(pivot);
        for (Eigen::Index j = pivot; j < dim_; ++j) v(j) -= factor * row(j);
      }
    }
    Eigen::Index lead = 0;
    while (lead < dim_ && detail::is_zero(v(lead))) ++lead;
    if (lead == dim_) return false;
    rows_.emplace(lead, std::move(v));
    return true;
  }

 private:
  static void normalize_content(DenseVector<Integer>& v) {
    Integer g = 0;
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (v(j) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(j).get_mpz_t());
    if (g > 1)
      for (Eigen::Index j = 0; j < v.size(); ++j)
        if (v(j) != 0) mpz_divexact(v(j).get_mpz_t(), v(j).get_mpz_t(), g.get_mpz_t());
  }

  Eigen::Index dim_;
  std::map<Eigen::Index, DenseVector<Scalar>> rows_;  // keyed by pivot column
};

/// Sparse row elimination over a field; rows are (column, value) lists.
template <typename Scalar>
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<int, Scalar>>;

  /// `row` need not be sorted; duplicate columns are summed. Returns true
  /// when the row raised the rank.
  bool insert(Row row) {
    row = canonical(std::move(row));
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Scalar inv = Scalar(1) / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      row = axpy(row, it->second, row.front().second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static Row canonical(Row row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (auto& [c, v] : row) {
      if (!out.empty() && out.back().first == c) out.back().second += v;
      else out.emplace_back(c, std::move(v));
      if (detail::is_zero(out.back().second)) out.pop_back();
    }
    return out;
  }

  // row - factor * pivot, where pivot has leading coefficient 1.
  static Row axpy(const Row& row, const Row& pivot, const Scalar& factor) {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        Scalar v = Scalar(0) - factor * pivot[j].second;
        out.emplace_back(pivot[j].first, std::move(v));
        ++j;
      } else {
        Scalar v = row[i].second - factor * pivot[j].second;
        if (!detail::is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, Row> pivots_;
};

}  // namespace invharm
