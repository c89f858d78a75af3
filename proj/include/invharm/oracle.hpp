#pragma once

// Brute-force ground truth for the orbit harmonics rings of the involution
// loci: exact ranks of monomial evaluation matrices give the graded Hilbert
// function, projection traces give the graded character, and explicit ideal
// generators give truncated quotient Hilbert functions.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invharm/linalg.hpp"
#include "invharm/loci.hpp"
#include "invharm/qpoly.hpp"
#include "invharm/repr.hpp"
#include "invharm/schur_series.hpp"

namespace invharm {

struct OracleOptions {
  ArithmeticMode mode = ArithmeticMode::Exact;
  /// Largest ambient n the oracle will enumerate.
  int max_n = 6;
  /// Cap on rows * columns of a materialized evaluation matrix.
  std::size_t max_matrix_entries = 50'000'000;
  /// Modular ranks are re-checked exactly up to this n.
  int modular_verify_max_n = 5;
  /// Worker threads for independent per-class trace computations.
  int threads = 1;
};

/// Variable x_{i,j} (1-based) has id (i-1) * n + (j-1).
inline int variable_id(int n, int i, int j) { return (i - 1) * n + (j - 1); }

/// A monomial in the n^2 matrix variables as the sorted multiset of its
/// variable ids.
using Monomial = std::vector<std::uint16_t>;

/// All monomials of degree <= max_deg in `num_vars` variables, ordered by
/// degree and then lexicographically on sorted variable ids (row-major).
std::vector<Monomial> monomials_up_to(int num_vars, int max_deg);

/// Rows: locus points in enumeration order. Columns: monomials_up_to(n^2, max_deg).
/// Entry 1 iff every variable x_{i,j} of the monomial has w(i) = j.
struct EvaluationMatrix {
  std::vector<Involution> points;
  std::vector<Monomial> columns;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> values;
};

EvaluationMatrix evaluation_matrix(const LocusSpec& spec, int max_deg, const OracleOptions& options = {});

/// dim R(Z)_d = rank(E_{<=d}) - rank(E_{<=d-1}) for d = 0..max_deg.
QPoly graded_hilbert_oracle(const LocusSpec& spec, int max_deg, const OracleOptions& options = {});

/// Character of R(Z)_d as the difference of projection traces on the
/// degree filtration of C[Z].
ClassFunction graded_character_oracle(const LocusSpec& spec, int d, const OracleOptions& options = {});

/// Grade-by-grade decomposition of graded_character_oracle for d = 0..max_deg.
SchurSeries grfrob_oracle(const LocusSpec& spec, int max_deg, const OracleOptions& options = {});

/// Homogeneous polynomial with integer coefficients over the n^2 variables.
struct Polynomial {
  std::vector<std::pair<Monomial, Integer>> terms;
  int degree() const { return terms.empty() ? -1 : static_cast<int>(terms.front().first.size()); }
  bool is_monomial() const { return terms.size() == 1; }
};

enum class IdealKind { Matchings, PerfectMatchings, FixedCount };

struct IdealGeneratorSet {
  IdealKind kind = IdealKind::Matchings;
  int n = 0;
  int a = 0;
  std::string tag;
  std::vector<Polynomial> generators;
};

/// I^M_n: row and column sums, row and column products (squares included),
/// and x_{i,j} - x_{j,i}. I^PM_n adds the diagonal variables. I^M_{n,a} adds
/// the diagonal sum and every product of a+1 distinct diagonal variables.
IdealGeneratorSet ideal_generators(IdealKind kind, int n, int a = 0);

/// dim (C[x]/(gens))_d for d = 0..max_deg.
QPoly ideal_hilbert_truncated(const IdealGeneratorSet& gens, int max_deg, const OracleOptions& options = {});

struct IdealComparison {
  IdealKind kind;
  int n;
  int a;
  int max_deg;
  QPoly ideal;   // quotient by the explicit generators
  QPoly oracle;  // quotient by gr I(Z)
  bool equal = false;
  std::optional<int> first_difference;
};

/// Per-degree comparison. Since the explicit ideal is contained in gr I(Z),
/// a degree where the ideal quotient is smaller raises InvariantError.
IdealComparison compare_ideal_vs_gr(IdealKind kind, int n, std::optional<int> a, int max_deg,
                                    const OracleOptions& options = {});

/// Scans n = 1..max_n and valid a (ascending) for the first I^M_{n,a} that
/// is strictly smaller than gr I(M_{n,a}); nullopt if none.
std::optional<IdealComparison> find_first_strict_containment(int max_n, const OracleOptions& options = {});

/// For j > n - 2d + a: every irreducible V^lambda of R(M_{n,a})_d has
/// lambda_1 <= n - 2d + a, and the S_j symmetrizer kills R(M_{n,a})_d.
bool eta_annihilation_check(int n, int a, int d, int j, const OracleOptions& options = {});

/// Canonical representative of cycle type mu: cycles on consecutive blocks.
PermutationWord class_representative(const Partition& mu);

LocusSpec locus_for(IdealKind kind, int n, int a);

}  // namespace invharm
