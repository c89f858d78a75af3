#include "invharm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "invharm/errors.hpp"

namespace invharm {

namespace {

void check_oracle_bounds(const LocusSpec& spec, int max_deg, const OracleOptions& options) {
  if (max_deg < 0) throw DomainError("oracle: max_deg must be nonnegative");
  if (spec.n() > options.max_n)
    throw ResourceError("oracle: n = " + std::to_string(spec.n()) + " exceeds the oracle bound " +
                        std::to_string(options.max_n));
}

// A constraint w(i) = j on an involution; i == j means i is fixed. Every
// monomial in the x_{i,j} evaluates on the locus as the indicator of the
// constraints of its support, since x_{i,j} and x_{j,i} agree there and
// exponents do not matter on 0/1 values.
struct Constraint {
  int i;
  int j;
};

// Locus points with their images cached for fast evaluation.
struct PointSet {
  std::vector<Involution> points;
  std::vector<std::vector<int>> images;  // images[p][i] = w_p(i), 1-based i
  std::map<Involution, int> index;

  explicit PointSet(const LocusSpec& spec) : points(enumerate(spec)) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      std::vector<int> img(static_cast<std::size_t>(spec.n()) + 1);
      for (int i = 1; i <= spec.n(); ++i) img[static_cast<std::size_t>(i)] = points[p].image(i);
      images.push_back(std::move(img));
      index.emplace(points[p], static_cast<int>(p));
    }
  }

  std::size_t size() const { return points.size(); }

  std::vector<std::uint8_t> indicator(const std::vector<Constraint>& cs) const {
    std::vector<std::uint8_t> v(points.size(), 0);
    for (std::size_t p = 0; p < points.size(); ++p) {
      bool ok = true;
      for (const auto& c : cs)
        if (images[p][static_cast<std::size_t>(c.i)] != c.j) {
          ok = false;
          break;
        }
      v[p] = ok ? 1 : 0;
    }
    return v;
  }

  // perm[p] = index of g w_p g^{-1}.
  std::vector<int> conjugation_permutation(const PermutationWord& g) const {
    std::vector<int> perm(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) perm[p] = index.at(conjugate_involution(g, points[p]));
    return perm;
  }
};

// Consistent constraint sets of exactly k blocks on 1..n: disjoint fixed
// singletons and pairs, listed by smallest point.
void constraint_sets(int n, int k, const std::function<void(const std::vector<Constraint>&)>& emit) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 2, false);
  std::vector<Constraint> current;
  std::function<void(int, int)> rec = [&](int p, int remaining) {
    if (remaining == 0) {
      emit(current);
      return;
    }
    while (p <= n && used[static_cast<std::size_t>(p)]) ++p;
    if (p > n) return;
    rec(p + 1, remaining);
    used[static_cast<std::size_t>(p)] = true;
    current.push_back({p, p});
    rec(p + 1, remaining - 1);
    current.pop_back();
    for (int q = p + 1; q <= n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      used[static_cast<std::size_t>(q)] = true;
      current.push_back({p, q});
      rec(p + 1, remaining - 1);
      current.pop_back();
      used[static_cast<std::size_t>(q)] = false;
    }
    used[static_cast<std::size_t>(p)] = false;
  };
  rec(1, k);
}

template <typename Scalar>
DenseVector<Scalar> to_vector(const std::vector<std::uint8_t>& v) {
  DenseVector<Scalar> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = Scalar(static_cast<long>(v[i]));
  return out;
}

// The degree filtration W_{<=0} in W_{<=1} in ... of C[Z] spanned by
// evaluations of polynomials of bounded degree. basis[d] lists the vectors
// that first became independent in degree d.
struct Filtration {
  PointSet points;
  std::vector<std::vector<std::vector<std::uint8_t>>> basis;
  std::vector<Eigen::Index> cumulative_rank;

  Filtration(const LocusSpec& spec, int max_deg, const OracleOptions& options) : points(spec) {
    const auto dim = static_cast<Eigen::Index>(points.size());
    const bool modular = options.mode == ArithmeticMode::Modular;
    const bool verify = modular && spec.n() <= options.modular_verify_max_n;
    IncrementalEchelon<Integer> exact(dim);
    IncrementalEchelon<ModPrime> mod(dim);
    std::set<std::vector<std::uint8_t>> seen;

    for (int d = 0; d <= max_deg; ++d) {
      basis.emplace_back();
      const bool saturated = modular ? mod.full() : exact.full();
      if (!saturated) {
        constraint_sets(spec.n(), d, [&](const std::vector<Constraint>& cs) {
          if (modular ? mod.full() : exact.full()) return;
          auto v = points.indicator(cs);
          if (std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; })) return;
          if (!seen.insert(v).second) return;
          bool independent;
          if (modular) {
            independent = mod.insert(to_vector<ModPrime>(v));
            if (verify && exact.insert(to_vector<Integer>(v)) != independent)
              throw InvariantError("oracle: modular rank disagrees with exact rank");
          } else {
            independent = exact.insert(to_vector<Integer>(v));
          }
          if (independent) basis.back().push_back(std::move(v));
        });
      }
      cumulative_rank.push_back(modular ? mod.rank() : exact.rank());
    }
  }

  // Trace of g on W_{<=d} via the reduced row echelon form of its basis:
  // with rows b_k and pivots p_k, tr = sum_k b_k[perm(p_k)].
  template <typename Scalar>
  std::vector<Scalar> traces(int d, const std::vector<std::vector<int>>& perms) const {
    std::vector<Scalar> out(perms.size(), Scalar(0));
    const auto rows = static_cast<Eigen::Index>(cumulative_rank[static_cast<std::size_t>(d)]);
    if (rows == 0) return out;
    DenseMatrix<Scalar> m(rows, static_cast<Eigen::Index>(points.size()));
    Eigen::Index r = 0;
    for (int e = 0; e <= d; ++e)
      for (const auto& v : basis[static_cast<std::size_t>(e)]) m.row(r++) = to_vector<Scalar>(v).transpose();
    const auto pivots = reduce_to_rref(m);
    if (static_cast<Eigen::Index>(pivots.size()) != rows) throw InvariantError("oracle: filtration basis is dependent");
    for (std::size_t g = 0; g < perms.size(); ++g)
      for (Eigen::Index k = 0; k < rows; ++k)
        out[g] += m(k, perms[g][static_cast<std::size_t>(pivots[static_cast<std::size_t>(k)])]);
    return out;
  }
};

Integer lift_symmetric(ModPrime x) {
  const auto v = static_cast<long>(x.value());
  return v > static_cast<long>(ModPrime::modulus / 2) ? Integer(v - static_cast<long>(ModPrime::modulus)) : Integer(v);
}

// char(R(Z)_d) for each requested degree.
std::vector<ClassFunction> graded_characters(const Filtration& f, int n, int top, const OracleOptions& options) {
  const auto classes = enumerate_partitions(n);
  std::vector<std::vector<int>> perms(classes.size());
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) perms[c] = f.points.conjugation_permutation(class_representative(classes[c]));
  };
  if (options.threads > 1 && classes.size() > 1) {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (classes.size() + static_cast<std::size_t>(options.threads) - 1) / static_cast<std::size_t>(options.threads);
    for (std::size_t lo = 0; lo < classes.size(); lo += chunk)
      jobs.push_back(std::async(std::launch::async, fill, lo, std::min(classes.size(), lo + chunk)));
    for (auto& j : jobs) j.get();
  } else {
    fill(0, classes.size());
  }

  std::vector<Rational> previous(classes.size(), Rational(0));
  std::vector<ClassFunction> out;
  for (int d = 0; d <= top; ++d) {
    std::vector<Rational> current(classes.size());
    if (options.mode == ArithmeticMode::Modular) {
      const auto t = f.traces<ModPrime>(d, perms);
      for (std::size_t c = 0; c < t.size(); ++c) current[c] = Rational(lift_symmetric(t[c]));
    } else {
      current = f.traces<Rational>(d, perms);
    }
    std::vector<Rational> diff(classes.size());
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = current[c] - previous[c];
    out.emplace_back(n, std::move(diff));
    previous = std::move(current);
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_up_to(int num_vars, int max_deg) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    for (int v = start; v < num_vars; ++v) {
      m.push_back(static_cast<std::uint16_t>(v));
      rec(v, remaining - 1);
      m.pop_back();
    }
  };
  for (int d = 0; d <= max_deg; ++d) rec(0, d);
  return out;
}

EvaluationMatrix evaluation_matrix(const LocusSpec& spec, int max_deg, const OracleOptions& options) {
  check_oracle_bounds(spec, max_deg, options);
  const int n = spec.n();
  const Integer cols = binomial(n * n + max_deg, max_deg);
  const Integer entries = cols * locus_size(spec);
  if (entries > Integer(static_cast<unsigned long>(options.max_matrix_entries)))
    throw ResourceError("evaluation_matrix: " + entries.get_str() + " entries exceed the configured cap");

  EvaluationMatrix e;
  PointSet points(spec);
  e.points = points.points;
  e.columns = monomials_up_to(n * n, max_deg);
  e.values.resize(static_cast<Eigen::Index>(e.points.size()), static_cast<Eigen::Index>(e.columns.size()));
  for (std::size_t p = 0; p < e.points.size(); ++p) {
    for (std::size_t c = 0; c < e.columns.size(); ++c) {
      bool one = true;
      for (std::uint16_t var : e.columns[c]) {
        const int i = var / n + 1, j = var % n + 1;
        if (points.images[p][static_cast<std::size_t>(i)] != j) {
          one = false;
          break;
        }
      }
      e.values(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(c)) = one ? 1 : 0;
    }
  }
  return e;
}

QPoly graded_hilbert_oracle(const LocusSpec& spec, int max_deg, const OracleOptions& options) {
  check_oracle_bounds(spec, max_deg, options);
  const Filtration f(spec, max_deg, options);
  QPoly out;
  Eigen::Index prev = 0;
  for (int d = 0; d <= max_deg; ++d) {
    const Eigen::Index r = f.cumulative_rank[static_cast<std::size_t>(d)];
    out.add_to(d, Integer(static_cast<long>(r - prev)));
    prev = r;
  }
  return out;
}

ClassFunction graded_character_oracle(const LocusSpec& spec, int d, const OracleOptions& options) {
  check_oracle_bounds(spec, d, options);
  const Filtration f(spec, d, options);
  return graded_characters(f, spec.n(), d, options).back();
}

SchurSeries grfrob_oracle(const LocusSpec& spec, int max_deg, const OracleOptions& options) {
  check_oracle_bounds(spec, max_deg, options);
  const Filtration f(spec, max_deg, options);
  const auto chars = graded_characters(f, spec.n(), max_deg, options);
  SchurSeries out(spec.n());
  for (int d = 0; d <= max_deg; ++d) {
    SchurSeries part(spec.n());
    try {
      part = decompose_class_function(chars[static_cast<std::size_t>(d)]);
    } catch (const DomainError& e) {
      throw InvariantError(std::string("grfrob_oracle: ") + e.what());
    }
    if (!part.is_nonnegative()) throw InvariantError("grfrob_oracle: negative multiplicity in degree " + std::to_string(d));
    out += part.shifted(d);
  }
  return out;
}

PermutationWord class_representative(const Partition& mu) {
  std::vector<int> w(static_cast<std::size_t>(mu.size()));
  int start = 1;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) {
      const int from = start + k;
      const int to = k + 1 < len ? from + 1 : start;
      w[static_cast<std::size_t>(from - 1)] = to;
    }
    start += len;
  }
  return PermutationWord(std::move(w));
}

LocusSpec locus_for(IdealKind kind, int n, int a) {
  switch (kind) {
    case IdealKind::Matchings: return LocusSpec::all_involutions(n);
    case IdealKind::PerfectMatchings: return LocusSpec::perfect_matchings(n);
    case IdealKind::FixedCount: return LocusSpec::fixed_count(n, a);
  }
  throw DomainError("unknown ideal kind");
}

namespace {

Monomial make_monomial(std::initializer_list<int> vars) {
  Monomial m;
  for (int v : vars) m.push_back(static_cast<std::uint16_t>(v));
  std::sort(m.begin(), m.end());
  return m;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

IdealGeneratorSet ideal_generators(IdealKind kind, int n, int a) {
  if (n < 0) throw DomainError("ideal_generators: n must be nonnegative");
  if (kind == IdealKind::PerfectMatchings && (n <= 0 || n % 2 != 0))
    throw DomainError("ideal_generators: the perfect matching ideal needs an even n > 0");
  if (kind == IdealKind::FixedCount && (a < 0 || a > n || (n - a) % 2 != 0))
    throw DomainError("ideal_generators: need 0 <= a <= n with a = n mod 2");

  IdealGeneratorSet g;
  g.kind = kind;
  g.n = n;
  g.a = kind == IdealKind::FixedCount ? a : 0;
  auto x = [n](int i, int j) { return variable_id(n, i, j); };
  auto& gens = g.generators;

  for (int i = 1; i <= n; ++i) {
    Polynomial row, col;
    for (int j = 1; j <= n; ++j) {
      row.terms.emplace_back(make_monomial({x(i, j)}), 1);
      col.terms.emplace_back(make_monomial({x(j, i)}), 1);
    }
    gens.push_back(std::move(row));
    gens.push_back(std::move(col));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        gens.push_back(Polynomial{{{make_monomial({x(i, j), x(i, k)}), 1}}});
        if (k != j) gens.push_back(Polynomial{{{make_monomial({x(j, i), x(k, i)}), 1}}});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      gens.push_back(Polynomial{{{make_monomial({x(i, j)}), 1}, {make_monomial({x(j, i)}), -1}}});

  switch (kind) {
    case IdealKind::Matchings:
      g.tag = "I^M_" + std::to_string(n);
      break;
    case IdealKind::PerfectMatchings:
      g.tag = "I^PM_" + std::to_string(n);
      for (int i = 1; i <= n; ++i) gens.push_back(Polynomial{{{make_monomial({x(i, i)}), 1}}});
      break;
    case IdealKind::FixedCount: {
      g.tag = "I^M_{" + std::to_string(n) + "," + std::to_string(a) + "}";
      Polynomial trace;
      for (int i = 1; i <= n; ++i) trace.terms.emplace_back(make_monomial({x(i, i)}), 1);
      if (!trace.terms.empty()) gens.push_back(std::move(trace));
      // Products over |S| = a + 1 generate every product with |S| > a.
      std::vector<int> subset;
      std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(subset.size()) == a + 1) {
          Monomial m;
          for (int i : subset) m.push_back(static_cast<std::uint16_t>(x(i, i)));
          std::sort(m.begin(), m.end());
          gens.push_back(Polynomial{{{std::move(m), 1}}});
          return;
        }
        for (int i = start; i <= n; ++i) {
          subset.push_back(i);
          choose(i + 1);
          subset.pop_back();
        }
      };
      if (a + 1 <= n) choose(1);
      break;
    }
  }
  return g;
}

namespace {

template <typename Scalar>
std::size_t sparse_rank(const std::vector<std::vector<std::pair<int, Integer>>>& rows) {
  SparseEliminator<Scalar> elim;
  for (const auto& row : rows) {
    typename SparseEliminator<Scalar>::Row r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) r.emplace_back(c, Scalar(v));
    elim.insert(std::move(r));
  }
  return elim.rank();
}

}  // namespace

QPoly ideal_hilbert_truncated(const IdealGeneratorSet& gens, int max_deg, const OracleOptions& options) {
  if (max_deg < 0) throw DomainError("ideal_hilbert_truncated: max_deg must be nonnegative");
  if (gens.n > options.max_n)
    throw ResourceError("ideal_hilbert_truncated: n = " + std::to_string(gens.n) + " exceeds the oracle bound");
  const int num_vars = gens.n * gens.n;

  std::set<Monomial> monomial_gens;
  std::vector<const Polynomial*> poly_gens;
  for (const auto& g : gens.generators) {
    if (g.terms.empty()) continue;
    const int deg = g.degree();
    for (const auto& [m, c] : g.terms)
      if (static_cast<int>(m.size()) != deg) throw DomainError("ideal_hilbert_truncated: generator is not homogeneous");
    if (deg == 0) return QPoly();  // a nonzero constant generates everything
    if (g.is_monomial()) monomial_gens.insert(g.terms.front().first);
    else poly_gens.push_back(&g);
  }

  // surviving[d]: monomials of degree d not divisible by a monomial generator.
  // m survives iff m is not a generator and every m / x_v survives.
  std::vector<std::vector<Monomial>> surviving(static_cast<std::size_t>(max_deg) + 1);
  std::vector<std::map<Monomial, int>> column(static_cast<std::size_t>(max_deg) + 1);
  const auto all = monomials_up_to(num_vars, max_deg);
  for (const Monomial& m : all) {
    const auto d = m.size();
    if (monomial_gens.count(m)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < m.size() && ok; ++k) {
      if (k > 0 && m[k] == m[k - 1]) continue;
      Monomial smaller = m;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      ok = column[d - 1].count(smaller) > 0;
    }
    if (!ok) continue;
    column[d].emplace(m, static_cast<int>(surviving[d].size()));
    surviving[d].push_back(m);
  }

  const bool modular = options.mode == ArithmeticMode::Modular;
  const bool verify = modular && gens.n <= options.modular_verify_max_n;
  QPoly out;
  for (int d = 0; d <= max_deg; ++d) {
    const auto du = static_cast<std::size_t>(d);
    std::vector<std::vector<std::pair<int, Integer>>> rows;
    for (const Polynomial* g : poly_gens) {
      const int e = g->degree();
      if (e > d) continue;
      for (const Monomial& m : surviving[static_cast<std::size_t>(d - e)]) {
        std::vector<std::pair<int, Integer>> row;
        for (const auto& [t, c] : g->terms) {
          auto it = column[du].find(multiply(m, t));
          if (it != column[du].end()) row.emplace_back(it->second, c);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    std::size_t r;
    if (modular) {
      r = sparse_rank<ModPrime>(rows);
      if (verify && sparse_rank<Rational>(rows) != r) throw InvariantError("ideal_hilbert_truncated: modular rank disagrees with exact rank");
    } else {
      r = sparse_rank<Rational>(rows);
    }
    out.add_to(d, Integer(static_cast<unsigned long>(surviving[du].size() - r)));
  }
  return out;
}

IdealComparison compare_ideal_vs_gr(IdealKind kind, int n, std::optional<int> a, int max_deg, const OracleOptions& options) {
  if (kind == IdealKind::FixedCount && !a) throw DomainError("compare_ideal_vs_gr: the fixed-point locus needs a");
  const int fixed = kind == IdealKind::FixedCount ? *a : 0;
  IdealComparison c{kind, n, fixed, max_deg, {}, {}, false, std::nullopt};
  c.ideal = ideal_hilbert_truncated(ideal_generators(kind, n, fixed), max_deg, options);
  c.oracle = graded_hilbert_oracle(locus_for(kind, n, fixed), max_deg, options);
  for (int d = 0; d <= max_deg; ++d) {
    const Integer lhs = c.ideal.coefficient(d), rhs = c.oracle.coefficient(d);
    if (lhs < rhs)
      throw InvariantError("compare_ideal_vs_gr: explicit ideal quotient is smaller than the orbit harmonics quotient in degree " +
                           std::to_string(d));
    if (lhs != rhs && !c.first_difference) c.first_difference = d;
  }
  c.equal = !c.first_difference;
  return c;
}

std::optional<IdealComparison> find_first_strict_containment(int max_n, const OracleOptions& options) {
  for (int n = 1; n <= max_n; ++n)
    for (int a = n % 2; a <= n; a += 2) {
      auto c = compare_ideal_vs_gr(IdealKind::FixedCount, n, a, n / 2 + 1, options);
      if (!c.equal) return c;
    }
  return std::nullopt;
}

bool eta_annihilation_check(int n, int a, int d, int j, const OracleOptions& options) {
  const LocusSpec spec = LocusSpec::fixed_count(n, a);
  const int bound = n - 2 * d + a;
  if (d < 0) throw DomainError("eta_annihilation_check: d must be nonnegative");
  if (j <= bound) throw DomainError("eta_annihilation_check: need j > n - 2d + a");
  const ClassFunction chi = graded_character_oracle(spec, d, options);
  const SchurSeries module = decompose_class_function(chi);
  bool support_ok = true;
  for (const auto& [key, coeff] : module.terms())
    if (key.lambda.first_row() > bound) support_ok = false;
  if (j > n) return support_ok;  // no S_j inside S_n
  return support_ok && restricted_trivial_multiplicity(chi, j) == 0;
}

}  // namespace invharm
