#pragma once

// Independent reference computations for the test suite. Nothing here calls
// into the library's combinatorial algorithms; only value types are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "invharm/numeric.hpp"
#include "invharm/partition.hpp"

namespace oracle {

using invharm::Integer;

/// Symmetric polynomial in k variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

inline void add_term(Poly& p, const std::vector<int>& e, const Integer& c) {
  auto& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

/// Schur polynomial s_lambda(x_1..x_k) as the generating function of
/// semistandard tableaux: rows weakly increase, columns strictly increase.
inline Poly schur_poly(std::vector<int> lambda, int k) {
  Poly out;
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (static_cast<int>(lambda.size()) > k) return out;
  std::vector<std::vector<int>> t;
  for (int len : lambda) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> content(static_cast<std::size_t>(k), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      add_term(out, content, 1);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= k; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);
  return out;
}

/// h_d[h_2](x_1..x_k): complete homogeneous polynomial of degree d in the
/// monomials x_i x_j, i <= j.
inline Poly plethysm_h_h2(int d, int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      add_term(out, e, 1);
      return;
    }
    for (std::size_t p = start; p < pairs.size(); ++p) {
      ++e[static_cast<std::size_t>(pairs[p].first)];
      ++e[static_cast<std::size_t>(pairs[p].second)];
      rec(p, remaining - 1);
      --e[static_cast<std::size_t>(pairs[p].first)];
      --e[static_cast<std::size_t>(pairs[p].second)];
    }
  };
  rec(0, d);
  return out;
}

/// Schur expansion by repeatedly peeling the lexicographically largest
/// monomial, which is the leading term of some s_lambda. Requires k at least
/// the length of every partition that occurs.
inline std::map<std::vector<int>, Integer> schur_expand(Poly p, int k) {
  std::map<std::vector<int>, Integer> out;
  while (!p.empty()) {
    const auto [lead, c] = *p.rbegin();
    std::vector<int> lambda;
    for (int x : lead)
      if (x > 0) lambda.push_back(x);
    if (!std::is_sorted(lambda.rbegin(), lambda.rend())) throw std::logic_error("schur_expand: not symmetric");
    out[lambda] = c;
    const Integer coeff = c;
    for (const auto& [e, v] : schur_poly(lambda, k)) add_term(p, e, -coeff * v);
  }
  return out;
}

/// Longest decreasing subsequence by dynamic programming.
inline int lds_dp(const std::vector<int>& w) {
  std::vector<int> best(w.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

/// Number of standard fillings of lambda by placing n, n-1, ... in corners.
inline Integer count_syt_backtrack(std::vector<int> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  static std::map<std::vector<int>, Integer> memo;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const bool corner = r + 1 == lambda.size() || lambda[r + 1] < lambda[r];
    if (!corner) continue;
    auto smaller = lambda;
    --smaller[r];
    total += count_syt_backtrack(smaller);
  }
  memo.emplace(lambda, total);
  return total;
}

/// Partition count p(n) via the largest-part recursion.
inline long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += partition_count(n - k, k);
  return total;
}

/// All involutions of 1..n as image vectors, by filtering all permutations.
inline std::vector<std::vector<int>> involutions_brute(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) inv = w[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] == i + 1;
    if (inv) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int fixed_points(const std::vector<int>& w) {
  int f = 0;
  for (std::size_t i = 0; i < w.size(); ++i) f += w[i] == static_cast<int>(i) + 1;
  return f;
}

}  // namespace oracle
