#include "invharm/loci.hpp"

#include <algorithm>
#include <functional>

#include "invharm/errors.hpp"

namespace invharm {

Involution::Involution(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n < 0) throw DomainError("Involution: negative size");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (auto [i, j] : pairs_) {
    if (i < 1 || j > n || i >= j) throw DomainError("Involution: pairs must satisfy 1 <= i < j <= n");
    if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
      throw DomainError("Involution: pairs must have disjoint supports");
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

Involution Involution::from_word(const PermutationWord& w) {
  if (!w.is_involution()) throw DomainError("Involution::from_word: permutation is not an involution");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= w.size(); ++i)
    if (i < w(i)) pairs.emplace_back(i, w(i));
  return Involution(w.size(), std::move(pairs));
}

std::vector<int> Involution::fixed_points() const {
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (auto [i, j] : pairs_) used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (!used[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

int Involution::image(int i) const {
  for (auto [a, b] : pairs_) {
    if (a == i) return b;
    if (b == i) return a;
  }
  return i;
}

PermutationWord Involution::to_word() const {
  std::vector<int> w(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) w[static_cast<std::size_t>(i - 1)] = i;
  for (auto [i, j] : pairs_) {
    w[static_cast<std::size_t>(i - 1)] = j;
    w[static_cast<std::size_t>(j - 1)] = i;
  }
  return PermutationWord(std::move(w));
}

std::string Involution::to_string() const {
  if (pairs_.empty()) return "id";
  std::string out;
  for (auto [i, j] : pairs_) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

LocusSpec LocusSpec::all_involutions(int n) {
  if (n < 0) throw DomainError("locus size n must be nonnegative");
  return LocusSpec(LocusKind::AllInvolutions, n, -1);
}

LocusSpec LocusSpec::perfect_matchings(int n) {
  if (n < 0 || n % 2 != 0) throw DomainError("perfect matchings need an even n >= 0");
  return LocusSpec(LocusKind::PerfectMatchings, n, 0);
}

LocusSpec LocusSpec::fixed_count(int n, int a) {
  if (n < 0 || a < 0 || a > n) throw DomainError("fixed-point count a must satisfy 0 <= a <= n");
  if ((n - a) % 2 != 0) throw DomainError("fixed-point count a must have the parity of n");
  return LocusSpec(LocusKind::FixedCount, n, a);
}

std::optional<int> LocusSpec::fixed_points() const {
  if (kind_ == LocusKind::AllInvolutions) return std::nullopt;
  return a_;
}

std::string LocusSpec::to_string() const {
  switch (kind_) {
    case LocusKind::AllInvolutions: return "M_" + std::to_string(n_);
    case LocusKind::PerfectMatchings: return "PM_" + std::to_string(n_);
    case LocusKind::FixedCount: return "M_{" + std::to_string(n_) + "," + std::to_string(a_) + "}";
  }
  return {};
}

bool LocusSpec::contains(const Involution& w) const {
  if (w.n() != n_) return false;
  auto a = fixed_points();
  return !a || w.fixed_point_count() == *a;
}

std::vector<Involution> enumerate(const LocusSpec& spec) {
  const int n = spec.n();
  const auto want_fixed = spec.fixed_points();
  std::vector<Involution> out;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::pair<int, int>> pairs;

  std::function<void(int, int)> recurse = [&](int next, int fixed) {
    while (next <= n && used[static_cast<std::size_t>(next)]) ++next;
    if (next > n) {
      if (!want_fixed || fixed == *want_fixed) out.emplace_back(n, pairs);
      return;
    }
    if (want_fixed && fixed > *want_fixed) return;
    used[static_cast<std::size_t>(next)] = true;
    if (!want_fixed || fixed < *want_fixed) recurse(next + 1, fixed + 1);
    for (int j = next + 1; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      pairs.emplace_back(next, j);
      recurse(next + 1, fixed);
      pairs.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(next)] = false;
  };
  recurse(1, 0);
  return out;
}

MatchingMonomial matching_monomial(const Involution& w) { return MatchingMonomial{w.pairs()}; }

Involution conjugate_involution(const PermutationWord& v, const Involution& w) {
  if (v.size() != w.n()) throw DomainError("conjugate_involution: size mismatch");
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : w.pairs()) pairs.emplace_back(std::min(v(i), v(j)), std::max(v(i), v(j)));
  return Involution(w.n(), std::move(pairs));
}

Integer locus_size(const LocusSpec& spec) {
  const int n = spec.n();
  switch (spec.kind()) {
    case LocusKind::AllInvolutions: return involution_count(n);
    case LocusKind::PerfectMatchings: return odd_double_factorial(n - 1);
    case LocusKind::FixedCount: {
      const int a = *spec.fixed_points();
      const int k = (n - a) / 2;
      Integer denom = factorial(a) * factorial(k);
      denom <<= static_cast<mp_bitcnt_t>(k);
      Integer out = factorial(n);
      mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), denom.get_mpz_t());
      return out;
    }
  }
  return 0;
}

}  // namespace invharm
