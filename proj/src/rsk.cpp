#include "invharm/rsk.hpp"

#include <algorithm>
#include <numeric>

#include "invharm/errors.hpp"

namespace invharm {

PermutationWord::PermutationWord(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw DomainError("PermutationWord: images must be a bijection of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PermutationWord PermutationWord::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return PermutationWord(std::move(w));
}

PermutationWord PermutationWord::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return PermutationWord(std::move(w));
}

PermutationWord PermutationWord::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return PermutationWord(std::move(inv));
}

bool PermutationWord::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[static_cast<std::size_t>(images_[i] - 1)] != static_cast<int>(i) + 1) return false;
  return true;
}

PermutationWord compose(const PermutationWord& u, const PermutationWord& v) {
  if (u.size() != v.size()) throw DomainError("compose: permutation sizes differ");
  std::vector<int> w(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return PermutationWord(std::move(w));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw DomainError("StandardTableau: empty row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw DomainError("StandardTableau: shape is not a partition");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw DomainError("StandardTableau: entries must be 1..n once each");
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("StandardTableau: rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("StandardTableau: columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> StandardTableau::column_lengths() const { return conjugate(shape()).parts(); }

SchenstedPair schensted(const PermutationWord& w) {
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {StandardTableau(std::move(p), StandardTableau::Unchecked{}),
          StandardTableau(std::move(q), StandardTableau::Unchecked{})};
}

int lds(const PermutationWord& w) {
  return static_cast<int>(schensted(w).insertion.rows().size());
}

Integer hook_product(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    const int row_len = lambda[static_cast<std::size_t>(i)];
    for (int j = 0; j < row_len; ++j) {
      const int arm = row_len - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return hooks;
}

Integer count_syt(const Partition& lambda) {
  const Integer hooks = hook_product(lambda);
  Integer result = factorial(lambda.size());
  mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), hooks.get_mpz_t());
  return result;
}

int fixed_point_count_via_odd_columns(const StandardTableau& p) {
  const auto cols = p.column_lengths();
  return static_cast<int>(std::count_if(cols.begin(), cols.end(), [](int c) { return c % 2 == 1; }));
}

}  // namespace invharm
