#include "invharm/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "invharm/errors.hpp"

namespace invharm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool Partition::is_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(first_row()) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string Partition::to_string() const {
  const bool compact = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

std::vector<Partition> even_partitions(int n) {
  if (n < 0) throw DomainError("even_partitions: n must be nonnegative");
  if (n % 2 != 0) return {};
  // Doubling the parts of each partition of n/2 preserves reverse lex order.
  std::vector<Partition> out;
  for (const Partition& half : enumerate_partitions(n / 2)) {
    std::vector<int> parts = half.parts();
    for (int& p : parts) p *= 2;
    out.emplace_back(std::move(parts));
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first_row()), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

bool is_horizontal_strip(const Partition& nu, const Partition& lambda) {
  if (nu.length() < lambda.length()) return false;
  for (int i = 0; i < nu.length(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (nu[k] < lambda[k]) return false;
    if (i > 0 && nu[k] > lambda[k - 1]) return false;
  }
  return true;
}

}  // namespace invharm
