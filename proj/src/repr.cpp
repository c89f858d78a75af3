#include "invharm/repr.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "invharm/errors.hpp"

namespace invharm {

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions, Matrix values, std::vector<Integer> class_sizes)
    : n_(n),
      partitions_(std::move(partitions)),
      values_(std::move(values)),
      class_sizes_(std::move(class_sizes)),
      group_order_(factorial(n)) {}

std::size_t CharacterTable::index_of(const Partition& lambda) const {
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), lambda, ReverseLex{});
  if (it == partitions_.end() || *it != lambda)
    throw DomainError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n_));
  return static_cast<std::size_t>(it - partitions_.begin());
}

std::int64_t CharacterTable::operator()(const Partition& lambda, const Partition& mu) const {
  return values_(static_cast<Eigen::Index>(index_of(lambda)), static_cast<Eigen::Index>(index_of(mu)));
}

Integer class_size(const Partition& mu) {
  Integer centralizer = 1;
  const auto mult = mu.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, static_cast<unsigned long>(mult[i]));
    centralizer *= power * factorial(mult[i]);
  }
  Integer out = factorial(mu.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), centralizer.get_mpz_t());
  return out;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from b to b - r; the sign counts beads jumped over.
class MurnaghanNakayama {
 public:
  std::int64_t chi(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t k) {
    if (k == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(k), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu[k];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++jumped;
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      const int m = static_cast<int>(moved.size());
      for (int j = 0; j < m; ++j) {
        const int part = moved[static_cast<std::size_t>(j)] - (m - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      const std::int64_t sub = chi(smaller, mu, k + 1);
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

std::shared_ptr<const CharacterTable> build_table(int n) {
  auto parts = enumerate_partitions(n);
  const auto count = static_cast<Eigen::Index>(parts.size());
  CharacterTable::Matrix values(count, count);
  MurnaghanNakayama mn;
  for (Eigen::Index i = 0; i < count; ++i)
    for (Eigen::Index j = 0; j < count; ++j)
      values(i, j) = mn.chi(parts[static_cast<std::size_t>(i)].parts(), parts[static_cast<std::size_t>(j)].parts(), 0);
  std::vector<Integer> sizes;
  for (const auto& mu : parts) sizes.push_back(class_size(mu));
  return std::make_shared<const CharacterTable>(n, std::move(parts), std::move(values), std::move(sizes));
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int n, int bound) {
  if (n < 0) throw DomainError("character_table: n must be nonnegative");
  if (n > bound)
    throw ResourceError("character table for n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return slot;
}

ClassFunction::ClassFunction(int n) : n_(n), classes_(enumerate_partitions(n)), values_(classes_.size()) {}

ClassFunction::ClassFunction(int n, std::vector<Rational> values)
    : n_(n), classes_(enumerate_partitions(n)), values_(std::move(values)) {
  if (values_.size() != classes_.size()) throw DomainError("ClassFunction: one value per cycle type required");
}

std::size_t ClassFunction::index_of(const Partition& mu) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), mu, ReverseLex{});
  if (it == classes_.end() || *it != mu) throw DomainError("ClassFunction: " + mu.to_string() + " is not a cycle type of S_" + std::to_string(n_));
  return static_cast<std::size_t>(it - classes_.begin());
}

const Rational& ClassFunction::value(const Partition& mu) const { return values_[index_of(mu)]; }
Rational& ClassFunction::value(const Partition& mu) { return values_[index_of(mu)]; }

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw DomainError("ClassFunction: size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.n_ != n_) throw DomainError("ClassFunction: size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.n_ != b.n_) throw DomainError("ClassFunction: size mismatch");
  ClassFunction out(a.n_);
  for (std::size_t i = 0; i < a.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
  return out;
}

ClassFunction schur_to_class_function(const SchurSeries& s, int bound) {
  if (s.grades().size() > 1) throw DomainError("schur_to_class_function: series must be concentrated in one grade");
  const auto table = character_table(s.degree_n(), bound);
  ClassFunction f(s.degree_n());
  for (const auto& [key, coeff] : s.terms()) {
    const auto row = static_cast<Eigen::Index>(table->index_of(key.lambda));
    for (std::size_t j = 0; j < table->size(); ++j)
      f.value(table->partitions()[j]) += Rational(coeff) * Rational(table->values()(row, static_cast<Eigen::Index>(j)));
  }
  return f;
}

SchurSeries decompose_class_function(const ClassFunction& f, int bound) {
  const auto table = character_table(f.n(), bound);
  SchurSeries out(f.n());
  const auto count = static_cast<Eigen::Index>(table->size());
  for (Eigen::Index i = 0; i < count; ++i) {
    Rational inner = 0;
    for (Eigen::Index j = 0; j < count; ++j) {
      const auto cls = static_cast<std::size_t>(j);
      inner += Rational(table->class_sizes()[cls]) * f.values()[cls] * Rational(table->values()(i, j));
    }
    inner /= Rational(table->group_order());
    if (inner.get_den() != 1)
      throw DomainError("decompose_class_function: multiplicity of chi^" + table->partitions()[static_cast<std::size_t>(i)].to_string() +
                        " is " + inner.get_str() + ", not an integer");
    out.add(0, table->partitions()[static_cast<std::size_t>(i)], inner.get_num());
  }
  return out;
}

SchurSeries kronecker_multiplicities(const SchurSeries& a, const SchurSeries& b, int bound) {
  if (a.degree_n() != b.degree_n()) throw DomainError("kronecker_multiplicities: modules of different degree");
  return decompose_class_function(schur_to_class_function(a, bound) * schur_to_class_function(b, bound), bound);
}

Rational restricted_trivial_multiplicity(const ClassFunction& f, int j) {
  const int n = f.n();
  if (j < 0 || j > n) throw DomainError("restricted_trivial_multiplicity: need 0 <= j <= n");
  Rational total = 0;
  for (const Partition& nu : enumerate_partitions(j)) {
    std::vector<int> cycle_type = nu.parts();
    cycle_type.insert(cycle_type.end(), static_cast<std::size_t>(n - j), 1);
    total += Rational(class_size(nu)) * f.value(Partition(std::move(cycle_type)));
  }
  return total / Rational(factorial(j));
}

LogConcavityResult equivariant_log_concave(const SchurSeries& series, int bound) {
  LogConcavityResult result;
  const int top = series.max_grade();
  const int n = series.degree_n();
  std::vector<ClassFunction> chars;
  for (int d = 0; d <= top; ++d) chars.push_back(schur_to_class_function(series.grade_part(d), bound));
  for (int d = 1; d < top; ++d) {
    const auto k = static_cast<std::size_t>(d);
    const SchurSeries outer = decompose_class_function(chars[k - 1] * chars[k + 1], bound);
    const SchurSeries middle = decompose_class_function(chars[k] * chars[k], bound);
    for (const Partition& lambda : enumerate_partitions(n)) {
      const Integer lhs = outer.coefficient(0, lambda);
      const Integer rhs = middle.coefficient(0, lambda);
      if (lhs > rhs) {
        result.holds = false;
        result.witness = LogConcavityWitness{d, lambda, lhs, rhs};
        return result;
      }
    }
  }
  return result;
}

}  // namespace invharm
