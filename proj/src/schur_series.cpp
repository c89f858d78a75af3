#include "invharm/schur_series.hpp"

#include <algorithm>

#include "invharm/errors.hpp"

namespace invharm {

SchurSeries::SchurSeries(int degree_n) : degree_n_(degree_n) {
  if (degree_n < 0) throw DomainError("SchurSeries: negative degree");
}

SchurSeries SchurSeries::single(const Partition& lambda, int grade) {
  SchurSeries s(lambda.size());
  s.add(grade, lambda, 1);
  return s;
}

void SchurSeries::check_size(const Partition& lambda) const {
  if (lambda.size() != degree_n_)
    throw DomainError("Schur term s_" + lambda.to_string() + " does not have degree " + std::to_string(degree_n_));
}

void SchurSeries::add(int grade, const Partition& lambda, const Integer& coeff) {
  check_size(lambda);
  if (grade < 0) throw DomainError("SchurSeries: negative grade");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{grade, lambda}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SchurSeries::coefficient(int grade, const Partition& lambda) const {
  check_size(lambda);
  auto it = terms_.find(Key{grade, lambda});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<int> SchurSeries::grades() const {
  std::vector<int> out;
  for (const auto& [key, coeff] : terms_)
    if (out.empty() || out.back() != key.grade) out.push_back(key.grade);
  return out;
}

int SchurSeries::max_grade() const { return terms_.empty() ? -1 : terms_.rbegin()->first.grade; }

SchurSeries SchurSeries::grade_part(int grade) const {
  SchurSeries out(degree_n_);
  for (const auto& [key, coeff] : terms_)
    if (key.grade == grade) out.terms_.emplace(key, coeff);
  return out;
}

SchurSeries SchurSeries::at_q_equals_one() const {
  SchurSeries out(degree_n_);
  for (const auto& [key, coeff] : terms_) out.add(0, key.lambda, coeff);
  return out;
}

SchurSeries SchurSeries::shifted(int k) const {
  SchurSeries out(degree_n_);
  for (const auto& [key, coeff] : terms_) out.add(key.grade + k, key.lambda, coeff);
  return out;
}

bool SchurSeries::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

SchurSeries& SchurSeries::operator+=(const SchurSeries& other) {
  if (other.degree_n_ != degree_n_) throw DomainError("SchurSeries: adding series of different degrees");
  for (const auto& [key, coeff] : other.terms_) add(key.grade, key.lambda, coeff);
  return *this;
}

SchurSeries& SchurSeries::operator-=(const SchurSeries& other) {
  if (other.degree_n_ != degree_n_) throw DomainError("SchurSeries: subtracting series of different degrees");
  for (const auto& [key, coeff] : other.terms_) add(key.grade, key.lambda, -coeff);
  return *this;
}

std::string SchurSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  int current = -1;
  for (const auto& [key, coeff] : terms_) {
    if (key.grade != current) {
      if (current >= 0) out += "\n";
      out += "q^" + std::to_string(key.grade) + ": ";
      if (coeff < 0) out += "-";
      current = key.grade;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    const Integer mag = abs(coeff);
    if (mag != 1) out += mag.get_str() + "*";
    out += "s_" + (key.lambda.empty() ? std::string("0") : key.lambda.to_string());
  }
  return out;
}

namespace {

// Horizontal strips of `b` boxes on top of `lambda`: row i may grow to at
// most lambda_{i-1}; the first row is unbounded and one new row may open.
void strip_additions(const Partition& lambda, int row, int remaining, std::vector<int>& nu,
                     std::vector<Partition>& out) {
  const int rows = lambda.length() + 1;
  if (row == rows) {
    if (remaining == 0) {
      std::vector<int> parts;
      for (int p : nu)
        if (p > 0) parts.push_back(p);
      out.emplace_back(std::move(parts));
    }
    return;
  }
  const auto r = static_cast<std::size_t>(row);
  const int base = lambda[r];
  const int cap = row == 0 ? base + remaining : std::min(base + remaining, lambda[r - 1]);
  for (int v = base; v <= cap; ++v) {
    nu[r] = v;
    strip_additions(lambda, row + 1, remaining - (v - base), nu, out);
  }
  nu[r] = base;
}

}  // namespace

SchurSeries pieri_multiply(const SchurSeries& s, int b) {
  if (b < 0) throw DomainError("pieri_multiply: strip size must be nonnegative");
  SchurSeries out(s.degree_n() + b);
  for (const auto& [key, coeff] : s.terms()) {
    std::vector<Partition> nus;
    std::vector<int> nu = key.lambda.parts();
    nu.push_back(0);
    strip_additions(key.lambda, 0, b, nu, nus);
    for (const Partition& p : nus) out.add(key.grade, p, coeff);
  }
  return out;
}

SchurSeries plethysm_sd_s2(int d) {
  if (d < 0) throw DomainError("plethysm_sd_s2: d must be nonnegative");
  SchurSeries out(2 * d);
  for (const Partition& lambda : even_partitions(2 * d)) out.add(0, lambda, 1);
  return out;
}

SchurSeries plethysm_sd_s2_or_zero(int d, int degree_n) {
  if (d < 0) return SchurSeries(degree_n);
  return plethysm_sd_s2(d);
}

SchurSeries truncate_first_row(const SchurSeries& s, FirstRowPredicate keep) {
  SchurSeries out(s.degree_n());
  for (const auto& [key, coeff] : s.terms())
    if (keep(key.lambda)) out.add(key.grade, key.lambda, coeff);
  return out;
}

Integer schur_coefficient(const SchurSeries& s, int grade, const Partition& lambda) {
  return s.coefficient(grade, lambda);
}

}  // namespace invharm
