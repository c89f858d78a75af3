#include "invharm/qpoly.hpp"

#include "invharm/errors.hpp"

namespace invharm {

QPoly::QPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::coefficient(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

void QPoly::add_to(int d, const Integer& value) {
  if (d < 0) throw DomainError("QPoly: negative exponent");
  const auto k = static_cast<std::size_t>(d);
  if (k >= coeffs_.size()) coeffs_.resize(k + 1, 0);
  coeffs_[k] += value;
  trim();
}

Integer QPoly::at_one() const {
  Integer total = 0;
  for (const Integer& c : coeffs_) total += c;
  return total;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const bool show_coeff = d == 0 || mag != 1;
    if (show_coeff) out += mag.get_str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

bool is_log_concave(const QPoly& p) {
  const auto& c = p.coefficients();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

}  // namespace invharm
