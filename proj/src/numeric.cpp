#include "invharm/numeric.hpp"

#include "invharm/errors.hpp"

namespace invharm {

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer odd_double_factorial(long m) {
  if (m == -1) return kEmptyDoubleFactorial;
  if (m < -1 || m % 2 == 0) throw DomainError("odd_double_factorial expects an odd argument >= -1");
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Integer involution_count(long n) {
  if (n < 0) throw DomainError("involution_count of a negative size");
  Integer prev = 1, cur = 1;  // I(0), I(1)
  if (n == 0) return prev;
  for (long k = 2; k <= n; ++k) {
    Integer next = cur + (k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace invharm
