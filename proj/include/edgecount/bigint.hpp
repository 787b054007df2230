#ifndef EDGECOUNT_BIGINT_HPP
#define EDGECOUNT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace edgecount {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// j (j-1) ... (j-m+1); zero when m > j.
inline BigInt falling_factorial(std::uint64_t j, std::uint64_t m) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (i >= j)
      return 0;
    out *= static_cast<unsigned long>(j - i);
  }
  return out;
}

inline BigInt pow(const BigInt &base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline std::string to_string(const BigInt &x) { return x.get_str(); }
inline std::string to_string(const Rational &x) { return x.get_str(); }

} // namespace edgecount

#endif // EDGECOUNT_BIGINT_HPP
