#pragma once

#include <gmpxx.h>

#include <string>

namespace dergraph {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt factorial(unsigned n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// (-1)^k for any integer k.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Exact quotient; throws std::logic_error if `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace dergraph
