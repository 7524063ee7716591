#ifndef IDEALZETA_NUMERIC_HPP_
#define IDEALZETA_NUMERIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idealzeta {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(Integer const& base, unsigned long exponent);
Rational rpow(Rational const& base, long exponent);

/// p-adic valuation of x. For x == 0 returns `cap`, i.e. "at least cap".
unsigned long valuation(Integer const& x, Integer const& p, unsigned long cap);

bool is_prime(std::uint64_t n);

/// "num/den" with the denominator always present.
std::string to_fraction_string(Rational const& q);
Rational parse_fraction_string(std::string_view text);

std::string to_string(Integer const& z);

/// Narrow to uint64, throwing std::overflow_error when z is negative or too large.
std::uint64_t to_u64(Integer const& z);

} // namespace idealzeta

#endif /* IDEALZETA_NUMERIC_HPP_ */
