#include "idealzeta/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace idealzeta {

Integer ipow(Integer const& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(Rational const& base, long exponent)
{
    if (exponent >= 0) {
        Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
        r.canonicalize();
        return r;
    }
    if (base == 0)
        throw std::domain_error("rpow: zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
}

unsigned long valuation(Integer const& x, Integer const& p, unsigned long cap)
{
    if (x == 0)
        return cap;
    Integer r = x;
    unsigned long v = 0;
    while (v < cap && mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::string to_fraction_string(Rational const& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction_string(std::string_view text)
{
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string to_string(Integer const& z)
{
    return z.get_str();
}

std::uint64_t to_u64(Integer const& z)
{
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

} // namespace idealzeta
