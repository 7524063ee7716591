#include "idealzeta/zeta_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "idealzeta/errors.hpp"

namespace idealzeta {

DirichletCoeffs DirichletCoeffs::delta(std::uint64_t bound)
{
    std::vector<Integer> a(bound, 0);
    if (bound)
        a[0] = 1;
    return DirichletCoeffs(std::move(a));
}

DirichletCoeffs zeta_shifted(unsigned a, unsigned b, std::uint64_t bound)
{
    if (a == 0)
        throw std::invalid_argument("zeta_shifted: a must be positive");
    std::vector<Integer> c(bound, 0);
    for (std::uint64_t m = 1;; ++m) {
        Integer k = ipow(Integer(static_cast<unsigned long>(m)), a);
        if (k > Integer(static_cast<unsigned long>(bound)))
            break;
        c[k.get_ui() - 1] = ipow(Integer(static_cast<unsigned long>(m)), b);
    }
    return DirichletCoeffs(std::move(c));
}

DirichletCoeffs dirichlet_mul(DirichletCoeffs const& a, DirichletCoeffs const& c)
{
    if (a.bound() != c.bound())
        throw DimensionMismatch("Dirichlet series bounds differ");
    std::uint64_t bound = a.bound();
    std::vector<Integer> r(bound, 0);
    for (std::uint64_t d = 1; d <= bound; ++d) {
        Integer const& ad = a(d);
        if (ad == 0)
            continue;
        for (std::uint64_t m = 1; m * d <= bound; ++m) {
            Integer const& cm = c(m);
            if (cm != 0)
                mpz_addmul(r[d * m - 1].get_mpz_t(), ad.get_mpz_t(), cm.get_mpz_t());
        }
    }
    return DirichletCoeffs(std::move(r));
}

DirichletCoeffs theorem1_series(unsigned n, std::uint64_t bound)
{
    if (n == 0)
        throw std::invalid_argument("theorem1_series: n must be positive");
    DirichletCoeffs acc = zeta_shifted(1, 0, bound);
    for (unsigned j = 2; j <= n; ++j)
        acc = dirichlet_mul(acc, zeta_shifted(j, j - 1, bound));
    return acc;
}

LocalFactorRF local_tn_rf(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("local_tn: n must be positive");
    LocalFactorRF rf;
    rf.numerator = {LaurentPoly(1)};
    rf.denominator = {LaurentPoly(1)};
    for (unsigned j = 1; j <= n; ++j) {
        XSeries<LaurentPoly> factor(j + 1);
        factor[0] = 1;
        factor[j] = LaurentPoly::monomial(-1, static_cast<long>(j) - 1);
        rf.denominator = multiply(rf.denominator, factor);
    }
    return rf;
}

XSeries<LaurentPoly> local_tn(unsigned n, unsigned max_exponent)
{
    return local_tn_rf(n).expand(max_exponent);
}

std::vector<Integer> local_tn(unsigned n, std::uint64_t p, unsigned max_exponent)
{
    auto s = local_tn_rf(n).specialize(Rational(static_cast<unsigned long>(p))).expand(max_exponent);
    std::vector<Integer> out;
    for (auto const& c : s) {
        if (c.get_den() != 1)
            throw std::logic_error("non-integral local coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

LocalFactorRF local_cubic_coprime_rf()
{
    auto term = [](Rational c, long p_exp, unsigned x_exp) {
        XSeries<LaurentPoly> t(x_exp + 1);
        t[x_exp] = LaurentPoly::monomial(c, p_exp);
        return t;
    };
    auto sum = [](std::vector<XSeries<LaurentPoly>> const& parts) {
        XSeries<LaurentPoly> r;
        for (auto const& s : parts) {
            if (r.size() < s.size())
                r.resize(s.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                r[i] += s[i];
        }
        return r;
    };
    LocalFactorRF rf;
    // 1 - x^2 + p^{-1} x - p^{-1} x^2 + x^2 - x^3, term by term as displayed
    rf.numerator = sum({term(1, 0, 0), term(-1, 0, 2), term(1, -1, 1), term(-1, -1, 2), term(1, 0, 2), term(-1, 0, 3)});
    XSeries<LaurentPoly> one_minus_x = {1, -1};
    XSeries<LaurentPoly> one_minus_px2 = {1, 0, -LaurentPoly::p()};
    XSeries<LaurentPoly> one_minus_x4 = {1, 0, 0, 0, -1};
    rf.denominator = multiply(multiply(multiply(one_minus_x, one_minus_x), one_minus_px2), one_minus_x4);
    return rf;
}

XSeries<LaurentPoly> local_cubic_coprime(unsigned max_exponent)
{
    return local_cubic_coprime_rf().expand(max_exponent);
}

std::vector<Rational> local_cubic_coprime(std::uint64_t p, unsigned max_exponent)
{
    return local_cubic_coprime_rf().specialize(Rational(static_cast<unsigned long>(p))).expand(max_exponent);
}

// ---------------------------------------------------------------------------

PartialDirichletCoeffs euler_assemble(std::map<std::uint64_t, std::vector<Integer>> const& local_factors,
                                      std::uint64_t max_prime, std::uint64_t bound)
{
    for (std::uint64_t p = 2; p <= max_prime; ++p) {
        if (!is_prime(p))
            continue;
        auto it = local_factors.find(p);
        if (it == local_factors.end())
            throw InputError("missing local factor for prime " + std::to_string(p));
        std::size_t depth = 0;
        for (std::uint64_t q = p; q <= bound; q *= p)
            ++depth;
        if (it->second.size() < depth + 1)
            throw InputError("local factor at p = " + std::to_string(p) + " needs exponents up to " +
                             std::to_string(depth));
    }

    // smallest prime factor sieve
    std::vector<std::uint64_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= bound; j += i)
                if (spf[j] == 0)
                    spf[j] = i;

    PartialDirichletCoeffs out;
    out.a.resize(bound);
    for (std::uint64_t k = 1; k <= bound; ++k) {
        Integer value = 1;
        std::uint64_t rest = k;
        bool present = true;
        while (rest > 1) {
            std::uint64_t p = spf[rest];
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (p > max_prime) {
                present = false;
                break;
            }
            value *= local_factors.at(p)[e];
        }
        if (present)
            out.a[k - 1] = std::move(value);
    }
    return out;
}

std::vector<AsymptoticRow> asymptotic_report(DirichletCoeffs const& a, unsigned n,
                                             std::vector<std::uint64_t> const& checkpoints)
{
    if (n == 0)
        throw std::invalid_argument("asymptotic_report: n must be positive");
    long double c = 1.0L;
    for (unsigned i = 2; i <= n; ++i)
        c /= i;
    for (unsigned i = 2; i + 1 <= n; ++i)
        c /= i;
    std::vector<AsymptoticRow> rows;
    Integer partial = 0;
    std::uint64_t k = 0;
    for (std::uint64_t b : checkpoints) {
        if (b > a.bound())
            throw InputError("checkpoint " + std::to_string(b) + " exceeds coefficient bound " +
                             std::to_string(a.bound()));
        if (b < k)
            throw std::invalid_argument("checkpoints must be increasing");
        while (k < b)
            partial += a(++k);
        long double B = static_cast<long double>(b);
        long double denom = c * B * std::pow(std::log(B), static_cast<long double>(n - 1));
        long double s = static_cast<long double>(partial.get_d());
        rows.push_back(AsymptoticRow{b, partial, static_cast<double>(s / denom)});
    }
    return rows;
}

std::vector<AsymptoticRow> asymptotic_report(DirichletCoeffs const& a, unsigned n)
{
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t b = 10; b <= a.bound(); b *= 10)
        checkpoints.push_back(b);
    return asymptotic_report(a, n, checkpoints);
}

} // namespace idealzeta
