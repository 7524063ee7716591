#ifndef IDEALZETA_LAURENT_HPP_
#define IDEALZETA_LAURENT_HPP_

#include <map>
#include <string>
#include <vector>

#include "idealzeta/numeric.hpp"

namespace idealzeta {

/// Laurent polynomial in a symbol p with rational coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(Rational c); // NOLINT: constants convert implicitly
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    static LaurentPoly monomial(Rational c, long exponent);
    static LaurentPoly p() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    /// c * p^k with c != 0.
    bool is_monomial() const { return terms_.size() == 1; }
    /// Terms keyed by exponent; no zero coefficients stored.
    std::map<long, Rational> const& terms() const { return terms_; }
    Rational coefficient(long exponent) const;

    Rational evaluate(Rational const& p) const;
    std::string to_string() const;

    LaurentPoly& operator+=(LaurentPoly const& o);
    LaurentPoly& operator-=(LaurentPoly const& o);
    LaurentPoly& operator*=(LaurentPoly const& o);
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, LaurentPoly const& b) { return a *= b; }
    LaurentPoly operator-() const;
    /// Inverse of a monomial; throws std::domain_error otherwise.
    LaurentPoly inverse() const;

    bool operator==(LaurentPoly const&) const = default;

  private:
    void add_term(long e, Rational const& c);
    std::map<long, Rational> terms_;
};

/// Polynomial or truncated power series in x; index = power of x.
template <typename Coeff>
using XSeries = std::vector<Coeff>;

/* P(x) / Q(x) with coefficients in Q[p, 1/p]. The constant term of Q must
 * be a monomial so the quotient expands as a power series in x.
 */
struct LocalFactorRF {
    XSeries<LaurentPoly> numerator;
    XSeries<LaurentPoly> denominator;

    /// Coefficients of x^0 .. x^max_exponent.
    XSeries<LaurentPoly> expand(unsigned max_exponent) const;

    struct Specialized {
        XSeries<Rational> numerator;
        XSeries<Rational> denominator;
        XSeries<Rational> expand(unsigned max_exponent) const;
    };
    Specialized specialize(Rational const& p) const;
};

XSeries<LaurentPoly> multiply(XSeries<LaurentPoly> const& a, XSeries<LaurentPoly> const& b);

} // namespace idealzeta

#endif /* IDEALZETA_LAURENT_HPP_ */
