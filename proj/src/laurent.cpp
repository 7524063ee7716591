#include "idealzeta/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace idealzeta {

LaurentPoly::LaurentPoly(Rational c)
{
    add_term(0, c);
}

LaurentPoly LaurentPoly::monomial(Rational c, long exponent)
{
    LaurentPoly r;
    r.add_term(exponent, c);
    return r;
}

void LaurentPoly::add_term(long e, Rational const& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational LaurentPoly::coefficient(long exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(Rational const& p) const
{
    Rational acc = 0;
    for (auto const& [e, c] : terms_)
        acc += c * rpow(p, e);
    return acc;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "p";
        if (e != 1)
            os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o)
{
    for (auto const& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o)
{
    for (auto const& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& o)
{
    LaurentPoly r;
    for (auto const& [e1, c1] : terms_)
        for (auto const& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (auto const& [e, c] : terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::inverse() const
{
    if (!is_monomial())
        throw std::domain_error("only monomials are invertible in Q[p, 1/p]");
    auto const& [e, c] = *terms_.begin();
    return monomial(1 / c, -e);
}

XSeries<LaurentPoly> multiply(XSeries<LaurentPoly> const& a, XSeries<LaurentPoly> const& b)
{
    if (a.empty() || b.empty())
        return {};
    XSeries<LaurentPoly> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

namespace {

// Power-series division: solve Q * S = P term by term.
template <typename C, typename Inv>
XSeries<C> divide(XSeries<C> const& num, XSeries<C> const& den, unsigned max_exponent, Inv invert)
{
    if (den.empty())
        throw std::domain_error("empty denominator");
    C inv0 = invert(den[0]);
    XSeries<C> s(max_exponent + 1);
    for (unsigned e = 0; e <= max_exponent; ++e) {
        C acc = e < num.size() ? num[e] : C(0);
        for (unsigned j = 1; j <= e && j < den.size(); ++j)
            acc -= den[j] * s[e - j];
        s[e] = acc * inv0;
    }
    return s;
}

} // namespace

XSeries<LaurentPoly> LocalFactorRF::expand(unsigned max_exponent) const
{
    return divide(numerator, denominator, max_exponent, [](LaurentPoly const& c) { return c.inverse(); });
}

LocalFactorRF::Specialized LocalFactorRF::specialize(Rational const& p) const
{
    Specialized s;
    for (auto const& c : numerator)
        s.numerator.push_back(c.evaluate(p));
    for (auto const& c : denominator)
        s.denominator.push_back(c.evaluate(p));
    return s;
}

XSeries<Rational> LocalFactorRF::Specialized::expand(unsigned max_exponent) const
{
    return divide(numerator, denominator, max_exponent, [](Rational const& c) {
        if (c == 0)
            throw std::domain_error("denominator has zero constant term");
        return Rational(1 / c);
    });
}

} // namespace idealzeta
