#include "idealzeta/polyring.hpp"

#include <cctype>
#include <sstream>

#include "idealzeta/errors.hpp"

namespace idealzeta {

MonicPoly::MonicPoly(std::vector<Integer> low_coeffs) : low_(std::move(low_coeffs))
{
    if (low_.empty())
        throw InputError("degree zero");
}

MonicPoly MonicPoly::power_of_t(std::size_t n)
{
    return MonicPoly(std::vector<Integer>(n, 0));
}

Integer MonicPoly::coeff(std::size_t i) const
{
    if (i == low_.size())
        return 1;
    if (i > low_.size())
        return 0;
    return low_[i];
}

std::optional<std::size_t> MonicPoly::as_power_of_t() const
{
    for (auto const& c : low_)
        if (c != 0)
            return std::nullopt;
    return degree();
}

std::optional<Integer> MonicPoly::as_double_root_cubic() const
{
    if (degree() != 3 || low_[0] != 0 || low_[1] != 0 || low_[2] == 0)
        return std::nullopt;
    return Integer(-low_[2]);
}

Integer MonicPoly::eval_mod(Integer const& x, Integer const& m) const
{
    Integer acc = 1;
    for (std::size_t i = low_.size(); i-- > 0;) {
        acc = acc * x + low_[i];
        acc %= m;
    }
    if (acc < 0)
        acc += m;
    return acc;
}

// ---------------------------------------------------------------------------
// Parsing. Dense integer polynomials; index = power of t.

namespace {

using Dense = std::vector<Integer>;

void trim(Dense& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Dense add(Dense a, Dense const& b, int sign)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += sign * b[i];
    trim(a);
    return a;
}

Dense mul(Dense const& a, Dense const& b)
{
    if (a.empty() || b.empty())
        return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

constexpr unsigned long max_exponent = 4096;

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Dense parse()
    {
        skip();
        if (pos_ == s_.size())
            throw ParseError("empty expression", pos_);
        Dense r = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

  private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Dense expr()
    {
        Dense acc = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            acc = add(std::move(acc), term(), c == '+' ? 1 : -1);
        }
    }

    Dense term()
    {
        Dense acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(acc, unary());
            } else if (c == 't' || c == '(') {
                acc = mul(acc, unary()); // juxtaposition, e.g. "2t" or "t^2(t-1)"
            } else {
                return acc;
            }
        }
    }

    Dense unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return mul(Dense{-1}, unary());
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Dense power()
    {
        Dense base = primary();
        if (peek() != '^')
            return base;
        ++pos_;
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected non-negative integer exponent", at);
        Integer e = number();
        if (e > max_exponent)
            throw ParseError("exponent too large", at);
        unsigned long k = e.get_ui();
        Dense r{1};
        for (unsigned long i = 0; i < k; ++i)
            r = mul(r, base);
        return r;
    }

    Dense primary()
    {
        char c = peek();
        if (c == 't') {
            ++pos_;
            return Dense{0, 1};
        }
        if (c == '(') {
            std::size_t open = pos_++;
            Dense r = expr();
            if (peek() != ')')
                throw ParseError("unbalanced parenthesis opened at " + std::to_string(open), pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Dense r{number()};
            trim(r);
            return r;
        }
        if (c == '\0')
            throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Integer number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MonicPoly parse_poly(std::string_view text)
{
    Dense d = Parser(text).parse();
    if (d.size() <= 1)
        throw InputError("degree zero");
    if (d.back() != 1)
        throw InputError("not monic");
    d.pop_back();
    return MonicPoly(std::move(d));
}

std::string render(MonicPoly const& f)
{
    std::ostringstream os;
    std::size_t n = f.degree();
    for (std::size_t i = n + 1; i-- > 0;) {
        Integer c = f.coeff(i);
        if (c == 0)
            continue;
        bool first = (i == n);
        Integer mag = abs(c);
        if (first) {
            // leading coefficient is 1
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0)
            os << mag;
        else {
            if (!unit && !first)
                os << mag << "*";
            os << "t";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RingVector RingVector::unit(std::size_t n, std::size_t j)
{
    RingVector v = zero(n);
    v.entries.at(j) = 1;
    return v;
}

RingVector RingVector::from_poly(std::span<Integer const> poly, std::size_t n)
{
    RingVector v = zero(n);
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] == 0)
            continue;
        if (d >= n)
            throw DimensionMismatch("polynomial degree exceeds ring rank");
        v.entries[n - 1 - d] = poly[d];
    }
    return v;
}

bool RingVector::is_zero() const
{
    for (auto const& x : entries)
        if (x != 0)
            return false;
    return true;
}

namespace {
void require_same(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionMismatch("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
} // namespace

RingVector operator+(RingVector const& a, RingVector const& b)
{
    require_same(a.size(), b.size());
    RingVector r = a;
    for (std::size_t j = 0; j < r.size(); ++j)
        r[j] += b[j];
    return r;
}

RingVector operator-(RingVector const& a, RingVector const& b)
{
    require_same(a.size(), b.size());
    RingVector r = a;
    for (std::size_t j = 0; j < r.size(); ++j)
        r[j] -= b[j];
    return r;
}

RingVector operator*(Integer const& s, RingVector const& a)
{
    RingVector r = a;
    for (auto& x : r.entries)
        x *= s;
    return r;
}

StructureConstants::StructureConstants(MonicPoly const& f)
{
    std::size_t n = f.degree();
    mul_by_t.assign(n, std::vector<Integer>(n, 0));
    // t * t^{n-1} = t^n = -(c_{n-1} t^{n-1} + ... + c_0); row k <-> t^{n-1-k}
    for (std::size_t k = 0; k < n; ++k)
        mul_by_t[k][0] = -f.coeff(n - 1 - k);
    for (std::size_t j = 1; j < n; ++j)
        mul_by_t[j - 1][j] = 1;
}

RingVector StructureConstants::apply(RingVector const& v) const
{
    require_same(v.size(), dimension());
    std::size_t n = dimension();
    RingVector r = RingVector::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mul_by_t[i][j] != 0)
                r[i] += mul_by_t[i][j] * v[j];
    return r;
}

std::vector<std::vector<RingVector>> StructureConstants::product_table() const
{
    std::size_t n = dimension();
    // powers[d] = t^d reduced, for d <= 2n-2
    std::vector<RingVector> powers;
    powers.push_back(RingVector::unit(n, n - 1));
    for (std::size_t d = 1; d + 1 < 2 * n; ++d)
        powers.push_back(apply(powers.back()));
    std::vector<std::vector<RingVector>> table(n, std::vector<RingVector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = powers[(n - 1 - i) + (n - 1 - j)];
    return table;
}

RingVector mul_by_t(RingVector const& v, MonicPoly const& f)
{
    std::size_t n = f.degree();
    require_same(v.size(), n);
    RingVector r = RingVector::zero(n);
    for (std::size_t j = 1; j < n; ++j)
        r[j - 1] = v[j];
    if (v[0] != 0)
        for (std::size_t k = 0; k < n; ++k)
            r[k] -= v[0] * f.coeff(n - 1 - k);
    return r;
}

RingVector mul_mod_f(RingVector const& v, RingVector const& w, MonicPoly const& f)
{
    std::size_t n = f.degree();
    require_same(v.size(), n);
    require_same(w.size(), n);
    RingVector acc = RingVector::zero(n);
    RingVector shifted = w; // t^d * w
    for (std::size_t d = 0; d < n; ++d) {
        Integer const& c = v[n - 1 - d];
        if (c != 0)
            for (std::size_t k = 0; k < n; ++k)
                acc[k] += c * shifted[k];
        if (d + 1 < n)
            shifted = mul_by_t(shifted, f);
    }
    return acc;
}

} // namespace idealzeta
