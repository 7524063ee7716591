#include <stdexcept>

#include "idealzeta/zeta_series.hpp"

namespace idealzeta {

ConeSeries ConeSeries::monomial(unsigned order, unsigned p_exp, unsigned x_exp)
{
    ConeSeries s(order);
    if (x_exp <= order) {
        s.c_[x_exp].assign(p_exp + 1, 0);
        s.c_[x_exp][p_exp] = 1;
    }
    return s;
}

ConeSeries ConeSeries::geometric(unsigned order, unsigned p_exp, unsigned x_exp)
{
    if (x_exp == 0)
        throw std::invalid_argument("geometric: x exponent must be positive");
    ConeSeries s(order);
    for (unsigned m = 0; m * x_exp <= order; ++m)
        s += monomial(order, m * p_exp, m * x_exp);
    return s;
}

Integer ConeSeries::coefficient(unsigned p_exp, unsigned x_exp) const
{
    if (x_exp > order_ || p_exp >= c_[x_exp].size())
        return 0;
    return c_[x_exp][p_exp];
}

void ConeSeries::normalize()
{
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0)
            row.pop_back();
}

ConeSeries& ConeSeries::operator+=(ConeSeries const& o)
{
    if (o.order_ != order_)
        throw std::invalid_argument("ConeSeries orders differ");
    for (unsigned x = 0; x <= order_; ++x) {
        auto& row = c_[x];
        auto const& orow = o.c_[x];
        if (row.size() < orow.size())
            row.resize(orow.size(), 0);
        for (std::size_t pe = 0; pe < orow.size(); ++pe)
            row[pe] += orow[pe];
    }
    normalize();
    return *this;
}

ConeSeries operator*(ConeSeries const& a, ConeSeries const& b)
{
    if (a.order_ != b.order_)
        throw std::invalid_argument("ConeSeries orders differ");
    ConeSeries r(a.order_);
    for (unsigned xa = 0; xa <= a.order_; ++xa) {
        for (unsigned xb = 0; xa + xb <= a.order_; ++xb) {
            auto const& ra = a.c_[xa];
            auto const& rb = b.c_[xb];
            if (ra.empty() || rb.empty())
                continue;
            auto& out = r.c_[xa + xb];
            if (out.size() < ra.size() + rb.size() - 1)
                out.resize(ra.size() + rb.size() - 1, 0);
            for (std::size_t i = 0; i < ra.size(); ++i)
                if (ra[i] != 0)
                    for (std::size_t j = 0; j < rb.size(); ++j)
                        out[i + j] += ra[i] * rb[j];
        }
    }
    r.normalize();
    return r;
}

bool ConeSeries::operator==(ConeSeries const& o) const
{
    return order_ == o.order_ && c_ == o.c_;
}

ConeSeries chain_sum(unsigned n, unsigned k, unsigned start, unsigned order)
{
    if (k < 2 || k > n)
        throw std::invalid_argument("summation lemma needs 2 <= k <= n");
    // inner[s] = sum over the chain b_j >= s, ..., b_n, of the summand, for
    // the innermost levels processed so far; s ranges over 0..order+1 and
    // everything starting above `order` vanishes at this truncation.
    std::vector<ConeSeries> inner(order + 2, ConeSeries::monomial(order, 0, 0));
    for (unsigned j = n + 1; j-- > k;) {
        std::vector<ConeSeries> outer(order + 2, ConeSeries(order));
        for (unsigned s = order + 1; s-- > 0;) {
            unsigned p_exp = (j == n) ? 0 : s; // x^{b_n} innermost, (px)^{b_j} otherwise
            ConeSeries term = ConeSeries::monomial(order, p_exp, s) * inner[s];
            term += outer[s + 1];
            outer[s] = std::move(term);
        }
        inner = std::move(outer);
    }
    return start <= order ? inner[start] : ConeSeries(order);
}

ConeSeries chain_sum_closed_form(unsigned n, unsigned k, unsigned start, unsigned order)
{
    if (k < 2 || k > n)
        throw std::invalid_argument("summation lemma needs 2 <= k <= n");
    ConeSeries r = ConeSeries::monomial(order, (n - k) * start, (n - k + 1) * start);
    for (unsigned j = 1; j <= n - k + 1; ++j)
        r = r * ConeSeries::geometric(order, j - 1, j);
    return r;
}

bool summation_lemma_check(unsigned n, unsigned k, unsigned order)
{
    if (order < 1)
        throw std::invalid_argument("truncation order must be positive");
    for (unsigned start = 0; start <= order; ++start)
        if (!(chain_sum(n, k, start, order) == chain_sum_closed_form(n, k, start, order)))
            return false;
    return true;
}

} // namespace idealzeta
