#include "idealzeta/hnf.hpp"

#include <stdexcept>
#include <utility>

#include "idealzeta/errors.hpp"

namespace idealzeta {

LowerTriangular::LowerTriangular(std::vector<Integer> diag, std::vector<Integer> sub)
    : diag_(std::move(diag)), sub_(std::move(sub))
{
    std::size_t n = diag_.size();
    if (n == 0)
        throw std::invalid_argument("empty matrix");
    if (sub_.size() != n * (n - 1) / 2)
        throw DimensionMismatch("wrong number of sub-diagonal entries");
    for (auto const& d : diag_)
        if (d <= 0)
            throw std::invalid_argument("diagonal entries must be positive");
}

LowerTriangular LowerTriangular::identity(std::size_t n)
{
    return LowerTriangular(std::vector<Integer>(n, 1), std::vector<Integer>(n * (n - 1) / 2, 0));
}

Integer LowerTriangular::at(std::size_t i, std::size_t j) const
{
    if (i == j)
        return diag_[i];
    if (j > i)
        return 0;
    return sub(i, j);
}

RingVector LowerTriangular::row(std::size_t i) const
{
    RingVector r = RingVector::zero(dimension());
    for (std::size_t j = 0; j < i; ++j)
        r[j] = sub(i, j);
    r[i] = diag_[i];
    return r;
}

Integer LowerTriangular::determinant() const
{
    Integer d = 1;
    for (auto const& x : diag_)
        d *= x;
    return d;
}

bool LowerTriangular::is_reduced() const
{
    for (std::size_t i = 1; i < dimension(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sub(i, j) < 0 || sub(i, j) >= diag_[j])
                return false;
    return true;
}

HNFMatrix::HNFMatrix(std::vector<Integer> diag, std::vector<Integer> sub)
    : HNFMatrix(LowerTriangular(std::move(diag), std::move(sub)))
{
}

HNFMatrix::HNFMatrix(LowerTriangular m) : LowerTriangular(std::move(m))
{
    if (!is_reduced())
        throw std::invalid_argument("matrix is not in Hermite normal form");
}

HNFMatrix reduce(LowerTriangular m)
{
    std::size_t n = m.dimension();
    for (std::size_t i = 1; i < n; ++i) {
        // right to left: subtracting row j only touches columns <= j
        for (std::size_t j = i; j-- > 0;) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m.sub(i, j).get_mpz_t(), m.diag(j).get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t l = 0; l < j; ++l)
                m.sub(i, l) -= q * m.sub(j, l);
            m.sub(i, j) -= q * m.diag(j);
        }
    }
    return HNFMatrix(std::move(m));
}

HNFMatrix hnf_from_generators(std::vector<RingVector> rows)
{
    if (rows.empty())
        throw std::invalid_argument("no generators");
    std::size_t n = rows.front().size();
    for (auto const& r : rows)
        if (r.size() != n)
            throw DimensionMismatch("generators of unequal length");

    std::vector<RingVector> basis(n);
    // Column by column from the right: gcd-combine all rows with a nonzero
    // entry in column c into a single pivot row, which becomes basis row c.
    for (std::size_t c = n; c-- > 0;) {
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            if (pivot == rows.size()) {
                pivot = r;
                continue;
            }
            // Extended Euclid on (rows[pivot][c], rows[r][c]).
            Integer a = rows[pivot][c], b = rows[r][c], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer ag = a / g, bg = b / g;
            RingVector np = s * rows[pivot] + t * rows[r];
            RingVector nr = ag * rows[r] - bg * rows[pivot];
            rows[pivot] = std::move(np);
            rows[r] = std::move(nr);
        }
        if (pivot == rows.size())
            throw std::invalid_argument("generators do not span a full-rank lattice");
        RingVector p = std::move(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        if (p[c] < 0)
            p = Integer(-1) * p;
        basis[c] = std::move(p);
    }

    std::vector<Integer> diag(n), sub(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = basis[i][i];
        for (std::size_t j = 0; j < i; ++j)
            sub[i * (i - 1) / 2 + j] = basis[i][j];
    }
    return reduce(LowerTriangular(std::move(diag), std::move(sub)));
}

bool lattice_contains(LowerTriangular const& m, RingVector const& w)
{
    std::size_t n = m.dimension();
    if (w.size() != n)
        throw DimensionMismatch("vector length does not match lattice dimension");
    RingVector r = w;
    Integer c;
    for (std::size_t i = n; i-- > 0;) {
        if (!mpz_divisible_p(r[i].get_mpz_t(), m.diag(i).get_mpz_t()))
            return false;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), m.diag(i).get_mpz_t());
        if (c == 0)
            continue;
        r[i] = 0;
        for (std::size_t j = 0; j < i; ++j)
            r[j] -= c * m.sub(i, j);
    }
    return true;
}

} // namespace idealzeta
