#include "idealzeta/lattice_ideals.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "idealzeta/errors.hpp"
#include "parallel.hpp"

namespace idealzeta {

bool is_ideal(LowerTriangular const& m, MonicPoly const& f)
{
    if (m.dimension() != f.degree())
        throw DimensionMismatch("matrix dimension does not match degree of f");
    for (std::size_t i = 0; i < m.dimension(); ++i)
        if (!lattice_contains(m, mul_by_t(m.row(i), f)))
            return false;
    return true;
}

std::vector<std::vector<std::uint64_t>> diagonal_tuples(std::size_t n, std::uint64_t k)
{
    if (n == 0 || k == 0)
        throw std::invalid_argument("diagonal_tuples: n and k must be positive");
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t rest) -> void {
        if (cur.size() + 1 == n) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (std::uint64_t d = 1; d <= rest; ++d) {
            if (rest % d)
                continue;
            cur.push_back(d);
            self(self, rest / d);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

void for_each_hnf(std::size_t n, std::uint64_t k, std::function<void(HNFMatrix const&)> const& visit)
{
    std::size_t nsub = n * (n - 1) / 2;
    for (auto const& dt : diagonal_tuples(n, k)) {
        std::vector<Integer> diag(dt.begin(), dt.end());
        std::vector<std::uint64_t> bound(nsub);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                bound[i * (i - 1) / 2 + j] = dt[j];
        std::vector<std::uint64_t> a(nsub, 0);
        for (;;) {
            visit(HNFMatrix(diag, std::vector<Integer>(a.begin(), a.end())));
            bool done = true;
            for (std::size_t pos = nsub; pos-- > 0;) {
                if (++a[pos] < bound[pos]) {
                    done = false;
                    break;
                }
                a[pos] = 0;
            }
            if (done)
                break;
        }
    }
}

std::vector<HNFMatrix> enumerate_hnf(std::size_t n, std::uint64_t k)
{
    std::vector<HNFMatrix> out;
    for_each_hnf(n, k, [&](HNFMatrix const& m) { out.push_back(m); });
    return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 addmod(u64 a, u64 b, u64 m) { return submod(a, m - b, m); }

u64 reduce_mod(Integer const& x, u64 m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(static_cast<unsigned long>(m)).get_mpz_t());
    return r.get_ui();
}

constexpr u64 flush_every = 1024;

/* Counts ideal HNFs with a fixed diagonal, working in (Z/det)^n since the
 * row lattice contains det * Z^n.
 *
 * When f = t^n mod det, t * v_j is supported on coordinates < j and so is
 * decided by rows 0..j-1: rows are filled top-down and each is checked as
 * soon as it is complete. Otherwise rows are filled bottom-up and every
 * available t-image is back-substituted over the coordinates whose pivots
 * are already fixed, which is a necessary condition at every level and the
 * full test once row 1 is placed.
 */
class IdealKernel {
  public:
    IdealKernel(MonicPoly const& f, std::span<u64 const> diag, std::atomic<u64>& shared_visits, u64 cap,
                u64 index)
        : n_(diag.size()), d_(diag.begin(), diag.end()), rows_(n_ * n_, 0), w_(n_), shared_(shared_visits),
          cap_(cap), index_(index)
    {
        mod_ = 1;
        for (u64 x : d_) {
            u128 p = static_cast<u128>(mod_) * x;
            if (p >> 63)
                throw ResourceLimitExceeded("index too large for enumeration", index_);
            mod_ = static_cast<u64>(p);
        }
        negc_.resize(n_);
        forward_ = true;
        for (std::size_t k = 0; k < n_; ++k) {
            negc_[k] = submod(0, reduce_mod(f.coeff(n_ - 1 - k), mod_), mod_);
            if (negc_[k] != 0)
                forward_ = false;
        }
        for (std::size_t i = 0; i < n_; ++i)
            rows_[i * n_ + i] = d_[i];
        if (forward_)
            for (std::size_t i = 1; i < n_; ++i)
                order_.push_back(i);
        else
            for (std::size_t i = n_; i-- > 1;)
                order_.push_back(i);
    }

    u64 run()
    {
        u64 total;
        if (order_.empty()) {
            total = full_check() ? 1 : 0;
        } else {
            total = descend(0);
        }
        flush();
        return total;
    }

  private:
    u64 descend(std::size_t level)
    {
        if (level == order_.size())
            return 1;
        std::size_t i = order_[level];
        u64* row = &rows_[i * n_];
        for (std::size_t j = 0; j < i; ++j)
            row[j] = 0;
        u64 total = 0;
        for (;;) {
            if (++pending_ >= flush_every)
                flush();
            if (row_ok(i))
                total += descend(level + 1);
            std::size_t j = i;
            while (j > 0) {
                --j;
                if (++row[j] < d_[j])
                    break;
                row[j] = 0;
                if (j == 0)
                    return total;
            }
        }
    }

    void flush()
    {
        u64 now = shared_.fetch_add(pending_, std::memory_order_relaxed) + pending_;
        pending_ = 0;
        if (now > cap_)
            throw ResourceLimitExceeded("enumeration exceeded resource cap of " + std::to_string(cap_) +
                                            " matrices at index " + std::to_string(index_),
                                        index_);
    }

    void load_t_image(std::size_t i)
    {
        u64 const* row = &rows_[i * n_];
        for (std::size_t k = 0; k + 1 < n_; ++k)
            w_[k] = (k + 1 <= i) ? row[k + 1] % mod_ : 0;
        w_[n_ - 1] = 0;
        if (!forward_) {
            u64 lead = row[0] % mod_;
            if (lead)
                for (std::size_t k = 0; k < n_; ++k)
                    w_[k] = addmod(w_[k], mulmod(lead, negc_[k], mod_), mod_);
        }
    }

    // Back-substitute w_ over coordinates hi, hi-1, ..., lo.
    bool reduce(std::size_t hi, std::size_t lo)
    {
        for (std::size_t i = hi + 1; i-- > lo;) {
            u64 di = d_[i];
            u64 wi = w_[i];
            if (wi % di)
                return false;
            u64 c = wi / di;
            if (!c)
                continue;
            u64 const* row = &rows_[i * n_];
            for (std::size_t j = 0; j < i; ++j)
                if (row[j])
                    w_[j] = submod(w_[j], mulmod(c, row[j], mod_), mod_);
            w_[i] = 0;
        }
        return true;
    }

    bool row_ok(std::size_t i)
    {
        if (forward_) {
            load_t_image(i);
            return reduce(i - 1, 0);
        }
        std::size_t lo = (i == 1) ? 0 : i;
        load_t_image(0);
        if (!reduce(n_ - 1, lo))
            return false;
        for (std::size_t r = i; r < n_; ++r) {
            load_t_image(r);
            if (!reduce(n_ - 1, lo))
                return false;
        }
        return true;
    }

    bool full_check()
    {
        for (std::size_t r = 0; r < n_; ++r) {
            load_t_image(r);
            if (!reduce(n_ - 1, 0))
                return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<u64> d_;
    u64 mod_;
    std::vector<u64> negc_;
    bool forward_;
    std::vector<std::size_t> order_;
    std::vector<u64> rows_;
    std::vector<u64> w_;
    std::atomic<u64>& shared_;
    u64 cap_;
    u64 index_;
    u64 pending_ = 0;
};

u64 product(std::span<u64 const> d)
{
    u128 p = 1;
    for (u64 x : d) {
        p *= x;
        if (p >> 63)
            throw ResourceLimitExceeded("index too large for enumeration");
    }
    return static_cast<u64>(p);
}

} // namespace

Integer count_ideals_with_diagonal(MonicPoly const& f, std::span<std::uint64_t const> diag,
                                   EnumerationOptions const& opts)
{
    if (diag.size() != f.degree())
        throw DimensionMismatch("diagonal length does not match degree of f");
    for (u64 d : diag)
        if (d == 0)
            throw std::invalid_argument("diagonal entries must be positive");
    std::atomic<u64> visits{0};
    u64 k = product(diag);
    IdealKernel kernel(f, diag, visits, opts.resource_cap, k);
    return Integer(static_cast<unsigned long>(kernel.run()));
}

IdealCountRecord count_ideals(MonicPoly const& f, std::uint64_t k, EnumerationOptions const& opts)
{
    if (k == 0)
        throw std::invalid_argument("index must be positive");
    auto tuples = diagonal_tuples(f.degree(), k);
    std::vector<u64> partial(tuples.size(), 0);
    std::atomic<u64> visits{0};
    auto errors = detail::parallel_for(tuples.size(), opts.jobs, [&](std::size_t u) {
        IdealKernel kernel(f, tuples[u], visits, opts.resource_cap, k);
        partial[u] = kernel.run();
    });
    for (auto const& e : errors)
        if (e)
            std::rethrow_exception(e);
    Integer total = 0;
    for (u64 c : partial)
        total += static_cast<unsigned long>(c);
    return IdealCountRecord{f, k, total};
}

PartialCounts count_ideals_upto_partial(MonicPoly const& f, std::uint64_t bound, EnumerationOptions const& opts)
{
    if (bound == 0)
        throw std::invalid_argument("bound must be positive");
    constexpr u64 block = 256;
    PartialCounts out;
    for (u64 lo = 1; lo <= bound; lo += block) {
        u64 hi = std::min(bound, lo + block - 1);
        struct Unit {
            u64 k;
            std::vector<u64> diag;
        };
        std::vector<Unit> units;
        for (u64 k = lo; k <= hi; ++k)
            for (auto& t : diagonal_tuples(f.degree(), k))
                units.push_back(Unit{k, std::move(t)});
        std::vector<std::atomic<u64>> visits(hi - lo + 1);
        std::vector<u64> partial(units.size(), 0);
        auto errors = detail::parallel_for(units.size(), opts.jobs, [&](std::size_t u) {
            IdealKernel kernel(f, units[u].diag, visits[units[u].k - lo], opts.resource_cap, units[u].k);
            partial[u] = kernel.run();
        });
        std::vector<Integer> sums(hi - lo + 1, 0);
        std::vector<bool> failed(hi - lo + 1, false);
        for (std::size_t u = 0; u < units.size(); ++u) {
            if (errors[u]) {
                try {
                    std::rethrow_exception(errors[u]);
                } catch (ResourceLimitExceeded const&) {
                    failed[units[u].k - lo] = true;
                }
                continue;
            }
            sums[units[u].k - lo] += static_cast<unsigned long>(partial[u]);
        }
        for (u64 k = lo; k <= hi; ++k) {
            if (failed[k - lo]) {
                out.stopped_at = k;
                return out;
            }
            out.counts.push_back(std::move(sums[k - lo]));
        }
    }
    return out;
}

std::vector<Integer> count_ideals_upto(MonicPoly const& f, std::uint64_t bound, EnumerationOptions const& opts)
{
    PartialCounts pc = count_ideals_upto_partial(f, bound, opts);
    if (pc.stopped_at)
        throw ResourceLimitExceeded("enumeration exceeded resource cap of " + std::to_string(opts.resource_cap) +
                                        " matrices at index " + std::to_string(*pc.stopped_at),
                                    *pc.stopped_at);
    return std::move(pc.counts);
}

} // namespace idealzeta
