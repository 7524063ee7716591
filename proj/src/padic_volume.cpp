#include "idealzeta/padic_volume.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>

#include "idealzeta/errors.hpp"
#include "idealzeta/lattice_ideals.hpp"
#include "parallel.hpp"

namespace idealzeta {

std::string_view to_string(VolumeMethod m)
{
    switch (m) {
    case VolumeMethod::automatic:
        return "automatic";
    case VolumeMethod::exhaustive:
        return "exhaustive";
    case VolumeMethod::fiber:
        return "fiber";
    }
    return "?";
}

std::vector<std::vector<unsigned>> exponent_tuples(std::size_t n, unsigned total)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest) -> void {
        if (cur.size() + 1 == n) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (unsigned x = 0; x <= rest; ++x) {
            cur.push_back(x);
            self(self, rest - x);
            cur.pop_back();
        }
    };
    if (n == 0)
        throw std::invalid_argument("exponent_tuples: n must be positive");
    rec(rec, total);
    return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void validate(VolumeQuery const& q)
{
    if (!is_prime(q.p))
        throw InputError(std::to_string(q.p) + " is not prime");
    if (q.b.size() != q.f.degree())
        throw DimensionMismatch("exponent tuple length does not match degree of f");
}

// sum_j (n-1-j) b_j, 0-based: the number of p-adic digits pinned by HNF reduction.
unsigned long hnf_weight(std::span<unsigned const> b)
{
    unsigned long w = 0;
    std::size_t n = b.size();
    for (std::size_t j = 0; j < n; ++j)
        w += static_cast<unsigned long>(n - 1 - j) * b[j];
    return w;
}

/* Brute-force residue counter: every sub-diagonal tuple modulo `mod`, each
 * tested by solving t * v_i = sum_k c_k v_k through back-substitution.
 * Kept separate from the pruned HNF kernel so the two stay independent.
 */
class ResidueCounter {
  public:
    ResidueCounter(MonicPoly const& f, std::vector<u64> diag, u64 mod)
        : n_(diag.size()), d_(std::move(diag)), mod_(mod), negc_(n_), rows_(n_ * n_, 0), w_(n_)
    {
        for (std::size_t k = 0; k < n_; ++k) {
            Integer c;
            mpz_fdiv_r_ui(c.get_mpz_t(), Integer(-f.coeff(n_ - 1 - k)).get_mpz_t(), mod_);
            negc_[k] = c.get_ui();
        }
        for (std::size_t i = 0; i < n_; ++i)
            rows_[i * n_ + i] = d_[i] % mod_;
    }

    /// Count tuples whose first sub-diagonal entry equals `first`.
    u64 count_with_first(u64 first)
    {
        std::size_t nsub = n_ * (n_ - 1) / 2;
        std::vector<u64> a(nsub, 0);
        a[0] = first;
        u64 total = 0;
        for (;;) {
            load(a);
            if (ideal())
                ++total;
            bool done = true;
            for (std::size_t pos = nsub; pos-- > 1;) {
                if (++a[pos] < mod_) {
                    done = false;
                    break;
                }
                a[pos] = 0;
            }
            if (done)
                return total;
        }
    }

    bool ideal()
    {
        for (std::size_t i = 0; i < n_; ++i) {
            u64 const* row = &rows_[i * n_];
            for (std::size_t k = 0; k + 1 < n_; ++k)
                w_[k] = row[k + 1];
            w_[n_ - 1] = 0;
            for (std::size_t k = 0; k < n_; ++k)
                w_[k] = static_cast<u64>((static_cast<u128>(row[0]) * negc_[k] + w_[k]) % mod_);
            for (std::size_t r = n_; r-- > 0;) {
                if (w_[r] % d_[r])
                    return false;
                u64 c = w_[r] / d_[r];
                u64 const* vr = &rows_[r * n_];
                for (std::size_t j = 0; j < r; ++j) {
                    u64 s = static_cast<u64>(static_cast<u128>(c) * vr[j] % mod_);
                    w_[j] = w_[j] >= s ? w_[j] - s : w_[j] + (mod_ - s);
                }
            }
        }
        return true;
    }

  private:
    void load(std::vector<u64> const& a)
    {
        std::size_t idx = 0;
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                rows_[i * n_ + j] = a[idx++];
    }

    std::size_t n_;
    std::vector<u64> d_;
    u64 mod_;
    std::vector<u64> negc_;
    std::vector<u64> rows_;
    std::vector<u64> w_;
};

ExactVolume exhaustive_volume(VolumeQuery const& q, unsigned level, VolumeOptions const& opts)
{
    std::size_t n = q.f.degree();
    std::size_t nsub = n * (n - 1) / 2;
    Integer space = ipow(Integer(static_cast<unsigned long>(q.p)), static_cast<unsigned long>(level) * nsub);
    if (space > Integer(static_cast<unsigned long>(opts.resource_cap)))
        throw ResourceLimitExceeded("residue space " + space.get_str() + " exceeds resource cap " +
                                    std::to_string(opts.resource_cap));
    u64 mod = to_u64(ipow(Integer(static_cast<unsigned long>(q.p)), level));
    std::vector<u64> diag(n);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = to_u64(ipow(Integer(static_cast<unsigned long>(q.p)), q.b[i]));

    Integer count = 0;
    if (nsub == 0) {
        ResidueCounter rc(q.f, diag, mod);
        count = rc.ideal() ? 1 : 0;
    } else {
        std::vector<u64> partial(mod, 0);
        auto errors = detail::parallel_for(mod, opts.jobs, [&](std::size_t first) {
            ResidueCounter rc(q.f, diag, mod);
            partial[first] = rc.count_with_first(first);
        });
        for (auto const& e : errors)
            if (e)
                std::rethrow_exception(e);
        for (u64 c : partial)
            count += static_cast<unsigned long>(c);
    }
    ExactVolume v;
    v.level = level;
    v.witness_count = count;
    v.value = Rational(count, space);
    v.value.canonicalize();
    v.method = VolumeMethod::exhaustive;
    return v;
}

ExactVolume fiber_volume(VolumeQuery const& q, unsigned level, VolumeOptions const& opts)
{
    std::size_t n = q.f.degree();
    std::size_t nsub = n * (n - 1) / 2;
    Integer pz(static_cast<unsigned long>(q.p));
    std::vector<u64> diag(n);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = to_u64(ipow(pz, q.b[i]));
    EnumerationOptions eo;
    eo.resource_cap = opts.resource_cap;
    Integer hnfs = count_ideals_with_diagonal(q.f, diag, eo);
    unsigned long w = hnf_weight(q.b);
    ExactVolume v;
    v.level = level;
    v.witness_count = hnfs * ipow(pz, static_cast<unsigned long>(level) * nsub - w);
    v.value = Rational(hnfs, ipow(pz, w));
    v.value.canonicalize();
    v.method = VolumeMethod::fiber;
    return v;
}

} // namespace

ExactVolume mu_exact(VolumeQuery const& q, VolumeOptions const& opts)
{
    validate(q);
    unsigned total = std::accumulate(q.b.begin(), q.b.end(), 0u);
    unsigned level = opts.level.value_or(total);
    if (level < total)
        throw std::invalid_argument("level must be at least b_1 + ... + b_n");

    VolumeMethod method = opts.method;
    if (method == VolumeMethod::automatic) {
        std::size_t nsub = q.f.degree() * (q.f.degree() - 1) / 2;
        Integer space = ipow(Integer(static_cast<unsigned long>(q.p)), static_cast<unsigned long>(level) * nsub);
        method = space <= Integer(static_cast<unsigned long>(opts.resource_cap)) ? VolumeMethod::exhaustive
                                                                                 : VolumeMethod::fiber;
    }
    return method == VolumeMethod::exhaustive ? exhaustive_volume(q, level, opts) : fiber_volume(q, level, opts);
}

Rational mu_closed_tn(std::uint64_t p, std::size_t n, std::span<unsigned const> b)
{
    if (b.size() != n || n == 0)
        throw DimensionMismatch("exponent tuple length must equal n");
    for (std::size_t i = 1; i < n; ++i)
        if (b[i - 1] > b[i])
            return 0;
    // (n-2) b_1 + (n-3) b_2 + ... + 1 * b_{n-2}
    long e = 0;
    for (std::size_t i = 0; i + 2 < n; ++i)
        e += static_cast<long>(n - 2 - i) * b[i];
    return rpow(Rational(static_cast<unsigned long>(p)), -e);
}

Rational mu_closed_cubic(std::uint64_t p, Integer const& lambda, std::array<unsigned, 3> const& b)
{
    if (lambda == 0)
        throw InputError("lambda must be nonzero");
    if (mpz_divisible_ui_p(lambda.get_mpz_t(), p))
        throw InputError("p divides lambda; use the exact volume");
    if (b[1] > b[0])
        return 0;
    long diff = static_cast<long>(b[0]) - static_cast<long>(b[1]);
    long e = static_cast<long>(b[0]) + 2L * b[1] + (diff + 1) / 2;
    return rpow(Rational(static_cast<unsigned long>(p)), -e);
}

bool cubic_membership_by_inequalities(std::uint64_t p, Integer const& lambda, std::array<unsigned, 3> const& b,
                                      Integer const& a21, Integer const& a31, Integer const& a32)
{
    if (lambda == 0)
        throw InputError("lambda must be nonzero");
    unsigned level = b[0] + b[1] + b[2];
    Integer pz(static_cast<unsigned long>(p));
    Integer mod = ipow(pz, level);
    auto v = [&](Integer const& x) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
        return valuation(r, pz, level);
    };
    auto need = [&](unsigned threshold, Integer const& x) {
        if (threshold > level)
            throw std::logic_error("valuation threshold exceeds residue level");
        return threshold <= v(x);
    };
    Integer pb2 = ipow(pz, b[1]), pb3 = ipow(pz, b[2]);
    Integer s = pb3 + lambda * a31;
    return need(b[1], s)                                   //
           && need(b[0] + b[1], pb2 * a32 - s * a21)       //
           && need(b[1], a21)                              //
           && need(b[0] + b[1], pb2 * pb2 - lambda * a21 * a21) //
           && b[1] <= b[0];
}

std::vector<Integer> local_factor_from_volumes(std::uint64_t p, MonicPoly const& f, unsigned max_exponent,
                                               VolumeOptions const& opts)
{
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not prime");
    std::size_t n = f.degree();
    Integer pz(static_cast<unsigned long>(p));
    std::vector<Integer> out;
    for (unsigned e = 0; e <= max_exponent; ++e) {
        Rational acc = 0;
        for (auto const& b : exponent_tuples(n, e)) {
            ExactVolume mu = mu_exact(VolumeQuery{p, f, b}, opts);
            if (mu.value == 0)
                continue;
            acc += Rational(ipow(pz, hnf_weight(b))) * mu.value;
        }
        if (acc.get_den() != 1)
            throw std::logic_error("volume-weighted local coefficient is not an integer");
        out.push_back(acc.get_num());
    }
    return out;
}

} // namespace idealzeta
