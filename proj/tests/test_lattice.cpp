#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "idealzeta/errors.hpp"
#include "idealzeta/lattice_ideals.hpp"
#include "idealzeta/zeta_series.hpp"

using namespace idealzeta;

namespace {

RingVector vec(std::initializer_list<long> xs)
{
    RingVector v = RingVector::zero(xs.size());
    std::size_t i = 0;
    for (long x : xs)
        v[i++] = x;
    return v;
}

// Ideal test through the HNF of rows together with t * rows: the lattice is
// t-stable iff adding those vectors does not change it.
bool ideal_by_regeneration(LowerTriangular const& m, MonicPoly const& f)
{
    std::vector<RingVector> gens;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        gens.push_back(m.row(i));
        gens.push_back(mul_by_t(m.row(i), f));
    }
    return hnf_from_generators(gens) == reduce(m);
}

Integer naive_count(MonicPoly const& f, std::uint64_t k)
{
    Integer c = 0;
    for_each_hnf(f.degree(), k, [&](HNFMatrix const& m) {
        if (ideal_by_regeneration(m, f))
            ++c;
    });
    return c;
}

std::vector<RingVector> rows_of(LowerTriangular const& m)
{
    std::vector<RingVector> r;
    for (std::size_t i = 0; i < m.dimension(); ++i)
        r.push_back(m.row(i));
    return r;
}

std::uint64_t roots_mod_p(MonicPoly const& f, std::uint64_t p)
{
    std::uint64_t r = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        if (f.eval_mod(x, p) == 0)
            ++r;
    return r;
}

} // namespace

TEST_CASE("lattice_contains examples")
{
    LowerTriangular m({2, 3}, {1});
    CHECK(lattice_contains(m, vec({3, 3})));
    CHECK(lattice_contains(m, vec({0, 0})));
    CHECK_FALSE(lattice_contains(m, vec({1, 0})));
    CHECK(lattice_contains(m, vec({-4, 6})));
    CHECK_FALSE(lattice_contains(m, vec({1, 2})));
    CHECK_THROWS_AS(lattice_contains(m, vec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("is_ideal examples")
{
    MonicPoly t2 = MonicPoly::power_of_t(2);
    CHECK(is_ideal(LowerTriangular({2, 2}, {0}), t2));
    CHECK(is_ideal(LowerTriangular({1, 2}, {0}), t2));
    CHECK_FALSE(is_ideal(LowerTriangular({2, 1}, {0}), t2));
    CHECK_FALSE(is_ideal(LowerTriangular({2, 1}, {1}), t2));
    CHECK(is_ideal(LowerTriangular::identity(3), parse_poly("t^3 - 7*t + 1")));

    int passing = 0;
    for (auto const& m : enumerate_hnf(2, 2))
        passing += is_ideal(m, t2);
    CHECK(passing == 1);

    CHECK_THROWS_AS(is_ideal(LowerTriangular::identity(3), t2), DimensionMismatch);
}

TEST_CASE("enumerate_hnf examples and ordering")
{
    auto one = enumerate_hnf(1, 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].diag(0) == 5);

    auto two = enumerate_hnf(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == HNFMatrix({1, 2}, {0}));
    CHECK(two[1] == HNFMatrix({2, 1}, {0}));
    CHECK(two[2] == HNFMatrix({2, 1}, {1}));

    auto id = enumerate_hnf(3, 1);
    REQUIRE(id.size() == 1);
    CHECK(id[0] == LowerTriangular::identity(3));

    CHECK(diagonal_tuples(2, 6) == std::vector<std::vector<std::uint64_t>>{{1, 6}, {2, 3}, {3, 2}, {6, 1}});
}

TEST_CASE("HNF enumeration is complete and duplicate-free")
{
    for (unsigned n = 1; n <= 3; ++n) {
        std::uint64_t bound = n == 3 ? 24 : 60;
        DirichletCoeffs sub = DirichletCoeffs::delta(bound);
        for (unsigned j = 0; j < n; ++j)
            sub = dirichlet_mul(sub, zeta_shifted(1, j, bound));
        for (std::uint64_t k = 1; k <= bound; ++k) {
            auto all = enumerate_hnf(n, k);
            CHECK(Integer(all.size()) == sub(k));
            std::set<std::vector<Integer>> seen;
            for (auto const& m : all) {
                CHECK(m.determinant() == k);
                CHECK(hnf_from_generators(rows_of(m)) == m);
                auto key = m.diagonal();
                key.insert(key.end(), m.subdiagonal().begin(), m.subdiagonal().end());
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("count_ideals examples")
{
    CHECK(count_ideals(parse_poly("t"), 7).count == 1);
    CHECK(count_ideals(parse_poly("t^2"), 4).count == 3);
    CHECK(count_ideals(parse_poly("t^2*(t-1)"), 2).count == 2);
    CHECK(count_ideals_upto(parse_poly("t"), 6) == std::vector<Integer>(6, 1));
    // x^2 coefficient of prod_j (1 - 2^{j-1} x^j)^{-1} is 1 + 2
    CHECK(count_ideals_upto(parse_poly("t^3"), 4) == std::vector<Integer>{1, 1, 1, 3});

    // sum over m^2 | k of m for t^2
    auto t2 = count_ideals_upto(parse_poly("t^2"), 100);
    for (std::uint64_t k = 1; k <= 100; ++k) {
        Integer expected = 0;
        for (std::uint64_t m = 1; m * m <= k; ++m)
            if (k % (m * m) == 0)
                expected += m;
        CHECK(t2[k - 1] == expected);
    }
}

TEST_CASE("pruned kernel agrees with regeneration oracle")
{
    std::vector<std::string> polys = {"t^2", "t^2+1", "t^2-t", "t^3", "t^3-t", "t^2*(t-1)", "t^2*(t-2)",
                                      "t^3+2*t+1", "t^3-3*t^2+5", "t^4", "t^4+t+1", "t^2*(t-3)"};
    for (auto const& s : polys) {
        MonicPoly f = parse_poly(s);
        std::uint64_t bound = f.degree() == 4 ? 16 : 36;
        auto fast = count_ideals_upto(f, bound);
        for (std::uint64_t k = 1; k <= bound; ++k) {
            INFO(s << " k=" << k);
            CHECK(fast[k - 1] == naive_count(f, k));
        }
    }
}

TEST_CASE("multiplicativity and prime-index law")
{
    std::vector<std::string> polys = {"t^2+1", "t^3-t", "t^2*(t-1)", "t^3+2*t+1", "t^3"};
    for (auto const& s : polys) {
        MonicPoly f = parse_poly(s);
        auto a = count_ideals_upto(f, 120);
        for (std::uint64_t m = 2; m <= 120; ++m)
            for (std::uint64_t k = 2; m * k <= 120; ++k)
                if (std::gcd(m, k) == 1)
                    CHECK(a[m * k - 1] == a[m - 1] * a[k - 1]);
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
            CHECK(a[p - 1] == roots_mod_p(f, p));
    }
}

TEST_CASE("ideal test is invariant under change of basis")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> small(-3, 3);
    for (std::string s : {"t^3", "t^2*(t-1)", "t^3+t+1"}) {
        MonicPoly f = parse_poly(s);
        for (std::uint64_t k : {4, 8, 9, 12}) {
            for (auto const& m : enumerate_hnf(3, k)) {
                bool verdict = is_ideal(m, f);

                // unipotent lower-triangular change of basis keeps triangularity
                LowerTriangular skew = m;
                for (std::size_t i = 1; i < 3; ++i)
                    for (std::size_t j = 0; j < i; ++j) {
                        RingVector r = skew.row(i) + Integer(small(rng)) * skew.row(j);
                        for (std::size_t c = 0; c < i; ++c)
                            skew.sub(i, c) = r[c];
                    }
                CHECK(is_ideal(skew, f) == verdict);
                CHECK(reduce(skew) == m);

                // general unimodular mixing, then back to normal form
                std::vector<RingVector> rows = rows_of(m);
                for (int step = 0; step < 6; ++step) {
                    std::size_t a = rng() % 3, b = (a + 1 + rng() % 2) % 3;
                    rows[a] = rows[a] + Integer(small(rng)) * rows[b];
                    if (step % 3 == 0)
                        std::swap(rows[a], rows[b]);
                }
                HNFMatrix back = hnf_from_generators(rows);
                CHECK(back == m);
                CHECK(is_ideal(back, f) == verdict);
            }
        }
    }
}

TEST_CASE("residues in a lattice of determinant p^L make up a p^-L fraction")
{
    for (std::uint64_t p : {2, 3}) {
        for (auto const& m : enumerate_hnf(2, p * p)) {
            // lattice contains p^2 Z^2, so count representatives mod p^2
            std::uint64_t q = p * p, hits = 0;
            for (std::uint64_t x = 0; x < q; ++x)
                for (std::uint64_t y = 0; y < q; ++y)
                    hits += lattice_contains(m, vec({long(x), long(y)}));
            CHECK(hits * p * p == q * q);
        }
    }
}

TEST_CASE("resource cap and partial counts")
{
    EnumerationOptions tight;
    tight.resource_cap = 50;
    MonicPoly t3 = MonicPoly::power_of_t(3);
    CHECK_THROWS_AS(count_ideals(t3, 64, tight), ResourceLimitExceeded);
    CHECK_THROWS_AS(count_ideals_upto(t3, 64, tight), ResourceLimitExceeded);

    PartialCounts part = count_ideals_upto_partial(t3, 64, tight);
    REQUIRE(part.stopped_at.has_value());
    CHECK(part.counts.size() == *part.stopped_at - 1);
    auto full = count_ideals_upto(t3, part.counts.size());
    CHECK(part.counts == full);

    PartialCounts whole = count_ideals_upto_partial(t3, 30);
    CHECK_FALSE(whole.stopped_at.has_value());
    CHECK(whole.counts.size() == 30);
}

TEST_CASE("parallel counting is deterministic")
{
    EnumerationOptions four;
    four.jobs = 4;
    for (std::string s : {"t^3", "t^2*(t-1)", "t^4+t+1"}) {
        MonicPoly f = parse_poly(s);
        std::uint64_t bound = f.degree() == 4 ? 48 : 200;
        CHECK(count_ideals_upto(f, bound) == count_ideals_upto(f, bound, four));
        CHECK(count_ideals(f, 32).count == count_ideals(f, 32, four).count);
    }
}
