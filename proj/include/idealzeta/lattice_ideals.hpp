#ifndef IDEALZETA_LATTICE_IDEALS_HPP_
#define IDEALZETA_LATTICE_IDEALS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "idealzeta/hnf.hpp"
#include "idealzeta/polyring.hpp"

namespace idealzeta {

struct EnumerationOptions {
    unsigned jobs = 1;
    /// Ceiling on (partial) matrices examined per index k.
    std::uint64_t resource_cap = 100'000'000;
};

/// Rows of M generate an ideal of Z_f: t * v_j lies in the row lattice for
/// every row v_j. Closure under t suffices because t generates Z_f over Z.
bool is_ideal(LowerTriangular const& m, MonicPoly const& f);

/* Every HNF of dimension n and determinant k, exactly once. Order is
 * lexicographic in the diagonal tuple (d_1, ..., d_n), then in the
 * sub-diagonal entries in row-major order a_21, a_31, a_32, ...
 */
void for_each_hnf(std::size_t n, std::uint64_t k, std::function<void(HNFMatrix const&)> const& visit);
std::vector<HNFMatrix> enumerate_hnf(std::size_t n, std::uint64_t k);

/// Ordered factorizations of k into n positive factors, lexicographic.
std::vector<std::vector<std::uint64_t>> diagonal_tuples(std::size_t n, std::uint64_t k);

struct IdealCountRecord {
    MonicPoly f;
    std::uint64_t k;
    Integer count;
};

/// Number of ideals of index k in Z_f (a^ideal_f(k)).
IdealCountRecord count_ideals(MonicPoly const& f, std::uint64_t k, EnumerationOptions const& opts = {});

/// Ideal HNFs with the given diagonal.
Integer count_ideals_with_diagonal(MonicPoly const& f, std::span<std::uint64_t const> diag,
                                   EnumerationOptions const& opts = {});

/// a(1), ..., a(B).
std::vector<Integer> count_ideals_upto(MonicPoly const& f, std::uint64_t bound,
                                       EnumerationOptions const& opts = {});

struct PartialCounts {
    std::vector<Integer> counts;            ///< a(1..counts.size()), all complete
    std::optional<std::uint64_t> stopped_at; ///< first k whose enumeration hit the cap
};

/// Like count_ideals_upto, but returns the complete prefix instead of
/// throwing when some k exceeds the resource cap.
PartialCounts count_ideals_upto_partial(MonicPoly const& f, std::uint64_t bound,
                                        EnumerationOptions const& opts = {});

} // namespace idealzeta

#endif /* IDEALZETA_LATTICE_IDEALS_HPP_ */
