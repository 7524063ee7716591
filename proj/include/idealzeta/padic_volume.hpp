#ifndef IDEALZETA_PADIC_VOLUME_HPP_
#define IDEALZETA_PADIC_VOLUME_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "idealzeta/numeric.hpp"
#include "idealzeta/polyring.hpp"

namespace idealzeta {

struct VolumeQuery {
    std::uint64_t p;
    MonicPoly f;
    std::vector<unsigned> b; ///< exponents of the diagonal p^{b_1}, ..., p^{b_n}
};

enum class VolumeMethod {
    automatic,  ///< exhaustive when the residue space fits under the cap, else fiber
    exhaustive, ///< count every sub-diagonal residue tuple modulo p^level
    fiber,      ///< count ideal HNFs with diagonal p^b and scale by the fiber size
};

std::string_view to_string(VolumeMethod m);

struct VolumeOptions {
    VolumeMethod method = VolumeMethod::automatic;
    std::uint64_t resource_cap = 100'000'000;
    unsigned jobs = 1;
    /// Residue level; defaults to b_1 + ... + b_n and may only be raised.
    std::optional<unsigned> level;
};

/* Volume of the set of lower-triangular matrices over Z_p with diagonal
 * p^{b_i} whose rows generate an ideal of Z_f (sub-diagonal entries carry
 * the normalized Haar measure).
 *
 * Invariant: value == witness_count / p^{level * n(n-1)/2}.
 */
struct ExactVolume {
    Rational value;
    unsigned level = 0;
    Integer witness_count;
    VolumeMethod method = VolumeMethod::exhaustive;
};

/* Residue tuples are counted at level sum(b): the row lattice contains
 * det * Z^n = p^{sum b} Z^n, so the ideal condition only sees entries
 * modulo p^{sum b}.
 *
 * The fiber method uses that the condition depends only on the row
 * lattice, and each lattice with diagonal p^b is hit by exactly
 * p^{level * n(n-1)/2 - sum_j (n-j) b_j} residue tuples.
 */
ExactVolume mu_exact(VolumeQuery const& q, VolumeOptions const& opts = {});

/// Closed form for f = t^n: p^{-((n-2)b_1 + (n-3)b_2 + ... + b_{n-2})} when
/// b is non-decreasing, 0 otherwise.
Rational mu_closed_tn(std::uint64_t p, std::size_t n, std::span<unsigned const> b);

/* Published closed form for f = t^2 (t - lambda), p not dividing lambda:
 * p^{-b_1 - 2 b_2 - ceil((b_1 - b_2)/2)} when b_2 <= b_1, else 0.
 *
 * Paper mode only. It disagrees with mu_exact on some inputs and must not
 * be used as ground truth. Throws InputError when p divides lambda.
 */
Rational mu_closed_cubic(std::uint64_t p, Integer const& lambda, std::array<unsigned, 3> const& b);

/* The five published valuation inequalities for f = t^2 (t - lambda),
 * evaluated on residues at level b_1 + b_2 + b_3 (a residue that is 0 at
 * that level counts as having valuation >= level):
 *
 *   b_2       <= v(p^{b_3} + lambda a_31)
 *   b_1 + b_2 <= v(p^{b_2} a_32 - (p^{b_3} + lambda a_31) a_21)
 *   b_2       <= v(a_21)
 *   b_1 + b_2 <= v(p^{2 b_2} - lambda a_21^2)
 *   b_2       <= b_1
 */
bool cubic_membership_by_inequalities(std::uint64_t p, Integer const& lambda, std::array<unsigned, 3> const& b,
                                      Integer const& a21, Integer const& a31, Integer const& a32);

/// a(p^0), ..., a(p^E) rebuilt from volumes:
/// a(p^e) = sum over |b| = e of p^{(n-1)b_1 + (n-2)b_2 + ... + b_{n-1}} mu(b).
std::vector<Integer> local_factor_from_volumes(std::uint64_t p, MonicPoly const& f, unsigned max_exponent,
                                               VolumeOptions const& opts = {});

/// All b in N^n with b_1 + ... + b_n == total, lexicographic.
std::vector<std::vector<unsigned>> exponent_tuples(std::size_t n, unsigned total);

} // namespace idealzeta

#endif /* IDEALZETA_PADIC_VOLUME_HPP_ */
