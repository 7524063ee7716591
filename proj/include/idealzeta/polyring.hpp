#ifndef IDEALZETA_POLYRING_HPP_
#define IDEALZETA_POLYRING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealzeta/numeric.hpp"

namespace idealzeta {

/* A monic f = t^n + c_{n-1} t^{n-1} + ... + c_0 defining Z_f = Z[t]/(f).
 * Only the n lower coefficients are stored; the leading 1 is implicit.
 */
class MonicPoly {
  public:
    /// low_coeffs[i] is the coefficient of t^i, for i < n.
    explicit MonicPoly(std::vector<Integer> low_coeffs);

    static MonicPoly power_of_t(std::size_t n);

    std::size_t degree() const { return low_.size(); }
    std::vector<Integer> const& low_coeffs() const { return low_; }
    /// Coefficient of t^i for 0 <= i <= n (returns 1 at i == n).
    Integer coeff(std::size_t i) const;

    /// n when f = t^n literally.
    std::optional<std::size_t> as_power_of_t() const;
    /// lambda when f = t^2 (t - lambda) = t^3 - lambda t^2 with lambda != 0.
    std::optional<Integer> as_double_root_cubic() const;

    /// Evaluate f at x modulo m (m > 0); result in [0, m).
    Integer eval_mod(Integer const& x, Integer const& m) const;

    bool operator==(MonicPoly const&) const = default;

  private:
    std::vector<Integer> low_;
};

/// Parse an expression in t with integer coefficients, expand, and check
/// that the result is monic of positive degree.
MonicPoly parse_poly(std::string_view text);

/// Canonical text, e.g. "t^3 - 3*t^2". parse_poly(render(f)) == f.
std::string render(MonicPoly const& f);

/* An element of Z_f in the ordered basis B = {t^{n-1}, ..., t, 1}:
 * entries[j] (0-based) is the coefficient of t^{n-1-j}.
 */
struct RingVector {
    std::vector<Integer> entries;

    RingVector() = default;
    explicit RingVector(std::vector<Integer> e) : entries(std::move(e)) {}
    static RingVector zero(std::size_t n) { return RingVector(std::vector<Integer>(n, 0)); }
    /// Standard basis vector, 0-based: unit(n, j) represents t^{n-1-j}.
    static RingVector unit(std::size_t n, std::size_t j);
    /// Vector of the polynomial sum_i poly[i] t^i, which must have degree < n.
    static RingVector from_poly(std::span<Integer const> poly, std::size_t n);

    std::size_t size() const { return entries.size(); }
    Integer const& operator[](std::size_t j) const { return entries[j]; }
    Integer& operator[](std::size_t j) { return entries[j]; }
    bool is_zero() const;

    bool operator==(RingVector const&) const = default;
};

RingVector operator+(RingVector const& a, RingVector const& b);
RingVector operator-(RingVector const& a, RingVector const& b);
RingVector operator*(Integer const& s, RingVector const& a);

/* Multiplication by t as an n x n integer matrix acting on columns:
 * column j is the image of e_j. Column 0 holds the reduction of t^n, the
 * remaining columns shift e_j to e_{j-1}.
 */
struct StructureConstants {
    std::vector<std::vector<Integer>> mul_by_t; // [row][col]

    explicit StructureConstants(MonicPoly const& f);

    std::size_t dimension() const { return mul_by_t.size(); }
    RingVector apply(RingVector const& v) const;
    /// beta(e_i, e_j) for all i, j, derived by iterating mul_by_t.
    std::vector<std::vector<RingVector>> product_table() const;
};

RingVector mul_by_t(RingVector const& v, MonicPoly const& f);
RingVector mul_mod_f(RingVector const& v, RingVector const& w, MonicPoly const& f);

} // namespace idealzeta

#endif /* IDEALZETA_POLYRING_HPP_ */
