#ifndef IDEALZETA_ZETA_SERIES_HPP_
#define IDEALZETA_ZETA_SERIES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "idealzeta/laurent.hpp"
#include "idealzeta/numeric.hpp"

namespace idealzeta {

/// Coefficients a(1), ..., a(B) of a Dirichlet series sum a(k) k^{-s}.
class DirichletCoeffs {
  public:
    DirichletCoeffs() = default;
    explicit DirichletCoeffs(std::vector<Integer> a) : a_(std::move(a)) {}
    static DirichletCoeffs delta(std::uint64_t bound);

    std::uint64_t bound() const { return a_.size(); }
    /// 1-based.
    Integer const& operator()(std::uint64_t k) const { return a_.at(k - 1); }
    Integer& operator()(std::uint64_t k) { return a_.at(k - 1); }
    std::vector<Integer> const& values() const { return a_; }

    bool operator==(DirichletCoeffs const&) const = default;

  private:
    std::vector<Integer> a_;
};

/// zeta(a s - b): coefficient m^b at k = m^a, zero elsewhere.
DirichletCoeffs zeta_shifted(unsigned a, unsigned b, std::uint64_t bound);

/// Dirichlet convolution (A * C)(k) = sum_{d | k} A(d) C(k/d).
DirichletCoeffs dirichlet_mul(DirichletCoeffs const& a, DirichletCoeffs const& c);

/// zeta(s) zeta(2s-1) ... zeta(ns-(n-1)), the ideal zeta function of Z[t]/(t^n).
DirichletCoeffs theorem1_series(unsigned n, std::uint64_t bound);

/// prod_{j=1}^n (1 - p^{j-1} x^j)^{-1} as a rational function in x.
LocalFactorRF local_tn_rf(unsigned n);
/// Its coefficients of x^0..x^E, as Laurent polynomials in p.
XSeries<LaurentPoly> local_tn(unsigned n, unsigned max_exponent);
/// Same, at a concrete prime.
std::vector<Integer> local_tn(unsigned n, std::uint64_t p, unsigned max_exponent);

/* Published local factor for f = t^2 (t - lambda), p not dividing lambda:
 *   (1 - x^2 + p^{-1} x - p^{-1} x^2 + x^2 - x^3) / ((1-x)^2 (1-p x^2) (1-x^4))
 * Paper mode only: its x^1 coefficient is 2 + 1/p, not an ideal count.
 */
LocalFactorRF local_cubic_coprime_rf();
XSeries<LaurentPoly> local_cubic_coprime(unsigned max_exponent);
std::vector<Rational> local_cubic_coprime(std::uint64_t p, unsigned max_exponent);

/* Truncated power series in x whose coefficients are polynomials in p with
 * non-negative exponents; terms of x-degree above `order` are dropped.
 */
class ConeSeries {
  public:
    explicit ConeSeries(unsigned order) : order_(order), c_(order + 1) {}
    static ConeSeries monomial(unsigned order, unsigned p_exp, unsigned x_exp);
    /// (1 - p^a x^b)^{-1}, b >= 1.
    static ConeSeries geometric(unsigned order, unsigned p_exp, unsigned x_exp);

    unsigned order() const { return order_; }
    Integer coefficient(unsigned p_exp, unsigned x_exp) const;

    ConeSeries& operator+=(ConeSeries const& o);
    friend ConeSeries operator*(ConeSeries const& a, ConeSeries const& b);
    bool operator==(ConeSeries const&) const;

  private:
    void normalize();
    unsigned order_;
    std::vector<std::vector<Integer>> c_; // [x-degree][p-degree]
};

/* Checks, for each b_{k-1} in {0..order}, that the iterated chain sum
 *   sum_{b_k >= b_{k-1}} (px)^{b_k} ... sum_{b_{n-1} >= b_{n-2}} (px)^{b_{n-1}} sum_{b_n >= b_{n-1}} x^{b_n}
 * equals (p^{n-k} x^{n-k+1})^{b_{k-1}} prod_{j=1}^{n-k+1} (1 - p^{j-1} x^j)^{-1}
 * up to x-degree `order`.
 */
bool summation_lemma_check(unsigned n, unsigned k, unsigned order);
/// The chain-sum side alone, for a fixed b_{k-1}.
ConeSeries chain_sum(unsigned n, unsigned k, unsigned start, unsigned order);
/// The product side alone, for a fixed b_{k-1}.
ConeSeries chain_sum_closed_form(unsigned n, unsigned k, unsigned start, unsigned order);

/// Coefficients indexed by k; entries whose k has a prime factor above the
/// supplied range are absent rather than zero.
struct PartialDirichletCoeffs {
    std::vector<std::optional<Integer>> a; // index k-1
    std::uint64_t bound() const { return a.size(); }
    std::optional<Integer> const& operator()(std::uint64_t k) const { return a.at(k - 1); }
};

/// Multiplicative assembly a(k) = prod_{p^e || k} local_p(e). Every prime
/// <= max_prime must be supplied to exponent floor(log_p bound).
PartialDirichletCoeffs euler_assemble(std::map<std::uint64_t, std::vector<Integer>> const& local_factors,
                                      std::uint64_t max_prime, std::uint64_t bound);

struct AsymptoticRow {
    std::uint64_t bound;
    Integer partial_sum;
    double ratio; ///< partial_sum / (c B (log B)^{n-1}), c = 1/(n!(n-1)!)
};

/// Rows at B = 10, 100, ... up to the series bound. Reports, never judges.
std::vector<AsymptoticRow> asymptotic_report(DirichletCoeffs const& a, unsigned n);
/// Same, at explicit checkpoints (each <= a.bound()).
std::vector<AsymptoticRow> asymptotic_report(DirichletCoeffs const& a, unsigned n,
                                             std::vector<std::uint64_t> const& checkpoints);

} // namespace idealzeta

#endif /* IDEALZETA_ZETA_SERIES_HPP_ */
