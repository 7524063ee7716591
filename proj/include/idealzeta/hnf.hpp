#ifndef IDEALZETA_HNF_HPP_
#define IDEALZETA_HNF_HPP_

#include <cstddef>
#include <vector>

#include "idealzeta/numeric.hpp"
#include "idealzeta/polyring.hpp"

namespace idealzeta {

/* Lower-triangular integer matrix with positive diagonal. Its rows generate
 * a full-rank sublattice of Z^n of index prod(diag).
 *
 * Indices are 0-based: entry (i, j) with j < i is the sub-diagonal entry
 * a_{i+1,j+1} in the usual 1-based notation.
 */
class LowerTriangular {
  public:
    LowerTriangular(std::vector<Integer> diag, std::vector<Integer> sub);
    static LowerTriangular identity(std::size_t n);

    std::size_t dimension() const { return diag_.size(); }
    Integer const& diag(std::size_t i) const { return diag_[i]; }
    /// Sub-diagonal entry, requires j < i.
    Integer const& sub(std::size_t i, std::size_t j) const { return sub_[i * (i - 1) / 2 + j]; }
    Integer& sub(std::size_t i, std::size_t j) { return sub_[i * (i - 1) / 2 + j]; }
    Integer at(std::size_t i, std::size_t j) const;
    RingVector row(std::size_t i) const;

    std::vector<Integer> const& diagonal() const { return diag_; }
    /// Sub-diagonal entries in row-major order a_21, a_31, a_32, a_41, ...
    std::vector<Integer> const& subdiagonal() const { return sub_; }

    Integer determinant() const;
    /// Every sub-diagonal entry in column j lies in [0, diag(j)).
    bool is_reduced() const;

    bool operator==(LowerTriangular const&) const = default;

  private:
    std::vector<Integer> diag_;
    std::vector<Integer> sub_;
};

/* Lower-triangular Hermite normal form: a LowerTriangular that is reduced.
 * Distinct values generate distinct sublattices.
 */
class HNFMatrix : public LowerTriangular {
  public:
    /// Throws std::invalid_argument unless the entries are reduced.
    HNFMatrix(std::vector<Integer> diag, std::vector<Integer> sub);
    explicit HNFMatrix(LowerTriangular m);
};

/// Reduce a lower-triangular basis to the HNF of the same lattice.
HNFMatrix reduce(LowerTriangular m);

/// HNF of the lattice spanned by `rows` (must have full rank n).
HNFMatrix hnf_from_generators(std::vector<RingVector> rows);

/// Whether w is an integer combination of M's rows. Back-substitution from
/// the last coordinate to the first with an exact divisibility test at each
/// pivot.
bool lattice_contains(LowerTriangular const& m, RingVector const& w);

} // namespace idealzeta

#endif /* IDEALZETA_HNF_HPP_ */
