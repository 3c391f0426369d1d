#ifndef ARITHLINK_HNF_HPP_
#define ARITHLINK_HNF_HPP_

/* Full-rank integer lattices in Z^n in Hermite normal form.
 *
 * A basis is stored as a list of n column vectors b_0, ..., b_{n-1}.
 * Column b_j is zero above row j, has a positive pivot b_j[j], and every
 * entry b_j[i] below the diagonal (i > j) lies in [0, b_i[i]). This form
 * is unique, so two lattices are equal iff their bases are equal. */

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace arithlink {

using IntVector = std::vector<mpz_class>;
using IntBasis = std::vector<IntVector>;

/* HNF basis of the lattice spanned by gens in Z^n. det_multiple, when
 * nonzero, must be a positive integer D with D*Z^n contained in the
 * lattice; it bounds intermediate entries. */
IntBasis hnf_basis(std::vector<IntVector> gens, std::size_t n,
                   mpz_class const& det_multiple = 0);

mpz_class hnf_determinant(IntBasis const& basis);

/* integer coordinates of v in the basis, if v lies in the lattice */
std::optional<IntVector> lattice_coordinates(IntBasis const& basis, IntVector const& v);

inline bool lattice_contains(IntBasis const& basis, IntVector const& v)
{
    return lattice_coordinates(basis, v).has_value();
}

/* LLL (delta = 3/4) for the positive definite integer Gram matrix G of
 * some basis, in exact integer arithmetic. Returns the unimodular
 * transform H: reduced vector k is sum_j H[k][j] * (old vector j). */
IntBasis lll_transform(IntBasis const& gram);

} // namespace arithlink

#endif /* ARITHLINK_HNF_HPP_ */
