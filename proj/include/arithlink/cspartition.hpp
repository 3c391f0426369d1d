#ifndef ARITHLINK_CSPARTITION_HPP_
#define ARITHLINK_CSPARTITION_HPP_

/* Finite abelian Chern-Simons model over F_p, p odd: a symmetric matrix D
 * on V = F_p^a and sources xi_j in im(D). The partition sum
 *
 *   Z = sum_{rho in V} zeta_p^{rho^T D rho + sum_j xi_j . rho}
 *
 * is computed by brute force and by its Gauss-sum closed form, both
 * exactly in Z[zeta_{4p}]. */

#include <cstdint>
#include <optional>
#include <vector>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/symbols.hpp"

namespace arithlink {

using FpVector = std::vector<std::uint64_t>;
using FpMatrix = std::vector<FpVector>; // rows

struct PairingInstance {
    std::uint64_t p;
    int a;
    FpMatrix D;
    std::vector<FpVector> sources;
};

/* reduces entries mod p and checks p odd prime, D square symmetric and
 * every source in im(D) (NotInImage) */
PairingInstance make_pairing_instance(std::uint64_t p, FpMatrix D,
                                      std::vector<FpVector> sources = {});

class KernelData {
  public:
    KernelData(FpMatrix const& D, std::uint64_t p);

    int rank() const noexcept { return static_cast<int>(pivots_.size()); }
    int b() const noexcept { return a_ - rank(); }
    FpMatrix const& kernel_basis() const noexcept { return kernel_; }
    /* pivot columns of the row echelon form; their coordinate vectors span
     * a complement of ker(D) */
    std::vector<int> const& pivots() const noexcept { return pivots_; }
    /* some x with D x = xi, or nullopt */
    std::optional<FpVector> solve(FpVector const& xi) const;

  private:
    std::uint64_t p_;
    int a_;
    FpMatrix D_;
    std::vector<int> pivots_;
    FpMatrix kernel_;
};

KernelData kernel_and_cokernel_data(FpMatrix const& D, std::uint64_t p);

/* Legendre symbol of det(B^T D B), B a basis of a complement of ker(D) */
int dbar_det_legendre(FpMatrix const& D, std::uint64_t p);

int legendre(std::uint64_t x, std::uint64_t p);

/* (x . xi_j) / p with D x = xi_i */
ModFraction finite_height(FpMatrix const& D, FpVector const& xi_i, FpVector const& xi_j,
                          std::uint64_t p);

/* sum_x zeta_p^{x^2} in Q(zeta_{4p}) */
CycloElement gauss_sum(CycloField const& F, std::uint64_t p);

CycloElement brute_force_partition(PairingInstance const& inst, std::uint64_t term_cap,
                                   unsigned workers = 1);
CycloElement closed_form_partition(PairingInstance const& inst);

enum class CompareMode { exact, numeric };

struct TheoremReport {
    bool equal;
    CycloElement lhs;
    CycloElement rhs;
};

TheoremReport verify_theorem(PairingInstance const& inst, CompareMode mode, double tol = 1e-9,
                             std::uint64_t term_cap = 10'000'000, unsigned workers = 1,
                             int precision = 30);

/* seeded random instance: D = M^T diag(l_1..l_r, 0..0) M with random rank
 * r and invertible M, and 0 to 3 sources D y */
PairingInstance random_pairing_instance(std::uint64_t p, int a, std::uint64_t seed);

} // namespace arithlink

#endif /* ARITHLINK_CSPARTITION_HPP_ */
