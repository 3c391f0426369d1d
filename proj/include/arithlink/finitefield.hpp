#ifndef ARITHLINK_FINITEFIELD_HPP_
#define ARITHLINK_FINITEFIELD_HPP_

/* Polynomials over F_p, their factorization, and the residue fields
 * F_q = F_p[x]/(g) in which power residue symbols are evaluated. */

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arithlink/poly.hpp"

namespace arithlink {

/* Coefficients in [0, p), lowest degree first, no trailing zeros. */
using FpPoly = std::vector<std::uint64_t>;

/* Arithmetic in F_p[x] for one prime p < 2^63. */
class FpPolyRing {
  public:
    explicit FpPolyRing(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    FpPoly reduce(ZPoly const& a) const;
    FpPoly add(FpPoly const& a, FpPoly const& b) const;
    FpPoly sub(FpPoly const& a, FpPoly const& b) const;
    FpPoly mul(FpPoly const& a, FpPoly const& b) const;
    FpPoly scale(FpPoly const& a, std::uint64_t c) const;
    std::pair<FpPoly, FpPoly> divmod(FpPoly const& a, FpPoly const& b) const;
    FpPoly rem(FpPoly const& a, FpPoly const& b) const { return divmod(a, b).second; }
    FpPoly monic(FpPoly const& a) const;
    FpPoly gcd(FpPoly a, FpPoly b) const; // monic
    FpPoly derivative(FpPoly const& a) const;
    /* inverse of a modulo f; a and f coprime */
    FpPoly invmod(FpPoly const& a, FpPoly const& f) const;
    FpPoly mulmod(FpPoly const& a, FpPoly const& b, FpPoly const& f) const;
    FpPoly powmod(FpPoly const& a, mpz_class const& e, FpPoly const& f) const;
    /* Rabin's irreducibility test */
    bool is_irreducible(FpPoly const& f) const;

  private:
    std::uint64_t p_;
};

/* Deterministic generator for randomized splitting. The stream is fully
 * determined by the seed (mt19937_64 is specified bit-exactly). */
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : engine_(seed) {}
    /* uniform in [0, bound) */
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

struct FpFactor {
    FpPoly factor; // monic irreducible
    int multiplicity;
};

/* Complete factorization of poly mod p: squarefree decomposition,
 * distinct-degree splitting and Cantor-Zassenhaus equal-degree
 * splitting. Output is sorted by degree, then coefficients (lowest
 * degree first), so it does not depend on the seed. */
std::vector<FpFactor> factor_poly_mod_p(ZPoly const& poly, std::uint64_t p,
                                        std::uint64_t seed);
std::vector<FpFactor> factor_poly_mod_p(FpPoly const& poly, FpPolyRing const& R,
                                        std::uint64_t seed);

/* F_q = F_p[x]/(modulus), q = p^f. Elements are FpPoly of degree < f. */
class ResidueField {
  public:
    ResidueField(std::uint64_t p, FpPoly modulus);

    std::uint64_t p() const noexcept { return ring_.p(); }
    int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
    FpPoly const& modulus() const noexcept { return modulus_; }
    mpz_class const& q() const noexcept { return q_; }
    FpPolyRing const& ring() const noexcept { return ring_; }

    FpPoly reduce(FpPoly const& a) const { return ring_.rem(a, modulus_); }
    FpPoly mul(FpPoly const& a, FpPoly const& b) const;
    FpPoly inv(FpPoly const& a) const;
    FpPoly pow(FpPoly const& a, mpz_class const& e) const;
    FpPoly one() const { return FpPoly{1}; }

  private:
    FpPolyRing ring_;
    FpPoly modulus_;
    mpz_class q_;
};

/* u^{(q-1)/n}, an element of mu_n in F_q */
FpPoly euler_residue(FpPoly const& u, ResidueField const& R, long n);

/* the k in [0, n) with zeta_bar^k = w */
long dlog_mu_n(FpPoly const& w, FpPoly const& zeta_bar, long n,
               ResidueField const& R);

} // namespace arithlink

#endif /* ARITHLINK_FINITEFIELD_HPP_ */
