#ifndef ARITHLINK_SYMBOLS_HPP_
#define ARITHLINK_SYMBOLS_HPP_

/* Residue maps, n-th power residue symbols and the tame Hilbert symbol
 * at primes of Z[zeta_m] not dividing m. */

#include <string>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/finitefield.hpp"
#include "arithlink/ideals.hpp"

namespace arithlink {

/* k/n in (1/n)Z/Z, stored with 0 <= k < n (not reduced to lowest terms) */
struct ModFraction {
    long n = 1;
    long k = 0;

    ModFraction() = default;
    ModFraction(long n_, long k_);

    bool is_zero() const noexcept { return k == 0; }
    ModFraction& operator+=(ModFraction const& b);
    friend ModFraction operator+(ModFraction a, ModFraction const& b) { return a += b; }
    ModFraction operator-() const { return ModFraction(n, -k); }
    friend ModFraction operator-(ModFraction a, ModFraction const& b) { return a += -b; }
    friend ModFraction operator*(long c, ModFraction const& a);
    friend bool operator==(ModFraction const& a, ModFraction const& b)
    {
        return a.n == b.n && a.k == b.k;
    }
    friend bool operator<(ModFraction const& a, ModFraction const& b)
    {
        return a.n != b.n ? a.n < b.n : a.k < b.k;
    }
    std::string to_string() const; // "k/n"
};

/* (v_P(c), image of c t^{v_P(c)} in F_q) for c != 0 */
std::pair<long, FpPoly> local_unit_residue(CycloElement const& c, PrimeIdeal const& P);

/* image in F_q of a P-unit */
FpPoly residue_of_unit(CycloElement const& c, PrimeIdeal const& P);

/* reduction of zeta_m^{m/n} modulo P; n must divide m */
FpPoly reduced_root_of_unity(PrimeIdeal const& P, long n);

/* (a/P)_n as k/n with zeta_bar^k = a^{(q-1)/n} mod P */
ModFraction power_residue_symbol(CycloElement const& a, PrimeIdeal const& P, long n);

/* the symbol of c = (-1)^{ab} a^b b^{-a}, alpha = v_P(a), beta = v_P(b),
 * so that tame_hilbert(u, uniformizer, P, n) = power_residue_symbol(u, P, n)
 * for a P-unit u */
ModFraction tame_hilbert(CycloElement const& a, CycloElement const& b, PrimeIdeal const& P,
                         long n);

} // namespace arithlink

#endif /* ARITHLINK_SYMBOLS_HPP_ */
