#ifndef ARITHLINK_IDEALS_HPP_
#define ARITHLINK_IDEALS_HPP_

/* Prime ideals of Z[zeta_m] above rational primes p not dividing m,
 * fractional ideals in factored form, their Z-lattices, valuations and
 * principal generator search.
 *
 * Primes over p | m are never represented. Since p is unramified, every
 * prime used here has ramification index 1, and (p, g(zeta)) is prime
 * exactly when g is an irreducible factor of Phi_m mod p. */

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/finitefield.hpp"
#include "arithlink/hnf.hpp"

namespace arithlink {

class PrimeIdeal {
  public:
    /* The prime (p, g(zeta)); g (lowest degree first) must reduce to a
     * monic irreducible factor of Phi_m mod p. */
    PrimeIdeal(CycloField const& field, std::uint64_t p, ZPoly const& g);

    CycloField const& field() const noexcept { return d_->field; }
    std::uint64_t p() const noexcept { return d_->p; }
    /* lift of the factor with coefficients in [0, p) */
    ZPoly const& g() const noexcept { return d_->g; }
    int residue_degree() const noexcept { return d_->residue.degree(); }
    /* position of this prime in the sorted splitting of p */
    int label() const noexcept { return d_->label; }
    mpz_class norm() const { return d_->residue.q(); }
    ResidueField const& residue_field() const noexcept { return d_->residue; }

    /* tau with tau = 1 mod P and tau = 0 mod every other prime over p; the
     * anti-uniformizer is tau / p */
    CycloElement const& crt_idempotent() const noexcept { return d_->tau; }

    /* membership of an integral element, given by its power-basis coordinates */
    bool contains(ZPoly const& integral) const;
    /* image of an integral element in F_q = Z[zeta]/P */
    FpPoly reduce(ZPoly const& integral) const;

    std::string to_string() const; // "P(5,[3,1])"

    friend bool operator==(PrimeIdeal const& a, PrimeIdeal const& b)
    {
        return a.field() == b.field() && a.p() == b.p() && a.g() == b.g();
    }
    friend bool operator<(PrimeIdeal const& a, PrimeIdeal const& b)
    {
        if (a.p() != b.p())
            return a.p() < b.p();
        return a.label() < b.label();
    }

  private:
    struct Data {
        CycloField field;
        std::uint64_t p;
        ZPoly g;
        FpPoly gbar;
        int label;
        ResidueField residue;
        CycloElement tau;
    };
    std::shared_ptr<const Data> d_;
    PrimeIdeal(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    friend std::vector<PrimeIdeal> split_prime(CycloField const& F, std::uint64_t p,
                                               std::uint64_t seed);
};

/* One prime per irreducible factor of Phi_m mod p, in factor order. */
std::vector<PrimeIdeal> split_prime(CycloField const& F, std::uint64_t p,
                                    std::uint64_t seed = 0);

class FactoredIdeal {
  public:
    explicit FactoredIdeal(CycloField field) : field_(std::move(field)) {}
    FactoredIdeal(PrimeIdeal const& P, long e = 1);

    CycloField const& field() const noexcept { return field_; }
    std::map<PrimeIdeal, long> const& factors() const noexcept { return factors_; }
    long exponent(PrimeIdeal const& P) const;
    bool is_unit() const noexcept { return factors_.empty(); }
    bool is_integral() const;
    std::vector<PrimeIdeal> support() const;
    /* absolute norm, a positive rational */
    mpq_class norm() const;

    FactoredIdeal& operator*=(FactoredIdeal const& b);
    friend FactoredIdeal operator*(FactoredIdeal a, FactoredIdeal const& b) { return a *= b; }
    FactoredIdeal pow(long e) const;
    FactoredIdeal inverse() const { return pow(-1); }

    std::string to_string() const; // "P(5,[3,1])^2 * P(13,[8,1])" or "1"

    friend bool operator==(FactoredIdeal const& a, FactoredIdeal const& b)
    {
        return a.field_ == b.field_ && a.factors_ == b.factors_;
    }

  private:
    CycloField field_;
    std::map<PrimeIdeal, long> factors_; // no zero exponents
};

/* The principal ideal (p) = prod of the primes over p. */
FactoredIdeal rational_prime_ideal(CycloField const& F, std::uint64_t p);

struct IdealLattice {
    CycloField field;
    IntBasis basis; // HNF columns in power-basis coordinates

    mpz_class determinant() const { return hnf_determinant(basis); }
    bool contains(CycloElement const& x) const;
    std::vector<CycloElement> basis_elements() const;
};

/* HNF Z-basis of an integral ideal */
IdealLattice ideal_lattice(FactoredIdeal const& A);

/* t with v_P(t) = -1 and v_Q(t) >= 0 at every other prime */
CycloElement anti_uniformizer(PrimeIdeal const& P);

long valuation(CycloElement const& x, PrimeIdeal const& P);

/* for integral y != 0: (v, y t^v) with v = v_P(y); the second part is
 * integral and prime to P */
std::pair<long, CycloElement> split_at_prime(CycloElement y, PrimeIdeal const& P);

/* first HNF basis column of P not lying in P^2 */
CycloElement uniformizer(PrimeIdeal const& P);

struct GeneratorSearchOptions {
    mpq_class bound_factor = 4;
    unsigned workers = 1;
    /* 0 means no limit; otherwise the search gives up after visiting this
     * many enumeration nodes */
    std::uint64_t max_nodes = 0;
};

struct GeneratorSearchResult {
    CycloElement generator;
    mpz_class radius; // squared trace-form radius searched
    std::uint64_t nodes;
};

/* alpha in A with |N(alpha)| = N(A), found by Fincke-Pohst enumeration
 * of the lattice of A under the trace form Tr(x conj(x)). Among all
 * generators within the radius, returns the one of least trace form,
 * ties broken by the lexicographically greatest power-basis vector.
 * Throws search_exhausted (SearchExhausted) when none is found. */
GeneratorSearchResult find_generator(FactoredIdeal const& A,
                                     GeneratorSearchOptions const& opts = {});

struct ElementFactorization {
    FactoredIdeal ideal;                       // part supported away from m
    std::vector<std::uint64_t> excluded_primes; // rational primes p | m met in N(x)
};

/* prime factorization of (x) away from the primes dividing m */
ElementFactorization factor_element(CycloElement const& x, std::uint64_t seed = 0);

/* h(Q(zeta_m)) for m <= 60, if tabulated */
std::optional<long> class_number(long m);

} // namespace arithlink

#endif /* ARITHLINK_IDEALS_HPP_ */
