#ifndef ARITHLINK_CYCLOTOMIC_HPP_
#define ARITHLINK_CYCLOTOMIC_HPP_

/* Exact arithmetic in the cyclotomic field Q(zeta_m).
 *
 * Elements are stored in the power basis 1, z, ..., z^{phi(m)-1} with
 * z the residue class of x modulo Phi_m. Since Z[zeta_m] is the full
 * ring of integers, an element is integral iff all of its coordinates
 * are integers. */

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include "arithlink/poly.hpp"

namespace arithlink {

/* Phi_m by the Moebius product prod_{d | m} (x^{m/d} - 1)^{mu(d)} */
ZPoly cyclotomic_polynomial(long m);

class CycloElement;

class CycloField {
  public:
    explicit CycloField(long m);

    long m() const noexcept { return data_->m; }
    int degree() const noexcept { return data_->degree; }
    ZPoly const& phi_poly() const noexcept { return data_->phi; }

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement from_int(mpz_class const& c) const;
    CycloElement from_rational(mpq_class const& c) const;
    /* zeta_m^k for any integer k, reduced */
    CycloElement zeta_power(long k) const;
    CycloElement zeta() const;
    /* element from power-basis coordinates; any length, reduced mod Phi_m */
    CycloElement from_coeffs(QPoly coeffs) const;
    CycloElement from_coeffs(ZPoly const& coeffs) const;

    /* Tr(z^k) for 0 <= k < m (a Ramanujan sum) */
    mpz_class trace_of_power(long k) const;

    friend bool operator==(CycloField const& a, CycloField const& b)
    {
        return a.m() == b.m();
    }

  private:
    struct Data {
        long m;
        int degree;
        ZPoly phi;
        std::vector<QPoly> zeta_pows; // z^j reduced, 0 <= j < m
        std::vector<mpz_class> traces; // Tr(z^j), 0 <= j < m
    };
    std::shared_ptr<const Data> data_;

    friend class CycloElement;
};

class CycloElement {
  public:
    CycloElement(CycloField field, QPoly coeffs); // takes reduced coordinates

    CycloField const& field() const noexcept { return field_; }
    /* exactly field().degree() coordinates */
    QPoly const& coeffs() const noexcept { return coeffs_; }
    mpq_class const& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_integral() const;
    /* least positive integer d with d * x integral */
    mpz_class denominator() const;
    /* coordinates of d * x for d = denominator() */
    ZPoly integral_coeffs() const;
    /* the coordinates as a polynomial in x of degree < phi(m) */
    QPoly as_poly() const;

    CycloElement operator-() const;
    friend CycloElement operator+(CycloElement const& a, CycloElement const& b);
    friend CycloElement operator-(CycloElement const& a, CycloElement const& b);
    friend CycloElement operator*(CycloElement const& a, CycloElement const& b);
    friend CycloElement operator*(mpq_class const& c, CycloElement const& a);
    CycloElement& operator+=(CycloElement const& b) { return *this = *this + b; }
    CycloElement& operator-=(CycloElement const& b) { return *this = *this - b; }
    CycloElement& operator*=(CycloElement const& b) { return *this = *this * b; }

    CycloElement inverse() const;
    CycloElement pow(long e) const;

    friend bool operator==(CycloElement const& a, CycloElement const& b);
    friend bool operator!=(CycloElement const& a, CycloElement const& b)
    {
        return !(a == b);
    }

  private:
    CycloField field_;
    QPoly coeffs_;
};

CycloElement pow(CycloElement const& x, long e);

/* N_{K/Q}(x) = Res(Phi_m, x) */
mpq_class norm(CycloElement const& x);
mpq_class trace(CycloElement const& x);
/* image under z -> z^{-1} */
CycloElement conjugate(CycloElement const& x);

using RationalMatrix = std::vector<std::vector<mpq_class>>;
/* G[i][j] = Tr(b_i * conj(b_j)) */
RationalMatrix trace_gram(std::vector<CycloElement> const& basis);

using mp_real = boost::multiprecision::mpfr_float;
struct ComplexValue {
    mp_real re, im;
};

/* Values of x at exp(2 pi i k / m) for 0 < k < m, gcd(k, m) = 1, in
 * increasing k. precision is in decimal digits and at least 15. */
std::vector<ComplexValue> embed_numeric(CycloElement const& x, int precision);

/* Sets the mpfr working precision for the lifetime of the guard. */
class PrecisionGuard {
  public:
    explicit PrecisionGuard(int digits10);
    ~PrecisionGuard();
    PrecisionGuard(PrecisionGuard const&) = delete;
    PrecisionGuard& operator=(PrecisionGuard const&) = delete;

  private:
    unsigned saved_;
};

/* Human-readable and re-parseable rendering, e.g. "3 + 4*z - z^3" or
 * "1*2^-1 - 1*2^-1*z" for rational coordinates. */
std::string to_string(CycloElement const& x);

} // namespace arithlink

#endif /* ARITHLINK_CYCLOTOMIC_HPP_ */
