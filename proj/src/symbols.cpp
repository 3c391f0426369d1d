#include "arithlink/symbols.hpp"

#include "arithlink/errors.hpp"

namespace arithlink {

ModFraction::ModFraction(long n_, long k_) : n(n_), k(k_)
{
    if (n <= 0)
        throw error(errc::invalid_argument, "ModFraction needs a positive modulus");
    k %= n;
    if (k < 0)
        k += n;
}

ModFraction& ModFraction::operator+=(ModFraction const& b)
{
    if (n != b.n)
        throw error(errc::order_mismatch, "adding fractions of different orders");
    k = (k + b.k) % n;
    return *this;
}

ModFraction operator*(long c, ModFraction const& a)
{
    __int128 t = static_cast<__int128>(c % a.n) * a.k;
    return ModFraction(a.n, static_cast<long>(t % a.n));
}

std::string ModFraction::to_string() const
{
    return std::to_string(k) + "/" + std::to_string(n);
}

std::pair<long, FpPoly> local_unit_residue(CycloElement const& c, PrimeIdeal const& P)
{
    if (c.is_zero())
        throw error(errc::zero_element, "residue of zero");
    if (!(c.field() == P.field()))
        throw error(errc::field_mismatch, "element and prime live in different fields");
    /* c = y / d with y integral, d a positive integer */
    mpz_class d = c.denominator();
    auto [vy, yu] = split_at_prime(mpq_class(d) * c, P);
    auto [vd, du] = split_at_prime(c.field().from_int(d), P);
    ResidueField const& R = P.residue_field();
    FpPoly r = R.mul(P.reduce(yu.integral_coeffs()), R.inv(P.reduce(du.integral_coeffs())));
    return {vy - vd, std::move(r)};
}

FpPoly residue_of_unit(CycloElement const& c, PrimeIdeal const& P)
{
    auto [v, r] = local_unit_residue(c, P);
    if (v != 0)
        throw error(errc::non_unit_at_p, "element has valuation " + std::to_string(v) +
                                             " at " + P.to_string());
    return r;
}

FpPoly reduced_root_of_unity(PrimeIdeal const& P, long n)
{
    long m = P.field().m();
    if (n <= 0 || m % n != 0)
        throw error(errc::order_mismatch,
                    "n = " + std::to_string(n) + " does not divide m = " + std::to_string(m));
    return P.reduce(P.field().zeta_power(m / n).integral_coeffs());
}

namespace {

ModFraction symbol_of_residue(FpPoly const& r, PrimeIdeal const& P, long n)
{
    FpPoly zb = reduced_root_of_unity(P, n);
    FpPoly w = euler_residue(r, P.residue_field(), n);
    return ModFraction(n, dlog_mu_n(w, zb, n, P.residue_field()));
}

} // namespace

ModFraction power_residue_symbol(CycloElement const& a, PrimeIdeal const& P, long n)
{
    return symbol_of_residue(residue_of_unit(a, P), P, n);
}

ModFraction tame_hilbert(CycloElement const& a, CycloElement const& b, PrimeIdeal const& P,
                         long n)
{
    auto [alpha, ra] = local_unit_residue(a, P);
    auto [beta, rb] = local_unit_residue(b, P);
    ResidueField const& R = P.residue_field();
    /* with a = t^{-alpha} a', b = t^{-beta} b' the powers of t cancel in
     * a^beta b^{-alpha}, leaving a'^beta b'^{-alpha} */
    auto signed_pow = [&](FpPoly const& x, long e) {
        FpPoly base = e < 0 ? R.inv(x) : x;
        return R.pow(base, mpz_class(e < 0 ? -e : e));
    };
    FpPoly c = R.mul(signed_pow(ra, beta), signed_pow(rb, -alpha));
    if ((alpha & 1) && (beta & 1))
        c = R.ring().sub(FpPoly{}, c);
    return symbol_of_residue(c, P, n);
}

} // namespace arithlink
