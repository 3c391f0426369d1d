#include "arithlink/finitefield.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"

namespace arithlink {

namespace {

void fp_trim(FpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

bool is_one(FpPoly const& a)
{
    return a.size() == 1 && a[0] == 1;
}

} // namespace

FpPolyRing::FpPolyRing(std::uint64_t p) : p_(p)
{
    if (p >= (std::uint64_t(1) << 63) || !is_prime_u64(p))
        throw error(errc::not_prime, std::to_string(p) + " is not a prime below 2^63");
}

FpPoly FpPolyRing::reduce(ZPoly const& a) const
{
    FpPoly r;
    r.reserve(a.size());
    for (auto const& c : a)
        r.push_back(reduce_mod(c, p_));
    fp_trim(r);
    return r;
}

FpPoly FpPolyRing::add(FpPoly const& a, FpPoly const& b) const
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = x >= p_ - y ? x - (p_ - y) : x + y;
    }
    fp_trim(r);
    return r;
}

FpPoly FpPolyRing::sub(FpPoly const& a, FpPoly const& b) const
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = x >= y ? x - y : x + (p_ - y);
    }
    fp_trim(r);
    return r;
}

FpPoly FpPolyRing::mul(FpPoly const& a, FpPoly const& b) const
{
    if (a.empty() || b.empty())
        return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    FpPoly r(acc.size());
    /* accumulate with periodic reduction to stay within 128 bits */
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
            if (acc[i + j] >> 126)
                acc[i + j] %= p_;
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k)
        r[k] = static_cast<std::uint64_t>(acc[k] % p_);
    fp_trim(r);
    return r;
}

FpPoly FpPolyRing::scale(FpPoly const& a, std::uint64_t c) const
{
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = arithlink::mulmod(a[i], c, p_);
    fp_trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> FpPolyRing::divmod(FpPoly const& a, FpPoly const& b) const
{
    if (b.empty())
        throw error(errc::division_by_zero, "division by the zero polynomial");
    FpPoly r = a;
    fp_trim(r);
    if (r.size() < b.size())
        return {{}, r};
    std::size_t db = b.size() - 1;
    std::uint64_t lead_inv = arithlink::invmod(b.back(), p_);
    FpPoly q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0)
            continue;
        std::uint64_t c = arithlink::mulmod(r[i], lead_inv, p_);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t t = arithlink::mulmod(c, b[j], p_);
            std::uint64_t& x = r[i - db + j];
            x = x >= t ? x - t : x + (p_ - t);
        }
    }
    fp_trim(q);
    fp_trim(r);
    return {q, r};
}

FpPoly FpPolyRing::monic(FpPoly const& a) const
{
    if (a.empty())
        return a;
    return scale(a, arithlink::invmod(a.back(), p_));
}

FpPoly FpPolyRing::gcd(FpPoly a, FpPoly b) const
{
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FpPoly FpPolyRing::derivative(FpPoly const& a) const
{
    if (a.size() <= 1)
        return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = arithlink::mulmod(a[i], i % p_, p_);
    fp_trim(r);
    return r;
}

FpPoly FpPolyRing::invmod(FpPoly const& a, FpPoly const& f) const
{
    FpPoly r0 = f, r1 = rem(a, f);
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly t2 = sub(t0, mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw error(errc::division_by_zero, "polynomial is not invertible modulo f");
    return rem(scale(t0, arithlink::invmod(r0[0], p_)), f);
}

FpPoly FpPolyRing::mulmod(FpPoly const& a, FpPoly const& b, FpPoly const& f) const
{
    return rem(mul(a, b), f);
}

FpPoly FpPolyRing::powmod(FpPoly const& a, mpz_class const& e, FpPoly const& f) const
{
    if (e < 0)
        return powmod(invmod(a, f), -e, f);
    FpPoly result = rem(FpPoly{1}, f);
    FpPoly base = rem(a, f);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, f);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mulmod(result, base, f);
    }
    return result;
}

bool FpPolyRing::is_irreducible(FpPoly const& f0) const
{
    FpPoly f = monic(f0);
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    mpz_class pz(static_cast<unsigned long>(p_));
    FpPoly x{0, 1};
    /* frob[k] = x^{p^k} mod f */
    std::vector<FpPoly> frob{rem(x, f)};
    for (int k = 1; k <= n; ++k)
        frob.push_back(powmod(frob.back(), pz, f));
    if (sub(frob[n], rem(x, f)).size() != 0)
        return false;
    for (auto [r, e] : factor_u64(static_cast<std::uint64_t>(n))) {
        FpPoly g = gcd(f, sub(frob[n / r], x));
        if (!is_one(g))
            return false;
    }
    return true;
}

std::uint64_t SplitRng::below(std::uint64_t bound)
{
    /* rejection sampling keeps the draw exactly uniform */
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t v = engine_();
        if (v < limit)
            return v % bound;
    }
}

namespace {

std::vector<std::pair<FpPoly, int>> squarefree(FpPoly const& f, FpPolyRing const& R)
{
    std::vector<std::pair<FpPoly, int>> out;
    std::uint64_t p = R.p();
    FpPoly c = R.gcd(f, R.derivative(f));
    FpPoly w = R.divmod(f, c).first;
    int i = 1;
    while (!is_one(w)) {
        FpPoly y = R.gcd(w, c);
        FpPoly fac = R.divmod(w, y).first;
        if (!is_one(fac))
            out.emplace_back(R.monic(fac), i);
        w = y;
        c = R.divmod(c, y).first;
        ++i;
    }
    if (!is_one(c)) {
        FpPoly root;
        for (std::size_t k = 0; k < c.size(); k += p)
            root.push_back(c[k]);
        for (auto& [g, e] : squarefree(root, R))
            out.emplace_back(g, e * static_cast<int>(p));
    }
    return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, FpPolyRing const& R)
{
    std::vector<std::pair<FpPoly, int>> out;
    mpz_class pz(static_cast<unsigned long>(R.p()));
    FpPoly x{0, 1};
    FpPoly h = R.rem(x, f);
    int d = 1;
    while (static_cast<int>(f.size()) - 1 >= 2 * d) {
        h = R.powmod(h, pz, f);
        FpPoly g = R.gcd(f, R.sub(h, x));
        if (!is_one(g)) {
            out.emplace_back(g, d);
            f = R.divmod(f, g).first;
            h = R.rem(h, f);
        }
        ++d;
    }
    if (f.size() > 1)
        out.emplace_back(R.monic(f), static_cast<int>(f.size()) - 1);
    return out;
}

std::vector<FpPoly> equal_degree(FpPoly const& g, int d, FpPolyRing const& R,
                                 SplitRng& rng)
{
    int n = static_cast<int>(g.size()) - 1;
    std::vector<FpPoly> parts{g};
    if (n == d)
        return parts;
    std::uint64_t p = R.p();
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), d);
    mpz_class half = (pd - 1) / 2;
    mpz_class pz(static_cast<unsigned long>(p));
    while (static_cast<int>(parts.size()) < n / d) {
        FpPoly a(n);
        for (auto& c : a)
            c = rng.below(p);
        fp_trim(a);
        if (a.size() < 2)
            continue;
        FpPoly b;
        if (p == 2) {
            /* absolute trace a + a^2 + ... + a^{2^{d-1}} */
            FpPoly t = R.rem(a, g);
            b = t;
            for (int i = 1; i < d; ++i) {
                t = R.mulmod(t, t, g);
                b = R.add(b, t);
            }
        } else {
            b = R.sub(R.powmod(a, half, g), FpPoly{1});
        }
        std::vector<FpPoly> next;
        for (auto const& u : parts) {
            if (static_cast<int>(u.size()) - 1 == d) {
                next.push_back(u);
                continue;
            }
            FpPoly h = R.gcd(R.rem(b, u), u);
            int dh = static_cast<int>(h.size()) - 1;
            if (dh > 0 && dh < static_cast<int>(u.size()) - 1) {
                next.push_back(h);
                next.push_back(R.monic(R.divmod(u, h).first));
            } else {
                next.push_back(u);
            }
        }
        parts = std::move(next);
    }
    return parts;
}

} // namespace

std::vector<FpFactor> factor_poly_mod_p(FpPoly const& poly, FpPolyRing const& R,
                                        std::uint64_t seed)
{
    FpPoly f = poly;
    fp_trim(f);
    if (f.empty())
        throw error(errc::zero_polynomial, "polynomial vanishes modulo " +
                                               std::to_string(R.p()));
    f = R.monic(f);
    SplitRng rng(seed);
    std::map<FpPoly, int> acc;
    for (auto const& [sq, mult] : squarefree(f, R))
        for (auto const& [block, d] : distinct_degree(sq, R))
            for (auto const& irr : equal_degree(block, d, R, rng))
                acc[irr] += mult;
    std::vector<FpFactor> out;
    for (auto const& [g, e] : acc)
        out.push_back({g, e});
    std::sort(out.begin(), out.end(), [](FpFactor const& a, FpFactor const& b) {
        if (a.factor.size() != b.factor.size())
            return a.factor.size() < b.factor.size();
        return a.factor < b.factor;
    });
    return out;
}

std::vector<FpFactor> factor_poly_mod_p(ZPoly const& poly, std::uint64_t p,
                                        std::uint64_t seed)
{
    FpPolyRing R(p);
    return factor_poly_mod_p(R.reduce(poly), R, seed);
}

ResidueField::ResidueField(std::uint64_t p, FpPoly modulus)
    : ring_(p), modulus_(std::move(modulus))
{
    fp_trim(modulus_);
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw error(errc::invalid_argument,
                    "residue field modulus must be monic of positive degree");
    if (!ring_.is_irreducible(modulus_))
        throw error(errc::not_irreducible, "residue field modulus is reducible mod " +
                                               std::to_string(p));
    mpz_ui_pow_ui(q_.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(degree()));
}

FpPoly ResidueField::mul(FpPoly const& a, FpPoly const& b) const
{
    return ring_.mulmod(a, b, modulus_);
}

FpPoly ResidueField::inv(FpPoly const& a) const
{
    return ring_.invmod(a, modulus_);
}

FpPoly ResidueField::pow(FpPoly const& a, mpz_class const& e) const
{
    return ring_.powmod(a, e, modulus_);
}

FpPoly euler_residue(FpPoly const& u, ResidueField const& R, long n)
{
    FpPoly v = R.reduce(u);
    if (v.empty())
        throw error(errc::zero_unit, "Euler criterion applied to zero");
    if (n <= 0)
        throw error(errc::invalid_argument, "symbol order must be positive");
    mpz_class qm1 = R.q() - 1;
    if (!mpz_divisible_ui_p(qm1.get_mpz_t(), static_cast<unsigned long>(n)))
        throw error(errc::order_mismatch, std::to_string(n) + " does not divide q - 1 = " +
                                              qm1.get_str());
    return R.pow(v, qm1 / n);
}

long dlog_mu_n(FpPoly const& w, FpPoly const& zeta_bar, long n, ResidueField const& R)
{
    mpz_class nz(n);
    FpPoly z = R.reduce(zeta_bar);
    if (z.empty() || !is_one(R.pow(z, nz)))
        throw error(errc::not_primitive, "reference root is not in mu_" + std::to_string(n));
    for (auto [r, e] : factor_u64(static_cast<std::uint64_t>(n))) {
        if (is_one(R.pow(z, mpz_class(n / static_cast<long>(r)))))
            throw error(errc::not_primitive,
                        "reference root has order below " + std::to_string(n));
    }
    FpPoly target = R.reduce(w);
    FpPoly cur{1};
    for (long k = 0; k < n; ++k) {
        if (cur == target)
            return k;
        cur = R.mul(cur, z);
    }
    throw error(errc::not_in_subgroup, "value is not an n-th root of unity");
}

} // namespace arithlink
