#include "arithlink/integers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "arithlink/errors.hpp"

namespace arithlink {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t powmod(std::uint64_t a, mpz_class const& e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mulmod(r, a, p);
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a % p;
    while (new_r != 0) {
        __int128 q = r / new_r;
        std::swap(t, new_t);
        new_t -= q * t;
        std::swap(r, new_r);
        new_r -= q * r;
    }
    if (r != 1)
        throw error(errc::division_by_zero,
                    "residue is not invertible modulo " + std::to_string(p));
    if (t < 0)
        t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(mpz_class const& x, std::uint64_t p)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

std::uint64_t reduce_mod(std::int64_t x, std::uint64_t p)
{
    __int128 r = static_cast<__int128>(x) % static_cast<__int128>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint64_t>(r);
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (auto const& [q, e] : factor_integer(mpz_class(static_cast<unsigned long>(n))))
        out.emplace_back(q.get_ui(), e);
    return out;
}

long euler_phi(long m)
{
    long r = m;
    for (auto [q, e] : factor_u64(static_cast<std::uint64_t>(m)))
        r = r / static_cast<long>(q) * (static_cast<long>(q) - 1);
    return r;
}

int moebius(long m)
{
    int r = 1;
    for (auto [q, e] : factor_u64(static_cast<std::uint64_t>(m))) {
        if (e > 1)
            return 0;
        r = -r;
    }
    return r;
}

std::vector<long> divisors(long m)
{
    std::vector<long> out;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m)
                out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

mpz_class pollard_brent(mpz_class const& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](mpz_class const& v) {
            mpz_class w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_into(mpz_class const& n, std::map<mpz_class, int>& acc)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        acc[n] += 1;
        return;
    }
    mpz_class d = pollard_brent(n);
    split_into(d, acc);
    split_into(n / d, acc);
}

} // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n)
{
    n = abs(n);
    if (n == 0)
        throw error(errc::invalid_argument, "cannot factor zero");
    std::map<mpz_class, int> acc;
    for (unsigned long q = 2; q < 10000 && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            acc[mpz_class(q)] += 1;
            n /= q;
        }
    }
    split_into(n, acc);
    return {acc.begin(), acc.end()};
}

int valuation_p(mpz_class x, std::uint64_t p)
{
    if (x == 0)
        throw error(errc::zero_element, "valuation of zero");
    mpz_class pz(static_cast<unsigned long>(p));
    int v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), pz.get_mpz_t())) {
        x /= pz;
        ++v;
    }
    return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace arithlink
