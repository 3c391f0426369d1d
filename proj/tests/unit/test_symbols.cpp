#include <doctest.h>

#include <random>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"
#include "arithlink/symbols.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace arithlink;
using testing_util::el;

TEST_CASE("ModFraction")
{
    ModFraction a(4, 3), b(4, 2);
    CHECK((a + b) == ModFraction(4, 1));
    CHECK((4 * a).is_zero());
    CHECK(ModFraction(4, -1) == a);
    CHECK(a.to_string() == "3/4");
    CHECK_THROWS_AS(a + ModFraction(2, 1), error);
}

TEST_CASE("residues in Q(i)")
{
    CycloField F(4);
    PrimeIdeal P13(F, 13, ZPoly{8, 1});
    CHECK(residue_of_unit(el(F, "3+4*z"), P13) == FpPoly{10});
    CHECK(residue_of_unit(el(F, "(3+4*z)^-1"), P13) == FpPoly{4});
    CHECK(residue_of_unit(F.one(), P13) == FpPoly{1});
    PrimeIdeal P2(F, 5, ZPoly{2, 1});
    try {
        residue_of_unit(el(F, "3+4*z"), P2);
        FAIL("expected NonUnitAtP");
    } catch (error const& e) {
        CHECK(e.code() == errc::non_unit_at_p);
    }
}

TEST_CASE("power residue symbols")
{
    CycloField F(4);
    PrimeIdeal P3(F, 5, ZPoly{3, 1});
    CHECK(power_residue_symbol(F.zeta(), P3, 4) == ModFraction(4, 1));
    CHECK(power_residue_symbol(F.one(), P3, 4) == ModFraction(4, 0));
    CHECK(power_residue_symbol(F.from_int(2), P3, 2) == ModFraction(2, 1));
    CHECK_THROWS_AS(power_residue_symbol(F.from_int(2), P3, 3), error);
}

TEST_CASE("quartic symbols agree with the Gaussian integer oracle")
{
    CycloField F(4);
    std::mt19937_64 rng(29);
    for (std::uint64_t p = 5; p < 200; p += 4) {
        if (!is_prime_u64(p))
            continue;
        for (auto const& P : split_prime(F, p)) {
            /* the Gaussian prime a + b i generating P, by search */
            oracle::Gauss pi{0, 0};
            for (long a = 0; a * a < static_cast<long>(p) && pi.re == 0; ++a)
                for (long b = 1; b * b <= static_cast<long>(p); ++b)
                    if (a * a + b * b == static_cast<long>(p) &&
                        valuation(F.from_coeffs(ZPoly{a, b}), P) == 1) {
                        pi = {a, b};
                        break;
                    }
            for (int t = 0; t < 10; ++t) {
                long x = static_cast<long>(rng() % 50) - 25, y = static_cast<long>(rng() % 50) - 25;
                auto k = oracle::quartic_symbol({x, y}, pi);
                auto alpha = F.from_coeffs(ZPoly{x, y});
                if (!k) {
                    CHECK_THROWS_AS(power_residue_symbol(alpha, P, 4), error);
                    continue;
                }
                CHECK(power_residue_symbol(alpha, P, 4) == ModFraction(4, *k));
            }
        }
    }
}

TEST_CASE("tame Hilbert symbol examples")
{
    CycloField F(4);
    PrimeIdeal P(F, 5, ZPoly{3, 1});
    auto w = uniformizer(P);
    CHECK(tame_hilbert(F.from_int(2), F.from_int(3), P, 2).is_zero());
    CHECK(tame_hilbert(w, w, P, 2).is_zero());
    CHECK(tame_hilbert(F.from_int(2), w, P, 2) == ModFraction(2, 1));
}

TEST_CASE("tame Hilbert symbol laws")
{
    std::mt19937_64 rng(31);
    struct Config {
        long m, n;
        std::uint64_t p;
    };
    for (auto cfg : {Config{4, 2, 5}, Config{4, 4, 13}, Config{8, 4, 17}, Config{12, 2, 13},
                     Config{9, 3, 19}}) {
        CycloField F(cfg.m);
        auto primes = split_prime(F, cfg.p);
        auto const& P = primes[0];
        auto w = uniformizer(P);
        for (int t = 0; t < 300; ++t) {
            /* mix in powers of the uniformizer so that alpha, beta vary */
            auto a1 = testing_util::random_nonzero(F, rng, 3) * w.pow(static_cast<long>(rng() % 3));
            auto a2 = testing_util::random_nonzero(F, rng, 3);
            auto b = testing_util::random_nonzero(F, rng, 3) * w.pow(static_cast<long>(rng() % 3) - 1);
            auto s1 = tame_hilbert(a1, b, P, cfg.n), s2 = tame_hilbert(a2, b, P, cfg.n);
            CHECK(tame_hilbert(a1 * a2, b, P, cfg.n) == s1 + s2);
            CHECK(tame_hilbert(b, a1 * a2, P, cfg.n) ==
                  tame_hilbert(b, a1, P, cfg.n) + tame_hilbert(b, a2, P, cfg.n));
            CHECK((cfg.n * s1).is_zero());
            CHECK(tame_hilbert(a1.pow(cfg.n), b, P, cfg.n).is_zero());
            if (cfg.n == 2)
                CHECK(tame_hilbert(a1, b, P, 2) == tame_hilbert(b, a1, P, 2));
            /* unit against uniformizer is the power residue symbol */
            if (valuation(a2, P) == 0)
                CHECK(tame_hilbert(a2, w, P, cfg.n) == power_residue_symbol(a2, P, cfg.n));
        }
    }
}
