#include <doctest.h>

#include <algorithm>
#include <random>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/errors.hpp"
#include "arithlink/finitefield.hpp"
#include "arithlink/integers.hpp"
#include "oracles.hpp"

using namespace arithlink;

namespace {

std::vector<std::pair<oracle::Poly, int>> library_factors(ZPoly const& f, std::uint64_t p,
                                                          std::uint64_t seed)
{
    std::vector<std::pair<oracle::Poly, int>> out;
    for (auto const& fac : factor_poly_mod_p(f, p, seed)) {
        oracle::Poly g(fac.factor.begin(), fac.factor.end());
        out.push_back({g, fac.multiplicity});
    }
    return out;
}

} // namespace

TEST_CASE("Phi_4 mod 5 and mod 3")
{
    auto f5 = factor_poly_mod_p(cyclotomic_polynomial(4), 5, 0);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].factor == FpPoly{2, 1});
    CHECK(f5[1].factor == FpPoly{3, 1});
    auto f3 = factor_poly_mod_p(cyclotomic_polynomial(4), 3, 0);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].factor == FpPoly{1, 0, 1});
}

TEST_CASE("factorization matches brute force and is seed independent")
{
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        for (int t = 0; t < 40; ++t) {
            int deg = 1 + static_cast<int>(rng() % 6);
            oracle::Poly raw(deg + 1);
            for (int k = 0; k < deg; ++k)
                raw[k] = static_cast<oracle::i64>(rng() % p);
            raw[deg] = 1;
            ZPoly f(raw.begin(), raw.end());
            auto want = oracle::factor_brute(raw, static_cast<oracle::i64>(p));
            std::sort(want.begin(), want.end(), [](auto const& a, auto const& b) {
                if (a.first.size() != b.first.size())
                    return a.first.size() < b.first.size();
                return a.first < b.first;
            });
            auto got = library_factors(f, p, 1);
            CHECK(got == want);
            CHECK(library_factors(f, p, 99) == got);
        }
    }
}

TEST_CASE("cyclotomic splitting degrees equal the order of p mod m")
{
    for (long m : {5L, 7L, 8L, 12L, 13L, 21L}) {
        for (std::uint64_t p : {2ULL, 3ULL, 11ULL, 29ULL, 31ULL, 101ULL}) {
            if (m % static_cast<long>(p) == 0)
                continue;
            long ord = 1;
            std::uint64_t x = p % static_cast<std::uint64_t>(m);
            while (x != 1) {
                x = x * p % static_cast<std::uint64_t>(m);
                ++ord;
            }
            auto fs = factor_poly_mod_p(cyclotomic_polynomial(m), p, 5);
            long total = 0;
            for (auto const& f : fs) {
                CHECK(static_cast<long>(f.factor.size()) - 1 == ord);
                CHECK(f.multiplicity == 1);
                total += static_cast<long>(f.factor.size()) - 1;
            }
            CHECK(total == euler_phi(m));
        }
    }
}

TEST_CASE("residue fields and the Euler criterion")
{
    ResidueField R(5, FpPoly{2, 1});
    CHECK(R.q() == 5);
    /* 2 is a non-residue mod 5 */
    CHECK(euler_residue(FpPoly{2}, R, 2) == FpPoly{4});
    CHECK_THROWS_AS(euler_residue(FpPoly{}, R, 2), error);
    CHECK_THROWS_AS(euler_residue(FpPoly{2}, R, 3), error);
    ResidueField F9(3, FpPoly{1, 0, 1});
    CHECK(F9.q() == 9);
    FpPoly i{0, 1};
    CHECK(dlog_mu_n(i, i, 4, F9) == 1);
    CHECK(dlog_mu_n(FpPoly{2}, i, 4, F9) == 2);
    CHECK_THROWS_AS(dlog_mu_n(FpPoly{1}, FpPoly{2}, 4, F9), error);
    CHECK_THROWS_AS(ResidueField(3, FpPoly{2, 0, 1}), error);
    CHECK_THROWS_AS(FpPolyRing(9), error);
}

TEST_CASE("dlog against brute powers in F_q")
{
    for (std::uint64_t p : {13ULL, 17ULL, 29ULL}) {
        ResidueField R(p, FpPoly{0, 1});
        /* find a generator of mu_4 by brute force */
        std::uint64_t r = 0;
        for (std::uint64_t x = 2; x < p; ++x)
            if (x * x % p == p - 1) {
                r = x;
                break;
            }
        for (std::uint64_t a = 1; a < p; ++a) {
            auto w = euler_residue(FpPoly{a}, R, 4);
            long k = dlog_mu_n(w, FpPoly{r}, 4, R);
            CHECK(static_cast<std::uint64_t>(oracle::pw(static_cast<long>(r), k, static_cast<long>(p))) ==
                  static_cast<std::uint64_t>(oracle::pw(static_cast<long>(a), (static_cast<long>(p) - 1) / 4, static_cast<long>(p))));
        }
    }
}
