#include <doctest.h>

#include "arithlink/errors.hpp"
#include "arithlink/linking.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace arithlink;
using testing_util::el;

namespace {

FactoredIdeal principal(CycloField const& F, std::string const& s)
{
    return parse_ideal("(" + s + ")", F);
}

} // namespace

TEST_CASE("instance validation")
{
    CycloField F4(4), F9(9), F8(8);
    FactoredIdeal I(F4);
    CHECK_NOTHROW(make_linking_instance(I, I, 2));
    CHECK_THROWS_AS(make_linking_instance(I, I, 4), error);
    CHECK_THROWS_AS(make_linking_instance(FactoredIdeal(F9), FactoredIdeal(F9), 3), error);
    CHECK_THROWS_AS(make_linking_instance(I, FactoredIdeal(F8), 2), error);
}

TEST_CASE("certify_trivial in Q(i)")
{
    CycloField F(4);
    PrimeIdeal P(F, 5, ZPoly{2, 1});
    auto f = certify_trivial(FactoredIdeal(P), 2);
    /* (f^-1) = P^2 = (3 + 4z); f is (3+4z)^-1 times a unit */
    auto u = f * el(F, "3+4*z");
    CHECK(abs(norm(u)) == 1);
    CHECK(u.is_integral());
    CHECK(certify_trivial(FactoredIdeal(F), 2) == F.one());
    /* fractional ideals */
    FactoredIdeal frac = FactoredIdeal(P, -1) * FactoredIdeal(PrimeIdeal(F, 13, ZPoly{8, 1}));
    auto g = certify_trivial(frac, 2);
    CHECK_NOTHROW(check_witness(frac, 2, g));
    CHECK_THROWS_AS(check_witness(frac, 2, g * F.from_int(5)), error);
}

TEST_CASE("worked height pairings are zero, checked by direct residues")
{
    CycloField F(4);
    auto f = el(F, "(3+4*z)^-1");
    FactoredIdeal I = principal(F, "2+z"), J = principal(F, "3+2*z");
    /* oracle: J = (13, z - 5); f = 1 / (3 + 20) mod 13, and f^6 = 1 */
    oracle::i64 fr = oracle::inv(oracle::mod(3 + 4 * 5, 13), 13);
    CHECK(oracle::pw(fr, 6, 13) == 1);
    CHECK(height_pairing(make_linking_instance(I, J, 2), f).is_zero());
    /* oracle: with the uniformizer 2 + i, c = f (2+i)^2 = 1 */
    oracle::Gauss sq = oracle::gmul({2, 1}, {2, 1});
    CHECK((sq.re == 3 && sq.im == 4));
    CHECK(height_pairing(make_linking_instance(I, I, 2), f).is_zero());
    CHECK(height_pairing(make_linking_instance(FactoredIdeal(F), J, 2), F.one()).is_zero());
    CHECK_THROWS_AS(height_pairing(make_linking_instance(I, J, 2), F.one()), error);
}

TEST_CASE("probe report")
{
    CycloField F(4);
    FactoredIdeal I = principal(F, "2+z"), J = principal(F, "3+2*z");
    auto inst = make_linking_instance(I, J, 2);
    auto f = certify_trivial(I, 2);
    auto rep = probe_well_definedness(inst, f, default_unit_candidates(F), 10, 1);
    CHECK(rep.value.is_zero());
    bool saw_uniformizer = false;
    for (auto const& c : rep.certificates)
        if (c.check == "uniformizer_independence") {
            saw_uniformizer = true;
            CHECK(c.outcome == "pass");
        }
    CHECK(saw_uniformizer);
    /* 13 = 5 mod 8: multiplying f by i flips the raw sum, (i/Q)_2 = i^6 = -1 */
    bool saw_zeta = false;
    for (auto const& [label, v] : rep.probes)
        if (label == "unit:zeta") {
            saw_zeta = true;
            CHECK(v == ModFraction(2, 1));
        }
    CHECK(saw_zeta);
    auto same = probe_well_definedness(inst, f, {{"one", F.one()}}, 0, 1);
    CHECK(same.probes.at(0).second == same.value);
}

TEST_CASE("pairing laws over a sample in Q(i) and Q(zeta_8)")
{
    CycloField F(4);
    std::vector<FactoredIdeal> sample;
    for (std::uint64_t p : {5ULL, 13ULL, 3ULL, 17ULL})
        for (auto const& P : split_prime(F, p))
            sample.emplace_back(P);
    sample.push_back(sample[0] * sample[2].pow(-1));
    auto rep = verify_pairing_laws(F, 2, sample);
    CHECK(rep.certified == static_cast<long>(sample.size()));
    CHECK(rep.all_passed());
    for (auto const& law : rep.laws)
        CHECK(law.checked > 0);

    CycloField F8(8);
    std::vector<FactoredIdeal> s8;
    for (std::uint64_t p : {17ULL, 3ULL})
        for (auto const& P : split_prime(F8, p))
            s8.emplace_back(P);
    auto rep8 = verify_pairing_laws(F8, 2, s8);
    CHECK(rep8.certified == static_cast<long>(s8.size()));
    for (auto const& law : rep8.laws)
        if (law.law != "symmetry")
            CHECK(law.passed);
}
