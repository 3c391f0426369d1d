#include "arithlink/linking.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"

namespace arithlink {

LinkingInstance make_linking_instance(FactoredIdeal I, FactoredIdeal J, long n)
{
    CycloField F = I.field();
    if (!(F == J.field()))
        throw error(errc::field_mismatch, "I and J live in different fields");
    long m = F.m();
    if (m % 2 != 0)
        throw error(errc::invalid_argument, "the linking pairing needs m even");
    if (n <= 0 || m % (n * n) != 0)
        throw error(errc::invalid_argument,
                    "n^2 must divide m (n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                        ")");
    return LinkingInstance{F, n, std::move(I), std::move(J)};
}

namespace {

/* I * (d) integral, with d a product of rational primes */
std::pair<FactoredIdeal, mpz_class> clear_denominator(FactoredIdeal const& I)
{
    std::map<std::uint64_t, long> need;
    for (auto const& [P, e] : I.factors())
        if (e < 0)
            need[P.p()] = std::max(need[P.p()], -e);
    FactoredIdeal out = I;
    mpz_class d = 1;
    for (auto const& [p, k] : need) {
        out *= rational_prime_ideal(I.field(), p).pow(k);
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        d *= pk;
    }
    return {out, d};
}

} // namespace

std::optional<CycloElement> principal_generator(FactoredIdeal const& I,
                                                GeneratorSearchOptions const& opts)
{
    if (I.is_unit())
        return I.field().one();
    auto [A, d] = clear_denominator(I);
    try {
        auto r = find_generator(A, opts);
        return mpq_class(1, d) * r.generator;
    } catch (search_exhausted const&) {
        return std::nullopt;
    }
}

CycloElement certify_trivial(FactoredIdeal const& I, long n, GeneratorSearchOptions const& opts)
{
    if (n <= 0)
        throw error(errc::invalid_argument, "n must be positive");
    CycloField const& F = I.field();
    if (I.is_unit())
        return F.one();
    CycloElement f = F.one();
    if (auto pi = principal_generator(I, opts)) {
        f = pi->pow(-n);
    } else {
        auto [A, d] = clear_denominator(I);
        mpz_class dn;
        mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        try {
            auto r = find_generator(A.pow(n), opts);
            f = mpq_class(dn) * r.generator.inverse();
        } catch (search_exhausted const& e) {
            throw search_exhausted(errc::triviality_undetermined, e.radius(), e.budget_hit(),
                                   "I^" + std::to_string(n) + " for I = " + I.to_string() +
                                       ": no generator found within trace-form radius " +
                                       e.radius() + (e.budget_hit() ? " (node budget hit)" : "") +
                                       "; this does not prove nontriviality");
        }
    }
    check_witness(I, n, f);
    return f;
}

void check_witness(FactoredIdeal const& I, long n, CycloElement const& f)
{
    if (f.is_zero())
        throw error(errc::uncertified_witness, "witness is zero");
    if (!(f.field() == I.field()))
        throw error(errc::field_mismatch, "witness and ideal live in different fields");
    auto fac = factor_element(f.inverse());
    if (!fac.excluded_primes.empty())
        throw error(errc::uncertified_witness, "witness has support at primes dividing m");
    FactoredIdeal want = I.pow(n);
    if (!(fac.ideal == want))
        throw error(errc::uncertified_witness, "(f^-1) = " + fac.ideal.to_string() +
                                                   " but I^n = " + want.to_string());
}

ModFraction height_pairing_raw(LinkingInstance const& inst, CycloElement const& f,
                               std::map<PrimeIdeal, CycloElement> const& uniformizers)
{
    ModFraction total(inst.n, 0);
    for (auto const& [v, e] : inst.J.factors()) {
        auto it = uniformizers.find(v);
        CycloElement w = it != uniformizers.end() ? it->second : uniformizer(v);
        total += tame_hilbert(f, w.pow(e), v, inst.n);
    }
    return total;
}

ModFraction height_pairing(LinkingInstance const& inst, CycloElement const& f)
{
    check_witness(inst.I, inst.n, f);
    return height_pairing_raw(inst, f, {});
}

std::vector<std::pair<std::string, CycloElement>> default_unit_candidates(CycloField const& F)
{
    std::vector<std::pair<std::string, CycloElement>> out;
    out.emplace_back("zeta", F.zeta());
    out.emplace_back("-1", F.from_int(-1));
    long m = F.m();
    if (m <= 2)
        return out;
    CycloElement one_minus_z = F.one() - F.zeta();
    CycloElement inv = one_minus_z.inverse();
    for (long k = 2; k < m / 2 && out.size() < 6; ++k) {
        if (std::gcd(k, m) != 1)
            continue;
        CycloElement u = (F.one() - F.zeta_power(k)) * inv;
        if (abs(norm(u)) != 1)
            continue;
        bool root_of_unity = false;
        for (long j = 0; j < m && !root_of_unity; ++j)
            root_of_unity = (u == F.zeta_power(j));
        if (!root_of_unity)
            out.emplace_back("(1-z^" + std::to_string(k) + ")/(1-z)", u);
    }
    return out;
}

namespace {

/* random integral element prime to P with small coordinates */
CycloElement random_p_unit(PrimeIdeal const& P, std::mt19937_64& rng)
{
    CycloField const& F = P.field();
    std::uniform_int_distribution<int> coef(-3, 3);
    for (;;) {
        ZPoly c(static_cast<std::size_t>(F.degree()));
        for (auto& x : c)
            x = coef(rng);
        CycloElement u = F.from_coeffs(c);
        if (!u.is_zero() && !P.contains(u.integral_coeffs()))
            return u;
    }
}

} // namespace

LinkingReport probe_well_definedness(
    LinkingInstance const& inst, CycloElement const& f,
    std::vector<std::pair<std::string, CycloElement>> const& unit_candidates, int trials,
    std::uint64_t seed)
{
    LinkingReport rep{height_pairing(inst, f), f, {}, {}};
    rep.certificates.push_back({"witness", "pass", "(f^-1) = I^" + std::to_string(inst.n)});

    std::map<PrimeIdeal, CycloElement> base;
    for (auto const& [v, e] : inst.J.factors())
        base.emplace(v, uniformizer(v));

    bool gen_same = true;
    std::string gen_detail;
    for (auto const& [label, u] : unit_candidates) {
        mpq_class nu = abs(norm(u));
        if (nu != 1)
            throw error(errc::invalid_argument, "probe candidate " + label + " is not a unit");
        ModFraction val = height_pairing_raw(inst, u * f, base);
        rep.probes.emplace_back("unit:" + label, val);
        if (!(val == rep.value)) {
            gen_same = false;
            if (!gen_detail.empty())
                gen_detail += "; ";
            gen_detail += label + " gives " + val.to_string();
        }
    }
    if (unit_candidates.empty())
        rep.certificates.push_back({"generator_independence", "not_checked", "no units probed"});
    else
        rep.certificates.push_back({"generator_independence", gen_same ? "pass" : "varies",
                                    gen_same ? "all unit multiples agree" : gen_detail});

    std::mt19937_64 rng(seed);
    std::set<ModFraction> seen{rep.value};
    for (int t = 0; t < trials; ++t) {
        std::map<PrimeIdeal, CycloElement> ws;
        for (auto const& [v, w] : base)
            ws.emplace(v, w * random_p_unit(v, rng));
        ModFraction val = height_pairing_raw(inst, f, ws);
        rep.probes.emplace_back("uniformizer:" + std::to_string(t), val);
        seen.insert(val);
    }
    rep.certificates.push_back({"uniformizer_independence", seen.size() == 1 ? "pass" : "fail",
                                std::to_string(trials) + " redraws, " +
                                    std::to_string(seen.size()) + " distinct value(s)"});
    bool torsion = (inst.n * rep.value).is_zero();
    for (auto const& [label, v] : rep.probes)
        torsion = torsion && (inst.n * v).is_zero();
    rep.certificates.push_back({"n_torsion", torsion ? "pass" : "fail", ""});
    return rep;
}

bool PairingLawReport::all_passed() const
{
    return std::all_of(laws.begin(), laws.end(), [](LawResult const& l) { return l.passed; });
}

namespace {

bool disjoint(FactoredIdeal const& a, FactoredIdeal const& b)
{
    for (auto const& [P, e] : a.factors())
        if (b.exponent(P) != 0)
            return false;
    return true;
}

void record(LawResult& law, bool ok, std::string const& what)
{
    ++law.checked;
    if (!ok) {
        law.passed = false;
        if (law.counterexamples.size() < 10)
            law.counterexamples.push_back(what);
    }
}

} // namespace

PairingLawReport verify_pairing_laws(CycloField const& F, long n,
                                     std::vector<FactoredIdeal> const& sample,
                                     GeneratorSearchOptions const& opts)
{
    PairingLawReport rep;
    struct Cert {
        FactoredIdeal I;
        CycloElement f;
        std::optional<CycloElement> pi;
    };
    std::vector<Cert> certs;
    for (auto const& I : sample) {
        if (!(I.field() == F))
            throw error(errc::field_mismatch, "sample ideal from another field");
        try {
            std::optional<CycloElement> pi = principal_generator(I, opts);
            CycloElement f = certify_trivial(I, n, opts);
            certs.push_back({I, f, pi});
            ++rep.certified;
        } catch (search_exhausted const&) {
            ++rep.undetermined;
        }
    }
    LawResult sym, add, tor, nul;
    sym.law = "symmetry";
    add.law = "additivity";
    tor.law = "n_torsion";
    nul.law = "principal_nullity";
    auto ht = [&](Cert const& c, FactoredIdeal const& J, CycloElement const& f) {
        ModFraction v = height_pairing_raw(make_linking_instance(c.I, J, n), f, {});
        record(tor, (n * v).is_zero(), c.I.to_string() + " x " + J.to_string());
        return v;
    };
    std::size_t N = certs.size();
    std::vector<std::vector<ModFraction>> table(N, std::vector<ModFraction>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            table[i][j] = ht(certs[i], certs[j].I, certs[i].f);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            record(sym, table[i][j] == table[j][i],
                   "ht(" + certs[i].I.to_string() + ", " + certs[j].I.to_string() + ") = " +
                       table[i][j].to_string() + " but reversed = " + table[j][i].to_string());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k + 1 < N; ++k) {
            FactoredIdeal J = certs[k].I * certs[k + 1].I;
            ModFraction lhs = ht(certs[i], J, certs[i].f);
            ModFraction rhs = table[i][k] + table[i][k + 1];
            record(add, lhs == rhs,
                   "I = " + certs[i].I.to_string() + ", J = " + J.to_string() + ": " +
                       lhs.to_string() + " vs " + rhs.to_string());
        }
    for (std::size_t i = 0; i < N; ++i) {
        if (!certs[i].pi)
            continue;
        CycloElement f = certs[i].pi->pow(-n);
        for (std::size_t j = 0; j < N; ++j) {
            if (!disjoint(certs[i].I, certs[j].I))
                continue;
            ModFraction v = ht(certs[i], certs[j].I, f);
            record(nul, v.is_zero(),
                   "I = (" + to_string(*certs[i].pi) + "), J = " + certs[j].I.to_string() +
                       " gives " + v.to_string());
        }
    }
    rep.laws = {sym, add, tor, nul};
    return rep;
}

} // namespace arithlink
