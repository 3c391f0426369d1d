#ifndef ARITHLINK_LINKING_HPP_
#define ARITHLINK_LINKING_HPP_

/* The mod-n height pairing of ideals of Q(zeta_m) (m even, n^2 | m),
 * evaluated as a sum of tame Hilbert symbols over the support of J:
 *
 *   ht(I, J) = sum_{v | J} (f, w_v^{e_v})_n,   (f^{-1}) = I^n,
 *
 * with w_v a uniformizer at v and e_v = ord_v(J). */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/ideals.hpp"
#include "arithlink/symbols.hpp"

namespace arithlink {

struct LinkingInstance {
    CycloField field;
    long n;
    FactoredIdeal I;
    FactoredIdeal J;
};

/* checks m even, n^2 | m and that I, J live in the field */
LinkingInstance make_linking_instance(FactoredIdeal I, FactoredIdeal J, long n);

/* a generator of the fractional ideal I, if the bounded search finds one;
 * rethrows search_exhausted only for errors other than exhaustion */
std::optional<CycloElement> principal_generator(FactoredIdeal const& I,
                                                GeneratorSearchOptions const& opts = {});

/* f with (f^{-1}) = I^n. A generator of I itself is tried first (then
 * f = pi^{-n}); otherwise I^n is searched directly. Throws
 * TrivialityUndetermined when the search gives up. */
CycloElement certify_trivial(FactoredIdeal const& I, long n,
                             GeneratorSearchOptions const& opts = {});

/* throws UncertifiedWitness unless (f^{-1}) = I^n */
void check_witness(FactoredIdeal const& I, long n, CycloElement const& f);

/* the pairing for a certified witness f */
ModFraction height_pairing(LinkingInstance const& inst, CycloElement const& f);

/* the same sum with explicit uniformizers (one per prime of supp(J));
 * no witness check */
ModFraction height_pairing_raw(LinkingInstance const& inst, CycloElement const& f,
                               std::map<PrimeIdeal, CycloElement> const& uniformizers);

struct Certificate {
    std::string check;
    std::string outcome; // "pass", "fail", "varies" or "not_checked"
    std::string detail;
};

struct LinkingReport {
    ModFraction value;
    CycloElement f_used;
    std::vector<Certificate> certificates;
    std::vector<std::pair<std::string, ModFraction>> probes; // in probe order
};

/* units used by default when probing generator dependence: zeta, -1 and
 * cyclotomic units (1 - z^k) / (1 - z) */
std::vector<std::pair<std::string, CycloElement>> default_unit_candidates(CycloField const& F);

/* Recomputes the pairing with f replaced by u f for each unit u, and with
 * `trials` random P-unit multiples of each uniformizer. */
LinkingReport probe_well_definedness(
    LinkingInstance const& inst, CycloElement const& f,
    std::vector<std::pair<std::string, CycloElement>> const& unit_candidates, int trials,
    std::uint64_t seed);

struct LawResult {
    std::string law;
    bool passed = true;
    long checked = 0;
    std::vector<std::string> counterexamples;
};

struct PairingLawReport {
    std::vector<LawResult> laws;
    long certified = 0;
    long undetermined = 0;
    bool all_passed() const;
};

/* symmetry, additivity in J (J_k * J_{k+1}), n-torsion and principal
 * n-th power nullity over all pairs of the sample */
PairingLawReport verify_pairing_laws(CycloField const& F, long n,
                                     std::vector<FactoredIdeal> const& sample,
                                     GeneratorSearchOptions const& opts = {});

} // namespace arithlink

#endif /* ARITHLINK_LINKING_HPP_ */
