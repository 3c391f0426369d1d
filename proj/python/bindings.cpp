#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arithlink/cli.hpp"
#include "arithlink/cspartition.hpp"
#include "arithlink/errors.hpp"
#include "arithlink/ideals.hpp"
#include "arithlink/linking.hpp"
#include "arithlink/parse.hpp"
#include "arithlink/symbols.hpp"

namespace py = pybind11;
using namespace arithlink;

namespace {

std::vector<std::string> coeffs(CycloElement const& x)
{
    std::vector<std::string> out;
    for (auto const& c : x.coeffs())
        out.push_back(c.get_str());
    return out;
}

py::tuple frac(ModFraction const& f) { return py::make_tuple(f.k, f.n); }

PrimeIdeal single_prime(std::string const& spec, CycloField const& F)
{
    FactoredIdeal I = parse_ideal(spec, F);
    if (I.factors().size() != 1 || I.factors().begin()->second != 1)
        throw error(errc::invalid_argument, "expected a single prime, got " + I.to_string());
    return I.factors().begin()->first;
}

FpMatrix to_fp(std::vector<std::vector<long long>> const& rows, std::uint64_t p)
{
    FpMatrix out;
    for (auto const& r : rows) {
        FpVector v;
        for (long long x : r) {
            long long m = x % static_cast<long long>(p);
            v.push_back(static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m));
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_arithlink, m)
{
    m.doc() = "exact cyclotomic arithmetic, tame symbols, linking numbers, partition sums";

    py::register_exception<error>(m, "ArithlinkError", PyExc_ValueError);

    m.def(
        "run",
        [](std::vector<std::string> const& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_command(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run a command-line invocation; returns (exit code, stdout, stderr)");

    m.def(
        "factor",
        [](long mm, std::uint64_t p) {
            CycloField F(mm);
            py::list out;
            for (auto const& P : split_prime(F, p)) {
                py::dict d;
                d["p"] = P.p();
                std::vector<std::string> g;
                for (auto const& c : P.g())
                    g.push_back(c.get_str());
                d["g"] = g;
                d["f"] = P.residue_degree();
                d["label"] = P.label();
                d["spec"] = FactoredIdeal(P).to_string();
                out.append(d);
            }
            return out;
        },
        py::arg("m"), py::arg("p"), "primes of Q(zeta_m) over p");

    m.def(
        "norm",
        [](long mm, std::string const& expr) {
            CycloField F(mm);
            return norm(parse_element(expr, F)).get_str();
        },
        py::arg("m"), py::arg("expr"), "absolute norm as a rational string");

    m.def(
        "power_residue_symbol",
        [](long mm, long n, std::string const& a, std::string const& at) {
            CycloField F(mm);
            return frac(power_residue_symbol(parse_element(a, F), single_prime(at, F), n));
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("at"), "(a/P)_n as (k, n)");

    m.def(
        "tame_hilbert",
        [](long mm, long n, std::string const& a, std::string const& b, std::string const& at) {
            CycloField F(mm);
            return frac(tame_hilbert(parse_element(a, F), parse_element(b, F),
                                     single_prime(at, F), n));
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("at"),
        "(a, b)_P as (k, n)");

    m.def(
        "height_pairing",
        [](long mm, long n, std::string const& si, std::string const& sj,
           std::uint64_t max_nodes) {
            CycloField F(mm);
            auto inst = make_linking_instance(parse_ideal(si, F), parse_ideal(sj, F), n);
            GeneratorSearchOptions opts;
            opts.max_nodes = max_nodes;
            CycloElement f = certify_trivial(inst.I, n, opts);
            py::dict d;
            auto v = height_pairing(inst, f);
            d["value"] = frac(v);
            d["f"] = to_string(f);
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("ideal_i"), py::arg("ideal_j"),
        py::arg("max_nodes") = 0, "ht(I, J) with a certified witness");

    m.def(
        "gauss_sum",
        [](std::uint64_t p) {
            CycloField F(static_cast<long>(p));
            return coeffs(gauss_sum(F, p));
        },
        py::arg("p"), "power-basis coordinates of sum_x zeta_p^{x^2}");

    m.def(
        "partition",
        [](std::uint64_t p, std::vector<std::vector<long long>> const& D,
           std::vector<std::vector<long long>> const& sources) {
            auto inst = make_pairing_instance(p, to_fp(D, p), to_fp(sources, p));
            auto r = verify_theorem(inst, CompareMode::exact);
            py::dict d;
            d["m"] = r.lhs.field().m();
            d["lhs"] = coeffs(r.lhs);
            d["rhs"] = coeffs(r.rhs);
            d["lhs_text"] = to_string(r.lhs);
            d["equal"] = r.equal;
            return d;
        },
        py::arg("p"), py::arg("D"), py::arg("sources") = std::vector<std::vector<long long>>{},
        "brute-force and closed-form partition sums in Q(zeta_{4p})");

    m.def(
        "verify_theorem",
        [](std::uint64_t p, int a, std::uint64_t seed, std::string const& mode) {
            auto inst = random_pairing_instance(p, a, seed);
            CompareMode cm = mode == "numeric" ? CompareMode::numeric : CompareMode::exact;
            if (mode != "numeric" && mode != "exact")
                throw error(errc::invalid_argument, "mode must be exact or numeric");
            return verify_theorem(inst, cm).equal;
        },
        py::arg("p"), py::arg("a"), py::arg("seed") = 0, py::arg("mode") = "exact",
        "compare both sides on a seeded random instance");
}
