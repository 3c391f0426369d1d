#include "arithlink/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithlink/cspartition.hpp"
#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"
#include "arithlink/linking.hpp"
#include "arithlink/parse.hpp"
#include "arithlink/symbols.hpp"

namespace arithlink {

namespace {

using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    mpq_class bound_factor = 4;
    int precision = 30;
    std::uint64_t term_cap = 10'000'000;
    std::uint64_t seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

/* "3", "3/2" or "1.25" */
mpq_class parse_rational(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    try {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            mpq_class q(s);
            q.canonicalize();
            return q;
        }
        std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg)
            whole.erase(0, 1);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        mpz_class num(whole.empty() ? "0" : whole);
        num = num * den + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        mpq_class q(neg ? mpz_class(-num) : num, den);
        q.canonicalize();
        return q;
    } catch (std::invalid_argument const&) {
        throw usage_error("not a rational number: '" + s + "'");
    }
}

std::string trim(std::string const& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void apply_setting(RunConfig& cfg, std::string const& key, std::string const& value)
{
    try {
        if (key == "bound_factor") {
            cfg.bound_factor = parse_rational(value);
            if (cfg.bound_factor < 1)
                throw usage_error("bound_factor must be at least 1");
        } else if (key == "precision") {
            cfg.precision = std::stoi(value);
            if (cfg.precision < 15)
                throw usage_error("precision must be at least 15 digits");
        } else if (key == "term_cap") {
            cfg.term_cap = std::stoull(value);
            if (cfg.term_cap == 0)
                throw usage_error("term_cap must be positive");
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "workers") {
            long w = std::stol(value);
            if (w < 1)
                throw usage_error("workers must be positive");
            cfg.workers = static_cast<unsigned>(w);
        } else {
            throw usage_error("unknown configuration key '" + key + "'");
        }
    } catch (std::logic_error const&) {
        throw usage_error("bad value '" + value + "' for " + key);
    }
}

void read_config(RunConfig& cfg, std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw usage_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

/* options shared by every subcommand */
struct Common {
    std::string config;
    bool verbose = false;
    std::string bound_factor, precision, term_cap, seed, workers;

    void attach(CLI::App* sub)
    {
        sub->add_option("--config", config, "file of key = value lines (bound_factor, precision, "
                                            "term_cap, seed, workers); flags override it");
        sub->add_flag("--verbose", verbose, "human-readable rendering on standard error");
        sub->add_option("--bound-factor", bound_factor,
                        "generator search radius factor, rational >= 1 (default 4)");
        sub->add_option("--precision", precision, "decimal digits for numeric values (default 30)");
        sub->add_option("--term-cap", term_cap, "largest brute-force sum (default 10000000)");
        sub->add_option("--seed", seed, "master seed for randomized steps (default 0)");
        sub->add_option("--workers", workers, "worker threads (default: all cores)");
    }

    RunConfig resolve() const
    {
        RunConfig cfg;
        if (!config.empty())
            read_config(cfg, config);
        if (!bound_factor.empty())
            apply_setting(cfg, "bound_factor", bound_factor);
        if (!precision.empty())
            apply_setting(cfg, "precision", precision);
        if (!term_cap.empty())
            apply_setting(cfg, "term_cap", term_cap);
        if (!seed.empty())
            apply_setting(cfg, "seed", seed);
        if (!workers.empty())
            apply_setting(cfg, "workers", workers);
        return cfg;
    }
};

json fraction_json(ModFraction const& v)
{
    return json{{"num", v.k}, {"den", v.n}};
}

std::string number_string(mp_real const& x, int precision)
{
    mp_real eps = pow(mp_real(10), -(precision - 5));
    if (abs(x) < eps)
        return "0";
    return x.str(precision - 5);
}

json numeric_json(CycloElement const& x, int precision)
{
    PrecisionGuard guard(precision);
    auto vals = embed_numeric(x, precision);
    return json{{"re", number_string(vals[0].re, precision)},
                {"im", number_string(vals[0].im, precision)}};
}

json coeff_strings(CycloElement const& x)
{
    json a = json::array();
    for (auto const& c : x.coeffs())
        a.push_back(c.get_str());
    return a;
}

json integral_json(CycloElement const& x, int precision)
{
    json a = json::array();
    for (auto const& c : x.coeffs()) {
        mpz_class const& z = c.get_num();
        if (z.fits_slong_p())
            a.push_back(z.get_si());
        else
            a.push_back(z.get_str());
    }
    return json{{"m", x.field().m()}, {"coeffs", a}, {"numeric", numeric_json(x, precision)}};
}

std::vector<std::int64_t> parse_int_list(std::string const& text, std::string const& what)
{
    std::vector<std::int64_t> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty())
            return;
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (std::logic_error const&) {
            throw usage_error("bad integer '" + tok + "' in " + what);
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok += c;
    }
    flush();
    return out;
}

std::vector<FpVector> parse_rows(std::string const& text, std::uint64_t p, std::string const& what)
{
    std::vector<FpVector> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (trim(part).empty())
            continue;
        FpVector row;
        for (auto v : parse_int_list(part, what))
            row.push_back(reduce_mod(v, p));
        rows.push_back(std::move(row));
    }
    return rows;
}

PrimeIdeal parse_prime(std::string const& text, CycloField const& F)
{
    FactoredIdeal I = parse_ideal(text, F);
    if (I.factors().size() != 1 || I.factors().begin()->second != 1)
        throw error(errc::invalid_argument, "'" + text + "' is not a single prime ideal");
    return I.factors().begin()->first;
}

long checked_m(long m)
{
    if (m < 1)
        throw usage_error("--m must be positive");
    if (m > 100000)
        throw usage_error("--m is too large");
    return m;
}

int cmd_factor(long m, std::uint64_t p, RunConfig const& cfg, bool verbose, std::ostream& out,
               std::ostream& err)
{
    CycloField F(checked_m(m));
    auto primes = split_prime(F, p, cfg.seed);
    json arr = json::array();
    for (auto const& P : primes) {
        json g = json::array();
        for (auto const& c : P.g())
            g.push_back(c.get_si());
        arr.push_back(json{{"p", P.p()}, {"g", g}, {"f", P.residue_degree()}, {"label", P.label()}});
        if (verbose)
            err << P.to_string() << "  f = " << P.residue_degree() << "\n";
    }
    out << arr.dump(2) << "\n";
    return 0;
}

int cmd_symbol(long m, long n, std::string const& kind, std::string const& a_text,
               std::string const& b_text, std::string const& at, bool verbose, std::ostream& out,
               std::ostream& err)
{
    CycloField F(checked_m(m));
    PrimeIdeal P = parse_prime(at, F);
    CycloElement a = parse_element(a_text, F);
    ModFraction v;
    if (kind == "power") {
        v = power_residue_symbol(a, P, n);
    } else {
        if (b_text.empty())
            throw usage_error("--kind hilbert needs --b");
        CycloElement b = parse_element(b_text, F);
        v = tame_hilbert(a, b, P, n);
    }
    if (verbose)
        err << kind << " symbol at " << P.to_string() << " = " << v.to_string() << "\n";
    out << json{{"kind", kind}, {"at", P.to_string()}, {"value", fraction_json(v)}}.dump(2)
        << "\n";
    return 0;
}

int cmd_link(long m, long n, std::string const& si, std::string const& sj, bool probe_units,
             bool check_symmetry, RunConfig const& cfg, bool verbose, std::ostream& out,
             std::ostream& err)
{
    CycloField F(checked_m(m));
    FactoredIdeal I = parse_ideal(si, F, cfg.seed);
    FactoredIdeal J = parse_ideal(sj, F, cfg.seed);
    LinkingInstance inst = make_linking_instance(I, J, n);
    GeneratorSearchOptions opts;
    opts.bound_factor = cfg.bound_factor;
    opts.workers = cfg.workers;
    CycloElement f = certify_trivial(I, n, opts);
    auto units = probe_units ? default_unit_candidates(F)
                             : std::vector<std::pair<std::string, CycloElement>>{};
    LinkingReport rep = probe_well_definedness(inst, f, units, 10, cfg.seed);
    if (check_symmetry) {
        CycloElement fj = certify_trivial(J, n, opts);
        ModFraction rev = height_pairing(make_linking_instance(J, I, n), fj);
        bool same = rev == rep.value;
        rep.certificates.push_back({"symmetry", same ? "pass" : "fail",
                                    "ht(I,J) = " + rep.value.to_string() +
                                        ", ht(J,I) = " + rev.to_string()});
    }
    json certs = json::array();
    for (auto const& c : rep.certificates)
        certs.push_back(json{{"check", c.check}, {"outcome", c.outcome}, {"detail", c.detail}});
    json probes = json::object();
    for (auto const& [label, v] : rep.probes)
        probes[label] = fraction_json(v);
    json j{{"m", m},
           {"n", n},
           {"ideal_i", I.to_string()},
           {"ideal_j", J.to_string()},
           {"value", fraction_json(rep.value)},
           {"f_used", coeff_strings(f)},
           {"certificates", certs},
           {"probes", probes}};
    if (verbose) {
        err << "I = " << I.to_string() << "\nJ = " << J.to_string() << "\nf = " << to_string(f)
            << "\nht(I,J) = " << rep.value.to_string() << "\n";
        for (auto const& c : rep.certificates)
            err << "  " << c.check << ": " << c.outcome << " " << c.detail << "\n";
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_partition(std::uint64_t p, int dim, std::string const& matrix, std::string const& sources,
                  std::string const& mode, double tol, RunConfig const& cfg, bool verbose,
                  std::ostream& out, std::ostream& err)
{
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw error(errc::not_prime, std::to_string(p) + " is not an odd prime");
    FpMatrix D = parse_rows(matrix, p, "--matrix");
    if (dim < 1 || static_cast<int>(D.size()) != dim)
        throw usage_error("--matrix must have --dim rows");
    std::vector<FpVector> src = parse_rows(sources, p, "--sources");
    PairingInstance inst = make_pairing_instance(p, D, src);
    CompareMode cm = mode == "exact" ? CompareMode::exact : CompareMode::numeric;
    TheoremReport r = verify_theorem(inst, cm, tol, cfg.term_cap, cfg.workers, cfg.precision);
    KernelData K(inst.D, p);
    json j{{"p", p},
           {"dim", dim},
           {"mode", mode},
           {"b", K.b()},
           {"legendre", dbar_det_legendre(inst.D, p)},
           {"lhs", integral_json(r.lhs, cfg.precision)},
           {"rhs", integral_json(r.rhs, cfg.precision)},
           {"equal", r.equal}};
    if (verbose)
        err << "brute force: " << to_string(r.lhs) << "\nclosed form: " << to_string(r.rhs)
            << "\nequal: " << (r.equal ? "yes" : "no") << "\n";
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(std::string const& plist, std::string const& alist, int trials,
               std::string const& mode, double tol, RunConfig const& cfg, bool verbose,
               std::ostream& out, std::ostream& err)
{
    auto ps = parse_int_list(plist, "--p-list");
    auto as = parse_int_list(alist, "--dim-list");
    if (ps.empty() || as.empty())
        throw usage_error("--p-list and --dim-list must be nonempty");
    if (trials < 1)
        throw usage_error("--trials must be positive");
    CompareMode cm = mode == "exact" ? CompareMode::exact : CompareMode::numeric;
    json inst_arr = json::array();
    long passed = 0, total = 0;
    for (auto p : ps) {
        if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p)))
            throw error(errc::not_prime, std::to_string(p) + " is not an odd prime");
        for (auto a : as) {
            if (a < 1 || a > 64)
                throw usage_error("dimensions must lie in [1, 64]");
            long ok_here = 0;
            for (int t = 0; t < trials; ++t) {
                std::uint64_t s = mix_seed(
                    mix_seed(mix_seed(cfg.seed, static_cast<std::uint64_t>(p)),
                             static_cast<std::uint64_t>(a)),
                    static_cast<std::uint64_t>(t));
                PairingInstance inst =
                    random_pairing_instance(static_cast<std::uint64_t>(p), static_cast<int>(a), s);
                TheoremReport r =
                    verify_theorem(inst, cm, tol, cfg.term_cap, cfg.workers, cfg.precision);
                KernelData K(inst.D, inst.p);
                inst_arr.push_back(json{{"p", p},
                                        {"a", a},
                                        {"trial", t},
                                        {"b", K.b()},
                                        {"sources", inst.sources.size()},
                                        {"equal", r.equal}});
                ++total;
                if (r.equal) {
                    ++passed;
                    ++ok_here;
                }
            }
            if (verbose)
                err << "p = " << p << ", a = " << a << ": " << ok_here << "/" << trials
                    << " equal\n";
        }
    }
    json j{{"mode", mode},   {"seed", cfg.seed},          {"trials", trials},
           {"total", total}, {"passed", passed},          {"all_equal", passed == total},
           {"instances", inst_arr}};
    out << j.dump(2) << "\n";
    return 0;
}

int fail(std::ostream& out, error const& e)
{
    json j{{"error", std::string(e.name())}, {"detail", e.detail()}};
    if (auto const* se = dynamic_cast<search_exhausted const*>(&e)) {
        j["radius"] = se->radius();
        j["budget_hit"] = se->budget_hit();
    }
    if (auto const* pe = dynamic_cast<parse_error const*>(&e)) {
        j["column"] = pe->column();
        j["expected"] = pe->expected();
    }
    out << j.dump(2) << "\n";
    return 1;
}

constexpr char const* element_grammar =
    "Element EXPR grammar (z is zeta_m, whitespace ignored):\n"
    "  expr := ['-'] term (('+'|'-') term)*\n"
    "  term := factor ('*' factor)*\n"
    "  factor := atom ('^' ['-'] integer)?\n"
    "  atom := integer | 'z' | '(' expr ')'\n";

constexpr char const* ideal_grammar =
    "Ideal SPEC grammar:\n"
    "  spec := '1' | item ('*' item)*\n"
    "  item := ('(' EXPR ')' | 'P(' p ',[' g0 ',' g1 ... '])') ('^' ['-'] integer)?\n"
    "  P(p,[g0,g1,...]) is the prime (p, g0 + g1 z + ...); g must be an irreducible\n"
    "  factor of Phi_m mod p with p not dividing m. '(EXPR)' is the principal ideal.\n";

} // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact arithmetic in cyclotomic fields: prime splitting, power residue and "
                 "tame Hilbert symbols, mod-n height pairings, and the finite Chern-Simons "
                 "partition identity. Results are JSON on standard output.",
                 "arithlink"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    Common common;
    long m = 0, n = 0;
    std::uint64_t prime = 0;

    auto* factor = app.add_subcommand("factor", "split a rational prime in Q(zeta_m)");
    factor->add_option("--m", m, "cyclotomic index")->required();
    factor->add_option("--prime", prime, "rational prime not dividing m")->required();
    common.attach(factor);

    std::string kind, a_text, b_text, at;
    auto* symbol = app.add_subcommand("symbol", "power residue or tame Hilbert symbol at a prime");
    symbol->add_option("--m", m, "cyclotomic index")->required();
    symbol->add_option("--n", n, "symbol order; must divide m")->required();
    symbol->add_option("--kind", kind, "power or hilbert")
        ->required()
        ->check(CLI::IsMember({"power", "hilbert"}));
    symbol->add_option("--a", a_text, "first argument (EXPR)")->required();
    symbol->add_option("--b", b_text, "second argument (EXPR), hilbert only");
    symbol->add_option("--at", at, "the prime, as P(p,[g0,g1,...])")->required();
    symbol->footer(element_grammar);
    common.attach(symbol);

    std::string si, sj;
    bool probe_units = false, check_symmetry = false;
    auto* link = app.add_subcommand("link", "mod-n height pairing ht(I, J)");
    link->add_option("--m", m, "cyclotomic index, even")->required();
    link->add_option("--n", n, "pairing order; n^2 must divide m")->required();
    link->add_option("--ideal-i", si, "ideal I (SPEC)")->required();
    link->add_option("--ideal-j", sj, "ideal J (SPEC)")->required();
    link->add_flag("--probe-units", probe_units,
                   "also recompute with f replaced by unit multiples u f");
    link->add_flag("--check-symmetry", check_symmetry, "also compute ht(J, I)");
    link->footer(std::string(ideal_grammar) + element_grammar);
    common.attach(link);

    std::uint64_t p = 0;
    int dim = 0;
    std::string matrix, sources, mode = "exact";
    double tol = 1e-9;
    auto* partition = app.add_subcommand("partition", "brute-force partition sum vs closed form");
    partition->add_option("--p", p, "odd prime")->required();
    partition->add_option("--dim", dim, "dimension a")->required();
    partition->add_option("--matrix", matrix, "symmetric D, rows separated by ';', entries by ','")
        ->required();
    partition->add_option("--sources", sources, "source vectors in im(D), separated by ';'");
    partition->add_option("--mode", mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    partition->add_option("--tol", tol, "relative tolerance in numeric mode")
        ->check(CLI::PositiveNumber);
    common.attach(partition);

    std::string plist, alist;
    int trials = 0;
    auto* verify = app.add_subcommand("verify-theorem", "seeded random sweep of the identity");
    verify->add_option("--p-list", plist, "odd primes, comma separated")->required();
    verify->add_option("--dim-list", alist, "dimensions, comma separated")->required();
    verify->add_option("--trials", trials, "instances per (p, a)")->required();
    verify->add_option("--mode", mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    verify->add_option("--tol", tol, "relative tolerance in numeric mode")
        ->check(CLI::PositiveNumber);
    common.attach(verify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::ParseError const& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        RunConfig cfg = common.resolve();
        bool verbose = common.verbose;
        if (factor->parsed())
            return cmd_factor(m, prime, cfg, verbose, out, err);
        if (symbol->parsed())
            return cmd_symbol(m, n, kind, a_text, b_text, at, verbose, out, err);
        if (link->parsed())
            return cmd_link(m, n, si, sj, probe_units, check_symmetry, cfg, verbose, out, err);
        if (partition->parsed())
            return cmd_partition(p, dim, matrix, sources, mode, tol, cfg, verbose, out, err);
        if (verify->parsed())
            return cmd_verify(plist, alist, trials, mode, tol, cfg, verbose, out, err);
    } catch (usage_error const& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (error const& e) {
        if (common.verbose)
            err << e.what() << "\n";
        return fail(out, e);
    } catch (std::exception const& e) {
        out << json{{"error", "InternalError"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}

} // namespace arithlink
