#include "arithlink/ideals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"

namespace arithlink {

namespace {

ZPoly lift(FpPoly const& a)
{
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a)
        r.push_back(mpz_class(static_cast<unsigned long>(c)));
    return r;
}

IntVector to_int_vector(CycloElement const& x)
{
    if (!x.is_integral())
        throw error(errc::invalid_argument, "element is not integral");
    IntVector v;
    v.reserve(x.coeffs().size());
    for (auto const& c : x.coeffs())
        v.push_back(c.get_num());
    return v;
}

CycloElement from_int_vector(CycloField const& F, IntVector const& v)
{
    QPoly q(v.begin(), v.end());
    return CycloElement(F, std::move(q));
}

} // namespace

std::vector<PrimeIdeal> split_prime(CycloField const& F, std::uint64_t p, std::uint64_t seed)
{
    FpPolyRing R(p);
    if (F.m() % static_cast<long>(p) == 0)
        throw error(errc::ramified_prime, std::to_string(p) + " divides m = " +
                                              std::to_string(F.m()));
    FpPoly phibar = R.reduce(F.phi_poly());
    auto factors = factor_poly_mod_p(phibar, R, seed);
    std::vector<PrimeIdeal> out;
    out.reserve(factors.size());
    int label = 0;
    for (auto const& fac : factors) {
        /* p does not divide m, so Phi_m is squarefree mod p */
        if (fac.multiplicity != 1)
            throw error(errc::ramified_prime, "repeated factor of Phi_m mod p");
        FpPoly const& gbar = fac.factor;
        FpPoly h = R.divmod(phibar, gbar).first;
        FpPoly y;
        if (h.size() == 1) {
            y = FpPoly{1};
        } else {
            /* y = 1 mod gbar, y = 0 mod h */
            y = R.rem(R.mul(h, R.invmod(h, gbar)), phibar);
        }
        CycloElement tau = F.from_coeffs(lift(y));
        auto d = std::make_shared<PrimeIdeal::Data>(PrimeIdeal::Data{
            F, p, lift(gbar), gbar, label++, ResidueField(p, gbar), std::move(tau)});
        out.push_back(PrimeIdeal(std::move(d)));
    }
    return out;
}

PrimeIdeal::PrimeIdeal(CycloField const& field, std::uint64_t p, ZPoly const& g)
{
    FpPolyRing R(p);
    FpPoly gbar = R.monic(R.reduce(g));
    if (gbar.size() < 2)
        throw error(errc::invalid_argument, "prime generator must be nonconstant mod p");
    for (auto const& P : split_prime(field, p)) {
        if (P.d_->gbar == gbar) {
            d_ = P.d_;
            return;
        }
    }
    throw error(errc::not_irreducible,
                "polynomial is not an irreducible factor of Phi_m mod " + std::to_string(p));
}

bool PrimeIdeal::contains(ZPoly const& integral) const
{
    return reduce(integral).empty();
}

FpPoly PrimeIdeal::reduce(ZPoly const& integral) const
{
    FpPolyRing const& R = d_->residue.ring();
    return R.rem(R.reduce(integral), d_->gbar);
}

std::string PrimeIdeal::to_string() const
{
    std::string s = "P(" + std::to_string(p()) + ",[";
    for (std::size_t i = 0; i < g().size(); ++i) {
        if (i)
            s += ",";
        s += g()[i].get_str();
    }
    return s + "])";
}

FactoredIdeal::FactoredIdeal(PrimeIdeal const& P, long e) : field_(P.field())
{
    if (e != 0)
        factors_.emplace(P, e);
}

long FactoredIdeal::exponent(PrimeIdeal const& P) const
{
    auto it = factors_.find(P);
    return it == factors_.end() ? 0 : it->second;
}

bool FactoredIdeal::is_integral() const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [](auto const& kv) { return kv.second > 0; });
}

std::vector<PrimeIdeal> FactoredIdeal::support() const
{
    std::vector<PrimeIdeal> s;
    for (auto const& kv : factors_)
        s.push_back(kv.first);
    return s;
}

mpq_class FactoredIdeal::norm() const
{
    mpz_class num = 1, den = 1;
    for (auto const& [P, e] : factors_) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), P.norm().get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
        if (e > 0)
            num *= q;
        else
            den *= q;
    }
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

FactoredIdeal& FactoredIdeal::operator*=(FactoredIdeal const& b)
{
    if (!(field_ == b.field_))
        throw error(errc::field_mismatch, "ideals live in different fields");
    for (auto const& [P, e] : b.factors_) {
        long& slot = factors_[P];
        slot += e;
        if (slot == 0)
            factors_.erase(P);
    }
    return *this;
}

FactoredIdeal FactoredIdeal::pow(long e) const
{
    FactoredIdeal r(field_);
    if (e == 0)
        return r;
    for (auto const& [P, x] : factors_)
        r.factors_.emplace(P, x * e);
    return r;
}

std::string FactoredIdeal::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (auto const& [P, e] : factors_) {
        if (!s.empty())
            s += " * ";
        s += P.to_string();
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

FactoredIdeal rational_prime_ideal(CycloField const& F, std::uint64_t p)
{
    FactoredIdeal r(F);
    for (auto const& P : split_prime(F, p))
        r *= FactoredIdeal(P);
    return r;
}

bool IdealLattice::contains(CycloElement const& x) const
{
    if (!x.is_integral())
        return false;
    return lattice_contains(basis, to_int_vector(x));
}

std::vector<CycloElement> IdealLattice::basis_elements() const
{
    std::vector<CycloElement> out;
    out.reserve(basis.size());
    for (auto const& b : basis)
        out.push_back(from_int_vector(field, b));
    return out;
}

IdealLattice ideal_lattice(FactoredIdeal const& A)
{
    CycloField const& F = A.field();
    std::size_t n = static_cast<std::size_t>(F.degree());
    if (!A.is_integral())
        throw error(errc::negative_exponent, "ideal " + A.to_string() + " is not integral");
    IntBasis basis(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        basis[i][i] = 1;
    for (auto const& [P, e] : A.factors()) {
        CycloElement gz = F.from_coeffs(P.g());
        mpz_class pz(static_cast<unsigned long>(P.p()));
        for (long k = 0; k < e; ++k) {
            /* L * (p, g) = p L + g L */
            std::vector<IntVector> gens;
            gens.reserve(2 * n);
            for (auto const& b : basis) {
                IntVector pb = b;
                for (auto& c : pb)
                    c *= pz;
                gens.push_back(std::move(pb));
                gens.push_back(to_int_vector(gz * from_int_vector(F, b)));
            }
            mpz_class D = hnf_determinant(basis) * P.norm();
            basis = hnf_basis(std::move(gens), n, D);
        }
    }
    return IdealLattice{F, std::move(basis)};
}

CycloElement anti_uniformizer(PrimeIdeal const& P)
{
    return mpq_class(1, static_cast<unsigned long>(P.p())) * P.crt_idempotent();
}

std::pair<long, CycloElement> split_at_prime(CycloElement y, PrimeIdeal const& P)
{
    if (y.is_zero())
        throw error(errc::zero_element, "valuation of zero");
    if (!y.is_integral())
        throw error(errc::invalid_argument, "split_at_prime needs an integral element");
    mpq_class inv_p(1, static_cast<unsigned long>(P.p()));
    CycloElement const& tau = P.crt_idempotent();
    long k = 0;
    while (P.contains(y.integral_coeffs())) {
        y = inv_p * (y * tau);
        ++k;
    }
    return {k, std::move(y)};
}

long valuation(CycloElement const& x, PrimeIdeal const& P)
{
    if (x.is_zero())
        throw error(errc::zero_element, "valuation of zero");
    if (!(x.field() == P.field()))
        throw error(errc::field_mismatch, "element and prime live in different fields");
    mpz_class d = x.denominator();
    CycloElement y = mpq_class(d) * x;
    long v = split_at_prime(y, P).first;
    return v - valuation_p(d, P.p());
}

CycloElement uniformizer(PrimeIdeal const& P)
{
    IdealLattice L = ideal_lattice(FactoredIdeal(P));
    IdealLattice L2 = ideal_lattice(FactoredIdeal(P, 2));
    for (auto const& b : L.basis)
        if (!lattice_contains(L2.basis, b))
            return from_int_vector(P.field(), b);
    throw error(errc::invalid_argument, "no uniformizer among basis columns");
}

namespace {

struct Candidate {
    mpz_class form; // trace form value
    IntVector coords; // power-basis coordinates
};

/* (form ascending, coords lexicographically descending) */
bool better(Candidate const& a, Candidate const& b)
{
    if (a.form != b.form)
        return a.form < b.form;
    return a.coords > b.coords;
}

class FinckePohst {
  public:
    FinckePohst(IdealLattice const& L, mpz_class target_norm, mpz_class radius,
                std::uint64_t max_nodes, std::atomic<std::uint64_t>& nodes)
        : L_(L), n_(L.basis.size()), target_(std::move(target_norm)),
          max_nodes_(max_nodes), nodes_(nodes)
    {
        auto elems = L.basis_elements();
        RationalMatrix G = trace_gram(elems);
        gram_.assign(n_, IntVector(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                gram_[i][j] = G[i][j].get_num();
        /* Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2 */
        q_ = G;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                q_[j][i] = q_[i][j];
                q_[i][j] /= q_[i][i];
            }
            for (std::size_t k = i + 1; k < n_; ++k)
                for (std::size_t l = k; l < n_; ++l)
                    q_[k][l] -= q_[k][i] * q_[i][l];
        }
        radius_ = radius;
        mpz_class nn = n_;
        mpz_pow_ui(amgm_.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(n_));
        amgm_ *= target_ * target_;
    }

    /* integer interval of x_i with S + q_ii (x_i - c)^2 <= bound */
    std::pair<mpz_class, mpz_class> interval(std::size_t i, mpq_class const& c,
                                             mpq_class const& room) const
    {
        if (room < 0)
            return {1, 0};
        mpq_class const& qii = q_[i][i];
        double cd = c.get_d();
        double rd = std::sqrt(mpq_class(room / qii).get_d());
        mpz_class lo, hi;
        mpz_set_d(lo.get_mpz_t(), std::floor(cd - rd));
        mpz_set_d(hi.get_mpz_t(), std::ceil(cd + rd));
        auto ok = [&](mpz_class const& x) {
            mpq_class t = mpq_class(x) - c;
            return qii * t * t <= room;
        };
        while (ok(lo - 1))
            --lo;
        while (lo <= hi && !ok(lo))
            ++lo;
        while (ok(hi + 1))
            ++hi;
        while (hi >= lo && !ok(hi))
            --hi;
        return {lo, hi};
    }

    mpq_class center(std::size_t i, IntVector const& x) const
    {
        mpq_class c = 0;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (x[j] != 0)
                c -= q_[i][j] * x[j];
        return c;
    }

    std::vector<mpz_class> top_values() const
    {
        IntVector x(n_);
        auto [lo, hi] = interval(n_ - 1, 0, mpq_class(radius_));
        std::vector<mpz_class> v;
        for (mpz_class t = lo; t <= hi; ++t)
            v.push_back(t);
        return v;
    }

    /* search the subtree with x_{n-1} fixed */
    void run(mpz_class const& top)
    {
        IntVector x(n_);
        x[n_ - 1] = top;
        mpq_class c = 0;
        mpq_class t = mpq_class(top) - c;
        mpq_class used = q_[n_ - 1][n_ - 1] * t * t;
        if (n_ == 1)
            leaf(x);
        else
            descend(n_ - 2, x, used);
    }

    std::optional<Candidate> const& best() const { return best_; }
    bool budget_hit() const { return budget_hit_; }

  private:
    mpq_class bound() const
    {
        return best_ ? mpq_class(best_->form) : mpq_class(radius_);
    }

    void descend(std::size_t i, IntVector& x, mpq_class const& used)
    {
        mpq_class c = center(i, x);
        auto [lo, hi] = interval(i, c, bound() - used);
        for (mpz_class v = lo; v <= hi; ++v) {
            if (max_nodes_ && ++nodes_ > max_nodes_) {
                budget_hit_ = true;
                return;
            }
            x[i] = v;
            mpq_class t = mpq_class(v) - c;
            mpq_class next = used + q_[i][i] * t * t;
            if (next > bound())
                continue;
            if (i == 0)
                leaf(x);
            else
                descend(i - 1, x, next);
            if (budget_hit_)
                return;
        }
        x[i] = 0;
    }

    void leaf(IntVector const& x)
    {
        mpz_class form = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] == 0)
                continue;
            mpz_class row = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (x[j] != 0)
                    row += gram_[i][j] * x[j];
            form += x[i] * row;
        }
        if (form == 0)
            return;
        /* arithmetic-geometric mean: a generator has form^n >= n^n N^2 */
        mpz_class fp;
        mpz_pow_ui(fp.get_mpz_t(), form.get_mpz_t(), static_cast<unsigned long>(n_));
        if (fp < amgm_)
            return;
        IntVector coords(n_);
        for (std::size_t j = 0; j < n_; ++j)
            if (x[j] != 0)
                for (std::size_t k = 0; k < n_; ++k)
                    coords[k] += x[j] * L_.basis[j][k];
        Candidate cand{form, std::move(coords)};
        if (best_ && !better(cand, *best_))
            return;
        CycloElement alpha = from_int_vector(L_.field, cand.coords);
        if (abs(norm(alpha)) != target_)
            return;
        best_ = std::move(cand);
    }

    IdealLattice const& L_;
    std::size_t n_;
    mpz_class target_;
    std::uint64_t max_nodes_;
    std::atomic<std::uint64_t>& nodes_;
    IntBasis gram_;
    RationalMatrix q_;
    mpz_class radius_;
    mpz_class amgm_;
    std::optional<Candidate> best_;
    bool budget_hit_ = false;
};

mpz_class search_radius(mpq_class const& bound_factor, int n, mpz_class const& N)
{
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, N.get_mpz_t());
    double logN = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    double val = bound_factor.get_d() * n * std::exp(2.0 * logN / n);
    mpz_class r;
    mpz_set_d(r.get_mpz_t(), std::ceil(val * (1 + 1e-9)));
    return r;
}

} // namespace

GeneratorSearchResult find_generator(FactoredIdeal const& A, GeneratorSearchOptions const& opts)
{
    if (!A.is_integral())
        throw error(errc::negative_exponent, "generator search needs an integral ideal");
    if (opts.bound_factor < 1)
        throw error(errc::invalid_argument, "bound factor must be at least 1");
    IdealLattice L = ideal_lattice(A);
    CycloField const& F = A.field();
    int n = F.degree();
    mpz_class N = L.determinant();
    mpz_class radius = search_radius(opts.bound_factor, n, N);

    /* enumerate over an LLL-reduced basis; the minimum found does not
     * depend on the basis, only the size of the search tree does */
    IdealLattice R{F, {}};
    {
        RationalMatrix G = trace_gram(L.basis_elements());
        IntBasis gram(n, IntVector(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                gram[i][j] = G[i][j].get_num();
        for (auto const& h : lll_transform(gram)) {
            IntVector v(n, 0);
            for (int j = 0; j < n; ++j)
                if (h[j] != 0)
                    for (int k = 0; k < n; ++k)
                        v[k] += h[j] * L.basis[j][k];
            R.basis.push_back(std::move(v));
        }
    }

    std::atomic<std::uint64_t> nodes{0};
    FinckePohst probe(R, N, radius, opts.max_nodes, nodes);
    std::vector<mpz_class> tops = probe.top_values();
    unsigned workers = std::max(1u, std::min<unsigned>(opts.workers,
                                                       static_cast<unsigned>(tops.size())));
    std::vector<FinckePohst> searches;
    searches.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        searches.emplace_back(R, N, radius, opts.max_nodes, nodes);
    auto work = [&](unsigned w) {
        for (std::size_t k = w; k < tops.size(); k += workers) {
            searches[w].run(tops[k]);
            if (searches[w].budget_hit())
                return;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    std::optional<Candidate> best;
    bool budget_hit = false;
    for (auto const& s : searches) {
        budget_hit = budget_hit || s.budget_hit();
        if (s.best() && (!best || better(*s.best(), *best)))
            best = s.best();
    }
    if (!best || budget_hit) {
        /* with the budget hit a found candidate may not be the global optimum */
        std::string why = budget_hit ? "node budget of " + std::to_string(opts.max_nodes) +
                                           " reached before the radius was exhausted"
                                     : "no generator of norm " + N.get_str() +
                                           " with trace form <= " + radius.get_str();
        throw search_exhausted(errc::search_exhausted, radius.get_str(), budget_hit,
                               "ideal " + A.to_string() + ": " + why);
    }
    CycloElement alpha = from_int_vector(F, best->coords);
    if (!L.contains(alpha) || abs(norm(alpha)) != N)
        throw error(errc::invalid_argument, "generator postcondition failed");
    return {alpha, radius, nodes.load()};
}

ElementFactorization factor_element(CycloElement const& x, std::uint64_t seed)
{
    if (x.is_zero())
        throw error(errc::zero_element, "cannot factor the zero element");
    CycloField const& F = x.field();
    mpq_class N = abs(norm(x));
    ElementFactorization out{FactoredIdeal(F), {}};
    std::vector<mpz_class> primes;
    for (mpz_class const* part : {&N.get_num(), &N.get_den()}) {
        if (*part == 1)
            continue;
        for (auto const& [q, e] : factor_integer(*part))
            primes.push_back(q);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto const& q : primes) {
        if (!q.fits_ulong_p() || q.get_ui() >= (1UL << 63))
            throw error(errc::invalid_argument, "norm has a prime factor above 2^63");
        std::uint64_t p = q.get_ui();
        if (F.m() % static_cast<long>(p) == 0) {
            out.excluded_primes.push_back(p);
            continue;
        }
        for (auto const& P : split_prime(F, p, seed)) {
            long v = valuation(x, P);
            if (v != 0)
                out.ideal *= FactoredIdeal(P, v);
        }
    }
    return out;
}

std::optional<long> class_number(long m)
{
    /* h(Q(zeta_m)) for 1 <= m <= 60; h(Q(zeta_{2k})) = h(Q(zeta_k)) for odd k */
    static const long table[61] = {
        0,
        1, 1, 1, 1, 1, 1, 1, 1, 1, 1,         // 1-10
        1, 1, 1, 1, 1, 1, 1, 1, 1, 1,         // 11-20
        1, 1, 3, 1, 1, 1, 1, 1, 8, 1,         // 21-30
        9, 1, 1, 1, 1, 1, 37, 1, 2, 1,        // 31-40
        121, 1, 211, 1, 1, 3, 695, 1, 43, 1,  // 41-50
        5, 3, 4889, 1, 10, 2, 9, 8, 41241, 1, // 51-60
    };
    if (m < 1 || m > 60)
        return std::nullopt;
    return table[m];
}

} // namespace arithlink
