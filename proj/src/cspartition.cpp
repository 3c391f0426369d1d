#include "arithlink/cspartition.hpp"

#include <random>
#include <thread>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"

namespace arithlink {

namespace {

std::uint64_t addm(std::uint64_t x, std::uint64_t y, std::uint64_t p)
{
    return (x + y) % p;
}

std::uint64_t subm(std::uint64_t x, std::uint64_t y, std::uint64_t p)
{
    return (x + p - y) % p;
}

/* row echelon form in place; returns pivot columns */
std::vector<int> echelon(FpMatrix& M, int cols, std::uint64_t p)
{
    std::vector<int> piv;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < M.size(); ++c) {
        std::size_t s = r;
        while (s < M.size() && M[s][c] == 0)
            ++s;
        if (s == M.size())
            continue;
        std::swap(M[r], M[s]);
        std::uint64_t inv = invmod(M[r][c], p);
        for (auto& x : M[r])
            x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0)
                continue;
            std::uint64_t t = M[i][c];
            for (std::size_t k = 0; k < M[i].size(); ++k)
                M[i][k] = subm(M[i][k], mulmod(t, M[r][k], p), p);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

KernelData::KernelData(FpMatrix const& D, std::uint64_t p)
    : p_(p), a_(static_cast<int>(D.size())), D_(D)
{
    FpMatrix R = D;
    pivots_ = echelon(R, a_, p);
    std::vector<bool> is_piv(a_, false);
    for (int c : pivots_)
        is_piv[c] = true;
    for (int f = 0; f < a_; ++f) {
        if (is_piv[f])
            continue;
        FpVector v(a_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            v[pivots_[r]] = subm(0, R[r][f], p);
        kernel_.push_back(std::move(v));
    }
}

std::optional<FpVector> KernelData::solve(FpVector const& xi) const
{
    if (static_cast<int>(xi.size()) != a_)
        throw error(errc::invalid_argument, "source has wrong dimension");
    FpMatrix A = D_;
    for (int i = 0; i < a_; ++i)
        A[i].push_back(xi[i] % p_);
    auto piv = echelon(A, a_ + 1, p_);
    if (!piv.empty() && piv.back() == a_)
        return std::nullopt;
    FpVector x(a_, 0);
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = A[r][a_];
    return x;
}

KernelData kernel_and_cokernel_data(FpMatrix const& D, std::uint64_t p)
{
    return KernelData(D, p);
}

int legendre(std::uint64_t x, std::uint64_t p)
{
    x %= p;
    if (x == 0)
        return 0;
    return powmod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

std::uint64_t det_mod_p(FpMatrix M, std::uint64_t p)
{
    std::size_t n = M.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t s = c;
        while (s < n && M[s][c] == 0)
            ++s;
        if (s == n)
            return 0;
        if (s != c) {
            std::swap(M[s], M[c]);
            det = subm(0, det, p);
        }
        det = mulmod(det, M[c][c], p);
        std::uint64_t inv = invmod(M[c][c], p);
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint64_t t = mulmod(M[i][c], inv, p);
            if (t == 0)
                continue;
            for (std::size_t k = c; k < n; ++k)
                M[i][k] = subm(M[i][k], mulmod(t, M[c][k], p), p);
        }
    }
    return det;
}

} // namespace

int dbar_det_legendre(FpMatrix const& D, std::uint64_t p)
{
    KernelData K(D, p);
    auto const& S = K.pivots();
    if (S.empty())
        return 1;
    FpMatrix sub(S.size(), FpVector(S.size()));
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j)
            sub[i][j] = D[S[i]][S[j]] % p;
    std::uint64_t d = det_mod_p(sub, p);
    if (d == 0)
        throw error(errc::invalid_argument, "restricted form is degenerate; D not symmetric?");
    return legendre(d, p);
}

ModFraction finite_height(FpMatrix const& D, FpVector const& xi_i, FpVector const& xi_j,
                          std::uint64_t p)
{
    KernelData K(D, p);
    auto x = K.solve(xi_i);
    if (!x)
        throw error(errc::not_in_image, "source is not in the image of D");
    if (!K.solve(xi_j))
        throw error(errc::not_in_image, "source is not in the image of D");
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < x->size(); ++k)
        s = addm(s, mulmod((*x)[k], xi_j[k] % p, p), p);
    return ModFraction(static_cast<long>(p), static_cast<long>(s));
}

PairingInstance make_pairing_instance(std::uint64_t p, FpMatrix D, std::vector<FpVector> sources)
{
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw error(errc::not_prime, std::to_string(p) + " is not an odd prime");
    if (p > (1ULL << 31))
        throw error(errc::invalid_argument, "p too large for the finite model");
    std::size_t a = D.size();
    if (a == 0)
        throw error(errc::invalid_argument, "dimension must be positive");
    for (auto& row : D) {
        if (row.size() != a)
            throw error(errc::invalid_argument, "matrix is not square");
        for (auto& x : row)
            x %= p;
    }
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (D[i][j] != D[j][i])
                throw error(errc::invalid_argument, "matrix is not symmetric mod p");
    KernelData K(D, p);
    for (auto& s : sources) {
        if (s.size() != a)
            throw error(errc::invalid_argument, "source has wrong dimension");
        for (auto& x : s)
            x %= p;
        if (!K.solve(s))
            throw error(errc::not_in_image, "source is not in the image of D");
    }
    return PairingInstance{p, static_cast<int>(a), std::move(D), std::move(sources)};
}

CycloElement gauss_sum(CycloField const& F, std::uint64_t p)
{
    long m = F.m();
    if (m % static_cast<long>(p) != 0)
        throw error(errc::invalid_argument, "field does not contain zeta_p");
    long step = m / static_cast<long>(p);
    CycloElement g = F.zero();
    for (std::uint64_t x = 0; x < p; ++x)
        g += F.zeta_power(step * static_cast<long>(mulmod(x, x, p)));
    return g;
}

namespace {

/* exponent counts over rho with index in [lo, hi) */
void count_exponents(PairingInstance const& inst, std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::uint64_t>& counts)
{
    std::uint64_t p = inst.p;
    int a = inst.a;
    FpVector lin(a, 0);
    for (auto const& s : inst.sources)
        for (int k = 0; k < a; ++k)
            lin[k] = addm(lin[k], s[k], p);
    FpVector rho(a);
    std::uint64_t idx = lo;
    for (int k = 0; k < a; ++k) {
        rho[k] = idx % p;
        idx /= p;
    }
    for (std::uint64_t t = lo; t < hi; ++t) {
        std::uint64_t e = 0;
        for (int i = 0; i < a; ++i) {
            if (rho[i] == 0)
                continue;
            std::uint64_t row = lin[i];
            for (int j = 0; j < a; ++j)
                row = addm(row, mulmod(inst.D[i][j], rho[j], p), p);
            e = addm(e, mulmod(rho[i], row, p), p);
        }
        ++counts[e];
        for (int k = 0; k < a; ++k) {
            if (++rho[k] < p)
                break;
            rho[k] = 0;
        }
    }
}

} // namespace

CycloElement brute_force_partition(PairingInstance const& inst, std::uint64_t term_cap,
                                   unsigned workers)
{
    std::uint64_t p = inst.p;
    std::uint64_t total = 1;
    for (int k = 0; k < inst.a; ++k) {
        if (total > term_cap / p + 1) {
            total = term_cap + 1;
            break;
        }
        total *= p;
    }
    if (total > term_cap)
        throw error(errc::term_cap_exceeded, "p^a exceeds the term cap of " +
                                                 std::to_string(term_cap));
    unsigned w = std::max(1u, workers);
    if (total < 4096)
        w = 1;
    std::vector<std::vector<std::uint64_t>> counts(w, std::vector<std::uint64_t>(p, 0));
    if (w == 1) {
        count_exponents(inst, 0, total, counts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < w; ++k) {
            std::uint64_t lo = total * k / w, hi = total * (k + 1) / w;
            pool.emplace_back([&, k, lo, hi] { count_exponents(inst, lo, hi, counts[k]); });
        }
        for (auto& t : pool)
            t.join();
    }
    CycloField F(4 * static_cast<long>(p));
    CycloElement z = F.zero();
    for (std::uint64_t e = 0; e < p; ++e) {
        mpz_class c = 0;
        for (auto const& part : counts)
            c += mpz_class(static_cast<unsigned long>(part[e]));
        if (c != 0)
            z += mpq_class(c) * F.zeta_power(4 * static_cast<long>(e));
    }
    return z;
}

CycloElement closed_form_partition(PairingInstance const& inst)
{
    std::uint64_t p = inst.p;
    long lp = static_cast<long>(p);
    CycloField F(4 * lp);
    KernelData K(inst.D, p);
    long a = inst.a, b = K.b();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>((a + b) / 2));
    scale *= dbar_det_legendre(inst.D, p);
    CycloElement v = F.from_int(scale);
    if ((a + b) % 2 == 1) {
        /* sqrt(p) = eps_p^{-1} g_p, eps_p = 1 or i */
        CycloElement sq = gauss_sum(F, p);
        if (p % 4 == 3)
            sq = sq * F.zeta_power(-lp);
        v = v * sq;
    }
    /* i^{(a-b)(p-1)^2/4} */
    long q = static_cast<long>(((p - 1) / 2) % 4);
    long iexp = ((a - b) % 4 * ((q * q) % 4)) % 4;
    if (iexp < 0)
        iexp += 4;
    v = v * F.zeta_power(lp * iexp);
    /* zeta_p^{-(1/4) sum_{i,j} ht(xi_i, xi_j)} */
    std::uint64_t H = 0;
    for (auto const& xi : inst.sources) {
        auto x = K.solve(xi);
        if (!x)
            throw error(errc::not_in_image, "source is not in the image of D");
        for (auto const& xj : inst.sources)
            for (int k = 0; k < inst.a; ++k)
                H = addm(H, mulmod((*x)[k], xj[k], p), p);
    }
    std::uint64_t e = mulmod(invmod(4 % p, p), H, p);
    e = subm(0, e, p);
    return v * F.zeta_power(4 * static_cast<long>(e));
}

TheoremReport verify_theorem(PairingInstance const& inst, CompareMode mode, double tol,
                             std::uint64_t term_cap, unsigned workers, int precision)
{
    CycloElement lhs = brute_force_partition(inst, term_cap, workers);
    CycloElement rhs = closed_form_partition(inst);
    bool equal;
    if (mode == CompareMode::exact) {
        equal = lhs == rhs;
    } else {
        PrecisionGuard guard(precision);
        auto el = embed_numeric(lhs, precision);
        auto er = embed_numeric(rhs, precision);
        equal = true;
        for (std::size_t k = 0; k < el.size(); ++k) {
            mp_real dr = el[k].re - er[k].re, di = el[k].im - er[k].im;
            mp_real diff = sqrt(dr * dr + di * di);
            mp_real mag = sqrt(er[k].re * er[k].re + er[k].im * er[k].im);
            if (diff > mp_real(tol) * (mag > 1 ? mag : mp_real(1)))
                equal = false;
        }
    }
    return TheoremReport{equal, std::move(lhs), std::move(rhs)};
}

PairingInstance random_pairing_instance(std::uint64_t p, int a, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
    };
    std::size_t n = static_cast<std::size_t>(a);
    int r = static_cast<int>(draw(static_cast<std::uint64_t>(a) + 1));
    FpMatrix M;
    for (;;) {
        M.assign(n, FpVector(n));
        for (auto& row : M)
            for (auto& x : row)
                x = draw(p);
        if (det_mod_p(M, p) != 0)
            break;
    }
    FpVector lambda(n, 0);
    for (int i = 0; i < r; ++i)
        lambda[i] = 1 + draw(p - 1);
    FpMatrix D(n, FpVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s = addm(s, mulmod(mulmod(M[k][i], lambda[k], p), M[k][j], p), p);
            D[i][j] = s;
        }
    int nsrc = static_cast<int>(draw(4));
    std::vector<FpVector> sources;
    for (int s = 0; s < nsrc; ++s) {
        FpVector y(n);
        for (auto& x : y)
            x = draw(p);
        FpVector xi(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                xi[i] = addm(xi[i], mulmod(D[i][j], y[j], p), p);
        sources.push_back(std::move(xi));
    }
    return make_pairing_instance(p, std::move(D), std::move(sources));
}

} // namespace arithlink
