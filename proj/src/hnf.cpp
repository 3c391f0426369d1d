#include "arithlink/hnf.hpp"

#include <algorithm>

#include "arithlink/errors.hpp"

namespace arithlink {

namespace {

bool is_zero_vec(IntVector const& v)
{
    return std::all_of(v.begin(), v.end(), [](mpz_class const& c) { return c == 0; });
}

void reduce_tail(IntVector& v, std::size_t from, mpz_class const& D)
{
    for (std::size_t k = from; k < v.size(); ++k)
        mpz_fdiv_r(v[k].get_mpz_t(), v[k].get_mpz_t(), D.get_mpz_t());
}

} // namespace

IntBasis hnf_basis(std::vector<IntVector> gens, std::size_t n, mpz_class const& det_multiple)
{
    for (auto const& g : gens)
        if (g.size() != n)
            throw error(errc::invalid_argument, "generator has wrong dimension");
    bool modular = det_multiple > 0;
    IntBasis basis;
    basis.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (modular) {
            /* D*e_j lies in the lattice, so adding it changes nothing and
             * lets us keep the remaining coordinates reduced mod D */
            IntVector dj(n);
            dj[j] = det_multiple;
            gens.push_back(std::move(dj));
        }
        gens.erase(std::remove_if(gens.begin(), gens.end(), is_zero_vec), gens.end());
        std::size_t piv = gens.size();
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k][j] != 0) {
                piv = k;
                break;
            }
        if (piv == gens.size())
            throw error(errc::invalid_argument, "generators do not span a full-rank lattice");
        IntVector pv = std::move(gens[piv]);
        gens.erase(gens.begin() + static_cast<long>(piv));
        for (auto& w : gens) {
            if (w[j] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pv[j].get_mpz_t(),
                       w[j].get_mpz_t());
            mpz_class a = pv[j] / g, b = w[j] / g;
            /* [pv; w] <- [[s, t], [-b, a]] [pv; w], determinant s*a + t*b = 1 */
            for (std::size_t k = j; k < n; ++k) {
                mpz_class x = pv[k], y = w[k];
                pv[k] = s * x + t * y;
                w[k] = a * y - b * x;
            }
            if (modular)
                reduce_tail(w, j + 1, det_multiple);
        }
        if (pv[j] < 0)
            for (auto& c : pv)
                c = -c;
        if (modular)
            reduce_tail(pv, j + 1, det_multiple);
        basis.push_back(std::move(pv));
    }
    /* canonical reduction of the entries below each pivot */
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][i].get_mpz_t(), basis[i][i].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t k = i; k < n; ++k)
                basis[j][k] -= q * basis[i][k];
        }
    return basis;
}

mpz_class hnf_determinant(IntBasis const& basis)
{
    mpz_class d = 1;
    for (std::size_t j = 0; j < basis.size(); ++j)
        d *= basis[j][j];
    return d;
}

std::optional<IntVector> lattice_coordinates(IntBasis const& basis, IntVector const& v)
{
    std::size_t n = basis.size();
    if (v.size() != n)
        throw error(errc::invalid_argument, "vector has wrong dimension");
    IntVector rest = v;
    IntVector coords(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!mpz_divisible_p(rest[j].get_mpz_t(), basis[j][j].get_mpz_t()))
            return std::nullopt;
        coords[j] = rest[j] / basis[j][j];
        if (coords[j] == 0)
            continue;
        for (std::size_t k = j; k < n; ++k)
            rest[k] -= coords[j] * basis[j][k];
    }
    return coords;
}

IntBasis lll_transform(IntBasis const& gram)
{
    std::size_t n = gram.size();
    IntBasis H(n + 1, IntVector(n, 0)); // 1-based rows
    for (std::size_t i = 1; i <= n; ++i)
        H[i][i - 1] = 1;
    if (n == 0)
        return {};
    auto dot = [&](std::size_t a, std::size_t b) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (H[a][i] == 0)
                continue;
            mpz_class row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (H[b][j] != 0)
                    row += gram[i][j] * H[b][j];
            s += H[a][i] * row;
        }
        return s;
    };
    std::vector<mpz_class> d(n + 1);
    IntBasis lam(n + 1, IntVector(n + 1, 0));
    d[0] = 1;
    d[1] = dot(1, 1);
    if (d[1] <= 0)
        throw error(errc::invalid_argument, "Gram matrix is not positive definite");
    std::size_t k = 2, kmax = 1;

    auto red = [&](std::size_t k, std::size_t l) {
        mpz_class twice = 2 * lam[k][l];
        if (abs(twice) <= d[l])
            return;
        mpz_class q;
        mpz_class num = twice + d[l], den = 2 * d[l];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            H[k][j] -= q * H[l][j];
        lam[k][l] -= q * d[l];
        for (std::size_t i = 1; i < l; ++i)
            lam[k][i] -= q * lam[l][i];
    };
    auto swap = [&](std::size_t k) {
        std::swap(H[k], H[k - 1]);
        for (std::size_t j = 1; j + 1 < k; ++j)
            std::swap(lam[k][j], lam[k - 1][j]);
        mpz_class l = lam[k][k - 1];
        mpz_class B = (d[k - 2] * d[k] + l * l) / d[k - 1];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            mpz_class t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
            lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
        }
        d[k - 1] = B;
    };

    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                mpz_class u = dot(k, j);
                for (std::size_t i = 1; i < j; ++i)
                    u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k)
                    lam[k][j] = u;
                else
                    d[k] = u;
            }
            if (d[k] <= 0)
                throw error(errc::invalid_argument, "Gram matrix is not positive definite");
        }
        red(k, k - 1);
        if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
            swap(k);
            if (k > 2)
                --k;
            continue;
        }
        for (std::size_t l = k - 1; l-- > 1;)
            red(k, l);
        ++k;
    }
    H.erase(H.begin());
    return H;
}

} // namespace arithlink
