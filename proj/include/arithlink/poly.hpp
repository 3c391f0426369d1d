#ifndef ARITHLINK_POLY_HPP_
#define ARITHLINK_POLY_HPP_

/* Dense univariate polynomials with exact coefficients, lowest degree
 * first. A normalized polynomial has no trailing zero coefficients; the
 * zero polynomial is the empty vector. */

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arithlink {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class T> void trim(std::vector<T>& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/* -1 for the zero polynomial */
template <class T> int degree(std::vector<T> const& a)
{
    return static_cast<int>(a.size()) - 1;
}

template <class T>
std::vector<T> poly_add(std::vector<T> const& a, std::vector<T> const& b)
{
    std::vector<T> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

template <class T>
std::vector<T> poly_sub(std::vector<T> const& a, std::vector<T> const& b)
{
    std::vector<T> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

template <class T>
std::vector<T> poly_mul(std::vector<T> const& a, std::vector<T> const& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<T> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/* remainder of a modulo a monic polynomial, in place */
template <class T>
void poly_rem_monic(std::vector<T>& a, std::vector<T> const& monic)
{
    int dm = degree(monic);
    for (int i = degree(a); i >= dm; --i) {
        if (a[i] == 0)
            continue;
        T c = a[i];
        for (int j = 0; j <= dm; ++j)
            a[i - dm + j] -= c * monic[j];
    }
    trim(a);
}

/* exact quotient a / b over Z, b monic; the remainder must vanish */
ZPoly zpoly_exact_div_monic(ZPoly const& a, ZPoly const& b);

/* quotient and remainder over Q; b nonzero */
std::pair<QPoly, QPoly> qpoly_divmod(QPoly const& a, QPoly const& b);

/* (g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0) */
struct QPolyXgcd {
    QPoly g, s, t;
};
QPolyXgcd qpoly_xgcd(QPoly const& a, QPoly const& b);

/* Res(a, b) over Q by the Euclidean recurrence */
mpq_class qpoly_resultant(QPoly a, QPoly b);

QPoly to_qpoly(ZPoly const& a);

std::string zpoly_to_string(ZPoly const& a, char var = 'x');

} // namespace arithlink

#endif /* ARITHLINK_POLY_HPP_ */
