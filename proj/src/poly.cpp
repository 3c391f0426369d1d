#include "arithlink/poly.hpp"

#include <cassert>

#include "arithlink/errors.hpp"

namespace arithlink {

ZPoly zpoly_exact_div_monic(ZPoly const& a, ZPoly const& b)
{
    int da = degree(a), db = degree(b);
    if (db < 0)
        throw error(errc::division_by_zero, "polynomial division by zero");
    if (da < db) {
        if (da >= 0)
            throw error(errc::invalid_argument, "inexact polynomial division");
        return {};
    }
    ZPoly r = a;
    ZPoly q(da - db + 1);
    for (int i = da; i >= db; --i) {
        mpz_class c = r[i];
        q[i - db] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= c * b[j];
    }
    trim(r);
    if (!r.empty())
        throw error(errc::invalid_argument, "inexact polynomial division");
    trim(q);
    return q;
}

std::pair<QPoly, QPoly> qpoly_divmod(QPoly const& a, QPoly const& b)
{
    int db = degree(b);
    if (db < 0)
        throw error(errc::division_by_zero, "polynomial division by zero");
    QPoly r = a;
    trim(r);
    int da = degree(r);
    if (da < db)
        return {{}, r};
    QPoly q(da - db + 1);
    mpq_class lead_inv = 1 / b[db];
    for (int i = da; i >= db; --i) {
        if (r[i] == 0)
            continue;
        mpq_class c = r[i] * lead_inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

QPolyXgcd qpoly_xgcd(QPoly const& a, QPoly const& b)
{
    QPoly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    QPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = qpoly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        QPoly t2 = poly_sub(t0, poly_mul(q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        mpq_class inv = 1 / r0.back();
        for (auto& c : r0)
            c *= inv;
        for (auto& c : s0)
            c *= inv;
        for (auto& c : t0)
            c *= inv;
    }
    return {r0, s0, t0};
}

mpq_class qpoly_resultant(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    for (;;) {
        int da = degree(a), db = degree(b);
        if (db == 0) {
            mpq_class r = acc;
            for (int i = 0; i < da; ++i)
                r *= b[0];
            return r;
        }
        if (da == 0) {
            mpq_class r = acc;
            for (int i = 0; i < db; ++i)
                r *= a[0];
            return r;
        }
        /* Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, a mod b) */
        QPoly r = qpoly_divmod(a, b).second;
        if (r.empty())
            return 0;
        int dr = degree(r);
        if ((da % 2 == 1) && (db % 2 == 1))
            acc = -acc;
        for (int i = 0; i < da - dr; ++i)
            acc *= b[db];
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly to_qpoly(ZPoly const& a)
{
    return QPoly(a.begin(), a.end());
}

std::string zpoly_to_string(ZPoly const& a, char var)
{
    if (a.empty())
        return "0";
    std::string out;
    for (int i = degree(a); i >= 0; --i) {
        mpz_class c = a[i];
        if (c == 0)
            continue;
        bool neg = c < 0;
        mpz_class mag = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool show_coeff = (mag != 1) || i == 0;
        if (show_coeff)
            out += mag.get_str();
        if (i > 0) {
            if (show_coeff)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace arithlink
