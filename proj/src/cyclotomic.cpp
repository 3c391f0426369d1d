#include "arithlink/cyclotomic.hpp"

#include <numeric>

#include <boost/math/constants/constants.hpp>

#include "arithlink/errors.hpp"
#include "arithlink/integers.hpp"

namespace arithlink {

ZPoly cyclotomic_polynomial(long m)
{
    if (m < 1)
        throw error(errc::invalid_argument, "cyclotomic index must be positive");
    ZPoly num{1}, den{1};
    for (long d : divisors(m)) {
        int mu = moebius(d);
        if (mu == 0)
            continue;
        ZPoly factor(m / d + 1);
        factor[0] = -1;
        factor[m / d] = 1;
        if (mu > 0)
            num = poly_mul(num, factor);
        else
            den = poly_mul(den, factor);
    }
    return zpoly_exact_div_monic(num, den);
}

CycloField::CycloField(long m)
{
    auto d = std::make_shared<Data>();
    d->m = m;
    d->phi = cyclotomic_polynomial(m);
    d->degree = arithlink::degree(d->phi);
    d->zeta_pows.reserve(m);
    QPoly qphi = to_qpoly(d->phi);
    QPoly cur{1};
    for (long j = 0; j < m; ++j) {
        QPoly padded = cur;
        padded.resize(d->degree);
        d->zeta_pows.push_back(padded);
        cur.insert(cur.begin(), mpq_class(0));
        poly_rem_monic(cur, qphi);
    }
    d->traces.reserve(m);
    for (long j = 0; j < m; ++j) {
        long g = std::gcd(j, m);
        long q = m / g;
        d->traces.push_back(mpz_class(moebius(q) * (d->degree / euler_phi(q))));
    }
    data_ = std::move(d);
}

CycloElement CycloField::zero() const
{
    return CycloElement(*this, QPoly(degree()));
}

CycloElement CycloField::one() const
{
    return from_int(1);
}

CycloElement CycloField::from_int(mpz_class const& c) const
{
    return from_rational(mpq_class(c));
}

CycloElement CycloField::from_rational(mpq_class const& c) const
{
    QPoly v(degree());
    v[0] = c;
    return CycloElement(*this, std::move(v));
}

CycloElement CycloField::zeta() const
{
    return zeta_power(1);
}

CycloElement CycloField::zeta_power(long k) const
{
    long r = ((k % m()) + m()) % m();
    return CycloElement(*this, data_->zeta_pows[r]);
}

CycloElement CycloField::from_coeffs(QPoly coeffs) const
{
    for (auto& c : coeffs)
        c.canonicalize();
    trim(coeffs);
    poly_rem_monic(coeffs, to_qpoly(phi_poly()));
    coeffs.resize(degree());
    return CycloElement(*this, std::move(coeffs));
}

CycloElement CycloField::from_coeffs(ZPoly const& coeffs) const
{
    return from_coeffs(to_qpoly(coeffs));
}

mpz_class CycloField::trace_of_power(long k) const
{
    long r = ((k % m()) + m()) % m();
    return data_->traces[r];
}

CycloElement::CycloElement(CycloField field, QPoly coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (static_cast<int>(coeffs_.size()) != field_.degree())
        throw error(errc::invalid_argument,
                    "coordinate vector length does not match field degree");
}

bool CycloElement::is_zero() const
{
    for (auto const& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycloElement::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

bool CycloElement::is_integral() const
{
    for (auto const& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

mpz_class CycloElement::denominator() const
{
    mpz_class d = 1;
    for (auto const& c : coeffs_)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

ZPoly CycloElement::integral_coeffs() const
{
    mpz_class d = denominator();
    ZPoly out;
    out.reserve(coeffs_.size());
    for (auto const& c : coeffs_)
        out.push_back(c.get_num() * (d / c.get_den()));
    return out;
}

QPoly CycloElement::as_poly() const
{
    QPoly p = coeffs_;
    trim(p);
    return p;
}

static void check_same_field(CycloElement const& a, CycloElement const& b)
{
    if (!(a.field() == b.field()))
        throw error(errc::field_mismatch,
                    "operands live in Q(zeta_" + std::to_string(a.field().m()) +
                        ") and Q(zeta_" + std::to_string(b.field().m()) + ")");
}

CycloElement CycloElement::operator-() const
{
    QPoly v = coeffs_;
    for (auto& c : v)
        c = -c;
    return CycloElement(field_, std::move(v));
}

CycloElement operator+(CycloElement const& a, CycloElement const& b)
{
    check_same_field(a, b);
    QPoly v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += b.coeffs_[i];
    return CycloElement(a.field_, std::move(v));
}

CycloElement operator-(CycloElement const& a, CycloElement const& b)
{
    check_same_field(a, b);
    QPoly v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= b.coeffs_[i];
    return CycloElement(a.field_, std::move(v));
}

CycloElement operator*(CycloElement const& a, CycloElement const& b)
{
    check_same_field(a, b);
    return a.field_.from_coeffs(poly_mul(a.as_poly(), b.as_poly()));
}

CycloElement operator*(mpq_class const& c, CycloElement const& a)
{
    QPoly v = a.coeffs_;
    for (auto& x : v)
        x *= c;
    return CycloElement(a.field_, std::move(v));
}

bool operator==(CycloElement const& a, CycloElement const& b)
{
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycloElement CycloElement::inverse() const
{
    if (is_zero())
        throw error(errc::division_by_zero, "inverse of zero");
    auto [g, s, t] = qpoly_xgcd(as_poly(), to_qpoly(field_.phi_poly()));
    if (degree(g) != 0)
        throw error(errc::division_by_zero, "element is not invertible");
    return field_.from_coeffs(s);
}

CycloElement CycloElement::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    CycloElement result = field_.one();
    CycloElement base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

CycloElement pow(CycloElement const& x, long e)
{
    return x.pow(e);
}

mpq_class norm(CycloElement const& x)
{
    return qpoly_resultant(to_qpoly(x.field().phi_poly()), x.as_poly());
}

mpq_class trace(CycloElement const& x)
{
    mpq_class t = 0;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k)
        if (x[k] != 0)
            t += x[k] * x.field().trace_of_power(static_cast<long>(k));
    return t;
}

CycloElement conjugate(CycloElement const& x)
{
    CycloField const& F = x.field();
    QPoly acc(F.degree());
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        if (x[k] == 0)
            continue;
        CycloElement zk = F.zeta_power(-static_cast<long>(k));
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += x[k] * zk[i];
    }
    return CycloElement(F, std::move(acc));
}

RationalMatrix trace_gram(std::vector<CycloElement> const& basis)
{
    std::size_t n = basis.size();
    for (std::size_t i = 1; i < n; ++i)
        check_same_field(basis[0], basis[i]);
    std::vector<CycloElement> conj;
    conj.reserve(n);
    for (auto const& b : basis)
        conj.push_back(conjugate(b));
    RationalMatrix G(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            G[i][j] = trace(basis[i] * conj[j]);
            G[j][i] = G[i][j];
        }
    return G;
}

PrecisionGuard::PrecisionGuard(int digits10)
    : saved_(mp_real::default_precision())
{
    mp_real::default_precision(static_cast<unsigned>(digits10));
}

PrecisionGuard::~PrecisionGuard()
{
    mp_real::default_precision(saved_);
}

std::vector<ComplexValue> embed_numeric(CycloElement const& x, int precision)
{
    if (precision < 15)
        throw error(errc::invalid_argument, "precision must be at least 15 digits");
    PrecisionGuard guard(precision + 10);
    long m = x.field().m();
    mp_real two_pi = 2 * boost::math::constants::pi<mp_real>();
    std::vector<ComplexValue> out;
    for (long k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1)
            continue;
        ComplexValue acc{mp_real(0), mp_real(0)};
        for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
            if (x[j] == 0)
                continue;
            long e = static_cast<long>((static_cast<long long>(k) * j) % m);
            mp_real angle = two_pi * e / m;
            mp_real c = mp_real(x[j].get_num().get_str()) / mp_real(x[j].get_den().get_str());
            acc.re += c * cos(angle);
            acc.im += c * sin(angle);
        }
        out.push_back(std::move(acc));
        if (m == 1)
            break;
    }
    return out;
}

std::string to_string(CycloElement const& x)
{
    std::string out;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        mpq_class c = x[k];
        if (c == 0)
            continue;
        bool neg = c < 0;
        mpq_class mag = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string term;
        if (mag.get_den() != 1)
            term = mag.get_num().get_str() + "*" + mag.get_den().get_str() + "^-1";
        else if (mag != 1 || k == 0)
            term = mag.get_num().get_str();
        if (k > 0) {
            if (!term.empty())
                term += "*";
            term += "z";
            if (k > 1)
                term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace arithlink
