#include "qma/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qma {

LaurentScalar::LaurentScalar(mpz_class constant)
{
    if (constant != 0)
        terms_[0] = std::move(constant);
}

LaurentScalar::LaurentScalar(long long constant)
    : LaurentScalar(mpz_class(static_cast<long>(constant)))
{
}

LaurentScalar LaurentScalar::term(mpz_class coeff, long exponent)
{
    LaurentScalar r;
    if (coeff != 0)
        r.terms_[exponent] = std::move(coeff);
    return r;
}

LaurentScalar LaurentScalar::q_minus_qinv()
{
    LaurentScalar r;
    r.terms_[1] = 1;
    r.terms_[-1] = -1;
    return r;
}

void LaurentScalar::trim()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o)
{
    for (const auto& [e, c] : o.terms_)
        terms_[e] += c;
    trim();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o)
{
    for (const auto& [e, c] : o.terms_)
        terms_[e] -= c;
    trim();
    return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const
{
    LaurentScalar r = *this;
    r += o;
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const
{
    LaurentScalar r = *this;
    r -= o;
    return r;
}

LaurentScalar LaurentScalar::operator-() const
{
    LaurentScalar r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const
{
    LaurentScalar r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.terms_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o)
{
    *this = *this * o;
    return *this;
}

LaurentScalar LaurentScalar::pow(unsigned long e) const
{
    LaurentScalar r = one();
    LaurentScalar base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentScalar LaurentScalar::shifted(long k) const
{
    LaurentScalar r;
    for (const auto& [e, c] : terms_)
        r.terms_[e + k] = c;
    return r;
}

bool LaurentScalar::is_single_term(mpz_class& coeff, long& exponent) const
{
    if (terms_.size() != 1)
        return false;
    exponent = terms_.begin()->first;
    coeff = terms_.begin()->second;
    return true;
}

std::string LaurentScalar::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpz_class c = it->second;
        long e = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (e == 0) {
            os << c.get_str();
        } else {
            if (c != 1)
                os << c.get_str() << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

unsigned euler_phi(unsigned m)
{
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials; divisor must be monic up to sign
// of the leading coefficient and must divide evenly.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den)
{
    if (den.empty() || den.back() == 0)
        throw std::invalid_argument("poly_div_exact: bad divisor");
    const size_t dd = den.size() - 1;
    if (num.size() < den.size())
        throw std::invalid_argument("poly_div_exact: degree underflow");
    IntPoly quot(num.size() - dd, 0);
    for (size_t qi = quot.size(); qi-- > 0;) {
        mpz_class lead = num[qi + dd];
        if (lead % den.back() != 0)
            throw std::invalid_argument("poly_div_exact: not divisible");
        mpz_class f = lead / den.back();
        quot[qi] = f;
        if (f != 0)
            for (size_t k = 0; k <= dd; ++k)
                num[qi + k] -= f * den[k];
    }
    for (const auto& c : num)
        if (c != 0)
            throw std::invalid_argument("poly_div_exact: nonzero remainder");
    return quot;
}

} // namespace

IntPoly cyclotomic_poly(unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("cyclotomic_poly: m must be positive");
    // q^m - 1 divided by the product of Phi_d over proper divisors d of m
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    return num;
}

CyclotomicScalar::CyclotomicScalar(unsigned m)
    : m_(m), coeffs_(euler_phi(m), 0)
{
    if (m == 0)
        throw std::invalid_argument("CyclotomicScalar: m must be positive");
}

CyclotomicScalar::CyclotomicScalar(unsigned m, IntPoly coeffs)
    : m_(m)
{
    if (m == 0)
        throw std::invalid_argument("CyclotomicScalar: m must be positive");
    const IntPoly phi = cyclotomic_poly(m);
    const size_t deg = phi.size() - 1; // = euler_phi(m), Phi_m is monic
    // reduce mod Phi_m
    for (size_t i = coeffs.size(); i-- > deg;) {
        mpz_class f = coeffs[i];
        if (f != 0)
            for (size_t k = 0; k < phi.size(); ++k)
                coeffs[i - deg + k] -= f * phi[k];
    }
    coeffs.resize(deg, 0);
    coeffs_ = std::move(coeffs);
}

bool CyclotomicScalar::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const
{
    if (m_ != o.m_)
        throw std::invalid_argument("CyclotomicScalar: modulus mismatch");
    IntPoly r = coeffs_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += o.coeffs_[i];
    return CyclotomicScalar(m_, std::move(r));
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const
{
    if (m_ != o.m_)
        throw std::invalid_argument("CyclotomicScalar: modulus mismatch");
    IntPoly r = coeffs_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= o.coeffs_[i];
    return CyclotomicScalar(m_, std::move(r));
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const
{
    if (m_ != o.m_)
        throw std::invalid_argument("CyclotomicScalar: modulus mismatch");
    IntPoly r(coeffs_.size() + o.coeffs_.size(), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] += coeffs_[i] * o.coeffs_[j];
    return CyclotomicScalar(m_, std::move(r));
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& o) const
{
    return m_ == o.m_ && coeffs_ == o.coeffs_;
}

std::string CyclotomicScalar::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << " ";
        os << coeffs_[i].get_str();
    }
    os << "] mod Phi_" << m_;
    return os.str();
}

CyclotomicScalar reduce_at_root(const LaurentScalar& a, unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("reduce_at_root: m must be positive");
    IntPoly acc(m, 0);
    for (const auto& [e, c] : a.terms()) {
        long r = e % static_cast<long>(m);
        if (r < 0)
            r += m;
        acc[static_cast<size_t>(r)] += c;
    }
    return CyclotomicScalar(m, std::move(acc));
}

} // namespace qma
