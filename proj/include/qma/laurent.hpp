#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qma {

/// Integer Laurent polynomial in one variable q, kept in canonical form
/// (no zero coefficients stored).
class LaurentScalar {
  public:
    LaurentScalar() = default;
    explicit LaurentScalar(mpz_class constant);
    LaurentScalar(long long constant);

    static LaurentScalar zero() { return LaurentScalar(); }
    static LaurentScalar one() { return LaurentScalar(1); }
    // c * q^e
    static LaurentScalar term(mpz_class coeff, long exponent);
    static LaurentScalar q_power(long exponent) { return term(1, exponent); }
    // q - q^-1
    static LaurentScalar q_minus_qinv();

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, mpz_class>& terms() const { return terms_; }

    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator-() const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar& operator*=(const LaurentScalar& o);
    bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

    LaurentScalar pow(unsigned long e) const;

    // Shift every exponent by k, i.e. multiply by q^k.
    LaurentScalar shifted(long k) const;

    // True iff the scalar is c * q^e for a single term; reports c and e.
    bool is_single_term(mpz_class& coeff, long& exponent) const;

    std::string str() const;

  private:
    void trim();
    std::map<long, mpz_class> terms_;
};

/// Dense integer polynomial utilities used for cyclotomic arithmetic.
/// Coefficient vector is little-endian: v[i] is the coefficient of q^i.
using IntPoly = std::vector<mpz_class>;

// The m-th cyclotomic polynomial, computed from the product identity
// prod_{d | m} Phi_d = q^m - 1.
IntPoly cyclotomic_poly(unsigned m);

unsigned euler_phi(unsigned m);

/// Residue in Z[q] / (Phi_m), the coefficient ring at a primitive
/// m-th root of unity.
class CyclotomicScalar {
  public:
    explicit CyclotomicScalar(unsigned m);
    CyclotomicScalar(unsigned m, IntPoly coeffs); // reduces mod Phi_m

    unsigned modulus() const { return m_; }
    const IntPoly& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CyclotomicScalar operator+(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-(const CyclotomicScalar& o) const;
    CyclotomicScalar operator*(const CyclotomicScalar& o) const;
    bool operator==(const CyclotomicScalar& o) const;
    bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    unsigned m_;
    IntPoly coeffs_; // degree < phi(m), padded with zeros to length phi(m)
};

// Ring homomorphism LaurentScalar -> Z[q]/(Phi_m).  Negative exponents map
// through q^-1 |-> q^{m-1}.
CyclotomicScalar reduce_at_root(const LaurentScalar& a, unsigned m);

} // namespace qma
