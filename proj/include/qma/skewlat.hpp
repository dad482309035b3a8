#pragma once

#include "qma/minors.hpp"
#include "qma/ncalgebra.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qma {

/// Dense square integer matrix, 0-based access.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long long& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    long long operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(size_t n);
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;

    std::string str() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

/// N x N integer skew-symmetric matrix; skewness checked at construction.
class SkewMatrix {
  public:
    explicit SkewMatrix(IntMatrix m);

    size_t size() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    long long operator()(size_t i, size_t j) const { return m_(i, j); }

  private:
    IntMatrix m_;
};

/// Canonical unimodular-congruence block form: U J U^T is a direct sum of
/// blocks [[0, d_i], [-d_i, 0]] with d_1 | d_2 | ... followed by zeros.
struct SkewNormalForm {
    IntMatrix transform;             // U, det = +-1
    std::vector<long long> divisors; // positive, divisibility chain
    size_t zero_rank = 0;
};

/// Generators of the kernel lattice {w : Jw = 0 mod m}.
struct LatticeBasisModM {
    unsigned modulus = 0;
    std::vector<std::vector<long long>> generators; // reduced mod m
};

// H_k = sum_{j<i} (E_ij - E_ji).
IntMatrix h_matrix(int k);
// S_k = -E_{1,k} + sum_{i>=2} E_{i,i-1}.
IntMatrix s_matrix(int k);

// Defining matrix of the associated quasipolynomial algebra: for a <_PBW b,
// J_ab is the h with x_a x_b = q^h x_b x_a once correction terms are dropped.
SkewMatrix defining_matrix(const AlgebraDescriptor& alg);

SkewNormalForm skew_normal_form(const SkewMatrix& J);

int corank(const SkewMatrix& J);

// Cardinality of the image of w -> Jw in (Z/m)^N, from the divisor chain.
mpz_class image_cardinality(const SkewMatrix& J, unsigned m);

LatticeBasisModM kernel_mod_m(const SkewMatrix& J, unsigned m);

// True iff Jw = 0 mod m.
bool in_kernel_mod_m(const SkewMatrix& J, const std::vector<long long>& w,
                     unsigned m);

// vec(A)^T J vec(B) under row-major vectorization.
long long pairing(const ExponentMatrix& A, const ExponentMatrix& B,
                  const SkewMatrix& J);

// S_n^i A S_r^j.
ExponentMatrix s_symmetry_orbit(const ExponentMatrix& A, int i, int j, int n,
                                int r);

std::vector<long long> vectorize(const ExponentMatrix& A,
                                 const AlgebraDescriptor& alg);

// Text format: first line N, then N rows of N space-separated integers.
SkewMatrix read_skew_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& m);

} // namespace qma
