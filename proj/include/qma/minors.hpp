#pragma once

#include "qma/ncalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qma {

/// Row/column index sets of a quantum minor D(I,J).  The empty minor is
/// the scalar 1.
struct MinorDescriptor {
    std::vector<int> rows; // sorted
    std::vector<int> cols; // sorted
    auto operator<=>(const MinorDescriptor&) const = default;

    size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
    std::string str() const;
};

/// Formal product of minor powers; negative exponents are realized as
/// (m-1)-fold powers once a root order m is attached.
struct CentralCandidate {
    std::string name;
    std::vector<std::pair<MinorDescriptor, long>> factors;
    std::string str() const;
};

/// Integer exponent matrix over the generator grid of the ambient algebra.
struct ExponentMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<long long> entries; // row-major

    ExponentMatrix() = default;
    ExponentMatrix(int nr, int nc) : nrows(nr), ncols(nc), entries(size_t(nr) * nc, 0) {}
    long long& at(int i, int j) { return entries[size_t(i - 1) * ncols + (j - 1)]; }
    long long at(int i, int j) const { return entries[size_t(i - 1) * ncols + (j - 1)]; }
    bool operator==(const ExponentMatrix&) const = default;
    std::string str() const;
};

// Sum over bijections I -> J of (-q)^{inversions} times the row-ordered
// product; the leading PBW monomial is the diagonal product with coefficient 1.
NcPolynomial quantum_minor(const MinorDescriptor& d, const AlgebraDescriptor& alg);

// det_q of the full square algebra.
NcPolynomial quantum_determinant(const AlgebraDescriptor& alg);

// Corner and sliding r-minor families of M_q(n) / A_{n,r}.
// theta_k: for k <= n+1-r the r x r window on rows 1..r, columns k..k+r-1;
// for k > n+1-r the shrinking corner on rows 1..n-k+1, columns k..n.
MinorDescriptor theta(int k, int n, int r);
// theta with rows and columns interchanged.
MinorDescriptor theta_tilde(int t, int n, int r);

// The Psi family of M_q(n,r), t = 1-r .. n: shrinking top-right minors,
// sliding full r x r row windows, shrinking bottom-left minors.
MinorDescriptor psi(int t, int n, int r);

// Diagonal leading-term exponents of one minor, on the grid of alg.
ExponentMatrix minor_leading_exponent(const MinorDescriptor& d, int nrows, int ncols);

// Structural covariance exponents of d against every generator, computed
// from the leading exponent via the defining matrix of the associated
// quasipolynomial algebra: entry (a,b) is e with Z_{a,b} D = q^e D Z_{a,b}.
ExponentMatrix covariance_exponents_structural(const MinorDescriptor& d,
                                               const AlgebraDescriptor& alg);

// The alternating Psi-product central family Z_a of M_q(n,r); requires
// gcd quotients n/s, r/s both odd.
CentralCandidate candidate_Za(int a, int n, int r);

// The theta/theta-tilde chain candidates for the hook algebra A_{n,r}.
std::vector<CentralCandidate> candidates_theta_chain(int n, int r);

// Even-m central monomials of M_q(n,r): the four-corner m/2 monomials plus
// the hook monomial matching the parity of (n, r).
std::vector<CentralCandidate> candidates_even_m(int n, int r, unsigned m);

// The quarter-exponent central monomial for r an odd prime, n = z*r with z
// even, 4 | m; a product of generator powers on the n x r grid.
CentralCandidate candidate_quarter(int n, int r, unsigned m);

// Sum of factor leading exponents with exponents realized mod m
// (-k |-> (m-1)k); entries reduced to 0..m-1.
ExponentMatrix leading_exponent(const CentralCandidate& c, int nrows, int ncols,
                                unsigned m);

// Expand the candidate symbolically inside alg, with negative exponents
// realized as m-1 powers.
NcPolynomial expand_candidate(const CentralCandidate& c,
                              const AlgebraDescriptor& alg, unsigned m);

} // namespace qma
