#pragma once

#include "qma/minors.hpp"
#include "qma/skewlat.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qma {

/// One failed structural check, kept as data so whole tables can still be
/// produced when a single cell misbehaves.
struct Finding {
    std::string check;
    std::string expected;
    std::string actual;
    std::string str() const;
};

struct DegreeReport {
    AlgebraDescriptor alg;
    unsigned m = 0;
    mpz_class h;
    mpz_class degree;
    std::vector<long long> divisors;
    int corank = 0;
    std::optional<mpz_class> closed_form;
    bool match = true; // degree == closed_form whenever the latter applies
};

struct BlockReport {
    std::vector<long long> divisors;
    int count_1 = 0;
    int count_2 = 0;
    int count_4 = 0;
    std::vector<long long> other;
    int corank = 0;
    std::vector<Finding> findings;
};

enum class VerifyMode { Lattice, Symbolic };

struct Verdict {
    bool pass = false;
    std::string mode;
    std::string detail; // witness generator / mismatch description on failure
};

// Degree of the quasipolynomial algebra with defining matrix J at a primitive
// m-th root of unity: the exact square root of the image cardinality.
mpz_class degree_quasipoly(const SkewMatrix& J, unsigned m);

// The known closed-form degree for the given algebra and modulus, when one
// applies: squares and hooks at odd m, rectangles at good m or m = 2, hooks
// at even m.
std::optional<mpz_class> closed_form_degree(const AlgebraDescriptor& alg,
                                            unsigned m);

// m odd and coprime to every elementary divisor of J.
bool is_good_modulus(const SkewMatrix& J, unsigned m);

DegreeReport make_degree_report(const AlgebraDescriptor& alg, unsigned m);

// Independent oracle: enumerate all m^N vectors and count distinct Jw mod m.
// Refuses when m^N exceeds the guard (10^8 by default).
mpz_class brute_force_h(const SkewMatrix& J, unsigned m,
                        unsigned long guard = 100000000UL);

BlockReport classify_blocks(const AlgebraDescriptor& alg);

// The symbolic mode carries a cost guard (<= 9 generators, m <= 3) that can
// be explicitly overridden.
Verdict verify_central_candidate(const CentralCandidate& c,
                                 const AlgebraDescriptor& alg, unsigned m,
                                 VerifyMode mode, bool override_guard = false);

// Checks that the leading exponents of the alternating minor products,
// together with the (vanishing mod m) m-th powers of the generators, generate
// the full kernel lattice of the rectangle algebra mod m.
Verdict center_generation_check(int n, int r, unsigned m);

// Grid dimensions used to lay out exponent matrices for alg.
std::pair<int, int> grid_dims(const AlgebraDescriptor& alg);

} // namespace qma
