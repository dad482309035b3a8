#pragma once

#include "qma/laurent.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qma {

/// One generator Z_{i,j} of a quantized matrix algebra, 1-based grid position.
struct GeneratorId {
    int row = 0;
    int col = 0;
    // PBW order is row-major lexicographic.
    auto operator<=>(const GeneratorId&) const = default;
};

enum class AlgebraKind { Square, Rectangle, Hook, Cross, Custom };

/// A generator subset of the n x n grid, closed under the rewriting rules:
/// whenever (i,j),(s,t) are present with i<s and j<t, so are (i,t) and (s,j).
class AlgebraDescriptor {
  public:
    static AlgebraDescriptor square(int n);
    static AlgebraDescriptor rectangle(int n, int r);
    static AlgebraDescriptor hook(int n, int r);
    static AlgebraDescriptor cross(int n, int r);
    static AlgebraDescriptor custom(int n, std::vector<GeneratorId> gens);

    int grid_size() const { return n_; }
    AlgebraKind kind() const { return kind_; }
    int param_r() const { return r_; }
    const std::vector<GeneratorId>& generators() const { return gens_; }
    size_t size() const { return gens_.size(); }

    bool contains(GeneratorId g) const;
    // Index of g in PBW (row-major) order; throws if absent.
    size_t index_of(GeneratorId g) const;

    bool operator==(const AlgebraDescriptor& o) const
    {
        return n_ == o.n_ && gens_ == o.gens_;
    }

  private:
    AlgebraDescriptor(int n, AlgebraKind kind, int r,
                      std::vector<GeneratorId> gens);
    void validate_closure() const;

    int n_ = 0;
    AlgebraKind kind_ = AlgebraKind::Custom;
    int r_ = 0;
    std::vector<GeneratorId> gens_; // sorted row-major
    std::map<GeneratorId, size_t> index_;
};

/// Exponent vector over the generator set, in PBW order.
struct PbwMonomial {
    std::vector<uint32_t> exponents;
    auto operator<=>(const PbwMonomial&) const = default;

    unsigned total_degree() const;
};

/// Element of the algebra: finite sum of PBW monomials with Laurent
/// coefficients.  Immutable by convention; all operations return new values.
class NcPolynomial {
  public:
    NcPolynomial() = default;
    explicit NcPolynomial(const AlgebraDescriptor& alg) : alg_(&alg) {}

    static NcPolynomial unit(const AlgebraDescriptor& alg);
    static NcPolynomial generator(GeneratorId g, const AlgebraDescriptor& alg);
    static NcPolynomial monomial(const PbwMonomial& mono, LaurentScalar coeff,
                                 const AlgebraDescriptor& alg);

    const AlgebraDescriptor& algebra() const;
    const std::map<PbwMonomial, LaurentScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NcPolynomial operator+(const NcPolynomial& o) const;
    NcPolynomial operator-(const NcPolynomial& o) const;
    NcPolynomial scaled(const LaurentScalar& c) const;
    bool operator==(const NcPolynomial& o) const { return terms_ == o.terms_; }

    // PBW-lex greatest monomial; throws on zero.
    const PbwMonomial& leading_monomial() const;
    const LaurentScalar& leading_coefficient() const;

    std::string str() const;

    void add_term(const PbwMonomial& mono, const LaurentScalar& coeff);

  private:
    const AlgebraDescriptor* alg_ = nullptr;
    std::map<PbwMonomial, LaurentScalar> terms_;
};

enum class ReductionStrategy { LeftmostFirst, RightmostFirst };

// PBW expansion of the out-of-order product g1 * g2 (requires g1 > g2).
NcPolynomial relation(GeneratorId g1, GeneratorId g2,
                      const AlgebraDescriptor& alg);

// Normal form of an arbitrary word in the generators.
NcPolynomial normal_form(const std::vector<GeneratorId>& word,
                         const AlgebraDescriptor& alg,
                         ReductionStrategy strategy
                         = ReductionStrategy::LeftmostFirst);

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& r);

NcPolynomial power(const NcPolynomial& p, unsigned long e);

/// Covariance exponent of p against one generator: the n with
/// p*Z = q^n * Z * p, if such an n exists.
struct CovarianceEntry {
    bool covariant = false;
    long exponent = 0;
};

std::map<GeneratorId, CovarianceEntry>
covariance_profile(const NcPolynomial& p, const AlgebraDescriptor& alg);

// True iff p commutes with every generator, exactly or (when m is given)
// with coefficients compared in Z[q]/(Phi_m).
bool is_central(const NcPolynomial& p, const AlgebraDescriptor& alg,
                std::optional<unsigned> m = std::nullopt);

// Same check but reporting the first witness generator that fails.
std::optional<GeneratorId>
central_witness(const NcPolynomial& p, const AlgebraDescriptor& alg,
                std::optional<unsigned> m = std::nullopt);

std::string generator_name(GeneratorId g);

} // namespace qma
