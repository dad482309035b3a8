#include "qma/ncalgebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qma {

AlgebraDescriptor::AlgebraDescriptor(int n, AlgebraKind kind, int r,
                                     std::vector<GeneratorId> gens)
    : n_(n), kind_(kind), r_(r), gens_(std::move(gens))
{
    if (n < 1)
        throw std::invalid_argument("AlgebraDescriptor: grid size must be >= 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (const auto& g : gens_)
        if (g.row < 1 || g.row > n_ || g.col < 1 || g.col > n_)
            throw std::invalid_argument("AlgebraDescriptor: generator outside grid");
    for (size_t k = 0; k < gens_.size(); ++k)
        index_[gens_[k]] = k;
    validate_closure();
}

void AlgebraDescriptor::validate_closure() const
{
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (a.row < b.row && a.col < b.col)
                if (!contains({a.row, b.col}) || !contains({b.row, a.col}))
                    throw std::invalid_argument(
                        "AlgebraDescriptor: generator set not closed under rewriting");
}

AlgebraDescriptor AlgebraDescriptor::square(int n)
{
    std::vector<GeneratorId> g;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            g.push_back({i, j});
    return AlgebraDescriptor(n, AlgebraKind::Square, n, std::move(g));
}

AlgebraDescriptor AlgebraDescriptor::rectangle(int n, int r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("rectangle: need 1 <= r <= n");
    std::vector<GeneratorId> g;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= r; ++j)
            g.push_back({i, j});
    return AlgebraDescriptor(n, AlgebraKind::Rectangle, r, std::move(g));
}

AlgebraDescriptor AlgebraDescriptor::hook(int n, int r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("hook: need 1 <= r <= n");
    std::vector<GeneratorId> g;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i <= r || j <= r)
                g.push_back({i, j});
    return AlgebraDescriptor(n, AlgebraKind::Hook, r, std::move(g));
}

AlgebraDescriptor AlgebraDescriptor::cross(int n, int r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("cross: need 1 <= r <= n");
    std::vector<GeneratorId> g;
    for (int j = 1; j <= r; ++j)
        g.push_back({1, j});
    for (int i = 2; i <= n; ++i)
        g.push_back({i, 1});
    return AlgebraDescriptor(n, AlgebraKind::Cross, r, std::move(g));
}

AlgebraDescriptor AlgebraDescriptor::custom(int n, std::vector<GeneratorId> gens)
{
    return AlgebraDescriptor(n, AlgebraKind::Custom, 0, std::move(gens));
}

bool AlgebraDescriptor::contains(GeneratorId g) const
{
    return index_.count(g) != 0;
}

size_t AlgebraDescriptor::index_of(GeneratorId g) const
{
    auto it = index_.find(g);
    if (it == index_.end())
        throw std::invalid_argument("generator outside the algebra: "
                                    + generator_name(g));
    return it->second;
}

unsigned PbwMonomial::total_degree() const
{
    unsigned d = 0;
    for (auto e : exponents)
        d += e;
    return d;
}

NcPolynomial NcPolynomial::unit(const AlgebraDescriptor& alg)
{
    NcPolynomial p(alg);
    p.add_term(PbwMonomial{std::vector<uint32_t>(alg.size(), 0)},
               LaurentScalar::one());
    return p;
}

NcPolynomial NcPolynomial::generator(GeneratorId g, const AlgebraDescriptor& alg)
{
    PbwMonomial mono{std::vector<uint32_t>(alg.size(), 0)};
    mono.exponents[alg.index_of(g)] = 1;
    return monomial(mono, LaurentScalar::one(), alg);
}

NcPolynomial NcPolynomial::monomial(const PbwMonomial& mono, LaurentScalar coeff,
                                    const AlgebraDescriptor& alg)
{
    if (mono.exponents.size() != alg.size())
        throw std::invalid_argument("monomial: exponent vector size mismatch");
    NcPolynomial p(alg);
    p.add_term(mono, coeff);
    return p;
}

const AlgebraDescriptor& NcPolynomial::algebra() const
{
    if (!alg_)
        throw std::logic_error("NcPolynomial: no algebra attached");
    return *alg_;
}

void NcPolynomial::add_term(const PbwMonomial& mono, const LaurentScalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const
{
    NcPolynomial r = *this;
    if (!r.alg_)
        r.alg_ = o.alg_;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const
{
    NcPolynomial r = *this;
    if (!r.alg_)
        r.alg_ = o.alg_;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

NcPolynomial NcPolynomial::scaled(const LaurentScalar& c) const
{
    NcPolynomial r(*alg_);
    for (const auto& [m, co] : terms_)
        r.add_term(m, co * c);
    return r;
}

const PbwMonomial& NcPolynomial::leading_monomial() const
{
    if (terms_.empty())
        throw std::logic_error("leading_monomial of zero");
    return terms_.rbegin()->first;
}

const LaurentScalar& NcPolynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw std::logic_error("leading_coefficient of zero");
    return terms_.rbegin()->second;
}

std::string generator_name(GeneratorId g)
{
    std::ostringstream os;
    if (g.row <= 9 && g.col <= 9)
        os << "Z" << g.row << g.col;
    else
        os << "Z" << g.row << "_" << g.col;
    return os.str();
}

std::string NcPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest monomial first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        LaurentScalar c = it->second;
        mpz_class single;
        long exp = 0;
        std::string cs;
        bool neg = false;
        if (c.is_single_term(single, exp)) {
            if (single < 0) {
                neg = true;
                single = -single;
            }
            cs = LaurentScalar::term(single, exp).str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        bool constant_one = (cs == "1");
        const auto& gens = algebra().generators();
        for (size_t k = 0; k < it->first.exponents.size(); ++k) {
            uint32_t e = it->first.exponents[k];
            if (!e)
                continue;
            std::string f = generator_name(gens[k]);
            if (e > 1)
                f += "^" + std::to_string(e);
            factors.push_back(f);
        }
        if (factors.empty()) {
            os << cs;
        } else {
            if (!constant_one)
                os << cs << "*";
            for (size_t k = 0; k < factors.size(); ++k) {
                if (k)
                    os << "*";
                os << factors[k];
            }
        }
    }
    return os.str();
}

namespace {

struct Rewrite {
    // replacement for the adjacent out-of-order pair g1*g2 (g1 > g2):
    // swap_coeff * g2*g1  [+ corr_coeff * c1*c2]
    LaurentScalar swap_coeff;
    bool has_correction = false;
    GeneratorId c1, c2;
};

Rewrite local_rule(GeneratorId g1, GeneratorId g2)
{
    assert(g2 < g1);
    Rewrite rw;
    if (g1.row == g2.row || g1.col == g2.col) {
        rw.swap_coeff = LaurentScalar::q_power(-1);
    } else if (g1.col < g2.col) {
        // anti-diagonal pair commutes
        rw.swap_coeff = LaurentScalar::one();
    } else {
        // diagonal pair: Z_{s,t} Z_{i,j} = Z_{i,j} Z_{s,t} - (q-q^-1) Z_{i,t} Z_{s,j}
        rw.swap_coeff = LaurentScalar::one();
        rw.has_correction = true;
        rw.c1 = {g2.row, g1.col};
        rw.c2 = {g1.row, g2.col};
    }
    return rw;
}

size_t count_inversions(const std::vector<GeneratorId>& w)
{
    size_t inv = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[b] < w[a])
                ++inv;
    return inv;
}

// Letter multiset sorted descending; the well-founded termination measure is
// (this multiset under lex order, then the inversion count): a swap keeps the
// multiset and strictly lowers the inversion count, while the correction term
// replaces the letters {(s,t),(i,j)} by {(i,t),(s,j)} whose maximum is
// strictly smaller, so the multiset strictly decreases.
std::vector<GeneratorId> sorted_desc(std::vector<GeneratorId> w)
{
    std::sort(w.begin(), w.end(), [](GeneratorId a, GeneratorId b) {
        return b < a;
    });
    return w;
}

} // namespace

NcPolynomial relation(GeneratorId g1, GeneratorId g2, const AlgebraDescriptor& alg)
{
    if (!alg.contains(g1) || !alg.contains(g2))
        throw std::invalid_argument("relation: generator outside the algebra");
    if (!(g2 < g1))
        throw std::invalid_argument("relation: expects an out-of-order pair g1 > g2");
    return normal_form({g1, g2}, alg);
}

NcPolynomial normal_form(const std::vector<GeneratorId>& word,
                         const AlgebraDescriptor& alg,
                         ReductionStrategy strategy)
{
    for (const auto& g : word)
        alg.index_of(g); // validates membership

    NcPolynomial result(alg);
    std::vector<std::pair<std::vector<GeneratorId>, LaurentScalar>> work;
    work.emplace_back(word, LaurentScalar::one());

    while (!work.empty()) {
        auto [w, coeff] = std::move(work.back());
        work.pop_back();

        // locate an adjacent inversion
        size_t pos = w.size(); // sentinel: none
        if (strategy == ReductionStrategy::LeftmostFirst) {
            for (size_t k = 0; k + 1 < w.size(); ++k)
                if (w[k + 1] < w[k]) {
                    pos = k;
                    break;
                }
        } else {
            for (size_t k = w.size(); k-- > 1;)
                if (w[k] < w[k - 1]) {
                    pos = k - 1;
                    break;
                }
        }

        if (pos == w.size()) {
            PbwMonomial mono{std::vector<uint32_t>(alg.size(), 0)};
            for (const auto& g : w)
                ++mono.exponents[alg.index_of(g)];
            result.add_term(mono, coeff);
            continue;
        }

        const size_t inv_before = count_inversions(w);
        Rewrite rw = local_rule(w[pos], w[pos + 1]);

        std::vector<GeneratorId> swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        assert(count_inversions(swapped) < inv_before);
        work.emplace_back(std::move(swapped), coeff * rw.swap_coeff);

        if (rw.has_correction) {
            std::vector<GeneratorId> corr = w;
            corr[pos] = rw.c1;
            corr[pos + 1] = rw.c2;
            // closure of the generator set keeps the correction inside G
            assert(sorted_desc(corr) < sorted_desc(w));
            work.emplace_back(std::move(corr),
                              coeff * (-LaurentScalar::q_minus_qinv()));
        }
    }
    return result;
}

namespace {

std::vector<GeneratorId> expand_word(const PbwMonomial& mono,
                                     const AlgebraDescriptor& alg)
{
    std::vector<GeneratorId> w;
    for (size_t k = 0; k < mono.exponents.size(); ++k)
        for (uint32_t e = 0; e < mono.exponents[k]; ++e)
            w.push_back(alg.generators()[k]);
    return w;
}

} // namespace

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& r)
{
    const AlgebraDescriptor& alg = p.algebra();
    if (!(alg == r.algebra()))
        throw std::invalid_argument("multiply: algebra descriptor mismatch");
    NcPolynomial out(alg);
    for (const auto& [m1, c1] : p.terms()) {
        std::vector<GeneratorId> w1 = expand_word(m1, alg);
        for (const auto& [m2, c2] : r.terms()) {
            std::vector<GeneratorId> w = w1;
            std::vector<GeneratorId> w2 = expand_word(m2, alg);
            w.insert(w.end(), w2.begin(), w2.end());
            NcPolynomial nf = normal_form(w, alg);
            for (const auto& [m, c] : nf.terms())
                out.add_term(m, c * c1 * c2);
        }
    }
    return out;
}

NcPolynomial power(const NcPolynomial& p, unsigned long e)
{
    NcPolynomial r = NcPolynomial::unit(p.algebra());
    for (unsigned long k = 0; k < e; ++k)
        r = multiply(r, p);
    return r;
}

std::map<GeneratorId, CovarianceEntry>
covariance_profile(const NcPolynomial& p, const AlgebraDescriptor& alg)
{
    if (p.is_zero())
        throw std::invalid_argument("covariance_profile: p must be nonzero");
    std::map<GeneratorId, CovarianceEntry> out;
    for (const auto& g : alg.generators()) {
        NcPolynomial zg = NcPolynomial::generator(g, alg);
        NcPolynomial pg = multiply(p, zg);
        NcPolynomial gp = multiply(zg, p);
        CovarianceEntry entry;
        // p*g = q^e * g*p  iff supports match and all coefficients are the
        // same up to one global shift of q-exponents
        bool ok = pg.terms().size() == gp.terms().size() && !pg.is_zero();
        long shift = 0;
        bool have_shift = false;
        if (ok) {
            auto it1 = pg.terms().begin();
            auto it2 = gp.terms().begin();
            for (; ok && it1 != pg.terms().end(); ++it1, ++it2) {
                if (it1->first != it2->first) {
                    ok = false;
                    break;
                }
                const auto& t1 = it1->second.terms();
                const auto& t2 = it2->second.terms();
                if (t1.size() != t2.size()) {
                    ok = false;
                    break;
                }
                long s = t1.begin()->first - t2.begin()->first;
                if (!have_shift) {
                    shift = s;
                    have_shift = true;
                }
                if (s != shift || it1->second != it2->second.shifted(shift))
                    ok = false;
            }
        }
        if (ok) {
            entry.covariant = true;
            entry.exponent = shift;
        }
        out[g] = entry;
    }
    return out;
}

std::optional<GeneratorId>
central_witness(const NcPolynomial& p, const AlgebraDescriptor& alg,
                std::optional<unsigned> m)
{
    if (p.is_zero())
        throw std::invalid_argument("central_witness: p must be nonzero");
    for (const auto& g : alg.generators()) {
        NcPolynomial zg = NcPolynomial::generator(g, alg);
        NcPolynomial diff = multiply(p, zg) - multiply(zg, p);
        if (!m) {
            if (!diff.is_zero())
                return g;
        } else {
            for (const auto& [mono, c] : diff.terms())
                if (!reduce_at_root(c, *m).is_zero())
                    return g;
        }
    }
    return std::nullopt;
}

bool is_central(const NcPolynomial& p, const AlgebraDescriptor& alg,
                std::optional<unsigned> m)
{
    return !central_witness(p, alg, m).has_value();
}

} // namespace qma
