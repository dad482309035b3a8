#include "qma/minors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qma {

std::string MinorDescriptor::str() const
{
    auto set_str = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    if (empty())
        return "D({},{})";
    return "D(" + set_str(rows) + "," + set_str(cols) + ")";
}

std::string CentralCandidate::str() const
{
    std::ostringstream os;
    if (!name.empty())
        os << name << " = ";
    if (factors.empty())
        os << "1";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i)
            os << " * ";
        os << factors[i].first.str();
        if (factors[i].second != 1)
            os << "^" << factors[i].second;
    }
    return os.str();
}

std::string ExponentMatrix::str() const
{
    std::ostringstream os;
    for (int i = 1; i <= nrows; ++i) {
        os << "[";
        for (int j = 1; j <= ncols; ++j) {
            if (j > 1)
                os << " ";
            os << at(i, j);
        }
        os << "]";
        if (i < nrows)
            os << " ";
    }
    return os.str();
}

NcPolynomial quantum_minor(const MinorDescriptor& d, const AlgebraDescriptor& alg)
{
    if (d.rows.size() != d.cols.size())
        throw std::invalid_argument("quantum_minor: |I| != |J|");
    if (d.empty())
        return NcPolynomial::unit(alg);
    for (int i : d.rows)
        for (int j : d.cols)
            if (!alg.contains({i, j}))
                throw std::invalid_argument("quantum_minor: minor not contained in "
                                            "the generator set");
    const size_t k = d.rows.size();
    std::vector<size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    NcPolynomial out(alg);
    do {
        size_t inv = 0;
        for (size_t a = 0; a < k; ++a)
            for (size_t b = a + 1; b < k; ++b)
                if (perm[b] < perm[a])
                    ++inv;
        std::vector<GeneratorId> word;
        word.reserve(k);
        for (size_t t = 0; t < k; ++t)
            word.push_back({d.rows[t], d.cols[perm[t]]});
        // rows strictly increase, so the word is already PBW ordered
        LaurentScalar coeff = LaurentScalar::term(inv % 2 ? -1 : 1,
                                                  static_cast<long>(inv));
        out = out + normal_form(word, alg).scaled(coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NcPolynomial quantum_determinant(const AlgebraDescriptor& alg)
{
    const int n = alg.grid_size();
    MinorDescriptor d;
    for (int i = 1; i <= n; ++i) {
        d.rows.push_back(i);
        d.cols.push_back(i);
    }
    return quantum_minor(d, alg);
}

namespace {

std::vector<int> range_ints(int lo, int hi)
{
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i)
        v.push_back(i);
    return v;
}

} // namespace

MinorDescriptor theta(int k, int n, int r)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("theta: index out of range");
    if (k <= n + 1 - r)
        return {range_ints(1, r), range_ints(k, k + r - 1)};
    return {range_ints(1, n - k + 1), range_ints(k, n)};
}

MinorDescriptor theta_tilde(int t, int n, int r)
{
    MinorDescriptor d = theta(t, n, r);
    return {d.cols, d.rows};
}

MinorDescriptor psi(int t, int n, int r)
{
    if (t < 1 - r || t > n)
        throw std::invalid_argument("psi: index out of range");
    if (t == 1 - r)
        return {};
    if (t <= 0) {
        const int j = 2 - t; // 2..r
        return {range_ints(1, r - j + 1), range_ints(j, r)};
    }
    if (t <= n - r + 1)
        return {range_ints(t, t + r - 1), range_ints(1, r)};
    const int k = n - t + 1; // 1..r-1
    return {range_ints(t, n), range_ints(1, k)};
}

ExponentMatrix minor_leading_exponent(const MinorDescriptor& d, int nrows, int ncols)
{
    ExponentMatrix e(nrows, ncols);
    for (size_t t = 0; t < d.size(); ++t)
        e.at(d.rows[t], d.cols[t]) += 1;
    return e;
}

namespace {

// Commutation exponent in the associated quasipolynomial algebra:
// x_a x_b = q^w x_b x_a with correction terms dropped.
int quasi_commutation(GeneratorId a, GeneratorId b)
{
    if (a == b)
        return 0;
    if (a.row != b.row && a.col != b.col)
        return 0;
    return a < b ? 1 : -1;
}

// Covariance sum of the monomial u^E against generator g.
long long structural_exponent(GeneratorId g, const ExponentMatrix& E,
                              const AlgebraDescriptor& alg)
{
    long long s = 0;
    for (const auto& c : alg.generators()) {
        long long e = E.at(c.row, c.col);
        if (e)
            s += e * quasi_commutation(g, c);
    }
    return s;
}

} // namespace

ExponentMatrix covariance_exponents_structural(const MinorDescriptor& d,
                                               const AlgebraDescriptor& alg)
{
    const int n = alg.grid_size();
    ExponentMatrix E = minor_leading_exponent(d, n, n);
    ExponentMatrix out(n, n);
    for (const auto& g : alg.generators())
        out.at(g.row, g.col) = structural_exponent(g, E, alg);
    return out;
}

CentralCandidate candidate_Za(int a, int n, int r)
{
    const int s = std::gcd(n, r);
    const int quotient_n = n / s;
    const int quotient_r = r / s;
    if (quotient_n % 2 == 0 || quotient_r % 2 == 0)
        throw std::invalid_argument(
            "candidate_Za: n/gcd and r/gcd must both be odd");
    if (a < 1 || a > s)
        throw std::invalid_argument("candidate_Za: need 1 <= a <= gcd(n,r)");
    CentralCandidate c;
    c.name = "Z_" + std::to_string(a);
    for (int l = -quotient_r; l <= quotient_n - 1; ++l) {
        MinorDescriptor d = psi(a + l * s, n, r);
        if (d.empty())
            continue; // Psi_{1-r} = 1
        c.factors.emplace_back(std::move(d), (std::abs(l) % 2) ? -1 : 1);
    }
    return c;
}

namespace {

CentralCandidate make_chain(const std::string& name,
                            std::vector<std::pair<int, long>> theta_factors,
                            std::vector<std::pair<int, long>> tilde_factors,
                            int n, int r)
{
    CentralCandidate c;
    c.name = name;
    for (auto [k, e] : theta_factors)
        c.factors.emplace_back(theta(k, n, r), e);
    for (auto [k, e] : tilde_factors)
        c.factors.emplace_back(theta_tilde(k, n, r), e);
    return c;
}

// Covariance sums of a candidate's leading exponent against every hook
// generator; the chain is central in the quasipolynomial algebra iff this
// vanishes identically.
std::vector<long long> chain_covariance(const CentralCandidate& c,
                                        const AlgebraDescriptor& alg)
{
    const int n = alg.grid_size();
    ExponentMatrix E(n, n);
    for (const auto& [d, e] : c.factors)
        for (size_t t = 0; t < d.size(); ++t)
            E.at(d.rows[t], d.cols[t]) += e;
    std::vector<long long> out;
    out.reserve(alg.size());
    for (const auto& g : alg.generators())
        out.push_back(structural_exponent(g, E, alg));
    return out;
}

} // namespace

std::vector<CentralCandidate> candidates_theta_chain(int n, int r)
{
    if (r < 1 || n < r)
        throw std::invalid_argument("candidates_theta_chain: need n >= r >= 1");
    std::vector<CentralCandidate> out;
    auto cname = [](int i) { return "c_" + std::to_string(i); };

    if (n == r) {
        out.push_back(make_chain(cname(1), {{1, 1}}, {}, n, r));
        for (int i = 1; i <= n - 1; ++i)
            out.push_back(make_chain(cname(i + 1), {{i + 1, -1}},
                                     {{n + 1 - i, 1}}, n, r));
        return out;
    }
    if (n <= 2 * r) {
        for (int j = n - r - 1; j <= r - 1; ++j)
            out.push_back(make_chain(cname(j + 1), {{n - j, 1}},
                                     {{j + 2, -1}}, n, r));
        for (int j = r + 2; j <= n; ++j)
            out.push_back(make_chain(cname(n + 1 - j),
                                     {{1, 1}, {j, 1}, {j - r, -1}},
                                     {{n - j + 2, -1}, {n - j + r + 2, 1}},
                                     n, r));
        return out;
    }
    if (n <= 3 * r) {
        for (int j = n - r + 1; j <= 2 * r + 1; ++j)
            out.push_back(make_chain(cname(j - (n - r)),
                                     {{j, 1}, {j - r, -1}, {1, 1}},
                                     {{n - j + 2, -1}, {n - j + 2 + r, 1}},
                                     n, r));
        for (int j = 2 * r + 2; j <= n; ++j)
            out.push_back(make_chain(cname(j - (n - r)),
                                     {{j, 1}, {j - r, -1}, {j - 2 * r, 1}},
                                     {{n - j + 2, -1},
                                      {n - j + 2 + r, 1},
                                      {n - j + 2 + 2 * r, -1}},
                                     n, r));
        return out;
    }

    // General n > 3r: alternating descending theta chain and ascending
    // theta-tilde chain, with the theta_1 multiplicity fixed by requiring
    // the structural covariance sums to vanish.
    const AlgebraDescriptor hook = AlgebraDescriptor::hook(n, r);
    for (int j = n - r + 1; j <= n; ++j) {
        std::vector<std::pair<int, long>> th, tt;
        long sign = 1;
        for (int k = j; k >= 2; k -= r, sign = -sign)
            th.emplace_back(k, sign);
        sign = -1;
        for (int k = n - j + 2; k <= n; k += r, sign = -sign)
            tt.emplace_back(k, sign);
        CentralCandidate base = make_chain(cname(j - (n - r)), th, tt, n, r);
        CentralCandidate theta1 = make_chain("", {{1, 1}}, {}, n, r);
        const auto s0 = chain_covariance(base, hook);
        const auto s1 = chain_covariance(theta1, hook);
        long chosen = 0;
        bool found = false;
        for (long cand : {0L, 1L, -1L, 2L, -2L}) {
            bool ok = true;
            for (size_t t = 0; t < s0.size(); ++t)
                if (s0[t] + cand * s1[t] != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen = cand;
                found = true;
                break;
            }
        }
        CentralCandidate c = base;
        if (found && chosen != 0)
            c.factors.emplace_back(theta(1, n, r), chosen);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CentralCandidate> candidates_even_m(int n, int r, unsigned m)
{
    if (m % 2 != 0)
        throw std::invalid_argument("candidates_even_m: m must be even");
    const long half = static_cast<long>(m / 2);
    std::vector<CentralCandidate> out;
    auto single = [](int i, int j) { return MinorDescriptor{{i}, {j}}; };
    // four-corner m/2 monomials
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) {
                    CentralCandidate c;
                    c.name = "corner(" + std::to_string(k) + ","
                             + std::to_string(l) + ";" + std::to_string(i) + ","
                             + std::to_string(j) + ")^" + std::to_string(half);
                    c.factors = {{single(k, i), half},
                                 {single(k, j), half},
                                 {single(l, i), half},
                                 {single(l, j), half}};
                    out.push_back(std::move(c));
                }
    // hook monomial, one parity case
    if ((n + r) % 2 == 0) {
        CentralCandidate c;
        c.name = "hook^" + std::to_string(half);
        const bool odd = (n % 2 == 1);
        for (int i = n; i >= 2; --i)
            c.factors.emplace_back(single(i, 1), half);
        if (odd)
            c.factors.emplace_back(single(1, 1), half);
        for (int j = 2; j <= r; ++j)
            c.factors.emplace_back(single(1, j), half);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

CentralCandidate candidate_quarter(int n, int r, unsigned m)
{
    if (!is_prime(r) || r % 2 == 0)
        throw std::invalid_argument("candidate_quarter: r must be an odd prime");
    if (n % r != 0 || (n / r) % 2 != 0)
        throw std::invalid_argument("candidate_quarter: need n = z*r with z even");
    if (m % 4 != 0)
        throw std::invalid_argument("candidate_quarter: need 4 | m");
    const int z = n / r;
    const long long quarter = m / 4;
    const long long half = m / 2;
    // built in the r x n orientation of the defining formulas, then
    // transposed onto the n x r generator grid
    ExponentMatrix A(r, n);
    for (int i = 1; i <= r; ++i)
        for (int j = 0; j <= z - 1; ++j)
            for (int e = 0; e <= 1; ++e) {
                const int col = i + j * r + e;
                if (col <= n)
                    A.at(i, col) = quarter;
            }
    // the lone extra quarter entry sits at (r,1): it completes the broken
    // diagonal through (r,1), which the staircase misses, and is the unique
    // single-cell completion making the element central
    A.at(r, 1) += quarter;
    for (int i = 1; i <= r; ++i)
        A.at(i, 1) += half;
    for (int j = 1; j <= z - 1; ++j)
        A.at(r, 1 + j * r) += half;

    // transpose onto the n x r generator grid (transposition is an algebra
    // isomorphism, so centrality is unaffected)
    CentralCandidate c;
    c.name = "quarter(" + std::to_string(n) + "," + std::to_string(r) + ")";
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= n; ++j)
            if (const long e = static_cast<long>(A.at(i, j) % m); e != 0)
                c.factors.push_back({MinorDescriptor{{j}, {i}}, e});
    return c;
}

ExponentMatrix leading_exponent(const CentralCandidate& c, int nrows, int ncols,
                                unsigned m)
{
    ExponentMatrix out(nrows, ncols);
    const long long mm = m;
    for (const auto& [d, e] : c.factors) {
        long long realized = ((e % mm) + mm) % mm;
        for (size_t t = 0; t < d.size(); ++t)
            out.at(d.rows[t], d.cols[t]) += realized;
    }
    for (auto& v : out.entries)
        v %= mm;
    return out;
}

NcPolynomial expand_candidate(const CentralCandidate& c,
                              const AlgebraDescriptor& alg, unsigned m)
{
    NcPolynomial p = NcPolynomial::unit(alg);
    const long long mm = m;
    for (const auto& [d, e] : c.factors) {
        long long realized = ((e % mm) + mm) % mm;
        p = multiply(p, power(quantum_minor(d, alg),
                              static_cast<unsigned long>(realized)));
    }
    return p;
}

} // namespace qma
