#include "qma/skewlat.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qma {

IntMatrix IntMatrix::identity(size_t n)
{
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const long long v = (*this)(i, k);
            if (!v)
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r(i, j) += v * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j)
                os << " ";
            os << (*this)(i, j);
        }
        os << "\n";
    }
    return os.str();
}

SkewMatrix::SkewMatrix(IntMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("SkewMatrix: not square");
    for (size_t i = 0; i < m_.rows(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (m_(i, j) != -m_(j, i))
                throw std::invalid_argument("SkewMatrix: J^T != -J");
}

IntMatrix h_matrix(int k)
{
    if (k < 1)
        throw std::invalid_argument("h_matrix: k >= 1 required");
    IntMatrix h(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j) {
            h(i, j) = 1;
            h(j, i) = -1;
        }
    return h;
}

IntMatrix s_matrix(int k)
{
    if (k < 1)
        throw std::invalid_argument("s_matrix: k >= 1 required");
    IntMatrix s(k, k);
    s(0, k - 1) = -1;
    for (int i = 1; i < k; ++i)
        s(i, i - 1) = 1;
    if (k == 1)
        s(0, 0) = -1; // both rules address the single entry
    return s;
}

SkewMatrix defining_matrix(const AlgebraDescriptor& alg)
{
    const auto& g = alg.generators();
    const size_t n = g.size();
    IntMatrix j(n, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (g[a].row == g[b].row || g[a].col == g[b].col) {
                j(a, b) = 1;
                j(b, a) = -1;
            }
    return SkewMatrix(std::move(j));
}

namespace {

long long floordiv(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

struct Reducer {
    IntMatrix b;
    IntMatrix u;
    size_t n;

    explicit Reducer(const SkewMatrix& j)
        : b(j.matrix()), u(IntMatrix::identity(j.size())), n(j.size())
    {
    }

    // congruent row/column operations
    void row_add(size_t dst, size_t src, long long t)
    {
        for (size_t k = 0; k < n; ++k) {
            b(dst, k) += t * b(src, k);
            u(dst, k) += t * u(src, k);
        }
        for (size_t k = 0; k < n; ++k)
            b(k, dst) += t * b(k, src);
    }

    void row_swap(size_t i, size_t j)
    {
        if (i == j)
            return;
        for (size_t k = 0; k < n; ++k) {
            std::swap(b(i, k), b(j, k));
            std::swap(u(i, k), u(j, k));
        }
        for (size_t k = 0; k < n; ++k)
            std::swap(b(k, i), b(k, j));
    }

    void row_negate(size_t i)
    {
        for (size_t k = 0; k < n; ++k) {
            b(i, k) = -b(i, k);
            u(i, k) = -u(i, k);
        }
        for (size_t k = 0; k < n; ++k)
            b(k, i) = -b(k, i);
    }

    // minimal-|value| nonzero entry in the trailing submatrix [p..n)^2,
    // ties broken by smallest row then column index
    bool find_pivot(size_t p, size_t& i0, size_t& j0) const
    {
        bool found = false;
        long long best = 0;
        for (size_t i = p; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                long long v = std::llabs(b(i, j));
                if (v != 0 && (!found || v < best)) {
                    found = true;
                    best = v;
                    i0 = i;
                    j0 = j;
                }
            }
        return found;
    }

    // bring the matrix to block diagonal form (no divisibility chain yet)
    void block_reduce()
    {
        size_t p = 0;
        while (p + 1 < n) {
            size_t i0, j0;
            if (!find_pivot(p, i0, j0))
                break;
            row_swap(p, i0);
            if (j0 == p)
                j0 = i0;
            row_swap(p + 1, j0);
            if (b(p, p + 1) < 0)
                row_negate(p + 1);
            const long long d = b(p, p + 1);
            bool clean = true;
            for (size_t k = p + 2; k < n; ++k) {
                if (b(p, k) != 0)
                    row_add(k, p + 1, -floordiv(b(p, k), d));
                if (b(p + 1, k) != 0)
                    row_add(k, p, floordiv(b(p + 1, k), d));
                if (b(p, k) != 0 || b(p + 1, k) != 0)
                    clean = false;
            }
            if (clean)
                p += 2;
            // otherwise a remainder smaller than d is now in the submatrix
            // and the next pivot search picks it up
        }
    }

    std::vector<long long> block_divisors() const
    {
        std::vector<long long> d;
        for (size_t p = 0; p + 1 < n; p += 2) {
            if (b(p, p + 1) == 0)
                break;
            d.push_back(b(p, p + 1));
        }
        return d;
    }

    void swap_blocks(size_t pa, size_t pb)
    {
        row_swap(pa, pb);
        row_swap(pa + 1, pb + 1);
    }
};

} // namespace

SkewNormalForm skew_normal_form(const SkewMatrix& J)
{
    Reducer red(J);
    red.block_reduce();

    // repair the divisor chain: merge any two blocks where neither divisor
    // divides the other, then re-reduce; converges quickly because merging
    // replaces the pair by gcd/lcm
    for (int iter = 0;; ++iter) {
        if (iter > 1000)
            throw std::logic_error("skew_normal_form: chain repair did not converge");
        auto div = red.block_divisors();
        bool merged = false;
        for (size_t a = 0; a < div.size() && !merged; ++a)
            for (size_t b = a + 1; b < div.size() && !merged; ++b)
                if (div[b] % div[a] != 0 && div[a] % div[b] != 0) {
                    red.row_add(2 * a, 2 * b, 1);
                    red.block_reduce();
                    merged = true;
                }
        if (!merged)
            break;
    }

    // sort blocks so the chain is ascending
    auto div = red.block_divisors();
    for (size_t a = 0; a < div.size(); ++a)
        for (size_t b = a + 1; b < div.size(); ++b)
            if (div[b] < div[a]) {
                red.swap_blocks(2 * a, 2 * b);
                std::swap(div[a], div[b]);
            }

    SkewNormalForm nf;
    nf.transform = red.u;
    nf.divisors = div;
    nf.zero_rank = red.n - 2 * div.size();
    for (size_t i = 0; i + 1 < nf.divisors.size(); ++i)
        if (nf.divisors[i + 1] % nf.divisors[i] != 0)
            throw std::logic_error("skew_normal_form: broken divisor chain");
    return nf;
}

int corank(const SkewMatrix& J)
{
    return static_cast<int>(skew_normal_form(J).zero_rank);
}

mpz_class image_cardinality(const SkewMatrix& J, unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("image_cardinality: m >= 1 required");
    mpz_class h = 1;
    for (long long d : skew_normal_form(J).divisors) {
        mpz_class f(static_cast<long>(m / std::gcd<long long>(d, m)));
        h *= f * f;
    }
    return h;
}

LatticeBasisModM kernel_mod_m(const SkewMatrix& J, unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("kernel_mod_m: m >= 1 required");
    const SkewNormalForm nf = skew_normal_form(J);
    const size_t n = J.size();
    LatticeBasisModM basis;
    basis.modulus = m;
    for (size_t j = 0; j < n; ++j) {
        long long mult = 1;
        if (j / 2 < nf.divisors.size()) {
            const long long d = nf.divisors[j / 2];
            mult = m / std::gcd<long long>(d, m);
        }
        if (mult % m == 0 && m > 1)
            continue; // generator vanishes mod m
        std::vector<long long> w(n);
        for (size_t k = 0; k < n; ++k) {
            long long v = (mult * nf.transform(j, k)) % static_cast<long long>(m);
            if (v < 0)
                v += m;
            w[k] = v;
        }
        basis.generators.push_back(std::move(w));
    }
    return basis;
}

bool in_kernel_mod_m(const SkewMatrix& J, const std::vector<long long>& w,
                     unsigned m)
{
    const size_t n = J.size();
    if (w.size() != n)
        throw std::invalid_argument("in_kernel_mod_m: dimension mismatch");
    for (size_t i = 0; i < n; ++i) {
        long long acc = 0;
        for (size_t k = 0; k < n; ++k)
            acc += J(i, k) * w[k];
        if (acc % static_cast<long long>(m) != 0)
            return false;
    }
    return true;
}

long long pairing(const ExponentMatrix& A, const ExponentMatrix& B,
                  const SkewMatrix& J)
{
    const size_t n = J.size();
    if (A.entries.size() != n || B.entries.size() != n)
        throw std::invalid_argument("pairing: dimension mismatch");
    long long acc = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!A.entries[i])
            continue;
        for (size_t j = 0; j < n; ++j)
            acc += A.entries[i] * J(i, j) * B.entries[j];
    }
    return acc;
}

namespace {

IntMatrix s_power(int k, long e)
{
    // S_k has order 2k, so reduce the exponent first
    long r = e % (2L * k);
    if (r < 0)
        r += 2L * k;
    IntMatrix acc = IntMatrix::identity(k);
    const IntMatrix s = s_matrix(k);
    for (long i = 0; i < r; ++i)
        acc = acc * s;
    return acc;
}

} // namespace

ExponentMatrix s_symmetry_orbit(const ExponentMatrix& A, int i, int j, int n,
                                int r)
{
    if (A.nrows != n || A.ncols != r)
        throw std::invalid_argument("s_symmetry_orbit: dimension mismatch");
    IntMatrix a(n, r);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < r; ++y)
            a(x, y) = A.entries[size_t(x) * r + y];
    IntMatrix res = s_power(n, i) * a * s_power(r, j);
    ExponentMatrix out(n, r);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < r; ++y)
            out.entries[size_t(x) * r + y] = res(x, y);
    return out;
}

std::vector<long long> vectorize(const ExponentMatrix& A,
                                 const AlgebraDescriptor& alg)
{
    std::vector<long long> v;
    v.reserve(alg.size());
    for (const auto& g : alg.generators()) {
        if (g.row > A.nrows || g.col > A.ncols)
            throw std::invalid_argument("vectorize: exponent matrix too small");
        v.push_back(A.at(g.row, g.col));
    }
    return v;
}

SkewMatrix read_skew_matrix(std::istream& in)
{
    size_t n = 0;
    if (!(in >> n) || n == 0)
        throw std::invalid_argument("matrix file: bad size line");
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(in >> m(i, j)))
                throw std::invalid_argument("matrix file: truncated data");
    return SkewMatrix(std::move(m));
}

void write_matrix(std::ostream& out, const IntMatrix& m)
{
    out << m.rows() << "\n" << m.str();
}

} // namespace qma
