#include "qma/degree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qma {

namespace {

mpz_class ipow(unsigned long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace

std::string Finding::str() const
{
    return check + ": expected " + expected + ", got " + actual;
}

std::pair<int, int> grid_dims(const AlgebraDescriptor& alg)
{
    if (alg.kind() == AlgebraKind::Rectangle)
        return {alg.grid_size(), alg.param_r()};
    return {alg.grid_size(), alg.grid_size()};
}

mpz_class degree_quasipoly(const SkewMatrix& J, unsigned m)
{
    const mpz_class h = image_cardinality(J, m);
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), h.get_mpz_t());
    if (rem != 0)
        throw std::logic_error(
            "degree_quasipoly: image cardinality is not a perfect square");
    return root;
}

bool is_good_modulus(const SkewMatrix& J, unsigned m)
{
    if (m % 2 == 0)
        return false;
    for (long long d : skew_normal_form(J).divisors)
        if (std::gcd<long long>(d, m) != 1)
            return false;
    return true;
}

std::optional<mpz_class> closed_form_degree(const AlgebraDescriptor& alg,
                                            unsigned m)
{
    const int n = alg.grid_size();
    const int r = alg.param_r();
    switch (alg.kind()) {
    case AlgebraKind::Square:
        if (m % 2 == 1)
            return ipow(m, (unsigned long)n * (n - 1) / 2);
        return std::nullopt;
    case AlgebraKind::Rectangle: {
        if (m == 2)
            return ipow(2, (unsigned long)(n + r - 1) / 2);
        const SkewMatrix j = defining_matrix(alg);
        if (!is_good_modulus(j, m))
            return std::nullopt;
        const int c = corank(j);
        return ipow(m, (unsigned long)(n * r - c) / 2);
    }
    case AlgebraKind::Hook: {
        const unsigned long e = (unsigned long)(n * r) - r * (r + 1) / 2;
        if (m % 2 == 1)
            return ipow(m, e);
        return ipow(m, n - 1) * ipow(m / 2, e - (n - 1));
    }
    default:
        return std::nullopt;
    }
}

DegreeReport make_degree_report(const AlgebraDescriptor& alg, unsigned m)
{
    const SkewMatrix j = defining_matrix(alg);
    const SkewNormalForm nf = skew_normal_form(j);
    DegreeReport rep{alg, m, image_cardinality(j, m), 0, nf.divisors,
                     (int)nf.zero_rank, closed_form_degree(alg, m), true};
    rep.degree = degree_quasipoly(j, m);
    if (rep.closed_form)
        rep.match = (rep.degree == *rep.closed_form);
    return rep;
}

mpz_class brute_force_h(const SkewMatrix& J, unsigned m, unsigned long guard)
{
    const size_t n = J.size();
    const mpz_class total = ipow(m, n);
    if (total > guard) {
        std::ostringstream os;
        os << "brute_force_h: " << m << "^" << n << " = " << total
           << " exceeds the enumeration guard of " << guard;
        throw std::runtime_error(os.str());
    }
    if (m == 1)
        return 1;

    std::vector<unsigned> w(n, 0);
    std::vector<long long> jw(n, 0); // Jw mod m, updated incrementally
    std::unordered_set<uint64_t> image;
    const long long mm = m;
    while (true) {
        uint64_t key = 0;
        for (size_t i = 0; i < n; ++i)
            key = key * m + (uint64_t)jw[i];
        image.insert(key);

        size_t k = 0;
        while (k < n && w[k] == m - 1) {
            // coordinate wraps to 0: subtract (m-1) * column k
            w[k] = 0;
            for (size_t i = 0; i < n; ++i)
                jw[i] = ((jw[i] - (mm - 1) * J(i, k)) % mm + mm) % mm;
            ++k;
        }
        if (k == n)
            break;
        ++w[k];
        for (size_t i = 0; i < n; ++i)
            jw[i] = ((jw[i] + J(i, k)) % mm + mm) % mm;
    }
    return mpz_class((unsigned long)image.size());
}

BlockReport classify_blocks(const AlgebraDescriptor& alg)
{
    const SkewNormalForm nf = skew_normal_form(defining_matrix(alg));
    BlockReport rep;
    rep.divisors = nf.divisors;
    rep.corank = (int)nf.zero_rank;
    for (long long d : nf.divisors) {
        if (d == 1)
            ++rep.count_1;
        else if (d == 2)
            ++rep.count_2;
        else if (d == 4)
            ++rep.count_4;
        else
            rep.other.push_back(d);
    }

    auto expect = [&rep](const std::string& check, long long want,
                         long long got) {
        if (want != got)
            rep.findings.push_back(
                {check, std::to_string(want), std::to_string(got)});
    };

    const int n = alg.grid_size();
    const int r = alg.param_r();
    if (alg.kind() == AlgebraKind::Rectangle) {
        const int d0 = (n + r - 1) / 2;
        expect("divisors in {1,2,4}", 0, (long long)rep.other.size());
        expect("count of 1-blocks = floor((n+r-1)/2)", d0, rep.count_1);
        const long long rest =
            std::max<long long>(0, (long long)(n * r - rep.corank) / 2 - d0);
        expect("count of 2- and 4-blocks", rest, rep.count_2 + rep.count_4);
    } else if (alg.kind() == AlgebraKind::Hook) {
        expect("divisors in {1,2}", 0,
               (long long)rep.other.size() + rep.count_4);
        expect("count of 1-blocks = n-1", n - 1, rep.count_1);
        expect("count of 2-blocks",
               (long long)n * r - (long long)r * (r + 1) / 2 - (n - 1),
               rep.count_2);
    }
    return rep;
}

Verdict verify_central_candidate(const CentralCandidate& c,
                                 const AlgebraDescriptor& alg, unsigned m,
                                 VerifyMode mode, bool override_guard)
{
    Verdict v;
    if (mode == VerifyMode::Lattice) {
        v.mode = "lattice";
        const auto [nr, nc] = grid_dims(alg);
        const ExponentMatrix e = leading_exponent(c, nr, nc, m);
        const SkewMatrix j = defining_matrix(alg);
        v.pass = in_kernel_mod_m(j, vectorize(e, alg), m);
        if (!v.pass)
            v.detail = "leading exponent outside the kernel lattice mod " +
                       std::to_string(m);
        return v;
    }
    v.mode = "symbolic";
    if (!override_guard && (alg.size() > 9 || m > 3))
        throw std::runtime_error(
            "verify_central_candidate: symbolic mode limited to <= 9 "
            "generators and m <= 3");
    const NcPolynomial p = expand_candidate(c, alg, m);
    const auto witness = central_witness(p, alg, m);
    v.pass = !witness.has_value();
    if (witness)
        v.detail = "fails to commute with " + generator_name(*witness);
    return v;
}

Verdict center_generation_check(int n, int r, unsigned m)
{
    const AlgebraDescriptor alg = AlgebraDescriptor::rectangle(n, r);
    const SkewMatrix j = defining_matrix(alg);
    Verdict v;
    v.mode = "lattice";
    if (!is_good_modulus(j, m))
        throw std::invalid_argument(
            "center_generation_check: m must be odd and coprime to all "
            "elementary divisors");

    const int c = corank(j);
    if (c == 0) {
        // the kernel mod m is trivial, so the m-th powers alone generate
        v.pass = true;
        v.detail = "kernel trivial (J invertible)";
        return v;
    }

    const int s = std::gcd(n, r);
    const size_t N = alg.size();
    std::vector<std::vector<long long>> gens;
    for (int a = 1; a <= s; ++a) {
        const ExponentMatrix e =
            leading_exponent(candidate_Za(a, n, r), n, r, m);
        auto w = vectorize(e, alg);
        if (!in_kernel_mod_m(j, w, m)) {
            v.pass = false;
            v.detail = "leading exponent of Z_" + std::to_string(a) +
                       " outside the kernel";
            return v;
        }
        gens.push_back(std::move(w));
    }

    // subgroup closure of the generators inside (Z/m)^N
    std::set<std::vector<long long>> closure;
    std::vector<std::vector<long long>> work{std::vector<long long>(N, 0)};
    closure.insert(work[0]);
    while (!work.empty()) {
        const auto cur = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            std::vector<long long> next(N);
            for (size_t i = 0; i < N; ++i)
                next[i] = (cur[i] + g[i]) % m;
            if (closure.insert(next).second)
                work.push_back(std::move(next));
        }
    }

    const mpz_class kernel_size = ipow(m, c); // |ker| = m^corank for good m
    v.pass = (mpz_class((unsigned long)closure.size()) == kernel_size);
    if (!v.pass) {
        std::ostringstream os;
        os << "closure has " << closure.size() << " elements, kernel has "
           << kernel_size;
        v.detail = os.str();
    } else {
        v.detail = "closure matches the kernel mod " + std::to_string(m);
    }
    return v;
}

} // namespace qma
