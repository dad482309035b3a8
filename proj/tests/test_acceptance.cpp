// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure.  Each criterion re-derives the expected values independently of
// the library's closed-form helpers wherever possible.

#include "qma/degree.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace qma;

namespace {

mpz_class pow_z(unsigned long base, unsigned long e)
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

SkewMatrix rect_j(int n, int r)
{
    return defining_matrix(AlgebraDescriptor::rectangle(n, r));
}

std::vector<std::string> g_details;

void fail(std::string msg) { g_details.push_back(std::move(msg)); }

// 1. square degree m^{n(n-1)/2}, with a brute-force cross-check at (3, 5)
bool criterion_square_degree()
{
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
        for (unsigned m : {3u, 5u, 7u}) {
            const auto j = defining_matrix(AlgebraDescriptor::square(n));
            const mpz_class want = pow_z(m, (unsigned)(n * (n - 1) / 2));
            if (degree_quasipoly(j, m) != want) {
                fail("square n=" + std::to_string(n) + " m="
                     + std::to_string(m));
                ok = false;
            }
            if (n == 3 && m == 5
                && brute_force_h(j, m) != image_cardinality(j, m)) {
                fail("brute-force cross-check at (3, 5)");
                ok = false;
            }
        }
    return ok;
}

// 2. rectangle corank: s = gcd(n, r) when both quotients are odd, else 0
bool criterion_corank()
{
    bool ok = true;
    for (int n = 1; n <= 8; ++n)
        for (int r = 1; r <= n; ++r) {
            const int s = std::gcd(n, r);
            const int want
                = ((n / s) % 2 == 1 && (r / s) % 2 == 1) ? s : 0;
            if (corank(rect_j(n, r)) != want) {
                fail("corank (" + std::to_string(n) + ","
                     + std::to_string(r) + ")");
                ok = false;
            }
        }
    return ok;
}

// 3. rectangle degree m^{(nr - c)/2} at good m
bool criterion_good_m_degree()
{
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n; ++r)
            for (unsigned m : {3u, 5u, 7u}) {
                const auto j = rect_j(n, r);
                if (!is_good_modulus(j, m))
                    continue;
                const unsigned e = (unsigned)((n * r - corank(j)) / 2);
                if (degree_quasipoly(j, m) != pow_z(m, e)) {
                    fail("rectangle (" + std::to_string(n) + ","
                         + std::to_string(r) + ") m=" + std::to_string(m));
                    ok = false;
                }
            }
    return ok;
}

// 4. rectangle degree at m = 2 is 2^{floor((n+r-1)/2)}
bool criterion_m2_degree()
{
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r)
            if (degree_quasipoly(rect_j(n, r), 2)
                != pow_z(2, (unsigned)((n + r - 1) / 2))) {
                fail("rectangle (" + std::to_string(n) + ","
                     + std::to_string(r) + ") m=2");
                ok = false;
            }
    return ok;
}

// 5. rectangle block structure: divisors in {1,2,4}, d0 ones, the rest 2/4
bool criterion_blocks()
{
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto rep
                = classify_blocks(AlgebraDescriptor::rectangle(n, r));
            if (!rep.findings.empty()) {
                for (const auto& f : rep.findings)
                    fail("(" + std::to_string(n) + "," + std::to_string(r)
                         + ") " + f.str());
                ok = false;
            }
        }
    return ok;
}

// 6. 4-blocks for prime r: present iff r odd, n = z r with z even
bool criterion_four_blocks()
{
    bool ok = true;
    for (int r : {2, 3, 5})
        for (int n = r; n <= 12; ++n) {
            const auto rep
                = classify_blocks(AlgebraDescriptor::rectangle(n, r));
            const bool four
                = (r % 2 == 1) && (n % r == 0) && ((n / r) % 2 == 0);
            const int want = four ? (r - 1) / 2 : 0;
            if (rep.count_4 != want || !rep.findings.empty()) {
                fail("4-blocks (" + std::to_string(n) + ","
                     + std::to_string(r) + ")");
                ok = false;
            }
        }
    return ok;
}

// 7. hook degrees at odd and even m, and the hook divisor multiset
bool criterion_hooks()
{
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto alg = AlgebraDescriptor::hook(n, r);
            const auto j = defining_matrix(alg);
            const long long e = (long long)n * r - (long long)r * (r + 1) / 2;
            for (unsigned m : {3u, 5u})
                if (degree_quasipoly(j, m) != pow_z(m, (unsigned)e)) {
                    fail("hook odd (" + std::to_string(n) + ","
                         + std::to_string(r) + ") m=" + std::to_string(m));
                    ok = false;
                }
            if (e >= n - 1)
                for (unsigned m : {2u, 4u})
                    if (degree_quasipoly(j, m)
                        != pow_z(m, (unsigned)(n - 1))
                               * pow_z(m / 2, (unsigned)(e - (n - 1)))) {
                        fail("hook even (" + std::to_string(n) + ","
                             + std::to_string(r) + ") m=" + std::to_string(m));
                        ok = false;
                    }
            const auto rep = classify_blocks(alg);
            if (rep.count_1 != n - 1 || rep.count_2 != e - (n - 1)
                || !rep.other.empty() || rep.count_4 != 0) {
                fail("hook divisors (" + std::to_string(n) + ","
                     + std::to_string(r) + ")");
                ok = false;
            }
        }
    return ok;
}

// 8. centrality suites: det_q symbolic, Za lattice + symbolic, even-m
// candidates, the quarter monomial, and the theta chains
bool criterion_centrality()
{
    bool ok = true;
    auto check = [&ok](const Verdict& v, const std::string& what) {
        if (!v.pass) {
            fail(what + (v.detail.empty() ? "" : ": " + v.detail));
            ok = false;
        }
    };

    for (int n : {2, 3}) {
        const auto alg = AlgebraDescriptor::square(n);
        if (!is_central(quantum_determinant(alg), alg)) {
            fail("det_q(" + std::to_string(n) + ") not central at generic q");
            ok = false;
        }
    }

    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r) {
            const int s = std::gcd(n, r);
            if ((n / s) % 2 == 0 || (r / s) % 2 == 0)
                continue;
            const auto rect = AlgebraDescriptor::rectangle(n, r);
            for (unsigned m : {3u, 5u})
                for (int a = 1; a <= s; ++a)
                    check(verify_central_candidate(candidate_Za(a, n, r),
                                                   rect, m,
                                                   VerifyMode::Lattice),
                          "Z_" + std::to_string(a) + " lattice ("
                              + std::to_string(n) + "," + std::to_string(r)
                              + ")");
        }
    check(verify_central_candidate(candidate_Za(2, 2, 2),
                                   AlgebraDescriptor::rectangle(2, 2), 3,
                                   VerifyMode::Symbolic),
          "Z_2 symbolic (2,2,3)");

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n; ++r)
            for (unsigned m : {2u, 4u, 6u}) {
                const auto rect = AlgebraDescriptor::rectangle(n, r);
                for (const auto& c : candidates_even_m(n, r, m))
                    check(verify_central_candidate(c, rect, m,
                                                   VerifyMode::Lattice),
                          c.name + " (" + std::to_string(n) + ","
                              + std::to_string(r) + ") m="
                              + std::to_string(m));
            }

    check(verify_central_candidate(candidate_quarter(6, 3, 4),
                                   AlgebraDescriptor::rectangle(6, 3), 4,
                                   VerifyMode::Lattice),
          "quarter (6,3) m=4");

    for (int r = 1; r <= 3; ++r)
        for (int n = r; n <= 7; ++n) {
            const auto hook = AlgebraDescriptor::hook(n, r);
            for (const auto& c : candidates_theta_chain(n, r))
                check(verify_central_candidate(c, hook, 3,
                                               VerifyMode::Lattice),
                      "chain " + c.name + " (" + std::to_string(n) + ","
                          + std::to_string(r) + ")");
        }
    return ok;
}

// 9. oracle equivalence: normal-form invariants on a random skew corpus,
// brute-force h, and the rewriting property suites
bool criterion_oracles()
{
    bool ok = true;
    std::mt19937 rng(2026);
    std::uniform_int_distribution<size_t> size(1, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<unsigned> mod(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const size_t n = size(rng);
        IntMatrix a(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                a(i, j) = entry(rng);
                a(j, i) = -a(i, j);
            }
        const SkewMatrix j(a);
        const unsigned m = mod(rng);
        if (image_cardinality(j, m) != brute_force_h(j, m)) {
            fail("oracle mismatch, trial " + std::to_string(trial));
            ok = false;
        }
        const auto nf = skew_normal_form(j);
        IntMatrix blocks(n, n);
        for (size_t i = 0; i < nf.divisors.size(); ++i) {
            blocks(2 * i, 2 * i + 1) = nf.divisors[i];
            blocks(2 * i + 1, 2 * i) = -nf.divisors[i];
            if (i + 1 < nf.divisors.size()
                && nf.divisors[i + 1] % nf.divisors[i] != 0) {
                fail("divisibility chain, trial " + std::to_string(trial));
                ok = false;
            }
        }
        if (nf.transform * j.matrix() * nf.transform.transposed() != blocks) {
            fail("congruence, trial " + std::to_string(trial));
            ok = false;
        }
    }
    const auto j3 = defining_matrix(AlgebraDescriptor::square(3));
    for (unsigned m : {2u, 3u, 5u})
        if (image_cardinality(j3, m) != brute_force_h(j3, m)) {
            fail("J(M_q(3)) oracle at m=" + std::to_string(m));
            ok = false;
        }

    // rewriting: strategy confluence and multiplication associativity
    const auto alg = AlgebraDescriptor::square(2);
    std::uniform_int_distribution<int> len(0, 6),
        pick(0, (int)alg.size() - 1);
    auto word = [&] {
        std::vector<GeneratorId> w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i)
            w.push_back(alg.generators()[pick(rng)]);
        return w;
    };
    for (int i = 0; i < 350; ++i) {
        const auto w = word();
        if (normal_form(w, alg, ReductionStrategy::LeftmostFirst)
            != normal_form(w, alg, ReductionStrategy::RightmostFirst)) {
            fail("confluence, case " + std::to_string(i));
            ok = false;
        }
    }
    for (int i = 0; i < 150; ++i) {
        const auto a = normal_form(word(), alg);
        const auto b = normal_form(word(), alg);
        const auto c = normal_form(word(), alg);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
            fail("associativity, case " + std::to_string(i));
            ok = false;
        }
    }
    return ok;
}

// 10. center generation from Z_a leading exponents plus m-th powers
bool criterion_generation()
{
    bool ok = true;
    for (const auto& [n, r, m] :
         std::vector<std::tuple<int, int, unsigned>>{
             {2, 2, 3}, {3, 3, 5}, {6, 2, 3}}) {
        const auto v = center_generation_check(n, r, m);
        if (!v.pass) {
            fail("(" + std::to_string(n) + "," + std::to_string(r) + ","
                 + std::to_string(m) + "): " + v.detail);
            ok = false;
        }
    }
    return ok;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"square degree m^{n(n-1)/2}, n <= 3, m in {3,5,7}, with brute-force "
         "cross-check",
         criterion_square_degree},
        {"rectangle corank matches the gcd formula, r <= n <= 8",
         criterion_corank},
        {"rectangle degree m^{(nr-c)/2} at good m, n, r <= 4",
         criterion_good_m_degree},
        {"rectangle degree 2^{floor((n+r-1)/2)} at m = 2, n, r <= 6",
         criterion_m2_degree},
        {"rectangle blocks: divisors in {1,2,4} with the d0 split, n, r <= 6",
         criterion_blocks},
        {"4-blocks for prime r iff n is an even multiple of odd r, n <= 12",
         criterion_four_blocks},
        {"hook degrees and divisor multisets, odd and even m, n <= 5",
         criterion_hooks},
        {"centrality: det_q, Z_a, even-m monomials, quarter monomial, theta "
         "chains",
         criterion_centrality},
        {"oracle equivalence: brute-force h, normal-form invariants, "
         "rewriting properties",
         criterion_oracles},
        {"center generation from Z_a leading exponents plus m-th powers",
         criterion_generation},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        g_details.clear();
        const bool pass = criteria[i].second();
        std::cout << "criterion " << (i + 1) << ": "
                  << (pass ? "PASS" : "FAIL") << " - " << criteria[i].first
                  << "\n";
        for (const auto& d : g_details)
            std::cout << "    " << d << "\n";
        if (!pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
