// End-to-end acceptance suite: prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "mlag/digraphs.hpp"
#include "mlag/hankel.hpp"
#include "mlag/laguerre.hpp"
#include "mlag/stieltjes.hpp"
#include "support/bareiss.hpp"
#include "support/random_polys.hpp"

using namespace mlag;

namespace {

int g_failures = 0;

void report(int criterion, const char* what, bool ok, double seconds) {
    std::printf("%s  criterion %d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what,
                seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// 1. combinatorial identity: digraph enumeration vs explicit sum
void criterion_combinatorial() {
    Timer timer;
    bool ok = true;
    for (int r = 1; r <= 2 && ok; ++r)
        for (const auto& n : multi_indices_up_to(r, 6))
            if (combinatorial_laguerre({n}, {10, 10'000'000}) != explicit_laguerre(n)) {
                ok = false;
                break;
            }
    for (const auto& n : multi_indices_up_to(3, 5)) {
        if (!ok) break;
        ok = combinatorial_laguerre({n}, {10, 10'000'000}) == explicit_laguerre(n);
    }
    report(1, "combinatorial identity (r<=2 |n|<=6, r=3 |n|<=5)", ok, timer.seconds());
}

// 2. generating-function route equivalence
void criterion_egf() {
    Timer timer;
    bool ok = true;
    for (int r = 1; r <= 3 && ok; ++r)
        for (const auto& n : multi_indices_up_to(r, 5))
            if (egf_laguerre(n) != explicit_laguerre(n)) {
                ok = false;
                break;
            }
    report(2, "generating function equals explicit sum (r<=3 |n|<=5)", ok, timer.seconds());
}

// 3. joint permutation symmetry
void criterion_symmetry() {
    Timer timer;
    bool ok = true;
    for (int r = 1; r <= 3 && ok; ++r) {
        for (const auto& n : multi_indices_up_to(r, 5)) {
            const auto reference = explicit_laguerre(n);
            std::vector<int> sigma(r);
            for (int i = 0; i < r; ++i) sigma[i] = i;
            do {
                if (permute_laguerre(n, sigma) != reference) {
                    ok = false;
                    break;
                }
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            if (!ok) break;
        }
    }
    report(3, "joint permutation invariance (r<=3 |n|<=5)", ok, timer.seconds());
}

// 4. coefficientwise Hankel total positivity at desk scale
void criterion_hankel() {
    const struct {
        int r;
        MultiIndex k;
        int N;
    } cases[] = {
        {1, {1}, 6},
        {2, {1, 1}, 5},
        {2, {2, 1}, 4},
        {3, {1, 1, 1}, 4},
        {4, {1, 1, 1, 1}, 3},
    };
    for (const auto& c : cases) {
        Timer timer;
        LaguerreCache cache;
        const auto r = verify_all_minors({c.r, c.k, c.N, c.N}, {}, cache);
        char what[128];
        std::snprintf(what, sizeof(what), "Hankel sweep r=%d N=%d all minors nonnegative",
                      c.r, c.N);
        report(4, what, r.verdict == Verdict::PASS && r.failures.empty(), timer.seconds());
    }
}

// 5. moment representation vs exact evaluation, plus the 2x+b1 sample check
void criterion_moments() {
    Timer timer;
    const std::vector<mpq_class> alphas{mpq_class(-1, 2), mpq_class(0), mpq_class(13, 10)};
    const std::vector<mpq_class> xs{mpq_class(0), mpq_class(7, 10), mpq_class(2)};
    LaguerreCache cache;
    bool ok = true;
    for (int r = 1; r <= 2 && ok; ++r) {
        std::vector<std::vector<mpq_class>> alpha_grid;
        if (r == 1) {
            for (const auto& a : alphas) alpha_grid.push_back({a});
        } else {
            for (const auto& a : alphas)
                for (const auto& b : alphas) alpha_grid.push_back({a, b});
        }
        for (const auto& alpha : alpha_grid)
            for (const auto& x : xs)
                for (const auto& n : multi_indices_in_box(MultiIndex(r, 3))) {
                    const auto res = check_moment(n, alpha, x, 40, cache);
                    if (res.rel_error > 1e-8) {
                        std::printf("  moment mismatch rel=%g\n", res.rel_error);
                        ok = false;
                    }
                }
    }
    // Corollary consistency: 2x + b1 >= 0 at the sampled nonnegative points.
    const auto det2 = parse_text("2*x + b1", 2);
    for (const auto& a : alphas)
        for (const auto& x : xs)
            ok = ok && eval_exact(det2, {x, a + 1}) >= 0;
    report(5, "moment representation, rel error <= 1e-8 (order 40)", ok, timer.seconds());
}

// 6. boundary measure at alpha = -1, r = 1
void criterion_boundary() {
    Timer timer;
    LaguerreCache cache;
    bool ok = true;
    for (int n = 0; n <= 4; ++n)
        for (double x : {0.5, 1.0, 2.0}) {
            const double exact =
                eval_exact(cache.get_or_compute({n}), {mpq_class(x), 0}).get_d();
            const double quad = moment_integral_boundary_r1(n, x, 40);
            if (std::abs(quad - exact) / std::abs(exact) > 1e-8) ok = false;
        }
    report(6, "alpha=-1 boundary measure matches exact values (n<=4)", ok, timer.seconds());
}

// 7. multiple orthogonality for r=2, alpha=(-0.3, 0.4), n=(2,1)
void criterion_orthogonality() {
    Timer timer;
    LaguerreCache cache;
    bool ok = true;
    const MultiIndex n{2, 1};
    const std::vector<double> alpha{-0.3, 0.4};
    for (int m : {0, 1}) {
        const auto res = check_orthogonality(n, alpha, 0, m, 40, cache);
        ok = ok && std::abs(res.value) / res.scale <= 1e-9;
    }
    const auto res = check_orthogonality(n, alpha, 1, 0, 40, cache);
    ok = ok && std::abs(res.value) / res.scale <= 1e-9;
    report(7, "multiple orthogonality vanishes to 1e-9", ok, timer.seconds());
}

// 8. determinant oracle agreement on random matrices
void criterion_determinant_oracles() {
    Timer timer;
    std::mt19937 rng(20240817);
    bool ok = true;
    for (int size : {3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            PolyMatrix M;
            M.size = size;
            M.entries.resize(size * size);
            std::vector<std::vector<Polynomial>> rows(size, std::vector<Polynomial>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) {
                    M.at(i, j) = testing::random_degree2_entry(rng, 3);
                    rows[i][j] = M.at(i, j);
                }
            MinorMemo memo;
            std::vector<int> all(size);
            for (int i = 0; i < size; ++i) all[i] = i;
            if (minor_determinant(M, all, all, memo) != testing::bareiss_determinant(rows))
                ok = false;
        }
    }
    report(8, "memoized Laplace agrees with fraction-free Bareiss (100x 3x3, 100x 4x4)",
           ok, timer.seconds());
}

}  // namespace

int main() {
    criterion_combinatorial();
    criterion_egf();
    criterion_symmetry();
    criterion_hankel();
    criterion_moments();
    criterion_boundary();
    criterion_orthogonality();
    criterion_determinant_oracles();
    if (g_failures) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
