#ifndef MLAG_HANKEL_HPP
#define MLAG_HANKEL_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "mlag/laguerre.hpp"
#include "mlag/multi_index.hpp"
#include "mlag/polynomial.hpp"

namespace mlag {

// Hankel matrix of multiple Laguerre polynomials along direction k:
// entry(i,j) = L_{(i+j)k} for 0 <= i,j <= N-1.
struct HankelSpec {
    int r = 1;
    MultiIndex k;           // direction, nonzero
    int N = 1;              // matrix size
    int max_minor_order = 0;  // 0 means N
};

struct PolyMatrix {
    int size = 0;
    std::vector<Polynomial> entries;  // row-major

    const Polynomial& at(int i, int j) const { return entries[i * size + j]; }
    Polynomial& at(int i, int j) { return entries[i * size + j]; }
};

PolyMatrix build_hankel(const HankelSpec& spec, LaguerreCache& cache);

// Memo for subset determinants, keyed by (row bitmask, column bitmask).
using MinorMemo = std::unordered_map<std::uint64_t, Polynomial>;

// Exact determinant of the submatrix selected by ascending row/column index
// sets, via Laplace expansion along the largest row, memoized.
Polynomial minor_determinant(const PolyMatrix& M, const std::vector<int>& rows,
                             const std::vector<int>& cols, MinorMemo& memo);

struct MinorFailure {
    std::vector<int> rows;
    std::vector<int> cols;
    Exponents witness;
    mpz_class coefficient;
};

enum class Verdict { PASS, FAIL, INCOMPLETE };

struct MinorReport {
    HankelSpec spec;
    Verdict verdict = Verdict::PASS;
    std::map<int, long long> minors_checked;  // order -> count
    std::vector<MinorFailure> failures;       // canonically sorted
    double wall_time_ms = 0.0;
};

struct SweepOptions {
    int workers = 0;             // 0: default_workers()
    double budget_seconds = 0;   // 0: unlimited; checked at order boundaries
};

// Checks every s x s minor for all s <= max_minor_order: computes the exact
// determinant and tests coefficientwise nonnegativity. Deterministic for any
// worker count.
MinorReport verify_all_minors(const HankelSpec& spec, const SweepOptions& options,
                              LaguerreCache& cache);

struct PrescreenHit {
    std::vector<int> rows;
    std::vector<int> cols;
    std::size_t point_index;
    mpq_class value;  // negative: a certified counterexample
};

// Exact rational evaluation of all minors (orders <= max_minor_order) at the
// given nonnegative points; returns the minors with negative values.
std::vector<PrescreenHit> numeric_prescreen(const PolyMatrix& M, int max_minor_order,
                                            const std::vector<std::vector<mpq_class>>& points);

}  // namespace mlag

#endif
