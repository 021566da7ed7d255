#include "mlag/hankel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "mlag/parallel.hpp"

namespace mlag {

namespace {

// symmetric=true exploits det(R,C) = det(C,R); valid only when the matrix is
// symmetric (Hankel matrices are, arbitrary ones are not).
std::uint64_t memo_key(std::uint32_t rows, std::uint32_t cols, bool symmetric) {
    if (symmetric && rows > cols) std::swap(rows, cols);
    return (std::uint64_t(rows) << 32) | cols;
}

std::vector<int> bits_of(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

std::uint32_t mask_of(const std::vector<int>& idx, int size) {
    std::uint32_t m = 0;
    for (int i : idx) {
        if (i < 0 || i >= size) throw std::invalid_argument("index out of range");
        if (m & (1u << i)) throw std::invalid_argument("repeated index");
        m |= 1u << i;
    }
    return m;
}

// All size-s subsets of {0..n-1} as bitmasks, ascending (Gosper's hack).
std::vector<std::uint32_t> subsets(int n, int s) {
    std::vector<std::uint32_t> out;
    if (s == 0 || s > n) return out;
    std::uint32_t v = (1u << s) - 1;
    const std::uint32_t limit = 1u << n;
    while (v < limit) {
        out.push_back(v);
        std::uint32_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

// Laplace expansion along the largest selected row; all order s-1 subsets of
// (rows, cols) must already be in the memo.
Polynomial det_from_level_below(const PolyMatrix& M, std::uint32_t rows,
                                std::uint32_t cols, const MinorMemo& memo,
                                bool symmetric) {
    const int s = std::popcount(rows);
    const int rmax = 31 - std::countl_zero(rows);
    if (s == 1) return M.at(rmax, std::countr_zero(cols));
    const std::uint32_t sub_rows = rows & ~(1u << rmax);
    Polynomial det(M.at(0, 0).num_vars());
    int t = 0;
    for (std::uint32_t rest = cols; rest; rest &= rest - 1, ++t) {
        const int c = std::countr_zero(rest);
        const auto it = memo.find(memo_key(sub_rows, cols & ~(1u << c), symmetric));
        if (it == memo.end()) throw std::logic_error("minor memo miss");
        Polynomial term = M.at(rmax, c) * it->second;
        if ((s - 1 + t) % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

PolyMatrix build_hankel(const HankelSpec& spec, LaguerreCache& cache) {
    if (spec.N < 1) throw std::invalid_argument("build_hankel: N must be >= 1");
    if (static_cast<int>(spec.k.size()) != spec.r)
        throw std::invalid_argument("build_hankel: k length must equal r");
    if (total(spec.k) == 0) throw std::invalid_argument("build_hankel: k must be nonzero");
    PolyMatrix M;
    M.size = spec.N;
    M.entries.resize(spec.N * spec.N);
    for (int i = 0; i < spec.N; ++i)
        for (int j = 0; j < spec.N; ++j) {
            MultiIndex n(spec.r);
            for (int d = 0; d < spec.r; ++d) n[d] = (i + j) * spec.k[d];
            M.at(i, j) = cache.get_or_compute(n);
        }
    return M;
}

Polynomial minor_determinant(const PolyMatrix& M, const std::vector<int>& rows,
                             const std::vector<int>& cols, MinorMemo& memo) {
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("minor_determinant: index sets must match and be nonempty");
    const std::uint32_t rmask = mask_of(rows, M.size);
    const std::uint32_t cmask = mask_of(cols, M.size);
    // Fill the memo bottom-up so the expansion always has its inputs.
    const int s = std::popcount(rmask);
    for (int level = 1; level <= s; ++level) {
        for (auto sub_r : subsets(M.size, level)) {
            if ((sub_r & rmask) != sub_r) continue;
            for (auto sub_c : subsets(M.size, level)) {
                if ((sub_c & cmask) != sub_c) continue;
                const auto key = memo_key(sub_r, sub_c, false);
                if (memo.count(key)) continue;
                memo.emplace(key, det_from_level_below(M, sub_r, sub_c, memo, false));
            }
        }
    }
    return memo.at(memo_key(rmask, cmask, false));
}

MinorReport verify_all_minors(const HankelSpec& spec, const SweepOptions& options,
                              LaguerreCache& cache) {
    const auto t0 = std::chrono::steady_clock::now();
    MinorReport report;
    report.spec = spec;
    const int max_order = spec.max_minor_order > 0
                              ? std::min(spec.max_minor_order, spec.N)
                              : spec.N;

    const PolyMatrix M = build_hankel(spec, cache);
    MinorMemo memo;

    for (int s = 1; s <= max_order; ++s) {
        if (options.budget_seconds > 0) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (elapsed > options.budget_seconds) {
                report.verdict = Verdict::INCOMPLETE;
                break;
            }
        }
        const auto masks = subsets(spec.N, s);
        // Canonical pairs rows <= cols; the mirrored minor is identical
        // because the Hankel matrix is symmetric.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (auto r : masks)
            for (auto c : masks)
                if (r <= c) pairs.emplace_back(r, c);

        std::vector<Polynomial> dets(pairs.size());
        parallel_for(pairs.size(), options.workers, [&](std::size_t i) {
            dets[i] = det_from_level_below(M, pairs[i].first, pairs[i].second, memo, true);
        });
        for (std::size_t i = 0; i < pairs.size(); ++i)
            memo.emplace(memo_key(pairs[i].first, pairs[i].second, true),
                         std::move(dets[i]));

        long long checked = 0;
        for (const auto& [r, c] : pairs) {
            checked += r == c ? 1 : 2;
            NonnegativityWitness w;
            if (!coefficients_nonnegative(memo.at(memo_key(r, c, true)), &w)) {
                report.failures.push_back({bits_of(r), bits_of(c), w.monomial, w.coefficient});
                if (r != c)
                    report.failures.push_back({bits_of(c), bits_of(r), w.monomial, w.coefficient});
            }
        }
        report.minors_checked[s] = checked;
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const MinorFailure& a, const MinorFailure& b) {
                  return std::tie(a.rows, a.cols) < std::tie(b.rows, b.cols);
              });
    if (!report.failures.empty()) report.verdict = Verdict::FAIL;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

std::vector<PrescreenHit> numeric_prescreen(const PolyMatrix& M, int max_minor_order,
                                            const std::vector<std::vector<mpq_class>>& points) {
    std::vector<PrescreenHit> hits;
    const int N = M.size;
    const int max_order = max_minor_order > 0 ? std::min(max_minor_order, N) : N;
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        for (const auto& coord : points[pi])
            if (coord < 0)
                throw std::invalid_argument("numeric_prescreen: point coordinates must be >= 0");
        // Evaluate the matrix once, then run the same memoized Laplace sweep
        // over exact rationals. No symmetry assumption: the input matrix may
        // be fault-injected.
        std::vector<mpq_class> vals(N * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) vals[i * N + j] = eval_exact(M.at(i, j), points[pi]);
        std::unordered_map<std::uint64_t, mpq_class> memo;
        for (int s = 1; s <= max_order; ++s) {
            for (auto rmask : subsets(N, s)) {
                const int rmax = 31 - std::countl_zero(rmask);
                const std::uint32_t sub_rows = rmask & ~(1u << rmax);
                for (auto cmask : subsets(N, s)) {
                    mpq_class det = 0;
                    if (s == 1) {
                        det = vals[rmax * N + std::countr_zero(cmask)];
                    } else {
                        int t = 0;
                        for (std::uint32_t rest = cmask; rest; rest &= rest - 1, ++t) {
                            const int c = std::countr_zero(rest);
                            mpq_class term = vals[rmax * N + c] *
                                             memo.at(memo_key(sub_rows, cmask & ~(1u << c), false));
                            if ((s - 1 + t) % 2 == 0)
                                det += term;
                            else
                                det -= term;
                        }
                    }
                    if (det < 0) hits.push_back({bits_of(rmask), bits_of(cmask), pi, det});
                    memo.emplace(memo_key(rmask, cmask, false), std::move(det));
                }
            }
        }
    }
    return hits;
}

}  // namespace mlag
