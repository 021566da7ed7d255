#ifndef MLAG_LAGUERRE_HPP
#define MLAG_LAGUERRE_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "mlag/multi_index.hpp"
#include "mlag/polynomial.hpp"

namespace mlag {

// Memo for explicit_laguerre results, keyed by (r, n). Passed explicitly;
// safe for concurrent lookup/insert.
class LaguerreCache {
public:
    Polynomial get_or_compute(const MultiIndex& n);

private:
    std::mutex mutex_;
    std::map<MultiIndex, Polynomial> memo_;
};

// Monic unsigned multiple Laguerre polynomial, as an exact polynomial in
// x, b_1, ..., b_r (b_i = alpha_i + 1), via the explicit double sum:
//   sum over k <= n of prod_i [ C(n_i,k_i) * (b_i + k_1+...+k_i)^{rising n_i-k_i} ] * x^{|k|}.
Polynomial explicit_laguerre(const MultiIndex& n);

// Same polynomial extracted from the truncated multivariate exponential
// generating function
//   prod_i (1-t_i)^{-b_i} * exp[x (prod_i 1/(1-t_i) - 1)],
// as (prod_i n_i!) times the coefficient of t^n. Equals explicit_laguerre(n).
Polynomial egf_laguerre(const MultiIndex& n);

// explicit_laguerre(sigma(n)) with the beta variables relabeled back through
// sigma; equals explicit_laguerre(n) by joint permutation invariance.
// sigma is 0-based: the permuted index is m_i = n[sigma[i]].
Polynomial permute_laguerre(const MultiIndex& n, const std::vector<int>& sigma);

// Binomial coefficients by Pascal recurrence, rows 0..n_max.
std::vector<std::vector<mpz_class>> pascal_rows(int n_max);

}  // namespace mlag

#endif
