#include "mlag/laguerre.hpp"

#include <algorithm>

namespace mlag {

Polynomial LaguerreCache::get_or_compute(const MultiIndex& n) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(n);
        if (it != memo_.end()) return it->second;
    }
    Polynomial p = explicit_laguerre(n);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(n, std::move(p)).first->second;
}

std::vector<std::vector<mpz_class>> pascal_rows(int n_max) {
    std::vector<std::vector<mpz_class>> rows(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        rows[n][0] = rows[n][n] = 1;
        for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

Polynomial explicit_laguerre(const MultiIndex& n) {
    const int r = static_cast<int>(n.size());
    if (r < 1) throw std::invalid_argument("explicit_laguerre: r must be >= 1");
    const int nv = 1 + r;
    const int n_max = *std::max_element(n.begin(), n.end());
    const auto binom = pascal_rows(std::max(n_max, 0));

    Polynomial sum(nv);
    for (const auto& k : multi_indices_in_box(n)) {
        auto term = Polynomial::constant(nv, 1);
        mpz_class scalar = 1;
        int prefix = 0;
        for (int i = 0; i < r; ++i) {
            prefix += k[i];
            scalar *= binom[n[i]][k[i]];
            if (n[i] - k[i] > 0) {
                auto base = Polynomial::variable(nv, 1 + i) +
                            Polynomial::constant(nv, prefix);
                term *= rising_factorial(base, n[i] - k[i]);
            }
        }
        term.scale(scalar);
        Polynomial xk(nv);
        Exponents e(nv, 0);
        e[0] = static_cast<std::uint32_t>(total(k));
        xk.add_term(e, 1);
        sum += term * xk;
    }
    return sum;
}

namespace {

// Truncated multivariate series in t_1..t_r whose coefficients are rational
// polynomials in (x, b). Keys never exceed the cap componentwise.
using Series = std::map<MultiIndex, RationalPolynomial>;

Series series_mul_acc(const Series& a, const Series& b, const MultiIndex& cap) {
    Series out;
    const int r = static_cast<int>(cap.size());
    MultiIndex m(r);
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) {
            bool fits = true;
            for (int i = 0; i < r; ++i) {
                m[i] = ea[i] + eb[i];
                if (m[i] > cap[i]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            auto it = out.find(m);
            if (it == out.end())
                out.emplace(m, pa * pb);
            else
                it->second += pa * pb;
        }
    return out;
}

}  // namespace

Polynomial egf_laguerre(const MultiIndex& n) {
    const int r = static_cast<int>(n.size());
    if (r < 1) throw std::invalid_argument("egf_laguerre: r must be >= 1");
    const int nv = 1 + r;
    const int ntot = total(n);

    // prod_i (1-t_i)^{-b_i}: coefficient of t_i^m is rising(b_i, m) / m!.
    Series prefactor{{MultiIndex(r, 0), RationalPolynomial::constant(nv, 1)}};
    for (int i = 0; i < r; ++i) {
        Series factor;
        mpq_class inv_fact = 1;
        for (int m = 0; m <= n[i]; ++m) {
            if (m > 0) inv_fact /= m;
            MultiIndex key(r, 0);
            key[i] = m;
            auto coeff = rising_factorial(
                RationalPolynomial::variable(nv, 1 + i), m);
            coeff.scale(inv_fact);
            factor.emplace(std::move(key), std::move(coeff));
        }
        prefactor = series_mul_acc(prefactor, factor, n);
    }

    // g = prod_i 1/(1-t_i) - 1: coefficient 1 at every nonzero key in the box.
    Series g;
    for (const auto& m : multi_indices_in_box(n))
        if (total(m) > 0) g.emplace(m, RationalPolynomial::constant(nv, 1));

    // exp(x g) truncated: sum_{j<=|n|} x^j g^j / j! (g has no constant term).
    Series expxg{{MultiIndex(r, 0), RationalPolynomial::constant(nv, 1)}};
    Series g_power = g;
    mpq_class inv_fact = 1;
    for (int j = 1; j <= ntot && !g_power.empty(); ++j) {
        inv_fact /= j;
        auto xj = RationalPolynomial(nv);
        Exponents e(nv, 0);
        e[0] = static_cast<std::uint32_t>(j);
        xj.add_term(e, inv_fact);
        for (const auto& [key, coeff] : g_power) {
            auto term = coeff * xj;
            auto it = expxg.find(key);
            if (it == expxg.end())
                expxg.emplace(key, std::move(term));
            else
                it->second += term;
        }
        if (j < ntot) g_power = series_mul_acc(g_power, g, n);
    }

    Series full = series_mul_acc(prefactor, expxg, n);
    auto it = full.find(n);
    RationalPolynomial coeff =
        it == full.end() ? RationalPolynomial(nv) : it->second;

    // Multiply by prod n_i!; every denominator must cancel.
    mpz_class fact_prod = 1;
    for (int i = 0; i < r; ++i)
        for (int m = 2; m <= n[i]; ++m) fact_prod *= m;
    coeff.scale(mpq_class(fact_prod));

    Polynomial out(nv);
    for (const auto& [e, c] : coeff.terms()) {
        mpq_class canon = c;
        canon.canonicalize();
        if (canon.get_den() != 1)
            throw std::logic_error("egf_laguerre: non-integer coefficient survived");
        out.add_term(e, canon.get_num());
    }
    return out;
}

Polynomial permute_laguerre(const MultiIndex& n, const std::vector<int>& sigma) {
    const int r = static_cast<int>(n.size());
    if (static_cast<int>(sigma.size()) != r)
        throw std::invalid_argument("permute_laguerre: permutation length mismatch");
    std::vector<bool> seen(r, false);
    for (int v : sigma) {
        if (v < 0 || v >= r || seen[v])
            throw std::invalid_argument("permute_laguerre: not a permutation");
        seen[v] = true;
    }
    MultiIndex permuted(r);
    for (int i = 0; i < r; ++i) permuted[i] = n[sigma[i]];
    // L_{sigma n}^{(sigma b)} = L_n^{(b)}: the beta variable in slot i of the
    // permuted polynomial stands for b_{sigma(i)}.
    return relabel_betas(explicit_laguerre(permuted), sigma);
}

}  // namespace mlag
