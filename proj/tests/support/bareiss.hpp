#ifndef MLAG_TESTS_BAREISS_HPP
#define MLAG_TESTS_BAREISS_HPP

// Fraction-free determinant oracle, independent of the memoized Laplace path
// in the hankel module. Test-only.

#include <stdexcept>
#include <vector>

#include "mlag/polynomial.hpp"

namespace mlag::testing {

// Exact quotient f / g in Z[x, b]; throws if the division is not exact.
inline Polynomial divide_exact(Polynomial f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    Polynomial q(f.num_vars());
    const auto& g_lead = *g.terms().begin();
    while (!f.is_zero()) {
        const auto& f_lead = *f.terms().begin();
        Exponents e(f.num_vars());
        for (int i = 0; i < f.num_vars(); ++i) {
            if (f_lead.first[i] < g_lead.first[i])
                throw std::invalid_argument("divide_exact: not divisible (monomial)");
            e[i] = f_lead.first[i] - g_lead.first[i];
        }
        mpz_class c;
        mpz_class rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), f_lead.second.get_mpz_t(),
                    g_lead.second.get_mpz_t());
        if (rem != 0) throw std::invalid_argument("divide_exact: not divisible (coefficient)");
        Polynomial t(f.num_vars());
        t.add_term(e, c);
        q += t;
        f -= t * g;
    }
    return q;
}

// Bareiss fraction-free elimination; every division is exact. Row swaps flip
// the sign; a zero column means the determinant is zero.
inline Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("bareiss_determinant: empty matrix");
    const int nv = m[0][0].num_vars();
    Polynomial prev_pivot = Polynomial::constant(nv, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Polynomial(nv);  // zero column
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
        prev_pivot = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace mlag::testing

#endif
