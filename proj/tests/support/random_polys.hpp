#ifndef MLAG_TESTS_RANDOM_POLYS_HPP
#define MLAG_TESTS_RANDOM_POLYS_HPP

#include <random>

#include "mlag/polynomial.hpp"

namespace mlag::testing {

// Random sparse polynomial: up to max_terms terms, per-variable exponents
// <= max_exp, coefficients in [-coeff_range, coeff_range].
inline Polynomial random_polynomial(std::mt19937& rng, int num_vars, int max_terms,
                                    int max_exp, int coeff_range) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    Polynomial p(num_vars);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(num_vars);
        for (int i = 0; i < num_vars; ++i) e[i] = static_cast<std::uint32_t>(exp(rng));
        p.add_term(e, coeff(rng));
    }
    return p;
}

// Random matrix entry with total degree <= 2 in each variable pattern the
// oracle-agreement criterion asks for: degree <= 2, coefficients in [-5, 5].
inline Polynomial random_degree2_entry(std::mt19937& rng, int num_vars) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> pick(0, num_vars - 1);
    std::uniform_int_distribution<int> nterms(1, 4);
    Polynomial p(num_vars);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(num_vars, 0);
        std::uniform_int_distribution<int> deg(0, 2);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) e[pick(rng)] += 1;
        p.add_term(e, coeff(rng));
    }
    return p;
}

inline std::vector<mpq_class> random_rational_point(std::mt19937& rng, int num_vars) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<mpq_class> point(num_vars);
    for (auto& v : point) {
        v = mpq_class(num(rng), den(rng));
        v.canonicalize();
    }
    return point;
}

}  // namespace mlag::testing

#endif
