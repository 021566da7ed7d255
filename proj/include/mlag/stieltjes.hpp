#ifndef MLAG_STIELTJES_HPP
#define MLAG_STIELTJES_HPP

#include <stdexcept>
#include <vector>

#include "mlag/laguerre.hpp"
#include "mlag/multi_index.hpp"
#include "mlag/polynomial.hpp"

namespace mlag {

struct HyperParams {
    std::vector<double> denominators;  // b_i > 0
    double z = 0.0;                    // >= 0
    double rtol = 1e-14;
};

struct SeriesDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0F_r(b_1..b_r; z) = sum_m z^m / (m! prod_i (b_i)^{rising m}). All terms are
// positive; summation stops when a term drops below rtol * partial sum.
// Throws SeriesDivergence past 1e5 terms.
double hyper_0Fr(const HyperParams& params);

// Nodes/weights for the weight y^alpha e^{-y} on [0, inf); integrates
// polynomials of degree <= 2m-1 exactly; weights sum to Gamma(alpha+1).
struct QuadratureRule {
    double alpha = 0.0;
    int order = 0;
    std::vector<double> nodes;    // strictly increasing, positive
    std::vector<double> weights;  // positive
};

QuadratureRule gauss_gen_laguerre(double alpha, int order);

// Tensor-product quadrature of the moment integral for the measure
//   e^{-x} * integral of (prod y_i^{n_i}) 0F_r(alpha+1; x prod y_i)
//            prod [ y_i^{alpha_i} e^{-y_i} / Gamma(alpha_i+1) ] dy.
// Equals explicit_laguerre(n) evaluated at (x, beta = alpha+1).
double moment_integral(const MultiIndex& n, const std::vector<double>& alpha,
                       double x, int order, double rtol = 1e-14);

// r=1 boundary measure at alpha = -1:
//   e^{-x} delta_0(y) + x e^{-(x+y)} 0F1(2; x y) dy.
// Matches explicit_laguerre((n)) at beta = 0.
double moment_integral_boundary_r1(int n, double x, int order, double rtol = 1e-14);

struct OrthogonalityResult {
    double value = 0.0;  // integral of L_n(y) y^m y^{alpha_i} e^{-y} dy
    double scale = 0.0;  // Gamma(|n| + alpha_i + 1)
};

// Multiple-orthogonality check: the signed polynomial L_n(y) = (-1)^{|n|}
// times the unsigned polynomial at x = -y; the integral vanishes for
// 0 <= m_exponent < n_i when alpha_i > -1 pairwise non-integer spaced.
OrthogonalityResult check_orthogonality(const MultiIndex& n,
                                        const std::vector<double>& alpha,
                                        int layer, int m_exponent, int order,
                                        LaguerreCache& cache);

struct MomentCheckResult {
    MultiIndex n;
    std::vector<double> alpha;
    double x = 0.0;
    double exact_value = 0.0;
    double quadrature_value = 0.0;
    double rel_error = 0.0;
};

// Quadrature vs exact rational evaluation of explicit_laguerre(n) at
// (x, beta = alpha + 1); exact arguments are given as rationals so the
// oracle side carries no rounding.
MomentCheckResult check_moment(const MultiIndex& n, const std::vector<mpq_class>& alpha,
                               const mpq_class& x, int order, LaguerreCache& cache,
                               double rtol = 1e-14);

}  // namespace mlag

#endif
