#include "mlag/stieltjes.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace mlag {

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr double kRelErrorFloor = 1e-300;

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double hyper_0Fr(const HyperParams& params) {
    for (double b : params.denominators)
        if (b <= 0.0) throw std::invalid_argument("hyper_0Fr: denominators must be > 0");
    if (params.z < 0.0) throw std::invalid_argument("hyper_0Fr: z must be >= 0");
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0; m < kMaxSeriesTerms; ++m) {
        double denom = m + 1.0;
        for (double b : params.denominators) denom *= b + m;
        term *= params.z / denom;
        sum += term;
        if (term < params.rtol * sum) return sum;
    }
    throw SeriesDivergence("hyper_0Fr: no convergence within term cap");
}

QuadratureRule gauss_gen_laguerre(double alpha, int order) {
    if (alpha <= -1.0) throw std::invalid_argument("gauss_gen_laguerre: alpha must be > -1");
    if (order < 1) throw std::invalid_argument("gauss_gen_laguerre: order must be >= 1");
    // Golub-Welsch: Jacobi matrix of the generalized Laguerre recurrence,
    // a_k = 2k + alpha + 1, b_k = sqrt(k (k + alpha)).
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int k = 0; k < order; ++k) {
        J(k, k) = 2.0 * k + alpha + 1.0;
        if (k > 0) {
            const double off = std::sqrt(k * (k + alpha));
            J(k, k - 1) = off;
            J(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_gen_laguerre: eigen-decomposition failed");
    QuadratureRule rule;
    rule.alpha = alpha;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int k = 0; k < order; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);  // ascending
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

double moment_integral(const MultiIndex& n, const std::vector<double>& alpha,
                       double x, int order, double rtol) {
    const int r = static_cast<int>(n.size());
    if (static_cast<int>(alpha.size()) != r)
        throw std::invalid_argument("moment_integral: alpha length mismatch");
    if (x < 0.0) throw std::invalid_argument("moment_integral: x must be >= 0");

    std::vector<QuadratureRule> rules;
    std::vector<double> b(r);
    rules.reserve(r);
    for (int i = 0; i < r; ++i) {
        rules.push_back(gauss_gen_laguerre(alpha[i], order));
        b[i] = alpha[i] + 1.0;
    }
    std::vector<double> gamma_norm(r);
    for (int i = 0; i < r; ++i) gamma_norm[i] = std::tgamma(alpha[i] + 1.0);

    // Fixed lexicographic node order with compensated summation; bit-stable
    // regardless of worker count.
    KahanSum acc;
    std::vector<int> idx(r, 0);
    while (true) {
        double w = 1.0;
        double ypow = 1.0;
        double yprod = 1.0;
        for (int i = 0; i < r; ++i) {
            const double y = rules[i].nodes[idx[i]];
            w *= rules[i].weights[idx[i]] / gamma_norm[i];
            ypow *= std::pow(y, n[i]);
            yprod *= y;
        }
        acc.add(w * ypow * hyper_0Fr({b, x * yprod, rtol}));
        int i = r - 1;
        while (i >= 0 && ++idx[i] == order) idx[i--] = 0;
        if (i < 0) break;
    }
    return std::exp(-x) * acc.sum;
}

double moment_integral_boundary_r1(int n, double x, int order, double rtol) {
    if (n < 0) throw std::invalid_argument("moment_integral_boundary_r1: n must be >= 0");
    if (x < 0.0) throw std::invalid_argument("moment_integral_boundary_r1: x must be >= 0");
    const QuadratureRule rule = gauss_gen_laguerre(0.0, order);
    KahanSum acc;
    for (int j = 0; j < order; ++j) {
        const double y = rule.nodes[j];
        acc.add(rule.weights[j] * std::pow(y, n) * hyper_0Fr({{2.0}, x * y, rtol}));
    }
    // Atom at y = 0 with mass e^{-x}, the alpha -> -1+ limit of the
    // normalized Gamma density; it contributes only to the n = 0 moment.
    const double atom = n == 0 ? std::exp(-x) : 0.0;
    return atom + x * std::exp(-x) * acc.sum;
}

OrthogonalityResult check_orthogonality(const MultiIndex& n,
                                        const std::vector<double>& alpha,
                                        int layer, int m_exponent, int order,
                                        LaguerreCache& cache) {
    const int r = static_cast<int>(n.size());
    if (static_cast<int>(alpha.size()) != r)
        throw std::invalid_argument("check_orthogonality: alpha length mismatch");
    if (layer < 0 || layer >= r)
        throw std::invalid_argument("check_orthogonality: layer out of range");
    if (m_exponent < 0 || m_exponent >= n[layer])
        throw std::invalid_argument("check_orthogonality: need 0 <= m < n_i");
    for (int i = 0; i < r; ++i) {
        if (alpha[i] <= -1.0)
            throw std::invalid_argument("check_orthogonality: alpha must be > -1");
        for (int j = i + 1; j < r; ++j) {
            const double diff = alpha[i] - alpha[j];
            if (std::abs(diff - std::round(diff)) < 1e-12)
                throw std::invalid_argument(
                    "check_orthogonality: alpha_i - alpha_j must not be an integer");
        }
    }

    const Polynomial L = cache.get_or_compute(n);
    const int ntot = total(n);
    const double sign = ntot % 2 == 0 ? 1.0 : -1.0;
    std::vector<double> assignment(1 + r);
    for (int i = 0; i < r; ++i) assignment[1 + i] = alpha[i] + 1.0;

    const QuadratureRule rule = gauss_gen_laguerre(alpha[layer], order);
    KahanSum acc;
    for (int j = 0; j < rule.order; ++j) {
        const double y = rule.nodes[j];
        assignment[0] = -y;  // signed polynomial: L_n(y) = (-1)^{|n|} script-L(-y)
        acc.add(rule.weights[j] * sign * eval_double(L, assignment) *
                std::pow(y, m_exponent));
    }
    OrthogonalityResult res;
    res.value = acc.sum;
    res.scale = std::tgamma(ntot + alpha[layer] + 1.0);
    return res;
}

MomentCheckResult check_moment(const MultiIndex& n, const std::vector<mpq_class>& alpha,
                               const mpq_class& x, int order, LaguerreCache& cache,
                               double rtol) {
    const int r = static_cast<int>(n.size());
    if (static_cast<int>(alpha.size()) != r)
        throw std::invalid_argument("check_moment: alpha length mismatch");
    MomentCheckResult res;
    res.n = n;
    res.x = x.get_d();
    res.alpha.resize(r);
    std::vector<mpq_class> assignment(1 + r);
    assignment[0] = x;
    for (int i = 0; i < r; ++i) {
        res.alpha[i] = alpha[i].get_d();
        assignment[1 + i] = alpha[i] + 1;
    }
    res.exact_value = eval_exact(cache.get_or_compute(n), assignment).get_d();
    res.quadrature_value = moment_integral(n, res.alpha, res.x, order, rtol);
    res.rel_error = std::abs(res.quadrature_value - res.exact_value) /
                    std::max(std::abs(res.exact_value), kRelErrorFloor);
    return res;
}

}  // namespace mlag
