#ifndef MLAG_POLYNOMIAL_HPP
#define MLAG_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace mlag {

// Exponent vector. Slot 0 is the exponent of x; slot i >= 1 is the exponent
// of b_i. Length is fixed per polynomial (num_vars = 1 + r).
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto v : e) d += v;
    return d;
}

// Graded lexicographic, descending: higher total degree first, ties broken by
// lexicographically larger exponent vector (x is the most significant slot).
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : e) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

template <class Coeff>
class BasicPolynomial {
public:
    using TermMap = std::map<Exponents, Coeff, GradedLexGreater>;

    BasicPolynomial() : num_vars_(1) {}
    explicit BasicPolynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("num_vars must be >= 1");
    }

    static BasicPolynomial constant(int num_vars, Coeff c) {
        BasicPolynomial p(num_vars);
        if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), std::move(c));
        return p;
    }

    static BasicPolynomial variable(int num_vars, int index, Coeff c = Coeff(1)) {
        if (index < 0 || index >= num_vars)
            throw std::invalid_argument("variable index out of range");
        BasicPolynomial p(num_vars);
        if (c != 0) {
            Exponents e(num_vars, 0);
            e[index] = 1;
            p.terms_.emplace(std::move(e), std::move(c));
        }
        return p;
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of a monomial (zero if absent).
    Coeff coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    std::uint32_t degree_in(int var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    std::uint64_t max_total_degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
    }

    void add_term(const Exponents& e, const Coeff& c) {
        if (static_cast<int>(e.size()) != num_vars_)
            throw std::invalid_argument("exponent length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) {
        a += b;
        return a;
    }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) {
        a -= b;
        return a;
    }

    BasicPolynomial operator-() const {
        BasicPolynomial p(num_vars_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, Coeff(-c));
        return p;
    }

    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        a.check_vars(b);
        BasicPolynomial out(a.num_vars_);
        if (a.is_zero() || b.is_zero()) return out;
        if (a.packable() && b.packable()) {
            mul_packed(a, b, out);
        } else {
            mul_generic(a, b, out);
        }
        return out;
    }

    BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

    BasicPolynomial& scale(const Coeff& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) {
        return !(a == b);
    }

private:
    void check_vars(const BasicPolynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("polynomial variable-count mismatch");
    }

    // Monomials fit a packed 64-bit key when there are at most 8 variables and
    // every per-slot exponent sum stays below 256.
    bool packable() const {
        if (num_vars_ > 8) return false;
        for (const auto& [e, c] : terms_)
            for (auto v : e)
                if (v >= 128) return false;
        return true;
    }

    static std::uint64_t pack(const Exponents& e) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) k |= std::uint64_t(e[i]) << (8 * i);
        return k;
    }

    static void mul_packed(const BasicPolynomial& a, const BasicPolynomial& b,
                           BasicPolynomial& out) {
        std::vector<std::pair<std::uint64_t, const Coeff*>> pa, pb;
        pa.reserve(a.terms_.size());
        pb.reserve(b.terms_.size());
        for (const auto& [e, c] : a.terms_) pa.emplace_back(pack(e), &c);
        for (const auto& [e, c] : b.terms_) pb.emplace_back(pack(e), &c);
        std::unordered_map<std::uint64_t, Coeff> acc;
        acc.reserve(pa.size() * 2 + pb.size() * 2);
        for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb) {
                Coeff& slot = acc[ka + kb];
                if constexpr (std::is_same_v<Coeff, mpz_class>) {
                    mpz_addmul(slot.get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());
                } else {
                    slot += *ca * *cb;
                }
            }
        Exponents e(a.num_vars_);
        for (auto& [k, c] : acc) {
            if (c == 0) continue;
            for (int i = 0; i < a.num_vars_; ++i)
                e[i] = static_cast<std::uint32_t>((k >> (8 * i)) & 0xff);
            out.terms_.emplace(e, std::move(c));
        }
    }

    static void mul_generic(const BasicPolynomial& a, const BasicPolynomial& b,
                            BasicPolynomial& out) {
        std::unordered_map<Exponents, Coeff, ExponentsHash> acc;
        acc.reserve(a.terms_.size() * 2);
        Exponents e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
                acc[e] += ca * cb;
            }
        for (auto& [k, c] : acc)
            if (c != 0) out.terms_.emplace(k, std::move(c));
    }

    int num_vars_;
    TermMap terms_;
};

using Polynomial = BasicPolynomial<mpz_class>;
using RationalPolynomial = BasicPolynomial<mpq_class>;

// p * (p+1) * ... * (p+m-1); the empty product (m = 0) is 1.
template <class Coeff>
BasicPolynomial<Coeff> rising_factorial(const BasicPolynomial<Coeff>& p, int m) {
    if (m < 0) throw std::invalid_argument("rising_factorial: m must be >= 0");
    auto acc = BasicPolynomial<Coeff>::constant(p.num_vars(), Coeff(1));
    for (int j = 0; j < m; ++j)
        acc *= p + BasicPolynomial<Coeff>::constant(p.num_vars(), Coeff(j));
    return acc;
}

// Exact value at a rational point; assignment[i] is the value of variable i.
template <class Coeff>
mpq_class eval_exact(const BasicPolynomial<Coeff>& p,
                     const std::vector<mpq_class>& assignment) {
    if (static_cast<int>(assignment.size()) != p.num_vars())
        throw std::invalid_argument("eval_exact: assignment length mismatch");
    // Power tables per variable, up to the degree actually present.
    std::vector<std::vector<mpq_class>> pow(p.num_vars());
    for (int i = 0; i < p.num_vars(); ++i) {
        pow[i].resize(p.degree_in(i) + 1);
        pow[i][0] = 1;
        for (std::size_t j = 1; j < pow[i].size(); ++j)
            pow[i][j] = pow[i][j - 1] * assignment[i];
    }
    mpq_class sum = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class t(c);
        for (int i = 0; i < p.num_vars(); ++i)
            if (e[i]) t *= pow[i][e[i]];
        sum += t;
    }
    return sum;
}

struct NonnegativityWitness {
    Exponents monomial;
    mpz_class coefficient;
};

// True iff every stored coefficient is positive (zero coefficients are never
// stored); fills the witness with one offending term otherwise.
bool coefficients_nonnegative(const Polynomial& p, NonnegativityWitness* witness = nullptr);

// Relabel the beta slots: exponent of b_{i} moves to slot b_{sigma[i]}
// (sigma is 0-based over the r beta variables; slot 0, x, is fixed).
Polynomial relabel_betas(const Polynomial& p, const std::vector<int>& sigma);

// Canonical text form, terms in descending graded-lex order, e.g. "2*x + b1".
std::string to_text(const Polynomial& p);
Polynomial parse_text(const std::string& text, int num_vars);

// Evaluate with double coefficients (numeric modules only).
double eval_double(const Polynomial& p, const std::vector<double>& assignment);

}  // namespace mlag

#endif
