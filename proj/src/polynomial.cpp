#include "mlag/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace mlag {

bool coefficients_nonnegative(const Polynomial& p, NonnegativityWitness* witness) {
    for (const auto& [e, c] : p.terms()) {
        if (c < 0) {
            if (witness) *witness = NonnegativityWitness{e, c};
            return false;
        }
    }
    return true;
}

Polynomial relabel_betas(const Polynomial& p, const std::vector<int>& sigma) {
    const int r = p.num_vars() - 1;
    if (static_cast<int>(sigma.size()) != r)
        throw std::invalid_argument("relabel_betas: permutation length mismatch");
    Polynomial out(p.num_vars());
    Exponents e(p.num_vars());
    for (const auto& [src, c] : p.terms()) {
        e[0] = src[0];
        for (int i = 0; i < r; ++i) e[1 + sigma[i]] = src[1 + i];
        out.add_term(e, c);
    }
    return out;
}

namespace {

std::string var_name(int index) {
    return index == 0 ? "x" : "b" + std::to_string(index);
}

std::string monomial_text(const Exponents& e, const mpz_class& coeff) {
    std::string s;
    mpz_class a = abs(coeff);
    bool constant = total_degree(e) == 0;
    if (a != 1 || constant) s = a.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<int>(i));
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += monomial_text(e, c);
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("parse_text: expected integer");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_text(const std::string& text, int num_vars) {
    Polynomial out(num_vars);
    Lexer lx{text};
    if (lx.peek() == '\0') throw std::invalid_argument("parse_text: empty input");
    bool first = true;
    while (lx.peek() != '\0') {
        int sign = 1;
        if (lx.eat('-')) {
            sign = -1;
        } else if (lx.eat('+')) {
            if (first) throw std::invalid_argument("parse_text: leading '+'");
        }
        mpz_class coeff = sign;
        Exponents e(num_vars, 0);
        bool want_factor = true;
        while (want_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= mpz_class(lx.integer());
            } else if (c == 'x' || c == 'b') {
                ++lx.pos;
                int index = 0;
                if (c == 'b') index = std::stoi(lx.integer());
                if (index < 0 || index >= num_vars)
                    throw std::invalid_argument("parse_text: variable out of range");
                std::uint32_t exp = 1;
                if (lx.eat('^')) exp = static_cast<std::uint32_t>(std::stoul(lx.integer()));
                e[index] += exp;
            } else {
                throw std::invalid_argument("parse_text: unexpected character");
            }
            want_factor = lx.eat('*');
        }
        out.add_term(e, coeff);
        first = false;
    }
    return out;
}

double eval_double(const Polynomial& p, const std::vector<double>& assignment) {
    if (static_cast<int>(assignment.size()) != p.num_vars())
        throw std::invalid_argument("eval_double: assignment length mismatch");
    double sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double t = c.get_d();
        for (int i = 0; i < p.num_vars(); ++i)
            if (e[i]) t *= std::pow(assignment[i], static_cast<int>(e[i]));
        sum += t;
    }
    return sum;
}

}  // namespace mlag
