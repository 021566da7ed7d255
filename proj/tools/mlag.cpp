// Batch verification front end for the multiple Laguerre laboratory.
// Exit codes: 0 PASS, 1 mathematical FAIL, 2 usage error, 3 budget-truncated.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlag/digraphs.hpp"
#include "mlag/hankel.hpp"
#include "mlag/json_io.hpp"
#include "mlag/laguerre.hpp"
#include "mlag/parallel.hpp"
#include "mlag/stieltjes.hpp"

namespace {

using mlag::json;

constexpr const char* kSchema = R"({
  "schema_version": "1",
  "reports": {
    "eval": {"n": "[int]", "r": "int", "polynomial": "canonical text",
             "terms": "[{exponents:[int], coeff:\"decimal-string\"}]"},
    "combi-verify": {"verdict": "PASS|FAIL", "cases": "int",
                     "first_failure": "{n, explicit, combinatorial}?"},
    "egf-verify": {"verdict": "PASS|FAIL", "cases": "int",
                   "first_failure": "{n, explicit, egf}?"},
    "symmetry-verify": {"verdict": "PASS|FAIL", "cases": "int",
                        "first_failure": "{n, sigma}?"},
    "hankel-verify": {"spec": "{r, k, N, max_minor_order, reading}",
                      "verdict": "PASS|FAIL|INCOMPLETE",
                      "minors_checked": "{order: count}",
                      "failures": "[{rows, cols, witness_monomial, coeff}]",
                      "wall_time_ms": "number"},
    "moments-verify": {"verdict": "PASS|FAIL", "max_rel_error": "number",
                       "rows": "[{n, alpha, x, exact, quadrature, rel_error, order}]"},
    "ortho-verify": {"verdict": "PASS|FAIL",
                     "rows": "[{n, alpha, layer, m, value, scale, ratio}]"}
  }
})";

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw CLI::ValidationError("expected comma-separated integers");
    return out;
}

mpq_class rational_from_decimal(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
    }
    mpz_class num(digits.empty() ? "0" : digits);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    mpq_class q(neg ? -num : num, den);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> parse_rationals(const std::string& s) {
    std::vector<mpq_class> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_from_decimal(item));
    if (out.empty()) throw CLI::ValidationError("expected comma-separated numbers");
    return out;
}

struct Output {
    std::string format = "text";
    std::string out_path;

    void emit(const json& report, const std::string& text) const {
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << report.dump(2) << "\n";
        }
        if (format == "json")
            std::cout << report.dump(2) << "\n";
        else
            std::cout << text;
    }
};

int run_eval(const std::vector<int>& n, const Output& output) {
    const mlag::Polynomial p = mlag::explicit_laguerre(n);
    json report = mlag::polynomial_to_json(p);
    report["n"] = n;
    report["r"] = static_cast<int>(n.size());
    report["polynomial"] = mlag::to_text(p);
    output.emit(report, mlag::to_text(p) + "\n");
    return 0;
}

int run_combi_verify(int r_max, int max_total, int workers, const Output& output) {
    std::vector<mlag::MultiIndex> cases;
    for (int r = 1; r <= r_max; ++r)
        for (auto& n : mlag::multi_indices_up_to(r, max_total)) cases.push_back(n);
    std::vector<int> ok(cases.size(), 0);
    std::vector<std::pair<std::string, std::string>> sides(cases.size());
    mlag::parallel_for(cases.size(), workers, [&](std::size_t i) {
        const auto expl = mlag::explicit_laguerre(cases[i]);
        const auto comb =
            mlag::combinatorial_laguerre({cases[i]}, {std::max(10, max_total), 10'000'000});
        ok[i] = expl == comb;
        if (!ok[i]) sides[i] = {mlag::to_text(expl), mlag::to_text(comb)};
    });
    json report{{"verdict", "PASS"}, {"cases", cases.size()}};
    std::string text = "combi-verify: PASS (" + std::to_string(cases.size()) + " cases)\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (ok[i]) continue;
        report["verdict"] = "FAIL";
        report["first_failure"] = {{"n", cases[i]},
                                   {"explicit", sides[i].first},
                                   {"combinatorial", sides[i].second}};
        std::ostringstream os;
        os << "combi-verify: FAIL at n = [";
        for (std::size_t j = 0; j < cases[i].size(); ++j)
            os << (j ? "," : "") << cases[i][j];
        os << "]\n  explicit:      " << sides[i].first
           << "\n  combinatorial: " << sides[i].second << "\n";
        text = os.str();
        break;
    }
    output.emit(report, text);
    return report["verdict"] == "PASS" ? 0 : 1;
}

int run_egf_verify(int r, int max_total, int workers, const Output& output) {
    const auto cases = mlag::multi_indices_up_to(r, max_total);
    std::vector<int> ok(cases.size(), 0);
    mlag::parallel_for(cases.size(), workers, [&](std::size_t i) {
        ok[i] = mlag::explicit_laguerre(cases[i]) == mlag::egf_laguerre(cases[i]);
    });
    json report{{"verdict", "PASS"}, {"cases", cases.size()}};
    std::string text = "egf-verify: PASS (" + std::to_string(cases.size()) + " cases)\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (ok[i]) continue;
        report["verdict"] = "FAIL";
        report["first_failure"] = {{"n", cases[i]}};
        text = "egf-verify: FAIL\n";
        break;
    }
    output.emit(report, text);
    return report["verdict"] == "PASS" ? 0 : 1;
}

int run_symmetry_verify(int r, int max_total, int workers, const Output& output) {
    const auto cases = mlag::multi_indices_up_to(r, max_total);
    std::vector<int> sigma(r);
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < r; ++i) sigma[i] = i;
    do {
        perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<int> ok(cases.size(), 0);
    mlag::parallel_for(cases.size(), workers, [&](std::size_t i) {
        const auto reference = mlag::explicit_laguerre(cases[i]);
        ok[i] = 1;
        for (const auto& perm : perms)
            if (mlag::permute_laguerre(cases[i], perm) != reference) {
                ok[i] = 0;
                return;
            }
    });
    const std::size_t checks = cases.size() * perms.size();
    json report{{"verdict", "PASS"}, {"cases", checks}};
    std::string text = "symmetry-verify: PASS (" + std::to_string(checks) + " checks)\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (ok[i]) continue;
        report["verdict"] = "FAIL";
        report["first_failure"] = {{"n", cases[i]}};
        text = "symmetry-verify: FAIL\n";
        break;
    }
    output.emit(report, text);
    return report["verdict"] == "PASS" ? 0 : 1;
}

int run_hankel_verify(const mlag::HankelSpec& spec, const mlag::SweepOptions& options,
                      const Output& output) {
    mlag::LaguerreCache cache;
    const mlag::MinorReport report = mlag::verify_all_minors(spec, options, cache);
    const json j = mlag::minor_report_to_json(report);
    std::ostringstream os;
    os << "hankel-verify: " << mlag::verdict_name(report.verdict) << "\n";
    for (const auto& [order, count] : report.minors_checked)
        os << "  order " << order << ": " << count << " minors\n";
    for (const auto& f : report.failures) {
        os << "  FAIL rows={";
        for (std::size_t i = 0; i < f.rows.size(); ++i) os << (i ? "," : "") << f.rows[i];
        os << "} cols={";
        for (std::size_t i = 0; i < f.cols.size(); ++i) os << (i ? "," : "") << f.cols[i];
        os << "} coeff " << f.coefficient.get_str() << "\n";
    }
    os << "  wall time " << report.wall_time_ms << " ms\n";
    output.emit(j, os.str());
    switch (report.verdict) {
        case mlag::Verdict::PASS: return 0;
        case mlag::Verdict::FAIL: return 1;
        default: return 3;
    }
}

int run_moments_verify(int r, const std::vector<mpq_class>& alpha, const mpq_class& x,
                       int max_n, int order, double rtol, double tol, int workers,
                       const Output& output) {
    for (const auto& a : alpha)
        if (a <= -1) throw CLI::ValidationError("--alpha entries must be > -1");
    if (x < 0) throw CLI::ValidationError("--x must be >= 0");
    const auto cases = mlag::multi_indices_in_box(mlag::MultiIndex(r, max_n));
    mlag::LaguerreCache cache;
    std::vector<mlag::MomentCheckResult> rows(cases.size());
    mlag::parallel_for(cases.size(), workers, [&](std::size_t i) {
        rows[i] = mlag::check_moment(cases[i], alpha, x, order, cache, rtol);
    });
    double max_rel = 0.0;
    json jrows = json::array();
    for (const auto& row : rows) {
        max_rel = std::max(max_rel, row.rel_error);
        jrows.push_back(mlag::moment_result_to_json(row, order));
    }
    const bool pass = max_rel <= tol;
    json report{{"verdict", pass ? "PASS" : "FAIL"},
                {"max_rel_error", max_rel},
                {"tolerance", tol},
                {"rows", jrows}};
    std::ostringstream os;
    os << "moments-verify: " << (pass ? "PASS" : "FAIL") << " (" << rows.size()
       << " cases, max rel error " << max_rel << ")\n";
    output.emit(report, os.str());
    return pass ? 0 : 1;
}

int run_ortho_verify(int r, const std::vector<mpq_class>& alpha_q,
                     const std::vector<int>& n, int order, double tol,
                     const Output& output) {
    std::vector<double> alpha(alpha_q.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = alpha_q[i].get_d();
    mlag::LaguerreCache cache;
    json jrows = json::array();
    bool pass = true;
    std::ostringstream os;
    for (int layer = 0; layer < r; ++layer) {
        for (int m = 0; m < n[layer]; ++m) {
            const auto res = mlag::check_orthogonality(n, alpha, layer, m, order, cache);
            const double ratio = std::abs(res.value) / res.scale;
            pass = pass && ratio <= tol;
            jrows.push_back({{"n", n}, {"alpha", alpha}, {"layer", layer + 1},
                             {"m", m}, {"value", res.value}, {"scale", res.scale},
                             {"ratio", ratio}});
            os << "  i=" << layer + 1 << " m=" << m << " |Q|/scale = " << ratio << "\n";
        }
    }
    json report{{"verdict", pass ? "PASS" : "FAIL"}, {"tolerance", tol}, {"rows", jrows}};
    output.emit(report, "ortho-verify: " + std::string(pass ? "PASS" : "FAIL") + "\n" + os.str());
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple Laguerre polynomial verification laboratory"};
    app.require_subcommand(0, 1);

    Output output;
    bool print_schema = false;
    int workers = 0;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--workers", workers, "Worker threads (default: MLL_WORKERS or all cores)");
    app.add_option("--out", output.out_path, "Write the JSON report to a file");
    app.add_flag("--print-schema", print_schema, "Print the JSON report schema and exit");

    // eval
    auto* eval = app.add_subcommand("eval", "Print the polynomial for one multi-index");
    int eval_r = 1;
    std::string eval_n;
    eval->add_option("--r", eval_r, "Number of layers")->check(CLI::PositiveNumber);
    eval->add_option("--n", eval_n, "Multi-index, comma-separated")->required();

    // combi-verify
    auto* combi = app.add_subcommand("combi-verify",
                                     "Digraph enumeration vs explicit formula");
    int combi_rmax = 2, combi_max_total = 4;
    combi->add_option("--r-max", combi_rmax)->check(CLI::PositiveNumber);
    combi->add_option("--max-total", combi_max_total)->check(CLI::NonNegativeNumber);

    // egf-verify
    auto* egf = app.add_subcommand("egf-verify", "Generating function vs explicit formula");
    int egf_r = 2, egf_max_total = 5;
    egf->add_option("--r", egf_r)->check(CLI::PositiveNumber);
    egf->add_option("--max-total", egf_max_total)->check(CLI::NonNegativeNumber);

    // symmetry-verify
    auto* symmetry = app.add_subcommand("symmetry-verify", "Joint permutation invariance");
    int sym_r = 3, sym_max_total = 4;
    symmetry->add_option("--r", sym_r)->check(CLI::PositiveNumber);
    symmetry->add_option("--max-total", sym_max_total)->check(CLI::NonNegativeNumber);

    // hankel-verify
    auto* hankel = app.add_subcommand("hankel-verify",
                                      "Coefficientwise nonnegativity of all minors");
    int hankel_r = 1, hankel_N = 5, hankel_max_order = 0;
    std::string hankel_k = "1";
    double budget_seconds = 0.0;
    hankel->add_option("--r", hankel_r)->check(CLI::PositiveNumber);
    hankel->add_option("--k", hankel_k, "Direction multi-index, comma-separated");
    hankel->add_option("--N", hankel_N)->check(CLI::PositiveNumber);
    hankel->add_option("--max-minor-order", hankel_max_order)->check(CLI::NonNegativeNumber);
    hankel->add_option("--budget-seconds", budget_seconds)->check(CLI::NonNegativeNumber);

    // moments-verify
    auto* moments = app.add_subcommand("moments-verify",
                                       "Quadrature moments vs exact evaluation");
    int mom_r = 1, mom_max_n = 3, quad_order = 40;
    std::string mom_alpha = "0", mom_x = "0";
    double rtol = 1e-14, mom_tol = 1e-8;
    moments->add_option("--r", mom_r)->check(CLI::PositiveNumber);
    moments->add_option("--alpha", mom_alpha, "alpha_i values, comma-separated");
    moments->add_option("--x", mom_x, "evaluation point x >= 0");
    moments->add_option("--max-n", mom_max_n)->check(CLI::NonNegativeNumber);
    moments->add_option("--quad-order", quad_order)->check(CLI::PositiveNumber);
    moments->add_option("--rtol", rtol, "series truncation tolerance");
    moments->add_option("--tol", mom_tol, "relative error pass threshold");

    // ortho-verify
    auto* ortho = app.add_subcommand("ortho-verify", "Multiple orthogonality conditions");
    int ortho_r = 2, ortho_order = 40;
    std::string ortho_alpha = "-0.3,0.4", ortho_n = "2,1";
    double ortho_tol = 1e-9;
    ortho->add_option("--r", ortho_r)->check(CLI::PositiveNumber);
    ortho->add_option("--alpha", ortho_alpha);
    ortho->add_option("--n", ortho_n);
    ortho->add_option("--quad-order", ortho_order)->check(CLI::PositiveNumber);
    ortho->add_option("--tol", ortho_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (print_schema) {
        std::cout << json::parse(kSchema).dump(2) << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << "a subcommand is required (see --help)\n";
        return 2;
    }

    try {
        if (*eval) {
            auto n = parse_ints(eval_n);
            if (static_cast<int>(n.size()) != eval_r)
                throw CLI::ValidationError("--n length must equal --r");
            return run_eval(n, output);
        }
        if (*combi) return run_combi_verify(combi_rmax, combi_max_total, workers, output);
        if (*egf) return run_egf_verify(egf_r, egf_max_total, workers, output);
        if (*symmetry) return run_symmetry_verify(sym_r, sym_max_total, workers, output);
        if (*hankel) {
            mlag::HankelSpec spec{hankel_r, parse_ints(hankel_k), hankel_N, hankel_max_order};
            if (static_cast<int>(spec.k.size()) != spec.r)
                throw CLI::ValidationError("--k length must equal --r");
            return run_hankel_verify(spec, {workers, budget_seconds}, output);
        }
        if (*moments) {
            auto alpha = parse_rationals(mom_alpha);
            if (static_cast<int>(alpha.size()) != mom_r)
                throw CLI::ValidationError("--alpha length must equal --r");
            return run_moments_verify(mom_r, alpha, rational_from_decimal(mom_x), mom_max_n,
                                      quad_order, rtol, mom_tol, workers, output);
        }
        if (*ortho) {
            auto alpha = parse_rationals(ortho_alpha);
            auto n = parse_ints(ortho_n);
            if (static_cast<int>(alpha.size()) != ortho_r ||
                static_cast<int>(n.size()) != ortho_r)
                throw CLI::ValidationError("--alpha and --n lengths must equal --r");
            return run_ortho_verify(ortho_r, alpha, n, ortho_order, ortho_tol, output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
