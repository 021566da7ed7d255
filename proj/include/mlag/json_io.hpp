#ifndef MLAG_JSON_IO_HPP
#define MLAG_JSON_IO_HPP

#include <json.hpp>

#include "mlag/hankel.hpp"
#include "mlag/polynomial.hpp"
#include "mlag/stieltjes.hpp"

namespace mlag {

using nlohmann::json;

inline json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", e}, {"coeff", c.get_str()}});
    return json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    Polynomial p(j.at("num_vars").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exponents").get<Exponents>();
        p.add_term(e, mpz_class(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        default: return "INCOMPLETE";
    }
}

inline json minor_report_to_json(const MinorReport& report) {
    json checked = json::object();
    for (const auto& [order, count] : report.minors_checked)
        checked[std::to_string(order)] = count;
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"rows", f.rows},
                            {"cols", f.cols},
                            {"witness_monomial", f.witness},
                            {"coeff", f.coefficient.get_str()}});
    return json{{"spec",
                 {{"r", report.spec.r},
                  {"k", report.spec.k},
                  {"N", report.spec.N},
                  {"max_minor_order",
                   report.spec.max_minor_order > 0 ? report.spec.max_minor_order
                                                   : report.spec.N},
                  {"reading", "all minors of the NxN matrix up to max_minor_order"}}},
                {"verdict", verdict_name(report.verdict)},
                {"minors_checked", checked},
                {"failures", failures},
                {"wall_time_ms", report.wall_time_ms}};
}

inline json moment_result_to_json(const MomentCheckResult& res, int order) {
    return json{{"n", res.n},         {"alpha", res.alpha},
                {"x", res.x},         {"exact", res.exact_value},
                {"quadrature", res.quadrature_value},
                {"rel_error", res.rel_error},
                {"order", order}};
}

}  // namespace mlag

#endif
