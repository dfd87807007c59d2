#include "loghankel/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace loghankel {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Json to_json(const DiskParams& p) {
    return Json{{"p1", to_json(p.p1())}, {"p2", to_json(p.p2())}, {"p3", to_json(p.p3())}};
}

DiskParams disk_params_from_json(const Json& j) {
    return DiskParams(complex_from_json(j.at("p1")), complex_from_json(j.at("p2")), complex_from_json(j.at("p3")));
}

Json to_json(const CaseResult& c) {
    Json j{
        {"name", c.name},
        {"lo", c.lo},
        {"hi", c.hi},
        {"max", c.max},
        {"argmax", c.argmax},
        {"paper_value", c.paper_value},
        {"abs_diff", c.abs_diff},
    };
    if (c.lemma_consistent) {
        j["lemma_consistent"] = *c.lemma_consistent;
    }
    return j;
}

CaseResult case_result_from_json(const Json& j) {
    CaseResult c;
    c.name = j.at("name").get<std::string>();
    c.lo = j.at("lo").get<double>();
    c.hi = j.at("hi").get<double>();
    c.max = j.at("max").get<double>();
    c.argmax = j.at("argmax").get<double>();
    c.paper_value = j.at("paper_value").get<double>();
    c.abs_diff = j.at("abs_diff").get<double>();
    if (j.contains("lemma_consistent")) {
        c.lemma_consistent = j.at("lemma_consistent").get<bool>();
    }
    return c;
}

Json to_json(const VerificationReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        cases.push_back(to_json(c));
    }
    Json j{
        {"bound_name", std::string(to_string(r.bound_name))},
        {"search_max", r.search_max},
        {"argmax", to_json(r.argmax)},
        {"sharp_value", r.sharp_value},
        {"margin", r.margin},
        {"grid",
         Json{
             {"p1_steps", r.grid.p1_steps},
             {"p2_radial", r.grid.p2_radial},
             {"p2_angular", r.grid.p2_angular},
             {"refine_rounds", r.grid.refine_rounds},
             {"zoom", r.grid.zoom},
             {"random_probes", r.grid.random_probes},
         }},
        {"seed", r.seed},
        {"refinement_trace", r.refinement_trace},
        {"cases", std::move(cases)},
    };
    if (r.runtime_ms) {
        j["runtime_ms"] = *r.runtime_ms;
    }
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.bound_name = parse_class_tag(j.at("bound_name").get<std::string>());
    r.search_max = j.at("search_max").get<double>();
    r.argmax = disk_params_from_json(j.at("argmax"));
    r.sharp_value = j.at("sharp_value").get<double>();
    r.margin = j.at("margin").get<double>();
    const Json& g = j.at("grid");
    r.grid.p1_steps = g.at("p1_steps").get<int>();
    r.grid.p2_radial = g.at("p2_radial").get<int>();
    r.grid.p2_angular = g.at("p2_angular").get<int>();
    r.grid.refine_rounds = g.at("refine_rounds").get<int>();
    r.grid.zoom = g.at("zoom").get<int>();
    r.grid.random_probes = g.at("random_probes").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.refinement_trace = j.at("refinement_trace").get<std::vector<double>>();
    for (const auto& c : j.at("cases")) {
        r.cases.push_back(case_result_from_json(c));
    }
    if (j.contains("runtime_ms")) {
        r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    }
    return r;
}

Json to_json(const CertificationRecord& c) {
    std::vector<Json> coeffs;
    for (const Complex a : c.extremal.coeffs()) {
        coeffs.push_back(to_json(a));
    }
    return Json{
        {"class", std::string(to_string(c.tag))},
        {"theta", c.theta},
        {"sharp_value", c.sharp},
        {"pipeline_value", to_json(c.pipeline_value)},
        {"closed_form_value", to_json(c.closed_form_value)},
        {"pipeline_error", c.pipeline_error},
        {"closed_form_error", c.closed_form_error},
        {"tolerance", c.tolerance},
        {"order", c.extremal.order()},
        {"coefficients", coeffs},
    };
}

Json to_json(const YResult& y) {
    return Json{{"value", y.value}, {"branch", std::string(to_string(y.branch))}};
}

Json functionals_json(const CoeffTriple& t) {
    const CoeffTriple inv = inverse_coeffs(t);
    const GammaTriple gamma = log_coeffs(t);
    const GammaTriple big_gamma = inv_log_coeffs(t);
    const Complex h = h21_inv_log(t);
    return Json{
        {"a", Json{{"a2", to_json(t.a2)}, {"a3", to_json(t.a3)}, {"a4", to_json(t.a4)}}},
        {"inverse", Json{{"A2", to_json(inv.a2)}, {"A3", to_json(inv.a3)}, {"A4", to_json(inv.a4)}}},
        {"gamma", Json{{"g1", to_json(gamma.g1)}, {"g2", to_json(gamma.g2)}, {"g3", to_json(gamma.g3)}}},
        {"Gamma", Json{{"G1", to_json(big_gamma.g1)}, {"G2", to_json(big_gamma.g2)}, {"G3", to_json(big_gamma.g3)}}},
        {"h21_inv_log", to_json(h)},
        {"abs_h21_inv_log", std::abs(h)},
    };
}

namespace {

void write_json(std::ostringstream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out << ",\n";
            }
            first = false;
            out << inner << Json(key).dump() << ": ";
            write_json(out, value, indent + 1);
        }
        out << "\n" << pad << "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << "[\n";
        bool first = true;
        for (const auto& value : j) {
            if (!first) {
                out << ",\n";
            }
            first = false;
            out << inner;
            write_json(out, value, indent + 1);
        }
        out << "\n" << pad << "]";
        return;
    }
    case Json::value_t::number_float:
        out << format_double(j.get<double>());
        return;
    default:
        out << j.dump();
        return;
    }
}

} // namespace

std::string dump_json(const Json& j) {
    std::ostringstream out;
    write_json(out, j, 0);
    out << "\n";
    return out.str();
}

std::string cases_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "class,case,lo,hi,max,argmax,paper_value,abs_diff,lemma_consistent\n";
    for (const auto& c : r.cases) {
        out << to_string(r.bound_name) << ',' << c.name << ',' << format_double(c.lo) << ','
            << format_double(c.hi) << ',' << format_double(c.max) << ',' << format_double(c.argmax) << ','
            << format_double(c.paper_value) << ',' << format_double(c.abs_diff) << ','
            << (c.lemma_consistent ? (*c.lemma_consistent ? "true" : "false") : "") << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& s) {
    std::ostringstream out;
    out << "index,p1_re,p1_im,p2_re,p2_im,p3_re,p3_im,a2_re,a2_im,a3_re,a3_im,a4_re,a4_im,h_re,h_im,abs_h\n";
    for (const auto& rec : s.records) {
        const Complex values[] = {rec.params.p1(), rec.params.p2(), rec.params.p3(),
                                  rec.coeffs.a2,   rec.coeffs.a3,   rec.coeffs.a4, rec.h};
        out << rec.index;
        for (const Complex z : values) {
            out << ',' << format_double(z.real()) << ',' << format_double(z.imag());
        }
        out << ',' << format_double(rec.abs_h) << '\n';
    }
    return out.str();
}

} // namespace loghankel
