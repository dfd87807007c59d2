#include "loghankel/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace loghankel;

namespace {

VerificationReport sample_report() {
    VerificationReport r;
    r.bound_name = ClassTag::starlike;
    r.search_max = 1.0833333333333333;
    r.argmax = DiskParams(1.0, Complex(0.1, -0.2), Complex(0.0, 1.0));
    r.sharp_value = 13.0 / 12.0;
    r.margin = r.sharp_value - r.search_max;
    r.grid.p1_steps = 400;
    r.seed = 18446744073709551615ull;
    r.refinement_trace = {1.0, 1.08, 1.0833333333333333, 1.0 / 3.0};
    CaseResult c;
    c.name = "case3d_lower";
    c.lo = 0.0;
    c.hi = 0.1 + 0.2;
    c.max = 0.30477;
    c.argmax = 0.2;
    c.paper_value = 0.304775;
    c.abs_diff = 5e-6;
    c.lemma_consistent = true;
    r.cases.push_back(c);
    c.name = "case1_p1_eq_1";
    c.lemma_consistent.reset();
    r.cases.push_back(c);
    r.runtime_ms = 1234;
    return r;
}

void expect_same(const VerificationReport& a, const VerificationReport& b) {
    EXPECT_EQ(a.bound_name, b.bound_name);
    EXPECT_EQ(a.search_max, b.search_max);
    EXPECT_EQ(a.argmax.p1(), b.argmax.p1());
    EXPECT_EQ(a.argmax.p2(), b.argmax.p2());
    EXPECT_EQ(a.argmax.p3(), b.argmax.p3());
    EXPECT_EQ(a.sharp_value, b.sharp_value);
    EXPECT_EQ(a.margin, b.margin);
    EXPECT_EQ(a.grid.p1_steps, b.grid.p1_steps);
    EXPECT_EQ(a.grid.p2_radial, b.grid.p2_radial);
    EXPECT_EQ(a.grid.p2_angular, b.grid.p2_angular);
    EXPECT_EQ(a.grid.random_probes, b.grid.random_probes);
    EXPECT_EQ(a.seed, b.seed);
    EXPECT_EQ(a.refinement_trace, b.refinement_trace);
    ASSERT_EQ(a.cases.size(), b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        EXPECT_EQ(a.cases[i].name, b.cases[i].name);
        EXPECT_EQ(a.cases[i].hi, b.cases[i].hi);
        EXPECT_EQ(a.cases[i].max, b.cases[i].max);
        EXPECT_EQ(a.cases[i].lemma_consistent, b.cases[i].lemma_consistent);
    }
    EXPECT_EQ(a.runtime_ms, b.runtime_ms);
}

} // namespace

TEST(FormatDouble, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(-2.5e-10), "-2.5000000000000002e-10");
    EXPECT_EQ(std::stod(format_double(1.0 / 33.0)), 1.0 / 33.0);
}

TEST(Json, ComplexShape) {
    const Json j = to_json(Complex(1.5, -2.0));
    EXPECT_EQ(dump_json(j), "{\n  \"re\": 1.5,\n  \"im\": -2\n}\n");
    EXPECT_EQ(complex_from_json(j), Complex(1.5, -2.0));
}

TEST(Json, ReportRoundTrip) {
    const VerificationReport r = sample_report();
    const std::string text = dump_json(to_json(r));
    const VerificationReport back = report_from_json(Json::parse(text));
    expect_same(r, back);
    // Serializing again reproduces the text exactly.
    EXPECT_EQ(dump_json(to_json(back)), text);
}

TEST(Json, ReportWithoutRuntime) {
    VerificationReport r = sample_report();
    r.runtime_ms.reset();
    const Json j = to_json(r);
    EXPECT_FALSE(j.contains("runtime_ms"));
    expect_same(r, report_from_json(Json::parse(dump_json(j))));
}

TEST(Json, KeyOrder) {
    const Json j = to_json(sample_report());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    const std::vector<std::string> want{"bound_name", "search_max", "argmax",           "sharp_value", "margin",
                                        "grid",       "seed",       "refinement_trace", "cases",       "runtime_ms"};
    EXPECT_EQ(keys, want);
}

TEST(Json, FunctionalsKoebe) {
    const Json j = functionals_json({2.0, 3.0, 4.0});
    EXPECT_EQ(j.at("inverse").at("A2").at("re").get<double>(), -2.0);
    EXPECT_EQ(j.at("inverse").at("A4").at("re").get<double>(), -14.0);
    EXPECT_NEAR(j.at("abs_h21_inv_log").get<double>(), 13.0 / 12.0, 1e-15);
    EXPECT_NEAR(j.at("gamma").at("g3").at("re").get<double>(), 1.0 / 3.0, 1e-15);
}

TEST(Csv, Cases) {
    const std::string csv = cases_csv(sample_report());
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "class,case,lo,hi,max,argmax,paper_value,abs_diff,lemma_consistent");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("starlike,case3d_lower,0,0.30000000000000004,", 0), 0u) << line;
    EXPECT_EQ(line.substr(line.size() - 5), ",true");
    std::getline(in, line);
    EXPECT_EQ(line.back(), ',');
    EXPECT_FALSE(std::getline(in, line));
}

TEST(Csv, Sweep) {
    const SweepResult s = sweep(ClassTag::convex, 3, 4);
    const std::string csv = sweep_csv(s);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "index,p1_re,p1_im,p2_re,p2_im,p3_re,p3_im,a2_re,a2_im,a3_re,a3_im,a4_re,a4_im,h_re,h_im,abs_h");
    int rows = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 15);
        EXPECT_EQ(line.rfind(std::to_string(rows) + ",", 0), 0u);
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}
