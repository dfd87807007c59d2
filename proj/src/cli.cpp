#include "loghankel/cli.hpp"

#include "loghankel/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace loghankel {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { json, csv };

// Parsed command line; fields a subcommand does not use keep their defaults.
struct RunConfig {
    std::string class_name = "convex";
    std::string resolution;
    std::uint64_t seed = 0;
    int order = kDefaultOrder;
    std::string output_path;
    std::string format = "json";
    bool timing = false;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    bool oracle = false;
    std::string coeffs;
    std::size_t count = 10000;
};

// "P1xRADIALxANGULAR", e.g. 200x128x256.
GridSpec parse_resolution(const std::string& text) {
    GridSpec grid;
    if (text.empty()) {
        return grid;
    }
    char x1 = 0;
    char x2 = 0;
    std::istringstream in(text);
    if (!(in >> grid.p1_steps >> x1 >> grid.p2_radial >> x2 >> grid.p2_angular) || x1 != 'x' || x2 != 'x' ||
        in.peek() != std::char_traits<char>::eof()) {
        throw DomainError("resolution must look like 200x128x256, got '" + text + "'");
    }
    return grid;
}

// Real "2.5" or complex "re:im".
Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re)) {
        throw DomainError("not a number: '" + text + "'");
    }
    if (in.peek() == ':') {
        in.get();
        if (!(in >> im)) {
            throw DomainError("not a complex number: '" + text + "'");
        }
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw DomainError("trailing characters in '" + text + "'");
    }
    return {re, im};
}

CoeffTriple parse_triple(const std::string& text) {
    std::vector<Complex> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        values.push_back(parse_complex(item));
    }
    if (values.size() != 3) {
        throw DomainError("--coeffs expects three values a2,a3,a4");
    }
    return CoeffTriple{values[0], values[1], values[2]};
}

// Writes to the --output file when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file '" + cfg.output_path + "'");
    }
    file << text;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ClassTag tag = parse_class_tag(cfg.class_name);
    if (tag == ClassTag::generic) {
        throw DomainError("verify needs --class convex or starlike");
    }
    VerificationReport report = global_search(tag, parse_resolution(cfg.resolution), cfg.seed);
    report.cases = case_analysis(tag);
    if (!cfg.timing) {
        report.runtime_ms.reset();
    }

    bool certified = true;
    Json certification;
    try {
        certification = to_json(certify_extremal(tag, cfg.order));
    } catch (const CertificationError& e) {
        certified = false;
        err << "certification failed: " << e.what() << "\n";
    }

    if (cfg.format == "csv") {
        emit(cfg, out, cases_csv(report));
    } else {
        Json j = to_json(report);
        j["certified"] = certified;
        if (certified) {
            j["certification"] = std::move(certification);
        }
        emit(cfg, out, dump_json(j));
    }

    if (report.margin < -1e-7) {
        err << "search exceeded the sharp bound: margin " << format_double(report.margin) << "\n";
        return kExitFailure;
    }
    return certified ? 0 : kExitFailure;
}

int cmd_ymax(const RunConfig& cfg, std::ostream& out) {
    const YInput y{cfg.a, cfg.b, cfg.c};
    const YResult closed = y_closed(y);
    Json j{{"A", y.A}, {"B", y.B}, {"C", y.C}, {"value", closed.value}, {"branch", std::string(to_string(closed.branch))}};
    if (cfg.oracle) {
        const OracleResult oracle = y_oracle(y);
        j["oracle_value"] = oracle.value;
        j["oracle_argmax"] = to_json(oracle.argmax);
        j["abs_diff"] = std::abs(oracle.value - closed.value);
    }
    emit(cfg, out, dump_json(j));
    return 0;
}

int cmd_hankel(const RunConfig& cfg, std::ostream& out) {
    emit(cfg, out, dump_json(functionals_json(parse_triple(cfg.coeffs))));
    return 0;
}

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
    const ClassTag tag = parse_class_tag(cfg.class_name);
    if (cfg.order < 7) {
        throw DomainError("--order must be at least 7");
    }
    emit(cfg, out, dump_json(to_json(certify_extremal(tag, cfg.order))));
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ClassTag tag = parse_class_tag(cfg.class_name);
    const SweepResult result = sweep(tag, cfg.count, cfg.seed);
    emit(cfg, out, sweep_csv(result));
    if (result.violations > 0) {
        err << result.violations << " samples exceed the sharp bound " << format_double(result.sharp) << "\n";
        return kExitFailure;
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Second Hankel determinant of logarithmic inverse coefficients"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_class = [&cfg](CLI::App* sub) {
        sub->add_option("--class", cfg.class_name, "Function class")
            ->check(CLI::IsMember({"convex", "starlike"}))
            ->required();
    };
    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output_path, "Write the result to this file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "Search for the maximum of |H| and replicate the proof");
    add_class(verify);
    verify->add_option("--resolution", cfg.resolution, "Grid steps P1xRADIALxANGULAR (min 200x128x256)");
    verify->add_option("--seed", cfg.seed, "Seed of the random probes");
    verify->add_option("--order", cfg.order, "Truncation order of the extremal series")
        ->check(CLI::Range(7, 64));
    verify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--timing", cfg.timing, "Include runtime_ms in the report");
    add_output(verify);

    CLI::App* ymax = app.add_subcommand("ymax", "Evaluate Y(A, B, C) in closed form");
    ymax->add_option("--a", cfg.a, "A")->required();
    ymax->add_option("--b", cfg.b, "B")->required();
    ymax->add_option("--c", cfg.c, "C")->required();
    ymax->add_flag("--oracle", cfg.oracle, "Compare against the brute-force maximum");
    add_output(ymax);

    CLI::App* hankel_cmd = app.add_subcommand("hankel", "Coefficient functionals of a2, a3, a4");
    hankel_cmd->add_option("--coeffs", cfg.coeffs, "a2,a3,a4 (complex values as re:im)")->required();
    add_output(hankel_cmd);

    CLI::App* extremal = app.add_subcommand("extremal", "Extremal function and its certified H value");
    add_class(extremal);
    extremal->add_option("--order", cfg.order, "Truncation order (>= 7)");
    add_output(extremal);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Random class members as CSV");
    add_class(sweep_cmd);
    sweep_cmd->add_option("--count", cfg.count, "Number of samples")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", cfg.seed, "Random seed");
    add_output(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(cfg, out, err);
        }
        if (ymax->parsed()) {
            return cmd_ymax(cfg, out);
        }
        if (hankel_cmd->parsed()) {
            return cmd_hankel(cfg, out);
        }
        if (extremal->parsed()) {
            return cmd_extremal(cfg, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(cfg, out, err);
        }
    } catch (const CertificationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace loghankel
