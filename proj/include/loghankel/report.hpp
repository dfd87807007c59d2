#pragma once

#include "loghankel/functionals.hpp"
#include "loghankel/verifier.hpp"
#include "loghankel/ymax.hpp"

#include <json.hpp>

#include <string>

namespace loghankel {

using Json = nlohmann::ordered_json;

// Complex numbers are written as {"re": ..., "im": ...}.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const DiskParams& p);
DiskParams disk_params_from_json(const Json& j);

Json to_json(const CaseResult& c);
CaseResult case_result_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json to_json(const CertificationRecord& c);
Json to_json(const YResult& y);

/// Triples of the functionals command for one (a2, a3, a4).
Json functionals_json(const CoeffTriple& t);

/// Serializes with insertion key order, two-space indentation and every
/// floating-point number printed with 17 significant digits.
std::string dump_json(const Json& j);

/// Header plus one row per case.
std::string cases_csv(const VerificationReport& r);

/// Header plus one row per sample.
std::string sweep_csv(const SweepResult& s);

/// Prints a double with 17 significant digits.
std::string format_double(double v);

} // namespace loghankel
