#pragma once

#include "lemnis/criterion.hpp"
#include "lemnis/identities.hpp"
#include "lemnis/thresholds.hpp"
#include "lemnis/verifier.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lemnis {

using json = nlohmann::ordered_json;

/// Non-finite doubles are written as null and read back as NaN.
json number(double x);
double read_number(const json& j);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json params_to_json(const std::map<std::string, Complex>& params);

namespace criterion {
void to_json(json& j, const CertReport& r);
void from_json(const json& j, CertReport& r);
}

namespace verifier {
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);
}

namespace thresholds {
void to_json(json& j, const ThresholdResult& r);
void from_json(const json& j, ThresholdResult& r);
void to_json(json& j, const ConstantCheck& r);
void from_json(const json& j, ConstantCheck& r);
}

namespace identities {
void to_json(json& j, const SweepResult& r);
void from_json(const json& j, SweepResult& r);
}

/// Record of one CLI invocation.
struct RunManifest
{
  std::string command;
  json inputs = json::object();
  std::vector<std::string> outputs;
  std::string library_version;
  long long wall_time_ms = 0;
};

void to_json(json& j, const RunManifest& m);
void from_json(const json& j, RunManifest& m);

/// Library version string.
const char* library_version();

/// "%.17g" formatting used for CSV cells.
std::string format_g17(double x);

/// Writes `text` to `path`, throwing lemnis::error on failure.
void write_text_file(const std::string& path, const std::string& text);

/// CSV with header c,nu1 (empty nu1 cell for failed rows).
std::string table_csv(const std::vector<thresholds::TableRow>& rows);

/// CSV with header theta,r,lemniscate_value,re_w,im_w.
std::string samples_csv(const std::vector<verifier::Sample>& samples);

/// SVG of the sampled image points w = z f'/f on the outermost circle
/// together with the boundary |w^2 - 1| = c of the lemniscate domain.
std::string image_svg(const std::vector<verifier::Sample>& samples, double c);

/// SVG line plot of a sampled curve with a horizontal reference line at y_ref.
std::string curve_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                      const std::string& title, double y_ref);

} // namespace lemnis
